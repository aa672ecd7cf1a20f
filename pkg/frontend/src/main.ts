/** Browser entry point: binds the session controller to the page. */

import { KspaceClient } from "./api.js";
import { SessionController, type ConsoleState } from "./app.js";
import {
  phraseExhausted,
  phraseHistoryEntry,
  phraseQuery,
  phraseWhatIf,
  statsStrip,
} from "./view.js";

const el = (id: string) => document.getElementById(id) as HTMLElement;

function render(state: ConsoleState): void {
  const buttons = ["yes-btn", "no-btn", "whatif-btn"].map(
    (id) => el(id) as HTMLButtonElement,
  );
  buttons.forEach((b) => (b.disabled = state.phase !== "asking"));

  if (state.phase === "asking" && state.pending) {
    el("question").textContent = phraseQuery(state.pending);
  } else if (state.phase === "exhausted" && state.stats) {
    el("question").textContent = phraseExhausted(state.stats);
  } else if (state.phase === "finished") {
    el("question").textContent = "Session closed.";
  }

  el("whatif-result").textContent = state.whatIf ? phraseWhatIf(state.whatIf) : "";
  el("error").textContent = state.error ?? "";

  if (state.stats) {
    const strip = statsStrip(state.stats);
    el("stat-states").textContent = strip.states;
    el("stat-rows").textContent = strip.rows;
    el("stat-base").textContent = strip.base;
  }

  const history = el("history");
  history.innerHTML = "";
  for (const entry of [...state.history].reverse()) {
    const li = document.createElement("li");
    li.textContent = phraseHistoryEntry(entry);
    li.className = entry.accepted ? "accepted" : "rejected";
    history.appendChild(li);
  }
}

async function start(): Promise<void> {
  const client = new KspaceClient("");
  const form = el("setup-form") as HTMLFormElement;
  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    const items = (el("domain-input") as HTMLInputElement).value
      .split(/[,\s]+/)
      .filter(Boolean);
    const { id } = await client.createSession({ domain: items, mode: "human" });
    window.location.hash = id;
    await run(client, id);
  });

  const fromHash = window.location.hash.slice(1);
  if (fromHash) await run(client, fromHash);
}

async function run(client: KspaceClient, sessionId: string): Promise<void> {
  el("setup").hidden = true;
  el("console").hidden = false;
  const controller = new SessionController(client, sessionId, render);
  el("yes-btn").addEventListener("click", () => controller.answer(true));
  el("no-btn").addEventListener("click", () => controller.answer(false));
  el("whatif-btn").addEventListener("click", () => controller.previewWhatIf());
  el("finish-btn").addEventListener("click", () => controller.finish());
  await controller.refresh();
}

start();
