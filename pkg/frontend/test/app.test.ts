import { describe, expect, it } from "vitest";

import { ApiError, type NextResponse, type Query, type SessionStats } from "../src/api.js";
import { SessionController } from "../src/app.js";

const stats = (states: string): SessionStats => ({
  states,
  rows: 1,
  base: 5,
  accepted: 0,
});

/** Scripted stand-in for the HTTP client. */
class FakeClient {
  queries: Query[] = [{ premise: ["a"], item: "b" }, { premise: ["a"], item: "c" }];
  answered: Array<{ query: Query; accept: boolean }> = [];
  staleOnce = false;

  async next(_id: string): Promise<NextResponse> {
    const query = this.queries[0];
    if (!query) return { exhausted: true, stats: stats("13") };
    return { query, stats: stats("32") };
  }

  async answer(_id: string, query: Query, accept: boolean) {
    if (this.staleOnce) {
      this.staleOnce = false;
      throw new ApiError(409, "stale");
    }
    this.answered.push({ query, accept });
    this.queries.shift();
    return { stats: stats("24") };
  }

  async whatif(_id: string, _query: Query) {
    return { states_if_accept: "24" };
  }

  async finish(_id: string) {
    return { finished: true };
  }
}

function make() {
  const client = new FakeClient();
  const controller = new SessionController(client as never, "s");
  return { client, controller };
}

describe("session controller", () => {
  it("fetches the pending query and stats", async () => {
    const { controller } = make();
    await controller.refresh();
    expect(controller.state.phase).toBe("asking");
    expect(controller.state.pending).toEqual({ premise: ["a"], item: "b" });
    expect(controller.state.stats?.states).toBe("32");
  });

  it("previews what-if without committing", async () => {
    const { client, controller } = make();
    await controller.refresh();
    await controller.previewWhatIf();
    expect(controller.state.whatIf).toBe("24");
    expect(client.answered).toHaveLength(0);
  });

  it("commits answers, records history, and advances", async () => {
    const { client, controller } = make();
    await controller.refresh();
    await controller.answer(true);
    expect(client.answered).toEqual([
      { query: { premise: ["a"], item: "b" }, accept: true },
    ]);
    expect(controller.state.history).toHaveLength(1);
    expect(controller.state.pending).toEqual({ premise: ["a"], item: "c" });
  });

  it("recovers from a stale-query conflict by refetching", async () => {
    const { client, controller } = make();
    await controller.refresh();
    client.staleOnce = true;
    await controller.answer(false);
    expect(controller.state.error).toBeNull();
    expect(controller.state.history).toHaveLength(0);
    expect(controller.state.pending).toEqual({ premise: ["a"], item: "b" });
  });

  it("reports exhaustion once no queries remain", async () => {
    const { client, controller } = make();
    client.queries = [];
    await controller.refresh();
    expect(controller.state.phase).toBe("exhausted");
    expect(controller.state.stats?.states).toBe("13");
  });
});
