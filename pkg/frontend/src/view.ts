/** Pure view helpers: plain-language phrasing and display models. */

import type { Query, SessionStats } from "./api.js";

export function phraseQuery(query: Query): string {
  const premise = query.premise.join(", ");
  return `If a student fails all of {${premise}}, do they also fail {${query.item}}?`;
}

export interface HistoryEntry {
  query: Query;
  accepted: boolean;
}

export function phraseHistoryEntry(entry: HistoryEntry): string {
  const verdict = entry.accepted ? "yes" : "no";
  return `{${entry.query.premise.join(", ")}} ⇝ {${entry.query.item}} — ${verdict}`;
}

export interface StatsStrip {
  states: string; // decimal string rendered verbatim, never parsed
  rows: string;
  base: string;
}

export function statsStrip(stats: SessionStats): StatsStrip {
  return {
    states: stats.states,
    rows: String(stats.rows),
    base: String(stats.base),
  };
}

export function phraseWhatIf(statesIfAccept: string): string {
  return `Answering yes would leave ${statesIfAccept} states.`;
}

export function phraseExhausted(stats: SessionStats): string {
  return `No more questions. The space has ${stats.states} states built from ${stats.base} base sets.`;
}
