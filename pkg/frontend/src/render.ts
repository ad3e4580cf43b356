// HTML builders for transcript entries. Pure string-in/string-out so tests
// can check them without a DOM; main.ts injects the results.

import { BotEntry, TranscriptEntry } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function mediaCard(entry: BotEntry): string {
  if (!entry.media) return "";
  if (entry.media.kind === "track") {
    return (
      `<div class="card track-card" data-ref="${escapeHtml(entry.media.ref)}">` +
      `<span class="card-icon">&#9835;</span>` +
      `<span class="card-title">Now playing</span>` +
      `<span class="card-ref">${escapeHtml(entry.media.ref)}</span></div>`
    );
  }
  return (
    `<div class="card route-card" data-ref="${escapeHtml(entry.media.ref)}">` +
    `<span class="card-icon">&#10148;</span>` +
    `<span class="card-title">Route</span>` +
    `<span class="card-ref">${escapeHtml(entry.media.ref)}</span></div>`
  );
}

export function renderEntry(entry: TranscriptEntry): string {
  if (entry.who === "user") {
    return `<div class="msg user">${escapeHtml(entry.text)}</div>`;
  }
  const latency = `<span class="latency">${Math.round(entry.elapsedMs)} ms</span>`;
  return `<div class="msg bot">${escapeHtml(entry.text)}${mediaCard(entry)}${latency}</div>`;
}
