import { SessionConfig } from "./types.js";

const DEFAULT_WAKE_WORD = "coffee";

/** Random sender id, generated once per page load. */
export function generateSenderId(random: () => number = Math.random): string {
  const suffix = Math.floor(random() * 0xffffffff)
    .toString(16)
    .padStart(8, "0");
  return `console-${suffix}`;
}

/**
 * Resolve the session config from the page's query string
 * (`?server=...&wake=...`); the server defaults to the page's own origin.
 */
export function sessionConfig(
  search: string,
  origin: string,
  random: () => number = Math.random,
): SessionConfig {
  const params = new URLSearchParams(search);
  const server = params.get("server") ?? origin;
  return {
    serverUrl: server.replace(/\/+$/, ""),
    senderId: generateSenderId(random),
    wakeWord: params.get("wake") ?? DEFAULT_WAKE_WORD,
  };
}
