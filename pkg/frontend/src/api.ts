// One POST per turn against the webhook. The caller learns exactly one of:
// the turn's responses, "the input was rejected" (400), or "retry" (network
// failure or server error), which drives the retry banner.

import { BotResponsePayload } from "./types.js";

export const WEBHOOK_PATH = "/webhooks/rest/webhook";

export type TurnResult =
  | { kind: "ok"; responses: BotResponsePayload[]; elapsedMs: number }
  | { kind: "rejected"; status: number }
  | { kind: "unreachable"; reason: string };

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export async function sendTurn(
  serverUrl: string,
  senderId: string,
  message: string,
  fetchFn: FetchLike = fetch,
  now: () => number = () => performance.now(),
): Promise<TurnResult> {
  const started = now();
  let response: Response;
  try {
    response = await fetchFn(serverUrl + WEBHOOK_PATH, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ sender: senderId, message }),
    });
  } catch (error) {
    return { kind: "unreachable", reason: error instanceof Error ? error.message : String(error) };
  }
  if (response.status === 400) {
    return { kind: "rejected", status: 400 };
  }
  if (!response.ok) {
    return { kind: "unreachable", reason: `server returned ${response.status}` };
  }
  let payload: unknown;
  try {
    payload = await response.json();
  } catch {
    return { kind: "unreachable", reason: "response was not JSON" };
  }
  if (!Array.isArray(payload)) {
    return { kind: "unreachable", reason: "response was not an array" };
  }
  return {
    kind: "ok",
    responses: payload as BotResponsePayload[],
    elapsedMs: now() - started,
  };
}
