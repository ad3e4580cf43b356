// Wire records exchanged with the webhook, and the transcript model the UI
// renders. The tracker lives server-side; nothing here persists across a
// reload except the sender id for the lifetime of the page.

export interface MediaPayload {
  kind: "track" | "route";
  ref: string;
}

export interface BotResponsePayload {
  recipient_id: string;
  text: string;
  media?: MediaPayload;
}

export interface UserEntry {
  who: "user";
  text: string;
}

export interface BotEntry {
  who: "bot";
  text: string;
  media?: MediaPayload;
  elapsedMs: number;
}

export type TranscriptEntry = UserEntry | BotEntry;

export interface SessionConfig {
  serverUrl: string;
  senderId: string;
  wakeWord: string;
}
