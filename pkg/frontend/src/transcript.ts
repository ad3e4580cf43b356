// Pure transcript state: user and bot entries in strictly alternating turn
// groups (one user entry, then that turn's bot entries, and so on).

import { BotEntry, BotResponsePayload, TranscriptEntry, UserEntry } from "./types.js";

export class Transcript {
  private readonly entries_: TranscriptEntry[] = [];

  get entries(): readonly TranscriptEntry[] {
    return this.entries_;
  }

  addUserTurn(text: string): UserEntry {
    const entry: UserEntry = { who: "user", text };
    this.entries_.push(entry);
    return entry;
  }

  addBotResponses(responses: BotResponsePayload[], elapsedMs: number): BotEntry[] {
    const added = responses.map<BotEntry>((response) => ({
      who: "bot",
      text: response.text,
      media: response.media,
      elapsedMs,
    }));
    this.entries_.push(...added);
    return added;
  }

  /** Texts in order, e.g. to compare against a server transcript. */
  botTexts(): string[] {
    return this.entries_.filter((e): e is BotEntry => e.who === "bot").map((e) => e.text);
  }

  lastBotEntry(): BotEntry | undefined {
    for (let i = this.entries_.length - 1; i >= 0; i--) {
      const entry = this.entries_[i];
      if (entry.who === "bot") return entry;
      if (entry.who === "user") return undefined; // user turn pending a reply
    }
    return undefined;
  }

  /** Drop a trailing user entry whose turn failed; no-op otherwise. */
  popPendingUserTurn(): void {
    const last = this.entries_[this.entries_.length - 1];
    if (last !== undefined && last.who === "user") {
      this.entries_.pop();
    }
  }

  /** Turn groups alternate user/bot; bot entries never precede any user. */
  isAlternating(): boolean {
    let previous: "user" | "bot" | null = null;
    for (const entry of this.entries_) {
      if (entry.who === "user" && previous === "user") return false;
      if (entry.who === "bot" && previous === null) return false;
      previous = entry.who;
    }
    return true;
  }
}

// The shipped pack phrases every confirmation question with one of these;
// "would you like" covers the news continuation prompt.
const CONFIRMATION_PATTERNS = [/is that right\?$/i, /would you like .*\?$/i];

export function isConfirmation(text: string): boolean {
  const trimmed = text.trim();
  return CONFIRMATION_PATTERNS.some((pattern) => pattern.test(trimmed));
}

/** Quick-reply buttons show only while the last bot message asks to confirm. */
export function quickRepliesVisible(transcript: Transcript): boolean {
  const last = transcript.lastBotEntry();
  return last !== undefined && isConfirmation(last.text);
}
