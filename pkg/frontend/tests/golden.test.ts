// The scripted music session ("coffee", "play some music", song, "yes")
// replayed against the committed server golden: the UI transcript must equal
// the server's transcript, with the confirmation prompting quick replies and
// the final turn rendering a now-playing card.

import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { sendTurn } from "../src/api.js";
import { renderEntry } from "../src/render.js";
import { quickRepliesVisible, Transcript } from "../src/transcript.js";
import { BotResponsePayload } from "../src/types.js";

interface GoldenTurn {
  request: { sender: string; message: string };
  status: number;
  response: BotResponsePayload[];
}

const goldenPath = fileURLToPath(new URL("./fixtures/golden_music.json", import.meta.url));
const golden: { turns: GoldenTurn[] } = JSON.parse(readFileSync(goldenPath, "utf-8"));

function goldenServer(): (url: string, init: RequestInit) => Promise<Response> {
  let turn = 0;
  return async (_url, init) => {
    const expected = golden.turns[turn];
    const body = JSON.parse(String(init.body));
    expect(body.message).toBe(expected.request.message);
    turn += 1;
    return new Response(JSON.stringify(expected.response), { status: expected.status });
  };
}

describe("golden music session", () => {
  it("renders wake ack, confirmation, and a now-playing card", async () => {
    const server = goldenServer();
    const transcript = new Transcript();
    const quickStates: boolean[] = [];

    for (const turn of golden.turns) {
      transcript.addUserTurn(turn.request.message);
      const result = await sendTurn("http://srv", "console", turn.request.message, server, () => 0);
      expect(result.kind).toBe("ok");
      if (result.kind === "ok") {
        transcript.addBotResponses(result.responses, result.elapsedMs);
      }
      quickStates.push(quickRepliesVisible(transcript));
    }

    // UI transcript equals the server's golden transcript
    const goldenTexts = golden.turns.flatMap((turn) => turn.response.map((r) => r.text));
    expect(transcript.botTexts()).toEqual(goldenTexts);
    expect(transcript.isAlternating()).toBe(true);

    // wake ack came through verbatim
    expect(transcript.botTexts()[0]).toBe("I'm listening. How can I help?");

    // the confirmation turn (third) shows quick replies; the others do not
    expect(quickStates).toEqual([false, false, true, false]);

    // the final turn carries track media rendered as a now-playing card
    const entries = transcript.entries;
    const last = entries[entries.length - 1];
    expect(last.who).toBe("bot");
    if (last.who === "bot") {
      expect(last.media).toEqual({ kind: "track", ref: "trk_001" });
      const html = renderEntry(last);
      expect(html).toContain("track-card");
      expect(html).toContain("Now playing");
      expect(html).toContain("trk_001");
    }
  });

  it("escapes markup when rendering", () => {
    const transcript = new Transcript();
    transcript.addUserTurn("<script>alert(1)</script>");
    const html = renderEntry(transcript.entries[0]);
    expect(html).not.toContain("<script>");
    expect(html).toContain("&lt;script&gt;");
  });
});
