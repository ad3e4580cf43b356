// DOM bootstrap: the only module that touches the document. One request in
// flight at a time; input stays disabled until the turn resolves.

import { sendTurn } from "./api.js";
import { sessionConfig } from "./config.js";
import { renderEntry } from "./render.js";
import { quickRepliesVisible, Transcript } from "./transcript.js";

const config = sessionConfig(window.location.search, window.location.origin);
const transcript = new Transcript();

const messages = document.getElementById("messages") as HTMLDivElement;
const input = document.getElementById("input") as HTMLInputElement;
const sendButton = document.getElementById("send") as HTMLButtonElement;
const banner = document.getElementById("banner") as HTMLDivElement;
const quickBar = document.getElementById("quick") as HTMLDivElement;
const yesButton = document.getElementById("quick-yes") as HTMLButtonElement;
const noButton = document.getElementById("quick-no") as HTMLButtonElement;
const hint = document.getElementById("hint") as HTMLSpanElement;

hint.textContent = `say "${config.wakeWord}" to wake the assistant`;

let inFlight = false;
let lastFailedMessage: string | null = null;

function redraw(): void {
  messages.innerHTML = transcript.entries.map(renderEntry).join("");
  messages.scrollTop = messages.scrollHeight;
  quickBar.style.display = quickRepliesVisible(transcript) && !inFlight ? "flex" : "none";
}

function setBusy(busy: boolean): void {
  inFlight = busy;
  input.disabled = busy;
  sendButton.disabled = busy;
}

function showRetryBanner(message: string): void {
  lastFailedMessage = message;
  banner.style.display = "block";
}

function hideRetryBanner(): void {
  lastFailedMessage = null;
  banner.style.display = "none";
}

async function submit(text: string): Promise<void> {
  const message = text.trim();
  if (message === "" || inFlight) return;
  hideRetryBanner();
  input.classList.remove("invalid");
  transcript.addUserTurn(message);
  redraw();
  setBusy(true);
  const result = await sendTurn(config.serverUrl, config.senderId, message);
  setBusy(false);
  if (result.kind === "ok") {
    transcript.addBotResponses(result.responses, result.elapsedMs);
    input.value = "";
  } else if (result.kind === "rejected") {
    transcript.popPendingUserTurn(); // rejected turns leave the transcript unchanged
    input.classList.add("invalid");
  } else {
    transcript.popPendingUserTurn();
    showRetryBanner(message);
  }
  redraw();
  input.focus();
}

sendButton.addEventListener("click", () => void submit(input.value));
input.addEventListener("keydown", (event) => {
  if (event.key === "Enter") {
    event.preventDefault();
    void submit(input.value);
  }
});
yesButton.addEventListener("click", () => void submit("yes"));
noButton.addEventListener("click", () => void submit("no"));
banner.addEventListener("click", () => {
  const failed = lastFailedMessage;
  hideRetryBanner();
  if (failed !== null) {
    void submit(failed);
  }
});

redraw();
input.focus();
