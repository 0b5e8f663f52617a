import type { AliceView, ChatMessage, DictatorView } from "./types.js";

// Rendering is a pure function of the message list: no DOM access, no
// clock, no randomness. main.ts assigns the returned HTML to innerHTML.

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function shortHex(hex: string, keep = 12): string {
  return hex.length <= keep * 2 ? hex : `${hex.slice(0, keep)}…${hex.slice(-keep)}`;
}

/** The ciphertext bubble: rendered byte-identically in both panes. */
export function renderCipherBubble(message: ChatMessage): string {
  if (message.ciphertext === null) {
    return `<div class="bubble cipher failed">encryption failed: ${escapeHtml(
      message.sendError ?? "unknown error",
    )}</div>`;
  }
  const { c0, c1 } = message.ciphertext;
  return (
    `<div class="bubble cipher" title="c0=${escapeHtml(c0)}">` +
    `<span class="label">ciphertext</span> ` +
    `<code>c1 ${escapeHtml(shortHex(c1))}</code> ` +
    `<code>c0 ${escapeHtml(shortHex(c0, 8))}</code>` +
    `</div>`
  );
}

function renderDictatorView(view: DictatorView | null): string {
  if (view === null) {
    return `<div class="view pending">…</div>`;
  }
  if (view.kind === "error") {
    return `<div class="view failed">${escapeHtml(view.message)}</div>`;
  }
  const text = view.m0Text !== null ? view.m0Text : `integer ${view.m0}`;
  return `<div class="view cover">${escapeHtml(text)}</div>`;
}

function renderAliceView(view: AliceView | null): string {
  if (view === null) {
    return `<div class="view pending">…</div>`;
  }
  if (view.kind === "error") {
    return `<div class="view failed">${escapeHtml(view.message)}</div>`;
  }
  if (view.kind === "not-found") {
    return (
      `<div class="view not-found">no covert value within bound ` +
      `(${escapeHtml(view.message)})</div>`
    );
  }
  const schema = view.schema;
  if (schema === null) {
    return `<div class="view covert">cm ${view.cm}</div>`;
  }
  const flags = schema.flags.map((f) => (f ? "1" : "0")).join("");
  return (
    `<div class="view covert">cm ${view.cm} · action ${schema.action} · ` +
    `time ${schema.time_minutes} · location ${schema.location} · ` +
    `flags ${flags}</div>`
  );
}

function renderEntry(message: ChatMessage, index: number, pane: "dictator" | "alice"): string {
  const view =
    pane === "dictator"
      ? renderDictatorView(message.dictatorView)
      : renderAliceView(message.aliceView);
  return (
    `<article class="entry" data-index="${index}">` +
    `<time>${escapeHtml(message.sentAt)}</time>` +
    renderCipherBubble(message) +
    view +
    `</article>`
  );
}

function renderPane(
  messages: readonly ChatMessage[],
  pane: "dictator" | "alice",
  heading: string,
): string {
  const entries = messages.map((m, i) => renderEntry(m, i, pane)).join("");
  const body = entries === "" ? `<p class="empty">no messages yet</p>` : entries;
  return `<section class="pane ${pane}-pane"><h2>${heading}</h2>${body}</section>`;
}

export function renderTranscript(messages: readonly ChatMessage[]): string {
  return (
    `<div class="transcript">` +
    renderPane(messages, "dictator", "Dictator sees") +
    renderPane(messages, "alice", "Alice sees") +
    `</div>`
  );
}
