import { ApiClient } from "./api.js";
import { renderTranscript } from "./render.js";
import { ChatSession } from "./state.js";
import type { KeyPair, Role, SchemaFields } from "./types.js";

// Thin DOM layer: reads inputs, delegates to ChatSession, repaints the
// transcript. Everything interesting is in state.ts and render.ts.

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function defaultBaseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return fromQuery ?? "http://127.0.0.1:8008";
}

let session: ChatSession;

function repaint(): void {
  el<HTMLDivElement>("transcript").innerHTML = renderTranscript(session.messages);
}

function refreshKeyPreview(role: Role): void {
  const pair = session.keyFor(role);
  el<HTMLElement>(`${role}-preview`).textContent =
    pair === null ? "no key loaded" : `public ${pair.public}`;
}

function setKeyError(role: Role, message: string): void {
  el<HTMLElement>(`${role}-error`).textContent = message;
}

function wireKeyPanel(role: Role): void {
  const secretInput = el<HTMLInputElement>(`${role}-secret`);
  const publicInput = el<HTMLInputElement>(`${role}-public`);

  el<HTMLButtonElement>(`${role}-generate`).addEventListener("click", async () => {
    setKeyError(role, "");
    try {
      const pair = await session.generateKey(role);
      secretInput.value = pair.secret;
      publicInput.value = pair.public;
    } catch (err) {
      setKeyError(role, String(err));
    }
    refreshKeyPreview(role);
  });

  el<HTMLButtonElement>(`${role}-apply`).addEventListener("click", () => {
    const pair: KeyPair = {
      secret: secretInput.value.trim(),
      public: publicInput.value.trim(),
    };
    const problem = session.setKey(role, pair);
    setKeyError(role, problem ?? "");
    refreshKeyPreview(role);
  });
}

function readSchemaFields(): SchemaFields {
  return {
    action: Number(el<HTMLInputElement>("schema-action").value),
    timeMinutes: Number(el<HTMLInputElement>("schema-time").value),
    location: Number(el<HTMLInputElement>("schema-location").value),
    flags: [
      el<HTMLInputElement>("flag-0").checked,
      el<HTMLInputElement>("flag-1").checked,
      el<HTMLInputElement>("flag-2").checked,
      el<HTMLInputElement>("flag-3").checked,
    ],
  };
}

function wireCompose(): void {
  const bound = el<HTMLInputElement>("bound");
  const boundShown = el<HTMLElement>("bound-value");
  const status = el<HTMLElement>("compose-status");
  bound.addEventListener("input", () => {
    boundShown.textContent = Number(bound.value).toLocaleString();
  });

  el<HTMLButtonElement>("send").addEventListener("click", async () => {
    status.textContent = "sending…";
    const outcome = await session.composeAndSend(
      el<HTMLInputElement>("cover").value,
      readSchemaFields(),
      Number(bound.value),
    );
    status.textContent = outcome.kind === "blocked" ? outcome.reason : "";
    repaint();
  });
}

function boot(): void {
  const baseUrlInput = el<HTMLInputElement>("api-base");
  baseUrlInput.value = defaultBaseUrl();
  const makeSession = () => new ChatSession(new ApiClient(baseUrlInput.value));
  session = makeSession();
  baseUrlInput.addEventListener("change", () => {
    session = makeSession();
    (["dictator", "alice"] as const).forEach(refreshKeyPreview);
    repaint();
  });

  wireKeyPanel("dictator");
  wireKeyPanel("alice");
  wireCompose();
  (["dictator", "alice"] as const).forEach(refreshKeyPreview);
  repaint();
}

document.addEventListener("DOMContentLoaded", boot);
