export type Role = "dictator" | "alice";

export interface KeyPair {
  secret: string;
  public: string;
}

/** Covert command fields as the compose form collects them. */
export interface SchemaFields {
  action: number;
  timeMinutes: number;
  location: number;
  flags: [boolean, boolean, boolean, boolean];
}

/** Schema document as the API returns it. */
export interface SchemaJson {
  action: number;
  time_minutes: number;
  location: number;
  flags: boolean[];
  schema: string;
}

export interface CiphertextRecord {
  c0: string;
  c1: string;
}

export type DictatorView =
  | { kind: "recovered"; m0: string; m0Text: string | null }
  | { kind: "error"; message: string };

export type AliceView =
  | { kind: "recovered"; cm: number; schema: SchemaJson | null }
  | { kind: "not-found"; message: string }
  | { kind: "error"; message: string };

/**
 * One transmission in the transcript. `ciphertext` is null only when the
 * encrypt call itself failed (`sendError` then carries the reason), and
 * a "recovered" aliceView exists only after a successful covert
 * decryption round trip.
 */
export interface ChatMessage {
  author: "bob";
  sentAt: string;
  cover: string;
  bound: number;
  ciphertext: CiphertextRecord | null;
  sendError: string | null;
  dictatorView: DictatorView | null;
  aliceView: AliceView | null;
}

export type ComposeOutcome =
  | { kind: "blocked"; reason: string }
  | { kind: "sent"; message: ChatMessage };
