import {
  ApiError,
  type DecryptAliceResponse,
  type DecryptDictatorResponse,
  type EncryptionApi,
} from "./api.js";
import type {
  AliceView,
  ChatMessage,
  ComposeOutcome,
  DictatorView,
  KeyPair,
  Role,
  SchemaFields,
} from "./types.js";
import { validateKeyPair, validateSchemaFields } from "./validate.js";

/**
 * One browser session playing all three parties.
 *
 * Keys live only in memory here and leave it solely inside the specific
 * decrypt calls. All cryptography happens on the server; this class just
 * sequences the API calls and accumulates the transcript, which the
 * renderer turns into HTML as a pure function of `messages`.
 */
export class ChatSession {
  readonly messages: ChatMessage[] = [];
  private readonly keys: Record<Role, KeyPair | null> = {
    dictator: null,
    alice: null,
  };

  constructor(
    private readonly api: EncryptionApi,
    private readonly now: () => Date = () => new Date(),
  ) {}

  keyFor(role: Role): KeyPair | null {
    return this.keys[role];
  }

  get ready(): boolean {
    return this.keys.dictator !== null && this.keys.alice !== null;
  }

  async generateKey(role: Role, seed?: number): Promise<KeyPair> {
    const pair = await this.api.keygen(role, seed);
    this.keys[role] = pair;
    return pair;
  }

  /** Store a pasted key pair; returns an error message or null. */
  setKey(role: Role, pair: KeyPair): string | null {
    const problem = validateKeyPair(pair);
    if (problem !== null) {
      return problem;
    }
    this.keys[role] = {
      secret: pair.secret.toLowerCase(),
      public: pair.public.toLowerCase(),
    };
    return null;
  }

  /**
   * Encrypt the cover text with the covert command, then fetch both
   * readings and append the result to the transcript.
   *
   * Input problems block before any network call; API failures become
   * failed bubbles in the transcript instead.
   */
  async composeAndSend(
    cover: string,
    schema: SchemaFields,
    bound: number,
  ): Promise<ComposeOutcome> {
    const dictator = this.keys.dictator;
    const alice = this.keys.alice;
    if (dictator === null || alice === null) {
      return { kind: "blocked", reason: "enter or generate both keys first" };
    }
    if (cover.trim() === "") {
      return { kind: "blocked", reason: "cover text must not be empty" };
    }
    const schemaProblem = validateSchemaFields(schema);
    if (schemaProblem !== null) {
      return { kind: "blocked", reason: schemaProblem };
    }
    if (!Number.isInteger(bound) || bound < 1) {
      return { kind: "blocked", reason: "search bound must be a positive integer" };
    }

    const message: ChatMessage = {
      author: "bob",
      sentAt: this.now().toISOString(),
      cover,
      bound,
      ciphertext: null,
      sendError: null,
      dictatorView: null,
      aliceView: null,
    };

    try {
      message.ciphertext = await this.api.encrypt({
        pk: dictator.public,
        t: alice.secret,
        m0_text: cover,
        schema: {
          action: schema.action,
          time_minutes: schema.timeMinutes,
          location: schema.location,
          flags: [...schema.flags],
        },
      });
    } catch (err) {
      message.sendError = describeError(err);
      this.messages.push(message);
      return { kind: "sent", message };
    }

    const ct = message.ciphertext;
    // The two readings are independent; await them independently.
    const [official, covert] = await Promise.allSettled([
      this.api.decryptDictator(dictator.secret, ct),
      this.api.decryptAlice(alice.secret, ct.c1, bound),
    ]);

    message.dictatorView = dictatorViewOf(official);
    message.aliceView = aliceViewOf(covert);
    this.messages.push(message);
    return { kind: "sent", message };
  }
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    return `${err.code}: ${err.message}`;
  }
  return String(err);
}

function dictatorViewOf(
  settled: PromiseSettledResult<DecryptDictatorResponse>,
): DictatorView {
  if (settled.status === "fulfilled") {
    return {
      kind: "recovered",
      m0: settled.value.m0,
      m0Text: settled.value.m0_text,
    };
  }
  return { kind: "error", message: describeError(settled.reason) };
}

function aliceViewOf(settled: PromiseSettledResult<DecryptAliceResponse>): AliceView {
  if (settled.status === "fulfilled") {
    return {
      kind: "recovered",
      cm: settled.value.cm,
      schema: settled.value.schema ?? null,
    };
  }
  const reason = settled.reason;
  if (reason instanceof ApiError && reason.code === "not_found_cm") {
    return { kind: "not-found", message: reason.message };
  }
  return { kind: "error", message: describeError(reason) };
}
