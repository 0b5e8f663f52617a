import type { CiphertextRecord, KeyPair, Role, SchemaJson } from "./types.js";

export interface EncryptRequest {
  pk: string;
  t: string;
  m0_text: string;
  schema: {
    action: number;
    time_minutes: number;
    location: number;
    flags: boolean[];
  };
}

export interface DecryptDictatorResponse {
  m0: string;
  m0_text: string | null;
}

export interface DecryptAliceResponse {
  cm: number;
  schema?: SchemaJson | null;
}

/** A non-2xx response; `code` is the service's error vocabulary. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

/** What the chat session needs from the backend; ApiClient is the real one. */
export interface EncryptionApi {
  keygen(role: Role, seed?: number): Promise<KeyPair>;
  encrypt(request: EncryptRequest): Promise<CiphertextRecord>;
  decryptDictator(sk0: string, ct: CiphertextRecord): Promise<DecryptDictatorResponse>;
  decryptAlice(t: string, c1: string, bound: number): Promise<DecryptAliceResponse>;
}

export class ApiClient implements EncryptionApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = globalThis.fetch,
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(0, "network", `cannot reach ${this.baseUrl}: ${err}`);
    }
    const doc = await response.json().catch(() => null);
    if (!response.ok) {
      const code = doc?.code ?? "unknown";
      const message = doc?.message ?? `HTTP ${response.status}`;
      throw new ApiError(response.status, code, message);
    }
    return doc as T;
  }

  keygen(role: Role, seed?: number): Promise<KeyPair> {
    const body: Record<string, unknown> = { role, scheme: "ecc" };
    if (seed !== undefined) {
      body.seed = seed;
    }
    return this.post<KeyPair>("/api/keygen", body);
  }

  encrypt(request: EncryptRequest): Promise<CiphertextRecord> {
    return this.post<CiphertextRecord>("/api/encrypt", request);
  }

  decryptDictator(sk0: string, ct: CiphertextRecord): Promise<DecryptDictatorResponse> {
    return this.post<DecryptDictatorResponse>("/api/decrypt-dictator", {
      sk0,
      c0: ct.c0,
      c1: ct.c1,
      scheme: "ecc",
    });
  }

  decryptAlice(t: string, c1: string, bound: number): Promise<DecryptAliceResponse> {
    return this.post<DecryptAliceResponse>("/api/decrypt-alice", {
      t,
      c1,
      bound,
      method: "bsgs",
      decode_schema: true,
    });
  }
}
