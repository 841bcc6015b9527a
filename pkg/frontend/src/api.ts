// Typed client for the local analysis service. The UI computes nothing
// itself: every rating, count and suggestion shown on screen comes back
// from these calls verbatim.

export type Variant = "full" | "black" | "white";
export type Mode = "engine-secret" | "engine-adaptive" | "external-assistant";
export type Status = "in-progress" | "solved" | "contradicted";

export interface FullRating {
  black: number;
  white: number;
}

export type Rating = FullRating | number;

export interface HistoryRow {
  guess: number[];
  rating: Rating;
  remaining: number;
}

export interface GameState {
  id: string;
  n: number;
  c: number;
  variant: Variant;
  mode: Mode;
  status: Status;
  turn: number;
  remaining: number;
  history: HistoryRow[];
  secret?: number[];
}

export interface GuessResponse {
  rating: Rating;
  state: GameState;
}

export interface QueryDoc {
  guess: number[];
  rating: Rating;
}

export interface InstanceDoc {
  n: number;
  c: number;
  variant: Variant;
  queries: QueryDoc[];
}

export interface Suggestion {
  guess: number[];
  worstCase: number;
}

export interface Shape {
  n: number;
  c: number;
  variant: Variant;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class Client {
  constructor(
    public readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async createGame(shape: Shape, mode: Mode, seed?: number): Promise<GameState> {
    const body: Record<string, unknown> = { shape, mode };
    if (seed !== undefined) body.seed = seed;
    return this.request<GameState>("POST", "/games", body);
  }

  async submitGuess(id: string, guess: number[], rating?: Rating): Promise<GuessResponse> {
    const body: Record<string, unknown> = { guess };
    if (rating !== undefined) body.rating = rating;
    return this.request<GuessResponse>("POST", `/games/${id}/guesses`, body);
  }

  async getState(id: string): Promise<GameState> {
    return this.request<GameState>("GET", `/games/${id}`);
  }

  async suggest(instance: InstanceDoc): Promise<Suggestion> {
    return this.request<Suggestion>("POST", "/analyze/suggest", { instance });
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const text = await response.text();
    let payload: unknown = null;
    try {
      payload = text ? JSON.parse(text) : null;
    } catch {
      payload = null;
    }
    if (!response.ok) {
      const message =
        payload && typeof payload === "object" && "error" in payload
          ? String((payload as { error: unknown }).error)
          : `service replied ${response.status}`;
      throw new ApiError(response.status, message);
    }
    return payload as T;
  }
}
