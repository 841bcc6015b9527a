// Pure view-model layer: turns the last service response into what the
// board shows. Rows mirror the service history exactly; nothing is
// recomputed client-side.

import type { GameState, InstanceDoc, Rating, Suggestion } from "./api";

export interface BoardView {
  shape: { n: number; c: number; variant: GameState["variant"]; mode: GameState["mode"] };
  rows: { guess: number[]; rating: Rating; remaining: number }[];
  remaining: number;
  status: GameState["status"];
  banner: string;
  secret: number[] | null;
  suggestion: Suggestion | null;
  error: string | null;
  inputEnabled: boolean;
}

export function ratingKey(rating: Rating): string {
  // Canonical short form used in data attributes: "B,W" or the bare count.
  if (typeof rating === "number") return String(rating);
  return `${rating.black},${rating.white}`;
}

export function bannerText(state: GameState): string {
  if (state.status === "solved") {
    const secret = state.secret ? ` secret ${state.secret.join(",")}` : "";
    return `solved in ${state.turn} guesses:${secret}`;
  }
  if (state.status === "contradicted") {
    return "contradicted: no code fits the ratings entered";
  }
  return `${state.remaining} possible codes`;
}

export function boardFromState(
  state: GameState,
  suggestion: Suggestion | null = null,
  error: string | null = null,
): BoardView {
  return {
    shape: { n: state.n, c: state.c, variant: state.variant, mode: state.mode },
    rows: state.history.map((row) => ({
      guess: row.guess,
      rating: row.rating,
      remaining: row.remaining,
    })),
    remaining: state.remaining,
    status: state.status,
    banner: bannerText(state),
    secret: state.secret ?? null,
    suggestion,
    error,
    inputEnabled: state.status === "in-progress",
  };
}

export function instanceFromState(state: GameState): InstanceDoc {
  // The transcript as an instance document, for /analyze/suggest.
  return {
    n: state.n,
    c: state.c,
    variant: state.variant,
    queries: state.history.map((row) => ({ guess: row.guess, rating: row.rating })),
  };
}

export function parseCsvIntegers(text: string): number[] {
  const parts = text.split(",").map((part) => part.trim());
  if (parts.some((part) => part === "" || !/^\d+$/.test(part))) {
    throw new Error(`enter comma-separated numbers, not "${text}"`);
  }
  return parts.map(Number);
}

export function parseRatingEntry(text: string, variant: GameState["variant"]): Rating {
  if (variant === "full") {
    const parts = parseCsvIntegers(text);
    if (parts.length !== 2) {
      throw new Error('full-variant ratings are entered as "black,white"');
    }
    return { black: parts[0]!, white: parts[1]! };
  }
  const parts = parseCsvIntegers(text);
  if (parts.length !== 1) {
    throw new Error("enter the rating as a single number");
  }
  return parts[0]!;
}
