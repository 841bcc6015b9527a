// DOM rendering for the board view. Pegs are colored circles with numeric
// labels (the label, not the hue, is the authoritative color identity);
// full-variant ratings render as black/white mini-pegs, single-count
// ratings as their number. Raw service values are mirrored into data-*
// attributes so tests can compare them byte for byte.

import type { Rating } from "./api";
import { ratingKey, type BoardView } from "./board";

function pegHue(color: number, c: number): string {
  return `hsl(${Math.round((360 * color) / Math.max(c, 1))}, 65%, 55%)`;
}

function pegSpan(doc: Document, color: number, c: number): HTMLElement {
  const peg = doc.createElement("span");
  peg.className = "peg";
  peg.dataset.color = String(color);
  peg.style.backgroundColor = pegHue(color, c);
  peg.textContent = String(color);
  return peg;
}

function ratingCell(doc: Document, rating: Rating): HTMLElement {
  const cell = doc.createElement("td");
  cell.className = "rating";
  cell.dataset.rating = ratingKey(rating);
  if (typeof rating === "number") {
    cell.textContent = String(rating);
    return cell;
  }
  for (let i = 0; i < rating.black; i += 1) {
    const peg = doc.createElement("span");
    peg.className = "mini-peg black";
    cell.appendChild(peg);
  }
  for (let i = 0; i < rating.white; i += 1) {
    const peg = doc.createElement("span");
    peg.className = "mini-peg white";
    cell.appendChild(peg);
  }
  return cell;
}

export function renderBoard(root: HTMLElement, view: BoardView): void {
  const doc = root.ownerDocument;
  root.replaceChildren();

  const banner = doc.createElement("div");
  banner.className = "banner";
  banner.dataset.status = view.status;
  banner.dataset.remaining = String(view.remaining);
  banner.textContent = view.banner;
  root.appendChild(banner);

  if (view.error) {
    const error = doc.createElement("div");
    error.className = "error";
    error.textContent = view.error;
    root.appendChild(error);
  }

  const table = doc.createElement("table");
  table.className = "board";
  const head = doc.createElement("tr");
  for (const title of ["#", "guess", "rating", "remaining"]) {
    const th = doc.createElement("th");
    th.textContent = title;
    head.appendChild(th);
  }
  table.appendChild(head);

  view.rows.forEach((row, index) => {
    const tr = doc.createElement("tr");
    tr.className = "board-row";

    const num = doc.createElement("td");
    num.textContent = String(index + 1);
    tr.appendChild(num);

    const guessCell = doc.createElement("td");
    guessCell.className = "guess";
    guessCell.dataset.guess = row.guess.join(",");
    for (const color of row.guess) {
      guessCell.appendChild(pegSpan(doc, color, view.shape.c));
    }
    tr.appendChild(guessCell);

    tr.appendChild(ratingCell(doc, row.rating));

    const remaining = doc.createElement("td");
    remaining.className = "remaining";
    remaining.dataset.remaining = String(row.remaining);
    remaining.textContent = String(row.remaining);
    tr.appendChild(remaining);

    table.appendChild(tr);
  });
  root.appendChild(table);

  if (view.secret) {
    const secret = doc.createElement("div");
    secret.className = "secret";
    secret.dataset.secret = view.secret.join(",");
    secret.textContent = "secret: ";
    for (const color of view.secret) {
      secret.appendChild(pegSpan(doc, color, view.shape.c));
    }
    root.appendChild(secret);
  }

  const slot = doc.createElement("div");
  slot.className = "suggestion";
  if (view.suggestion) {
    slot.dataset.guess = view.suggestion.guess.join(",");
    slot.dataset.worstCase = String(view.suggestion.worstCase);
    slot.textContent =
      `try ${view.suggestion.guess.join(",")} ` +
      `(worst case ${view.suggestion.worstCase} codes remain)`;
  } else {
    slot.textContent = "";
  }
  root.appendChild(slot);
}
