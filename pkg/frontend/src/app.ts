// Application wiring: one form to open a game, one entry row to play it,
// a pull-based suggestion button. All state transitions go through the
// service; the app only re-renders whatever state the service returned.

import { ApiError, Client, type GameState, type Mode, type Suggestion, type Variant } from "./api";
import { boardFromState, instanceFromState, parseCsvIntegers, parseRatingEntry } from "./board";
import { renderBoard } from "./render";

export interface StartInputs {
  n: number;
  c: number;
  variant: Variant;
  mode: Mode;
  seed?: number;
}

export class App {
  state: GameState | null = null;
  suggestion: Suggestion | null = null;
  error: string | null = null;

  private boardRoot: HTMLElement;
  private form: HTMLFormElement;
  private guessInput: HTMLInputElement;
  private ratingInput: HTMLInputElement;
  private playButton: HTMLButtonElement;
  private suggestButton: HTMLButtonElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: Client,
  ) {
    const doc = root.ownerDocument;
    this.form = doc.createElement("form");
    this.form.className = "setup";
    this.form.innerHTML = `
      <label>pegs <input name="n" type="number" min="1" value="4"></label>
      <label>colors <input name="c" type="number" min="1" value="6"></label>
      <label>variant
        <select name="variant">
          <option value="full">full</option>
          <option value="black">black</option>
          <option value="white">white</option>
        </select>
      </label>
      <label>mode
        <select name="mode">
          <option value="engine-secret">engine secret</option>
          <option value="engine-adaptive">engine adaptive</option>
          <option value="external-assistant">external assistant</option>
        </select>
      </label>
      <label>seed <input name="seed" type="text" placeholder="optional"></label>
      <button type="submit" class="start">start game</button>
    `;
    this.form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.startFromForm();
    });

    const entry = doc.createElement("div");
    entry.className = "entry";
    this.guessInput = doc.createElement("input");
    this.guessInput.className = "guess-entry";
    this.guessInput.placeholder = "guess, e.g. 0,1,2,3";
    this.ratingInput = doc.createElement("input");
    this.ratingInput.className = "rating-entry";
    this.ratingInput.placeholder = "their rating, e.g. 1,2";
    this.ratingInput.hidden = true;
    this.playButton = doc.createElement("button");
    this.playButton.className = "play";
    this.playButton.textContent = "play";
    this.playButton.addEventListener("click", () => void this.playFromEntry());
    this.suggestButton = doc.createElement("button");
    this.suggestButton.className = "suggest";
    this.suggestButton.textContent = "suggest a guess";
    this.suggestButton.addEventListener("click", () => void this.fetchSuggestion());
    entry.append(this.guessInput, this.ratingInput, this.playButton, this.suggestButton);

    this.boardRoot = doc.createElement("div");
    this.boardRoot.className = "board-root";

    root.replaceChildren(this.form, entry, this.boardRoot);
    this.render();
  }

  async startFromForm(): Promise<void> {
    const data = new FormData(this.form);
    const seedText = String(data.get("seed") ?? "").trim();
    const inputs: StartInputs = {
      n: Number(data.get("n")),
      c: Number(data.get("c")),
      variant: String(data.get("variant")) as Variant,
      mode: String(data.get("mode")) as Mode,
    };
    if (seedText !== "") inputs.seed = Number(seedText);
    await this.startGame(inputs);
  }

  async startGame(inputs: StartInputs): Promise<void> {
    this.suggestion = null;
    try {
      this.state = await this.client.createGame(
        { n: inputs.n, c: inputs.c, variant: inputs.variant },
        inputs.mode,
        inputs.seed,
      );
      this.error = null;
    } catch (exc) {
      this.error = describe(exc);
    }
    this.render();
  }

  async playFromEntry(): Promise<void> {
    await this.playTurn(this.guessInput.value, this.ratingInput.value);
    if (!this.error) {
      this.guessInput.value = "";
      this.ratingInput.value = "";
    }
  }

  async playTurn(guessText: string, ratingText = ""): Promise<void> {
    if (!this.state) {
      this.error = "start a game first";
      this.render();
      return;
    }
    try {
      const guess = parseCsvIntegers(guessText);
      const rating =
        this.state.mode === "external-assistant"
          ? parseRatingEntry(ratingText, this.state.variant)
          : undefined;
      const response = await this.client.submitGuess(this.state.id, guess, rating);
      this.state = response.state;
      this.error = null;
      // any displayed advice predates this turn; drop it
      this.suggestion = null;
    } catch (exc) {
      this.error = describe(exc);
    }
    this.render();
  }

  async fetchSuggestion(): Promise<void> {
    if (!this.state) {
      this.error = "start a game first";
      this.render();
      return;
    }
    try {
      this.suggestion = await this.client.suggest(instanceFromState(this.state));
      this.error = null;
    } catch (exc) {
      this.suggestion = null;
      this.error = describe(exc);
      if (exc instanceof ApiError && exc.status === 413) {
        this.error += " (shrink the board to get suggestions)";
      }
    }
    this.render();
  }

  render(): void {
    if (!this.state) {
      this.boardRoot.replaceChildren();
      if (this.error) {
        const div = this.boardRoot.ownerDocument.createElement("div");
        div.className = "error";
        div.textContent = this.error;
        this.boardRoot.appendChild(div);
      }
      return;
    }
    const view = boardFromState(this.state, this.suggestion, this.error);
    renderBoard(this.boardRoot, view);
    this.ratingInput.hidden = this.state.mode !== "external-assistant";
    const finished = this.state.status !== "in-progress";
    this.guessInput.disabled = finished;
    this.ratingInput.disabled = finished;
    this.playButton.disabled = finished;
    this.suggestButton.disabled = finished;
  }
}

function describe(exc: unknown): string {
  if (exc instanceof ApiError) return exc.message;
  if (exc instanceof Error) return exc.message;
  return String(exc);
}
