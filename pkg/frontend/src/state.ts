import type { WeightMode } from "./types.js";

export interface ViewState {
  selectedUser: string | null;
  minSupport: number; // >= 1 always
  maxGap: number | null; // null = unrestricted
  weightMode: WeightMode;
  lastSnapshotVersion: number;
}

export function defaultViewState(): ViewState {
  return {
    selectedUser: null,
    minSupport: 2,
    maxGap: null,
    weightMode: "transitions",
    lastSnapshotVersion: 0,
  };
}

export function clampMinSupport(value: number): number {
  if (!Number.isFinite(value) || value < 1) return 1;
  return Math.floor(value);
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), ms);
  };
}

/** One in-flight query per panel: starting a new one aborts the previous,
 * and a response is only applied if it is still the latest. */
export class LatestWins {
  private seq = 0;
  private controller: AbortController | null = null;

  begin(): { token: number; signal: AbortSignal } {
    this.controller?.abort();
    this.controller = new AbortController();
    this.seq += 1;
    return { token: this.seq, signal: this.controller.signal };
  }

  isCurrent(token: number): boolean {
    return token === this.seq;
  }
}
