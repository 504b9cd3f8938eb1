/**
 * Pure TypeScript implementation of the rolling-disc envelope pipeline.
 *
 * Mirrors the native library operation for operation (same formulas in
 * the same order, same tie-breaks), so its output is index-identical to
 * the shared library's and it can serve both as a portability fallback
 * and as a differential-testing oracle.
 */

export interface ChainResult {
  indices: number[];
  bridged: boolean[];
}

interface Candidates {
  indices: number[];
  values: number[];
}

/**
 * One candidate per maximal strict-same-sign run. Zero samples belong
 * to no run. In merged mode every run contributes |extremum|; in split
 * mode only positive runs contribute their maximum (callers negate the
 * signal for the lower side). Ties resolve to the smallest index.
 */
function collectCandidates(s: Float64Array, merged: boolean): Candidates {
  const indices: number[] = [];
  const values: number[] = [];
  let i = 0;
  const n = s.length;
  while (i < n) {
    const v = s[i];
    const sign = v > 0 ? 1 : v < 0 ? -1 : 0;
    if (sign === 0) {
      i += 1;
      continue;
    }
    let best = i;
    while (i < n && (s[i] > 0 ? 1 : s[i] < 0 ? -1 : 0) === sign) {
      if (merged) {
        if (Math.abs(s[i]) > Math.abs(s[best])) best = i;
      } else if (sign > 0) {
        if (s[i] > s[best]) best = i;
      }
      i += 1;
    }
    if (merged || sign > 0) {
      indices.push(best);
      values.push(merged ? Math.abs(s[best]) : s[best]);
    }
  }
  return { indices, values };
}

/** Median of a copy of v; even counts average the two middle values. */
function median(v: number[]): number {
  const sorted = [...v].sort((a, b) => a - b);
  const k = sorted.length;
  if (k % 2 === 1) return sorted[(k - 1) / 2];
  return 0.5 * (sorted[k / 2 - 1] + sorted[k / 2]);
}

/**
 * Disc radius from discrete curvature: the median finite circumradius
 * of consecutive candidate triples, clamped to [1, max(1, x_span)].
 */
function estimateAlpha(x: number[], y: number[], tol: number): number {
  const m = x.length;
  const xSpan = m >= 2 ? x[m - 1] - x[0] : 0.0;
  const hi = xSpan > 1.0 ? xSpan : 1.0;
  if (m < 3) return hi;
  const radii: number[] = [];
  for (let i = 0; i + 2 < m; i++) {
    const ax = x[i + 1] - x[i];
    const ay = y[i + 1] - y[i];
    const bx = x[i + 2] - x[i + 1];
    const by = y[i + 2] - y[i + 1];
    const cx = x[i + 2] - x[i];
    const cy = y[i + 2] - y[i];
    const a = Math.sqrt(ax * ax + ay * ay);
    const b = Math.sqrt(bx * bx + by * by);
    const c = Math.sqrt(cx * cx + cy * cy);
    const cross = Math.abs(ax * cy - ay * cx);
    const abc = a * b * c;
    if (cross > tol * abc) radii.push(abc / (2.0 * cross));
  }
  if (radii.length === 0) return hi;
  let alpha = median(radii);
  if (alpha < 1.0) alpha = 1.0;
  if (alpha > hi) alpha = hi;
  return alpha;
}

/**
 * Greedy empty-disc chain from the first point to the last. A chord
 * (p, q) is accepted iff |pq| <= 2*alpha and the radius-alpha disc
 * through p and q centered above the chord contains no candidate ahead
 * of p in its open interior; otherwise the chain bridges one point.
 */
function discChain(x: number[], y: number[], alpha: number): ChainResult {
  const m = x.length;
  const reach = 2.0 * alpha;
  const reach2 = reach * reach;
  const block2 = alpha * alpha;
  const ords = [0];
  const bridged: boolean[] = [];
  let i = 0;
  while (i < m - 1) {
    const px = x[i];
    const py = y[i];
    let next = i + 1;
    let wasBridged = true;
    for (let j = i + 1; j < m && x[j] <= px + reach; j++) {
      const dx = x[j] - px;
      const dy = y[j] - py;
      const d2 = dx * dx + dy * dy;
      if (d2 > reach2) continue;
      const d = Math.sqrt(d2);
      const h2 = alpha * alpha - 0.25 * d2;
      const h = h2 > 0.0 ? Math.sqrt(h2) : 0.0;
      const cx = px + 0.5 * dx - (h * dy) / d;
      const cy = py + 0.5 * dy + (h * dx) / d;
      // a point inside the open disc satisfies |x - cx| < alpha
      let blocked = false;
      for (let k = i + 1; k < m && x[k] <= cx + alpha; k++) {
        if (k === j || x[k] < cx - alpha) continue;
        const kx = x[k] - cx;
        const ky = y[k] - cy;
        if (kx * kx + ky * ky < block2) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        next = j;
        wasBridged = false;
        break;
      }
    }
    i = next;
    ords.push(i);
    bridged.push(wasBridged);
  }
  return { indices: ords, bridged };
}

const DEFAULT_TOL = 1e-9;

/**
 * Upper-side pipeline over s: candidates, scaling, alpha, chain.
 * Returns null when the signal has no contributing run on this side.
 */
export function referenceSide(
  s: Float64Array,
  alpha: number | undefined,
  merged: boolean,
): number[] | null {
  let yMax = 0.0;
  for (let i = 0; i < s.length; i++) {
    const a = Math.abs(s[i]);
    if (a > yMax) yMax = a;
  }
  if (yMax === 0.0) throw new SilentSignalError("signal is identically zero");
  const { indices, values } = collectCandidates(s, merged);
  if (indices.length === 0) return null;
  const m = indices.length;
  const xStep = m >= 2 ? (indices[m - 1] - indices[0]) / (m - 1) : 1.0;
  const x = indices.map((v) => v / xStep);
  const y = values.map((v) => v / yMax);
  const radius =
    alpha !== undefined && alpha > 0 ? alpha : estimateAlpha(x, y, DEFAULT_TOL);
  const chain = discChain(x, y, radius);
  return chain.indices.map((o) => indices[o]);
}

export class SilentSignalError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SilentSignalError";
  }
}

export function toSamples(signal: ArrayLike<number>): Float64Array {
  if (signal.length === 0) {
    throw new TypeError("signal is empty");
  }
  const s = Float64Array.from(signal);
  for (let i = 0; i < s.length; i++) {
    if (!Number.isFinite(s[i])) {
      throw new TypeError(`signal contains a non-finite sample at index ${i}`);
    }
  }
  return s;
}

/** Pure implementation of the two-sided frontier extraction. */
export function referenceFrontiers(
  signal: ArrayLike<number>,
  alpha?: number,
): { upper: number[]; lower: number[] } {
  const s = toSamples(signal);
  const upper = referenceSide(s, alpha, false);
  const negated = new Float64Array(s.length);
  for (let i = 0; i < s.length; i++) negated[i] = -s[i];
  const lower = referenceSide(negated, alpha, false);
  return { upper: upper ?? [], lower: lower ?? [] };
}

/** Pure implementation of the merged-|s| envelope extraction. */
export function referenceEnvelope(
  signal: ArrayLike<number>,
  alpha?: number,
): number[] {
  const s = toSamples(signal);
  const result = referenceSide(s, alpha, true);
  // merged mode covers every run, so a non-silent signal always yields one
  return result ?? [];
}
