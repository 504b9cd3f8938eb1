/**
 * Temporal envelope extraction for real-valued signals.
 *
 * `getFrontiers` returns the sample indices of the upper and lower
 * frontiers; `getEnvelope` the indices of the merged-|s| envelope. Both
 * prefer the native shared library and fall back to the pure
 * TypeScript implementation (identical output) with a one-time warning
 * when the library is unavailable.
 */
import {
  STATUS_EMPTY,
  STATUS_NULL_ARG,
  STATUS_OK,
  STATUS_ONE_SIDED,
  STATUS_SILENT,
  loadNativeLibrary,
  type NativeLibrary,
} from "./native.js";
import {
  SilentSignalError,
  referenceEnvelope,
  referenceFrontiers,
  toSamples,
} from "./reference.js";

export { SilentSignalError } from "./reference.js";
export { findNativeLibrary, loadNativeLibrary } from "./native.js";

export interface EnvelopeOptions {
  /** Disc radius in scaled units; omitted means automatic estimation. */
  alpha?: number;
  /** Skip the native library and use the pure implementation. */
  forceReference?: boolean;
  /** Explicit shared-library path, overriding the default search. */
  libraryPath?: string;
}

let cachedLibrary: NativeLibrary | null | undefined;
let warnedFallback = false;

function ensureLibrary(): NativeLibrary | null {
  if (cachedLibrary === undefined) {
    cachedLibrary = loadNativeLibrary();
    if (cachedLibrary === null && !warnedFallback) {
      warnedFallback = true;
      console.warn(
        "signal-envelope: native library not found; using the pure " +
          "TypeScript implementation",
      );
    }
  }
  return cachedLibrary;
}

function nativeFor(options: EnvelopeOptions): NativeLibrary | null {
  if (options.forceReference) return null;
  if (options.libraryPath !== undefined) {
    return loadNativeLibrary(options.libraryPath);
  }
  return ensureLibrary();
}

function raiseForStatus(status: number): void {
  switch (status) {
    case STATUS_OK:
    case STATUS_ONE_SIDED:
      return;
    case STATUS_NULL_ARG:
    case STATUS_EMPTY:
      throw new TypeError("signal is empty");
    case STATUS_SILENT:
      throw new SilentSignalError("signal is identically zero");
    default:
      throw new Error(`native envelope call failed with status ${status}`);
  }
}

/**
 * Indices of the upper and lower frontier samples. A one-sided signal
 * (for example everywhere >= 0) yields one empty array, not an error.
 */
export function getFrontiers(
  signal: ArrayLike<number>,
  options: EnvelopeOptions = {},
): { upper: number[]; lower: number[] } {
  const samples = toSamples(signal);
  const native = nativeFor(options);
  if (native === null) {
    return referenceFrontiers(samples, options.alpha);
  }
  const { status, upper, lower } = native.frontiers(samples, options.alpha);
  raiseForStatus(status);
  return { upper, lower };
}

/** Indices of the merged-|s| envelope samples. */
export function getEnvelope(
  signal: ArrayLike<number>,
  options: EnvelopeOptions = {},
): number[] {
  const samples = toSamples(signal);
  const native = nativeFor(options);
  if (native === null) {
    return referenceEnvelope(samples, options.alpha);
  }
  const { status, indices } = native.envelope(samples, options.alpha);
  raiseForStatus(status);
  return indices;
}

/** True when the native shared library is loaded and in use. */
export function usingNativeLibrary(): boolean {
  return ensureLibrary() !== null;
}

// snake_case aliases matching the package's documented surface
export const get_frontiers = getFrontiers;
export const get_envelope = getEnvelope;
