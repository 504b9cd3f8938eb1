/**
 * koffi bindings to the C-ABI shared library (libenvelope.so).
 *
 * Loading is best-effort: `loadNativeLibrary` returns null when the
 * library cannot be found or loaded, and callers fall back to the pure
 * implementation. Search order: explicit path argument, then the
 * ENVELOPE_LIBRARY environment variable, then the sibling source tree.
 */
import koffi from "koffi";
import * as fs from "node:fs";
import * as path from "node:path";
import { fileURLToPath } from "node:url";

export const STATUS_OK = 0;
export const STATUS_NULL_ARG = 1;
export const STATUS_EMPTY = 2;
export const STATUS_SILENT = 3;
export const STATUS_ONE_SIDED = 4;
export const STATUS_INTERNAL = 5;

export interface NativeLibrary {
  frontiers(
    samples: Float64Array,
    alpha: number | undefined,
  ): { status: number; upper: number[]; lower: number[] };
  envelope(
    samples: Float64Array,
    alpha: number | undefined,
  ): { status: number; indices: number[] };
  version(): string;
  path: string;
}

function candidatePaths(override?: string): string[] {
  const paths: string[] = [];
  if (override) paths.push(override);
  const env = process.env["ENVELOPE_LIBRARY"];
  if (env) paths.push(env);
  const here = path.dirname(fileURLToPath(import.meta.url));
  // repo layout: <root>/bindings/src -> <root>/src/envelope_kit/ffi
  paths.push(
    path.resolve(here, "..", "..", "src", "envelope_kit", "ffi", "libenvelope.so"),
    path.resolve(here, "..", "libenvelope.so"),
  );
  return paths;
}

export function findNativeLibrary(override?: string): string | null {
  for (const p of candidatePaths(override)) {
    if (fs.existsSync(p)) return p;
  }
  return null;
}

export function loadNativeLibrary(override?: string): NativeLibrary | null {
  const libPath = findNativeLibrary(override);
  if (libPath === null) return null;
  try {
    const lib = koffi.load(libPath);
    const envFrontiers = lib.func("env_frontiers", "int32", [
      "double *",
      "uint64",
      "double",
      "uint64 *",
      "uint64 *",
      "uint64 *",
      "uint64 *",
    ]);
    const envEnvelope = lib.func("env_envelope", "int32", [
      "double *",
      "uint64",
      "double",
      "uint64 *",
      "uint64 *",
    ]);
    const envVersion = lib.func("env_version", "int32", ["char *", "uint64"]);

    const takeIndices = (buf: BigUint64Array, len: BigUint64Array): number[] => {
      const count = Number(len[0]);
      const out = new Array<number>(count);
      for (let i = 0; i < count; i++) out[i] = Number(buf[i]);
      return out;
    };

    return {
      path: libPath,
      frontiers(samples, alpha) {
        const n = samples.length;
        const upper = new BigUint64Array(Math.max(n, 1));
        const lower = new BigUint64Array(Math.max(n, 1));
        const upperLen = new BigUint64Array(1);
        const lowerLen = new BigUint64Array(1);
        const status: number = envFrontiers(
          samples,
          n,
          alpha !== undefined && alpha > 0 ? alpha : -1.0,
          upper,
          upperLen,
          lower,
          lowerLen,
        );
        return {
          status,
          upper: takeIndices(upper, upperLen),
          lower: takeIndices(lower, lowerLen),
        };
      },
      envelope(samples, alpha) {
        const n = samples.length;
        const out = new BigUint64Array(Math.max(n, 1));
        const outLen = new BigUint64Array(1);
        const status: number = envEnvelope(
          samples,
          n,
          alpha !== undefined && alpha > 0 ? alpha : -1.0,
          out,
          outLen,
        );
        return { status, indices: takeIndices(out, outLen) };
      },
      version() {
        const buf = Buffer.alloc(32);
        const status: number = envVersion(buf, buf.length);
        if (status !== STATUS_OK) return "";
        return buf.toString("ascii", 0, buf.indexOf(0));
      },
    };
  } catch {
    return null;
  }
}
