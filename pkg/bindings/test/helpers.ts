/** Deterministic PRNG and signal corpus shared by the test files. */

/** mulberry32: small, fast, seedable PRNG good enough for test data. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** A random test signal mixing noise, tones and zero runs. */
export function randomSignal(rand: () => number, n: number): Float64Array {
  const style = Math.floor(rand() * 3);
  const s = new Float64Array(n);
  if (style === 0) {
    for (let i = 0; i < n; i++) s[i] = rand() * 2 - 1;
  } else if (style === 1) {
    const f = 0.01 + rand() * 0.3;
    const amp = 0.2 + rand() * 0.8;
    for (let i = 0; i < n; i++) s[i] = amp * Math.sin(2 * Math.PI * f * i);
  } else {
    for (let i = 0; i < n; i++) {
      s[i] = rand() < 0.15 ? 0 : rand() * 2 - 1;
    }
  }
  if (s.every((v) => v === 0)) s[Math.floor(rand() * n)] = 1;
  return s;
}
