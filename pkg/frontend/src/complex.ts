export interface Cx {
  re: number;
  im: number;
}

export function cx(re: number, im = 0): Cx {
  return { re, im };
}

export function cxAbs(z: Cx): number {
  return Math.hypot(z.re, z.im);
}

/** Shortest-roundtrip literal the backend CLI/service accepts: RE{+|-}IMi. */
export function fmtComplex(z: Cx): string {
  const re = z.re.toString();
  const im = z.im.toString();
  const sign = z.im < 0 || Object.is(z.im, -0) ? "" : "+";
  return `${re}${sign}${im}i`;
}

const NUM = "[+-]?(?:\\d+\\.?\\d*|\\.\\d+)(?:e[+-]?\\d+)?";
const RE_REAL = new RegExp(`^(${NUM})$`);
const RE_IMAG = new RegExp(`^(${NUM})i$`);
const RE_BOTH = new RegExp(`^(${NUM})([+-](?:\\d+\\.?\\d*|\\.\\d+)(?:e[+-]?\\d+)?)i$`);

export function parseComplex(text: string): Cx {
  const s = text.trim().replace(/\s+/g, "").toLowerCase().replace(/j/g, "i");
  if (s === "i" || s === "+i") return cx(0, 1);
  if (s === "-i") return cx(0, -1);
  let m = s.match(RE_BOTH);
  if (m) return cx(Number(m[1]), Number(m[2]));
  m = s.match(RE_IMAG);
  if (m) return cx(0, Number(m[1]));
  m = s.match(RE_REAL);
  if (m) return cx(Number(m[1]), 0);
  throw new Error(`cannot parse complex literal '${text}'`);
}
