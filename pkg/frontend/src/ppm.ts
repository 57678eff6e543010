/** Minimal binary PPM (P6, 8-bit) decoder; the wire format of the tile
 * service.  Decoding client-side keeps the payload bit-exact. */

export interface PpmImage {
  width: number;
  height: number;
  /** RGBA, ready for ImageData. */
  rgba: Uint8ClampedArray<ArrayBuffer>;
}

export function decodePpm(buffer: ArrayBuffer): PpmImage {
  const bytes = new Uint8Array(buffer);
  let pos = 0;

  function token(): string {
    while (pos < bytes.length && isSpace(bytes[pos])) pos++;
    if (bytes[pos] === 0x23) {
      // comment line
      while (pos < bytes.length && bytes[pos] !== 0x0a) pos++;
      return token();
    }
    const start = pos;
    while (pos < bytes.length && !isSpace(bytes[pos])) pos++;
    return String.fromCharCode(...bytes.subarray(start, pos));
  }

  const magic = token();
  if (magic !== "P6") throw new Error(`not a P6 ppm (magic '${magic}')`);
  const width = parseInt(token(), 10);
  const height = parseInt(token(), 10);
  const maxval = parseInt(token(), 10);
  if (!(width > 0 && height > 0)) throw new Error("bad ppm dimensions");
  if (maxval !== 255) throw new Error(`unsupported maxval ${maxval}`);
  pos++; // single whitespace after maxval
  const need = width * height * 3;
  if (bytes.length - pos < need) throw new Error("truncated ppm payload");
  const rgba = new Uint8ClampedArray(new ArrayBuffer(width * height * 4));
  for (let i = 0; i < width * height; i++) {
    rgba[4 * i] = bytes[pos + 3 * i];
    rgba[4 * i + 1] = bytes[pos + 3 * i + 1];
    rgba[4 * i + 2] = bytes[pos + 3 * i + 2];
    rgba[4 * i + 3] = 255;
  }
  return { width, height, rgba };
}

function isSpace(b: number): boolean {
  return b === 0x20 || b === 0x09 || b === 0x0a || b === 0x0d;
}
