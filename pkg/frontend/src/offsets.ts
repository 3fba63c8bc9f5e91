/** Byte-offset to character-offset conversion.
 *
 * The service reports token spans as byte offsets into the UTF-8 encoding of
 * the submitted text; DOM strings are UTF-16. Conversion walks code points,
 * accumulating each one's UTF-8 byte length against its UTF-16 unit length.
 */

function utf8Length(codePoint: number): number {
  if (codePoint <= 0x7f) return 1;
  if (codePoint <= 0x7ff) return 2;
  if (codePoint <= 0xffff) return 3;
  return 4;
}

/** Character (UTF-16 unit) index for a UTF-8 byte offset; offsets past the
 * end clamp to text.length. */
export function byteToCharIndex(text: string, byteOffset: number): number {
  let bytes = 0;
  let chars = 0;
  for (const ch of text) {
    if (bytes >= byteOffset) return chars;
    bytes += utf8Length(ch.codePointAt(0)!);
    chars += ch.length;
  }
  return chars;
}

export function byteSpanToCharSpan(
  text: string,
  span: [number, number],
): [number, number] {
  return [byteToCharIndex(text, span[0]), byteToCharIndex(text, span[1])];
}
