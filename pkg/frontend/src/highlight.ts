/** Split a response text into segments for in-text mistake highlighting. */

import { byteSpanToCharSpan } from "./offsets.js";
import type { WireMistake } from "./types.js";

export type SegmentKind = "plain" | "misplaced" | "extra";

export interface Segment {
  text: string;
  kind: SegmentKind;
}

/** Segments cover the whole text in order; misplaced/extra mistake spans
 * become styled segments, everything else stays plain. Missing mistakes have
 * no span and never highlight anything. */
export function segmentResponse(
  text: string,
  mistakes: WireMistake[],
): Segment[] {
  const marks: Array<{ start: number; end: number; kind: SegmentKind }> = [];
  for (const mistake of mistakes) {
    if (!mistake.span || mistake.kind === "missing") continue;
    const [start, end] = byteSpanToCharSpan(text, mistake.span);
    if (start >= end || start >= text.length) continue; // clamp bad spans away
    marks.push({ start, end: Math.min(end, text.length), kind: mistake.kind });
  }
  marks.sort((a, b) => a.start - b.start);

  const segments: Segment[] = [];
  let cursor = 0;
  for (const mark of marks) {
    if (mark.start < cursor) continue; // overlaps cannot happen for real tokens
    if (mark.start > cursor) {
      segments.push({ text: text.slice(cursor, mark.start), kind: "plain" });
    }
    segments.push({ text: text.slice(mark.start, mark.end), kind: mark.kind });
    cursor = mark.end;
  }
  if (cursor < text.length) {
    segments.push({ text: text.slice(cursor), kind: "plain" });
  }
  return segments;
}

/** Line containing `charIndex` plus a caret line pointing at it, for lex
 * error display. */
export function caretLines(
  text: string,
  charIndex: number,
): { line: string; caret: string } {
  const clamped = Math.min(Math.max(charIndex, 0), text.length);
  const lineStart = text.lastIndexOf("\n", clamped - 1) + 1;
  let lineEnd = text.indexOf("\n", clamped);
  if (lineEnd === -1) lineEnd = text.length;
  const column = clamped - lineStart;
  return {
    line: text.slice(lineStart, lineEnd),
    caret: " ".repeat(column) + "^",
  };
}
