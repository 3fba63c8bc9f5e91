"""Classify tokens as placed, misplaced, missing, or extra.

Counting works per distinct token value. With ``a`` occurrences in the
answer, ``r`` in the response, and ``l`` of them aligned:

    placed    = l
    misplaced = min(a, r) - l     (present in both, but off the alignment)
    missing   = max(a - r, 0)
    extra     = max(r - a, 0)

so placed + misplaced + extra = r and placed + misplaced + missing = a.

Counts alone don't say *which* occurrence of a repeated value is the
misplaced one, so mistakes are pinned to concrete tokens left to right:
scanning the unaligned response occurrences of a value in index order, the
first ``misplaced`` of them are misplaced and the rest extra; scanning the
unaligned answer occurrences, the first ``misplaced`` pair up with those
misplaced response tokens (that pairing carries the per-token description)
and the last ``missing`` become missing anchors.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lcs import Alignment
from .tokens import Span, TokenSequence


class MistakeKind(str, Enum):
    MISPLACED = "misplaced"
    MISSING = "missing"
    EXTRA = "extra"


class AlignmentMismatch(Exception):
    """The alignment does not fit the token sequences it was checked against."""


@dataclass(frozen=True)
class ValueCounts:
    """Occurrence bookkeeping for one distinct token value."""

    value: str
    in_answer: int
    in_response: int
    aligned: int

    @property
    def placed(self) -> int:
        return self.aligned

    @property
    def misplaced(self) -> int:
        return min(self.in_answer, self.in_response) - self.aligned

    @property
    def missing(self) -> int:
        return max(self.in_answer - self.in_response, 0)

    @property
    def extra(self) -> int:
        return max(self.in_response - self.in_answer, 0)


@dataclass(frozen=True)
class Mistake:
    """One concrete mistake.

    ``response_index``/``span`` locate the offending response token for
    misplaced and extra mistakes (absent for missing). ``answer_index`` is
    the answer-side anchor used for description lookup: the unaligned answer
    occurrence paired with a misplaced token, or the anchor of a missing one
    (absent for extra). ``raw`` is the anchored token's literal text --
    response-side for misplaced/extra, answer-side for missing.
    """

    kind: MistakeKind
    value: str
    raw: str
    span: Span | None = None
    response_index: int | None = None
    answer_index: int | None = None


@dataclass(frozen=True)
class MistakeReport:
    """Alignment, per-value counts, concrete mistakes, and (once the grading
    stage fills it) the grade fraction."""

    alignment: Alignment
    counts: tuple[ValueCounts, ...]
    mistakes: tuple[Mistake, ...]
    grade: float | None = None


def _validate_alignment(
    answer: TokenSequence, response: TokenSequence, alignment: Alignment
) -> None:
    if alignment.answer_len != len(answer) or alignment.response_len != len(response):
        raise AlignmentMismatch(
            f"alignment is for lengths ({alignment.answer_len}, "
            f"{alignment.response_len}), sequences have "
            f"({len(answer)}, {len(response)})"
        )
    prev_a, prev_r = -1, -1
    for ai, ri in alignment.pairs:
        if not (prev_a < ai < len(answer)) or not (prev_r < ri < len(response)):
            raise AlignmentMismatch(f"pair ({ai}, {ri}) out of order or range")
        if answer[ai].normalized != response[ri].normalized:
            raise AlignmentMismatch(
                f"pair ({ai}, {ri}) aligns unequal tokens "
                f"{answer[ai].normalized!r} and {response[ri].normalized!r}"
            )
        prev_a, prev_r = ai, ri


def classify(
    answer: TokenSequence, response: TokenSequence, alignment: Alignment
) -> MistakeReport:
    """Build the mistake report for an alignment of these two sequences.

    The report's mistake list is in canonical order: misplaced (by response
    index), then extra (by response index), then missing (by answer index).

    Raises:
        AlignmentMismatch: the alignment's invariants fail for the sequences.
    """
    _validate_alignment(answer, response, alignment)

    answer_occ: dict[str, list[int]] = {}
    for i, tok in enumerate(answer):
        answer_occ.setdefault(tok.normalized, []).append(i)
    response_occ: dict[str, list[int]] = {}
    for i, tok in enumerate(response):
        response_occ.setdefault(tok.normalized, []).append(i)

    aligned_answer = {ai for ai, _ in alignment.pairs}
    aligned_response = {ri for _, ri in alignment.pairs}
    aligned_count: dict[str, int] = {}
    for ai, _ in alignment.pairs:
        value = answer[ai].normalized
        aligned_count[value] = aligned_count.get(value, 0) + 1

    # One counts entry per distinct value, ordered by first appearance.
    values = list(answer_occ)
    values.extend(v for v in response_occ if v not in answer_occ)

    counts: list[ValueCounts] = []
    misplaced: list[Mistake] = []
    extra: list[Mistake] = []
    missing: list[Mistake] = []
    for value in values:
        vc = ValueCounts(
            value=value,
            in_answer=len(answer_occ.get(value, ())),
            in_response=len(response_occ.get(value, ())),
            aligned=aligned_count.get(value, 0),
        )
        counts.append(vc)

        unaligned_r = [
            i for i in response_occ.get(value, ()) if i not in aligned_response
        ]
        unaligned_a = [i for i in answer_occ.get(value, ()) if i not in aligned_answer]

        for k, ri in enumerate(unaligned_r):
            tok = response[ri]
            if k < vc.misplaced:
                misplaced.append(
                    Mistake(
                        kind=MistakeKind.MISPLACED,
                        value=value,
                        raw=tok.raw,
                        span=tok.span,
                        response_index=ri,
                        answer_index=unaligned_a[k],
                    )
                )
            else:
                extra.append(
                    Mistake(
                        kind=MistakeKind.EXTRA,
                        value=value,
                        raw=tok.raw,
                        span=tok.span,
                        response_index=ri,
                    )
                )
        for ai in unaligned_a[vc.misplaced :]:
            tok = answer[ai]
            missing.append(
                Mistake(
                    kind=MistakeKind.MISSING,
                    value=value,
                    raw=tok.raw,
                    answer_index=ai,
                )
            )

    misplaced.sort(key=lambda m: m.response_index)
    extra.sort(key=lambda m: m.response_index)
    missing.sort(key=lambda m: m.answer_index)
    return MistakeReport(
        alignment=alignment,
        counts=tuple(counts),
        mistakes=tuple(misplaced + extra + missing),
    )
