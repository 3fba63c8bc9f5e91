"""Longest common subsequence between two token sequences, with a canonical
alignment.

The alignment, not just the length, is what mistake classification consumes,
so the traceback must be deterministic: among all optimal alignments we always
return the same one. Walking the DP table from the bottom-right corner, a
matching cell is always taken (on equal tokens the diagonal step is always
optimal), and when both non-match moves preserve optimality the answer index
is decremented first. This tends to align the rightmost feasible occurrence
of a repeated token.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tokens import ComparisonPolicy, TokenSequence

# Hard cap per sequence; keeps the full table under ~10^8 cells.
MAX_TOKENS = 10_000

# Below this many cells the plain Python fill beats numpy's call overhead.
_NUMPY_CELL_THRESHOLD = 16_384


@dataclass(frozen=True)
class Alignment:
    """Matched (answer_index, response_index) pairs, strictly increasing in
    both coordinates."""

    pairs: tuple[tuple[int, int], ...]
    answer_len: int
    response_len: int


def _token_ids(
    answer: TokenSequence, response: TokenSequence, policy: ComparisonPolicy
) -> tuple[list[int], list[int]]:
    """Map tokens to small ints so the DP compares ints, not strings."""
    interned: dict[str, int] = {}

    def ids(seq: TokenSequence) -> list[int]:
        return [
            interned.setdefault(policy.normalize(t.normalized), len(interned))
            for t in seq
        ]

    return ids(answer), ids(response)


def _check_limits(answer: TokenSequence, response: TokenSequence) -> None:
    for name, seq in (("answer", answer), ("response", response)):
        if len(seq) > MAX_TOKENS:
            raise ValueError(
                f"{name} has {len(seq)} tokens, exceeding the {MAX_TOKENS} limit"
            )


def _fill_table_py(a: list[int], r: list[int]) -> list[list[int]]:
    m, n = len(a), len(r)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        ai = a[i - 1]
        prev_row = table[i - 1]
        row = table[i]
        for j in range(1, n + 1):
            if ai == r[j - 1]:
                row[j] = prev_row[j - 1] + 1
            else:
                up = prev_row[j]
                left = row[j - 1]
                row[j] = up if up >= left else left
    return table


def _fill_table_np(a: list[int], r: list[int]) -> np.ndarray:
    # Cells on one anti-diagonal only depend on the previous two diagonals,
    # so each diagonal fills as one vector operation.
    m, n = len(a), len(r)
    a_arr = np.asarray(a, dtype=np.int32)
    r_arr = np.asarray(r, dtype=np.int32)
    width = n + 1
    flat = np.zeros((m + 1) * width, dtype=np.int32)
    for d in range(2, m + n + 1):
        ilo = max(1, d - n)
        ihi = min(m, d - 1)
        if ilo > ihi:
            continue
        i = np.arange(ilo, ihi + 1)
        idx = i * width + (d - i)
        up = flat[idx - width]
        left = flat[idx - 1]
        diag = flat[idx - width - 1]
        eq = a_arr[i - 1] == r_arr[d - i - 1]
        flat[idx] = np.where(eq, diag + 1, np.maximum(up, left))
    return flat.reshape(m + 1, width)


def lcs_align(
    answer: TokenSequence,
    response: TokenSequence,
    policy: ComparisonPolicy,
) -> Alignment:
    """Compute the canonical LCS alignment between answer and response."""
    _check_limits(answer, response)
    a, r = _token_ids(answer, response, policy)
    m, n = len(a), len(r)
    if m * n > _NUMPY_CELL_THRESHOLD:
        table = _fill_table_np(a, r)
    else:
        table = _fill_table_py(a, r)

    pairs: list[tuple[int, int]] = []
    i, j = m, n
    while i > 0 and j > 0:
        if a[i - 1] == r[j - 1]:
            pairs.append((i - 1, j - 1))
            i -= 1
            j -= 1
        elif table[i - 1][j] >= table[i][j - 1]:
            i -= 1
        else:
            j -= 1
    pairs.reverse()
    return Alignment(pairs=tuple(pairs), answer_len=m, response_len=n)


def lcs_length(
    answer: TokenSequence,
    response: TokenSequence,
    policy: ComparisonPolicy,
) -> int:
    """LCS length only, in O(min(|answer|, |response|)) memory."""
    _check_limits(answer, response)
    a, r = _token_ids(answer, response, policy)
    outer, inner = (a, r) if len(a) >= len(r) else (r, a)
    k = len(inner)
    prev = [0] * (k + 1)
    cur = [0] * (k + 1)
    for x in outer:
        for col in range(1, k + 1):
            if x == inner[col - 1]:
                cur[col] = prev[col - 1] + 1
            else:
                up = prev[col]
                left = cur[col - 1]
                cur[col] = up if up >= left else left
        prev, cur = cur, prev
    return prev[k]
