"""Independent brute-force oracles for the sequence algorithms under test.

These stay deliberately naive: the LCS oracle enumerates common subsequences
by subset instead of running any dynamic program, so it shares no code path
with the implementation it checks.
"""

from itertools import combinations


def is_subsequence(needle, haystack) -> bool:
    it = iter(haystack)
    return all(any(x == y for y in it) for x in needle)


def bruteforce_lcs_length(xs, ys) -> int:
    """Maximum length over all common subsequences, by exhaustive subsets."""
    short, long_ = (xs, ys) if len(xs) <= len(ys) else (ys, xs)
    indices = range(len(short))
    for k in range(len(short), 0, -1):
        for combo in combinations(indices, k):
            candidate = [short[i] for i in combo]
            if is_subsequence(candidate, long_):
                return k
    return 0


def bruteforce_common_subsequences(xs, ys, length):
    """All distinct common subsequences of exactly the given length."""
    found = set()
    short, long_ = (xs, ys) if len(xs) <= len(ys) else (ys, xs)
    for combo in combinations(range(len(short)), length):
        candidate = tuple(short[i] for i in combo)
        if candidate not in found and is_subsequence(candidate, long_):
            found.add(candidate)
    return found
