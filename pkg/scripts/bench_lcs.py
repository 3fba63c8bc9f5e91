#!/usr/bin/env python3
"""Time lcs_align across sequence sizes; the 1000-token case must stay well
under 250 ms."""

import random
import time

from tokengrade import default_policy, lcs_align, tokenize

POLICY = default_policy("c-family")


def make_seq(n, rng):
    alphabet = [f"t{i}" for i in range(16)]
    return tokenize(" ".join(rng.choice(alphabet) for _ in range(n)), "c-family")


def bench(n, repeats=5):
    rng = random.Random(n)
    a, b = make_seq(n, rng), make_seq(n, rng)
    lcs_align(a, b, POLICY)  # warm
    timings = []
    for _ in range(repeats):
        start = time.perf_counter()
        lcs_align(a, b, POLICY)
        timings.append(time.perf_counter() - start)
    print(f"n={n:5d}  best of {repeats}: {min(timings) * 1000:8.2f} ms")


if __name__ == "__main__":
    for n in (50, 100, 250, 500, 1000, 2000):
        bench(n)
