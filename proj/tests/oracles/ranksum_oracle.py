#!/usr/bin/env python3
"""Reference p-values for the rank-sum tests in tests/unit/test_wilcoxon.cpp.

Uses scipy.stats.mannwhitneyu as the independent statistics implementation.
"""
import itertools

import numpy as np
from scipy import stats


def exact_by_enumeration(xs, ys):
    pooled = list(xs) + list(ys)
    ranks = stats.rankdata(pooled)
    n1 = len(xs)
    observed = sum(ranks[:n1])
    mean = n1 * (len(pooled) + 1) / 2.0
    dev = abs(observed - mean)
    hits = total = 0
    for combo in itertools.combinations(range(len(pooled)), n1):
        w = sum(ranks[i] for i in combo)
        total += 1
        if abs(w - mean) >= dev - 1e-9:
            hits += 1
    return hits / total


def main():
    cases = {
        "three_vs_three": ([1, 2, 3], [4, 5, 6]),
        "ties_small": ([1, 2, 2, 3, 5], [2, 3, 4, 4, 6]),
        "interleaved": ([1, 3, 5, 7, 9, 11], [2, 4, 6, 8, 10, 12]),
    }
    for name, (xs, ys) in cases.items():
        asym = stats.mannwhitneyu(xs, ys, alternative="two-sided",
                                  method="asymptotic", use_continuity=True).pvalue
        print(f"{name}: normal={asym!r} exact_enum={exact_by_enumeration(xs, ys)!r}")

    xs = np.arange(52, 103, dtype=float)
    ys = np.arange(1, 52, dtype=float)
    r = stats.mannwhitneyu(xs, ys, alternative="two-sided", method="asymptotic",
                           use_continuity=True)
    print(f"separated_51: normal={r.pvalue!r}")

    rng = np.random.default_rng(11)
    a = np.round(rng.normal(0.0, 1.0, 30), 1)
    b = np.round(rng.normal(0.4, 1.0, 25), 1)
    r = stats.mannwhitneyu(a, b, alternative="two-sided", method="asymptotic",
                           use_continuity=True)
    print("tied_normal_a = {" + ", ".join(repr(float(v)) for v in a) + "}")
    print("tied_normal_b = {" + ", ".join(repr(float(v)) for v in b) + "}")
    print(f"tied_normal: normal={r.pvalue!r}")


if __name__ == "__main__":
    main()
