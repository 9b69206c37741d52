"""Shared brute-force oracles: independent of the library's fast paths.

Everything here works on plain Python ints and dicts so that test
expectations never route through the code under test.
"""

from __future__ import annotations

import itertools


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with a*x + b*y = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def inverse_oracle(v: int, p: int) -> int:
    g, x, _ = xgcd(v % p, p)
    assert g == 1
    return x % p


def order_oracle(v: int, p: int) -> int:
    """Multiplicative order by listing successive powers."""
    acc = v % p
    k = 1
    while acc != 1:
        acc = acc * v % p
        k += 1
    return k


def combine_oracle(mode: str, p: int, A, B, restricted: bool) -> set[int]:
    op = (lambda a, b: (a + b) % p) if mode == "add" else (lambda a, b: a * b % p)
    return {
        op(a, b) for a in A for b in B if not (restricted and a == b)
    }


def rep_count_oracle(mode: str, p: int, A, B, restricted: bool) -> dict[int, int]:
    op = (lambda a, b: (a + b) % p) if mode == "add" else (lambda a, b: a * b % p)
    counts: dict[int, int] = {}
    for a in A:
        for b in B:
            if restricted and a == b:
                continue
            c = op(a, b)
            counts[c] = counts.get(c, 0) + 1
    return counts


def rep_pairs_oracle(mode: str, p: int, A, B, c: int, restricted: bool) -> list[tuple[int, int]]:
    op = (lambda a, b: (a + b) % p) if mode == "add" else (lambda a, b: a * b % p)
    return sorted(
        (a, b)
        for a in A
        for b in B
        if op(a, b) == c % p and not (restricted and a == b)
    )


def symmetric_pair_targets_oracle(mode: str, p: int, A) -> set[int]:
    """Targets of A o A with exactly two restricted representations."""
    counts = rep_count_oracle(mode, p, A, A, restricted=True)
    return {c for c, k in counts.items() if k == 2}


def exceptional_square_oracle(p: int, A, B) -> set[int]:
    prods = combine_oracle("mult", p, A, B, restricted=True)
    return {a for a in set(A) & set(B) if a * a % p not in prods}


def nonempty_subsets(universe) -> list[tuple[int, ...]]:
    items = sorted(universe)
    out = []
    for r in range(1, len(items) + 1):
        out.extend(itertools.combinations(items, r))
    return out
