"""Exhaustive edge-subset enumeration.

Every brute-force quantity in the package is a sum of ``w(A)`` over edge
subsets ``A`` grouped by some function of the component structure of
``(V, A)``. :func:`subset_profile` walks the include/exclude tree once,
keeping a union-find with rollback, and hands each leaf to a classifier.

With ``max_kappa`` set, branches whose component count can no longer drop
to ``max_kappa`` are cut. Every subset that is still counted is visited
individually, so the result is the same exhaustive sum.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from typing import Callable, Hashable

from reliab.config import CapExceededError, brute_cap
from reliab.graph import Graph

Classifier = Callable[[int, int, Callable[[int], int]], Hashable]


def _scalar(w: Fraction):
    # int arithmetic is much faster than Fraction on the hot path
    return w.numerator if w.denominator == 1 else w


def subset_profile(
    g: Graph,
    classify: Classifier,
    *,
    max_kappa: int | None = None,
    unit_weights: bool = False,
    cap: int | None = None,
) -> dict[Hashable, Fraction]:
    """Sum of ``w(A)`` over all ``A`` grouped by ``classify(kappa, |A|, find)``.

    ``classify`` returns a key, or ``None`` to drop the subset.
    """
    limit = brute_cap(cap)
    if g.m > limit:
        raise CapExceededError(f"brute force is capped at {limit} edges, graph has {g.m}")
    n, m = g.n, g.m
    us = [e.u for e in g.edges]
    vs = [e.v for e in g.edges]
    ws = [1 if unit_weights else _scalar(e.w) for e in g.edges]
    parent = list(range(n))
    size = [1] * n
    out: dict[Hashable, Fraction] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(i: int, comps: int, weight, count: int) -> None:
        if max_kappa is not None and comps - (m - i) > max_kappa:
            return
        if i == m:
            key = classify(comps, count, find)
            if key is not None:
                out[key] = out.get(key, 0) + weight
            return
        walk(i + 1, comps, weight, count)
        ru, rv = find(us[i]), find(vs[i])
        if ru == rv:
            walk(i + 1, comps, weight * ws[i], count + 1)
            return
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        walk(i + 1, comps - 1, weight * ws[i], count + 1)
        parent[rv] = rv
        size[ru] -= size[rv]

    old = sys.getrecursionlimit()
    if m + 100 > old:
        sys.setrecursionlimit(m + 100)
    try:
        walk(0, n, 1, 0)
    finally:
        sys.setrecursionlimit(old)
    return {k: Fraction(v) for k, v in out.items()}


def connected_spanning_sum(g: Graph, cap: int | None = None) -> Fraction:
    prof = subset_profile(g, lambda k, c, f: True if k == 1 else None, max_kappa=1, cap=cap)
    return prof.get(True, Fraction(0))


def kappa_profile(g: Graph, cap: int | None = None) -> dict[int, Fraction]:
    """``{k: sum of w(A) over A with kappa(A) = k}``."""
    return subset_profile(g, lambda k, c, f: k, cap=cap)


def rank_nullity_counts(g: Graph, cap: int | None = None) -> dict[tuple[int, int], int]:
    """``{(kappa(A), |A|): number of subsets}`` with weights ignored."""
    prof = subset_profile(g, lambda k, c, f: (k, c), unit_weights=True, cap=cap)
    return {k: int(v) for k, v in prof.items()}


def spanning_counts_by_size(g: Graph, cap: int | None = None) -> dict[int, int]:
    """``{j: number of connected spanning subsets of size j}``."""
    prof = subset_profile(g, lambda k, c, f: c if k == 1 else None, max_kappa=1, unit_weights=True, cap=cap)
    return {k: int(v) for k, v in prof.items()}


def two_terminal_sums(g: Graph, s: int, t: int, cap: int | None = None) -> tuple[Fraction, Fraction]:
    """``(connected total, cut total)`` for a two-terminal gadget.

    The cut total covers subsets with exactly two components that separate
    ``s`` from ``t``, i.e. subsets that become connected once ``s`` and ``t``
    are joined from outside.
    """

    def classify(k: int, c: int, find: Callable[[int], int]):
        if k == 1:
            return "conn"
        if k == 2 and find(s) != find(t):
            return "cut"
        return None

    prof = subset_profile(g, classify, max_kappa=2, cap=cap)
    return prof.get("conn", Fraction(0)), prof.get("cut", Fraction(0))

