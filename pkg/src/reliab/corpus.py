"""Test and experiment graph collections."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from reliab.graph import Graph


def _canonical(n: int, pairs: list[tuple[int, int]]) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in pairs))
        if best is None or key < best:
            best = key
    return best


def connected_simple_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected simple graphs on ``n`` vertices."""
    slots = list(itertools.combinations(range(n), 2))
    seen = set()
    out = []
    for mask in range(1 << len(slots)):
        pairs = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        g = Graph.from_edges(n, pairs)
        if not g.is_connected():
            continue
        key = _canonical(n, pairs)
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
    return out


def small_connected_graphs(max_n: int, min_n: int = 2) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in connected_simple_graphs(n)]


def random_weight(rng: random.Random, signed: bool = False) -> Fraction:
    num = rng.randint(-4 if signed else 1, 5)
    return Fraction(num, rng.randint(1, 4))


def random_multigraph(
    rng: random.Random,
    max_n: int = 6,
    max_m: int = 9,
    loops: bool = True,
    signed: bool = False,
) -> Graph:
    """Connected multigraph: a random spanning tree plus random extra edges (parallels and loops allowed)."""
    n = rng.randint(2, max_n)
    pairs = [(rng.randrange(v), v) for v in range(1, n)]
    extra = rng.randint(0, max_m - len(pairs))
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not loops:
            continue
        pairs.append((u, v))
    rng.shuffle(pairs)
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v], random_weight(rng, signed)) for u, v in pairs])


def pendant_triangle() -> Graph:
    """Triangle on a centre vertex with two pendant vertices hanging off the centre."""
    return Graph.from_edges(5, [(1, 0), (0, 2), (2, 1), (3, 0), (0, 4)])
