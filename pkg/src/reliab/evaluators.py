"""Exact evaluators for reliability and the (weighted) Tutte polynomials.

Three independent routes compute the weighted reliability polynomial
``Zrel(G; w) = sum over spanning connected A of w(A)``:

* :func:`zrel_brute` enumerates edge subsets,
* :func:`zrel_delcontr` runs deletion/contraction, optionally collapsing
  series and parallel structure first (:func:`sp_reduce`),
* :func:`zrel_subsetdp` runs a dynamic program over vertex subsets.

Everything else (reliability at a point, Tutte values, coefficients) is
expressed through these or through the subset walker.
"""

from __future__ import annotations

import math
import sys
from collections import deque
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from reliab.config import CapExceededError, subset_cap
from reliab.graph import (
    Edge,
    Graph,
    contract_edge,
    delete_edge,
    is_bridge,
    kappa,
    split_components,
)
from reliab.poly import UniPoly
from reliab.subsets import (
    connected_spanning_sum,
    kappa_profile,
    rank_nullity_counts,
    spanning_counts_by_size,
)
from reliab.transforms import stretch_shift, thicken_shift

Method = Literal["brute_force", "del_contr", "subset_dp"]
METHODS: tuple[str, ...] = ("brute_force", "del_contr", "subset_dp")


@dataclass(frozen=True)
class EvalStrategy:
    method: Method = "del_contr"
    sp_preprocess: bool = True

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; choose from {METHODS}")


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise ValueError("graph must be connected")


# -- brute force ---------------------------------------------------------------


def zrel_brute(g: Graph, cap: int | None = None) -> Fraction:
    _require_connected(g)
    return connected_spanning_sum(g, cap=cap)


def ztut_brute(g: Graph, q: Fraction | int, cap: int | None = None) -> Fraction:
    """Multivariate Tutte polynomial ``Z(G; q, w) = sum_A w(A) q^kappa(A)``."""
    q = Fraction(q)
    return sum((total * q**k for k, total in kappa_profile(g, cap=cap).items()), Fraction(0))


def tutte_brute(g: Graph, x: Fraction | int, y: Fraction | int, cap: int | None = None) -> Fraction:
    """Tutte polynomial from the rank-nullity expansion, with ``0**0 == 1``."""
    x, y = Fraction(x), Fraction(y)
    k_all = kappa(g)
    total = Fraction(0)
    for (k, size), count in rank_nullity_counts(g, cap=cap).items():
        total += count * (x - 1) ** (k - k_all) * (y - 1) ** (k + size - g.n)
    return total


def zrel_coeffs_direct(g: Graph, cap: int | None = None) -> UniPoly:
    """Coefficients of ``w -> Zrel(G; w)`` with unit edge weights, by subset counting."""
    _require_connected(g)
    counts = spanning_counts_by_size(g, cap=cap)
    return UniPoly([counts.get(j, 0) for j in range(g.m + 1)], "w")


# -- series-parallel reduction -------------------------------------------------------


def sp_reduce(g: Graph, keep: Sequence[int] = ()) -> tuple[Graph, Fraction]:
    """Collapse loops, parallel bundles and degree-2 vertices.

    Returns ``(reduced, factor)`` with ``Zrel(g) = factor * Zrel(reduced)``.
    Loops are removed with factor ``1 + w``, bundles merge into one edge, and a
    vertex of degree 2 (not in ``keep``) is suppressed with the path shift.
    A suppression whose shift is undefined (zero weight or zero reciprocal
    sum) is skipped. The vertex count never drops below 2; surviving vertices
    are renumbered in ascending order.
    """
    protected = set(keep)
    edges: dict[int, list] = {i: [e.u, e.v, e.w] for i, e in enumerate(g.edges)}
    adj: dict[int, set[int]] = {x: set() for x in range(g.n)}
    for i, (u, v, _) in edges.items():
        adj[u].add(i)
        adj[v].add(i)
    next_id = g.m
    alive = g.n
    factor = Fraction(1)
    work = deque(range(g.n))
    queued = set(work)

    def push(x: int) -> None:
        if x not in queued and x in adj:
            queued.add(x)
            work.append(x)

    def drop(i: int) -> None:
        u, v, _ = edges.pop(i)
        adj[u].discard(i)
        adj[v].discard(i)

    while work:
        x = work.popleft()
        queued.discard(x)
        if x not in adj:
            continue
        changed = False
        by_nbr: dict[int, list[int]] = {}
        for i in sorted(adj[x]):
            u, v, w = edges[i]
            if u == v:
                factor *= 1 + w
                drop(i)
                changed = True
            else:
                by_nbr.setdefault(v if u == x else u, []).append(i)
        for y, ids in by_nbr.items():
            if len(ids) > 1:
                merged = thicken_shift([edges[i][2] for i in ids]).new_weight
                edges[ids[0]][2] = merged
                for i in ids[1:]:
                    drop(i)
                push(y)
                changed = True
        if changed:
            push(x)
            continue
        if x in protected or alive <= 2 or len(adj[x]) != 2:
            continue
        i, j = sorted(adj[x])
        a = edges[i][1] if edges[i][0] == x else edges[i][0]
        b = edges[j][1] if edges[j][0] == x else edges[j][0]
        try:
            shift = stretch_shift([edges[i][2], edges[j][2]])
        except ValueError:
            continue
        drop(i)
        drop(j)
        del adj[x]
        alive -= 1
        factor *= shift.prefactor
        edges[next_id] = [a, b, shift.new_weight]
        adj[a].add(next_id)
        adj[b].add(next_id)
        next_id += 1
        push(a)
        push(b)

    index = {x: r for r, x in enumerate(sorted(adj))}
    reduced = tuple(Edge(index[u], index[v], w) for _, (u, v, w) in sorted(edges.items()))
    return Graph(len(index), reduced), factor


# -- deletion / contraction ---------------------------------------------------------------


def _pick_edge(g: Graph) -> tuple[int, bool]:
    """Highest-id loop first, then highest-id non-bridge, then highest-id bridge."""
    for i in range(g.m - 1, -1, -1):
        if g.edges[i].is_loop:
            return i, False
    for i in range(g.m - 1, -1, -1):
        if not is_bridge(g, i):
            return i, False
    return g.m - 1, True


def _znul_rec(g: Graph, q: Fraction, use_sp: bool) -> Fraction:
    # g is connected; Z0 of a disconnected graph is the product over its components.
    # use_sp only at q = 0: series suppression is a q = 0 identity.
    factor = Fraction(1)
    if use_sp and g.n >= 2:
        g, factor = sp_reduce(g)
    if g.m == 0:
        return factor if g.n == 1 else Fraction(0)
    e, bridge = _pick_edge(g)
    edge = g.edges[e]
    if edge.is_loop:
        return factor * (1 + edge.w) * _znul_rec(delete_edge(g, e), q, use_sp)
    contracted = edge.w * _znul_rec(contract_edge(g, e), q, use_sp)
    if bridge:
        if q == 0:
            return factor * contracted
        left, right = split_components(delete_edge(g, e))
        return factor * (q * _znul_rec(left, q, use_sp) * _znul_rec(right, q, use_sp) + contracted)
    return factor * (_znul_rec(delete_edge(g, e), q, use_sp) + contracted)


@contextmanager
def _recursion_room(m: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * m + 200))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def zrel_delcontr(g: Graph, use_sp: bool = False) -> Fraction:
    _require_connected(g)
    with _recursion_room(g.m):
        return _znul_rec(g, Fraction(0), use_sp)


def znul_delcontr(g: Graph, q: Fraction | int) -> Fraction:
    """``Z0(G; q, w) = Z(G; q, w) / q`` by deletion/contraction (``q = 0`` gives Zrel)."""
    _require_connected(g)
    with _recursion_room(g.m):
        return _znul_rec(g, Fraction(q), False)


# -- vertex-subset dynamic program ------------------------------------------------------------


def zrel_subsetdp(g: Graph, cap: int | None = None) -> Fraction:
    """Connected spanning weight via ``c(W) = f(W) - sum_U c(U) f(W \\ U)``.

    ``f(X)`` is the weight of all edge subsets inside ``X`` and ``U`` ranges
    over proper subsets of ``W`` containing vertex 0.
    """
    limit = subset_cap(cap)
    if g.n > limit:
        raise CapExceededError(f"subset DP is capped at {limit} vertices, graph has {g.n}")
    _require_connected(g)
    n = g.n
    if n == 1:
        return math.prod((1 + e.w for e in g.edges), start=Fraction(1))
    # per-vertex factor of edges to lower-numbered vertices (loops included)
    lower: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
    for e in g.edges:
        hi, lo = max(e.u, e.v), min(e.u, e.v)
        lower[hi].append((lo, 1 + e.w))
    f = [Fraction(1)] * (1 << n)
    for mask in range(1, 1 << n):
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        val = f[rest]
        for lo, t in lower[top]:
            if lo == top or rest >> lo & 1:
                val *= t
        f[mask] = val
    c: dict[int, Fraction] = {1: f[1]}
    others = (1 << n) - 2
    # masks containing vertex 0 in increasing order, so every proper submask is done
    for hi in range(1, (others >> 1) + 1):
        W = (hi << 1) | 1
        total = f[W]
        sub = (hi - 1) & hi
        while True:
            U = (sub << 1) | 1
            total -= c[U] * f[W ^ U]
            if sub == 0:
                break
            sub = (sub - 1) & hi
        c[W] = total
    return c[(1 << n) - 1]


# -- dispatch and derived quantities -------------------------------------------------------------


def zrel(g: Graph, strategy: EvalStrategy = EvalStrategy(), cap: int | None = None) -> Fraction:
    _require_connected(g)
    if strategy.method == "del_contr":
        return zrel_delcontr(g, use_sp=strategy.sp_preprocess)
    factor = Fraction(1)
    if strategy.sp_preprocess and g.n >= 2:
        g, factor = sp_reduce(g)
    if strategy.method == "brute_force":
        return factor * zrel_brute(g, cap=cap)
    return factor * zrel_subsetdp(g, cap=cap)


def znul(g: Graph, q: Fraction | int, strategy: EvalStrategy = EvalStrategy(), cap: int | None = None) -> Fraction:
    q = Fraction(q)
    if q == 0:
        return zrel(g, strategy, cap=cap)
    if strategy.method == "del_contr":
        return znul_delcontr(g, q)
    if strategy.method == "subset_dp":
        raise ValueError("subset DP only evaluates q = 0")
    return ztut_brute(g, q, cap=cap) / q


def _check_probability(p: Fraction) -> None:
    if not 0 <= p <= 1:
        raise ValueError(f"probability must lie in [0, 1], got {p}")


def rel_point(g: Graph, p: Fraction | int, strategy: EvalStrategy = EvalStrategy(), cap: int | None = None) -> Fraction:
    """All-terminal reliability with every edge failing independently with probability ``p``."""
    p = Fraction(p)
    _check_probability(p)
    _require_connected(g)
    if p == 0:
        return Fraction(1)
    if p == 1:
        return Fraction(1 if g.n == 1 else 0)
    return p**g.m * zrel(g.with_constant_weight(1 / p - 1), strategy, cap=cap)


def rel_individual(
    g: Graph,
    failure_probs: Sequence[Fraction | int],
    strategy: EvalStrategy = EvalStrategy(),
    cap: int | None = None,
) -> Fraction:
    """Reliability with a failure probability per edge.

    Edges that never fail are contracted, edges that always fail are
    deleted, and the rest becomes ``prod(p_e) * Zrel`` with weights
    ``(1 - p_e) / p_e``.
    """
    probs = [Fraction(p) for p in failure_probs]
    if len(probs) != g.m:
        raise ValueError(f"expected {g.m} probabilities, got {len(probs)}")
    for p in probs:
        _check_probability(p)
    _require_connected(g)
    h = g.with_weights(probs)
    # contract certain edges first, highest id first so earlier ids stay valid
    for i in range(h.m - 1, -1, -1):
        if h.edges[i].w == 0:
            h = contract_edge(h, i)
    h = Graph(h.n, tuple(e for e in h.edges if e.w != 1))
    if not h.is_connected():
        return Fraction(0)
    scale = math.prod((e.w for e in h.edges), start=Fraction(1))
    weighted = h.with_weights([(1 - e.w) / e.w for e in h.edges])
    return scale * zrel(weighted, strategy, cap=cap)


def count_connected_spanning(g: Graph, strategy: EvalStrategy = EvalStrategy(), cap: int | None = None) -> int:
    """Number of connected spanning edge subsets, i.e. ``2^m R(G; 1/2)``."""
    value = zrel(g.with_constant_weight(1), strategy, cap=cap)
    assert value.denominator == 1
    return int(value)


def spanning_trees(g: Graph) -> int:
    """Kirchhoff count: determinant of a reduced Laplacian by Bareiss elimination."""
    n = g.n
    if n <= 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for e in g.edges:
        if e.is_loop:
            continue
        lap[e.u][e.u] += 1
        lap[e.v][e.v] += 1
        lap[e.u][e.v] -= 1
        lap[e.v][e.u] -= 1
    a = [row[1:] for row in lap[1:]]
    size = n - 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[size - 1][size - 1]
