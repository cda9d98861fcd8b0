"""Graph inflation gadgets and their weight shifts.

A two-terminal gadget ``H`` that replaces an edge of weight ``w'`` changes the
weighted reliability polynomial by an exact factor ``C``::

    Zrel(G with e replaced by H) = C * Zrel(G with w(e) = w')

:class:`ShiftResult` holds ``(w', C)``. Closed forms are provided for paths,
bundles and bounce graphs; :func:`two_terminal_shift` computes the pair for
any gadget by exhaustive enumeration and serves as the referee for the
closed forms.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from reliab.graph import Edge, Graph, TwoTerminalGraph, bundle_graph, path_graph
from reliab.subsets import two_terminal_sums


@dataclass(frozen=True, order=True)
class BounceSeq:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(s) for s in self.entries)
        if not entries:
            raise ValueError("a bounce sequence needs at least one entry")
        if any(s < 2 for s in entries):
            raise ValueError(f"bounce lengths must be >= 2, got {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> BounceSeq:
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad bounce sequence {text!r}: {exc}") from None

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def edge_count(self) -> int:
        return sum(i * s for i, s in enumerate(self.entries, 1))

    @property
    def vertex_count(self) -> int:
        return len(self.entries) + 1 + sum(i * (s - 1) for i, s in enumerate(self.entries, 1))

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


@dataclass(frozen=True)
class ShiftResult:
    new_weight: Fraction
    prefactor: Fraction


# -- gadgets ---------------------------------------------------------------------


def stretch_gadget(k: int, weight: Fraction | int = 1) -> TwoTerminalGraph:
    return TwoTerminalGraph(path_graph(k, weight), 0, k)


def thicken_gadget(k: int, weight: Fraction | int = 1) -> TwoTerminalGraph:
    return TwoTerminalGraph(bundle_graph(k, weight), 0, 1)


def bounce_graph(seq: BounceSeq, weight: Fraction | int = 1) -> TwoTerminalGraph:
    """Chain of bounces; bounce ``i`` is ``i`` parallel paths of length ``s_i``.

    Junctions are vertices ``0..k`` (terminals ``0`` and ``k``), internal path
    vertices follow.
    """
    k = len(seq)
    edges: list[Edge] = []
    nxt = k + 1
    w = Fraction(weight)
    for i, s in enumerate(seq, 1):
        left, right = i - 1, i
        for _ in range(i):
            prev = left
            for _ in range(s - 1):
                edges.append(Edge(prev, nxt, w))
                prev = nxt
                nxt += 1
            edges.append(Edge(prev, right, w))
    return TwoTerminalGraph(Graph(nxt, tuple(edges)), 0, k)


def inflate(g: Graph, h: TwoTerminalGraph, *, flip: bool = False) -> Graph:
    """Replace every edge of ``g`` by a fresh copy of ``h``.

    Terminal ``s`` goes to the smaller endpoint (the larger one with
    ``flip``). The vertices of ``g`` keep their ids; the inner vertices of
    copy ``j`` come after, in copy order. Weights come from ``h``.
    """
    hg = h.graph
    inner = [x for x in range(hg.n) if x not in (h.s, h.t)]
    per_copy = len(inner)
    edges: list[Edge] = []
    for j, e in enumerate(g.edges):
        a, b = min(e.u, e.v), max(e.u, e.v)
        if flip:
            a, b = b, a
        place = {h.s: a, h.t: b}
        base = g.n + j * per_copy
        for r, x in enumerate(inner):
            place[x] = base + r
        edges.extend(Edge(place[f.u], place[f.v], f.w) for f in hg.edges)
    return Graph(g.n + g.m * per_copy, tuple(edges))


# -- closed-form shifts ------------------------------------------------------------


def stretch_shift(weights: Sequence[Fraction | int]) -> ShiftResult:
    """Path of edges ``w_1..w_k``: ``1/w' = sum 1/w_i`` and ``C = prod(w_i) / w'``."""
    ws = [Fraction(w) for w in weights]
    if not ws:
        raise ValueError("empty path")
    if any(w == 0 for w in ws):
        raise ValueError("path weights must be nonzero")
    recip = sum(1 / w for w in ws)
    if recip == 0:
        raise ValueError("reciprocal weights sum to zero; the path has no equivalent edge")
    return ShiftResult(1 / recip, recip * math.prod(ws))


def thicken_shift(weights: Sequence[Fraction | int]) -> ShiftResult:
    """Bundle of parallel edges: ``w' = prod(1 + w_i) - 1``, no prefactor."""
    ws = [Fraction(w) for w in weights]
    if not ws:
        raise ValueError("empty bundle")
    return ShiftResult(math.prod(1 + w for w in ws) - 1, Fraction(1))


def bounce_shift(seq: BounceSeq, w: Fraction | int) -> ShiftResult:
    """Weight shift of a bounce graph with every edge at weight ``w > 0``.

    ``1/w_S = sum_i 1/((1 + w/s_i)^i - 1)`` and
    ``C_S = (1/w_S) * prod_i w^((s_i - 1) i) ((w + s_i)^i - s_i^i)``.
    """
    w = Fraction(w)
    if w <= 0:
        raise ValueError("bounce shift needs w > 0")
    recip = sum(1 / ((1 + w / s) ** i - 1) for i, s in enumerate(seq, 1))
    prod = math.prod(w ** ((s - 1) * i) * ((w + s) ** i - Fraction(s) ** i) for i, s in enumerate(seq, 1))
    return ShiftResult(1 / recip, recip * prod)


def bounce_shift_composed(seq: BounceSeq, w: Fraction | int) -> ShiftResult:
    """Same shift obtained by chaining path and bundle shifts bounce by bounce."""
    w = Fraction(w)
    factor = Fraction(1)
    rungs = []
    for i, s in enumerate(seq, 1):
        path = stretch_shift([w] * s)
        bundle = thicken_shift([path.new_weight] * i)
        factor *= path.prefactor**i * bundle.prefactor
        rungs.append(bundle.new_weight)
    chain = stretch_shift(rungs)
    return ShiftResult(chain.new_weight, factor * chain.prefactor)


def two_terminal_shift(h: TwoTerminalGraph, cap: int | None = None) -> ShiftResult:
    """Shift of an arbitrary gadget by enumerating its edge subsets.

    With ``conn`` the weight of spanning connected subsets and ``cut`` the
    weight of two-component subsets separating the terminals, the gadget
    acts as an edge of weight ``conn/cut`` with prefactor ``cut``.
    """
    conn, cut = two_terminal_sums(h.graph, h.s, h.t, cap=cap)
    if cut == 0:
        raise ValueError("gadget has no terminal-separating spanning forest; shift undefined")
    return ShiftResult(conn / cut, cut)


# -- bounce families -----------------------------------------------------------------


def family_length(m: int) -> int:
    """Smallest ``l`` with ``2**l >= m + 1``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return max(1, (m).bit_length())


def bounce_family(m: int) -> list[BounceSeq]:
    """The lexicographically first ``m + 1`` sequences over ``{2, 3}`` of length ``ceil(log2(m + 1))``."""
    l = family_length(m)
    family = [BounceSeq(t) for t in itertools.islice(itertools.product((2, 3), repeat=l), m + 1)]
    bound = 3 * l * (l + 1) // 2
    assert all(s.edge_count <= bound for s in family)
    return family


# -- general q ---------------------------------------------------------------------------


def mv_parallel_shift(q: Fraction | int, weights: Sequence[Fraction | int]) -> ShiftResult:
    """Bundle under the multivariate polynomial: ``1 + w' = prod(1 + w_i)`` for every ``q``."""
    del q  # a bundle adds no vertices, so q never enters
    return thicken_shift(weights)


def mv_series_shift(q: Fraction | int, weights: Sequence[Fraction | int]) -> ShiftResult:
    """Path under the multivariate polynomial.

    ``q/w' = prod(1 + q/w_i) - 1`` and ``C = (prod(w_i + q) - prod(w_i)) / q``,
    the total weight of path subsets that leave the ends unjoined. ``q = 0``
    falls back to :func:`stretch_shift`.
    """
    q = Fraction(q)
    ws = [Fraction(w) for w in weights]
    if q == 0:
        return stretch_shift(ws)
    if not ws:
        raise ValueError("empty path")
    if any(w == 0 for w in ws):
        raise ValueError("path weights must be nonzero")
    ratio = math.prod(1 + q / w for w in ws) - 1
    if ratio == 0:
        raise ValueError("series shift undefined: prod(1 + q/w_i) = 1")
    return ShiftResult(q / ratio, (math.prod(w + q for w in ws) - math.prod(ws)) / q)


@dataclass(frozen=True)
class MvBounceShift:
    new_weight: Fraction
    prefactor: Fraction
    closed_form_weight: Fraction | None
    closed_form_agrees: bool


def mv_bounce_closed_form(seq: BounceSeq, q: Fraction | int, w: Fraction | int) -> Fraction:
    """The printed product formula ``q/w_S = prod_i (q / ((q/r_i + 1)^i - 1) - 1)``, ``r_i = (1 + q/w)^s_i - 1``."""
    q, w = Fraction(q), Fraction(w)
    prod = Fraction(1)
    for i, s in enumerate(seq, 1):
        r = (1 + q / w) ** s - 1
        prod *= q / ((q / r + 1) ** i - 1) - 1
    return q / prod


def mv_bounce_shift(seq: BounceSeq, q: Fraction | int, w: Fraction | int) -> MvBounceShift:
    """Bounce-graph shift for the multivariate polynomial at ``q``.

    The value is obtained by composing :func:`mv_series_shift` and
    :func:`mv_parallel_shift`. The closed product form is evaluated alongside
    and ``closed_form_agrees`` records whether it matches.
    """
    q, w = Fraction(q), Fraction(w)
    if w == 0 or q == 0 or q == -2 * w:
        raise ValueError("need w != 0 and q not in {0, -2w}")
    factor = Fraction(1)
    rungs = []
    for i, s in enumerate(seq, 1):
        path = mv_series_shift(q, [w] * s)
        bundle = mv_parallel_shift(q, [path.new_weight] * i)
        factor *= path.prefactor**i * bundle.prefactor
        rungs.append(bundle.new_weight)
    chain = mv_series_shift(q, rungs)
    try:
        closed = mv_bounce_closed_form(seq, q, w)
    except ZeroDivisionError:
        closed = None
    return MvBounceShift(chain.new_weight, factor * chain.prefactor, closed, closed == chain.new_weight)
