"""Undirected weighted multigraphs, connectivity queries and the text graph format.

File format::

    # comment
    n m
    u v            (weight 1)
    u v a/b        (rational weight)

Vertices are dense ids ``0..n-1``. Loops and parallel edges are allowed and
edge identity is the position in the edge list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

_RATIONAL = re.compile(r"^-?\d+(?:/\d+)?$")


class GraphFormatError(ValueError):
    """Malformed graph text."""


class Edge(NamedTuple):
    u: int
    v: int
    w: Fraction

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


def parse_rational(text: str) -> Fraction:
    """Parse ``a`` or ``a/b`` into a reduced Fraction; anything else is rejected."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"not a rational of the form a or a/b: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        clean = []
        for i, e in enumerate(self.edges):
            u, v, *rest = e
            w = Fraction(rest[0]) if rest else Fraction(1)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {i} ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            clean.append(Edge(int(u), int(v), w))
        object.__setattr__(self, "edges", tuple(clean))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence], weight: Fraction | int = 1) -> Graph:
        """Build from ``(u, v)`` or ``(u, v, w)`` items; bare pairs get ``weight``."""
        edges = []
        for p in pairs:
            if len(p) == 2:
                edges.append(Edge(p[0], p[1], Fraction(weight)))
            else:
                edges.append(Edge(p[0], p[1], Fraction(p[2])))
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(e.w for e in self.edges)

    def with_weights(self, weights: Sequence[Fraction | int]) -> Graph:
        if len(weights) != self.m:
            raise ValueError(f"expected {self.m} weights, got {len(weights)}")
        return Graph(self.n, tuple(Edge(e.u, e.v, Fraction(w)) for e, w in zip(self.edges, weights)))

    def with_constant_weight(self, w: Fraction | int) -> Graph:
        return self.with_weights([w] * self.m)

    def is_simple(self) -> bool:
        seen = set()
        for e in self.edges:
            if e.is_loop:
                return False
            key = (min(e.u, e.v), max(e.u, e.v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_connected(self) -> bool:
        return self.n <= 1 or kappa(self) == 1

    def topology(self) -> list[tuple[int, int]]:
        """Sorted endpoint pairs, ignoring weights and edge order."""
        return sorted((min(e.u, e.v), max(e.u, e.v)) for e in self.edges)

    def __str__(self) -> str:
        return serialize_graph(self)


@dataclass(frozen=True)
class TwoTerminalGraph:
    graph: Graph
    s: int
    t: int

    def __post_init__(self) -> None:
        g = self.graph
        if not (0 <= self.s < g.n and 0 <= self.t < g.n):
            raise ValueError("terminals must be vertices of the graph")
        if self.s == self.t:
            raise ValueError("terminals must be distinct")
        if not g.is_connected():
            raise ValueError("a two-terminal gadget must be connected")

    def flipped(self) -> TwoTerminalGraph:
        return TwoTerminalGraph(self.graph, self.t, self.s)


# -- text format --------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    lines = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line.split()))
    if not lines:
        raise GraphFormatError("empty graph text: expected header line 'n m'")
    lineno, header = lines[0]
    if len(header) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: header values must be integers") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative count in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, parts in body:
        if len(parts) not in (2, 3):
            raise GraphFormatError(f"line {lineno}: expected 'u v' or 'u v a/b', got {' '.join(parts)!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: vertex ids must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        try:
            w = parse_rational(parts[2]) if len(parts) == 3 else Fraction(1)
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
        edges.append(Edge(u, v, w))
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    for e in g.edges:
        if e.w == 1:
            out.append(f"{e.u} {e.v}")
        else:
            out.append(f"{e.u} {e.v} {e.w.numerator}/{e.w.denominator}")
    return "\n".join(out) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- connectivity ---------------------------------------------------------------


def _check_edge(g: Graph, e: int) -> None:
    if not 0 <= e < g.m:
        raise IndexError(f"edge id {e} out of range 0..{g.m - 1}")


def component_labels(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    """Root label of every vertex under the given edges."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return [find(x) for x in range(n)]


def kappa(g: Graph, edge_subset: Iterable[int] | None = None) -> int:
    """Number of connected components of ``(V, A)``; ``A`` defaults to all edges."""
    if edge_subset is None:
        ids: Iterable[int] = range(g.m)
    else:
        ids = list(edge_subset)
        for e in ids:
            _check_edge(g, e)
    labels = component_labels(g.n, ((g.edges[e].u, g.edges[e].v) for e in ids))
    return len(set(labels))


def is_bridge(g: Graph, e: int) -> bool:
    _check_edge(g, e)
    if g.edges[e].is_loop:
        return False
    return kappa(g, (i for i in range(g.m) if i != e)) > kappa(g)


def delete_edge(g: Graph, e: int) -> Graph:
    _check_edge(g, e)
    return Graph(g.n, g.edges[:e] + g.edges[e + 1:])


def contract_edge(g: Graph, e: int) -> Graph:
    """Identify the endpoints of ``e`` and drop it.

    The merged vertex takes the smaller id and the remaining ids are
    renumbered in ascending order. Contracting a loop just deletes it.
    """
    _check_edge(g, e)
    edge = g.edges[e]
    if edge.is_loop:
        return delete_edge(g, e)
    keep, gone = min(edge.u, edge.v), max(edge.u, edge.v)

    def relabel(x: int) -> int:
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    rest = [Edge(relabel(f.u), relabel(f.v), f.w) for i, f in enumerate(g.edges) if i != e]
    return Graph(g.n - 1, tuple(rest))


def split_components(g: Graph) -> list[Graph]:
    """Connected components as separate graphs, ordered by smallest vertex id."""
    labels = component_labels(g.n, ((e.u, e.v) for e in g.edges))
    roots = sorted(set(labels))
    parts = []
    for r in roots:
        verts = [x for x in range(g.n) if labels[x] == r]
        index = {x: i for i, x in enumerate(verts)}
        es = tuple(Edge(index[e.u], index[e.v], e.w) for e in g.edges if labels[e.u] == r)
        parts.append(Graph(len(verts), es))
    return parts


def induced_renumbering(g: Graph, alive: Sequence[int], edges: Iterable[Edge]) -> Graph:
    """Graph on the ``alive`` vertices (renumbered ascending) with ``edges`` in old ids."""
    index = {x: i for i, x in enumerate(sorted(alive))}
    return Graph(len(index), tuple(Edge(index[e.u], index[e.v], e.w) for e in edges))


# -- small named graphs ----------------------------------------------------------


def path_graph(k: int, weight: Fraction | int = 1) -> Graph:
    """Path with ``k`` edges on vertices 0..k."""
    return Graph.from_edges(k + 1, [(i, i + 1) for i in range(k)], weight)


def cycle_graph(n: int, weight: Fraction | int = 1) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], weight)


def complete_graph(n: int, weight: Fraction | int = 1) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], weight)


def star_graph(leaves: int, weight: Fraction | int = 1) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], weight)


def bundle_graph(k: int, weight: Fraction | int = 1) -> Graph:
    """Two vertices joined by ``k`` parallel edges."""
    return Graph.from_edges(2, [(0, 1)] * k, weight)
