"""Recovering reliability coefficients from evaluations at one fixed weight.

Given a black-box evaluator for ``Zrel(.; w)`` at a single weight ``w > 6``,
the coefficients of ``w -> Zrel(G; w)`` follow from ``m + 1`` bounce
inflations of ``G``: inflation by the bounce graph of ``S`` turns one
evaluation into a value of ``Zrel(G; w_S)``, the ``w_S`` are pairwise
distinct, and exact interpolation does the rest.

For ``0 < w <= 6`` the evaluator is first wrapped by :func:`lift_small_w`: a
gadget of ``k`` parallel two-edge paths turns evaluations at ``w`` into
evaluations at ``(1 + w/2)^k - 1 > 6``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any, NamedTuple

from reliab.config import brute_cap
from reliab.evaluators import EvalStrategy, sp_reduce, zrel, zrel_coeffs_direct
from reliab.graph import Edge, Graph, TwoTerminalGraph, format_rational
from reliab.poly import UniPoly, lagrange_interpolate, zpoly_to_relpoly
from reliab.transforms import (
    BounceSeq,
    ShiftResult,
    bounce_family,
    bounce_graph,
    bounce_shift,
    inflate,
    stretch_shift,
    thicken_shift,
)

ORDERING_THRESHOLD = 6


class RecoveryError(RuntimeError):
    """The interpolation points are unusable (repeated abscissae)."""


class Lift(NamedTuple):
    k: int
    w_lifted: Fraction
    gadget: TwoTerminalGraph


def lift_gadget(k: int, w: Fraction | int) -> TwoTerminalGraph:
    """``k`` parallel paths of two edges between terminals 0 and 1."""
    edges = []
    for i in range(k):
        mid = 2 + i
        edges += [Edge(0, mid, Fraction(w)), Edge(mid, 1, Fraction(w))]
    return TwoTerminalGraph(Graph(k + 2, tuple(edges)), 0, 1)


def lift_shift(k: int, w: Fraction | int) -> ShiftResult:
    path = stretch_shift([w, w])
    bundle = thicken_shift([path.new_weight] * k)
    return ShiftResult(bundle.new_weight, path.prefactor**k * bundle.prefactor)


def lift_small_w(w: Fraction | int) -> Lift:
    """Smallest ``k`` with ``(w/2 + 1)^k - 1 > 6`` and the matching gadget."""
    w = Fraction(w)
    if not 0 < w <= ORDERING_THRESHOLD:
        raise ValueError(f"lifting needs 0 < w <= {ORDERING_THRESHOLD}, got {w}")
    k = 1
    while (w / 2 + 1) ** k - 1 <= ORDERING_THRESHOLD:
        k += 1
    return Lift(k, (w / 2 + 1) ** k - 1, lift_gadget(k, w))


@dataclass(frozen=True)
class FixedWeightEvaluator:
    """Computes ``Zrel(H; w)`` for constant weight ``w`` on any graph ``H``.

    With a lift gadget, the graph actually evaluated is ``H`` inflated by the
    gadget at the raw weight, and the result is rescaled so that the
    evaluator answers at the lifted weight instead.
    """

    weight: Fraction
    strategy: EvalStrategy = EvalStrategy()
    lift: Lift | None = None

    @property
    def effective_weight(self) -> Fraction:
        return self.weight if self.lift is None else self.lift.w_lifted

    def instance(self, h: Graph) -> Graph:
        if self.lift is None:
            return h.with_constant_weight(self.weight)
        return inflate(h, self.lift.gadget)

    def prefactor(self, h: Graph) -> Fraction:
        if self.lift is None:
            return Fraction(1)
        return lift_shift(self.lift.k, self.weight).prefactor ** h.m

    def __call__(self, h: Graph) -> Fraction:
        return zrel(self.instance(h), self.strategy) / self.prefactor(h)


@dataclass
class SequenceRecord:
    sequence: BounceSeq
    w_S: Fraction
    C_S: Fraction
    inflated_n: int
    inflated_m: int
    instance_n: int
    instance_m: int
    value: Fraction
    point: Fraction
    collapsed_weights: tuple[Fraction, ...] | None = None
    collapse_ok: bool | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "sequence": str(self.sequence),
            "w_S": format_rational(self.w_S),
            "C_S": format_rational(self.C_S),
            "inflated_n": self.inflated_n,
            "inflated_m": self.inflated_m,
            "instance_n": self.instance_n,
            "instance_m": self.instance_m,
            "value": format_rational(self.value),
            "point": format_rational(self.point),
            "collapse_ok": self.collapse_ok,
        }


@dataclass
class RecoveryReport:
    graph_id: str
    n: int
    m: int
    weight: Fraction
    strategy: EvalStrategy
    records: list[SequenceRecord]
    recovered_w: UniPoly
    recovered_p: UniPoly
    direct_w: UniPoly | None
    abscissae_distinct: bool
    abscissae_decreasing: bool
    p: Fraction | None = None
    lift: Lift | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def interpolation_weight(self) -> Fraction:
        return self.weight if self.lift is None else self.lift.w_lifted

    @property
    def verdict(self) -> str:
        if self.direct_w is None:
            return "UNCHECKED"
        return "PASS" if self.recovered_w == self.direct_w else "FAIL"

    @property
    def collapse_ok(self) -> bool | None:
        flags = [r.collapse_ok for r in self.records]
        if any(f is None for f in flags):
            return None
        return all(flags)

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": {"id": self.graph_id, "n": self.n, "m": self.m},
            "p": None if self.p is None else format_rational(self.p),
            "fixed_weight": format_rational(self.weight),
            "lift": None
            if self.lift is None
            else {"k": self.lift.k, "w_lifted": format_rational(self.lift.w_lifted)},
            "interpolation_weight": format_rational(self.interpolation_weight),
            "strategy": {"method": self.strategy.method, "sp_preprocess": self.strategy.sp_preprocess},
            "sequences": [r.to_dict() for r in self.records],
            "abscissae_distinct": self.abscissae_distinct,
            "abscissae_decreasing": self.abscissae_decreasing,
            "collapse_ok": self.collapse_ok,
            "recovered_w": self.recovered_w.to_text(),
            "recovered_p": self.recovered_p.to_text(),
            "direct_w": None if self.direct_w is None else self.direct_w.to_text(),
            "verdict": self.verdict,
        }


def _check_input(g: Graph) -> None:
    if not g.is_simple():
        raise ValueError("input graph must be simple")
    if not g.is_connected():
        raise ValueError("input graph must be connected")
    if g.m < 1:
        raise ValueError("input graph needs at least one edge")


def evaluate_sequence(
    g: Graph, seq: BounceSeq, evaluator: FixedWeightEvaluator, check_collapse: bool = True
) -> SequenceRecord:
    """One interpolation point from one bounce inflation of ``g``."""
    w = evaluator.effective_weight
    inflated = inflate(g, bounce_graph(seq, w))
    inst = evaluator.instance(inflated)
    value = evaluator(inflated)
    shift = bounce_shift(seq, w)
    point = value / shift.prefactor**g.m
    rec = SequenceRecord(
        sequence=seq,
        w_S=shift.new_weight,
        C_S=shift.prefactor,
        inflated_n=inflated.n,
        inflated_m=inflated.m,
        instance_n=inst.n,
        instance_m=inst.m,
        value=value,
        point=point,
    )
    if check_collapse:
        reduced, factor = sp_reduce(inst, keep=range(g.n))
        rec.collapsed_weights = reduced.weights
        rec.collapse_ok = (
            reduced.n == g.n
            and reduced.topology() == g.topology()
            and all(x == shift.new_weight for x in reduced.weights)
            and factor == evaluator.prefactor(inflated) * shift.prefactor**g.m
        )
    return rec


def recover_zrel_coeffs(
    g: Graph,
    w: Fraction | int,
    strategy: EvalStrategy = EvalStrategy(),
    *,
    evaluator: FixedWeightEvaluator | None = None,
    check_collapse: bool = True,
    workers: int = 1,
    graph_id: str = "",
) -> RecoveryReport:
    """Coefficients of ``w -> Zrel(g; w)`` from evaluations at weight ``w`` only."""
    w = Fraction(w)
    _check_input(g)
    if evaluator is None:
        evaluator = FixedWeightEvaluator(w, strategy)
    elif evaluator.effective_weight != w:
        raise ValueError("evaluator answers at a different weight")
    if w <= ORDERING_THRESHOLD:
        raise ValueError(f"need w > {ORDERING_THRESHOLD}; lift small weights first")
    family = bounce_family(g.m)
    job = partial(evaluate_sequence, g, evaluator=evaluator, check_collapse=check_collapse)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(job, family))
    else:
        records = [job(seq) for seq in family]
    xs = [r.w_S for r in records]
    if len(set(xs)) != len(xs):
        raise RecoveryError("bounce weights repeat; interpolation impossible")
    decreasing = all(a > b for a, b in zip(xs, xs[1:]))
    recovered = lagrange_interpolate([(r.w_S, r.point) for r in records], "w")
    direct = zrel_coeffs_direct(g) if g.m <= brute_cap(None) else None
    return RecoveryReport(
        graph_id=graph_id,
        n=g.n,
        m=g.m,
        weight=evaluator.weight,
        strategy=evaluator.strategy,
        records=records,
        recovered_w=recovered,
        recovered_p=zpoly_to_relpoly(recovered, g.m),
        direct_w=direct,
        abscissae_distinct=True,
        abscissae_decreasing=decreasing,
        lift=evaluator.lift,
    )


def recover_rel_coeffs(
    g: Graph,
    p: Fraction | int,
    strategy: EvalStrategy = EvalStrategy(),
    *,
    check_collapse: bool = True,
    workers: int = 1,
    graph_id: str = "",
) -> RecoveryReport:
    """Reliability polynomial of ``g`` using only evaluations at failure probability ``p``."""
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError("need 0 < p < 1")
    w = 1 / p - 1
    lift = lift_small_w(w) if w <= ORDERING_THRESHOLD else None
    evaluator = FixedWeightEvaluator(w, strategy, lift)
    report = recover_zrel_coeffs(
        g,
        evaluator.effective_weight,
        strategy,
        evaluator=evaluator,
        check_collapse=check_collapse,
        workers=workers,
        graph_id=graph_id,
    )
    report.p = p
    return report
