"""Shared fixtures and a deliberately naive subset oracle.

The oracle loops over bitmasks and calls ``kappa`` per subset; it shares no
code with the recursive walker in ``reliab.subsets``.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from reliab.corpus import random_multigraph, small_connected_graphs
from reliab.graph import Graph, TwoTerminalGraph, component_labels, cycle_graph, complete_graph, kappa


def naive_sum(g: Graph, key):
    totals: dict = {}
    for mask in range(1 << g.m):
        subset = [i for i in range(g.m) if mask >> i & 1]
        k = key(subset)
        if k is None:
            continue
        w = Fraction(1)
        for i in subset:
            w *= g.edges[i].w
        totals[k] = totals.get(k, 0) + w
    return totals


def naive_zrel(g: Graph) -> Fraction:
    return naive_sum(g, lambda a: True if kappa(g, a) == 1 else None).get(True, Fraction(0))


def naive_ztut(g: Graph, q) -> Fraction:
    q = Fraction(q)
    return sum((v * q**k for k, v in naive_sum(g, lambda a: kappa(g, a)).items()), Fraction(0))


def naive_two_terminal(h: TwoTerminalGraph) -> tuple[Fraction, Fraction]:
    g = h.graph

    def key(a):
        k = kappa(g, a)
        if k == 1:
            return "conn"
        labels = component_labels(g.n, [(g.edges[i].u, g.edges[i].v) for i in a])
        if k == 2 and labels[h.s] != labels[h.t]:
            return "cut"
        return None

    t = naive_sum(g, key)
    return t["conn"] / t["cut"], t["cut"]


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture(scope="session")
def exhaustive_corpus() -> list[Graph]:
    return small_connected_graphs(5)


@pytest.fixture(scope="session")
def random_corpus() -> list[Graph]:
    rng = random.Random(20101213)
    return [random_multigraph(rng, max_n=6, max_m=9) for _ in range(50)]


# -- acceptance summary ----------------------------------------------------------------

_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "acceptance" not in report.keywords:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE.append((name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{outcome}  {name}")
