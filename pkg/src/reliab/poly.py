"""Univariate polynomials over the rationals.

Coefficients are stored lowest degree first. The variable tag (``"w"`` for
weight polynomials, ``"p"`` for reliability polynomials) is part of the value
so the two bases cannot be mixed by accident.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from reliab.graph import format_rational, parse_rational

VARIABLES = ("w", "p")


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class UniPoly:
    coeffs: tuple[Fraction, ...] = ()
    var: str = "w"

    def __post_init__(self) -> None:
        if self.var not in VARIABLES:
            raise ValueError(f"variable must be one of {VARIABLES}, got {self.var!r}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, k: int, coeff: Fraction | int = 1, var: str = "w") -> UniPoly:
        return cls((0,) * k + (coeff,), var)

    @classmethod
    def constant(cls, c: Fraction | int, var: str = "w") -> UniPoly:
        return cls((c,), var)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Fraction | int) -> Fraction:
        return poly_eval(self, x)

    def _same_var(self, other: UniPoly) -> None:
        if other.var != self.var:
            raise ValueError(f"cannot combine a polynomial in {self.var} with one in {other.var}")

    def __add__(self, other: UniPoly) -> UniPoly:
        self._same_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)], self.var)

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly | Fraction | int) -> UniPoly:
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs], self.var)
        self._same_var(other)
        if self.is_zero or other.is_zero:
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        out = UniPoly.constant(1, self.var)
        for _ in range(k):
            out = out * self
        return out

    def to_text(self) -> str:
        return " ".join(format_rational(c) for c in self.coeffs) if self.coeffs else "0"

    @classmethod
    def from_text(cls, text: str, var: str = "w") -> UniPoly:
        return cls([parse_rational(t) for t in text.split()], var)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                body = mono if mag == 1 else f"{format_rational(mag)}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_eval(f: UniPoly, x: Fraction | int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def lagrange_interpolate(points: Sequence[tuple[Fraction | int, Fraction | int]], var: str = "w") -> UniPoly:
    """The unique polynomial of degree < len(points) through ``points``."""
    if not points:
        raise ValueError("need at least one point")
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")
    # full node polynomial, then synthetic division per basis element
    node = UniPoly.constant(1, var)
    for x in xs:
        node = node * UniPoly((-x, 1), var)
    total = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                denom *= xi - xj
        scale = yi / denom
        # node / (x - xi), highest degree first
        quotient = [Fraction(0)] * len(xs)
        carry = Fraction(0)
        for k in range(len(node.coeffs) - 1, 0, -1):
            carry = node.coeffs[k] + carry * xi
            quotient[k - 1] = carry
        for k, q in enumerate(quotient):
            total[k] += scale * q
    return UniPoly(total, var)


def zpoly_to_relpoly(c: UniPoly, m: int) -> UniPoly:
    """Turn weight-polynomial coefficients into the reliability polynomial.

    Given ``Z(w) = sum_j c_j w^j`` for a graph with ``m`` edges, returns
    ``R(p) = sum_j c_j p^(m-j) (1-p)^j`` expanded in powers of ``p``.
    """
    if c.var != "w":
        raise ValueError("expected a polynomial in w")
    if c.degree is not None and c.degree > m:
        raise ValueError(f"degree {c.degree} exceeds edge count {m}")
    out = [Fraction(0)] * (m + 1)
    for j, cj in enumerate(c.coeffs):
        if cj == 0:
            continue
        # p^(m-j) * sum_i C(j,i) (-p)^i
        for i in range(j + 1):
            out[m - j + i] += cj * comb(j, i) * (-1) ** i
    return UniPoly(out, "p")
