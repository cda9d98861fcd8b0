"""Resource caps for the exponential evaluators."""

from __future__ import annotations

import os
from dataclasses import dataclass

BRUTE_CAP_ENV = "RELIAB_BRUTE_CAP"


class CapExceededError(RuntimeError):
    """An input is larger than an evaluator is configured to handle."""


@dataclass(frozen=True)
class Caps:
    brute_edges: int = 24
    subset_vertices: int = 20


def default_caps() -> Caps:
    raw = os.environ.get(BRUTE_CAP_ENV)
    if raw is None:
        return Caps()
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{BRUTE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"{BRUTE_CAP_ENV} must be nonnegative")
    return Caps(brute_edges=cap)


def brute_cap(cap: int | None) -> int:
    return default_caps().brute_edges if cap is None else cap


def subset_cap(cap: int | None) -> int:
    return default_caps().subset_vertices if cap is None else cap
