"""Fit constants for maximal-independent-set counts and the resulting work bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from listcolor.graph import Graph, is_triangle_free
from listcolor.mis import count_mis_all_subsets

# Printed decimals, not the exact roots: 1.44225**3 > 3 and 1.41422**2 > 2.
T_GENERAL = 1.44225
T_TRIANGLE_FREE = 1.41422

EMPIRICAL_MAX_N = 12


@dataclass(frozen=True)
class FitReport:
    t: float
    rule: str  # "general", "triangle-free" or "empirical"
    n: int
    predicted_work: float


def predicted_work(n: int, t: float) -> float:
    """``(1 + t)**n - 1``, the binomially summed count of (subset, MIS) pairs."""
    if n < 0 or t <= 0:
        raise ValueError("need n >= 0 and t > 0")
    return (1.0 + t) ** n - 1.0


def binomial_work(n: int, t: float) -> float:
    """The same quantity summed term by term over nonempty subset sizes."""
    return math.fsum(math.comb(n, m) * t**m for m in range(1, n + 1))


def fit_constant(g: Graph) -> FitReport:
    if is_triangle_free(g):
        t, rule = T_TRIANGLE_FREE, "triangle-free"
    else:
        t, rule = T_GENERAL, "general"
    return FitReport(t, rule, g.n, predicted_work(g.n, t))


def verify_fit_empirical(g: Graph, t: float | Fraction, max_n: int = EMPIRICAL_MAX_N) -> bool:
    """True iff every induced subgraph on ``m`` vertices has at most ``t**m`` maximal independent sets.

    Floats are converted to their exact binary value and compared with rational
    arithmetic, so there is no slack in either direction.
    """
    if g.n > max_n:
        raise ValueError(f"exhaustive fit check refused for n={g.n} > {max_n}")
    exact = Fraction(t)
    counts = count_mis_all_subsets(g)
    worst: dict[int, int] = {}
    for mask in range(1, 1 << g.n):
        m = mask.bit_count()
        worst[m] = max(worst.get(m, 0), int(counts[mask]))
    return all(c <= exact**m for m, c in worst.items())
