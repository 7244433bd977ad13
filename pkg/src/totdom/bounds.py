"""Integer recursions behind the greedy analysis and the resulting bounds.

``good_f`` models the greedy sweep on a k-regular side when every pick
covers exactly the average ``ceil(M/N)`` of the remaining neighborhoods;
``nice_f`` lets each pick cover more.  ``g_exact`` is the rational
relaxation whose value at ``(k, 1)`` is the per-vertex bound
``closed_bound(k)``.

All bound arithmetic is exact (:class:`fractions.Fraction`); floats only
appear in the ``approx`` view and in the logarithmic rival bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


class PreconditionViolated(ValueError):
    pass


class NegativeOffset(PreconditionViolated):
    pass


class KTooSmall(PreconditionViolated):
    pass


@dataclass(frozen=True)
class RecursionTrace:
    k: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def steps(self) -> int:
        return len(self.pairs) - 1

    def drops(self) -> list[int]:
        """``M_{i-1} - M_i`` for every step."""
        return [a[0] - b[0] for a, b in zip(self.pairs, self.pairs[1:])]


@dataclass(frozen=True)
class BoundValue:
    exact: Fraction

    @property
    def approx(self) -> float:
        return float(self.exact)

    def __mul__(self, n: int) -> Fraction:
        return self.exact * n

    __rmul__ = __mul__


def _check_order(m0: int, n0: int, k: int) -> None:
    if k <= 1:
        raise PreconditionViolated(f"order k must exceed 1, got {k}")
    if n0 < 1 or m0 < 0:
        raise PreconditionViolated(f"need M0 >= 0 and N0 >= 1, got M0={m0}, N0={n0}")
    if k > n0:
        raise PreconditionViolated(f"need k <= N0, got k={k}, N0={n0}")
    if m0 % k:
        raise PreconditionViolated(f"k={k} does not divide M0={m0}")


def _run(m: int, n: int, k: int, offsets: Sequence[int]) -> tuple[int, RecursionTrace]:
    pairs = [(m, n)]
    i = 0
    while m > 0 and n > 0:
        extra = offsets[i] if i < len(offsets) else 0
        m -= k * (-(-m // n) + extra)
        n -= 1
        i += 1
        pairs.append((m, n))
    return i, RecursionTrace(k, tuple(pairs))


def good_f(m0: int, n0: int, k: int) -> tuple[int, RecursionTrace]:
    """Steps of ``M <- M - k*ceil(M/N)``, ``N <- N - 1`` until ``M <= 0`` or ``N <= 0``."""
    _check_order(m0, n0, k)
    return _run(m0, n0, k, ())


def nice_f(m0: int, n0: int, k: int, xs: Sequence[int] = ()) -> tuple[int, RecursionTrace]:
    """As :func:`good_f`, but step ``i`` removes ``k*(ceil(M/N) + xs[i])``.

    Offsets beyond the end of ``xs`` are zero.
    """
    _check_order(m0, n0, k)
    if any(x < 0 for x in xs):
        raise NegativeOffset("offsets must be non-negative")
    return _run(m0, n0, k, xs)


def g_exact(a: int, b, k: int) -> Fraction:
    """Rational recursion ``g(a, b) = g(a-1, b - t) + t`` with ``t = b/(ak - a + 1)``.

    ``g(0, b) = 0``.  ``b`` may be an int, Fraction or decimal string.
    """
    if a < 0:
        raise PreconditionViolated(f"a must be non-negative, got {a}")
    if k <= 1:
        raise PreconditionViolated(f"k must exceed 1, got {k}")
    b = Fraction(b)
    total = Fraction(0)
    for level in range(a, 0, -1):
        t = b / (level * k - level + 1)
        total += t
        b -= t
    return total


def g_real(a: int, b, k: int) -> float:
    return float(g_exact(a, b, k))


@lru_cache(maxsize=None)
def closed_bound(k: int) -> BoundValue:
    """Per-vertex bound ``1 - k! / prod_{i=0}^{k-1} (k/(k-1) + i)``.

    Evaluated as ``1 - k! (k-1)^k / prod_{a=1}^{k} (a(k-1) + 1)`` so every
    intermediate is an integer.
    """
    if k < 2:
        raise KTooSmall(f"bound needs k >= 2, got {k}")
    den = math.prod(a * (k - 1) + 1 for a in range(1, k + 1))
    return BoundValue(1 - Fraction(math.factorial(k) * (k - 1) ** k, den))


def henning_bound(delta: int) -> float:
    """Per-vertex total domination bound ``(1 + ln d)/d``."""
    if delta < 2:
        raise PreconditionViolated(f"minimum degree must exceed 1, got {delta}")
    return (1 + math.log(delta)) / delta


def alon_bound(delta: int) -> float:
    """Per-vertex domination bound ``(1 + ln(d+1))/(d+1)``."""
    if delta < 2:
        raise PreconditionViolated(f"minimum degree must exceed 1, got {delta}")
    return (1 + math.log(delta + 1)) / (delta + 1)


@dataclass(frozen=True)
class ImprovementRow:
    k: int
    new_bound: BoundValue
    henning: float
    alon: float

    @property
    def margin(self) -> float:
        return self.henning - self.new_bound.approx


def improvement_report(k_max: int) -> list[ImprovementRow]:
    if k_max < 2:
        raise PreconditionViolated(f"k_max must be at least 2, got {k_max}")
    return [
        ImprovementRow(k, closed_bound(k), henning_bound(k), alon_bound(k))
        for k in range(2, k_max + 1)
    ]
