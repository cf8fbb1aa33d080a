"""Path statistics and the q,t-polynomials built from them."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from .errors import BudgetError, DomainError
from .inversion import DEFAULT_BUDGET
from .paths import (
    RectShape, SweepParams, WeightLike, as_weights, check_word, enumerate_dyck, enumerate_words,
    is_dyck, point_levels, rev,
)
from .polys import LaurentPoly2
from .sweeps import sweep_minus, sweep_plus

MINUS = "minus"
PLUS_REV = "plus-rev"


def area(w: str) -> int:
    """Number of pairs i < j with w_i = E and w_j = N."""
    check_word(w)
    east = total = 0
    for c in w:
        if c == "E":
            east += 1
        else:
            total += east
    return total


def ml(w: str, params: WeightLike) -> int:
    """Minimum of the EN point levels l_0, l_1, ..., l_n."""
    return min(point_levels(w, params))


def area_star(w: str, params: WeightLike) -> int:
    return area(w) + ml(w, params)


def _classical_area_vector(w: str) -> list[int]:
    check_word(w)
    n = w.count("N")
    if w.count("E") != n or not is_dyck(w, (1, -1)):
        raise DomainError(f"{w!r} is not a classical Dyck word")
    g, x, i = [], 0, 0
    for c in w:
        if c == "E":
            x += 1
        else:
            g.append(i - x)
            i += 1
    return g


def Area(w: str) -> int:
    """Number of whole squares between a classical Dyck path and y = x."""
    return sum(_classical_area_vector(w))


def dinv(w: str) -> int:
    g = _classical_area_vector(w)
    return sum(1 for i in range(len(g)) for j in range(i + 1, len(g)) if g[i] - g[j] in (0, 1))


@dataclass(frozen=True)
class StatBundle:
    area: int
    ml: int
    area_star: int
    Area: Optional[int] = None
    dinv: Optional[int] = None


def stat_bundle(w: str, params: WeightLike = (1, -1)) -> StatBundle:
    a, m = area(w), ml(w, params)
    try:
        g = _classical_area_vector(w)
    except DomainError:
        return StatBundle(a, m, a + m)
    return StatBundle(a, m, a + m, sum(g), dinv(w))


def _pairing(pairing: str) -> Callable[[str, WeightLike], str]:
    if pairing == MINUS:
        return sweep_minus
    if pairing == PLUS_REV:
        return lambda w, p: sweep_plus(rev(w), p)
    raise ValueError(f"pairing must be {MINUS!r} or {PLUS_REV!r}, got {pairing!r}")


def _guard(size: int, budget: int) -> None:
    if size > budget:
        raise BudgetError(f"{size} words exceed the budget of {budget}")


def qt_catalan(params: WeightLike, shape: RectShape | tuple[int, int], pairing: str = MINUS,
               budget: int = DEFAULT_BUDGET) -> LaurentPoly2:
    """C_{r,s,a,b}(q,t): sum over (r,s)-Dyck words in W(N^a E^b) of q^area(w) t^area(sweep(w)).

    ``pairing="plus-rev"`` pairs w with sweep_plus(rev(w)) instead, the
    convention of the rational q,t-Catalan literature.
    """
    a, b = shape
    _guard(comb(a + b, a), budget)
    sw = _pairing(pairing)
    wt = as_weights(params)
    return LaurentPoly2.from_counts((area(w), area(sw(w, wt))) for w in enumerate_dyck(a, b, wt))


def hl_catalan(n: int, budget: int = DEFAULT_BUDGET) -> LaurentPoly2:
    """Garsia-Haiman C_n(q,t) from the (Area, dinv) pair."""
    _guard(comb(2 * n, n), budget)
    return LaurentPoly2.from_counts((Area(w), dinv(w)) for w in enumerate_dyck(n, n, (1, -1)))


def qt_square(shape: RectShape | tuple[int, int], budget: int = DEFAULT_BUDGET) -> LaurentPoly2:
    """S_{a,b}(q,t) over all of W(N^a E^b) with (r, s) = (b, -a)."""
    a, b = shape
    _guard(comb(a + b, a), budget)
    p = SweepParams(b, -a)
    return LaurentPoly2.from_counts(
        (area_star(w, p), area_star(sweep_minus(w, p), p)) for w in enumerate_words(a, b)
    )
