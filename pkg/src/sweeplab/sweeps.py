"""Sweep maps on words.

A sweep map labels every step of a word with a level and then writes the
letters out again, one level class at a time.  ``sweep_minus`` and
``sweep_plus`` are the two basic maps; the other six rows of the symmetry
table are composites with ``rev`` and are available through
:func:`sweep_variant`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError
from .paths import EN, WS, SweepParams, WeightLike, as_weights, check_word, levels, rev

LEFT = "left"  # scan each level class right-to-left
RIGHT = "right"  # scan each level class left-to-right
DECREASING = "decreasing"
INCREASING = "increasing"


def _classes(w: str, lv: list[int]) -> dict[int, list[int]]:
    by_level: dict[int, list[int]] = defaultdict(list)
    for i, k in enumerate(lv):
        by_level[k].append(i)
    return by_level


def sweep_order(w: str, params: WeightLike, plus: bool = False) -> list[int]:
    """Indices of the steps of ``w`` in the order ``sweep_minus`` (or ``sweep_plus``) emits them."""
    lv = levels(w, params)
    by_level = _classes(w, lv)
    realized = sorted(by_level, reverse=True)
    if plus:
        order = [k for k in realized if k <= 0] + [k for k in realized if k > 0]
        return [i for k in order for i in by_level[k]]
    order = [k for k in realized if k < 0] + [k for k in realized if k >= 0]
    return [i for k in order for i in reversed(by_level[k])]


def sweep_minus(w: str, params: WeightLike) -> str:
    """Negative-type sweep: levels -1, -2, ..., min, then max, ..., 1, 0; right to left."""
    return "".join(w[i] for i in sweep_order(w, params))


def sweep_plus(w: str, params: WeightLike) -> str:
    """Positive-type sweep: levels 0, -1, ..., min, then max, ..., 1; left to right."""
    return "".join(w[i] for i in sweep_order(w, params, plus=True))


def sweep_labels(w: str, params: WeightLike, plus: bool = False) -> list[int]:
    """EN level of each step of the sweep's output, i.e. the labels an inverse must recover."""
    lv = levels(w, params)
    return [lv[i] for i in sweep_order(w, params, plus)]


def directed_order(w: str, wt: WeightLike, conv: str, order: str, direction: str, start: int) -> list[int]:
    """Step indices in the order :func:`directed_sweep` emits them.

    Level classes are visited from ``start`` in the given ``order``, wrapping
    around once the extreme realized level is passed; classes without steps
    are skipped.
    """
    lv = levels(w, wt, conv)
    if order == DECREASING:
        def key(l):
            return (0, start - l) if l <= start else (1, -l)
    elif order == INCREASING:
        def key(l):
            return (0, l - start) if l >= start else (1, l)
    else:
        raise ValueError(f"unknown level order {order!r}")
    if direction not in (LEFT, RIGHT):
        raise ValueError(f"unknown scan direction {direction!r}")
    sign = -1 if direction == LEFT else 1
    return sorted(range(len(w)), key=lambda i: (key(lv[i]), sign * i))


def directed_sweep(w: str, wt: WeightLike, conv: str, order: str, direction: str, start: int) -> str:
    """Sweep described by its four table parameters (see :func:`directed_order`)."""
    return "".join(w[i] for i in directed_order(w, wt, conv, order, direction, start))


def sweep_general(w: str, wt: WeightLike) -> str:
    """Weighted sweep over an arbitrary alphabet (``wt`` maps letter -> integer)."""
    return directed_sweep(w, wt, EN, DECREASING, LEFT, -1)


@dataclass(frozen=True)
class SweepVariant:
    name: str
    convention: str
    order: str
    direction: str
    start: Callable[[int], int]  # total weight r*a + s*b -> start level
    composite: Callable[[str, WeightLike], str]


def _total(w: str, wt: WeightLike) -> int:
    weights = as_weights(wt)
    return sum(weights[c] for c in w)


VARIANTS: dict[str, SweepVariant] = {
    v.name: v
    for v in [
        SweepVariant("minus", EN, DECREASING, LEFT, lambda T: -1, sweep_minus),
        SweepVariant("plus", EN, DECREASING, RIGHT, lambda T: 0, sweep_plus),
        SweepVariant("rev-minus", EN, INCREASING, RIGHT, lambda T: 0,
                     lambda w, p: rev(sweep_minus(w, p))),
        SweepVariant("rev-plus", EN, INCREASING, LEFT, lambda T: 1,
                     lambda w, p: rev(sweep_plus(w, p))),
        SweepVariant("minus-rev", WS, INCREASING, RIGHT, lambda T: T + 1,
                     lambda w, p: sweep_minus(rev(w), p)),
        SweepVariant("plus-rev", WS, INCREASING, LEFT, lambda T: T,
                     lambda w, p: sweep_plus(rev(w), p)),
        SweepVariant("rev-minus-rev", WS, DECREASING, LEFT, lambda T: T,
                     lambda w, p: rev(sweep_minus(rev(w), p))),
        SweepVariant("rev-plus-rev", WS, DECREASING, RIGHT, lambda T: T - 1,
                     lambda w, p: rev(sweep_plus(rev(w), p))),
    ]
}


def sweep_variant(w: str, params: WeightLike, variant: str | SweepVariant) -> str:
    """Apply one of the eight table variants directly from its parameters."""
    v = VARIANTS[variant] if isinstance(variant, str) else variant
    return directed_sweep(w, params, v.convention, v.order, v.direction, v.start(_total(w, params)))


def variant_order(w: str, params: WeightLike, variant: str | SweepVariant) -> list[int]:
    v = VARIANTS[variant] if isinstance(variant, str) else variant
    return directed_order(w, params, v.convention, v.order, v.direction, v.start(_total(w, params)))


def sweep_variant_composite(w: str, params: WeightLike, variant: str) -> str:
    """Same map as :func:`sweep_variant`, computed as a composite with ``rev``."""
    return VARIANTS[variant].composite(w, params)


BELOW = "below"
ABOVE = "above"


def sweep_perturbed(w: str, params: SweepParams | tuple[int, int], side: str) -> str:
    """Sweep along a slope infinitesimally below or above ``-s/r``.

    Only the positive-slope regime ``r > 0 > s`` is accepted; the result is
    ``sweep_minus`` below the critical slope and ``sweep_plus`` above it.
    """
    r, s = params
    if not (r > 0 and s < 0):
        raise DomainError(f"perturbed sweeps need r > 0 > s, got ({r}, {s})")
    check_word(w)
    if side == BELOW:
        return sweep_minus(w, (r, s))
    if side == ABOVE:
        return sweep_plus(w, (r, s))
    raise ValueError(f"side must be {BELOW!r} or {ABOVE!r}")
