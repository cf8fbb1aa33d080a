"""Sweep maps on lattice words, the classical bijections they unify,
bounce-path inverses, and the q,t-statistics built on them."""

from .errors import (
    AlphabetError, BudgetError, DomainError, LevelOverflowError, NotInImageError, ParameterError,
    ShapeError, SweepLabError,
)
from .paths import (
    EN, WS, RectShape, SweepParams, enumerate_dyck, enumerate_multiset, enumerate_words, flip,
    is_dyck, levels, mkptn, mkwd, rev,
)
from .sweeps import (
    VARIANTS, sweep_general, sweep_labels, sweep_minus, sweep_perturbed, sweep_plus, sweep_variant,
)
from .inversion import brute_force_inverse, replay, replay_inverse
from .polys import LaurentPoly2, q_binomial, q_int
from .stats import area, dinv, qt_catalan, qt_square

__version__ = "0.1.0"

__all__ = [
    "AlphabetError", "BudgetError", "DomainError", "LevelOverflowError", "NotInImageError",
    "ParameterError", "ShapeError", "SweepLabError", "EN", "WS", "RectShape", "SweepParams",
    "enumerate_dyck", "enumerate_multiset", "enumerate_words", "flip", "is_dyck", "levels", "mkptn",
    "mkwd", "rev", "VARIANTS", "sweep_general", "sweep_labels", "sweep_minus", "sweep_perturbed",
    "sweep_plus", "sweep_variant", "brute_force_inverse", "replay", "replay_inverse", "LaurentPoly2",
    "q_binomial", "q_int", "area", "dinv", "qt_catalan", "qt_square",
]
