"""Exact bivariate Laurent polynomials in q and t, and the usual q-analogues."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, Mapping, Tuple

from .errors import ParameterError

Exponent = Tuple[int, int]
EXP_LIMIT = 2**48


def _check_exp(e: Exponent) -> Exponent:
    i, j = e
    if abs(i) > EXP_LIMIT or abs(j) > EXP_LIMIT:
        raise OverflowError(f"exponent {e} exceeds the +/-2^48 guard")
    return (int(i), int(j))


class LaurentPoly2:
    """Finite sum of ``c * q^i * t^j`` with integer coefficients; zero terms are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        acc: dict[Exponent, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[_check_exp(e)] += int(c)
        self._terms = {e: c for e, c in acc.items() if c}

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, c: int = 1) -> "LaurentPoly2":
        return cls({(i, j): c})

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls.const(1)

    @classmethod
    def from_counts(cls, pairs: Iterable[Exponent]) -> "LaurentPoly2":
        """Generating function of a multiset of exponent pairs."""
        return cls((e, 1) for e in pairs)

    # -- container protocol -------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, e: Exponent) -> int:
        return self._terms.get(tuple(e), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _lift(x) -> "LaurentPoly2":
        if isinstance(x, LaurentPoly2):
            return x
        if isinstance(x, int):
            return LaurentPoly2.const(x)
        raise TypeError(f"cannot combine LaurentPoly2 with {type(x).__name__}")

    def __add__(self, other) -> "LaurentPoly2":
        other = self._lift(other)
        return LaurentPoly2(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly2":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "LaurentPoly2":
        return self._lift(other) - self

    def __mul__(self, other) -> "LaurentPoly2":
        other = self._lift(other)
        acc: dict[Exponent, int] = defaultdict(int)
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                acc[(i1 + i2, j1 + j2)] += c1 * c2
        return LaurentPoly2(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly2":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (i, j), c = next(iter(self._terms.items()))
            if c not in (1, -1):
                raise ValueError("inverse of a monomial needs a unit coefficient")
            kk = -k
            return LaurentPoly2({(-i * kk, -j * kk): c**kk})  # 1/c == c for units
        out = LaurentPoly2.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, di: int = 0, dj: int = 0) -> "LaurentPoly2":
        """Multiply by ``q^di * t^dj``."""
        return LaurentPoly2({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    # -- substitutions ------------------------------------------------------
    def swap(self) -> "LaurentPoly2":
        """q <-> t."""
        return LaurentPoly2({(j, i): c for (i, j), c in self._terms.items()})

    def invert_q(self) -> "LaurentPoly2":
        return LaurentPoly2({(-i, j): c for (i, j), c in self._terms.items()})

    def invert_t(self) -> "LaurentPoly2":
        return LaurentPoly2({(i, -j): c for (i, j), c in self._terms.items()})

    def t_to_inv_q(self) -> "LaurentPoly2":
        """Substitute t = 1/q; the result is univariate in q."""
        return LaurentPoly2(((i - j, 0), c) for (i, j), c in self._terms.items())

    def q_to_power(self, k: int) -> "LaurentPoly2":
        """Substitute q -> q^k."""
        return LaurentPoly2({(i * k, j): c for (i, j), c in self._terms.items()})

    def at_t1(self) -> "LaurentPoly2":
        return LaurentPoly2(((i, 0), c) for (i, j), c in self._terms.items())

    def at_q1(self) -> "LaurentPoly2":
        return LaurentPoly2(((0, j), c) for (i, j), c in self._terms.items())

    def evaluate(self, q: int = 1, t: int = 1):
        """Value at integer (or Fraction) arguments."""
        return sum(c * q**i * t**j for (i, j), c in self._terms.items())

    def is_symmetric(self) -> bool:
        return self == self.swap()

    # -- univariate helpers -------------------------------------------------
    def is_univariate(self) -> bool:
        return all(j == 0 for _, j in self._terms)

    def q_coefficients(self) -> list[int]:
        """Dense coefficient list of a polynomial in q alone (nonnegative exponents)."""
        if not self._terms:
            return []
        if not self.is_univariate() or min(i for i, _ in self._terms) < 0:
            raise ValueError("not a polynomial in q")
        top = max(i for i, _ in self._terms)
        return [self._terms.get((i, 0), 0) for i in range(top + 1)]

    @classmethod
    def from_q_coefficients(cls, coeffs: Iterable[int]) -> "LaurentPoly2":
        return cls(((i, 0), c) for i, c in enumerate(coeffs))

    def exact_div_q(self, other: "LaurentPoly2") -> "LaurentPoly2":
        """Exact quotient of two polynomials in q; raises if there is a remainder."""
        num = self.q_coefficients()
        den = other.q_coefficients()
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        while den and den[-1] == 0:
            den.pop()
        lead = den[-1]
        quot = [0] * max(len(num) - len(den) + 1, 0)
        rem = list(num)
        for k in range(len(quot) - 1, -1, -1):
            c, r = divmod(rem[k + len(den) - 1], lead)
            if r:
                raise ValueError("division is not exact")
            quot[k] = c
            for d, dc in enumerate(den):
                rem[k + d] -= c * dc
        if any(rem):
            raise ValueError("division is not exact")
        return LaurentPoly2.from_q_coefficients(quot)

    # -- formatting ---------------------------------------------------------
    def format(self) -> str:
        """Canonical text: terms by ascending (q, t) exponent, explicit signs."""
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items()):
            s = f"{c:+d}"
            if i:
                s += f"*q^{i}"
            if j:
                s += f"*t^{j}"
            parts.append(s)
        return "".join(parts)

    __str__ = format

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.format()!r})"

    def to_json(self) -> dict:
        return {"terms": [{"q": i, "t": j, "c": c} for (i, j), c in sorted(self._terms.items())]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly2":
        return cls(((int(d["q"]), int(d["t"])), int(d["c"])) for d in data["terms"])

    def to_csv_rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, c) for (i, j), c in sorted(self._terms.items())]


Q = LaurentPoly2.monomial(1, 0)
T = LaurentPoly2.monomial(0, 1)


def q_int(n: int) -> LaurentPoly2:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ParameterError(f"[n]_q needs n >= 0, got {n}")
    return LaurentPoly2.from_q_coefficients([1] * n)


def q_factorial(n: int) -> LaurentPoly2:
    out = LaurentPoly2.one()
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


def q_binomial(a: int, b: int) -> LaurentPoly2:
    """Gaussian binomial [a+b choose a]_q via the Pascal-type recurrence."""
    if a < 0 or b < 0:
        raise ParameterError(f"q-binomial needs a, b >= 0, got ({a}, {b})")
    # row[k] holds [i choose k]_q as a coefficient list
    row: list[list[int]] = [[1]]
    for i in range(1, a + b + 1):
        new = [[1]]
        for k in range(1, i):
            left = row[k - 1]
            right = [0] * k + row[k]  # q^k [i-1 choose k]
            size = max(len(left), len(right))
            new.append([(left[d] if d < len(left) else 0) + (right[d] if d < len(right) else 0)
                        for d in range(size)])
        new.append([1])
        row = new
    return LaurentPoly2.from_q_coefficients(row[a])


def q_binomial_by_division(a: int, b: int) -> LaurentPoly2:
    """Same polynomial as :func:`q_binomial`, via exact division of q-factorials."""
    return q_factorial(a + b).exact_div_q(q_factorial(a) * q_factorial(b))
