"""Historical bijections that turn out to be sweep maps.

Each map here is implemented from its own original description (area
vectors, hook lengths, semi-module generators) and never calls a sweep
function, so each claimed equivalence can be checked against
:mod:`sweeplab.sweeps` independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import DomainError, ParameterError
from .paths import canonical, check_word, is_dyck, levels, mkptn, mkwd, rev, transpose, WS
from .sweeps import sweep_general

SCHRODER_WEIGHTS = {"N": 1, "D": 0, "E": -1}


def _north_xs(w: str) -> list[int]:
    """x-coordinate of each north step, bottom to top."""
    xs = []
    x = 0
    for c in w:
        if c == "E":
            x += 1
        else:
            xs.append(x)
    return xs


# -- trapezoidal paths -------------------------------------------------------

def _check_trapezoid(w: str, n: int, k: int, m: int) -> None:
    if n <= 0 or m <= 0 or k < 0:
        raise ParameterError(f"need n, m > 0 and k >= 0, got n={n} k={k} m={m}")
    check_word(w)
    if w.count("N") != n or w.count("E") != k + m * n:
        raise DomainError(f"{w!r} does not run from (0,0) to ({k + m * n},{n})")


def area_vector_trapezoid(w: str, n: int, k: int, m: int) -> tuple[int, ...]:
    """Row-wise count of whole squares between the path and the line x = k + m*y."""
    _check_trapezoid(w, n, k, m)
    g = tuple(k + m * i - x for i, x in enumerate(_north_xs(w)))
    if any(v < 0 for v in g):
        raise DomainError(f"{w!r} crosses the line x = {k} + {m}y")
    return g


def is_trapezoid_area_vector(g: Sequence[int], k: int, m: int) -> bool:
    if not g or not 0 <= g[0] <= k:
        return False
    return all(v >= 0 for v in g) and all(g[i] <= g[i - 1] + m for i in range(1, len(g)))


def trapezoid_path(g: Sequence[int], k: int, m: int) -> str:
    """Inverse of :func:`area_vector_trapezoid`."""
    if not is_trapezoid_area_vector(g, k, m):
        raise DomainError(f"{tuple(g)} is not a trapezoid area vector for k={k}, m={m}")
    n = len(g)
    xs = [k + m * i - v for i, v in enumerate(g)]
    out, prev = [], 0
    for x in xs:
        out.append("E" * (x - prev) + "N")
        prev = x
    out.append("E" * (k + m * n - prev))
    return "".join(out)


def enumerate_trapezoid(n: int, k: int, m: int):
    """Words of T_{n,k,m} generated from their area vectors."""
    def rec(g):
        if len(g) == n:
            yield trapezoid_path(g, k, m)
            return
        hi = k if not g else g[-1] + m
        for v in range(hi + 1):
            yield from rec(g + [v])
    return rec([])


def _window(g: Sequence[int], k: int, m: int) -> range:
    return range(max(max(g, default=0) + m, k) + 1)


def z_blocks(g: Sequence[int], k: int, m: int) -> list[tuple[int, ...]]:
    """z^(i): the entries of g lying in [i - m, i], in order."""
    return [tuple(v for v in g if i - m <= v <= i) for i in _window(g, k, m)]


def sigma_blocks(g: Sequence[int], k: int, m: int) -> list[str]:
    """sigma^(i): z^(i) with i written as N and everything else as E."""
    return ["".join("N" if v == i else "E" for v in z) for i, z in enumerate(z_blocks(g, k, m))]


def tau_blocks(g: Sequence[int], k: int, m: int) -> list[str]:
    """tau^(i): sigma^(i) reversed, keeping a leading E in place once i > k."""
    taus = []
    for i, sigma in enumerate(sigma_blocks(g, k, m)):
        if i <= k or not sigma:
            taus.append(rev(sigma))
        else:
            assert sigma[0] == "E", (g, i, sigma)
            taus.append("E" + rev(sigma[1:]))
    return taus


def _join(blocks: list[str], k: int) -> str:
    # an extra east step follows each of the first k blocks
    return "".join(b + ("E" if i < k else "") for i, b in enumerate(blocks))


def phi_trapezoid(w: str, n: int, k: int, m: int) -> str:
    g = area_vector_trapezoid(w, n, k, m)
    return _join(sigma_blocks(g, k, m), k)


def phi_prime_trapezoid(w: str, n: int, k: int, m: int) -> str:
    g = area_vector_trapezoid(w, n, k, m)
    return _join(tau_blocks(g, k, m), k)


def _check_dyck_square(w: str) -> int:
    check_word(w)
    n = w.count("N")
    if w.count("E") != n:
        raise DomainError(f"{w!r} is not a square path")
    return n


def phi_hl(w: str) -> str:
    """phi_HL: transpose of the partition produced by phi_{n,0,1}."""
    n = _check_dyck_square(w)
    if not is_dyck(w, (1, -1)):
        raise DomainError(f"{w!r} is not a Dyck path")
    if n == 0:
        return ""
    return mkwd(transpose(mkptn(phi_trapezoid(w, n, 0, 1))), n, n)


# -- square paths -----------------------------------------------------------

def square_area_vector(w: str) -> tuple[int, ...]:
    _check_dyck_square(w)
    return tuple(i - x for i, x in enumerate(_north_xs(w)))


def square_path(g: Sequence[int]) -> str:
    n = len(g)
    if n and g[0] > 0 or any(v + n - i < 0 for i, v in enumerate(g)) or any(
        g[i] > g[i - 1] + 1 for i in range(1, n)
    ):
        raise DomainError(f"{tuple(g)} is not a square area vector")
    out, prev = [], 0
    for i, v in enumerate(g):
        x = i - v
        out.append("E" * (x - prev) + "N")
        prev = x
    out.append("E" * (n - prev))
    return "".join(out)


def lw_blocks(w: str) -> dict[int, tuple[tuple[int, ...], str, str]]:
    """(z^(i), sigma^(i), tau^(i)) for each i in -n..n, keyed by i."""
    n = _check_dyck_square(w)
    g = square_area_vector(w)
    out = {}
    for i in range(-n, n + 1):
        z = tuple(v for v in g if v in (i, i - 1))
        sigma = "".join("E" if v == i else "N" for v in z)
        if i >= 0 or not sigma:
            tau = rev(sigma)
        else:
            assert sigma[-1] == "E", (g, i, sigma)
            tau = rev(sigma[:-1]) + "E"
        out[i] = (z, sigma, tau)
    return out


def phi_lw(w: str) -> str:
    """phi_LW: bijection on paths in the n x n square."""
    n = _check_dyck_square(w)
    blocks = lw_blocks(w)
    order = list(range(-1, -n - 1, -1)) + list(range(n, -1, -1))
    return "".join(blocks[i][2] for i in order)


def schroder_sweep(w: str, dyck: bool = False) -> str:
    """Weighted sweep on {N, D, E} with N -> 1, D -> 0, E -> -1."""
    check_word(w, SCHRODER_WEIGHTS)
    if dyck and any(l < 0 for l in levels(w, SCHRODER_WEIGHTS)):
        raise DomainError(f"{w!r} is not a Schroder path")
    return sweep_general(w, SCHRODER_WEIGHTS)


# -- rational Dyck partitions ----------------------------------------------

@dataclass(frozen=True)
class GeneratorData:
    generators: tuple[int, ...]
    delta_complement: frozenset[int]


def _rational_word(pi: Sequence[int], a: int, b: int) -> str:
    if a <= 0 or b <= 0 or gcd(a, b) != 1:
        raise ParameterError(f"need coprime positive a, b; got ({a}, {b})")
    w = mkwd(pi, a, b)
    if not is_dyck(w, (b, -a)):
        raise DomainError(f"partition {tuple(pi)} is not ({b},{-a})-Dyck")
    return w


def _between(w: str, a: int, b: int) -> tuple[set[int], set[int]]:
    """Levels of squares between path and diagonal, and the subset east of north steps."""
    inner, frontier = set(), set()
    for y, x0 in enumerate(_north_xs(w)):
        for x in range(x0, b):
            lv = b * y - a * (x + 1)
            if lv < 0:
                break
            inner.add(lv)
            if x == x0:
                frontier.add(lv)
    return inner, frontier


def generator_data(pi: Sequence[int], a: int, b: int) -> GeneratorData:
    w = _rational_word(pi, a, b)
    gens = tuple(sorted(l for c, l in zip(w, levels(w, (b, -a))) if c == "E"))
    inner, _ = _between(w, a, b)
    return GeneratorData(gens, frozenset(inner))


def zeta_f(pi: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    """nu = f(pi): the partition whose first-column hook lengths are the inner levels."""
    w = _rational_word(pi, a, b)
    inner, _ = _between(w, a, b)
    hooks = sorted(inner)
    return canonical([h - i for i, h in reversed(list(enumerate(hooks)))])


def _frontier_word(inner: set[int]) -> str:
    top = max(inner, default=0)
    return "E" + "".join("N" if i in inner else "E" for i in range(1, top + 1))


def zeta_f_frontier(pi: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    """The same nu read off the frontier word z_0 z_1 z_2 ..."""
    w = _rational_word(pi, a, b)
    inner, _ = _between(w, a, b)
    return mkptn(_frontier_word(inner))


def zeta_row_trims(pi: Sequence[int], a: int, b: int) -> dict[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """For each row index m kept by zeta, the pair (B_m, C_m).

    B_m lists the east letters z_j (0 < j < m) dropped by the frontier route:
    those whose square sits on top of another square above the path;
    C_m lists the columns i of cells [i, m] whose hook length m - i exceeds b,
    dropped by the hook route.  The two always have equal size.
    """
    w = _rational_word(pi, a, b)
    inner, frontier = _between(w, a, b)
    z = _frontier_word(inner)
    out = {}
    for m in sorted(frontier):
        east = [i for i in range(m) if z[i] == "E"]
        out[m] = (tuple(j for j in east if j >= b and z[j - b] == "E"),
                  tuple(i for i in east if m - i > b))
    return out


def hook_lengths(nu: Sequence[int]) -> list[list[int]]:
    nu = canonical(nu)
    conj = transpose(nu)
    return [[nu[r] - c + conj[c] - r - 1 for c in range(nu[r])] for r in range(len(nu))]


def zeta(pi: Sequence[int], a: int, b: int, route: str = "hook") -> tuple[int, ...]:
    """The zeta map on (b,-a)-Dyck partitions.

    ``route="hook"`` keeps rows of nu by first-column hook length and trims
    every cell with hook length above ``b``; ``route="frontier"`` keeps the
    letters z_i whose index plus ``a`` is a west-south step level.
    """
    w = _rational_word(pi, a, b)
    inner, frontier = _between(w, a, b)
    if route == "hook":
        nu = zeta_f(pi, a, b)
        hooks = hook_lengths(nu)
        rows = [sum(1 for h in row if h <= b) for row in hooks if row and row[0] in frontier]
        return canonical(rows)
    if route == "frontier":
        ws = set(levels(w, (b, -a), WS))
        z = _frontier_word(inner)
        z += "E" * max(0, max(ws) - a + 1 - len(z))
        return mkptn("".join(c for i, c in enumerate(z) if i + a in ws))
    raise ValueError(f"unknown route {route!r}")


def gm_column_length(beta: int, a: int, delta_c: frozenset[int]) -> int:
    return sum(1 for v in range(beta, beta + a) if v in delta_c)


def gorsky_mazin(pi: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    """Gorsky-Mazin map: column i of the result has length g(beta_i)."""
    data = generator_data(pi, a, b)
    cols = [gm_column_length(beta, a, data.delta_complement) for beta in data.generators]
    if any(cols[i] < cols[i + 1] for i in range(len(cols) - 1)):
        raise AssertionError(f"column lengths {cols} not weakly decreasing")
    return transpose([c for c in cols if c])
