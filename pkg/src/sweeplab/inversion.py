"""Inverting sweep maps.

If the level of every step of an output word ``Q`` is known, the input can
be rebuilt one step at a time (:func:`replay`).  The bounce-path labelers
recover those levels for the domains where a bounce construction is known;
:func:`brute_force_inverse` searches a whole domain and serves as the
oracle for everything else.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Sequence

from .errors import BudgetError, NotInImageError, ParameterError
from .paths import EN, WS, WeightLike, as_weights, check_word, mkpath_points
from .sweeps import LEFT, RIGHT


def replay(Q: str, labels: Sequence[int], wt: WeightLike, conv: str = EN,
           direction: str = LEFT, origin: int = 0) -> str:
    """Rebuild the preimage of ``Q`` from the level of each of its steps.

    ``conv``/``direction`` describe the sweep that produced ``Q``: how steps
    were labelled and how each level class was scanned.  EN labels are the
    level after a step, so the word is rebuilt back to front starting from
    the final level; WS labels are the level before a step, so it is
    rebuilt front to back from ``origin``.
    """
    weights = as_weights(wt)
    check_word(Q, weights)
    if len(labels) != len(Q):
        raise NotInImageError("label sequence and word differ in length")
    pool: dict[int, deque[int]] = defaultdict(deque)
    for j, lab in enumerate(labels):
        pool[lab].append(j)
    total = sum(weights[c] for c in Q)

    # Within a class Q lists the input's steps in scan order; LEFT means
    # right-to-left, so the input's last unused step is the first unused one.
    back_to_front = conv == EN
    take_first = (direction == LEFT) == back_to_front
    level = origin + total if back_to_front else origin
    out = []
    for _ in range(len(Q)):
        cls = pool.get(level)
        if not cls:
            raise NotInImageError(f"no unused step labelled {level}")
        j = cls.popleft() if take_first else cls.pop()
        c = Q[j]
        out.append(c)
        level += -weights[c] if back_to_front else weights[c]
    expected = origin if back_to_front else origin + total
    if level != expected:
        raise NotInImageError(f"replay ended at level {level}, expected {expected}")
    if back_to_front:
        out.reverse()
    return "".join(out)


def replay_inverse(Q: str, labels: Sequence[int], params: WeightLike, variant: str = "minus") -> str:
    """Invert ``sweep_minus`` or ``sweep_plus`` given the EN level of each output step."""
    if variant not in ("minus", "plus"):
        raise ParameterError(f"variant must be 'minus' or 'plus', got {variant!r}")
    return replay(Q, labels, params, EN, LEFT if variant == "minus" else RIGHT)


# -- bounce paths ------------------------------------------------------------

@dataclass
class BouncePath:
    """Moves of a bounce path.

    ``horizontal``/``vertical`` map a move index to its length; the kind
    records which construction produced it.
    """

    kind: str
    horizontal: dict[int, int] = field(default_factory=dict)
    vertical: dict[int, int] = field(default_factory=dict)


def _north_x(pts) -> dict[int, int]:
    """Height y -> x of the north step of the path that ends at height y."""
    return {q[1]: q[0] for p, q in zip(pts, pts[1:]) if q[1] > p[1]}


def _east_y(pts) -> dict[int, int]:
    """Column x -> height of the east step that ends at column x."""
    return {q[0]: q[1] for p, q in zip(pts, pts[1:]) if q[0] > p[0]}


def _labels_from_bands(Q: str, col_label: dict[int, int], row_label: dict[int, int]) -> list[int]:
    out = []
    x = y = 0
    for c in Q:
        try:
            if c == "E":
                out.append(col_label[x])
                x += 1
            else:
                out.append(row_label[y])
                y += 1
        except KeyError:
            raise NotInImageError(f"step at ({x},{y}) is not covered by the bounce path") from None
    return out


def haglund_bounce(Q: str) -> BouncePath:
    """Haglund's bounce path of a Dyck word, from (n, n) down to (0, 0)."""
    pts = mkpath_points(Q)
    n = Q.count("N")
    if Q.count("E") != n:
        raise NotInImageError(f"{Q!r} is not a square word")
    north_x = _north_x(pts)
    bp = BouncePath("haglund")
    x, i = n, 0
    while x > 0:
        nx = north_x[x]
        if nx >= x:
            raise NotInImageError(f"bounce of {Q!r} stalls at ({x},{x})")
        bp.horizontal[i] = bp.vertical[i] = x - nx
        x, i = nx, i + 1
    return bp


def haglund_labels(Q: str, n: int | None = None) -> list[int]:
    """Levels of the steps of ``Q = sweep_minus(P, (1, -1))`` for Dyck ``P``.

    East steps under the horizontal move ``H_i`` get label ``i``; north
    steps beside the vertical move ``V_{i-1}`` get label ``i``.
    """
    check_word(Q)
    if n is not None and (Q.count("N") != n or Q.count("E") != n):
        raise NotInImageError(f"{Q!r} is not in W(N^{n} E^{n})")
    bp = haglund_bounce(Q)
    col, row = {}, {}
    x = Q.count("N")
    for i in sorted(bp.horizontal):
        h = bp.horizontal[i]
        for c in range(x - h, x):
            col[c] = i
            row[c] = i + 1  # V_i spans rows [x - h, x)
        x -= h
    return _labels_from_bands(Q, col, row)


def invert_haglund(Q: str) -> str:
    return replay_inverse(Q, haglund_labels(Q), (1, -1), "minus")


def trapezoid_bounce(Q: str, n: int, k: int, m: int, offsets: Callable[[int], int] | None = None,
                     stop: str = "high") -> tuple[BouncePath, list[int]]:
    """m-bounce path of ``Q`` from (0, 0) to (k + m*n, n) and the step labels it induces.

    Vertical move ``i`` climbs as far as the path allows; horizontal move
    ``i`` has length ``v_i + ... + v_{i-m+1}`` plus one while ``i < k``, plus
    ``offsets(i)`` when given.  North steps beside ``V_i`` get label ``i``,
    east steps above ``H_{i-1}`` get label ``i``.

    With ``stop="low"`` a vertical move away from the y-axis stops at the
    first lattice point of ``Q`` on its line instead of the highest one.
    """
    check_word(Q)
    W = k + m * n
    if Q.count("N") != n or Q.count("E") != W:
        raise NotInImageError(f"{Q!r} does not end at ({W},{n})")
    pts = mkpath_points(Q)
    # top of the path on each vertical line
    top = {p[0]: p[1] for p, q in zip(pts, pts[1:]) if q[0] > p[0]}
    top[W] = n
    if stop == "low":
        top.update({x: y for x, y in _east_y(pts).items() if x > 0})
    elif stop != "high":
        raise ParameterError(f"stop must be 'high' or 'low', got {stop!r}")
    bp = BouncePath("trapezoid")
    col, row = {}, {}
    X = Y = i = 0
    vs: list[int] = []
    for _ in range(2 * (n + W) + 2):
        v = top[X] - Y
        if v < 0:
            raise NotInImageError(f"bounce of {Q!r} passes above the path at column {X}")
        vs.append(v)
        bp.vertical[i] = v
        for y in range(Y, Y + v):
            row[y] = i
        Y += v
        if (X, Y) == (W, n):
            break
        h = sum(vs[max(0, i - m + 1):]) + (1 if i < k else 0) + (offsets(i) if offsets else 0)
        if h < 0 or X + h > W or (v == 0 and h == 0):
            raise NotInImageError(f"bounce of {Q!r} cannot continue from ({X},{Y})")
        bp.horizontal[i] = h
        for c in range(X, X + h):
            col[c] = i + 1
        X += h
        i += 1
        if (X, Y) == (W, n):
            break
    else:
        raise NotInImageError(f"bounce of {Q!r} does not terminate")
    return bp, _labels_from_bands(Q, col, row)


def trapezoid_labels(Q: str, n: int, k: int, m: int) -> list[int]:
    return trapezoid_bounce(Q, n, k, m)[1]


def invert_trapezoid(Q: str, n: int, k: int, m: int) -> str:
    """Preimage of ``Q`` under phi'_{n,k,m} (the trapezoid sweep)."""
    labels = trapezoid_labels(Q, n, k, m)
    return replay(Q, labels, {"N": m, "E": -1}, WS, LEFT, origin=k)


def invert_phi(Q: str, n: int, k: int, m: int) -> str:
    """Preimage of ``Q`` under phi_{n,k,m}.

    phi is not itself a sweep, but the same bounce path cuts ``Q`` into the
    blocks sigma^(0), sigma^(1), ... (plus the k separating east steps).
    The area vector is then rebuilt value by value: every new row of value
    ``j`` sits directly after the row that precedes it in sigma^(j).
    """
    from .classical import phi_trapezoid, trapezoid_path

    labels = trapezoid_labels(Q, n, k, m)
    groups: dict[int, list[str]] = defaultdict(list)
    for c, lab in zip(Q, labels):
        groups[lab].append(c)
    seq: list[int] = []
    for j in range(max(groups, default=-1) + 1):
        sigma = groups.get(j, [])
        if 1 <= j <= k:
            if not sigma or sigma[0] != "E":
                raise NotInImageError(f"block {j} of {Q!r} lacks its separating east step")
            sigma = sigma[1:]
        window = [t for t, g in enumerate(seq) if j - m <= g <= j - 1]
        after: dict[int, int] = defaultdict(int)
        anchor, w = -1, 0
        for c in sigma:
            if c == "E":
                if w >= len(window):
                    raise NotInImageError(f"block {j} of {Q!r} has too many east steps")
                anchor, w = window[w], w + 1
            else:
                after[anchor] += 1
        if w != len(window):
            raise NotInImageError(f"block {j} of {Q!r} has too few east steps")
        rebuilt = [j] * after[-1]
        for t, g in enumerate(seq):
            rebuilt.append(g)
            rebuilt.extend([j] * after[t])
        seq = rebuilt
    try:
        P = trapezoid_path(seq, k, m)
    except Exception:
        raise NotInImageError(f"{Q!r} is not in the image of phi_{{{n},{k},{m}}}") from None
    if len(seq) != n or phi_trapezoid(P, n, k, m) != Q:
        raise NotInImageError(f"{Q!r} is not in the image of phi_{{{n},{k},{m}}}")
    return P


# -- Gorsky-Mazin special families -------------------------------------------

PLUS = "plus"
MINUS = "minus"


def gm_sign(n: int, b: int) -> tuple[int, str]:
    """Split ``b = n*m + 1`` or ``b = n*m - 1``; other ``b`` are not supported."""
    if n <= 0 or b <= 0:
        raise ParameterError(f"need n, b > 0, got ({n}, {b})")
    if (b - 1) % n == 0 and b - 1 > 0:
        return (b - 1) // n, PLUS
    if (b + 1) % n == 0:
        return (b + 1) // n, MINUS
    raise ParameterError(f"b={b} is neither n*m+1 nor n*m-1 for n={n}")


def gm_bounce(Q: str, n: int, m: int, sign: str) -> tuple[BouncePath, list[int]]:
    """Bounce path for Q = sweep_plus(rev(P), (b, -n)) when b = n*m +/- 1.

    Both families sort the steps of ``P`` by u = m*y - x at their start
    point.  For ``b = nm+1`` ties are scanned left to right and the bounce
    is the k=1 trapezoid bounce whose vertical moves stop at the first
    lattice point of ``Q``; the extra first column belongs to class 0.
    For ``b = nm-1`` ties are scanned right to left; the bounce has the
    offset t = -1 at i = m-1 and its labels are u - 1, except for the
    origin step, alone at level 0.
    """
    if m <= 0:
        raise ParameterError(f"need m > 0, got {m}")
    if sign == PLUS:
        bp, lab = trapezoid_bounce(Q, n, 1, m, stop="low")
        if "E" in Q:
            lab[Q.index("E")] = 0
    elif sign == MINUS:
        if n * m - 1 <= 0:
            raise ParameterError(f"n*m - 1 must be positive, got n={n} m={m}")
        bp, lab = trapezoid_bounce(Q, n, -1, m, offsets=lambda i: -1 if i == m - 1 else 0)
        if not Q.startswith("N"):
            raise NotInImageError(f"{Q!r} does not start with a north step")
        lab = [0] + [v + 1 for v in lab[1:]]
    else:
        raise ParameterError(f"sign must be {PLUS!r} or {MINUS!r}")
    bp.kind = f"gm({n},{m},{sign})"
    return bp, lab


def gm_labels(Q: str, n: int, m: int, sign: str) -> list[int]:
    return gm_bounce(Q, n, m, sign)[1]


def invert_gm_word(Q: str, n: int, b: int) -> str:
    """Preimage of ``Q`` under P -> sweep_plus(rev(P), (b, -n)) on (b,-n)-Dyck words."""
    m, sign = gm_sign(n, b)
    check_word(Q)
    if Q.count("N") != n or Q.count("E") != b:
        raise NotInImageError(f"{Q!r} is not in W(N^{n} E^{b})")
    labels = gm_labels(Q, n, m, sign)
    return replay(Q, labels, {"N": m, "E": -1}, WS, RIGHT if sign == PLUS else LEFT, origin=0)


def square_bounce(Q: str) -> tuple[BouncePath, list[int]]:
    """Positive and negative bounce paths of a square word and the induced labels."""
    check_word(Q)
    n = Q.count("N")
    if Q.count("E") != n:
        raise NotInImageError(f"{Q!r} is not a square word")
    pts = mkpath_points(Q)
    k = max(x - y for x, y in pts)
    xb, yb = min((p for p in pts if p[0] - p[1] == k), key=lambda p: p[1])
    north_x, east_y = _north_x(pts), _east_y(pts)
    bp = BouncePath("square")
    col, row = {}, {}
    limit = 2 * n + 2

    # positive side: (n, n) -> (n, n-k) -> ... -> break point
    bp.vertical[-1] = k
    for y in range(n - k, n):
        row[y] = 0
    x, y, i = n, n - k, 0
    while (x, y) != (xb, yb):
        limit -= 1
        nx = north_x.get(y)
        if nx is None or nx >= x or nx - k < yb or limit < 0:
            raise NotInImageError(f"positive bounce of {Q!r} stalls at ({x},{y})")
        bp.horizontal[i] = x - nx
        for c in range(nx, x):
            col[c] = i
        bp.vertical[i] = y - (nx - k)
        for r in range(nx - k, y):
            row[r] = i + 1
        x, y, i = nx, nx - k, i + 1

    # negative side: (0, 0) -> (k, 0) -> ... -> break point.  Vertical moves
    # stop at the first lattice point of Q, not at the end of a step.
    bp.horizontal[-1] = k
    for c in range(0, k):
        col[c] = -1
    x, y, i = k, 0, -2
    while (x, y) != (xb, yb):
        limit -= 1
        ny = east_y.get(x, 0)
        if ny <= y or ny + k > xb or limit < 0:
            raise NotInImageError(f"negative bounce of {Q!r} stalls at ({x},{y})")
        bp.vertical[i] = ny - y
        for r in range(y, ny):
            row[r] = i + 1
        bp.horizontal[i] = ny + k - x
        for c in range(x, ny + k):
            col[c] = i
        x, y, i = ny + k, ny, i - 1
    return bp, _labels_from_bands(Q, col, row)


def square_labels(Q: str) -> list[int]:
    return square_bounce(Q)[1]


def invert_square(Q: str) -> str:
    return replay_inverse(Q, square_labels(Q), (1, -1), "minus")


# -- exhaustive oracle -------------------------------------------------------

DEFAULT_BUDGET = 2_000_000


def brute_force_inverse(Q: str, fn: Callable[[str], str], domain: Iterable[str],
                        budget: int = DEFAULT_BUDGET, size: int | None = None) -> list[str]:
    """Every ``P`` in ``domain`` with ``fn(P) == Q``, sorted.

    Raises :class:`BudgetError` once more than ``budget`` candidates would
    be examined; pass ``size`` to fail before enumerating anything.
    """
    if size is not None and size > budget:
        raise BudgetError(f"domain of {size} words exceeds budget {budget}")
    hits = []
    for count, P in enumerate(domain, 1):
        if count > budget:
            raise BudgetError(f"domain exceeds budget {budget}")
        if fn(P) == Q:
            hits.append(P)
    return sorted(hits)


def word_domain_size(a: int, b: int) -> int:
    return comb(a + b, a)
