"""Words, partitions and lattice paths.

Words are plain ``str`` objects over a small alphabet; the canonical
two-letter alphabet is ``"NE"`` (north/east) and the Schroder alphabet is
``"NDE"``.  Partitions are tuples of weakly decreasing positive integers.
Both conventions match the external text formats used by the CLI, e.g.
``"ENEENNEE"`` and ``"4,4,4,2,2,1"``.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Mapping, NamedTuple, Sequence, Union

from .errors import AlphabetError, LevelOverflowError, ShapeError

NE = frozenset("NE")
INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

EN = "EN"
WS = "WS"


class SweepParams(NamedTuple):
    """The weight ``r`` of a north step and ``s`` of an east step."""

    r: int
    s: int

    def weights(self) -> dict[str, int]:
        return {"N": self.r, "E": self.s}


WeightLike = Union[SweepParams, Sequence[int], Mapping[str, int]]


class RectShape(NamedTuple):
    a: int  # height: number of N's
    b: int  # width: number of E's


def as_weights(wt: WeightLike) -> dict[str, int]:
    """Normalise ``(r, s)`` pairs and letter->weight mappings to a dict."""
    if isinstance(wt, Mapping):
        return {str(k): int(v) for k, v in wt.items()}
    r, s = wt
    return {"N": int(r), "E": int(s)}


def check_word(w: str, alphabet=NE) -> str:
    bad = set(w) - set(alphabet)
    if bad:
        raise AlphabetError(f"letters {sorted(bad)} not in alphabet {sorted(alphabet)}")
    return w


def rev(w: str) -> str:
    return w[::-1]


def flip(w: str) -> str:
    """Interchange N and E."""
    check_word(w)
    return w.translate(str.maketrans("NE", "EN"))


def mkpath_points(w: str) -> list[tuple[int, int]]:
    """Lattice points ``(x, y)`` visited by the path of ``w``, origin first."""
    check_word(w)
    x = y = 0
    pts = [(0, 0)]
    for c in w:
        if c == "N":
            y += 1
        else:
            x += 1
        pts.append((x, y))
    return pts


def mkptn(w: str) -> tuple[int, ...]:
    """Partition of the squares above and to the left of the path of ``w``.

    Row ``i`` (from the top) has length equal to the number of E's that
    precede the ``i``-th N counted from the end of the word.
    """
    check_word(w)
    parts = []
    east = 0
    for c in w:
        if c == "E":
            east += 1
        else:
            parts.append(east)
    parts.reverse()
    return canonical(parts)


def canonical(parts: Sequence[int]) -> tuple[int, ...]:
    """Strip trailing zeros and validate weak decrease."""
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    for i in range(len(p) - 1):
        if p[i] < p[i + 1]:
            raise ShapeError(f"parts {tuple(parts)} are not weakly decreasing")
    if p and p[-1] < 0:
        raise ShapeError("negative part")
    return tuple(p)


def mkwd(pi: Sequence[int], a: int, b: int) -> str:
    """Frontier word of ``pi`` inside the ``a`` x ``b`` rectangle (inverse of mkptn)."""
    pi = canonical(pi)
    if len(pi) > a or (pi and pi[0] > b):
        raise ShapeError(f"partition {pi} does not fit in a {a}x{b} rectangle")
    xs = [0] * (a - len(pi)) + list(reversed(pi))
    out = []
    prev = 0
    for x in xs:
        out.append("E" * (x - prev))
        out.append("N")
        prev = x
    out.append("E" * (b - prev))
    return "".join(out)


def transpose(pi: Sequence[int]) -> tuple[int, ...]:
    pi = canonical(pi)
    if not pi:
        return ()
    return tuple(sum(1 for p in pi if p > j) for j in range(pi[0]))


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return canonical([int(t) for t in text.split(",")])
    except ValueError as exc:
        raise ShapeError(f"bad partition {text!r}: {exc}") from None


def format_partition(pi: Sequence[int]) -> str:
    return ",".join(str(p) for p in canonical(pi))


def _checked(v: int) -> int:
    if v < INT64_MIN or v > INT64_MAX:
        raise LevelOverflowError(f"level {v} outside the signed 64-bit range")
    return v


def point_levels(w: str, wt: WeightLike) -> list[int]:
    """Levels ``l_0 = 0, l_1, ..., l_n`` of the prefixes of ``w``."""
    weights = as_weights(wt)
    check_word(w, weights)
    for v in weights.values():
        _checked(v)
    out = [0]
    level = 0
    for c in w:
        level = _checked(level + weights[c])
        out.append(level)
    return out


def levels(w: str, wt: WeightLike, conv: str = EN) -> list[int]:
    """Per-step levels: EN gives step ``i`` the level ``l_i``, WS gives ``l_{i-1}``."""
    pts = point_levels(w, wt)
    if conv == EN:
        return pts[1:]
    if conv == WS:
        return pts[:-1]
    raise ValueError(f"unknown level convention {conv!r}")


def is_dyck(w: str, wt: WeightLike) -> bool:
    return all(lv >= 0 for lv in levels(w, wt))


def _multiset_words(counts: dict[str, int], order: Sequence[str]) -> Iterator[str]:
    n = sum(counts.values())
    buf: list[str] = []

    def rec() -> Iterator[str]:
        if len(buf) == n:
            yield "".join(buf)
            return
        for c in order:
            if counts[c]:
                counts[c] -= 1
                buf.append(c)
                yield from rec()
                buf.pop()
                counts[c] += 1

    return rec()


def enumerate_multiset(counts: Mapping[str, int], alphabet: Sequence[str] | None = None) -> Iterator[str]:
    """Every word with the given letter multiplicities, once each, in lexicographic order.

    ``alphabet`` fixes the letter order; by default letters sort by character,
    so for ``{N, E}`` the order is ``E < N``.
    """
    order = list(alphabet) if alphabet is not None else sorted(counts)
    cnt = {c: int(counts.get(c, 0)) for c in order}
    if any(v < 0 for v in cnt.values()):
        raise ValueError("letter counts must be nonnegative")
    return _multiset_words(cnt, order)


def enumerate_words(a: int, b: int) -> Iterator[str]:
    """All words with ``a`` N's and ``b`` E's, lexicographic (E before N)."""
    return enumerate_multiset({"E": b, "N": a})


def enumerate_dyck(a: int, b: int, wt: WeightLike) -> Iterator[str]:
    """Words of W(N^a E^b) whose EN step levels are all nonnegative, in lexicographic order.

    Prefixes that already dip below zero are pruned, so the output is the
    same as filtering :func:`enumerate_words` with :func:`is_dyck`.
    """
    weights = as_weights(wt)
    r, s = weights["N"], weights["E"]
    n = a + b
    buf: list[str] = []

    def rec(na: int, nb: int, level: int) -> Iterator[str]:
        if len(buf) == n:
            yield "".join(buf)
            return
        if nb and level + s >= 0:
            buf.append("E")
            yield from rec(na, nb - 1, level + s)
            buf.pop()
        if na and level + r >= 0:
            buf.append("N")
            yield from rec(na - 1, nb, level + r)
            buf.pop()

    return rec(a, b, 0)


def rank_word(w: str) -> int:
    """Index of ``w`` in :func:`enumerate_words` order."""
    check_word(w)
    a = w.count("N")
    rank = 0
    for i, c in enumerate(w):
        rest = len(w) - i - 1
        if c == "N":
            # every word with an E here (and the same prefix) comes first
            rank += comb(rest, a)
            a -= 1
    return rank


def unrank_word(a: int, b: int, index: int) -> str:
    """Inverse of :func:`rank_word` on W(N^a E^b)."""
    if not 0 <= index < comb(a + b, a):
        raise IndexError(index)
    out = []
    while a + b:
        # words with an E next: the remaining a N's fill a + b - 1 slots
        with_e = comb(a + b - 1, a) if b else 0
        if b and index < with_e:
            out.append("E")
            b -= 1
        else:
            index -= with_e
            out.append("N")
            a -= 1
    return "".join(out)
