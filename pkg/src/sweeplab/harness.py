"""Verification campaigns.

A campaign is a named suite run over a grid of parameter points.  Each
point is checked exhaustively (or on a seeded sample) and reported as
``pass``, ``fail`` (with a replayable counterexample) or
``skipped-budget``.  Points are independent, so they can be farmed out to
worker processes; results are always collected in point order, which
keeps reports byte-identical whatever the parallelism.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import random
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import comb, gcd
from typing import Any, Callable, Iterator

from . import kernels
from .classical import (
    enumerate_trapezoid, gorsky_mazin, phi_hl, phi_lw, phi_prime_trapezoid, phi_trapezoid,
    schroder_sweep, zeta,
)
from .errors import BudgetError, ParameterError, SweepLabError
from .inversion import (
    gm_sign, haglund_bounce, haglund_labels, invert_gm_word, invert_haglund, invert_phi,
    invert_square, invert_trapezoid, square_labels, trapezoid_labels,
)
from .paths import (
    enumerate_dyck, enumerate_multiset, enumerate_words, flip, format_partition, levels, mkptn,
    mkwd, rev,
)
from .polys import q_binomial, q_int
from .stats import qt_catalan, qt_square
from .sweeps import sweep_labels, sweep_minus, sweep_plus

SCHEMA = "sweeplab-report/1"
PASS, FAIL, SKIPPED = "pass", "fail", "skipped-budget"
JOBS_ENV = "SWEEPLAB_JOBS"


@dataclass
class CampaignConfig:
    rmax: int = 3
    smax: int = 3
    sizemax: int = 8
    nmax: int = 5
    kmax: int = 2
    mmax: int = 2
    wmax: int = 2
    budget: int = 2_000_000
    jobs: int = 1
    seed: int = 0
    sample: int = 0
    variant: str = "minus"

    def validate(self) -> None:
        if self.budget <= 0:
            raise ParameterError("budget must be positive")
        for name in ("rmax", "smax", "sizemax", "nmax", "kmax", "mmax", "wmax", "sample"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be nonnegative")
        if self.jobs < 1:
            raise ParameterError("jobs must be at least 1")
        if self.variant not in ("minus", "plus"):
            raise ParameterError("variant must be 'minus' or 'plus'")


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        raise ParameterError(f"{JOBS_ENV} must be an integer") from None


@dataclass
class PointResult:
    params: dict
    status: str
    checked: int = 0
    counterexample: dict | None = None
    detail: str = ""


class _Fail(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("reason", "check failed"))
        self.payload = payload


def _require(ok: bool, **payload) -> None:
    if not ok:
        raise _Fail(payload)


def _sampled(items: list, cfg: CampaignConfig, params: dict) -> list:
    if not cfg.sample or len(items) <= cfg.sample:
        return items
    salt = json.dumps(params, sort_keys=True)
    rng = random.Random(f"{cfg.seed}:{salt}")
    return sorted(rng.sample(items, cfg.sample), key=items.index)


@dataclass
class Suite:
    name: str
    description: str
    points: Callable[[CampaignConfig], list[dict]]
    size: Callable[[dict, CampaignConfig], int]
    check: Callable[[dict, CampaignConfig], int]


SUITES: dict[str, Suite] = {}


def suite(name: str, description: str, points, size):
    def register(fn):
        SUITES[name] = Suite(name, description, points, size, fn)
        return fn
    return register


def _rs_points(cfg):
    return [{"r": r, "s": s} for r in range(-cfg.rmax, cfg.rmax + 1) for s in range(-cfg.smax, cfg.smax + 1)]


def _shapes(sizemax):
    return [(a, size - a) for size in range(sizemax + 1) for a in range(size + 1)]


def _all_words_size(p, cfg):
    return sum(comb(a + b, a) for a, b in _shapes(cfg.sizemax))


@lru_cache(maxsize=None)
def _word_batch(counts: tuple[tuple[str, int], ...], alphabet: str):
    words = list(enumerate_multiset(dict(counts), alphabet))
    return words, kernels.encode(words, alphabet)


# -- bijectivity --------------------------------------------------------------

@suite("bijectivity", "sweep_minus (or sweep_plus) is injective on every W(N^a E^b)",
       _rs_points, _all_words_size)
def _check_bijectivity(p, cfg):
    r, s = p["r"], p["s"]
    plus = cfg.variant == "plus"
    checked = 0
    for a, b in _shapes(cfg.sizemax):
        words, codes = _word_batch((("E", b), ("N", a)), "EN")
        images = kernels.sweep_batch(codes, (s, r), plus)
        hit = kernels.first_collision(images, 2)
        if hit:
            w1, w2 = words[hit[0]], words[hit[1]]
            raise _Fail({"a": a, "b": b, "words": [w1, w2],
                         "image": kernels.decode(images[hit[0]:hit[0] + 1], "EN")[0],
                         "command": f"sweeplab sweep --r {r} --s {s} --variant {cfg.variant} --word {w1}"})
        checked += len(words)
    return checked


def _general_points(cfg):
    rng = range(-cfg.wmax, cfg.wmax + 1)
    return [{"N": x, "D": y, "E": z} for x in rng for y in rng for z in rng]


def _general_size(p, cfg):
    return sum(3**n for n in range(cfg.sizemax + 1))


def letter_multisets(total: int, letters: str) -> Iterator[tuple[tuple[str, int], ...]]:
    for cut in itertools.product(range(total + 1), repeat=len(letters) - 1):
        if sum(cut) <= total:
            counts = list(cut) + [total - sum(cut)]
            yield tuple(zip(letters, counts))


@suite("conjecture:general-bijectivity",
       "the weighted sweep on {N, D, E} is injective on every multiset class",
       _general_points, _general_size)
def _check_general(p, cfg):
    alphabet = "DEN"
    wt = [p[c] for c in alphabet]
    checked = 0
    for total in range(cfg.sizemax + 1):
        for counts in letter_multisets(total, alphabet):
            words, codes = _word_batch(counts, alphabet)
            images = kernels.sweep_batch(codes, wt)
            hit = kernels.first_collision(images, 3)
            if hit:
                w1, w2 = words[hit[0]], words[hit[1]]
                spec = ",".join(f"{c}={p[c]}" for c in "NDE")
                raise _Fail({"words": [w1, w2], "image": kernels.decode(images[hit[0]:hit[0] + 1], alphabet)[0],
                             "command": f"sweeplab sweep-general --weights {spec} --word {w1}"})
            checked += len(words)
    return checked


# -- equivalence of classical maps -------------------------------------------

def _n_points(cfg):
    return [{"n": n} for n in range(1, cfg.nmax + 1)]


def _trap_points(cfg):
    return [{"n": n, "k": k, "m": m} for n in range(1, cfg.nmax + 1)
            for k in range(cfg.kmax + 1) for m in range(1, cfg.mmax + 1)]


def _trap_size(p, cfg):
    n, k, m = p["n"], p["k"], p["m"]
    return comb(n + k + m * n, n)


def _catalan_size(p, cfg):
    return comb(2 * p["n"], p["n"])


def _square_size(p, cfg):
    return comb(2 * p["n"], p["n"])


def _phi_prime_composite(w, m):
    return flip(rev(sweep_minus(rev(flip(w)), (1, -m))))


@suite("equivalence:phi-prime", "phi'_{n,k,m} equals flip.rev.sweep_minus(1,-m).rev.flip on T_{n,k,m}",
       _trap_points, _trap_size)
def _eq_phi_prime(p, cfg):
    n, k, m = p["n"], p["k"], p["m"]
    dom = _sampled(list(enumerate_trapezoid(n, k, m)), cfg, p)
    for w in dom:
        want, got = _phi_prime_composite(w, m), phi_prime_trapezoid(w, n, k, m)
        _require(got == want, word=w, expected=want, actual=got,
                 command=f"sweeplab map phi-prime --word {w} --k {k} --m {m}")
    return len(dom)


@suite("equivalence:phi", "phi_{n,0,1} equals flip.rev.sweep_minus(1,-1) on Dyck paths",
       _n_points, _catalan_size)
def _eq_phi(p, cfg):
    n = p["n"]
    dom = _sampled(list(enumerate_dyck(n, n, (1, -1))), cfg, p)
    for w in dom:
        want, got = flip(rev(sweep_minus(w, (1, -1)))), phi_trapezoid(w, n, 0, 1)
        _require(got == want, word=w, expected=want, actual=got,
                 command=f"sweeplab map phi --word {w} --k 0 --m 1")
    return len(dom)


@suite("equivalence:phi-hl", "phi_HL equals sweep_minus(1,-1) on Dyck paths", _n_points, _catalan_size)
def _eq_phi_hl(p, cfg):
    dom = _sampled(list(enumerate_dyck(p["n"], p["n"], (1, -1))), cfg, p)
    for w in dom:
        want, got = sweep_minus(w, (1, -1)), phi_hl(w)
        _require(got == want, word=w, expected=want, actual=got, command=f"sweeplab map phi-hl --word {w}")
    return len(dom)


@suite("equivalence:phi-lw", "phi_LW equals sweep_minus(1,-1) on all of W(N^n E^n)", _n_points, _square_size)
def _eq_phi_lw(p, cfg):
    dom = _sampled(list(enumerate_words(p["n"], p["n"])), cfg, p)
    for w in dom:
        want, got = sweep_minus(w, (1, -1)), phi_lw(w)
        _require(got == want, word=w, expected=want, actual=got, command=f"sweeplab map phi-lw --word {w}")
    return len(dom)


def _schroder_points(cfg):
    return [{"n": i, "d": j} for i in range(cfg.sizemax // 2 + 1) for j in range(cfg.sizemax - 2 * i + 1)]


def _schroder_size(p, cfg):
    n, d = p["n"], p["d"]
    return comb(2 * n + d, d) * comb(2 * n, n)


@suite("equivalence:schroder",
       "the Schroder sweep maps Schroder paths injectively to Schroder paths and agrees with sweep_minus without D",
       _schroder_points, _schroder_size)
def _eq_schroder(p, cfg):
    n, d = p["n"], p["d"]
    wt = {"N": 1, "D": 0, "E": -1}
    seen: dict[str, str] = {}
    dom = [w for w in enumerate_multiset({"D": d, "E": n, "N": n}) if min(levels(w, wt), default=0) >= 0]
    for w in dom:
        img = schroder_sweep(w, dyck=True)
        _require(min(levels(img, wt), default=0) >= 0, word=w, actual=img, reason="image is not a Schroder path",
                 command=f"sweeplab map schroder --word {w}")
        _require(img not in seen, words=[seen.get(img), w], image=img, reason="two paths share an image",
                 command=f"sweeplab map schroder --word {w}")
        seen[img] = w
        if d == 0:
            _require(img == sweep_minus(w, (1, -1)), word=w, expected=sweep_minus(w, (1, -1)), actual=img,
                     command=f"sweeplab map schroder --word {w}")
    return len(dom)


def _coprime_points(cfg):
    return [{"a": a, "b": b} for a in range(1, cfg.sizemax) for b in range(1, cfg.sizemax - a + 1)
            if gcd(a, b) == 1]


def _ab_size(p, cfg):
    return comb(p["a"] + p["b"], p["a"])


def _rational_check(p, cfg, fn, name):
    a, b = p["a"], p["b"]
    dom = _sampled(list(enumerate_dyck(a, b, (b, -a))), cfg, p)
    for w in dom:
        pi = mkptn(w)
        want = mkptn(sweep_plus(rev(w), (b, -a)))
        got = fn(pi)
        part = format_partition(pi)
        _require(got == want, partition=part, expected=format_partition(want), actual=format_partition(got),
                 command=f"sweeplab map {name} --a {a} --b {b} --partition '{part}'")
    return len(dom)


@suite("equivalence:zeta", "zeta (hook and frontier routes) equals sweep_plus(b,-a).rev on Dyck partitions",
       _coprime_points, _ab_size)
def _eq_zeta(p, cfg):
    a, b = p["a"], p["b"]

    def both(pi):
        hook, front = zeta(pi, a, b, "hook"), zeta(pi, a, b, "frontier")
        return hook if hook == front else ("route mismatch", hook, front)
    return _rational_check(p, cfg, both, "zeta")


@suite("equivalence:gm", "the Gorsky-Mazin map equals sweep_plus(b,-a).rev on Dyck partitions",
       _coprime_points, _ab_size)
def _eq_gm(p, cfg):
    return _rational_check(p, cfg, lambda pi: gorsky_mazin(pi, p["a"], p["b"]), "gm")


# -- conjectures on q,t-polynomials -----------------------------------------

def _poly_fail(lhs, rhs, command, **extra) -> dict:
    return dict(extra, lhs=lhs.format(), rhs=rhs.format(), command=command)


@suite("conjecture:joint-symmetry-catalan", "C_{r,s,a,b}(q,t) = C_{r,s,a,b}(t,q) for all a+b <= sizemax",
       _rs_points, _all_words_size)
def _conj_joint_catalan(p, cfg):
    r, s = p["r"], p["s"]
    checked = 0
    for a, b in _shapes(cfg.sizemax):
        C = qt_catalan((r, s), (a, b), budget=cfg.budget)
        if not C.is_symmetric():
            raise _Fail(_poly_fail(C, C.swap(), f"sweeplab poly catalan --r {r} --s {s} --a {a} --b {b}", a=a, b=b))
        checked += comb(a + b, a)
    return checked


def _ab_points(cfg):
    return [{"a": a, "b": b} for a, b in _shapes(cfg.sizemax)]


@suite("conjecture:joint-symmetry-square", "S_{a,b}(q,t) = S_{a,b}(t,q)", _ab_points, _ab_size)
def _conj_joint_square(p, cfg):
    a, b = p["a"], p["b"]
    S = qt_square((a, b), budget=cfg.budget)
    _require(S.is_symmetric(), **_poly_fail(S, S.swap(), f"sweeplab poly square --a {a} --b {b}"))
    return comb(a + b, a)


def catalan_t_inv_q_sides(a: int, b: int):
    """Both sides of [a+b]_q q^((a-1)(b-1)/2) C_{b,-a,a,b}(q,1/q) = qbin(a+b; a, b)."""
    C = qt_catalan((b, -a), (a, b)).t_to_inv_q()
    return q_int(a + b) * C.shift((a - 1) * (b - 1) // 2), q_binomial(a, b)


def square_t_inv_q_sides(n: int, m: int):
    """[m+1]_{q^n} q^(m C(n,2)) S_{n,mn}(q,1/q) = (m+1) qbin(mn+n; mn, n)."""
    S = qt_square((n, m * n)).t_to_inv_q()
    return q_int(m + 1).q_to_power(n) * S.shift(m * comb(n, 2)), q_binomial(m * n, n) * (m + 1)


def rectangle_t_inv_q_sides(a: int, b: int):
    """[a'+b']_{q^k} q^(k(a'-1)(b'-1)/2 + a'b' C(k,2)) S_{a,b}(q,1/q) = (a'+b') qbin(a+b; a, b)."""
    k = gcd(a, b)
    a1, b1 = a // k, b // k
    S = qt_square((a, b)).t_to_inv_q()
    shift = k * (a1 - 1) * (b1 - 1) // 2 + a1 * b1 * comb(k, 2)
    return q_int(a1 + b1).q_to_power(k) * S.shift(shift), q_binomial(a, b) * (a1 + b1)


@suite("conjecture:catalan-t-inv-q", "cross-multiplied t = 1/q specialization of C_{b,-a,a,b}",
       _coprime_points, _ab_size)
def _conj_catalan_tq(p, cfg):
    a, b = p["a"], p["b"]
    lhs, rhs = catalan_t_inv_q_sides(a, b)
    _require(lhs == rhs, **_poly_fail(lhs, rhs, f"sweeplab poly catalan --r {b} --s {-a} --a {a} --b {b}"))
    return comb(a + b, a)


def _nm_points(cfg):
    return [{"n": n, "m": m} for n in range(1, cfg.sizemax + 1) for m in range(cfg.sizemax + 1)
            if n * m + n <= cfg.sizemax]


@suite("conjecture:square-t-inv-q", "cross-multiplied t = 1/q specialization of S_{n,mn}",
       _nm_points, lambda p, cfg: comb(p["n"] * p["m"] + p["n"], p["n"]))
def _conj_square_tq(p, cfg):
    n, m = p["n"], p["m"]
    lhs, rhs = square_t_inv_q_sides(n, m)
    _require(lhs == rhs, **_poly_fail(lhs, rhs, f"sweeplab poly square --a {n} --b {n * m}"))
    return comb(n * m + n, n)


@suite("conjecture:rectangle-t-inv-q", "cross-multiplied t = 1/q specialization of S_{a,b}",
       lambda cfg: [p for p in _ab_points(cfg) if p["a"] or p["b"]], _ab_size)
def _conj_rect_tq(p, cfg):
    a, b = p["a"], p["b"]
    lhs, rhs = rectangle_t_inv_q_sides(a, b)
    _require(lhs == rhs, **_poly_fail(lhs, rhs, f"sweeplab poly square --a {a} --b {b}"))
    return comb(a + b, a)


# -- inversion round trips -------------------------------------------------

def _level_counts(w, wt):
    n_cnt: dict[int, int] = {}
    e_cnt: dict[int, int] = {}
    for c, lv in zip(w, levels(w, wt)):
        d = n_cnt if c == "N" else e_cnt
        d[lv] = d.get(lv, 0) + 1
    return n_cnt, e_cnt


def haglund_facts(P: str) -> bool:
    """n_i = e_{i-1}, h_i = e_i and v_{i-1} = n_i for a Dyck word P and the bounce of its image."""
    n_cnt, e_cnt = _level_counts(P, (1, -1))
    bp = haglund_bounce(sweep_minus(P, (1, -1)))
    top = max(list(n_cnt) + list(e_cnt), default=0) + 1
    for i in range(top + 1):
        if n_cnt.get(i, 0) != e_cnt.get(i - 1, 0):
            return False
        if bp.horizontal.get(i, 0) != e_cnt.get(i, 0):
            return False
        if i >= 1 and bp.vertical.get(i - 1, 0) != n_cnt.get(i, 0):
            return False
    return True


@suite("inversion:haglund", "Haglund bounce labels invert sweep_minus(1,-1) on Dyck paths",
       _n_points, _catalan_size)
def _inv_haglund(p, cfg):
    dom = _sampled(list(enumerate_dyck(p["n"], p["n"], (1, -1))), cfg, p)
    for P in dom:
        Q = sweep_minus(P, (1, -1))
        cmd = f"sweeplab invert --method haglund --word {Q}"
        _require(haglund_labels(Q) == sweep_labels(P, (1, -1)), word=Q, expected=P, reason="labels differ",
                 command=cmd)
        got = invert_haglund(Q)
        _require(got == P, word=Q, expected=P, actual=got, command=cmd)
        _require(haglund_facts(P), word=P, reason="bounce lengths disagree with level counts", command=cmd)
    return len(dom)


@suite("inversion:trapezoid", "trapezoid bounce labels invert phi' and phi on T_{n,k,m}",
       _trap_points, _trap_size)
def _inv_trapezoid(p, cfg):
    n, k, m = p["n"], p["k"], p["m"]
    dom = _sampled(list(enumerate_trapezoid(n, k, m)), cfg, p)
    for P in dom:
        Q = phi_prime_trapezoid(P, n, k, m)
        got = invert_trapezoid(Q, n, k, m)
        _require(got == P, word=Q, expected=P, actual=got,
                 command=f"sweeplab invert --method trapezoid --word {Q} --k {k} --m {m}")
        Q2 = phi_trapezoid(P, n, k, m)
        got = invert_phi(Q2, n, k, m)
        _require(got == P, word=Q2, expected=P, actual=got,
                 command=f"sweeplab invert --method phi --word {Q2} --k {k} --m {m}")
    return 2 * len(dom)


@suite("inversion:square", "square bounce labels invert sweep_minus(1,-1) on W(N^n E^n)",
       _n_points, _square_size)
def _inv_square(p, cfg):
    dom = _sampled(list(enumerate_words(p["n"], p["n"])), cfg, p)
    for P in dom:
        Q = sweep_minus(P, (1, -1))
        cmd = f"sweeplab invert --method square --word {Q}"
        _require(square_labels(Q) == sweep_labels(P, (1, -1)), word=Q, expected=P, reason="labels differ",
                 command=cmd)
        got = invert_square(Q)
        _require(got == P, word=Q, expected=P, actual=got, command=cmd)
    return len(dom)


def _gm_points(cfg):
    pts = []
    for n in range(1, cfg.sizemax + 1):
        for m in range(1, cfg.sizemax + 1):
            for b in (n * m + 1, n * m - 1):
                if b > 0 and n + b <= cfg.sizemax and {"n": n, "b": b} not in pts:
                    pts.append({"n": n, "b": b})
    return pts


@suite("inversion:gm", "GM bounce labels invert sweep_plus(b,-n).rev for b = nm +/- 1",
       _gm_points, lambda p, cfg: comb(p["n"] + p["b"], p["n"]))
def _inv_gm(p, cfg):
    n, b = p["n"], p["b"]
    gm_sign(n, b)
    dom = _sampled(list(enumerate_dyck(n, b, (b, -n))), cfg, p)
    for P in dom:
        Q = sweep_plus(rev(P), (b, -n))
        got = invert_gm_word(Q, n, b)
        _require(got == P, word=Q, expected=P, actual=got,
                 command=f"sweeplab invert --method gm --word {Q} --n {n} --b {b}")
    return len(dom)


@suite("inversion:brute", "every Q in W(N^a E^b) has exactly one preimage under the sweep",
       _rs_points, _all_words_size)
def _inv_brute(p, cfg):
    r, s = p["r"], p["s"]
    plus = cfg.variant == "plus"
    checked = 0
    for a, b in _shapes(cfg.sizemax):
        words, codes = _word_batch((("E", b), ("N", a)), "EN")
        images = kernels.decode(kernels.sweep_batch(codes, (s, r), plus), "EN")
        pre: dict[str, list[str]] = {}
        for w, img in zip(words, images):
            pre.setdefault(img, []).append(w)
        for Q in words:
            hits = pre.get(Q, [])
            _require(len(hits) == 1, word=Q, preimages=hits, a=a, b=b,
                     command=f"sweeplab invert --method brute --word {Q} --r {r} --s {s} --variant {cfg.variant}")
        checked += len(words)
    return checked


# -- running -----------------------------------------------------------------

def run_point(name: str, params: dict, cfg: CampaignConfig) -> PointResult:
    st = SUITES[name]
    size = st.size(params, cfg)
    if size > cfg.budget:
        return PointResult(params, SKIPPED, 0, None, f"{size} objects exceed budget {cfg.budget}")
    try:
        checked = st.check(params, cfg)
    except _Fail as exc:
        return PointResult(params, FAIL, 0, dict(exc.payload, replay=replay_command(name, params, cfg)))
    except BudgetError as exc:
        return PointResult(params, SKIPPED, 0, None, str(exc))
    except SweepLabError as exc:
        return PointResult(params, FAIL, 0, {"error": type(exc).__name__, "message": str(exc)})
    return PointResult(params, PASS, checked)


def replay_command(name: str, params: dict, cfg: CampaignConfig) -> str:
    """A ``verify`` invocation that re-runs exactly one parameter point."""
    point = ",".join(f"{k}={v}" for k, v in params.items())
    flags = "".join(f" --{k} {v}" for k, v in asdict(cfg).items()
                    if k != "jobs" and v != getattr(CampaignConfig, k))
    return f"sweeplab verify {name} --point {point}{flags}"


def parse_point(text: str) -> dict:
    out = {}
    for item in text.split(","):
        key, sep, val = item.partition("=")
        if not sep:
            raise ParameterError(f"bad point item {item!r}; expected key=value")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise ParameterError(f"point value for {key!r} must be an integer") from None
    return out


def _run_star(job):
    return run_point(*job)


def campaign_id(name: str, cfg: CampaignConfig) -> str:
    body = {k: v for k, v in asdict(cfg).items() if k != "jobs"}
    digest = hashlib.sha256(json.dumps([name, body], sort_keys=True).encode()).hexdigest()
    return f"{name}@{digest[:12]}"


def run_campaign(name: str, cfg: CampaignConfig | None = None, progress: Callable[[PointResult], None] | None = None,
                 timing: bool = False, only: dict | None = None) -> dict:
    """Run suite ``name`` and return the report as a JSON-ready dict."""
    if name not in SUITES:
        raise ParameterError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    cfg = cfg or CampaignConfig()
    cfg.validate()
    points = SUITES[name].points(cfg)
    if only is not None:
        if only not in points:
            raise ParameterError(f"point {only} is not in the grid of {name} under this config")
        points = [only]
    jobs = [(name, p, cfg) for p in points]
    start = time.perf_counter()
    results: list[PointResult] = []
    if cfg.jobs > 1 and len(jobs) > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(cfg.jobs) as pool:
            for res in pool.imap(_run_star, jobs):
                results.append(res)
                if progress:
                    progress(res)
    else:
        for job in jobs:
            res = _run_star(job)
            results.append(res)
            if progress:
                progress(res)
    totals = {"points": len(results), PASS: 0, FAIL: 0, SKIPPED: 0,
              "checked": sum(r.checked for r in results)}
    for r in results:
        totals[r.status] += 1
    status = FAIL if totals[FAIL] else (SKIPPED if totals[SKIPPED] else PASS)
    config = {k: v for k, v in asdict(cfg).items() if k != "jobs"}
    report: dict[str, Any] = {
        "schema": SCHEMA,
        "campaign": campaign_id(name, cfg),
        "suite": name,
        "config": config,
        "status": status,
        "totals": totals,
        "points": [asdict(r) for r in results],
    }
    if timing:
        report["wall_time_s"] = round(time.perf_counter() - start, 6)
    return report


def exit_code(report: dict) -> int:
    return {PASS: 0, FAIL: 1, SKIPPED: 4}[report["status"]]


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
