import pytest
from hypothesis import given, strategies as st

from sweeplab.classical import enumerate_trapezoid, phi_prime_trapezoid, phi_trapezoid
from sweeplab.errors import BudgetError, NotInImageError, ParameterError
from sweeplab.inversion import (
    brute_force_inverse, gm_labels, gm_sign, haglund_bounce, haglund_labels, invert_gm_word,
    invert_haglund, invert_phi, invert_square, invert_trapezoid, replay, replay_inverse,
    square_labels, trapezoid_labels, word_domain_size,
)
from sweeplab.paths import WS, enumerate_dyck, enumerate_words, flip, levels, rev
from sweeplab.sweeps import INCREASING, LEFT, RIGHT, directed_order, sweep_labels, sweep_minus, sweep_plus

DYCK16_P = "NNEENNNNNEENNEENEEENNEENNEEENNEE"
DYCK16_OMEGA = "NENNENNENNNENNENEEENEEENENNEENEE"
DYCK14_W = "NENNNEEENNENNEENNNEENEEENNEE"
DYCK14_Y = "NNENNNNEENENNENENEEENENNEEEE"
SQUARE_WORD = "ENEENENNNNEENEEEENNNENEENNNNENEE"


# -- replay -----------------------------------------------------------------

def test_replay_golden_5_3():
    P = "ENEENNEE"
    Q = sweep_minus(P, (5, -3))
    assert replay_inverse(Q, sweep_labels(P, (5, -3)), (5, -3)) == P


def test_replay_trivial():
    assert replay_inverse("NE", [1, 0], (1, -1)) == "NE"


def test_replay_wrong_labels_stick():
    assert replay_inverse("NNEE", [1, 1, 0, 0], (1, -1)) == "NENE"
    for bad in ([1, 0, 1, 0], [2, 1, 0, 0], [1, 1, 1, 0]):
        with pytest.raises(NotInImageError):
            replay_inverse("NNEE", bad, (1, -1))
    with pytest.raises(NotInImageError):
        replay_inverse("NNEE", [1, 1, 0], (1, -1))


def test_replay_both_variants_exhaustive():
    for r in range(-3, 4):
        for s in range(-3, 4):
            for a in range(5):
                for b in range(7 - a):
                    for P in enumerate_words(a, b):
                        Q = sweep_minus(P, (r, s))
                        assert replay_inverse(Q, sweep_labels(P, (r, s)), (r, s)) == P
                        Q = sweep_plus(P, (r, s))
                        assert replay_inverse(Q, sweep_labels(P, (r, s), True), (r, s), "plus") == P


def test_replay_ws_front_to_back():
    P = "ENEENNEE"
    lv = levels(P, (5, -3), WS)
    Q = "".join(P[i] for i in sorted(range(len(P)), key=lambda i: (lv[i], i)))
    labs = sorted(lv)
    assert replay(Q, labs, (5, -3), WS, RIGHT) == P
    Q = "".join(P[i] for i in sorted(range(len(P)), key=lambda i: (lv[i], -i)))
    assert replay(Q, labs, (5, -3), WS, LEFT) == P


def test_replay_variant_check():
    with pytest.raises(ParameterError):
        replay_inverse("NE", [1, 0], (1, -1), "sideways")


# -- Haglund ------------------------------------------------------------------

def test_haglund_trivial():
    assert haglund_labels("NE") == [1, 0]
    assert invert_haglund("NE") == "NE"


def test_haglund_round_trip():
    for n in range(1, 9):
        for P in enumerate_dyck(n, n, (1, -1)):
            Q = sweep_minus(P, (1, -1))
            assert haglund_labels(Q) == sweep_labels(P, (1, -1))
            assert invert_haglund(Q) == P


def test_dyck14_pair():
    assert sweep_minus(DYCK14_W, (1, -1)) == DYCK14_Y
    assert invert_haglund(DYCK14_Y) == DYCK14_W


def test_haglund_bounce_lengths_match_level_counts():
    for n in range(1, 9):
        for P in enumerate_dyck(n, n, (1, -1)):
            lv = levels(P, (1, -1))
            n_cnt = lambda i: sum(1 for c, l in zip(P, lv) if c == "N" and l == i)
            e_cnt = lambda i: sum(1 for c, l in zip(P, lv) if c == "E" and l == i)
            bp = haglund_bounce(sweep_minus(P, (1, -1)))
            for i in range(n + 2):
                assert n_cnt(i) == e_cnt(i - 1)
                assert bp.horizontal.get(i, 0) == e_cnt(i)
                if i:
                    assert bp.vertical.get(i - 1, 0) == n_cnt(i)


# -- trapezoid ---------------------------------------------------------------

GRID = [(n, k, m) for n in range(1, 6) for k in range(3) for m in range(1, 3)]


def test_trapezoid_round_trip():
    for n, k, m in GRID + [(6, 0, 1), (2, 3, 2)]:
        for P in enumerate_trapezoid(n, k, m):
            Q = phi_prime_trapezoid(P, n, k, m)
            assert invert_trapezoid(Q, n, k, m) == P
            assert invert_phi(phi_trapezoid(P, n, k, m), n, k, m) == P


def test_trapezoid_labels_are_true_levels():
    # phi' emits the steps of P by increasing west-south (m, -1)-level offset by k
    for n, k, m in [(4, 0, 1), (3, 1, 2), (3, 2, 2), (2, 3, 1)]:
        wt = {"N": m, "E": -1}
        for P in enumerate_trapezoid(n, k, m):
            Q = phi_prime_trapezoid(P, n, k, m)
            lv = [k + v for v in levels(P, wt, WS)]
            order = directed_order(P, wt, WS, INCREASING, LEFT, -k)
            assert "".join(P[i] for i in order) == Q
            assert trapezoid_labels(Q, n, k, m) == [lv[i] for i in order]


def test_phi_dyck16_pair():
    n = DYCK16_P.count("N")
    assert phi_trapezoid(DYCK16_OMEGA, n, 0, 1) == DYCK16_P
    assert invert_phi(DYCK16_P, n, 0, 1) == DYCK16_OMEGA


def test_m1_k0_labels_are_haglund_labels_conjugated():
    for n in range(1, 7):
        for P in enumerate_dyck(n, n, (1, -1)):
            Q = phi_trapezoid(P, n, 0, 1)
            # phi_{n,0,1} = flip.rev.sweep_minus, so rev.flip(Q) is the Haglund input
            assert invert_haglund(flip(rev(Q))) == P


# -- square -------------------------------------------------------------------

def test_square_round_trip():
    for n in range(1, 6):
        for P in enumerate_words(n, n):
            Q = sweep_minus(P, (1, -1))
            assert square_labels(Q) == sweep_labels(P, (1, -1))
            assert invert_square(Q) == P


def test_square_example_pair():
    assert invert_square(sweep_minus(SQUARE_WORD, (1, -1))) == SQUARE_WORD


def test_square_labels_reduce_to_haglund_on_dyck():
    for n in range(1, 6):
        for P in enumerate_dyck(n, n, (1, -1)):
            Q = sweep_minus(P, (1, -1))
            assert square_labels(Q) == haglund_labels(Q)


# -- Gorsky-Mazin special families ----------------------------------------------

@pytest.mark.parametrize("n,b", [(3, 7), (3, 5), (2, 1), (2, 3), (4, 5), (4, 9), (5, 4), (2, 5)])
def test_gm_round_trip(n, b):
    for P in enumerate_dyck(n, b, (b, -n)):
        Q = sweep_plus(rev(P), (b, -n))
        assert invert_gm_word(Q, n, b) == P
        assert brute_force_inverse(Q, lambda w: sweep_plus(rev(w), (b, -n)), enumerate_dyck(n, b, (b, -n))) == [P]


def test_gm_sign():
    assert gm_sign(3, 7) == (2, "plus")
    assert gm_sign(3, 5) == (2, "minus")
    with pytest.raises(ParameterError):
        gm_sign(3, 6)
    m, sign = gm_sign(3, 7)
    P = next(iter(enumerate_dyck(3, 7, (7, -3))))
    assert len(gm_labels(sweep_plus(rev(P), (7, -3)), 3, m, sign)) == 10


# -- outside the image -----------------------------------------------------------

CASES = [
    ("haglund", (4, 4), invert_haglund, lambda P: sweep_minus(P, (1, -1))),
    ("square", (4, 4), invert_square, lambda P: sweep_minus(P, (1, -1))),
    ("trapezoid", (3, 7), lambda Q: invert_trapezoid(Q, 3, 1, 2), lambda P: phi_prime_trapezoid(P, 3, 1, 2)),
    ("phi", (3, 7), lambda Q: invert_phi(Q, 3, 1, 2), lambda P: phi_trapezoid(P, 3, 1, 2)),
    ("gm-plus", (3, 7), lambda Q: invert_gm_word(Q, 3, 7), lambda P: sweep_plus(rev(P), (7, -3))),
    ("gm-minus", (3, 5), lambda Q: invert_gm_word(Q, 3, 5), lambda P: sweep_plus(rev(P), (5, -3))),
]


@pytest.mark.parametrize("name,shape,inv,fwd", CASES, ids=[c[0] for c in CASES])
def test_inverse_never_returns_a_wrong_preimage(name, shape, inv, fwd):
    hits = 0
    for Q in enumerate_words(*shape):
        try:
            P = inv(Q)
        except NotInImageError:
            continue
        assert fwd(P) == Q
        hits += 1
    assert hits > 0


# -- brute force ------------------------------------------------------------------

def test_brute_force_golden_5_3():
    got = brute_force_inverse("EEENENNE", lambda w: sweep_minus(w, (5, -3)), enumerate_words(3, 5))
    assert got == ["ENEENNEE"]


def test_brute_force_empty_and_budget():
    assert brute_force_inverse("NNN", lambda w: sweep_minus(w, (1, -1)), enumerate_words(3, 5)) == []
    with pytest.raises(BudgetError):
        brute_force_inverse("NE", lambda w: w, enumerate_words(3, 5), budget=10)
    with pytest.raises(BudgetError):
        brute_force_inverse("NE", lambda w: w, iter(()), budget=10, size=word_domain_size(3, 5))


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 4), st.integers(0, 4), st.data())
def test_brute_force_singletons(r, s, a, b, data):
    words = list(enumerate_words(a, b))
    Q = data.draw(st.sampled_from(words))
    got = brute_force_inverse(Q, lambda w: sweep_minus(w, (r, s)), words)
    assert len(got) == 1 and sweep_minus(got[0], (r, s)) == Q
