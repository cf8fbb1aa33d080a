import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sweeplab import kernels
from sweeplab.paths import enumerate_multiset, enumerate_words, levels
from sweeplab.stats import area, ml
from sweeplab.sweeps import sweep_general, sweep_minus, sweep_plus

IMPLS = [kernels.get_backend(name) for name in kernels.BACKENDS]
IDS = list(kernels.BACKENDS)


@pytest.mark.parametrize("impl", IMPLS, ids=IDS)
def test_sweep_batch_matches_reference(impl):
    for a, b in [(4, 5), (3, 3), (0, 4), (5, 0)]:
        words = list(enumerate_words(a, b))
        codes = kernels.encode(words, "EN")
        for r in range(-3, 4):
            for s in range(-3, 4):
                for plus, ref in ((False, sweep_minus), (True, sweep_plus)):
                    got = kernels.decode(kernels.sweep_batch(codes, (s, r), plus, impl=impl), "EN")
                    assert got == [ref(w, (r, s)) for w in words]


@pytest.mark.parametrize("impl", IMPLS, ids=IDS)
def test_three_letter_batch(impl):
    words = list(enumerate_multiset({"D": 2, "E": 3, "N": 3}, "DEN"))
    codes = kernels.encode(words, "DEN")
    for wt in [(0, -1, 1), (2, -2, 1), (-1, 0, 2)]:
        got = kernels.decode(kernels.sweep_batch(codes, wt, impl=impl), "DEN")
        assert got == [sweep_general(w, dict(zip("DEN", wt))) for w in words]


@pytest.mark.parametrize("impl", IMPLS, ids=IDS)
def test_area_and_min_level(impl):
    words = list(enumerate_words(4, 4))
    codes = kernels.encode(words, "EN")
    assert kernels.area_batch(codes, impl=impl).tolist() == [area(w) for w in words]
    assert kernels.min_level_batch(codes, (-2, 3), impl=impl).tolist() == [ml(w, (3, -2)) for w in words]
    assert impl.levels_batch(codes, np.array([-2, 3])).tolist() == [levels(w, (3, -2)) for w in words]


def test_empty_rows():
    codes = kernels.encode([""], "EN")
    for impl in IMPLS:
        assert kernels.sweep_batch(codes, (1, -1), impl=impl).shape == (1, 0)


def test_encode_errors():
    with pytest.raises(ValueError):
        kernels.encode(["NE", "N"], "EN")
    with pytest.raises(ValueError):
        kernels.encode(["NX"], "EN")


def test_overflow_guard():
    codes = kernels.encode(["NE"], "EN")
    with pytest.raises(OverflowError):
        kernels.sweep_batch(codes, (2**60, 1))
    with pytest.raises(OverflowError):
        kernels.pack_rows(np.zeros((1, 70), dtype=np.int8), 2)


def test_first_collision():
    img = kernels.encode(["NE", "EN", "NE", "NN"], "EN")
    assert kernels.first_collision(img, 2) == (0, 2)
    assert kernels.first_collision(img[:2], 2) is None


@pytest.mark.parametrize("name", ["numpy", "numba"])
def test_backend_chosen_by_env(name):
    env = dict(os.environ, SWEEPLAB_BACKEND=name)
    out = subprocess.run([sys.executable, "-c", "from sweeplab import kernels; print(kernels.backend.NAME)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == name


def test_bad_backend_name():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


@given(st.lists(st.text(alphabet="NE", min_size=7, max_size=7), min_size=1, max_size=20),
       st.integers(-5, 5), st.integers(-5, 5), st.booleans())
def test_backends_agree(words, r, s, plus):
    codes = kernels.encode(words, "EN")
    outs = [kernels.sweep_batch(codes, (s, r), plus, impl=impl) for impl in IMPLS]
    assert all(np.array_equal(outs[0], o) for o in outs[1:])
