"""Compare the numba and numpy batch kernels (and the pure-Python reference).

The workload is the three-letter bijectivity campaign: every word of
length <= 8 over {D, E, N} under every weight triple in [-2, 2]^3,
about 1.23M sweeps, each batch followed by a collision check.

    python3 benchmarks/bench_kernels.py [--sizemax 8] [--wmax 2] [--python-sample 20000]
"""

import argparse
import itertools
import time

from sweeplab import kernels
from sweeplab.harness import letter_multisets
from sweeplab.paths import enumerate_multiset
from sweeplab.sweeps import sweep_general


def batches(sizemax):
    out = []
    for total in range(sizemax + 1):
        for counts in letter_multisets(total, "DEN"):
            words = list(enumerate_multiset(dict(counts), "DEN"))
            out.append((words, kernels.encode(words, "DEN")))
    return out


def run_kernel(impl, data, weights):
    calls = 0
    for wt in weights:
        for words, codes in data:
            images = kernels.sweep_batch(codes, wt, impl=impl)
            assert kernels.first_collision(images, 3) is None
            calls += len(words)
    return calls


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizemax", type=int, default=8)
    ap.add_argument("--wmax", type=int, default=2)
    ap.add_argument("--python-sample", type=int, default=20000,
                    help="words swept by the pure-Python reference; its total is extrapolated")
    args = ap.parse_args()

    rng = range(-args.wmax, args.wmax + 1)
    weights = list(itertools.product(rng, repeat=3))  # order D, E, N
    data = batches(args.sizemax)

    nb = kernels.get_backend("numba")
    run_kernel(nb, data[:3], weights[:1])  # load or compile outside the timed region

    rows = []
    for name in ("numba", "numpy"):
        impl = kernels.get_backend(name)
        t0 = time.perf_counter()
        calls = run_kernel(impl, data, weights)
        rows.append((name, calls, time.perf_counter() - t0, False))

    words = [w for ws, _ in data for w in ws]
    sample = list(itertools.islice(itertools.cycle(words), args.python_sample))
    wt = dict(zip("DEN", weights[len(weights) // 3]))
    t0 = time.perf_counter()
    for w in sample:
        sweep_general(w, wt)
    per_call = (time.perf_counter() - t0) / max(len(sample), 1)
    total = rows[0][1]
    rows.append(("python", total, per_call * total, True))

    print(f"{'backend':<8} {'sweeps':>10} {'seconds':>9} {'us/sweep':>9}")
    for name, calls, secs, est in rows:
        mark = " (extrapolated)" if est else ""
        print(f"{name:<8} {calls:>10} {secs:>9.2f} {1e6 * secs / calls:>9.3f}{mark}")


if __name__ == "__main__":
    main()
