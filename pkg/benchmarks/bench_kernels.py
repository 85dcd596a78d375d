"""Compiled vs pure-numpy kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 5] [--quick]

Prints best-of-``repeat`` wall times per backend and the speedup.
"""
import argparse
import timeit

import numpy as np

import gaussft
from gaussft import reference as R
from gaussft import transform as T
from gaussft.faddeeva import w
from gaussft.sampling import SampledFunction


def workloads(quick):
    rng = np.random.default_rng(0)
    m = 20_000 if quick else 200_000
    z_upper = rng.uniform(-10, 10, m) + 1j * rng.uniform(0, 10, m)
    z_lower = rng.uniform(-5, 5, m) + 1j * rng.uniform(-5, 0, m)
    cfg = R.FIGURES["fig7"].config
    f = SampledFunction.from_function(R.example_f, cfg)
    even, _ = R.example_samples(cfg)
    nu = np.linspace(-10, 10, 401 if quick else 2001)
    grid = T.EvaluationGrid(nu)
    table = T.precompute_weights(cfg, grid)
    return [
        (f"w, {m} points, upper half-plane", lambda: w(z_upper)),
        (f"w, {m} points, lower half-plane", lambda: w(z_lower)),
        (f"forward_weighted N=300, {len(nu)} nu", lambda: T.forward_weighted(f, cfg, nu)),
        (f"forward_truncated N=300, {len(nu)} nu", lambda: T.forward_truncated(f, cfg, nu)),
        (f"precompute_weights N=300, {len(nu)} nu", lambda: T.precompute_weights(cfg, grid)),
        (f"forward_with_table N=300, {len(nu)} nu", lambda: T.forward_with_table(f, table)),
        (f"forward_harmonic N=300, {len(nu)} nu", lambda: T.forward_harmonic(f, cfg, nu)),
        (f"forward_even N=300, {len(nu)} nu", lambda: T.forward_even(even, cfg, nu)),
    ]


def best_time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--quick", action="store_true", help="smaller problem sizes")
    args = ap.parse_args(argv)

    backends = gaussft.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; timing the python backend only")
    jobs = workloads(args.quick)
    width = max(len(name) for name, _ in jobs)
    print(f"{'workload':<{width}}  " + "  ".join(f"{b:>10}" for b in backends) + "   speedup")
    prev = gaussft.get_backend()
    try:
        for name, fn in jobs:
            times = {}
            for b in backends:
                gaussft.set_backend(b)
                fn()  # warm up
                times[b] = best_time(fn, args.repeat)
            cells = "  ".join(f"{times[b] * 1e3:8.2f}ms" for b in backends)
            speed = f"{times['python'] / times['compiled']:8.1f}x" if "compiled" in times else ""
            print(f"{name:<{width}}  {cells}  {speed}")
    finally:
        gaussft.set_backend(prev)


if __name__ == "__main__":
    main()
