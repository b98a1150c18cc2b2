"""Compare the compiled and pure-Python arithmetic kernels.

Times the primitive operations both backends expose (polynomial multiply,
divmod, gcd, modular powering) and one end-to-end factorization per field
regime, then prints a table of medians with the speedup ratio.

Run from the repository root after an editable install:

    python bench/kernel_bench.py [--n 256] [--trials 5] [--seed 0]

The compiled backend must be importable for the comparison; otherwise the
script reports pure-only numbers.
"""

import argparse
import random
import statistics
import sys
import time


def _median_time(fn, trials):
    times = []
    for _ in range(trials):
        started = time.perf_counter()
        fn()
        times.append(time.perf_counter() - started)
    return statistics.median(times)


def _random_coeffs(rng, n, q):
    return [rng.randrange(q) for _ in range(n - 1)] + [1]


def kernel_cases(kernels, n, seed):
    """(name, callable) pairs over deterministic inputs for one backend."""
    p = 101
    rng = random.Random(seed)
    a = _random_coeffs(rng, n, p)
    b = _random_coeffs(rng, n, p)
    f = _random_coeffs(rng, n + 1, p)
    return [
        ("mul deg %d" % (n - 1), lambda: kernels.mul_p(a, b, p)),
        ("divmod deg %d" % (2 * n - 2),
         lambda: kernels.divmod_p(kernels.mul_p(a, b, p), f, p)),
        ("gcd deg %d" % (n - 1), lambda: kernels.gcd_p(a, b, p)),
        ("powmod q^8", lambda: kernels.powmod_p(a, 101 ** 8, f, p)),
    ]


def pipeline_case(n, seed):
    from drinfactor import factor_randomized, random_factor_mix
    from drinfactor.field import FieldSpec

    spec = FieldSpec(101)
    rng = random.Random(seed)
    f = random_factor_mix(spec, n, rng)
    return lambda: factor_randomized(f, seed=seed)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=256, help="operand degree scale")
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    from drinfactor import _kernel_py
    try:
        from drinfactor import _kernel_c
    except ImportError:
        _kernel_c = None

    rows = []
    for name, fn in kernel_cases(_kernel_py, args.n, args.seed):
        rows.append([name, _median_time(fn, args.trials), None])
    if _kernel_c is not None:
        for row, (name, fn) in zip(rows, kernel_cases(_kernel_c, args.n, args.seed)):
            row[2] = _median_time(fn, args.trials)

    # end-to-end through whichever backend the package selected
    from drinfactor import BACKEND
    pipe = pipeline_case(args.n, args.seed)
    pipe_time = _median_time(pipe, max(1, args.trials // 2))
    print("active backend: %s" % BACKEND)
    print()
    header = ("operation", "pure (s)", "compiled (s)", "speedup")
    print("%-22s %12s %14s %9s" % header)
    for name, pure_t, comp_t in rows:
        if comp_t is None:
            print("%-22s %12.6f %14s %9s" % (name, pure_t, "-", "-"))
        else:
            print("%-22s %12.6f %14.6f %8.1fx" % (name, pure_t, comp_t, pure_t / comp_t))
    print()
    print("factor_randomized n=%d via %s backend: %.4f s"
          % (args.n, BACKEND, pipe_time))
    if _kernel_c is None:
        print("compiled kernel unavailable; install with Cython to compare",
              file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
