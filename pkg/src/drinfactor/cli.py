"""Command-line surface.

Subcommands: factor (canonical factor lines on stdout, run comment on
stderr), stats (CSV experiment drivers for the splitting-density and
sweep-stopping-time bounds), bench (CSV median wall times), selftest
(quick invariant suite).  Exit codes: 0 ok, 2 usage, 3 integrity.
"""

import argparse
import csv
import math
import random
import statistics
import sys
import time

from . import __version__
from .baseline import factor_full, is_irreducible, random_factor_mix, random_irreducible
from .errors import IntegrityError
from .factor import (
    FactorSet,
    factor,
    factor_edf_deterministic,
    factor_randomized,
    verify_factorization,
)
from .field import FieldSpec, build_extension
from .poly import Poly, parse_poly, squarefree_decomposition

DENSITY_Q_LIMIT = 10_000
STOPPING_Q_LIMIT = 500


def _field(args) -> FieldSpec:
    if args.ext_degree < 1:
        raise ValueError("extension degree must be >= 1")
    if args.ext_degree == 1:
        return FieldSpec(args.p)
    return build_extension(args.p, args.ext_degree)


# ----------------------------------------------------------------- factor

def _partial_ok(f: Poly, fs: FactorSet, bound: int) -> bool:
    # with a degree bound the product check does not apply; each factor
    # must divide f, be irreducible, and respect the bound
    for g, _ in fs:
        if g.degree > bound or not (f % g).is_zero():
            return False
        if not is_irreducible(g):
            return False
    return True


def cmd_factor(args) -> int:
    spec = _field(args)
    f = parse_poly(args.poly, spec)
    if f.degree < 1:
        raise ValueError("input must have degree >= 1")
    if not f.is_monic:
        raise ValueError("input must be monic")
    started = time.perf_counter()
    if args.algo == "drinfeld-edf":
        if args.k is None:
            raise ValueError("--algo drinfeld-edf requires --k (the common factor degree)")
        result = factor_edf_deterministic(f, args.k)
    elif args.algo == "cz":
        result = factor_full(f, seed=args.seed)
    elif args.m is None and not args.literal_step4:
        result = factor(f, seed=args.seed)
    else:
        rng = random.Random(args.seed)
        items = []
        for part, mult in squarefree_decomposition(f):
            bound = part.degree if args.m is None else min(args.m, part.degree)
            fs = factor_randomized(
                part, bound, seed=rng.getrandbits(32), literal_step4=args.literal_step4
            )
            items.extend((g, inner * mult) for g, inner in fs)
        result = FactorSet(items)
    if args.m is not None:
        result = FactorSet((g, inner) for g, inner in result if g.degree <= args.m)
    elapsed = time.perf_counter() - started

    if args.verify:
        if args.m is not None and args.m < f.degree:
            ok = _partial_ok(f, result, args.m)
        else:
            ok = verify_factorization(f, result)
        if not ok:
            print("verification failed: output is not a factorization of the input",
                  file=sys.stderr)
            return 3
    for line in result.lines():
        print(line)
    if args.m is not None and args.m < f.degree:
        cofactor = f // result.product() if len(result) else f
        if cofactor.degree > 0:
            print("# cofactor=%s" % cofactor, file=sys.stderr)
    print("# algo=%s seed=%d t=%.4fs" % (args.algo, args.seed, elapsed),
          file=sys.stderr)
    return 0


# ------------------------------------------------------------------ stats

def density_rows(spec: FieldSpec, k: int, pairs: int, seed: int = 0):
    """Splitting-density experiment rows.

    For each random pair of distinct monic irreducibles of degree k, count
    N = #{a : exactly one of the pair is supersingular for the module at a},
    classified by the quadratic character of p_i(a).  Returns
    (q, k, p1, p2, N, q/2, 2(k-1)sqrt(q)) tuples.
    """
    if spec.q > DENSITY_Q_LIMIT:
        raise ValueError("density experiment requires q <= %d" % DENSITY_Q_LIMIT)
    if k < 2:
        raise ValueError("density pairs must have degree k >= 2")
    if pairs < 1:
        raise ValueError("need at least one pair")
    rng = random.Random(seed)
    bound = 2 * (k - 1) * math.sqrt(spec.q)
    rows = []
    for _ in range(pairs):
        p1 = random_irreducible(spec, k, rng)
        p2 = p1
        while p2 == p1:
            p2 = random_irreducible(spec, k, rng)
        count = 0
        for a in range(spec.q):
            pt = spec._wrap(a)
            c1 = spec.chi(p1.evaluate(pt).raw)
            c2 = spec.chi(p2.evaluate(pt).raw)
            if c1 == 0 or c2 == 0:
                raise IntegrityError("irreducible of degree >= 2 has a root")
            if c1 != c2:
                count += 1
        rows.append((spec.q, k, str(p1), str(p2), count, spec.q / 2, bound))
    return rows


def _all_irreducibles(spec: FieldSpec, d: int):
    """Every monic irreducible of degree d, in ascending coefficient order."""
    if d == 2:
        # x^2 + bx + c irreducible iff the discriminant b^2 - 4c is a nonsquare
        out = []
        for c in range(spec.q):
            for b in range(spec.q):
                disc = spec.sub(spec.mul(b, b), spec.mul(4 % spec.p, c))
                if spec.chi(disc) == -1:
                    out.append(Poly(spec, [c, b, 1]))
        out.sort(key=Poly.sort_key)
        return out
    out = []
    for packed in range(spec.q ** d):
        coeffs = []
        v = packed
        for _ in range(d):
            coeffs.append(v % spec.q)
            v //= spec.q
        coeffs.append(1)
        g = Poly(spec, coeffs)
        if is_irreducible(g):
            out.append(g)
    return out


def stopping_rows(spec: FieldSpec, d: int, pairs=None, seed: int = 0):
    """Sweep-stopping-time experiment rows.

    For pairs of distinct monic irreducibles of degree d, find the first
    a in the sweep order 0, 1, 2, ... on which their quadratic characters
    differ (the first splitting index of the deterministic algorithm), and
    compare against the 2 d sqrt(q) log q bound.  All pairs by default;
    pass pairs to sample that many at random instead.  A missing split is
    reported as first index -1 (it would mean the bound fails outright).
    Returns (q, d, p1, p2, first_index, max_index, bound) tuples where
    max_index is the maximum first index over the whole run.
    """
    if spec.e != 1:
        raise ValueError("stopping-time experiment requires prime q")
    if spec.q > STOPPING_Q_LIMIT:
        raise ValueError("stopping-time experiment requires q <= %d" % STOPPING_Q_LIMIT)
    if d < 2:
        raise ValueError("stopping-time pairs must have degree d > 1")
    polys = _all_irreducibles(spec, d)
    signs = [tuple(spec.chi(g.evaluate(spec._wrap(a)).raw) for a in range(spec.q))
             for g in polys]
    if pairs is None:
        index_pairs = [(i, j) for i in range(len(polys)) for j in range(i + 1, len(polys))]
    else:
        rng = random.Random(seed)
        total = len(polys)
        index_pairs = []
        for _ in range(pairs):
            i = rng.randrange(total)
            j = rng.randrange(total - 1)
            if j >= i:
                j += 1
            index_pairs.append((min(i, j), max(i, j)))
    bound = 2 * d * math.sqrt(spec.q) * math.log(spec.q)
    rows = []
    for i, j in index_pairs:
        first = next((a for a in range(spec.q) if signs[i][a] != signs[j][a]), -1)
        rows.append([spec.q, d, str(polys[i]), str(polys[j]), first, bound])
    max_index = max((r[4] for r in rows), default=-1)
    return [(r[0], r[1], r[2], r[3], r[4], max_index, r[5]) for r in rows]


def cmd_stats(args) -> int:
    spec = _field(args)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    if args.experiment == "density":
        pairs = 20 if args.pairs is None else args.pairs
        writer.writerow(["q", "k", "p1", "p2", "N", "half_q", "bound"])
        for q, k, p1, p2, n, half, bound in density_rows(spec, args.k, pairs, args.seed):
            writer.writerow([q, k, p1, p2, n, "%g" % half, "%.3f" % bound])
    else:
        writer.writerow(["q", "d", "p1", "p2", "first_index", "max_index", "bound"])
        for q, d, p1, p2, first, mx, bound in stopping_rows(
            spec, args.k, args.pairs, args.seed
        ):
            writer.writerow([q, d, p1, p2, first, mx, "%.3f" % bound])
    return 0


# ------------------------------------------------------------------ bench

def bench_rows(spec: FieldSpec, algos, sizes, trials: int, seed: int = 0):
    """Median wall time rows (algo, q, n, trials, median_seconds).

    Inputs are monic squarefree products of distinct random irreducibles
    (degrees 2..12), generated outside the timed window and shared by all
    algorithms at a given (n, trial).
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    inputs = {}
    for n in sizes:
        for t in range(trials):
            rng = random.Random("%d:%d:%d" % (seed, n, t))
            inputs[n, t] = random_factor_mix(spec, n, rng)
    rows = []
    for algo in algos:
        for n in sizes:
            times = []
            for t in range(trials):
                f = inputs[n, t]
                started = time.perf_counter()
                if algo == "drinfeld-random":
                    factor_randomized(f, seed=seed + t)
                else:
                    factor_full(f, seed=seed + t)
                times.append(time.perf_counter() - started)
            rows.append((algo, spec.q, n, trials, statistics.median(times)))
    return rows


def cmd_bench(args) -> int:
    spec = _field(args)
    sizes = args.sizes or [64, 128]
    algos = ("drinfeld-random", "cz") if args.algo == "both" else (args.algo,)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["algo", "q", "n", "trials", "median_seconds"])
    for algo, q, n, trials, med in bench_rows(spec, algos, sizes, args.trials, args.seed):
        writer.writerow([algo, q, n, trials, "%.6f" % med])
    return 0


# --------------------------------------------------------------- selftest

def _selftest_checks():
    from .cm import CMModule
    from .hasse import lift_at
    from .poly import format_poly, gcd as pgcd
    from .skew import hasse_direct

    def fixture():
        spec = FieldSpec(5)
        f = Poly.from_ints(spec, [2, 2, 3, 1, 1])
        phi = CMModule(spec.zero)
        p1 = Poly.from_ints(spec, [2, 0, 1])
        p2 = Poly.from_ints(spec, [1, 1, 1])
        assert lift_at(phi, p1, 2).is_zero()
        assert list(lift_at(phi, p2, 2).lift().coeffs) == [2, 2]
        assert lift_at(phi, p1, 2) == hasse_direct(phi, p1)
        assert lift_at(phi, p2, 2) == hasse_direct(phi, p2)
        got = factor_randomized(f, seed=1)
        assert got == FactorSet([p1, p2]), str(got)

    def edf_example():
        spec = FieldSpec(11)
        p1 = Poly.from_ints(spec, [1, 0, 1])
        p2 = Poly.from_ints(spec, [4, 1, 1])
        got = factor_edf_deterministic(p1 * p2, 2)
        assert got == FactorSet([p1, p2]), str(got)

    def character_criterion():
        from .hasse import is_supersingular
        spec = FieldSpec(7)
        rng = random.Random(7)
        for _ in range(4):
            p = random_irreducible(spec, 2, rng)
            for a in range(7):
                phi = CMModule(spec._wrap(a))
                ss = is_supersingular(phi, p)
                assert ss == (spec.chi(p.evaluate(a).raw) == -1)

    def oracle_agreement():
        spec = FieldSpec(13)
        rng = random.Random(2)
        for _ in range(3):
            f = random_factor_mix(spec, 10, rng, low=2, high=4)
            assert factor_randomized(f, seed=3) == factor_full(f, seed=4)

    def round_trip():
        spec = FieldSpec(101)
        rng = random.Random(5)
        for _ in range(5):
            f = random_factor_mix(spec, 8, rng, low=2, high=4)
            assert parse_poly(format_poly(f), spec) == f

    def gcd_sanity():
        spec = FieldSpec(5)
        a = Poly.from_ints(spec, [1, 1]) * Poly.from_ints(spec, [2, 0, 1])
        b = Poly.from_ints(spec, [1, 1]) * Poly.from_ints(spec, [1, 1, 1])
        assert pgcd(a, b) == Poly.from_ints(spec, [1, 1])

    return [
        ("hand fixture q=5", fixture),
        ("deterministic split example q=11", edf_example),
        ("character criterion q=7", character_criterion),
        ("oracle agreement q=13", oracle_agreement),
        ("text round trip q=101", round_trip),
        ("gcd sanity", gcd_sanity),
    ]


def cmd_selftest(args) -> int:
    failed = 0
    for name, check in _selftest_checks():
        try:
            check()
        except Exception as exc:  # noqa: BLE001 - report, do not crash the suite
            failed += 1
            print("FAIL - %s: %s" % (name, exc))
        else:
            print("ok - %s" % name)
    if failed:
        print("%d check(s) failed" % failed, file=sys.stderr)
        return 3
    return 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="drinfactor",
        description="Factor univariate polynomials over odd finite fields "
                    "with the CM supersingular splitter.",
    )
    ap.add_argument("--version", action="version", version="drinfactor " + __version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_field(sp):
        sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
        sp.add_argument("--ext-degree", type=int, default=1, dest="ext_degree",
                        help="extension degree e, so q = p^e (default 1)")

    fa = sub.add_parser("factor", help="factor one polynomial")
    add_field(fa)
    fa.add_argument("--algo", choices=("drinfeld-random", "drinfeld-edf", "cz"),
                    default="drinfeld-random")
    fa.add_argument("--seed", type=int, default=0)
    fa.add_argument("--m", type=int, default=None,
                    help="only emit factors of degree <= m")
    fa.add_argument("--k", type=int, default=None,
                    help="equal-degree promise for drinfeld-edf")
    fa.add_argument("--literal-step4", action="store_true", dest="literal_step4",
                    help="use the verbatim unrepaired sweep (unsound; for comparison)")
    fa.add_argument("--no-verify", action="store_false", dest="verify",
                    help="skip output verification")
    fa.add_argument("poly", help='polynomial text ("x^2+3*x+1") or ascending '
                                 'coefficient list ("1,3,1")')

    st = sub.add_parser("stats", help="experiment drivers, CSV on stdout")
    add_field(st)
    st.add_argument("experiment", choices=("density", "stopping-time"))
    st.add_argument("--k", type=int, default=2,
                    help="factor degree (density) / pair degree (stopping-time)")
    st.add_argument("--pairs", type=int, default=None,
                    help="number of pairs (density default 20; "
                         "stopping-time default exhaustive)")
    st.add_argument("--seed", type=int, default=0)

    be = sub.add_parser("bench", help="median wall times, CSV on stdout")
    add_field(be)
    be.add_argument("--algo", choices=("drinfeld-random", "cz", "both"), default="both")
    be.add_argument("--n", type=int, action="append", dest="sizes",
                    help="input degree (repeatable; default 64 and 128)")
    be.add_argument("--trials", type=int, default=5)
    be.add_argument("--seed", type=int, default=0)

    sub.add_parser("selftest", help="run the quick invariant suite")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "factor": cmd_factor,
        "stats": cmd_stats,
        "bench": cmd_bench,
        "selftest": cmd_selftest,
    }[args.command]
    try:
        return handler(args)
    except IntegrityError as exc:
        print("integrity error: %s" % exc, file=sys.stderr)
        return 3
    except (ValueError, TypeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
