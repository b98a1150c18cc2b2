"""Command-line interface: exit codes, output contracts, CSV shapes.

Most tests drive cli.main(argv) in process and inspect stdout/stderr via
capsys; one test runs the installed console script to cover the entry
point end to end.  Contract under test: factor lines only on stdout,
comments on stderr, exit code 0 ok / 2 usage / 3 integrity.
"""

import csv
import io
import math
import random
import shutil
import subprocess

import pytest

from drinfactor import baseline
from drinfactor.cli import main
from drinfactor.factor import FactorSet
from drinfactor.field import FieldSpec
from drinfactor.poly import parse_poly, squarefree_part

from conftest import spec_for

pytestmark = pytest.mark.filterwarnings(
    "ignore::drinfactor.errors.SmallFieldWarning"
)


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# ----------------------------------------------------------------- factor

def test_factor_stdout_is_factor_lines_only(capsys):
    rc, out, err = run(capsys, ["factor", "--p", "5", "x^4+x^3+3*x^2+2*x+2"])
    assert rc == 0
    assert out == "x^2+x+1\nx^2+2\n"
    # the run comment goes to stderr, never stdout
    assert err.splitlines()[-1].startswith("# algo=drinfeld-random seed=0 t=")


def test_factor_algorithms_agree(capsys):
    poly = "x^4+x^3+3*x^2+2*x+2"
    _, expected, _ = run(capsys, ["factor", "--p", "5", poly])
    rc, out, err = run(capsys, ["factor", "--p", "5", "--algo", "cz", poly])
    assert rc == 0 and out == expected
    assert "# algo=cz" in err
    rc, out, err = run(
        capsys, ["factor", "--p", "5", "--algo", "drinfeld-edf", "--k", "2", poly]
    )
    assert rc == 0 and out == expected
    assert "# algo=drinfeld-edf" in err


def test_factor_seeded_runs_are_reproducible(capsys):
    argv = ["factor", "--p", "13", "--seed", "7", "x^6+4*x^4+x^2+11*x+3"]
    rc1, out1, _ = run(capsys, argv)
    rc2, out2, _ = run(capsys, argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_factor_multiplicity_lines(capsys):
    spec = FieldSpec(5)
    lin = parse_poly("x+1", spec)
    quad = parse_poly("x^2+2", spec)
    f = lin ** 3 * quad
    rc, out, _ = run(capsys, ["factor", "--p", "5", str(f)])
    assert rc == 0
    assert out == "(x+1)^3\nx^2+2\n"


def test_factor_extension_field_text_input(capsys):
    spec = spec_for(9)
    rng = random.Random(0)
    p1 = baseline.random_irreducible(spec, 2, rng)
    p2 = p1
    while p2 == p1:
        p2 = baseline.random_irreducible(spec, 2, rng)
    f = p1 * p2
    # digit-vector text is the canonical machine form over extension fields
    rc, out, _ = run(capsys, ["factor", "--p", "3", "--ext-degree", "2", str(f)])
    assert rc == 0
    assert out == "\n".join(FactorSet([p1, p2]).lines()) + "\n"


def test_factor_partial_bound_emits_cofactor_comment(capsys):
    # (x+1)(x^2+2)(x^3+x+1): with --m 2 only the small factors appear and
    # the undivided remainder is reported as a stderr comment
    rc, out, err = run(
        capsys, ["factor", "--p", "5", "--m", "2", "x^6+x^5+3*x^4+4*x^3+3*x^2+4*x+2"]
    )
    assert rc == 0
    assert out == "x+1\nx^2+2\n"
    assert "# cofactor=x^3+x+1" in err.splitlines()


def test_factor_partial_bound_with_no_small_factors(capsys):
    # a degree-6 input with no factors of degree <= 2: empty stdout and the
    # whole input is the cofactor
    poly = "x^6+x^5+3*x^4+3*x^3+4*x^2+3*x+2"
    rc, out, err = run(capsys, ["factor", "--p", "5", "--m", "2", poly])
    assert rc == 0
    assert out == ""
    assert "# cofactor=" + poly in err.splitlines()
    spec = FieldSpec(5)
    radical = squarefree_part(parse_poly(poly, spec))[0]
    assert all(k > 2 for k, _ in baseline.ddf(radical))


def test_factor_no_verify_flag(capsys):
    rc, out, _ = run(
        capsys, ["factor", "--p", "5", "--no-verify", "x^4+x^3+3*x^2+2*x+2"]
    )
    assert rc == 0
    assert out == "x^2+x+1\nx^2+2\n"


def test_factor_usage_errors_exit_2(capsys):
    cases = [
        ["factor", "--p", "5", "2*x^2+1"],                    # not monic
        ["factor", "--p", "5", "3"],                          # constant
        ["factor", "--p", "2", "x^2+x+1"],                    # even characteristic
        ["factor", "--p", "9", "x^2+1"],                      # composite p
        ["factor", "--p", "5", "--ext-degree", "0", "x^2+1"],  # bad extension
        ["factor", "--p", "5", "x^^2"],                       # unparseable
        ["factor", "--p", "11", "--algo", "drinfeld-edf", "x^4+x^3+5*x^2+x+4"],  # no --k
    ]
    for argv in cases:
        rc, out, err = run(capsys, argv)
        assert rc == 2, argv
        assert out == ""
        assert err.startswith("error: ")


def test_factor_broken_promise_exits_3(capsys):
    spec = FieldSpec(11)
    f = parse_poly("x^2+1", spec) * parse_poly("x^3+x+4", spec)
    rc, out, err = run(
        capsys, ["factor", "--p", "11", "--algo", "drinfeld-edf", "--k", "2", str(f)]
    )
    assert rc == 3
    assert out == ""
    assert err.startswith("integrity error: ")


def test_version_and_missing_subcommand():
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


# ------------------------------------------------------------------ stats

def test_stats_density_csv_shape(capsys):
    rc, out, _ = run(
        capsys,
        ["stats", "--p", "13", "density", "--k", "2", "--pairs", "3", "--seed", "1"],
    )
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["q", "k", "p1", "p2", "N", "half_q", "bound"]
    assert len(rows) == 4
    bound = 2 * math.sqrt(13)
    spec = FieldSpec(13)
    for q, k, p1, p2, n, half, b in rows[1:]:
        assert (q, k, half) == ("13", "2", "6.5")
        assert float(b) == pytest.approx(bound, abs=5e-4)
        assert 0 <= int(n) <= 13
        for text in (p1, p2):
            g = parse_poly(text, spec)
            assert g.degree == 2 and baseline.is_irreducible(g)
        assert p1 != p2


def test_stats_density_respects_character_band(capsys):
    # the counted N is |{a : chi(p1(a)) != chi(p2(a))}|; recompute one row
    rc, out, _ = run(
        capsys, ["stats", "--p", "13", "density", "--pairs", "1", "--seed", "3"]
    )
    assert rc == 0
    row = list(csv.reader(io.StringIO(out)))[1]
    spec = FieldSpec(13)
    p1, p2 = parse_poly(row[2], spec), parse_poly(row[3], spec)
    n = sum(
        1
        for a in range(13)
        if spec.chi(p1.evaluate(a).raw) != spec.chi(p2.evaluate(a).raw)
    )
    assert int(row[4]) == n


def test_stats_stopping_time_exhaustive(capsys):
    rc, out, _ = run(capsys, ["stats", "--p", "5", "stopping-time", "--k", "2"])
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["q", "d", "p1", "p2", "first_index", "max_index", "bound"]
    assert len(rows) == 1 + 45  # all pairs from the 10 monic irreducible quadratics
    firsts = [int(r[4]) for r in rows[1:]]
    assert all(f >= 0 for f in firsts)
    assert {int(r[5]) for r in rows[1:]} == {max(firsts)}
    bound = 4 * math.sqrt(5) * math.log(5)
    assert all(float(r[6]) == pytest.approx(bound, abs=5e-4) for r in rows[1:])
    assert max(firsts) < bound


def test_stats_stopping_time_sampled(capsys):
    rc, out, _ = run(
        capsys, ["stats", "--p", "11", "stopping-time", "--k", "2", "--pairs", "4"]
    )
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 5
    for r in rows[1:]:
        assert r[2] != r[3]
        assert int(r[4]) >= 0


def test_stats_guards_exit_2(capsys):
    cases = [
        ["stats", "--p", "10007", "density"],
        ["stats", "--p", "521", "stopping-time"],
        ["stats", "--p", "5", "--ext-degree", "2", "stopping-time"],
        ["stats", "--p", "5", "density", "--k", "1"],
        ["stats", "--p", "5", "density", "--pairs", "0"],
    ]
    for argv in cases:
        rc, _, err = run(capsys, argv)
        assert rc == 2, argv
        assert err.startswith("error: ")


# ------------------------------------------------------------------ bench

def test_bench_csv_shape(capsys):
    rc, out, _ = run(capsys, ["bench", "--p", "13", "--n", "8", "--trials", "2"])
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["algo", "q", "n", "trials", "median_seconds"]
    assert [r[0] for r in rows[1:]] == ["drinfeld-random", "cz"]
    for r in rows[1:]:
        assert r[1:4] == ["13", "8", "2"]
        assert float(r[4]) >= 0.0


def test_bench_single_algo(capsys):
    rc, out, _ = run(
        capsys, ["bench", "--p", "13", "--algo", "cz", "--n", "6", "--trials", "1"]
    )
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 2 and rows[1][0] == "cz"


# --------------------------------------------------------------- selftest

def test_selftest_passes(capsys):
    rc, out, err = run(capsys, ["selftest"])
    assert rc == 0
    assert out.count("ok - ") == 6
    assert "FAIL" not in out
    assert err == ""


# ------------------------------------------------------- console script

@pytest.mark.skipif(
    shutil.which("drinfactor") is None, reason="console script not installed"
)
def test_console_script_deterministic_stdout():
    spec = FieldSpec(11)
    p1 = parse_poly("x^2+1", spec)
    p2 = parse_poly("x^2+x+4", spec)
    argv = [
        "drinfactor", "factor", "--p", "11",
        "--algo", "drinfeld-edf", "--k", "2", str(p1 * p2),
    ]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout  # byte-identical across runs
    assert first.stdout == "\n".join(FactorSet([p1, p2]).lines()) + "\n"
    assert "# algo=drinfeld-edf" in first.stderr
