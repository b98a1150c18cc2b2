"""The supersingularity-driven factorizers, cross-validated classically."""

import warnings

import pytest

from drinfactor import (
    CMModule, FactorSet, Poly, parse_poly, format_poly, gcd,
    factor, factor_randomized, factor_edf_deterministic,
    lift_factor_small_q, verify_factorization,
    FallbackWarning, IntegrityError, SmallFieldWarning,
)
from drinfactor.factor import _literal_sweep
from drinfactor import baseline
from conftest import spec_for, seeded


# ------------------------------------------------------------- FactorSet

def test_factor_set_merges_repeats_and_sorts():
    spec = spec_for(5)
    a = parse_poly("x+1", spec)
    b = parse_poly("x^2+2", spec)
    fs = FactorSet([b, a, (a, 2)])
    assert list(fs) == [(a, 3), (b, 1)]
    assert fs.lines() == ["(x+1)^3", "x^2+2"]
    assert fs.product() == a ** 3 * b
    assert fs == FactorSet([(a, 3), (b, 1)])
    assert hash(fs) == hash(FactorSet([(a, 3), b]))


def test_factor_set_rejects_nonsense():
    spec = spec_for(5)
    a = parse_poly("x+1", spec)
    with pytest.raises(ValueError):
        FactorSet([(a, 0)])
    with pytest.raises(ValueError):
        FactorSet([(a, -1)])


# ------------------------------------------------- randomized factorizer

@pytest.mark.parametrize("q", [5, 7, 13, 101, 9, 25])
def test_randomized_matches_classical_on_squarefree_inputs(q):
    spec = spec_for(q)
    rng = seeded(8000 + q)
    for trial in range(10):
        f = baseline.random_squarefree(spec, rng.randint(4, 28), rng)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            got = factor_randomized(f, seed=trial)
        assert got == baseline.factor_full(f)


def test_randomized_validates_inputs():
    spec = spec_for(5)
    x = Poly.x(spec)
    with pytest.raises(ValueError):
        factor_randomized(Poly.one(spec))
    with pytest.raises(ValueError):
        factor_randomized(Poly(spec, [0, 2]))  # not monic
    with pytest.raises(ValueError):
        factor_randomized(x * x)  # not squarefree
    f = parse_poly("x^2+2", spec) * parse_poly("x^2+x+1", spec)
    for bad_m in (0, 5):
        with pytest.raises(ValueError):
            factor_randomized(f, m=bad_m)


def test_randomized_warns_when_the_field_is_small():
    spec = spec_for(5)
    rng = seeded(8101)
    f = baseline.random_squarefree(spec, 6, rng)
    with pytest.warns(SmallFieldWarning):
        factor_randomized(f)


def test_degree_bound_returns_exactly_the_small_factors():
    spec = spec_for(101)
    rng = seeded(8201)
    for trial in range(6):
        small = [baseline.random_irreducible(spec, rng.randint(2, 3), rng)
                 for _ in range(2)]
        big = baseline.random_irreducible(spec, 7, rng)
        parts = set(small) | {big}
        f = Poly.one(spec)
        for p in parts:
            f = f * p
        got = factor_randomized(f, m=3, seed=trial)
        assert got == FactorSet(p for p in parts if p.degree <= 3)
        # the cofactor is recoverable from the product
        assert f // got.product() == big


def test_roots_are_split_off_before_the_sweep():
    spec = spec_for(13)
    f = parse_poly("x+3", spec) * parse_poly("x+5", spec) * parse_poly("x^2+2x+3", spec)
    got = factor_randomized(f.monic(), seed=0)
    assert got.product() == f
    assert sorted(g.degree for g, _ in got) == [1, 1, 2]


def test_identical_vanishing_profiles_fall_back_to_the_classical_splitter():
    # these two cubics are supersingular for exactly the same a, so no
    # draw can separate them and the classical splitter must finish the job
    spec = spec_for(5)
    p1 = parse_poly("x^3+x+1", spec)
    p2 = parse_poly("x^3+4x^2+3x+4", spec)
    f = p1 * p2
    with pytest.warns(FallbackWarning):
        got = factor_randomized(f, seed=0)
    assert got == FactorSet([p1, p2])


def test_seeded_runs_are_reproducible():
    spec = spec_for(101)
    rng = seeded(8301)
    f = baseline.random_squarefree(spec, 24, rng)
    a = factor_randomized(f, seed=7)
    b = factor_randomized(f, seed=7)
    assert a == b and a.lines() == b.lines()


# ------------------------------------------------------ verbatim variant

def test_verbatim_sweep_matches_when_capped_at_the_factor_degree():
    spec = spec_for(5)
    p1 = parse_poly("x^2+2", spec)       # vanishing at a = 0
    p2 = parse_poly("x^2+x+1", spec)     # nonvanishing at a = 0
    phi = CMModule(spec.elem(0))
    outputs, f_ss, m_ss, f_or, m_or = _literal_sweep(phi, p1 * p2, 2)
    assert FactorSet(outputs) == FactorSet([p1, p2])
    assert f_ss.degree == 0 and f_or.degree == 0


def test_verbatim_sweep_breaks_past_the_factor_degree():
    # one index later the full-modulus gcd re-captures the vanishing factor
    # (vanishing persists) while the frobenius slice no longer contains it,
    # so the printed quotient is not exact
    spec = spec_for(5)
    p1 = parse_poly("x^2+2", spec)
    p2 = parse_poly("x^2+x+1", spec)
    phi = CMModule(spec.elem(0))
    with pytest.raises(IntegrityError):
        _literal_sweep(phi, p1 * p2, 3)


def test_verbatim_sweep_breaks_on_mixed_degrees():
    # a degree-2 vanishing factor pollutes the degree-3 slice quotient
    spec = spec_for(5)
    p2 = parse_poly("x^2+2", spec)       # vanishing at a = 0
    p3 = parse_poly("x^3+x+1", spec)     # nonvanishing at a = 0
    phi = CMModule(spec.elem(0))
    with pytest.raises(IntegrityError):
        _literal_sweep(phi, p2 * p3, 3)


def test_public_verbatim_mode_with_a_tight_bound_agrees():
    spec = spec_for(5)
    p1 = parse_poly("x^2+2", spec)
    p2 = parse_poly("x^2+x+1", spec)
    got = factor_randomized(p1 * p2, m=2, seed=0, literal_step4=True)
    assert got == FactorSet([p1, p2])


# ------------------------------------------------- deterministic variant

def _equal_degree_input(spec, k, count, rng):
    pieces = set()
    while len(pieces) < count:
        pieces.add(baseline.random_irreducible(spec, k, rng))
    f = Poly.one(spec)
    for p in pieces:
        f = f * p
    return f, pieces


@pytest.mark.parametrize("q,k", [(5, 2), (11, 2), (13, 3), (19, 2)])
def test_deterministic_equal_degree_matches_classical(q, k):
    from drinfactor import FieldSpec
    spec = FieldSpec(q)
    rng = seeded(8400 + q)
    for count in (2, 3):
        f, pieces = _equal_degree_input(spec, k, count, rng)
        got = factor_edf_deterministic(f, k)
        assert got == FactorSet(pieces)


def test_deterministic_runs_are_identical():
    spec = spec_for(11)
    rng = seeded(8501)
    f, _ = _equal_degree_input(spec, 2, 4, rng)
    first = factor_edf_deterministic(f, 2)
    second = factor_edf_deterministic(f, 2)
    assert first.lines() == second.lines()
    assert "\n".join(first.lines()) == "\n".join(second.lines())


def test_deterministic_split_example():
    spec = spec_for(11)
    p1 = parse_poly("x^2+1", spec)
    p2 = parse_poly("x^2+x+4", spec)
    fs = factor_edf_deterministic(p1 * p2, 2)
    assert fs == FactorSet([p1, p2])


def test_deterministic_validates_its_promise():
    spec = spec_for(11)
    rng = seeded(8601)
    with pytest.raises(ValueError):
        factor_edf_deterministic(parse_poly("x^2+1", spec), 1)  # k must exceed 1
    with pytest.raises(ValueError):
        f, _ = _equal_degree_input(spec_for(9), 2, 2, rng)
        factor_edf_deterministic(f, 2)  # prime fields only
    p = parse_poly("x^2+1", spec)
    with pytest.raises(ValueError):
        factor_edf_deterministic(p * p, 2)  # not squarefree
    with pytest.raises(ValueError):
        factor_edf_deterministic(parse_poly("x^2+x", spec), 2)  # has a root
    cubic = parse_poly("x^3+x+4", spec)
    assert baseline.is_irreducible(cubic)
    with pytest.raises(IntegrityError):
        factor_edf_deterministic(parse_poly("x^2+1", spec) * cubic, 2)


# ------------------------------------------------------- small-field lift

def test_lift_recovers_factors_over_a_tiny_prime_field():
    from drinfactor import FieldSpec
    spec = FieldSpec(3)
    rng = seeded(8701)
    for trial in range(3):
        f = baseline.random_squarefree(spec, rng.randint(4, 8), rng)
        got = lift_factor_small_q(f, seed=trial)
        assert got == baseline.factor_full(f)


def test_lift_recovers_factors_over_a_tiny_extension_field():
    s9 = spec_for(9)
    rng = seeded(8702)
    f = baseline.random_squarefree(s9, 5, rng)
    got = lift_factor_small_q(f, seed=0)
    assert got == baseline.factor_full(f)


def test_lift_accepts_an_explicit_extension_degree():
    from drinfactor import FieldSpec
    spec = FieldSpec(3)
    rng = seeded(8703)
    f = baseline.random_squarefree(spec, 6, rng)
    got = lift_factor_small_q(f, seed=0, extension_degree=10)
    assert got == baseline.factor_full(f)


# ------------------------------------------------------------ validation

def test_verify_factorization_accepts_truth_and_rejects_lies():
    spec = spec_for(13)
    rng = seeded(8801)
    p1 = baseline.random_irreducible(spec, 2, rng)
    p2 = baseline.random_irreducible(spec, 3, rng)
    f = p1 * p2
    assert verify_factorization(f, FactorSet([p1, p2]))
    assert not verify_factorization(f, FactorSet([p1]))  # wrong product
    assert not verify_factorization(f, FactorSet([(p1, 2), p2]))
    # right product but a composite entry must still be rejected
    assert not verify_factorization(f, FactorSet([f]))


def test_one_shot_factor_handles_multiplicities_and_general_inputs():
    for q in (5, 13, 9):
        spec = spec_for(q)
        rng = seeded(8900 + q)
        for trial in range(6):
            built = {}
            for _ in range(rng.randint(1, 3)):
                p = baseline.random_irreducible(spec, rng.randint(1, 3), rng)
                built[p] = built.get(p, 0) + rng.randint(1, 3)
            f = Poly.one(spec)
            for p, m in built.items():
                f = f * p ** m
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                fs = factor(f, seed=trial)
            assert fs == FactorSet(built.items())
            assert fs.product() == f
            assert verify_factorization(f, fs)
