"""Twisted operator algebra and the direct Hasse-invariant computation."""

import pytest

from drinfactor import CMModule, Poly, Residue, parse_poly
from drinfactor.skew import SkewPoly, drinfeld_image, hasse_direct
from drinfactor import baseline
from conftest import spec_for, random_poly, seeded


def _residue(spec, f, rng, deg=4):
    return Residue(random_poly(spec, rng.randint(0, deg), rng), f)


def test_twist_rule_tau_times_constant():
    # tau * c = c^q * tau: multiplying a degree-1 operator by a constant
    # from the right twists the constant by the q-power map
    spec = spec_for(5)
    f = parse_poly("x^3+x+2", spec)
    rng = seeded(4001)
    for _ in range(30):
        c = _residue(spec, f, rng, deg=2)
        tau = SkewPoly(f, (Residue(Poly.zero(spec), f), Residue(Poly.one(spec), f)))
        left = tau * SkewPoly.constant(c)
        right = SkewPoly.constant(c ** spec.q) * tau
        assert left == right


@pytest.mark.parametrize("q", [5, 9])
def test_skew_multiplication_is_associative_and_distributive(q):
    spec = spec_for(q)
    rng = seeded(4100 + q)
    f = baseline.random_monic(spec, 4, rng)
    for _ in range(25):
        def rand_op():
            return SkewPoly(f, tuple(_residue(spec, f, rng, 3)
                                     for _ in range(rng.randint(1, 4))))
        a, b, c = rand_op(), rand_op(), rand_op()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_skew_degree_adds_under_multiplication():
    spec = spec_for(5)
    f = parse_poly("x^3+x+2", spec)
    rng = seeded(4200)
    one = Residue(Poly.one(spec), f)
    for da in range(0, 3):
        for db in range(0, 3):
            a = SkewPoly(f, tuple([_residue(spec, f, rng)] * da + [one]))
            b = SkewPoly(f, tuple([_residue(spec, f, rng)] * db + [one]))
            assert (a * b).tau_degree == da + db


@pytest.mark.parametrize("q", [5, 7])
def test_image_is_a_ring_morphism(q):
    spec = spec_for(q)
    rng = seeded(4300 + q)
    for _ in range(12):
        modulus = baseline.random_irreducible(spec, rng.randint(2, 4), rng)
        phi = CMModule(spec._wrap(rng.randrange(q)))
        a = baseline.random_monic(spec, rng.randint(1, 3), rng)
        b = baseline.random_monic(spec, rng.randint(1, 3), rng)
        img = lambda t: drinfeld_image(phi, t, modulus)
        assert img(a * b) == img(a) * img(b)
        assert img(a + b) == img(a) + img(b)


def test_image_of_x_has_the_defining_coefficients():
    spec = spec_for(5)
    modulus = parse_poly("x^2+2", spec)
    phi = CMModule(spec.elem(0))
    op = drinfeld_image(phi, Poly.x(spec), modulus)
    assert op.tau_degree == 2
    assert op.coefficient(0) == Residue(Poly.x(spec), modulus)
    assert op.coefficient(1) == phi.g_mod(modulus)
    assert op.coefficient(2) == phi.delta_mod(modulus)


def test_image_tau_degree_doubles_the_operand_degree():
    spec = spec_for(7)
    rng = seeded(4400)
    for _ in range(10):
        modulus = baseline.random_irreducible(spec, rng.randint(2, 4), rng)
        phi = CMModule(spec._wrap(rng.randrange(7)))
        a = baseline.random_monic(spec, rng.randint(1, 4), rng)
        assert drinfeld_image(phi, a, modulus).tau_degree == 2 * a.degree


def test_image_requires_good_reduction():
    spec = spec_for(5)
    phi = CMModule(spec.elem(1))
    # x - 1 divides delta, so reduction mod (x - 1)(x - 2) is bad
    modulus = parse_poly("x+4", spec) * parse_poly("x+3", spec)
    with pytest.raises(ValueError):
        drinfeld_image(phi, Poly.x(spec), modulus)


def test_hasse_direct_validates_input():
    spec = spec_for(5)
    phi = CMModule(spec.elem(0))
    with pytest.raises(ValueError):
        hasse_direct(phi, Poly.one(spec))
    two_x = Poly(spec, [0, 2])
    with pytest.raises(ValueError):
        hasse_direct(phi, two_x)


def test_hasse_direct_known_values():
    spec = spec_for(5)
    phi = CMModule(spec.elem(0))
    assert hasse_direct(phi, parse_poly("x^2+2", spec)).is_zero()
    h = hasse_direct(phi, parse_poly("x^2+x+1", spec))
    assert list(h.lift().coeffs) == [2, 2]


def test_operands_from_mismatched_fields_are_rejected():
    s5, s7 = spec_for(5), spec_for(7)
    phi = CMModule(s5.elem(0))
    with pytest.raises(ValueError):
        drinfeld_image(phi, Poly.x(s7), parse_poly("x^2+2", s5))
