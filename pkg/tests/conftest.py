"""Shared helpers: cached field specs and small input generators."""

import random

from drinfactor import FieldSpec, Poly, build_extension

_SPECS = {}


def spec_for(q):
    """Field of order q from a small fixed menu (prime or prime power)."""
    if q not in _SPECS:
        if q == 9:
            _SPECS[q] = build_extension(3, 2)
        elif q == 25:
            _SPECS[q] = build_extension(5, 2)
        elif q == 27:
            _SPECS[q] = build_extension(3, 3)
        else:
            _SPECS[q] = FieldSpec(q)
    return _SPECS[q]


def random_poly(spec, degree, rng):
    """Random polynomial of degree exactly `degree` (not necessarily monic)."""
    coeffs = [rng.randrange(spec.q) for _ in range(degree)]
    coeffs.append(rng.randrange(1, spec.q))
    return Poly(spec, coeffs)


def seeded(n):
    return random.Random(n)
