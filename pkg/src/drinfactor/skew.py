"""Skew polynomials over A/(p) and direct Hasse invariants.

The ring (A/(p))<tau> twists multiplication by the q-power Frobenius:
(u tau^i)(v tau^j) = u v^(q^i) tau^(i+j).  A rank-2 Drinfeld module phi sends
x to x + g tau + delta tau^2; extending multiplicatively gives the image of
any operand polynomial.  This is the slow, independent oracle against which
the recurrence-based Hasse lifts are validated.
"""

from .cm import check_good_reduction
from .poly import Poly, Residue


class SkewPoly:
    """Element of (A/(f))<tau>; coefficients ascending in tau, no trailing zeros."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: Poly, coeffs=()):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, Residue) or c.modulus != modulus:
                raise ValueError("coefficients must be residues mod the same modulus")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.modulus = modulus
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, r: Residue):
        return cls(r.modulus, (r,))

    @property
    def tau_degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def coefficient(self, i: int) -> Residue:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Residue(Poly.zero(self.modulus.spec), self.modulus)

    def _check(self, other):
        if not isinstance(other, SkewPoly) or other.modulus != self.modulus:
            raise ValueError("skew polynomials over different moduli")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.modulus,
                        [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.modulus,
                        [self.coefficient(i) - other.coefficient(i) for i in range(n)])

    def __mul__(self, other):
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return SkewPoly(self.modulus)
        zero = Residue(Poly.zero(self.modulus.spec), self.modulus)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        twisted = list(other.coeffs)  # other's coefficients raised to q^i
        for i, u in enumerate(self.coeffs):
            if i > 0:
                twisted = [v.frobenius() for v in twisted]
            if u.is_zero():
                continue
            for j, v in enumerate(twisted):
                out[i + j] = out[i + j] + u * v
        return SkewPoly(self.modulus, out)

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            t = "" if i == 0 else ("tau" if i == 1 else "tau^%d" % i)
            parts.append("(%s)%s" % (c.value, t) if t else "(%s)" % c.value)
        return " + ".join(parts)

    __repr__ = __str__


def drinfeld_image(phi, a: Poly, modulus: Poly):
    """The skew operator phi_a in (A/(modulus))<tau>.

    phi_x = x + g tau + delta tau^2 reduced mod the modulus; the image of a
    general operand is built by Horner over phi_x (the map is a ring morphism,
    constants embed as tau^0 coefficients).  Requires good reduction,
    i.e. gcd(modulus, delta) = 1.
    """
    spec = modulus.spec
    if a.spec != spec:
        raise ValueError("operand over a different field")
    if not check_good_reduction(phi, modulus):
        raise ValueError("bad reduction: modulus shares a factor with delta")
    phix = SkewPoly(modulus, (
        Residue(Poly.x(spec), modulus),
        phi.g_mod(modulus),
        phi.delta_mod(modulus),
    ))
    if a.is_zero():
        return SkewPoly(modulus)
    result = SkewPoly.constant(Residue(Poly.constant(a.leading()), modulus))
    for i in range(len(a.coeffs) - 2, -1, -1):
        c = SkewPoly.constant(Residue(Poly.constant(a.coefficient(i)), modulus))
        result = result * phix + c
    return result


def hasse_direct(phi, p: Poly) -> Residue:
    """Hasse invariant of phi at p: the tau^deg(p) coefficient of phi_p mod p.

    Vanishes exactly when the reduction at p is supersingular.  Cost grows
    with deg(p)^2 skew multiplications; this is the oracle, not the fast path.
    """
    if p.degree < 1 or not p.is_monic:
        raise ValueError("p must be monic of degree >= 1")
    image = drinfeld_image(phi, p, p)
    return image.coefficient(len(p.coeffs) - 1)
