"""Hasse-invariant lifts through the two-term Frobenius recurrence.

For a CM module phi and a working modulus f, the sequence

    r_0 = 1,  r_1 = g,
    r_k = g^(q^(k-1)) * r_(k-1) - (x^(q^(k-1)) - x) * delta^(q^(k-2)) * r_(k-2)

computed in F_q[x]/(f) reduces, modulo any degree-k irreducible p dividing f
with good reduction, to the Hasse invariant of phi at p.  In particular
r_k vanishes mod p exactly when p is supersingular for phi, and once it
vanishes it stays zero for every later index.
"""

from .cm import CMModule, check_good_reduction
from .poly import Poly, Residue, frobenius_q


class FrobTables:
    """Frobenius power tables X[k] = x^(q^k), G[k] = g^(q^k), D[k] = delta^(q^k) mod f.

    Entries run k = 0..m and each index-(k+1) entry is one frobenius
    application to the index-k entry.  Immutable after construction and
    safe to share between consumers.
    """

    __slots__ = ("phi", "modulus", "m", "X", "G", "D")

    def __init__(self, phi: CMModule, f: Poly, m: int):
        if m < 1:
            raise ValueError("table bound m must be a positive integer")
        if f.degree < 1 or not f.is_monic:
            raise ValueError("modulus must be monic of degree >= 1")
        if phi.spec != f.spec:
            raise ValueError("module and modulus live over different fields")
        if not check_good_reduction(phi, f):
            raise ValueError(
                "bad reduction: modulus shares a factor with delta; "
                "remove roots before lifting"
            )
        xs = [Residue(Poly.x(f.spec), f)]
        gs = [phi.g_mod(f)]
        ds = [phi.delta_mod(f)]
        for _ in range(m):
            xs.append(frobenius_q(xs[-1]))
            gs.append(frobenius_q(gs[-1]))
            ds.append(frobenius_q(ds[-1]))
        self.phi = phi
        self.modulus = f
        self.m = m
        self.X = tuple(xs)
        self.G = tuple(gs)
        self.D = tuple(ds)

    def __repr__(self):
        return "FrobTables(m=%d, f=%s)" % (self.m, self.modulus)


def build_tables(phi: CMModule, f: Poly, m: int) -> FrobTables:
    """Eager Frobenius powers of x, g and delta mod f up to exponent q^m."""
    return FrobTables(phi, f, m)


class HasseSeq:
    """Rolling pair (r_(k-1), r_k) of the recurrence; single-owner iterator.

    Starts at k = 1 with (r_0, r_1) = (1, g mod f).  Each step() costs two
    residue multiplications and one subtraction.
    """

    __slots__ = ("tables", "k", "r_prev", "r_curr")

    def __init__(self, tables: FrobTables):
        f = tables.modulus
        self.tables = tables
        self.k = 1
        self.r_prev = Residue(Poly.one(f.spec), f)
        self.r_curr = tables.G[0]

    def step(self) -> Residue:
        """Advance to index k+1 and return r_(k+1) mod f."""
        t = self.tables
        k = self.k
        if k > t.m:
            raise ValueError("stepping past the table bound m=%d" % t.m)
        # r_(k+1) = G[k] r_k - (X[k] - x) D[k-1] r_(k-1)
        r_next = t.G[k] * self.r_curr - (t.X[k] - t.X[0]) * (t.D[k - 1] * self.r_prev)
        self.r_prev = self.r_curr
        self.r_curr = r_next
        self.k = k + 1
        return r_next


def lift_at(phi: CMModule, f: Poly, k: int, tables: FrobTables | None = None) -> Residue:
    """r_k mod f: the simultaneous Hasse-invariant lift at index k.

    For every degree-k irreducible p dividing f (good reduction), the
    reduction of the result mod p equals hasse_direct(phi, p).  Indices
    beyond deg(f) are allowed; they are what the persistence statements
    quantify over.  A prebuilt table set covering index k-1 may be passed
    to amortize construction across several k.
    """
    if k < 1:
        raise ValueError("lift index must be a positive integer")
    if tables is None:
        tables = FrobTables(phi, f, k)
    else:
        if tables.phi is not phi and (tables.phi.a != phi.a or tables.phi.spec != phi.spec):
            raise ValueError("tables were built for a different module")
        if tables.modulus != f:
            raise ValueError("tables were built for a different modulus")
        if tables.m < k - 1:
            raise ValueError("tables cover k <= %d only" % (tables.m + 1))
    if k == 1:
        return tables.G[0]
    seq = HasseSeq(tables)
    while seq.k < k:
        seq.step()
    return seq.r_curr


def is_supersingular(phi: CMModule, p: Poly) -> bool:
    """Whether the monic irreducible p is supersingular for phi.

    Vanishing of the degree-(deg p) lift mod p is exactly supersingular
    reduction.  Irreducibility of p is assumed, not checked.
    """
    return lift_at(phi, p, p.degree).is_zero()
