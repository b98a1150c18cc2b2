"""Factorization drivers built on the CM supersingular/ordinary split.

The randomized splitter draws a CM module phi at random, slices the input
into its degree-k parts d_k = gcd(x^(q^k) - x, f_rem), and inside each
slice separates the supersingular factors s_k = gcd(r_k, d_k) from the
ordinary rest o_k = d_k / s_k.  A slice part of degree exactly k is a
certified irreducible output; larger parts are accumulated and split
recursively with fresh randomness.  Each pair of distinct same-degree
factors lands on opposite sides with probability about 1/2, so the
recursion depth is logarithmic.

The deterministic splitter sweeps a = 0, 1, 2, ... instead of drawing at
random and handles the equal-degree case; the character-sum bound makes
the sweep terminate within O(k * sqrt(q) * log q) steps per composite.
"""

import functools
import operator
import random
import warnings

from . import baseline
from .cm import CMModule
from .errors import FallbackWarning, IntegrityError, SmallFieldWarning
from .field import FieldSpec, build_extension
from .hasse import lift_at
from .poly import (
    Poly,
    find_roots,
    gcd,
    mod_pow,
    squarefree_decomposition,
    _rdivmod,
    _rgcd,
    _rmulmod,
    _rpowmod,
    _rsub,
)

_MAX_REDRAWS = 64


class FactorSet:
    """Canonically ordered multiset of monic irreducible factors.

    Items compare and hash as a whole, print one factor per line with a
    parenthesized multiplicity suffix, and iterate as (factor, mult) pairs
    sorted by degree then coefficients.
    """

    __slots__ = ("factors",)

    def __init__(self, items=()):
        merged = {}
        for item in items:
            f, mult = item if isinstance(item, tuple) else (item, 1)
            if not isinstance(f, Poly) or f.degree < 1 or not f.is_monic:
                raise ValueError("factors must be monic polynomials of degree >= 1")
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            merged[f] = merged.get(f, 0) + mult
        self.factors = tuple(sorted(merged.items(), key=lambda it: it[0].sort_key()))

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __contains__(self, f):
        return any(g == f for g, _ in self.factors)

    def product(self) -> Poly:
        if not self.factors:
            raise ValueError("empty factor set has no defined product")
        return functools.reduce(
            operator.mul, (g ** m for g, m in self.factors)
        )

    def lines(self):
        return [str(g) if m == 1 else "(%s)^%d" % (g, m) for g, m in self.factors]

    def __eq__(self, other):
        if not isinstance(other, FactorSet):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __str__(self):
        return "\n".join(self.lines())

    def __repr__(self):
        return "FactorSet(%d distinct)" % len(self.factors)


# ------------------------------------------------------------ randomized

def _require_monic_nonconst(f):
    if not isinstance(f, Poly):
        raise TypeError("expected a Poly")
    if f.degree < 1:
        raise ValueError("input must have degree >= 1")
    if not f.is_monic:
        raise ValueError("input must be monic")


def _require_squarefree(f):
    d = f.derivative()
    if d.is_zero() or gcd(f, d).degree != 0:
        raise ValueError(
            "input must be squarefree; apply squarefree_decomposition first"
        )


def _split_pass(phi, f, m):
    """One k-sweep of the repaired degree-sliced splitter.

    Works against a shrinking f_rem: the degree-k slice d_k is divided out
    as soon as it is classified, so later gcds never re-capture factors of
    lower degree.  The Frobenius powers and the recurrence pair are carried
    along mod f_rem (valid because f_rem divides f throughout), keeping the
    per-sweep cost quadratic in deg(f).

    Returns (outputs, f_ss, m_ss, f_or, m_or, leftover): certified degree-k
    irreducibles, the accumulated supersingular and ordinary composites
    with their exact maximum factor degrees, and the unprocessed part whose
    factors all have degree > m.
    """
    spec = f.spec
    q = spec.q
    x1 = [0, 1]
    fr = list(f.coeffs)

    def red(v):
        return _rdivmod(spec, v, fr)[1] if len(v) >= len(fr) else v

    r_prev = [1]                                   # r_0
    r_curr = list(phi.g_mod(f).lift().coeffs)      # r_1 = g mod f
    d_pow = list(phi.delta_mod(f).lift().coeffs)   # delta^(q^0)
    x_pow = _rpowmod(spec, x1, q, fr)              # x^(q^1)
    g_pow = _rpowmod(spec, r_curr, q, fr)          # g^(q^1)

    outputs = []
    f_ss, m_ss = Poly.one(spec), 1
    f_or, m_or = Poly.one(spec), 1
    for k in range(2, m + 1):
        if len(fr) <= 1:
            break
        # r_k = g^(q^(k-1)) r_(k-1) - (x^(q^(k-1)) - x) delta^(q^(k-2)) r_(k-2)
        t = _rmulmod(spec, d_pow, r_prev, fr)
        t = _rmulmod(spec, _rsub(spec, x_pow, x1), t, fr)
        r_next = _rsub(spec, _rmulmod(spec, g_pow, r_curr, fr), t)
        x_pow = _rpowmod(spec, x_pow, q, fr)       # x^(q^k)
        d_k = _rgcd(spec, _rsub(spec, x_pow, x1), fr)
        if len(d_k) > 1:
            s_k = _rgcd(spec, r_next, d_k)
            o_k = _rdivmod(spec, d_k, s_k)[0]
            for part in (s_k, o_k):
                deg = len(part) - 1
                if deg == 0:
                    continue
                piece = Poly(spec, part)
                if deg == k:
                    outputs.append(piece)
                elif part is s_k:
                    f_ss, m_ss = f_ss * piece, k
                else:
                    f_or, m_or = f_or * piece, k
            fr = _rdivmod(spec, fr, d_k)[0]
            if len(fr) <= 1:
                break
            x_pow = red(x_pow)
            r_curr = red(r_curr)
            r_next = red(r_next)
        if k == m:
            break
        g_pow = _rpowmod(spec, g_pow, q, fr)       # g^(q^k)
        d_pow = _rpowmod(spec, d_pow, q, fr)       # delta^(q^(k-1))
        r_prev, r_curr = r_curr, r_next
    return outputs, f_ss, m_ss, f_or, m_or, Poly(spec, fr)


def _cz_fallback(f, rng, out):
    # last-resort classical splitter; keeps termination unconditional
    for g, mult in baseline.factor_full(f, seed=rng.getrandbits(32)):
        out.extend([g] * mult)


def _remove_roots(f, rng, out):
    spec = f.spec
    roots = find_roots(f, mode="randomized", seed=rng.getrandbits(32))
    for b in sorted(r.raw for r in roots):
        lin = Poly(spec, [spec.neg(b), 1])
        out.append(lin)
        f = f // lin
    return f


def _factor_into(f, m, rng, out):
    """Recursive repaired splitter; appends monic irreducibles to out."""
    spec = f.spec
    f = _remove_roots(f, rng, out)
    if f.degree < 1:
        return
    m = min(m, f.degree)
    if m < 2:
        return
    for _ in range(_MAX_REDRAWS):
        phi = CMModule(spec._wrap(rng.randrange(spec.q)))
        outputs, f_ss, m_ss, f_or, m_or, leftover = _split_pass(phi, f, m)
        out.extend(outputs)
        clumps = [(g, mg) for g, mg in ((f_ss, m_ss), (f_or, m_or)) if g.degree > 0]
        if not outputs and len(clumps) == 1 and clumps[0][0].degree == f.degree:
            continue  # whole input landed on one side: redraw a
        for g, mg in clumps:
            _factor_into(g, mg, rng, out)
        return
    warnings.warn(FallbackWarning(
        "no split after %d draws of a; using the classical splitter" % _MAX_REDRAWS
    ))
    _cz_fallback(f, rng, out)


def _literal_sweep(phi, f, m):
    """Verbatim reading of the printed sweep: every gcd runs against the
    full input and nothing is divided out.

    Unsound by design and kept only for comparison.  Vanishing persists, so
    gcd(r_j, f) re-captures every supersingular factor of degree < j at
    each later index, inflating f_ss with duplicates; the frobenius slice
    gcd(x^(q^j) - x, f) likewise re-captures factors whose degree merely
    divides j.  When the printed quotient d_k / s_k is not exact the sweep
    raises IntegrityError instead of repairing it silently.
    """
    spec = f.spec
    q = spec.q
    fl = list(f.coeffs)
    r_prev = [1]
    r_curr = list(phi.g_mod(f).lift().coeffs)
    d_pow = list(phi.delta_mod(f).lift().coeffs)
    x_pow = _rpowmod(spec, [0, 1], q, fl)
    g_pow = _rpowmod(spec, r_curr, q, fl)
    outputs = []
    f_ss, m_ss = Poly.one(spec), 1
    f_or, m_or = Poly.one(spec), 1
    for k in range(2, m + 1):
        t = _rmulmod(spec, d_pow, r_prev, fl)
        t = _rmulmod(spec, _rsub(spec, x_pow, [0, 1]), t, fl)
        r_next = _rsub(spec, _rmulmod(spec, g_pow, r_curr, fl), t)
        x_pow = _rpowmod(spec, x_pow, q, fl)
        s_k = Poly(spec, _rgcd(spec, r_next, fl))
        if s_k.degree == k:
            outputs.append(s_k)
        elif s_k.degree > 0:
            f_ss, m_ss = f_ss * s_k, k
        d_k = Poly(spec, _rgcd(spec, _rsub(spec, x_pow, [0, 1]), fl))
        o_k, rem = divmod(d_k, s_k)
        if not rem.is_zero():
            raise IntegrityError(
                "printed quotient d_%d / s_%d is not exact; "
                "the literal sweep is undefined here" % (k, k)
            )
        if o_k.degree == k:
            outputs.append(o_k)
        elif o_k.degree > 0:
            f_or, m_or = f_or * o_k, k
        g_pow = _rpowmod(spec, g_pow, q, fl)
        d_pow = _rpowmod(spec, d_pow, q, fl)
        r_prev, r_curr = r_curr, r_next
    return outputs, f_ss, m_ss, f_or, m_or


def _literal_into(f, m, rng, out, depth):
    spec = f.spec
    f = _remove_roots(f, rng, out)
    if f.degree < 1:
        return
    m = min(m, f.degree)
    if m < 2:
        return
    # duplicate accumulation can keep degrees from shrinking, so the
    # recursion itself is depth-capped
    if depth < _MAX_REDRAWS:
        for _ in range(_MAX_REDRAWS):
            phi = CMModule(spec._wrap(rng.randrange(spec.q)))
            outputs, f_ss, m_ss, f_or, m_or = _literal_sweep(phi, f, m)
            out.extend(outputs)
            clumps = [(g, mg) for g, mg in ((f_ss, m_ss), (f_or, m_or)) if g.degree > 0]
            if not outputs and len(clumps) == 1 and clumps[0][0].degree >= f.degree:
                continue
            for g, mg in clumps:
                _literal_into(g, mg, rng, out, depth + 1)
            return
    warnings.warn(FallbackWarning(
        "literal sweep made no progress; using the classical splitter"
    ))
    _cz_fallback(f, rng, out)


def factor_randomized(f: Poly, m=None, seed: int = 0, literal_step4: bool = False) -> FactorSet:
    """All monic irreducible factors of squarefree f with degree <= m.

    m defaults to deg(f), i.e. the complete factorization.  The seed fixes
    every random draw (root finding, the choice of a, retries), making runs
    reproducible.  When the field is small relative to the degree
    (sqrt(q) < 100 deg f) a SmallFieldWarning is emitted and the run
    proceeds; see lift_factor_small_q for the remedy.

    literal_step4 switches to the verbatim unrepaired sweep (see
    _literal_sweep); its output is not verified and may be unsound.
    """
    _require_monic_nonconst(f)
    _require_squarefree(f)
    n = f.degree
    m = n if m is None else m
    if not 1 <= m <= n:
        raise ValueError("degree bound m must satisfy 1 <= m <= deg(f)")
    if f.spec.q < (100 * n) ** 2:
        warnings.warn(SmallFieldWarning(
            "field is small relative to the degree; supersingular density "
            "arguments are heuristic here (consider lift_factor_small_q)"
        ))
    rng = random.Random(seed)
    out = []
    if literal_step4:
        _literal_into(f, m, rng, out, 0)
    else:
        _factor_into(f, m, rng, out)
    result = FactorSet(out)
    if __debug__ and m == n and not literal_step4:
        assert verify_factorization(f, result), "factorization failed verification"
    return result


# ---------------------------------------------------------- deterministic

def _edf_rec(f, k, out):
    n = f.degree
    if n == k:
        out.append(f)
        return
    if n % k:
        raise IntegrityError(
            "piece of degree %d violates the equal-degree promise k=%d" % (n, k)
        )
    spec = f.spec
    for a in range(spec.q):
        phi = CMModule(spec._wrap(a))
        h = gcd(lift_at(phi, f, k).lift(), f)
        if 0 < h.degree < n:
            first, second = sorted((h, f // h), key=Poly.sort_key)
            _edf_rec(first, k, out)
            _edf_rec(second, k, out)
            return
    raise IntegrityError(
        "full character sweep produced no split; equal-degree promise violated"
    )


def factor_edf_deterministic(f: Poly, k: int) -> FactorSet:
    """Deterministic equal-degree factorization over prime q.

    pre: f monic squarefree with every irreducible factor of degree
    exactly k > 1 (in particular no roots).  Sweeps a = 0, 1, 2, ... and
    splits on the first nontrivial gcd(r_k, f); recursion is depth-first,
    smaller part first, and the sweep restarts at 0 for each composite.
    No randomness anywhere: repeated runs are identical.

    A violated promise surfaces as IntegrityError - either a piece degree
    not divisible by k, or a full sweep with no split.
    """
    _require_monic_nonconst(f)
    spec = f.spec
    if spec.e != 1:
        raise ValueError("deterministic equal-degree splitting requires prime q")
    if k <= 1:
        raise ValueError("equal-degree promise requires k > 1")
    _require_squarefree(f)
    x = Poly.x(spec)
    if gcd(mod_pow(x, spec.q, f) - x, f).degree != 0:
        raise ValueError("input has linear factors; remove roots first")
    out = []
    _edf_rec(f, k, out)
    return FactorSet(out)


# ------------------------------------------------------- small-field lift

def _solve_mod_p(rows, rhs, p):
    """Gaussian solve of rows * v = rhs over Z/p; None when inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    piv_cols = []
    top = 0
    for c in range(ncols):
        pivot = next((i for i in range(top, len(aug)) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[top], aug[pivot] = aug[pivot], aug[top]
        inv = pow(aug[top][c], -1, p)
        aug[top] = [v * inv % p for v in aug[top]]
        for i in range(len(aug)):
            if i != top and aug[i][c]:
                fac = aug[i][c]
                aug[i] = [(v - fac * w) % p for v, w in zip(aug[i], aug[top])]
        piv_cols.append(c)
        top += 1
        if top == len(aug):
            break
    for i in range(top, len(aug)):
        if aug[i][-1]:
            return None
    sol = [0] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][-1]
    return sol


def _subfield_maps(small: FieldSpec, big: FieldSpec, seed: int = 0):
    """(embed, pull) between F_q and F_(q^s) realized inside big.

    For prime q the embedding is digit-trivial.  Otherwise the generator of
    small is sent to a root of small's defining polynomial inside big (the
    smallest root, for determinism) and pulled back by solving the digit
    system over Z/p.
    """
    p = small.p
    if small.e == 1:
        def embed(c):
            return big.from_rep([c.raw])

        def pull(c):
            digits = c.rep
            if any(digits[1:]):
                raise IntegrityError("coefficient left the base field")
            return small._wrap(digits[0])

        return embed, pull

    # small.modulus coefficients lie in the prime subfield, where packing
    # is the identity, so the same ints serve as big-field constants
    image = Poly(big, list(small.modulus))
    roots = find_roots(image, mode="randomized", seed=seed)
    if not roots:
        raise IntegrityError("defining polynomial has no root in the extension")
    gen = min(roots, key=lambda r: r.raw)
    powers = [big.one]
    for _ in range(small.e - 1):
        powers.append(powers[-1] * gen)
    rows = [[pw.rep[i] for pw in powers] for i in range(big.e)]

    def embed(c):
        acc = big.zero
        for digit, pw in zip(c.rep, powers):
            acc = acc + pw * big.elem(digit)
        return acc

    def pull(c):
        sol = _solve_mod_p(rows, list(c.rep), p)
        if sol is None:
            raise IntegrityError("coefficient left the base field")
        return small.from_rep(sol)

    return embed, pull


def _coeff_frobenius(g: Poly, q: int) -> Poly:
    return Poly.from_elems([g.coefficient(i) ** q for i in range(g.degree + 1)])


def lift_factor_small_q(f: Poly, target=None, seed: int = 0, extension_degree=None) -> FactorSet:
    """Factor over a lifted field F_(q^s) and recombine Frobenius orbits.

    Picks the least s with sqrt(q^s) >= 100 * target (target defaults to
    deg f), factors the coefficient-embedded image there, then multiplies
    out each orbit of the coefficient-wise q-power map; every orbit product
    has q-power-fixed coefficients and pulls back to one F_q-irreducible
    factor.  extension_degree overrides the choice of s directly.
    """
    _require_monic_nonconst(f)
    _require_squarefree(f)
    spec = f.spec
    n = f.degree
    target = n if target is None else target
    if target < 1:
        raise ValueError("target must be a positive integer")
    if extension_degree is None:
        s = 1
        while spec.q ** s < (100 * target) ** 2:
            s += 1
    else:
        s = extension_degree
        if s < 1:
            raise ValueError("extension degree must be a positive integer")
    if s == 1:
        return factor_randomized(f, seed=seed)

    big = build_extension(spec.p, spec.e * s)
    embed, pull = _subfield_maps(spec, big, seed=seed)
    image = Poly.from_elems([embed(f.coefficient(i)) for i in range(n + 1)])
    lifted = factor_randomized(image, seed=seed)
    members = {g for g, _ in lifted}
    out = []
    seen = set()
    for g, _ in lifted:
        if g in seen:
            continue
        orbit = [g]
        seen.add(g)
        h = _coeff_frobenius(g, spec.q)
        while h != g:
            if h not in members:
                raise IntegrityError("q-power map left the lifted factor set")
            orbit.append(h)
            seen.add(h)
            h = _coeff_frobenius(h, spec.q)
        prod = functools.reduce(operator.mul, orbit)
        out.append(Poly.from_elems(
            [pull(prod.coefficient(i)) for i in range(prod.degree + 1)]
        ))
    return FactorSet(out)


# ----------------------------------------------------------------- public

def verify_factorization(f: Poly, fs: FactorSet) -> bool:
    """Whether fs is a complete factorization of f into monic irreducibles."""
    prod = Poly.one(f.spec)
    for g, mult in fs:
        if mult < 1 or g.degree < 1 or not g.is_monic:
            return False
        if not baseline.is_irreducible(g):
            return False
        prod = prod * g ** mult
    return prod == f


def factor(f: Poly, seed: int = 0) -> FactorSet:
    """Complete factorization with multiplicities of any monic f.

    Squarefree decomposition first, then the randomized CM splitter on
    each squarefree part.
    """
    _require_monic_nonconst(f)
    rng = random.Random(seed)
    items = []
    for part, mult in squarefree_decomposition(f):
        for g, inner in factor_randomized(part, seed=rng.getrandbits(32)):
            items.append((g, inner * mult))
    return FactorSet(items)
