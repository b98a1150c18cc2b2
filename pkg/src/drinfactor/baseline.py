"""Classical factorization pipeline: distinct-degree split plus
Cantor-Zassenhaus equal-degree splitting.

Serves as the correctness oracle for the CM-based factorizers and as the
performance comparison point.  It shares the polynomial arithmetic layer
but none of the Drinfeld machinery, so disagreements localize bugs to the
algorithm layer.
"""

import random

from .poly import Poly, gcd, mod_pow, squarefree_decomposition


def ddf(f: Poly):
    """Distinct-degree factorization of a monic squarefree polynomial.

    Returns a list of (k, product of the degree-k irreducible factors),
    ascending in k; the concatenated product equals f.
    """
    if f.degree < 1 or not f.is_monic:
        raise ValueError("input must be monic of degree >= 1")
    spec = f.spec
    q = spec.q
    out = []
    fr = f
    h = Poly.x(spec) % fr
    k = 0
    while fr.degree >= 2 * (k + 1):
        k += 1
        h = mod_pow(h, q, fr)
        slice_k = gcd(h - Poly.x(spec), fr)
        if slice_k.degree > 0:
            out.append((k, slice_k))
            fr = fr // slice_k
            h = h % fr
    if fr.degree > 0:
        out.append((fr.degree, fr))
    return out


def cz_edf(f: Poly, k: int, seed: int = 0):
    """Cantor-Zassenhaus split of f into its degree-k irreducible factors.

    pre: every irreducible factor of f has degree exactly k; q odd.
    Random u of degree < deg(f); gcd(u^((q^k-1)/2) - 1, f) splits f with
    probability about 1/2 per round.
    """
    from .factor import FactorSet  # here to avoid an import cycle

    if f.degree < 1 or not f.is_monic:
        raise ValueError("input must be monic of degree >= 1")
    if f.degree % k:
        raise ValueError("degree %d is not a multiple of the slice degree %d" % (f.degree, k))
    spec = f.spec
    rng = random.Random(seed)
    half = (spec.q ** k - 1) // 2
    one = Poly.one(spec)
    out = []
    stack = [f]
    while stack:
        g = stack.pop()
        if g.degree == k:
            out.append(g)
            continue
        u = random_monic(spec, rng.randrange(1, g.degree), rng)
        w = mod_pow(u, half, g) - one
        h = gcd(w, g)
        if 0 < h.degree < g.degree:
            stack.append(h)
            stack.append(g // h)
        else:
            stack.append(g)
    return FactorSet(out)


def is_irreducible(f: Poly) -> bool:
    """Frobenius-chain irreducibility test.

    f (monic, deg n >= 1) is irreducible iff x^(q^n) = x mod f and
    gcd(x^(q^(n/l)) - x, f) = 1 for every prime l dividing n.
    """
    if f.degree < 1 or not f.is_monic:
        raise ValueError("input must be monic of degree >= 1")
    n = f.degree
    if n == 1:
        return True
    spec = f.spec
    q = spec.q
    x = Poly.x(spec)
    # powers[j] = x^(q^j) mod f, built by iterated frobenius
    powers = [x % f]
    for _ in range(n):
        powers.append(mod_pow(powers[-1], q, f))
    if powers[n] != powers[0]:
        return False
    from .field import prime_factors

    for ell in prime_factors(n):
        if gcd(powers[n // ell] - x, f).degree != 0:
            return False
    return True


def factor_full(f: Poly, seed: int = 0):
    """Complete factorization with multiplicities: squarefree split,
    then DDF, then Cantor-Zassenhaus on each slice.  The oracle."""
    from .factor import FactorSet  # here to avoid an import cycle

    if f.degree < 1:
        raise ValueError("input must have degree >= 1")
    if not f.is_monic:
        raise ValueError("input must be monic")
    rng = random.Random(seed)
    items = []
    for part, mult in squarefree_decomposition(f):
        for k, slice_k in ddf(part):
            for piece, m in cz_edf(slice_k, k, seed=rng.getrandbits(32)):
                items.append((piece, m * mult))
    return FactorSet(items)


def random_monic(spec, n: int, rng: random.Random) -> Poly:
    """Uniform random monic polynomial of degree exactly n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    coeffs = [rng.randrange(spec.q) for _ in range(n)] + [1]
    return Poly(spec, coeffs)


def random_irreducible(spec, n: int, rng: random.Random) -> Poly:
    """Rejection-sample a monic irreducible of degree exactly n."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    while True:
        f = random_monic(spec, n, rng)
        if is_irreducible(f):
            return f


def random_squarefree(spec, n: int, rng: random.Random) -> Poly:
    """Rejection-sample a monic squarefree polynomial of degree exactly n."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    while True:
        f = random_monic(spec, n, rng)
        d = f.derivative()
        if not d.is_zero() and gcd(f, d).degree == 0:
            return f


def random_factor_mix(spec, n: int, rng: random.Random, low: int = 2, high: int = 12) -> Poly:
    """Monic squarefree product of distinct random irreducibles summing to
    degree exactly n, each factor degree in [low, high].

    The benchmark input shape: many moderate factors rather than one huge
    irreducible, so generation stays cheap at large n.
    """
    if not 1 <= low <= high:
        raise ValueError("need 1 <= low <= high")
    if n < low:
        raise ValueError("degree %d cannot be reached with factors >= %d" % (n, low))
    degrees = []
    remaining = n
    while remaining:
        d = rng.randint(low, min(high, remaining))
        if remaining - d != 0 and remaining - d < low:
            continue  # redraw: the tail could not be filled
        degrees.append(d)
        remaining -= d
    seen = set()
    f = Poly.one(spec)
    for d in degrees:
        while True:
            g = random_irreducible(spec, d, rng)
            if g not in seen:
                break
        seen.add(g)
        f = f * g
    return f
