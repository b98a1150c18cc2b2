"""Dense univariate polynomials over a FieldSpec, plus residue arithmetic.

Coefficients are stored ascending by degree as packed field elements (see
``field``), with no trailing zeros; the zero polynomial has an empty
coefficient tuple and degree ``NEG_INF`` (a distinct sentinel, never -1).

Operations dispatch on the field's arithmetic regime: direct mod-p kernels,
table-driven small-extension kernels, or a generic digit-vector path.  The
first two run compiled when the extension module is available.
"""

import os
import random
import re

from .field import FieldElem, FieldSpec

NEG_INF = float("-inf")

_DEBUG = os.environ.get("DRINFACTOR_DEBUG", "") not in ("", "0")


# --------------------------------------------------- raw coefficient helpers
#
# All take plain lists of packed ints and return the same; they pick the
# kernel family once per call.


def _rmul(spec, a, b):
    if spec.mode == "prime":
        return spec._kp.mul_p(a, b, spec.p)
    if spec.mode == "table":
        return spec._kt.mul_t(a, b, spec.q, spec._addt, spec._mult)
    return _gmul(spec, a, b)


def _rdivmod(spec, a, b):
    if spec.mode == "prime":
        return spec._kp.divmod_p(a, b, spec.p)
    if spec.mode == "table":
        return spec._kt.divmod_t(a, b, spec.q, spec._addt, spec._mult, spec._negt, spec._invt)
    return _gdivmod(spec, a, b)


def _rmulmod(spec, a, b, f):
    if spec.mode == "prime":
        return spec._kp.mulmod_p(a, b, f, spec.p)
    if spec.mode == "table":
        return spec._kt.mulmod_t(a, b, f, spec.q, spec._addt, spec._mult, spec._negt, spec._invt)
    return _gdivmod(spec, _gmul(spec, a, b), f)[1]


def _rgcd(spec, a, b):
    if spec.mode == "prime":
        return spec._kp.gcd_p(a, b, spec.p)
    if spec.mode == "table":
        return spec._kt.gcd_t(a, b, spec.q, spec._addt, spec._mult, spec._negt, spec._invt)
    return _ggcd(spec, a, b)


def _rpowmod(spec, a, n, f):
    if spec.mode == "prime":
        return spec._kp.powmod_p(a, n, f, spec.p)
    if spec.mode == "table":
        return spec._kt.powmod_t(a, n, f, spec.q, spec._addt, spec._mult, spec._negt, spec._invt)
    return _gpowmod(spec, a, n, f)


def _reval(spec, a, x):
    if spec.mode == "prime":
        return spec._kp.eval_p(a, x, spec.p)
    if spec.mode == "table":
        return spec._kt.eval_t(a, x, spec.q, spec._addt, spec._mult)
    acc = 0
    for c in reversed(a):
        acc = spec.add(spec.mul(acc, x), c)
    return acc


def _rroots(spec, a):
    if spec.mode == "prime":
        return spec._kp.roots_p(a, spec.p)
    if spec.mode == "table":
        return spec._kt.roots_t(a, spec.q, spec._addt, spec._mult)
    if not a:
        raise ValueError("zero polynomial has every point as a root")
    return [x for x in range(spec.q) if _reval(spec, a, x) == 0]


def _radd(spec, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out.append(spec.add(ai, bi))
    while out and out[-1] == 0:
        out.pop()
    return out


def _rsub(spec, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out.append(spec.sub(ai, bi))
    while out and out[-1] == 0:
        out.pop()
    return out


# generic fallback for large extensions: element ops through the spec

def _gmul(spec, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = spec.add(out[i + j], spec.mul(ai, bj))
    return out


def _gdivmod(spec, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = len(b)
    r = list(a)
    if len(r) < lb:
        return [], r
    binv = spec.inv(b[-1])
    q = [0] * (len(r) - lb + 1)
    for i in range(len(r) - lb, -1, -1):
        c = spec.mul(r[i + lb - 1], binv)
        if c:
            q[i] = c
            for j in range(lb - 1):
                r[i + j] = spec.sub(r[i + j], spec.mul(c, b[j]))
        r[i + lb - 1] = 0
    del r[lb - 1:]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _ggcd(spec, a, b):
    a = list(a)
    b = list(b)
    while b:
        a, b = b, _gdivmod(spec, a, b)[1]
    if a and a[-1] != 1:
        inv = spec.inv(a[-1])
        a = [spec.mul(c, inv) for c in a]
    return a


def _gpowmod(spec, a, n, f):
    if n < 0:
        raise ValueError("negative exponent")
    if len(f) < 2:
        raise ValueError("modulus must have degree >= 1")
    base = _gdivmod(spec, a, f)[1]
    result = [1]
    while n:
        if n & 1:
            result = _gdivmod(spec, _gmul(spec, result, base), f)[1]
        n >>= 1
        if n:
            base = _gdivmod(spec, _gmul(spec, base, base), f)[1]
    return result


# ------------------------------------------------------------------- Poly


class Poly:
    """Immutable dense polynomial over a fixed FieldSpec."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.spec = spec
        self.coeffs = tuple(coeffs)

    # -- constructors

    @classmethod
    def zero(cls, spec):
        return cls(spec)

    @classmethod
    def one(cls, spec):
        return cls(spec, (1,))

    @classmethod
    def x(cls, spec):
        return cls(spec, (0, 1))

    @classmethod
    def constant(cls, c: FieldElem):
        return cls(c.spec, (c.raw,))

    @classmethod
    def from_ints(cls, spec, ints):
        """Ascending coefficients given as integer constants (reduced mod p)."""
        return cls(spec, [int(c) % spec.p for c in ints])

    @classmethod
    def from_elems(cls, elems):
        elems = list(elems)
        if not elems:
            raise ValueError("need at least one coefficient; use Poly.zero")
        spec = elems[0].spec
        for c in elems:
            if c.spec != spec:
                raise ValueError("coefficients from different fields")
        return cls(spec, [c.raw for c in elems])

    # -- basic structure

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> FieldElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.spec._wrap(self.coeffs[-1])

    def coefficient(self, i: int) -> FieldElem:
        raw = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return self.spec._wrap(raw)

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ValueError("zero polynomial cannot be made monic")
        if self.coeffs[-1] == 1:
            return self
        inv = self.spec.inv(self.coeffs[-1])
        return Poly(self.spec, [self.spec.mul(c, inv) for c in self.coeffs])

    def sort_key(self):
        """Canonical ordering key: degree, then ascending coefficients."""
        return (len(self.coeffs), self.coeffs)

    # -- arithmetic

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly, got %r" % type(other).__name__)
        if other.spec != self.spec:
            raise ValueError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        return Poly(self.spec, _radd(self.spec, list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Poly(self.spec, _rsub(self.spec, list(self.coeffs), list(other.coeffs)))

    def __neg__(self):
        return Poly(self.spec, [self.spec.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise ValueError("scalar from a different field")
            r = other.raw
            return Poly(self.spec, [self.spec.mul(c, r) for c in self.coeffs])
        if isinstance(other, int):
            r = other % self.spec.p
            return Poly(self.spec, [self.spec.mul(c, r) for c in self.coeffs])
        self._check(other)
        return Poly(self.spec, _rmul(self.spec, list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        q, r = _rdivmod(self.spec, list(self.coeffs), list(other.coeffs))
        qp, rp = Poly(self.spec, q), Poly(self.spec, r)
        if _DEBUG:
            assert qp * other + rp == self, "divmod self-check failed"
        return qp, rp

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take a non-negative int")
        result = Poly.one(self.spec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self) -> "Poly":
        spec = self.spec
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(spec.mul(self.coeffs[i], i % spec.p))
        return Poly(spec, out)

    def evaluate(self, point) -> FieldElem:
        if isinstance(point, int):
            point = self.spec.elem(point)
        elif not isinstance(point, FieldElem) or point.spec != self.spec:
            raise ValueError("evaluation point must lie in the coefficient field")
        return self.spec._wrap(_reval(self.spec, list(self.coeffs), point.raw))

    # -- identity and display

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "Poly(%r, %s)" % (self.spec, self)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(f, 0) = monic(f), gcd(0, 0) = 0."""
    if a.spec != b.spec:
        raise ValueError("polynomials over different fields")
    return Poly(a.spec, _rgcd(a.spec, list(a.coeffs), list(b.coeffs)))


# ------------------------------------------------------------------ Residue


class Residue:
    """An element of A/(f) for monic f of degree >= 1."""

    __slots__ = ("modulus", "value")

    def __init__(self, value: Poly, modulus: Poly):
        if value.spec != modulus.spec:
            raise ValueError("value and modulus over different fields")
        if modulus.degree < 1 or not modulus.is_monic:
            raise ValueError("modulus must be monic of degree >= 1")
        if value.degree >= modulus.degree:
            value = value % modulus
        self.value = value
        self.modulus = modulus

    @classmethod
    def _mk(cls, raw_list, modulus):
        # trusted: raw_list already reduced mod modulus
        r = object.__new__(cls)
        r.value = Poly(modulus.spec, raw_list)
        r.modulus = modulus
        return r

    def _check(self, other):
        if not isinstance(other, Residue):
            raise TypeError("expected a Residue")
        if other.modulus != self.modulus:
            raise ValueError("residues modulo different polynomials")

    def __add__(self, other):
        self._check(other)
        spec = self.modulus.spec
        return Residue._mk(_radd(spec, list(self.value.coeffs), list(other.value.coeffs)), self.modulus)

    def __sub__(self, other):
        self._check(other)
        spec = self.modulus.spec
        return Residue._mk(_rsub(spec, list(self.value.coeffs), list(other.value.coeffs)), self.modulus)

    def __neg__(self):
        spec = self.modulus.spec
        return Residue._mk([spec.neg(c) for c in self.value.coeffs], self.modulus)

    def __mul__(self, other):
        self._check(other)
        spec = self.modulus.spec
        raw = _rmulmod(spec, list(self.value.coeffs), list(other.value.coeffs),
                       list(self.modulus.coeffs))
        return Residue._mk(raw, self.modulus)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative residue powers are not supported")
        spec = self.modulus.spec
        raw = _rpowmod(spec, list(self.value.coeffs), n, list(self.modulus.coeffs))
        return Residue._mk(raw, self.modulus)

    def frobenius(self) -> "Residue":
        """The q-power map; k applications send x to x^(q^k) mod f."""
        return self ** self.modulus.spec.q

    def lift(self) -> Poly:
        return self.value

    def is_zero(self):
        return self.value.is_zero()

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if not isinstance(other, Residue):
            return NotImplemented
        return self.modulus == other.modulus and self.value == other.value

    def __hash__(self):
        return hash((self.modulus, self.value))

    def __str__(self):
        return "%s mod %s" % (self.value, self.modulus)

    __repr__ = __str__


def mod_pow(base: Poly, n: int, modulus: Poly) -> Poly:
    """base**n reduced mod a monic modulus of degree >= 1."""
    return (Residue(base, modulus) ** n).lift()


def frobenius_q(r: Residue) -> Residue:
    return r.frobenius()


# ------------------------------------------------------ squarefree structure


def _pth_root(f: Poly) -> Poly:
    """g with g^p = f, for f whose derivative vanishes."""
    spec = f.spec
    root_pow = spec.p ** (spec.e - 1)  # c -> c^(p^(e-1)) is the p-th root
    out = []
    for i, c in enumerate(f.coeffs):
        if i % spec.p == 0:
            out.append(spec.pow_(c, root_pow))
        elif c != 0:
            raise AssertionError("derivative vanished but f is not in F_q[x^p]")
    return Poly(spec, out)


def squarefree_part(f: Poly):
    """(s, c) with s squarefree, f = s*c, s = f / gcd(f, f').

    s collects one copy of every irreducible factor whose multiplicity is not
    divisible by p; factors with p | multiplicity hide in c and surface after
    repeated application (the derivative-zero case takes a p-th root first).
    Non-monic input is normalized silently; zero input is an error.
    """
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return Poly.one(f.spec), Poly.one(f.spec)
    d = f.derivative()
    if d.is_zero():
        s, _ = squarefree_part(_pth_root(f))
        return s, f // s
    c = gcd(f, d)
    return f // c, c


def squarefree_decomposition(f: Poly):
    """List of (g_i, m_i) with f = prod g_i^{m_i}, g_i squarefree and coprime.

    Standard characteristic-p refinement: repeatedly split off the factors of
    each exact multiplicity, taking p-th roots whenever the derivative dies.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    f = f.monic()
    out = []
    scale = 1
    while f.degree > 0:
        d = f.derivative()
        if d.is_zero():
            f = _pth_root(f)
            scale *= f.spec.p
            continue
        c = gcd(f, d)
        w = f // c
        j = 1
        while w.degree > 0:
            y = gcd(w, c)
            z = w // y
            if z.degree > 0:
                out.append((z, j * scale))
            w = y
            c = c // y
            j += 1
        f = c
    return out


# -------------------------------------------------------------- root finding


def find_roots(f: Poly, mode: str = "randomized", seed: int = 0):
    """The set of roots of f in its coefficient field.

    mode "exhaustive" scans all q points (deterministic); mode "randomized"
    splits gcd(x^q - x, f) by quadratic characters, seeded and reproducible.
    """
    if f.is_zero():
        raise ValueError("every point is a root of the zero polynomial")
    spec = f.spec
    if f.degree == 0:
        return set()
    if mode == "exhaustive":
        return {spec._wrap(r) for r in _rroots(spec, list(f.coeffs))}
    if mode != "randomized":
        raise ValueError("mode must be 'randomized' or 'exhaustive'")
    rng = random.Random(seed)
    fl = list(f.monic().coeffs)
    xq = _rpowmod(spec, [0, 1], spec.q, fl)
    lin = _rgcd(spec, _rsub(spec, xq, [0, 1]), fl)
    roots = set()
    stack = [lin]
    half = (spec.q - 1) // 2
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        if len(g) == 2:
            # monic x + c: the root is -c
            roots.add(spec._wrap(spec.neg(g[0])))
            continue
        while True:
            c = rng.randrange(spec.q)
            h = _rpowmod(spec, [c, 1], half, g)
            d = _rgcd(spec, _rsub(spec, h, [1]), g)
            if 0 < len(d) - 1 < len(g) - 1:
                stack.append(d)
                stack.append(_rdivmod(spec, g, d)[0])
                break
    return roots


# ------------------------------------------------------------ text form


def format_poly(f: Poly) -> str:
    """Canonical text: descending degree, ^ powers, coefficients in [0, p).

    Extension-field coefficients print as full digit vectors [c0,c1,...].
    """
    if f.is_zero():
        return "0"
    spec = f.spec
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        if spec.e == 1:
            ctxt = None if (c == 1 and i > 0) else str(c)
        else:
            ctxt = "[" + ",".join(str(d) for d in f.spec._wrap(c).rep) + "]"
        if i == 0:
            parts.append(ctxt if ctxt is not None else "1")
            continue
        xtxt = "x" if i == 1 else "x^%d" % i
        parts.append(xtxt if ctxt is None else ctxt + "*" + xtxt)
    return "+".join(parts)


_TERM_RE = re.compile(r"^(?:(\d+|\[[0-9,\s]*\])\*?)?(x(?:\^(\d+))?)?$")


def _split_terms(s: str):
    terms = []
    sign, cur, depth = 1, "", 0
    started = False
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced ']' in polynomial text")
        if ch in "+-" and depth == 0:
            if started and cur:
                terms.append((sign, cur))
                sign, cur = 1, ""
            elif started and not cur:
                raise ValueError("dangling sign in polynomial text")
            if ch == "-":
                sign = -sign
            started = True
            continue
        cur += ch
        started = True
    if depth != 0:
        raise ValueError("unbalanced '[' in polynomial text")
    if cur:
        terms.append((sign, cur))
    elif started:
        raise ValueError("dangling sign in polynomial text")
    return terms


def _parse_coeff_text(txt: str, spec: FieldSpec) -> FieldElem:
    if txt.startswith("["):
        inner = txt[1:-1].strip()
        digits = [int(t) for t in inner.split(",")] if inner else []
        return spec.from_rep(digits)
    return spec.elem(int(txt))


def parse_poly(text: str, spec: FieldSpec) -> Poly:
    """Inverse of format_poly; also accepts a comma-separated ascending
    coefficient list (e.g. "2,2,3,1,1") for convenience."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    if "x" not in s:
        # bare constant or coefficient list
        items = []
        depth, cur = 0, ""
        for ch in s:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            if ch == "," and depth == 0:
                items.append(cur)
                cur = ""
            else:
                cur += ch
        items.append(cur)
        if len(items) > 1 or s.startswith("["):
            elems = [_parse_coeff_text(t, spec) for t in items]
            return Poly(spec, [c.raw for c in elems])
    acc = {}
    for sign, term in _split_terms(s):
        m = _TERM_RE.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError("cannot parse term %r" % term)
        ctxt, xpart, exp = m.groups()
        c = _parse_coeff_text(ctxt, spec) if ctxt is not None else spec.one
        k = 0 if xpart is None else (int(exp) if exp is not None else 1)
        if sign < 0:
            c = -c
        prev = acc.get(k)
        acc[k] = c if prev is None else prev + c
    out = [0] * (max(acc) + 1)
    for k, c in acc.items():
        out[k] = c.raw
    return Poly(spec, out)
