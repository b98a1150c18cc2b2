"""Finite fields F_q = F_{p^e} of odd characteristic.

Elements are carried as packed integers in [0, q): the base-p digits of the
packed value are the coordinates with respect to the power basis of the class
of t modulo the field's defining polynomial.  For e = 1 an element is simply
its residue mod p.  This keeps one uniform element encoding across the three
arithmetic regimes (direct mod-p, table-driven small extension, generic
digit-vector extension) and lets the hot polynomial loops run on flat int
lists.
"""

import array
import itertools

from . import kernel

# extensions up to this order get q*q lookup tables (and compiled kernels)
TABLE_LIMIT = 512

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every 64-bit integer."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int):
    """Sorted list of the distinct prime divisors of n >= 1."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _unpack(v, p, e):
    digits = []
    for _ in range(e):
        digits.append(v % p)
        v //= p
    return digits


def _pack(digits, p):
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def _strip(digits):
    n = len(digits)
    while n and digits[n - 1] == 0:
        n -= 1
    return digits[:n]


def _sub_lists(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _strip(out)


def _is_irreducible_mod_p(m, p, kp):
    """Irreducibility of a monic m over F_p via the Frobenius chain."""
    e = len(m) - 1
    if e == 1:
        return True
    x = [0, 1]
    mids = {e // ell for ell in prime_factors(e)}
    h = x
    for i in range(1, e + 1):
        h = kp.powmod_p(h, p, m, p)
        if i in mids:
            if len(kp.gcd_p(_sub_lists(h, x, p), m, p)) != 1:
                return False
    return h == x


class FieldSpec:
    """A finite field F_q, q = p^e odd, owning its element arithmetic.

    For e > 1 the field is F_p[t]/(modulus); `modulus` is the ascending
    coefficient tuple of a monic irreducible of degree e.
    """

    __slots__ = (
        "p", "e", "q", "modulus", "mode",
        "_kp", "_kt", "_addt", "_mult", "_negt", "_invt", "_hash",
    )

    def __init__(self, p, e=1, modulus=None):
        if not isinstance(p, int) or p < 3 or p % 2 == 0 or not is_prime(p):
            raise ValueError("characteristic must be an odd prime, got %r" % (p,))
        if not isinstance(e, int) or e < 1:
            raise ValueError("extension degree must be a positive integer")
        self.p = p
        self.e = e
        self.q = p**e
        self._kp = kernel.prime_kernel(p)
        self._kt = kernel.table_kernel()
        self._addt = self._mult = self._negt = self._invt = None
        if e == 1:
            if modulus is not None:
                raise ValueError("a prime field takes no modulus")
            self.modulus = None
            self.mode = "prime"
        else:
            if modulus is None:
                raise ValueError("an extension field needs an explicit modulus; see build_extension")
            m = [int(c) % p for c in modulus]
            if len(m) != e + 1 or m[-1] != 1:
                raise ValueError("modulus must be monic of degree e")
            if not _is_irreducible_mod_p(m, p, self._kp):
                raise ValueError("modulus is reducible over F_p")
            self.modulus = tuple(m)
            self.mode = "table" if self.q <= TABLE_LIMIT else "generic"
            if self.mode == "table":
                self._build_tables()
        self._hash = hash((self.p, self.e, self.modulus))

    # -- identity

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.p == other.p and self.e == other.e and self.modulus == other.modulus

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.e == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.e)

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        m = list(self.modulus)
        kp = self._kp
        full = [_unpack(v, p, e) for v in range(q)]
        stripped = [_strip(d) for d in full]
        addt = array.array("q", bytes(8 * q * q))
        mult = array.array("q", bytes(8 * q * q))
        negt = array.array("q", bytes(8 * q))
        invt = array.array("q", bytes(8 * q))
        for x in range(q):
            dx = full[x]
            negt[x] = _pack([(-c) % p for c in dx], p)
            base = x * q
            for y in range(x, q):
                s = _pack([(dx[i] + full[y][i]) % p for i in range(e)], p)
                addt[base + y] = s
                addt[y * q + x] = s
            for y in range(x, q):
                if x and y:
                    v = _pack(kp.mulmod_p(stripped[x], stripped[y], m, p) + [0] * e, p)
                else:
                    v = 0
                mult[base + y] = v
                mult[y * q + x] = v
        # inverses through the finished multiplication table
        for x in range(1, q):
            acc, b, n = 1, x, q - 2
            while n:
                if n & 1:
                    acc = mult[acc * q + b]
                n >>= 1
                if n:
                    b = mult[b * q + b]
            invt[x] = acc
        self._addt, self._mult, self._negt, self._invt = addt, mult, negt, invt

    # -- raw packed-element arithmetic

    def add(self, x, y):
        if self.mode == "prime":
            return (x + y) % self.p
        if self.mode == "table":
            return self._addt[x * self.q + y]
        p = self.p
        dx = _unpack(x, p, self.e)
        dy = _unpack(y, p, self.e)
        return _pack([(a + b) % p for a, b in zip(dx, dy)], p)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def neg(self, x):
        if self.mode == "prime":
            return (-x) % self.p
        if self.mode == "table":
            return self._negt[x]
        p = self.p
        return _pack([(-c) % p for c in _unpack(x, p, self.e)], p)

    def mul(self, x, y):
        if self.mode == "prime":
            return (x * y) % self.p
        if self.mode == "table":
            return self._mult[x * self.q + y]
        if x == 0 or y == 0:
            return 0
        p = self.p
        prod = self._kp.mulmod_p(
            _strip(_unpack(x, p, self.e)), _strip(_unpack(y, p, self.e)),
            list(self.modulus), p,
        )
        return _pack(prod + [0] * self.e, p)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.mode == "prime":
            return pow(x, -1, self.p)
        if self.mode == "table":
            return self._invt[x]
        return self.pow_(x, self.q - 2)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow_(self, x, n):
        """x**n on packed values; negative n inverts first."""
        if n < 0:
            x = self.inv(x)
            n = -n
        if self.mode == "prime":
            return pow(x, n, self.p)
        if x == 0:
            return 0 if n else 1
        acc, b = 1, x
        while n:
            if n & 1:
                acc = self.mul(acc, b)
            n >>= 1
            if n:
                b = self.mul(b, b)
        return acc

    def chi(self, x):
        """Quadratic character: 0 on 0, +1 on nonzero squares, -1 otherwise."""
        if x == 0:
            return 0
        s = self.pow_(x, (self.q - 1) // 2)
        if s == 1:
            return 1
        if s == self.neg(1):
            return -1
        raise AssertionError("character value outside {1, -1}; field arithmetic corrupt")

    # -- element construction

    def elem(self, c: int) -> "FieldElem":
        """Embed the integer constant c (reduced mod p)."""
        return FieldElem(self, c % self.p)

    def from_rep(self, digits) -> "FieldElem":
        digits = [int(c) % self.p for c in digits]
        if len(digits) > self.e:
            raise ValueError("coefficient vector longer than extension degree")
        digits += [0] * (self.e - len(digits))
        return FieldElem(self, _pack(digits, self.p))

    def _wrap(self, raw: int) -> "FieldElem":
        return FieldElem(self, raw)

    def elements(self):
        """All field elements in packed order (deterministic)."""
        for v in range(self.q):
            yield FieldElem(self, v)

    @property
    def zero(self):
        return FieldElem(self, 0)

    @property
    def one(self):
        return FieldElem(self, 1)


class FieldElem:
    """An element of a FieldSpec; immutable, supports field operators."""

    __slots__ = ("spec", "raw")

    def __init__(self, spec: FieldSpec, raw: int):
        self.spec = spec
        self.raw = raw

    @property
    def rep(self):
        """Coefficient vector of length e over Z/p."""
        return tuple(_unpack(self.raw, self.spec.p, self.spec.e))

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise ValueError("elements of different fields")
            return other.raw
        if isinstance(other, int):
            return other % self.spec.p
        return None

    def __add__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.add(self.raw, r))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.sub(self.raw, r))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.sub(r, self.raw))

    def __mul__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.mul(self.raw, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.div(self.raw, r))

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldElem(self.spec, self.spec.div(r, self.raw))

    def __pow__(self, n):
        return FieldElem(self.spec, self.spec.pow_(self.raw, n))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.raw))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.spec == other.spec and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == other % self.spec.p and self.raw < self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec._hash, self.raw))

    def __bool__(self):
        return self.raw != 0

    def __str__(self):
        if self.spec.e == 1:
            return str(self.raw)
        return "[" + ",".join(str(c) for c in self.rep) + "]"

    def __repr__(self):
        return "FieldElem(%r, %s)" % (self.spec, self)


def quadratic_character(a: FieldElem) -> int:
    """0 on zero, +1 on nonzero squares, -1 on non-squares."""
    return a.spec.chi(a.raw)


def build_extension(p: int, e: int) -> FieldSpec:
    """F_{p^e} with a deterministic defining polynomial.

    The modulus is the first monic irreducible of degree e in the base-p
    counter order (candidate n gives constant digit n % p, then the t digit,
    and so on), e.g. t^2+1 for (3,2) and t^2+2 for (5,2).
    """
    if e == 1:
        return FieldSpec(p)
    kp = kernel.prime_kernel(p)
    for n in itertools.count():
        if n >= p**e:
            raise AssertionError("no irreducible of degree %d found" % e)
        m = _unpack(n, p, e) + [1]
        if m[0] == 0:
            continue  # divisible by t
        if _is_irreducible_mod_p(m, p, kp):
            return FieldSpec(p, e, m)
