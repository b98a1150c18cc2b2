"""Dense univariate polynomial kernels, pure-Python backend.

Coefficient lists are ascending by degree with no trailing zeros; the zero
polynomial is the empty list.  Two scalar regimes share every algorithm:

* ``*_p`` functions work over F_p with plain int coefficients,
* ``*_t`` functions work over a small F_q whose elements are packed ints in
  [0, q); multiplication/addition/negation/inversion go through flat lookup
  tables of length q*q (resp. q) built by the field layer.

``_kernel_c`` is a compiled twin with identical signatures and semantics;
either module may serve as the backend.
"""


def _norm(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    del c[n:]
    return c


# ---------------------------------------------------------------- prime field


def mul_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def divmod_p(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = len(b)
    r = list(a)
    if len(r) < lb:
        return [], r
    binv = pow(b[-1], -1, p)
    q = [0] * (len(r) - lb + 1)
    for i in range(len(r) - lb, -1, -1):
        c = (r[i + lb - 1] * binv) % p
        if c:
            q[i] = c
            for j in range(lb - 1):
                r[i + j] = (r[i + j] - c * b[j]) % p
        r[i + lb - 1] = 0
    del r[lb - 1 :]
    return q, _norm(r)


def mulmod_p(a, b, f, p):
    return divmod_p(mul_p(a, b, p), f, p)[1]


def gcd_p(a, b, p):
    a = list(a)
    b = list(b)
    while b:
        a, b = b, divmod_p(a, b, p)[1]
    if a and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def powmod_p(a, n, f, p):
    if n < 0:
        raise ValueError("negative exponent")
    if len(f) < 2:
        raise ValueError("modulus must have degree >= 1")
    base = divmod_p(a, f, p)[1]
    result = [1]
    while n:
        if n & 1:
            result = mulmod_p(result, base, f, p)
        n >>= 1
        if n:
            base = mulmod_p(base, base, f, p)
    return result


def eval_p(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def roots_p(a, p):
    if not a:
        raise ValueError("zero polynomial has every point as a root")
    return [x for x in range(p) if eval_p(a, x, p) == 0]


# ------------------------------------------------------- small field (tables)


def mul_t(a, b, q, addt, mult):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            base = ai * q
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = addt[out[i + j] * q + mult[base + bj]]
    return out


def divmod_t(a, b, q, addt, mult, negt, invt):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = len(b)
    r = list(a)
    if len(r) < lb:
        return [], r
    binv = invt[b[-1]]
    quo = [0] * (len(r) - lb + 1)
    for i in range(len(r) - lb, -1, -1):
        c = mult[r[i + lb - 1] * q + binv]
        if c:
            quo[i] = c
            for j in range(lb - 1):
                r[i + j] = addt[r[i + j] * q + negt[mult[c * q + b[j]]]]
        r[i + lb - 1] = 0
    del r[lb - 1 :]
    return quo, _norm(r)


def mulmod_t(a, b, f, q, addt, mult, negt, invt):
    return divmod_t(mul_t(a, b, q, addt, mult), f, q, addt, mult, negt, invt)[1]


def gcd_t(a, b, q, addt, mult, negt, invt):
    a = list(a)
    b = list(b)
    while b:
        a, b = b, divmod_t(a, b, q, addt, mult, negt, invt)[1]
    if a and a[-1] != 1:
        inv = invt[a[-1]]
        a = [mult[c * q + inv] for c in a]
    return a


def powmod_t(a, n, f, q, addt, mult, negt, invt):
    if n < 0:
        raise ValueError("negative exponent")
    if len(f) < 2:
        raise ValueError("modulus must have degree >= 1")
    base = divmod_t(a, f, q, addt, mult, negt, invt)[1]
    result = [1]
    while n:
        if n & 1:
            result = mulmod_t(result, base, f, q, addt, mult, negt, invt)
        n >>= 1
        if n:
            base = mulmod_t(base, base, f, q, addt, mult, negt, invt)
    return result


def eval_t(a, x, q, addt, mult):
    acc = 0
    for c in reversed(a):
        acc = addt[mult[acc * q + x] * q + c]
    return acc


def roots_t(a, q, addt, mult):
    if not a:
        raise ValueError("zero polynomial has every point as a root")
    return [x for x in range(q) if eval_t(a, x, q, addt, mult) == 0]
