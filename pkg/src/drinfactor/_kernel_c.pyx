# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _kernel_py; see that module for the conventions.

Coefficients must fit machine words: the field layer only routes here when
p < 2**31 (prime family) or q <= the table limit (table family), so every
intermediate product stays below 2**62.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef long long* _buf(Py_ssize_t n) except NULL:
    cdef long long* b = <long long*> PyMem_Malloc(n * sizeof(long long))
    if b == NULL:
        raise MemoryError()
    return b


cdef long long* _from_list(list a) except NULL:
    cdef Py_ssize_t i, n = len(a)
    cdef long long* b = _buf(n if n else 1)
    for i in range(n):
        b[i] = a[i]
    return b


cdef list _to_list(long long* b, Py_ssize_t n):
    cdef Py_ssize_t i
    out = []
    for i in range(n):
        out.append(b[i])
    return out


cdef inline Py_ssize_t _normlen(long long* b, Py_ssize_t n):
    while n > 0 and b[n - 1] == 0:
        n -= 1
    return n


cdef long long _inv_ll(long long a, long long p):
    # extended euclid; a in (0, p)
    cdef long long old_r = a, r = p, old_s = 1, s = 0, q, t
    while r != 0:
        q = old_r / r
        t = old_r - q * r
        old_r = r
        r = t
        t = old_s - q * s
        old_s = s
        s = t
    if old_s < 0:
        old_s += p
    return old_s


# ---------------------------------------------------------------- prime field


cdef Py_ssize_t _rem_core_p(long long* r, Py_ssize_t lr, long long* f,
                            Py_ssize_t lf, long long finv, long long p):
    cdef Py_ssize_t i, j
    cdef long long c, v
    if lr >= lf:
        for i in range(lr - lf, -1, -1):
            c = (r[i + lf - 1] * finv) % p
            if c:
                for j in range(lf - 1):
                    v = (r[i + j] - c * f[j]) % p
                    if v < 0:
                        v += p
                    r[i + j] = v
            r[i + lf - 1] = 0
        lr = lf - 1
    return _normlen(r, lr)


cdef void _mul_core_p(long long* a, Py_ssize_t la, long long* b, Py_ssize_t lb,
                      long long* out, long long p):
    # out has size la+lb-1 and is overwritten
    cdef Py_ssize_t i, j
    cdef long long ai
    for i in range(la + lb - 1):
        out[i] = 0
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                out[i + j] = (out[i + j] + ai * b[j]) % p


def mul_p(list a, list b, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef long long* ca = _from_list(a)
    cdef long long* cb = _from_list(b)
    cdef long long* out = _buf(la + lb - 1)
    _mul_core_p(ca, la, cb, lb, out, p)
    res = _to_list(out, la + lb - 1)
    PyMem_Free(ca); PyMem_Free(cb); PyMem_Free(out)
    return res


def divmod_p(list a, list b, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return [], list(a)
    cdef long long* r = _from_list(a)
    cdef long long* cb = _from_list(b)
    cdef long long* q = _buf(la - lb + 1)
    cdef long long binv = _inv_ll(b[lb - 1], p)
    cdef long long c, v
    for i in range(la - lb + 1):
        q[i] = 0
    for i in range(la - lb, -1, -1):
        c = (r[i + lb - 1] * binv) % p
        if c:
            q[i] = c
            for j in range(lb - 1):
                v = (r[i + j] - c * cb[j]) % p
                if v < 0:
                    v += p
                r[i + j] = v
        r[i + lb - 1] = 0
    quo = _to_list(q, la - lb + 1)
    rem = _to_list(r, _normlen(r, lb - 1))
    PyMem_Free(r); PyMem_Free(cb); PyMem_Free(q)
    return quo, rem


def mulmod_p(list a, list b, list f, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b), lf = len(f)
    if lf < 2:
        raise ValueError("modulus must have degree >= 1")
    if la == 0 or lb == 0:
        return []
    cdef long long* ca = _from_list(a)
    cdef long long* cb = _from_list(b)
    cdef long long* cf = _from_list(f)
    cdef long long* out = _buf(la + lb - 1)
    cdef long long finv = _inv_ll(f[lf - 1], p)
    _mul_core_p(ca, la, cb, lb, out, p)
    cdef Py_ssize_t n = _rem_core_p(out, la + lb - 1, cf, lf, finv, p)
    res = _to_list(out, n)
    PyMem_Free(ca); PyMem_Free(cb); PyMem_Free(cf); PyMem_Free(out)
    return res


def gcd_p(list a, list b, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b), t
    if la == 0 and lb == 0:
        return []
    cdef Py_ssize_t cap = (la if la > lb else lb) + 1
    cdef long long* A = _buf(cap)
    cdef long long* B = _buf(cap)
    cdef long long* T
    cdef Py_ssize_t i
    for i in range(la):
        A[i] = a[i]
    for i in range(lb):
        B[i] = b[i]
    la = _normlen(A, la)
    lb = _normlen(B, lb)
    cdef long long inv
    while lb > 0:
        la = _rem_core_p(A, la, B, lb, _inv_ll(B[lb - 1], p), p)
        T = A; A = B; B = T
        t = la; la = lb; lb = t
    if la and A[la - 1] != 1:
        inv = _inv_ll(A[la - 1], p)
        for i in range(la):
            A[i] = (A[i] * inv) % p
    res = _to_list(A, la)
    PyMem_Free(A); PyMem_Free(B)
    return res


def powmod_p(list a, object n, list f, long long p):
    if n < 0:
        raise ValueError("negative exponent")
    cdef Py_ssize_t lf = len(f)
    if lf < 2:
        raise ValueError("modulus must have degree >= 1")
    cdef Py_ssize_t la = len(a), i
    cdef long long finv = _inv_ll(f[lf - 1], p)
    cdef long long* cf = _from_list(f)
    # reduce the base first
    cdef Py_ssize_t cap = la if la > (lf - 1) else (lf - 1)
    if cap < 1:
        cap = 1
    cdef long long* base = _buf(cap)
    for i in range(la):
        base[i] = a[i]
    cdef Py_ssize_t lbase = _rem_core_p(base, la, cf, lf, finv, p)
    cdef long long* result = _buf(lf - 1 if lf > 1 else 1)
    cdef long long* scratch = _buf(2 * lf)
    result[0] = 1
    cdef Py_ssize_t lres = 1
    bits = []
    while n:
        bits.append(n & 1)
        n >>= 1
    for i in range(len(bits)):
        if bits[i]:
            if lres and lbase:
                _mul_core_p(result, lres, base, lbase, scratch, p)
                lres = _rem_core_p(scratch, lres + lbase - 1, cf, lf, finv, p)
                for_copy(scratch, result, lres)
            else:
                lres = 0
        if i + 1 < len(bits):
            if lbase:
                _mul_core_p(base, lbase, base, lbase, scratch, p)
                lbase = _rem_core_p(scratch, 2 * lbase - 1, cf, lf, finv, p)
                for_copy(scratch, base, lbase)
    res = _to_list(result, lres)
    PyMem_Free(cf); PyMem_Free(base); PyMem_Free(result); PyMem_Free(scratch)
    return res


cdef inline void for_copy(long long* src, long long* dst, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        dst[i] = src[i]


def eval_p(list a, long long x, long long p):
    cdef long long acc = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = (acc * x + <long long> a[i]) % p
    return acc


def roots_p(list a, long long p):
    cdef Py_ssize_t la = len(a), i
    cdef long long x, acc
    if la == 0:
        raise ValueError("zero polynomial has every point as a root")
    cdef long long* ca = _from_list(a)
    out = []
    for x in range(p):
        acc = 0
        for i in range(la - 1, -1, -1):
            acc = (acc * x + ca[i]) % p
        if acc == 0:
            out.append(x)
    PyMem_Free(ca)
    return out


# ------------------------------------------------------- small field (tables)


cdef Py_ssize_t _rem_core_t(long long* r, Py_ssize_t lr, long long* f, Py_ssize_t lf,
                            long long q, const long long[::1] addt,
                            const long long[::1] mult, const long long[::1] negt,
                            const long long[::1] invt):
    cdef Py_ssize_t i, j
    cdef long long c
    cdef long long finv = invt[f[lf - 1]]
    if lr >= lf:
        for i in range(lr - lf, -1, -1):
            c = mult[r[i + lf - 1] * q + finv]
            if c:
                for j in range(lf - 1):
                    r[i + j] = addt[r[i + j] * q + negt[mult[c * q + f[j]]]]
            r[i + lf - 1] = 0
        lr = lf - 1
    return _normlen(r, lr)


cdef void _mul_core_t(long long* a, Py_ssize_t la, long long* b, Py_ssize_t lb,
                      long long* out, long long q, const long long[::1] addt,
                      const long long[::1] mult):
    cdef Py_ssize_t i, j
    cdef long long ai
    for i in range(la + lb - 1):
        out[i] = 0
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                if b[j]:
                    out[i + j] = addt[out[i + j] * q + mult[ai * q + b[j]]]


def mul_t(list a, list b, long long q, const long long[::1] addt,
          const long long[::1] mult):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef long long* ca = _from_list(a)
    cdef long long* cb = _from_list(b)
    cdef long long* out = _buf(la + lb - 1)
    _mul_core_t(ca, la, cb, lb, out, q, addt, mult)
    res = _to_list(out, la + lb - 1)
    PyMem_Free(ca); PyMem_Free(cb); PyMem_Free(out)
    return res


def divmod_t(list a, list b, long long q, const long long[::1] addt,
             const long long[::1] mult, const long long[::1] negt,
             const long long[::1] invt):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return [], list(a)
    cdef long long* r = _from_list(a)
    cdef long long* cb = _from_list(b)
    cdef long long* quo = _buf(la - lb + 1)
    cdef long long binv = invt[b[lb - 1]]
    cdef long long c
    for i in range(la - lb + 1):
        quo[i] = 0
    for i in range(la - lb, -1, -1):
        c = mult[r[i + lb - 1] * q + binv]
        if c:
            quo[i] = c
            for j in range(lb - 1):
                r[i + j] = addt[r[i + j] * q + negt[mult[c * q + cb[j]]]]
        r[i + lb - 1] = 0
    qq = _to_list(quo, la - lb + 1)
    rem = _to_list(r, _normlen(r, lb - 1))
    PyMem_Free(r); PyMem_Free(cb); PyMem_Free(quo)
    return qq, rem


def mulmod_t(list a, list b, list f, long long q, const long long[::1] addt,
             const long long[::1] mult, const long long[::1] negt,
             const long long[::1] invt):
    cdef Py_ssize_t la = len(a), lb = len(b), lf = len(f)
    if lf < 2:
        raise ValueError("modulus must have degree >= 1")
    if la == 0 or lb == 0:
        return []
    cdef long long* ca = _from_list(a)
    cdef long long* cb = _from_list(b)
    cdef long long* cf = _from_list(f)
    cdef long long* out = _buf(la + lb - 1)
    _mul_core_t(ca, la, cb, lb, out, q, addt, mult)
    cdef Py_ssize_t n = _rem_core_t(out, la + lb - 1, cf, lf, q, addt, mult, negt, invt)
    res = _to_list(out, n)
    PyMem_Free(ca); PyMem_Free(cb); PyMem_Free(cf); PyMem_Free(out)
    return res


def gcd_t(list a, list b, long long q, const long long[::1] addt,
          const long long[::1] mult, const long long[::1] negt,
          const long long[::1] invt):
    cdef Py_ssize_t la = len(a), lb = len(b), t, i
    if la == 0 and lb == 0:
        return []
    cdef Py_ssize_t cap = (la if la > lb else lb) + 1
    cdef long long* A = _buf(cap)
    cdef long long* B = _buf(cap)
    cdef long long* T
    for i in range(la):
        A[i] = a[i]
    for i in range(lb):
        B[i] = b[i]
    la = _normlen(A, la)
    lb = _normlen(B, lb)
    cdef long long inv
    while lb > 0:
        la = _rem_core_t(A, la, B, lb, q, addt, mult, negt, invt)
        T = A; A = B; B = T
        t = la; la = lb; lb = t
    if la and A[la - 1] != 1:
        inv = invt[A[la - 1]]
        for i in range(la):
            A[i] = mult[A[i] * q + inv]
    res = _to_list(A, la)
    PyMem_Free(A); PyMem_Free(B)
    return res


def powmod_t(list a, object n, list f, long long q, const long long[::1] addt,
             const long long[::1] mult, const long long[::1] negt,
             const long long[::1] invt):
    if n < 0:
        raise ValueError("negative exponent")
    cdef Py_ssize_t lf = len(f)
    if lf < 2:
        raise ValueError("modulus must have degree >= 1")
    cdef Py_ssize_t la = len(a), i
    cdef long long* cf = _from_list(f)
    cdef Py_ssize_t cap = la if la > (lf - 1) else (lf - 1)
    if cap < 1:
        cap = 1
    cdef long long* base = _buf(cap)
    for i in range(la):
        base[i] = a[i]
    cdef Py_ssize_t lbase = _rem_core_t(base, la, cf, lf, q, addt, mult, negt, invt)
    cdef long long* result = _buf(lf - 1 if lf > 1 else 1)
    cdef long long* scratch = _buf(2 * lf)
    result[0] = 1
    cdef Py_ssize_t lres = 1
    bits = []
    while n:
        bits.append(n & 1)
        n >>= 1
    for i in range(len(bits)):
        if bits[i]:
            if lres and lbase:
                _mul_core_t(result, lres, base, lbase, scratch, q, addt, mult)
                lres = _rem_core_t(scratch, lres + lbase - 1, cf, lf, q, addt, mult, negt, invt)
                for_copy(scratch, result, lres)
            else:
                lres = 0
        if i + 1 < len(bits):
            if lbase:
                _mul_core_t(base, lbase, base, lbase, scratch, q, addt, mult)
                lbase = _rem_core_t(scratch, 2 * lbase - 1, cf, lf, q, addt, mult, negt, invt)
                for_copy(scratch, base, lbase)
    res = _to_list(result, lres)
    PyMem_Free(cf); PyMem_Free(base); PyMem_Free(result); PyMem_Free(scratch)
    return res


def eval_t(list a, long long x, long long q, const long long[::1] addt,
           const long long[::1] mult):
    cdef long long acc = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = addt[mult[acc * q + x] * q + <long long> a[i]]
    return acc


def roots_t(list a, long long q, const long long[::1] addt,
            const long long[::1] mult):
    cdef Py_ssize_t la = len(a), i
    cdef long long x, acc
    if la == 0:
        raise ValueError("zero polynomial has every point as a root")
    cdef long long* ca = _from_list(a)
    out = []
    for x in range(q):
        acc = 0
        for i in range(la - 1, -1, -1):
            acc = addt[mult[acc * q + x] * q + ca[i]]
        if acc == 0:
            out.append(x)
    PyMem_Free(ca)
    return out
