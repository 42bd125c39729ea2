# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled compute kernel: same API and data layout as ``_kernel_py``.

Scalars stay Python ``(num, den)`` tuples so results are interchangeable
with the pure kernel; arithmetic takes a C fast path while both operands
fit comfortably in 64 bits and falls back to Python integers otherwise,
so exactness is never at risk.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow

from math import gcd as _pygcd

KIND_L = 0
KIND_I = 1
KIND_CL = 2
KIND_CI = 3
KIND_CLI = 4

SYM_CL = (2, 0, 1)
SYM_CI = (3, 0, 1)
SYM_CLI = (4, 0, 1)

MIXED_QUADRATIC_CL = 0
MIXED_QUADRATIC_CLI = 1
MIXED_CUBIC_CL = 2

ZERO = (0, 1)
ONE = (1, 1)
TWELFTH = (1, 12)

cdef object _ZERO = ZERO
cdef object _ONE = ONE

DEF LIMIT = 2147483647  # operands below 2^31 keep all products inside 64 bits


cdef inline long long cgcd(long long a, long long b) noexcept:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline bint _take2(object t, long long* n, long long* d) except -1:
    cdef int overflow = 0
    cdef long long nn, dd
    nn = PyLong_AsLongLongAndOverflow(t[0], &overflow)
    if overflow:
        return False
    dd = PyLong_AsLongLongAndOverflow(t[1], &overflow)
    if overflow:
        return False
    if nn > LIMIT or nn < -LIMIT or dd > LIMIT:
        return False
    n[0] = nn
    d[0] = dd
    return True


cdef inline object _norm_ll(long long n, long long d):
    cdef long long a, g
    if n == 0:
        return _ZERO
    a = n if n > 0 else -n
    g = cgcd(a, d)
    if g > 1:
        return (n // g, d // g)
    return (n, d)


def rq(n, d=1):
    """Normalize an integer pair into canonical scalar form."""
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if n == 0:
        return _ZERO
    if d < 0:
        n, d = -n, -d
    g = _pygcd(n if n > 0 else -n, d)
    if g > 1:
        return (n // g, d // g)
    return (n, d)


def rq_neg(a):
    return (-a[0], a[1])


cdef object _rq_add(object a, object b):
    cdef long long an, ad, bn, bd, n, d, g
    if a[0] == 0:
        return b
    if b[0] == 0:
        return a
    if _take2(a, &an, &ad) and _take2(b, &bn, &bd):
        if ad == bd:
            n = an + bn
            if n == 0:
                return _ZERO
            g = cgcd(n if n > 0 else -n, ad)
            if g > 1:
                return (n // g, ad // g)
            return (n, ad)
        n = an * bd + bn * ad
        d = ad * bd
        return _norm_ll(n, d)
    return _rq_add_big(a, b)


cdef object _rq_add_big(object a, object b):
    n = a[0] * b[1] + b[0] * a[1]
    if n == 0:
        return _ZERO
    d = a[1] * b[1]
    g = _pygcd(n if n > 0 else -n, d)
    if g > 1:
        return (n // g, d // g)
    return (n, d)


def rq_add(a, b):
    return _rq_add(a, b)


def rq_sub(a, b):
    return _rq_add(a, (-b[0], b[1]))


cdef object _rq_mul(object a, object b):
    cdef long long an, ad, bn, bd, g1, g2
    if a[0] == 0 or b[0] == 0:
        return _ZERO
    if _take2(a, &an, &ad) and _take2(b, &bn, &bd):
        g1 = cgcd(an if an > 0 else -an, bd)
        g2 = cgcd(bn if bn > 0 else -bn, ad)
        return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))
    return _rq_mul_big(a, b)


cdef object _rq_mul_big(object a, object b):
    an, ad = a
    bn, bd = b
    g1 = _pygcd(an if an > 0 else -an, bd)
    g2 = _pygcd(bn if bn > 0 else -bn, ad)
    return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))


def rq_mul(a, b):
    return _rq_mul(a, b)


def rq_inv(a):
    n, d = a
    if n == 0:
        raise ZeroDivisionError("division by zero")
    if n < 0:
        return (-d, -n)
    return (d, n)


def rq_div(a, b):
    return _rq_mul(a, rq_inv(b))


def sym_grade(sym):
    """Grade of a basis symbol: its index for L/I, zero for centrals."""
    if sym[0] <= 1:
        return (sym[1], sym[2])
    return _ZERO


cdef list _bracket_basis(object sa, object sb, int cocycle, bint centerless):
    cdef int ka = sa[0]
    cdef int kb = sb[0]
    cdef list out
    if ka > 1 or kb > 1:
        return []
    if ka == 1 and kb == 0:
        out = _bracket_basis(sb, sa, cocycle, centerless)
        return [(s, (-c[0], c[1])) for (s, c) in out]
    x = (sa[1], sa[2])
    y = (sb[1], sb[2])
    s = _rq_add(x, y)
    out = []
    if ka == 0 and kb == 0:
        c = _rq_add(y, (-x[0], x[1]))
        if c is not _ZERO and c != _ZERO:
            out.append(((0, s[0], s[1]), c))
        if s == _ZERO and not centerless:
            cc = _rq_mul(TWELFTH, _rq_add(_rq_mul(x, _rq_mul(x, x)), (-x[0], x[1])))
            if cc != _ZERO:
                out.append((SYM_CL, cc))
    elif ka == 0 and kb == 1:
        if y != _ZERO and not (centerless and s == _ZERO):
            out.append(((1, s[0], s[1]), y))
        if s == _ZERO and not centerless:
            xx = _rq_mul(x, x)
            if cocycle == 0:
                cc = _rq_add(xx, (-x[0], x[1]))
                csym = SYM_CL
            elif cocycle == 1:
                cc = _rq_add(xx, x)
                csym = SYM_CLI
            else:
                cc = _rq_add(_rq_mul(xx, x), (-x[0], x[1]))
                csym = SYM_CL
            if cc != _ZERO:
                out.append((csym, cc))
    else:
        if s == _ZERO and y != _ZERO and not centerless:
            out.append((SYM_CI, y))
    return out


def bracket_basis(sa, sb, cocycle, centerless):
    """Structure constants: the bracket of two basis symbols."""
    return _bracket_basis(sa, sb, cocycle, centerless)


def scale_terms(terms, c):
    if c == _ZERO:
        return {}
    cdef dict out = {}
    for k, v in (<dict> terms).items():
        out[k] = _rq_mul(v, c)
    return out


def add_scaled_into(dst, src, c):
    """dst += c * src, dropping cancelled entries.  Mutates and returns dst."""
    cdef dict d = <dict> dst
    if c == _ZERO:
        return d
    for k, v in (<dict> src).items():
        nv = _rq_add(d.get(k, _ZERO), _rq_mul(v, c))
        if nv == _ZERO:
            d.pop(k, None)
        else:
            d[k] = nv
    return d


def add_terms(a, b):
    out = dict(a)
    return add_scaled_into(out, b, _ONE)


def bracket_terms(ta, tb, cocycle, centerless):
    """Bilinear extension of the structure constants to elements."""
    cdef dict out = {}
    cdef int cc = cocycle
    cdef bint cl = centerless
    for sa, ca in (<dict> ta).items():
        for sb, cb in (<dict> tb).items():
            c = _rq_mul(ca, cb)
            for sym, k in _bracket_basis(sa, sb, cc, cl):
                nv = _rq_add(out.get(sym, _ZERO), _rq_mul(c, k))
                if nv == _ZERO:
                    out.pop(sym, None)
                else:
                    out[sym] = nv
    return out


def diag_act(x_terms, t_terms, cocycle, centerless):
    """Diagonal adjoint action of an element on a rank-2 or rank-3 tensor."""
    cdef dict out = {}
    cdef int cc = cocycle
    cdef bint cl = centerless
    cdef Py_ssize_t i, m
    for xs, xc in (<dict> x_terms).items():
        for key, tc in (<dict> t_terms).items():
            c = _rq_mul(xc, tc)
            m = len(<tuple> key)
            for i in range(m):
                for sym, k in _bracket_basis(xs, (<tuple> key)[i], cc, cl):
                    nk = (<tuple> key)[:i] + (sym,) + (<tuple> key)[i + 1:]
                    nv = _rq_add(out.get(nk, _ZERO), _rq_mul(c, k))
                    if nv == _ZERO:
                        out.pop(nk, None)
                    else:
                        out[nk] = nv
    return out


def rref(rows):
    """Reduced row echelon form of sparse rational rows.

    Same contract as the pure kernel: returns ``(pivot_cols, {col: row})``
    with unit pivots, first-nonzero pivot choice in ascending column order,
    and full reduction of every pivot row against every other.
    """
    cdef dict piv = {}
    cdef dict r, p
    cdef list hits
    for row in rows:
        r = dict(row)
        hits = [c for c in r if c in piv]
        for c in hits:
            f = r.pop(c, None)
            if f is None:
                continue
            p = <dict> piv[c]
            for k, v in p.items():
                if k == c:
                    continue
                nv = _rq_add(r.get(k, _ZERO), _rq_mul((-f[0], f[1]), v))
                if nv == _ZERO:
                    r.pop(k, None)
                else:
                    r[k] = nv
        if not r:
            continue
        c = min(r)
        f = r[c]
        if f != _ONE:
            inv = rq_inv(f)
            r = {k: _rq_mul(v, inv) for k, v in r.items()}
        for p in piv.values():
            f2 = p.get(c)
            if f2 is None:
                continue
            del p[c]
            for k, v in r.items():
                if k == c:
                    continue
                nv = _rq_add(p.get(k, _ZERO), _rq_mul((-f2[0], f2[1]), v))
                if nv == _ZERO:
                    p.pop(k, None)
                else:
                    p[k] = nv
        piv[c] = r
    return sorted(piv), piv
