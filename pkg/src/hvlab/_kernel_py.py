"""Pure-Python compute kernel: basis brackets, diagonal actions, exact rref.

This module and the compiled twin ``_kernel_c`` implement the same API over
the same plain data layout; ``hvlab.kernel`` picks one at import time.

Data layout:

* symbol  -- ``(kind, num, den)`` with kind 0=L, 1=I, 2=C_L, 3=C_I, 4=C_LI;
  central symbols carry the index 0/1.  ``num/den`` is the normalized index.
* scalar  -- ``(num, den)`` normalized: den > 0, gcd(|num|, den) == 1.
* element -- ``{symbol: scalar}`` with no zero coefficients stored.
* tensor  -- ``{(symbol, ...): scalar}`` with rank-2 or rank-3 keys.
* rows    -- ``[{column: scalar}]`` sparse rational matrix rows.

Mixed-cocycle codes select the central term of the [L, I] relation:
0 -> (x^2 - x) C_L, 1 -> (x^2 + x) C_LI, and 2 -> (x^3 - x) C_L, which is
deliberately inconsistent and exists to exercise the axiom verifier's
failure path.
"""

from math import gcd

KIND_L = 0
KIND_I = 1
KIND_CL = 2
KIND_CI = 3
KIND_CLI = 4

SYM_CL = (KIND_CL, 0, 1)
SYM_CI = (KIND_CI, 0, 1)
SYM_CLI = (KIND_CLI, 0, 1)

MIXED_QUADRATIC_CL = 0
MIXED_QUADRATIC_CLI = 1
MIXED_CUBIC_CL = 2

ZERO = (0, 1)
ONE = (1, 1)
TWELFTH = (1, 12)


def rq(n, d=1):
    """Normalize an integer pair into canonical scalar form."""
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if n == 0:
        return ZERO
    if d < 0:
        n, d = -n, -d
    g = gcd(n if n > 0 else -n, d)
    if g > 1:
        return (n // g, d // g)
    return (n, d)


def rq_neg(a):
    return (-a[0], a[1])


def rq_add(a, b):
    an, ad = a
    bn, bd = b
    if an == 0:
        return b
    if bn == 0:
        return a
    if ad == bd:
        n = an + bn
        if n == 0:
            return ZERO
        g = gcd(n if n > 0 else -n, ad)
        if g > 1:
            return (n // g, ad // g)
        return (n, ad)
    return rq(an * bd + bn * ad, ad * bd)


def rq_sub(a, b):
    return rq_add(a, (-b[0], b[1]))


def rq_mul(a, b):
    an, ad = a
    bn, bd = b
    if an == 0 or bn == 0:
        return ZERO
    g1 = gcd(an if an > 0 else -an, bd)
    g2 = gcd(bn if bn > 0 else -bn, ad)
    # cross-cancelled product of canonical forms is already canonical
    return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))


def rq_inv(a):
    n, d = a
    if n == 0:
        raise ZeroDivisionError("division by zero")
    if n < 0:
        return (-d, -n)
    return (d, n)


def rq_div(a, b):
    return rq_mul(a, rq_inv(b))


def sym_grade(sym):
    """Grade of a basis symbol: its index for L/I, zero for centrals."""
    if sym[0] <= KIND_I:
        return (sym[1], sym[2])
    return ZERO


def bracket_basis(sa, sb, cocycle, centerless):
    """Structure constants: the bracket of two basis symbols.

    Returns a list of (symbol, scalar) pairs.  In the centerless variant
    every central output (C_L, C_I, C_LI and I at index 0) is dropped.
    """
    ka = sa[0]
    kb = sb[0]
    if ka > KIND_I or kb > KIND_I:
        return []
    if ka == KIND_I and kb == KIND_L:
        return [(s, rq_neg(c)) for (s, c) in bracket_basis(sb, sa, cocycle, centerless)]
    x = (sa[1], sa[2])
    y = (sb[1], sb[2])
    s = rq_add(x, y)
    out = []
    if ka == KIND_L and kb == KIND_L:
        c = rq_sub(y, x)
        if c != ZERO:
            out.append(((KIND_L, s[0], s[1]), c))
        if s == ZERO and not centerless:
            cc = rq_mul(TWELFTH, rq_sub(rq_mul(x, rq_mul(x, x)), x))
            if cc != ZERO:
                out.append((SYM_CL, cc))
    elif ka == KIND_L and kb == KIND_I:
        if y != ZERO and not (centerless and s == ZERO):
            out.append(((KIND_I, s[0], s[1]), y))
        if s == ZERO and not centerless:
            xx = rq_mul(x, x)
            if cocycle == MIXED_QUADRATIC_CL:
                cc = rq_sub(xx, x)
                csym = SYM_CL
            elif cocycle == MIXED_QUADRATIC_CLI:
                cc = rq_add(xx, x)
                csym = SYM_CLI
            else:
                cc = rq_sub(rq_mul(xx, x), x)
                csym = SYM_CL
            if cc != ZERO:
                out.append((csym, cc))
    else:  # I, I
        if s == ZERO and y != ZERO and not centerless:
            out.append((SYM_CI, y))
    return out


def scale_terms(terms, c):
    if c == ZERO:
        return {}
    return {k: rq_mul(v, c) for k, v in terms.items()}


def add_scaled_into(dst, src, c):
    """dst += c * src, dropping cancelled entries.  Mutates and returns dst."""
    if c == ZERO:
        return dst
    for k, v in src.items():
        nv = rq_add(dst.get(k, ZERO), rq_mul(v, c))
        if nv == ZERO:
            dst.pop(k, None)
        else:
            dst[k] = nv
    return dst


def add_terms(a, b):
    out = dict(a)
    return add_scaled_into(out, b, ONE)


def bracket_terms(ta, tb, cocycle, centerless):
    """Bilinear extension of the structure constants to elements."""
    out = {}
    for sa, ca in ta.items():
        for sb, cb in tb.items():
            c = rq_mul(ca, cb)
            for sym, k in bracket_basis(sa, sb, cocycle, centerless):
                nv = rq_add(out.get(sym, ZERO), rq_mul(c, k))
                if nv == ZERO:
                    out.pop(sym, None)
                else:
                    out[sym] = nv
    return out


def diag_act(x_terms, t_terms, cocycle, centerless):
    """Diagonal adjoint action of an element on a rank-2 or rank-3 tensor."""
    out = {}
    for xs, xc in x_terms.items():
        for key, tc in t_terms.items():
            c = rq_mul(xc, tc)
            for i in range(len(key)):
                for sym, k in bracket_basis(xs, key[i], cocycle, centerless):
                    nk = key[:i] + (sym,) + key[i + 1 :]
                    nv = rq_add(out.get(nk, ZERO), rq_mul(c, k))
                    if nv == ZERO:
                        out.pop(nk, None)
                    else:
                        out[nk] = nv
    return out


def rref(rows):
    """Reduced row echelon form of sparse rational rows.

    Returns ``(pivot_cols, {pivot_col: row})`` where every row carries
    coefficient 1 at its pivot column, pivots are chosen as the first
    nonzero column in ascending order, and each pivot row is fully reduced
    against every other pivot.  Input rows are left untouched.
    """
    piv = {}
    for row in rows:
        r = dict(row)
        # eliminate every pivot column present in the incoming row; stored
        # pivot rows carry no other pivot columns, so one pass suffices
        for c in [c for c in r if c in piv]:
            f = r.pop(c, None)
            if f is None:
                continue
            for k, v in piv[c].items():
                if k == c:
                    continue
                nv = rq_sub(r.get(k, ZERO), rq_mul(f, v))
                if nv == ZERO:
                    r.pop(k, None)
                else:
                    r[k] = nv
        if not r:
            continue
        c = min(r)
        f = r[c]
        if f != ONE:
            inv = rq_inv(f)
            r = {k: rq_mul(v, inv) for k, v in r.items()}
        for p in piv.values():
            f2 = p.get(c)
            if f2 is None:
                continue
            del p[c]
            for k, v in r.items():
                if k == c:
                    continue
                nv = rq_sub(p.get(k, ZERO), rq_mul(f2, v))
                if nv == ZERO:
                    p.pop(k, None)
                else:
                    p[k] = nv
        piv[c] = r
    return sorted(piv), piv
