# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``.

Coefficients stay arbitrary-precision Python ints; Cython only strips the
interpreter overhead from the index loops, which is where the time goes when
operator composition multiplies thousands of small polynomials.
"""

from math import gcd


def scalar_normalize(num, den):
    cdef Py_ssize_t i, n
    if den == 0:
        raise ZeroDivisionError("zero denominator in cyclotomic scalar")
    g = den
    for v in num:
        g = gcd(g, v)
        if g == 1:
            break
    if den < 0:
        g = -g
    if g != 1:
        num = tuple(v // g for v in num)
        den = den // g
    else:
        num = tuple(num)
    n = len(num)
    for i in range(n):
        if num[i] != 0:
            return num, den
    return num, 1


def scalar_add(na, da, nb, db):
    if da == db:
        return scalar_normalize([x + y for x, y in zip(na, nb)], da)
    return scalar_normalize([x * db + y * da for x, y in zip(na, nb)], da * db)


def scalar_sub(na, da, nb, db):
    if da == db:
        return scalar_normalize([x - y for x, y in zip(na, nb)], da)
    return scalar_normalize([x * db - y * da for x, y in zip(na, nb)], da * db)


def scalar_rat_mul(na, da, p, q):
    return scalar_normalize([v * p for v in na], da * q)


def scalar_mul(na, da, nb, db, red):
    cdef Py_ssize_t phi = len(na)
    cdef Py_ssize_t i, j, k
    if phi == 1:
        return scalar_normalize((na[0] * nb[0],), da * db)
    cdef list conv = [0] * (2 * phi - 1)
    for i in range(phi):
        x = na[i]
        if x != 0:
            for j in range(phi):
                y = nb[j]
                if y != 0:
                    conv[i + j] = conv[i + j] + x * y
    for k in range(phi, 2 * phi - 1):
        c = conv[k]
        if c != 0:
            row = red[k - phi]
            for j in range(phi):
                rj = row[j]
                if rj != 0:
                    conv[j] = conv[j] + c * rj
    return scalar_normalize(conv[:phi], da * db)


cdef inline bint _nonzero(tuple num):
    cdef Py_ssize_t i
    for i in range(len(num)):
        if num[i] != 0:
            return True
    return False


def poly_add(dict ta, dict tb):
    cdef dict out = dict(ta)
    for e, v in tb.items():
        cur = out.get(e)
        if cur is None:
            out[e] = v
        else:
            s = scalar_add(cur[0], cur[1], v[0], v[1])
            if _nonzero(s[0]):
                out[e] = s
            else:
                del out[e]
    return out


def poly_neg(dict ta):
    cdef dict out = {}
    for e, v in ta.items():
        out[e] = (tuple(-x for x in v[0]), v[1])
    return out


def poly_scalar_mul(dict ta, nb, db, red):
    cdef dict out = {}
    if not _nonzero(tuple(nb)):
        return out
    for e, v in ta.items():
        s = scalar_mul(v[0], v[1], nb, db, red)
        if _nonzero(s[0]):
            out[e] = s
    return out


def poly_mul(dict ta, dict tb, red):
    cdef dict out = {}
    cdef Py_ssize_t i, n
    if not ta or not tb:
        return out
    if len(ta) > len(tb):
        ta, tb = tb, ta
    for ea, va in ta.items():
        for eb, vb in tb.items():
            s = scalar_mul(va[0], va[1], vb[0], vb[1], red)
            if not _nonzero(s[0]):
                continue
            n = len(<tuple>ea)
            e = tuple((<tuple>ea)[i] + (<tuple>eb)[i] for i in range(n))
            cur = out.get(e)
            if cur is None:
                out[e] = s
            else:
                s = scalar_add(cur[0], cur[1], s[0], s[1])
                if _nonzero(s[0]):
                    out[e] = s
                else:
                    del out[e]
    return out
