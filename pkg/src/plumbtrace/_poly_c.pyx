# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernel for sparse Gaussian-integer polynomials.

Drop-in replacement for ``_poly_py``: same representation (dict from
exponent tuple to ``(re, im)`` pair of Python ints, zero poly = empty dict),
same contract.  Coefficients stay Python ints so arithmetic is exact at any
size; the speedup comes from removing interpreter overhead in the term
loops, which dominate trace computations.
"""


def padd(dict p, dict q):
    cdef dict out = dict(p)
    for m, c in q.items():
        qr, qi = c
        pc = out.get(m)
        if pc is None:
            out[m] = c
        else:
            pr, pi = pc
            r = pr + qr
            i = pi + qi
            if r or i:
                out[m] = (r, i)
            else:
                del out[m]
    return out


def pneg(dict p):
    cdef dict out = {}
    for m, c in p.items():
        r, i = c
        out[m] = (-r, -i)
    return out


def pscale(dict p, tuple c):
    cr, ci = c
    if not cr and not ci:
        return {}
    cdef dict out = {}
    for m, pc in p.items():
        r, i = pc
        out[m] = (r * cr - i * ci, r * ci + i * cr)
    return out


def pmul(dict p, dict q):
    if not p or not q:
        return {}
    cdef dict out = {}
    cdef Py_ssize_t n, k
    cdef tuple m1, m2, m
    for m1, c1 in p.items():
        r1, i1 = c1
        for m2, c2 in q.items():
            r2, i2 = c2
            n = len(m1)
            m = tuple([m1[k] + m2[k] for k in range(n)])
            r = r1 * r2 - i1 * i2
            i = r1 * i2 + i1 * r2
            prev = out.get(m)
            if prev is not None:
                ar, ai = prev
                r = r + ar
                i = i + ai
            if r or i:
                out[m] = (r, i)
            elif prev is not None:
                del out[m]
    return out


def mat_mul(tuple A, tuple B):
    a, b, c, d = A
    e, f, g, h = B
    return (
        padd(pmul(a, e), pmul(b, g)),
        padd(pmul(a, f), pmul(b, h)),
        padd(pmul(c, e), pmul(d, g)),
        padd(pmul(c, f), pmul(d, h)),
    )
