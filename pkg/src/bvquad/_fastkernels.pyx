# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: double-double Peano kernel evaluation and
compensated dot products. Mirrors bvquad._kernels_ref exactly; the
suffix-sum / binomial-expansion scheme is documented there.
"""
from libc.math cimport fma
import math
import numpy as np

BACKEND = "cython"


cdef struct dd:
    double hi
    double lo


cdef inline dd two_sum(double a, double b) noexcept:
    cdef dd r
    cdef double bb
    r.hi = a + b
    bb = r.hi - a
    r.lo = (a - (r.hi - bb)) + (b - bb)
    return r


cdef inline dd two_prod(double a, double b) noexcept:
    cdef dd r
    r.hi = a * b
    r.lo = fma(a, b, -r.hi)
    return r


cdef inline dd renorm(double hi, double lo) noexcept:
    cdef dd r
    r.hi = hi + lo
    r.lo = lo - (r.hi - hi)
    return r


cdef inline dd dd_add(dd x, dd y) noexcept:
    cdef dd s = two_sum(x.hi, y.hi)
    return renorm(s.hi, s.lo + x.lo + y.lo)


cdef inline dd dd_mul(dd x, dd y) noexcept:
    cdef dd p = two_prod(x.hi, y.hi)
    return renorm(p.hi, p.lo + x.hi * y.lo + x.lo * y.hi)


cdef inline dd dd_mul_d(dd x, double y) noexcept:
    cdef dd p = two_prod(x.hi, y)
    return renorm(p.hi, p.lo + x.lo * y)


cdef inline dd dd_div_d(dd x, double d) noexcept:
    cdef double q0 = (x.hi + x.lo) / d
    cdef dd p = two_prod(q0, d)
    cdef double r = ((x.hi - p.hi) - p.lo) + x.lo
    return renorm(q0, r / d)


cdef inline Py_ssize_t upper_bound(const double[::1] x, double v) noexcept:
    """First index i with x[i] > v (x ascending)."""
    cdef Py_ssize_t lo = 0, hi = x.shape[0], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if x[mid] <= v:
            lo = mid + 1
        else:
            hi = mid
    return lo


def suffix_tables(const double[::1] x, const double[::1] w, int s):
    """M[i, k] = sum_{j >= i} w_j x_j^k as double-double, shape (n+1, s+1, 2)."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t j
    cdef int k
    out = np.zeros((n + 1, s + 1, 2))
    cdef double[:, :, ::1] M = out
    cdef dd acc_stack[64]
    if s + 1 > 64:
        raise ValueError("kernel order too large")
    cdef dd p, term
    for k in range(s + 1):
        acc_stack[k].hi = 0.0
        acc_stack[k].lo = 0.0
    for j in range(n - 1, -1, -1):
        p.hi = 1.0
        p.lo = 0.0
        for k in range(s + 1):
            term = dd_mul_d(p, w[j])
            acc_stack[k] = dd_add(acc_stack[k], term)
            M[j, k, 0] = acc_stack[k].hi
            M[j, k, 1] = acc_stack[k].lo
            if k < s:
                p = dd_mul_d(p, x[j])
    return out


cdef dd node_sum_one(const double[::1] x, const double[:, :, ::1] M, int s,
                     const double[::1] binom, double t) noexcept:
    cdef Py_ssize_t i = upper_bound(x, t)
    cdef dd p, S, term, Mk
    cdef int k
    p.hi = 1.0
    p.lo = 0.0
    S.hi = 0.0
    S.lo = 0.0
    for k in range(s, -1, -1):
        Mk.hi = M[i, k, 0]
        Mk.lo = M[i, k, 1]
        term = dd_mul(p, Mk)
        term = dd_mul_d(term, binom[k])
        S = dd_add(S, term)
        if k > 0:
            p = dd_mul_d(p, -t)
    return S


def eval_node_sums(const double[::1] x, const double[::1] w, int s,
                   const double[:, :, ::1] M, const double[::1] t):
    """sum_{x_j > t_i} w_j (x_j - t_i)^s for each t_i, correctly rounded."""
    cdef Py_ssize_t m = t.shape[0], i
    binom_arr = np.array([float(math.comb(s, k)) for k in range(s + 1)])
    cdef double[::1] binom = binom_arr
    out = np.empty(m)
    cdef double[::1] o = out
    cdef dd S
    for i in range(m):
        S = node_sum_one(x, M, s, binom, t[i])
        o[i] = S.hi + S.lo
    return out


def eval_kernel_legendre(const double[::1] x, const double[::1] w, int s,
                         const double[:, :, ::1] M, const double[::1] t):
    """Peano kernel for w = 1: ((1-t)^(s+1)/(s+1) - node_sum) / s!."""
    import math
    cdef Py_ssize_t m = t.shape[0], i
    binom_arr = np.array([float(math.comb(s, k)) for k in range(s + 1)])
    cdef double[::1] binom = binom_arr
    cdef double sfact = <double>math.factorial(s)
    out = np.empty(m)
    cdef double[::1] o = out
    cdef dd S, u, T, K
    cdef int q
    for i in range(m):
        S = node_sum_one(x, M, s, binom, t[i])
        u = two_sum(1.0, -t[i])
        T = u
        for q in range(s):
            T = dd_mul(T, u)
        T = dd_div_d(T, <double>(s + 1))
        S.hi = -S.hi
        S.lo = -S.lo
        K = dd_add(T, S)
        K = dd_div_d(K, sfact)
        o[i] = K.hi + K.lo
    return out


def comp_dot(const double[::1] a, const double[::1] b):
    """sum_j a_j b_j with exact products, accumulated in ascending magnitude."""
    cdef Py_ssize_t n = a.shape[0], i, j
    hi_arr = np.empty(n)
    lo_arr = np.empty(n)
    cdef double[::1] hi = hi_arr
    cdef double[::1] lo = lo_arr
    cdef dd p
    for i in range(n):
        p = two_prod(a[i], b[i])
        hi[i] = p.hi
        lo[i] = p.lo
    order = np.argsort(np.abs(hi_arr), kind="stable")
    cdef long[::1] idx = np.ascontiguousarray(order, dtype=np.int64)
    # Neumaier over the ordered high parts, plain sum of the low parts
    cdef double ssum = 0.0, comp = 0.0, t, v, esum = 0.0
    for i in range(n):
        v = hi[idx[i]]
        t = ssum + v
        if (ssum if ssum >= 0 else -ssum) >= (v if v >= 0 else -v):
            comp += (ssum - t) + v
        else:
            comp += (v - t) + ssum
        ssum = t
        esum += lo[idx[i]]
    return ssum + (comp + esum)
