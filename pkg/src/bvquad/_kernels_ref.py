"""Pure-NumPy fallback for the hot kernels.

Same contract as the compiled module bvquad._fastkernels: Peano kernel
values are computed in double-double arithmetic (Dekker splitting, no FMA
required) so that the returned doubles are correctly rounded even where the
kernel is many orders of magnitude smaller than the individual terms.

The node sum sum_{x_j > t} a_j (x_j - t)^s is evaluated through suffix sums
M_k = sum_{j >= i} a_j x_j^k and the binomial identity
(x - t)^s = sum_k C(s,k) (-t)^(s-k) x^k, which makes a single evaluation
O(s) instead of O(n) once the (n+1) x (s+1) suffix table is built.
"""
from __future__ import annotations

import math

import numpy as np

BACKEND = "python"

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    ca = _SPLIT * a
    ah = ca - (ca - a)
    al = a - ah
    cb = _SPLIT * b
    bh = cb - (cb - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _renorm(hi, lo):
    s = hi + lo
    return s, lo - (s - hi)


def _dd_add(xh, xl, yh, yl):
    sh, se = _two_sum(xh, yh)
    return _renorm(sh, se + xl + yl)


def _dd_mul(xh, xl, yh, yl):
    ph, pe = _two_prod(xh, yh)
    return _renorm(ph, pe + xh * yl + xl * yh)


def _dd_mul_d(xh, xl, y):
    ph, pe = _two_prod(xh, y)
    return _renorm(ph, pe + xl * y)


def _dd_div_d(xh, xl, d):
    q0 = (xh + xl) / d
    ph, pe = _two_prod(q0, d)
    r = ((xh - ph) - pe) + xl
    return _renorm(q0, r / d)


def suffix_tables(x, w, s):
    """Double-double suffix sums M[i, k] = sum_{j >= i} w_j x_j^k.

    Returns an array of shape (n + 1, s + 1, 2); [..., 0] holds the high and
    [..., 1] the low component. Row n is zero.
    """
    x = np.asarray(x, dtype=float)
    w = np.asarray(w, dtype=float)
    n = x.shape[0]
    M = np.zeros((n + 1, s + 1, 2))
    hi = np.zeros(s + 1)
    lo = np.zeros(s + 1)
    for j in range(n - 1, -1, -1):
        xj = x[j]
        wj = w[j]
        ph, pl = 1.0, 0.0  # x_j^k as dd
        for k in range(s + 1):
            th, tl = _dd_mul_d(ph, pl, wj)
            hi[k], lo[k] = _dd_add(hi[k], lo[k], th, tl)
            if k < s:
                ph, pl = _dd_mul_d(ph, pl, xj)
        M[j, :, 0] = hi
        M[j, :, 1] = lo
    return M


def _node_sum_dd(x, M, s, t):
    """Suffix-expansion node sum as a dd pair of arrays."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    idx = np.searchsorted(x, t, side="right")
    Mh = M[idx, :, 0]
    Ml = M[idx, :, 1]
    # powers of (-t) as dd, highest first
    ph = np.ones_like(t)
    pl = np.zeros_like(t)
    Sh = np.zeros_like(t)
    Sl = np.zeros_like(t)
    for k in range(s, -1, -1):
        c = float(math.comb(s, k))
        th, tl = _dd_mul(ph, pl, Mh[:, k], Ml[:, k])
        th, tl = _dd_mul_d(th, tl, c)
        Sh, Sl = _dd_add(Sh, Sl, th, tl)
        if k > 0:
            ph, pl = _dd_mul_d(ph, pl, -t)
    return Sh, Sl


def eval_node_sums(x, w, s, M, t):
    """sum_{x_j > t_i} w_j (x_j - t_i)^s for each t_i, correctly rounded."""
    Sh, Sl = _node_sum_dd(x, M, s, np.asarray(t, dtype=float))
    return Sh + Sl


def eval_kernel_legendre(x, w, s, M, t):
    """Peano kernel for w = 1: ((1-t)^(s+1)/(s+1) - node_sum) / s!."""
    t = np.asarray(t, dtype=float)
    Sh, Sl = _node_sum_dd(x, M, s, t)
    uh, ul = _two_sum(np.ones_like(t), -t)
    Th, Tl = uh.copy(), ul.copy()
    for _ in range(s):
        Th, Tl = _dd_mul(Th, Tl, uh, ul)
    Th, Tl = _dd_div_d(Th, Tl, float(s + 1))
    Kh, Kl = _dd_add(Th, Tl, -Sh, -Sl)
    Kh, Kl = _dd_div_d(Kh, Kl, float(math.factorial(s)))
    return Kh + Kl


def comp_dot(a, b):
    """sum_j a_j b_j with exact products, accumulated in ascending magnitude."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    hi, lo = _two_prod(a, b)
    order = np.argsort(np.abs(hi), kind="stable")
    return math.fsum(np.concatenate([hi[order], lo]))
