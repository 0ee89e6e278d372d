"""Weight functions on [-1, 1], their three-term recurrences, and moments.

Supported weights are the ultraspherical family w(x) = (1 - x^2)^(lam - 1/2)
with lam >= 0, plus the named special cases legendre (lam = 1/2),
chebyshev1 (lam = 0) and chebyshev2 (lam = 1), which keep exact closed forms.

All recurrence coefficients and ordinary moments come from closed forms
(rational in lam and the index), never from numerical orthogonalization.
Truncated moments integral_t^1 w(x) (x - t)^s dx use the closed Legendre form
where available and otherwise a Gauss-Jacobi scheme that absorbs both
endpoint singular factors into the quadrature weight, checked by comparing
two resolutions.

Everything here is a pure function of immutable inputs and safe for
unrestricted concurrent use.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, UnsupportedWeightError

__all__ = [
    "WeightSpec", "RecurrenceTable", "legendre", "chebyshev1", "chebyshev2",
    "ultraspherical", "recurrence", "moment", "moments_upto",
    "chebyshev_moments", "truncated_moment", "truncated_moments",
]

_KINDS = ("legendre", "ultraspherical", "chebyshev1", "chebyshev2")


@dataclass(frozen=True)
class WeightSpec:
    """A weight w(x) = (1 - x^2)^(lam - 1/2) on [-1, 1].

    mass is integral of w over [-1, 1]; freud_M is the smallest M with
    w(x) <= M (1 - x^2)^(-1/2), which equals 1 for every lam >= 0 because
    (1 - x^2)^lam attains its maximum 1 at x = 0.
    """

    kind: str
    lam: float
    mass: float
    freud_M: float

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise UnsupportedWeightError(f"unknown weight kind {self.kind!r}")
        if self.lam < 0:
            raise UnsupportedWeightError("ultraspherical parameter must be >= 0")
        if not self.mass > 0:
            raise UnsupportedWeightError("weight mass must be positive")

    def describe(self) -> str:
        if self.kind == "ultraspherical":
            return f"ultraspherical:{self.lam:g}"
        return self.kind


def legendre() -> WeightSpec:
    """w(x) = 1."""
    return WeightSpec("legendre", 0.5, 2.0, 1.0)


def chebyshev1() -> WeightSpec:
    """w(x) = (1 - x^2)^(-1/2)."""
    return WeightSpec("chebyshev1", 0.0, math.pi, 1.0)


def chebyshev2() -> WeightSpec:
    """w(x) = (1 - x^2)^(1/2)."""
    return WeightSpec("chebyshev2", 1.0, math.pi / 2.0, 1.0)


def ultraspherical(lam: float) -> WeightSpec:
    """w(x) = (1 - x^2)^(lam - 1/2) for lam >= 0."""
    if lam < 0:
        raise UnsupportedWeightError("ultraspherical parameter must be >= 0")
    mass = math.sqrt(math.pi) * math.gamma(lam + 0.5) / math.gamma(lam + 1.0)
    return WeightSpec("ultraspherical", float(lam), mass, 1.0)


def weight_from_descriptor(text: str) -> WeightSpec:
    """Parse 'legendre', 'chebyshev1', 'chebyshev2' or 'ultraspherical:LAM'."""
    name, _, arg = text.partition(":")
    name = name.strip().lower()
    if name == "legendre":
        return legendre()
    if name == "chebyshev1":
        return chebyshev1()
    if name == "chebyshev2":
        return chebyshev2()
    if name == "ultraspherical":
        try:
            lam = float(arg)
        except ValueError:
            raise UnsupportedWeightError(f"bad ultraspherical parameter {arg!r}")
        return ultraspherical(lam)
    raise UnsupportedWeightError(f"unknown weight descriptor {text!r}")


@dataclass(frozen=True)
class RecurrenceTable:
    """Coefficients of the monic recurrence p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}.

    beta[0] stores the weight mass. For the symmetric weights handled here
    every alpha_k is exactly zero.
    """

    alpha: np.ndarray
    beta: np.ndarray

    def __post_init__(self):
        self.alpha.flags.writeable = False
        self.beta.flags.writeable = False

    def __len__(self):
        return len(self.alpha)


def recurrence(weight: WeightSpec, N: int) -> RecurrenceTable:
    """First N monic three-term recurrence coefficients of the weight.

    Closed forms: beta_0 = mass, beta_1 = 1/(2 lam + 2), and for k >= 2
    beta_k = k (k + 2 lam - 1) / (4 (k + lam)(k + lam - 1)).
    """
    if N < 1:
        raise DomainError("N must be >= 1")
    lam = weight.lam
    beta = np.zeros(N)
    beta[0] = weight.mass
    if N > 1:
        beta[1] = 1.0 / (2.0 * (lam + 1.0))
    for k in range(2, N):
        beta[k] = k * (k + 2.0 * lam - 1.0) / (4.0 * (k + lam) * (k + lam - 1.0))
    return RecurrenceTable(np.zeros(N), beta)


def _recurrence_longdouble(weight: WeightSpec, N: int) -> np.ndarray:
    """beta coefficients in extended precision (used by the Kronrod extension)."""
    lam = np.longdouble(weight.lam)
    beta = np.zeros(N, dtype=np.longdouble)
    beta[0] = np.longdouble(weight.mass)
    if N > 1:
        beta[1] = 1.0 / (2.0 * (lam + 1.0))
    k = np.arange(2, N, dtype=np.longdouble)
    if N > 2:
        beta[2:] = k * (k + 2.0 * lam - 1.0) / (4.0 * (k + lam) * (k + lam - 1.0))
    return beta


def moment(weight: WeightSpec, k: int) -> float:
    """Ordinary moment integral x^k w(x) dx; zero for odd k."""
    if k < 0:
        raise DomainError("moment degree must be >= 0")
    return float(moments_upto(weight, k)[k])


@lru_cache(maxsize=None)
def _moments_cached(weight: WeightSpec, K: int) -> np.ndarray:
    # m_k / m_{k-2} = (k - 1) / (k + 2 lam), from integration by parts
    m = np.zeros(K + 1)
    m[0] = weight.mass
    for k in range(2, K + 1, 2):
        m[k] = m[k - 2] * (k - 1.0) / (k + 2.0 * weight.lam)
    m.flags.writeable = False
    return m


def moments_upto(weight: WeightSpec, K: int) -> np.ndarray:
    """Moments 0..K as a read-only array."""
    return _moments_cached(weight, max(int(K), 0))


@lru_cache(maxsize=None)
def chebyshev_moments(weight: WeightSpec, K: int) -> np.ndarray:
    """Chebyshev-basis moments integral T_k(x) w(x) dx for k = 0..K."""
    k = np.arange(K + 1)
    if weight.kind == "legendre":
        m = np.zeros(K + 1)
        even = (k % 2 == 0)
        m[even] = 2.0 / (1.0 - k[even].astype(float) ** 2)
        m[0] = 2.0
    elif weight.kind == "chebyshev1":
        m = np.zeros(K + 1)
        m[0] = math.pi
    elif weight.kind == "chebyshev2":
        m = np.zeros(K + 1)
        m[0] = math.pi / 2.0
        if K >= 2:
            m[2] = -math.pi / 4.0
    else:
        # Gauss-Gegenbauer rule exact for degree <= K
        npt = K // 2 + 1
        x, w = _jacobi_rule(npt, weight.lam - 0.5, weight.lam - 0.5)
        V = np.polynomial.chebyshev.chebvander(x, K)
        m = V.T @ w
    m.flags.writeable = False
    return m


@lru_cache(maxsize=None)
def _jacobi_rule(n: int, a: float, b: float):
    from scipy.special import roots_jacobi

    x, w = roots_jacobi(n, a, b)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def _full_shifted_moment(weight: WeightSpec, s: int, t: np.ndarray) -> np.ndarray:
    """integral over all of [-1,1] of w(x) (x - t)^s dx via the binomial expansion.

    Only even-k moments are nonzero and every surviving term is >= 0 when
    t <= 0, so the branch that uses this sees no cancellation.
    """
    m = moments_upto(weight, s)
    out = np.zeros_like(t)
    for k in range(0, s + 1, 2):
        out += math.comb(s, k) * (-t) ** (s - k) * m[k]
    return out


_GJ_POINTS = 48
_GJ_POINTS_CHECK = 72


def _trunc_gj(weight: WeightSpec, s: int, t: np.ndarray, npts: int) -> np.ndarray:
    """Gauss-Jacobi evaluation of integral_t^1 w(x)(x-t)^s dx, vectorized in t."""
    lam = weight.lam
    e = lam - 0.5
    out = np.empty_like(t)

    pos = t >= 0.0
    if np.any(pos):
        tp = t[pos]
        u, gw = _jacobi_rule(npts, e, float(s))
        half = 0.5 * (1.0 - tp)
        x = tp[:, None] + half[:, None] * (u + 1.0)[None, :]
        g = (1.0 + x) ** e
        out[pos] = half ** (lam + s + 0.5) * (g @ gw)

    neg = ~pos
    if np.any(neg):
        tn = t[neg]
        u, gw = _jacobi_rule(npts, float(s), e)
        half = 0.5 * (1.0 + tn)
        x = -1.0 + half[:, None] * (u + 1.0)[None, :]
        g = (1.0 - x) ** e
        tail = half ** (lam + s + 0.5) * (g @ gw)
        sign = -1.0 if s % 2 else 1.0
        out[neg] = _full_shifted_moment(weight, s, tn) - sign * tail

    return out


def truncated_moments(weight: WeightSpec, s: int, t) -> np.ndarray:
    """Vectorized integral_t^1 w(x) (x - t)^s dx for each t in [-1, 1]."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if s < 0:
        raise DomainError("order s must be >= 0")
    if t.size and (t.min() < -1.0 or t.max() > 1.0):
        raise DomainError("t must lie in [-1, 1]")
    if weight.kind == "legendre":
        return (1.0 - t) ** (s + 1) / (s + 1.0)
    out = _trunc_gj(weight, s, t, _GJ_POINTS)
    check = _trunc_gj(weight, s, t, _GJ_POINTS_CHECK)
    scale = np.maximum(np.abs(check), weight.mass * 1e-3)
    bad = np.abs(out - check) > 1e-12 * scale
    if np.any(bad):  # pragma: no cover - the scheme converges geometrically
        raise ArithmeticError(
            f"truncated-moment resolutions disagree at t={t[bad][:4]} for {weight.describe()}")
    return check


def truncated_moment(weight: WeightSpec, s: int, t: float) -> float:
    """integral_t^1 w(x) (x - t)^s dx.

    Closed form (1 - t)^(s+1)/(s+1) for the Legendre weight; for the other
    weights a two-branch Gauss-Jacobi scheme whose quadrature weight absorbs
    the (1 -+ x)^(lam - 1/2) endpoint factors, evaluated at two resolutions
    that must agree to ~1e-13 relative.
    """
    return float(truncated_moments(weight, s, np.array([float(t)]))[0])
