"""Zonal covariance kernels of the projection empirical process.

Under uniformity, the centered process of beta-th projection moments has a
Gaussian limit whose covariance between directions b and c depends only on
t = b.c (a zonal kernel).  This module evaluates that kernel through its
Legendre/spherical-harmonics spectral form, exposes the eigenvalue spectrum of
the associated integral operator, the deterministic shift picked up under
local (1 + h/sqrt(n)) alternatives, and a surface-integral identity checker
used as a validation oracle.

The hand-written closed forms of the kernel for beta = 1..6 deliberately do
not live here: they are test oracles, while the single spectral code path
below covers every beta.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from ._errors import InputError
from .geometry import as_unit_vector, surface_area
from .legendre import (
    harmonic_dim,
    legendre_eval,
    monomial_coefficients,
    power_expansion,
    psi,
)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of the kernel's integral operator, order k = 0..beta.

    ``eigenvalues[k]`` is (c_k / nu_d(k))^2 for 0 < k <= beta and 0 for k = 0;
    entries with k + beta odd vanish.  ``total_variance`` is the on-diagonal
    kernel value rho(1) = sum_k lambda_k nu_d(k).
    """

    beta: int
    d: int
    eigenvalues: tuple  # Fractions

    def eigenvalue(self, k):
        return float(self.eigenvalues[k]) if 0 <= k <= self.beta else 0.0

    @property
    def multiplicities(self):
        return tuple(harmonic_dim(self.d, k) for k in range(self.beta + 1))

    @property
    def total_variance(self):
        exact = sum(
            lam * harmonic_dim(self.d, k) for k, lam in enumerate(self.eigenvalues)
        )
        return float(exact)

    def entries(self):
        """(k, lambda_k, nu_d(k)) triples for k = 0..beta."""
        return [
            (k, float(lam), harmonic_dim(self.d, k))
            for k, lam in enumerate(self.eigenvalues)
        ]


@dataclass(frozen=True)
class ZonalKernel:
    """The covariance kernel pair (beta, d) with spectral evaluators."""

    beta: int
    d: int

    def __post_init__(self):
        if self.beta < 1:
            raise InputError(f"beta must be >= 1, got {self.beta}")
        if self.d < 2:
            raise InputError(f"dimension must be >= 2, got {self.d}")

    @cached_property
    def expansion(self):
        return power_expansion(self.d, self.beta)

    @cached_property
    def _eta_weights(self):
        # weight of P_j in eta: c_j^2 / nu_d(j)
        return np.array(
            [
                float(c * c / harmonic_dim(self.d, j))
                for j, c in enumerate(self.expansion.coeffs)
            ]
        )

    @cached_property
    def _rho_monomial(self):
        # dense monomial coefficients of rho as a polynomial in t
        coeffs = np.zeros(self.beta + 1)
        for j, w in enumerate(self._eta_weights):
            if w:
                mono = monomial_coefficients(self.d, j)
                for i, a in enumerate(mono):
                    coeffs[i] += w * float(a)
        coeffs[0] -= psi(self.d, self.beta) ** 2
        return coeffs

    def eta(self, t):
        """Raw product moment E (b.U)^beta (c.U)^beta at t = b.c."""
        t = np.asarray(t, dtype=float)
        if np.any(np.abs(t) > 1.0 + 1e-12):
            raise InputError("argument outside [-1, 1]")
        out = np.zeros_like(t, dtype=float)
        for j, w in enumerate(self._eta_weights):
            if w:
                out = out + w * legendre_eval(self.d, j, t)
        return out if out.ndim else float(out)

    def rho(self, t):
        """Covariance kernel eta(t) - psi^2."""
        return self.eta(t) - psi(self.d, self.beta) ** 2

    def gram(self, points):
        """Covariance matrix [rho(b_i . b_j)] for an (m, d) array of directions."""
        pts = np.asarray(points, dtype=float)
        s = np.clip(pts @ pts.T, -1.0, 1.0)
        coeffs = self._rho_monomial
        out = np.full_like(s, coeffs[-1])
        for a in coeffs[-2::-1]:
            out = out * s + a
        return out

    @cached_property
    def spectrum(self):
        lams = []
        for k in range(self.beta + 1):
            if k == 0:
                lams.append(Fraction(0))
            else:
                ck = self.expansion.coeff(k)
                lams.append((ck / harmonic_dim(self.d, k)) ** 2)
        return Spectrum(beta=self.beta, d=self.d, eigenvalues=tuple(lams))


def eta(beta, d, t):
    return ZonalKernel(beta, d).eta(t)


def rho(beta, d, t):
    return ZonalKernel(beta, d).rho(t)


def spectrum(beta, d):
    return ZonalKernel(beta, d).spectrum


def shift_amplitude_exact(beta, d, m):
    """Exact shift coefficient c_{m,d}(beta) / nu_d(m).

    Zero when m > beta or beta + m is odd: those perturbation orders are
    invisible to the order-beta statistic.
    """
    if m < 0:
        raise InputError(f"order must be >= 0, got {m}")
    if m > beta or (beta + m) % 2 == 1:
        return Fraction(0)
    return power_expansion(d, beta).coeff(m) / harmonic_dim(d, m)


@dataclass(frozen=True)
class ShiftFunction:
    """Limit shift b -> amp * P_m(theta.b) under a local order-m perturbation."""

    beta: int
    d: int
    m: int
    theta: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "theta", as_unit_vector(self.theta))

    @cached_property
    def amplitude(self):
        return float(shift_amplitude_exact(self.beta, self.d, self.m))

    def value(self, b):
        b = np.asarray(b, dtype=float)
        if self.amplitude == 0.0:
            return np.zeros(b.shape[:-1]) if b.ndim > 1 else 0.0
        t = np.clip(b @ self.theta, -1.0, 1.0)
        return self.amplitude * legendre_eval(self.d, self.m, t)


def shift_value(beta, d, m, theta, b):
    """Convenience wrapper around :class:`ShiftFunction`."""
    return ShiftFunction(beta=beta, d=d, m=m, theta=theta).value(b)


# ---------------------------------------------------------------------------
# surface quadrature (d = 2, 3) and the projection-integral identity oracle


def sphere_quadrature(d, n_polar=96, n_azimuth=192):
    """Product quadrature nodes/weights for integrals over S^{d-1}, d in {2, 3}.

    Exact (to rounding) for polynomial integrands of the degrees used here.
    Returns (points, weights) with sum(w_i f(x_i)) ~= integral f d(sigma).
    """
    if d == 2:
        phi = 2.0 * math.pi * np.arange(n_azimuth) / n_azimuth
        pts = np.column_stack([np.cos(phi), np.sin(phi)])
        w = np.full(n_azimuth, 2.0 * math.pi / n_azimuth)
        return pts, w
    if d == 3:
        t, wt = np.polynomial.legendre.leggauss(n_polar)
        phi = 2.0 * math.pi * np.arange(n_azimuth) / n_azimuth
        r = np.sqrt(1.0 - t**2)
        x = r[:, None] * np.cos(phi)[None, :]
        y = r[:, None] * np.sin(phi)[None, :]
        z = np.broadcast_to(t[:, None], x.shape)
        pts = np.column_stack([x.ravel(), y.ravel(), z.ravel()])
        w = np.repeat(wt, n_azimuth) * (2.0 * math.pi / n_azimuth)
        return pts, w
    raise InputError("surface quadrature implemented only for d in {2, 3}")


def funk_hecke_check(d, k, profile, u, theta=None):
    """Two routes through the projection-integral identity.

    lhs: the surface integral of profile(u.x) * P_k(theta.x) by product
    quadrature; rhs: |S^{d-2}| <P_k, profile> P_k(u.theta).  Used only as a
    validation oracle, hence the restriction to d in {2, 3} and k <= 8 where
    the quadrature is cheap and accurate.
    """
    if d not in (2, 3):
        raise InputError("identity check restricted to d in {2, 3}")
    if k > 8:
        raise InputError("identity check restricted to orders k <= 8")
    from .legendre import weighted_inner

    u = as_unit_vector(u)
    theta = np.eye(d)[-1] if theta is None else as_unit_vector(theta)
    pts, w = sphere_quadrature(d)
    pu = np.clip(pts @ u, -1.0, 1.0)
    pt = np.clip(pts @ theta, -1.0, 1.0)
    lhs = float(np.sum(w * profile(pu) * legendre_eval(d, k, pt)))
    inner = weighted_inner(lambda t: legendre_eval(d, k, t), profile, d, tol=1e-12)
    rhs = surface_area(d - 1) * inner * float(legendre_eval(d, k, float(u @ theta)))
    return lhs, rhs
