"""Simulation of the limiting null distribution.

The statistic converges to the maximum of the squared centered Gaussian field
with the zonal covariance of :mod:`maxproj.kernels`.  Two simulation routes:

* ``simulate_kernel_max`` draws the field restricted to a random direction
  cover as a multivariate normal with the (singular) cover covariance matrix,
  factorized once by symmetric eigendecomposition with negative eigenvalues
  clipped at zero.  Works in any dimension.

* ``simulate_harmonic_max`` uses the finite spherical-harmonics expansion of
  the field: independent standard normal coefficients weighted by the square
  roots of the operator eigenvalues.  Implemented for d = 2 (Fourier basis)
  and d = 3 (real spherical harmonics up to order 6); higher dimensions fall
  back to the kernel route.

Both routes share a single cover per batch: the factorization/basis matrix is
built once and reused across replications, whose maxima are then iid.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special as sps

from ._errors import InputError, NumericalError
from .geometry import surface_area, uniform_points
from .kernels import ZonalKernel
from .legendre import harmonic_dim
from .rng import NS_LIMIT, stream

MAX_HARMONIC_BETA = 6


def default_cover_size(d):
    """Cover sizes mirroring the simulation study (1000 low-d, 5000 high-d)."""
    return 1000 if d <= 3 else 5000


def default_replications(d):
    return 100_000 if d <= 3 else 10_000


# ---------------------------------------------------------------------------
# harmonic bases for d in {2, 3}


@dataclass(frozen=True)
class HarmonicBasis:
    """Real spherical harmonics, orthonormal w.r.t. the surface measure.

    ``orders[i]`` gives the order of column i of ``evaluate``; the addition
    identity sum_j phi_kj(u) phi_kj(v) = nu_d(k)/|S^{d-1}| P_k(u.v) holds per
    order.
    """

    d: int
    orders: tuple

    def __post_init__(self):
        if self.d not in (2, 3):
            raise InputError("harmonic bases implemented for d in {2, 3} only")
        if any(k < 0 for k in self.orders):
            raise InputError("orders must be >= 0")

    @property
    def column_orders(self):
        cols = []
        for k in self.orders:
            cols.extend([k] * harmonic_dim(self.d, k))
        return tuple(cols)

    def evaluate(self, points):
        """Basis matrix of shape (len(points), total dimension)."""
        pts = np.asarray(points, dtype=float)
        blocks = [self._block(k, pts) for k in self.orders]
        return np.hstack(blocks) if blocks else np.empty((pts.shape[0], 0))

    def _block(self, k, pts):
        area = surface_area(self.d)
        if self.d == 2:
            if k == 0:
                return np.full((pts.shape[0], 1), 1.0 / math.sqrt(area))
            phi = np.arctan2(pts[:, 1], pts[:, 0])
            scale = 1.0 / math.sqrt(math.pi)
            return np.column_stack([scale * np.cos(k * phi), scale * np.sin(k * phi)])
        return _real_sph_harm_block(k, pts)


def _real_sph_harm_block(l, pts):
    """Real spherical harmonics of order l on S^2, orthonormal w.r.t. sigma."""
    ct = np.clip(pts[:, 2], -1.0, 1.0)
    phi = np.arctan2(pts[:, 1], pts[:, 0])
    cols = []
    for m in range(-l, l + 1):
        am = abs(m)
        norm = math.sqrt(
            (2 * l + 1)
            / (4.0 * math.pi)
            * math.factorial(l - am)
            / math.factorial(l + am)
        )
        p = sps.lpmv(am, l, ct)
        if m == 0:
            cols.append(norm * p)
        elif m > 0:
            cols.append(math.sqrt(2.0) * norm * p * np.cos(am * phi))
        else:
            cols.append(math.sqrt(2.0) * norm * p * np.sin(am * phi))
    return np.column_stack(cols)


def field_basis(beta, d):
    """Basis restricted to the active orders of the order-beta field."""
    if beta > MAX_HARMONIC_BETA:
        raise InputError(f"harmonic route implemented for beta <= {MAX_HARMONIC_BETA}")
    orders = tuple(k for k in range(1, beta + 1) if (beta - k) % 2 == 0)
    return HarmonicBasis(d=d, orders=orders)


# ---------------------------------------------------------------------------
# simulation routes


def _batched_max_square(transfer, replications, rng, chunk=4096):
    """Max of squared field values for N(0, I) coefficient draws.

    ``transfer`` has shape (m, r): field values = transfer @ coefficients.
    """
    m, r = transfer.shape
    out = np.empty(replications)
    done = 0
    while done < replications:
        take = min(chunk, replications - done)
        coeff = rng.standard_normal((r, take))
        z = transfer @ coeff
        out[done : done + take] = np.max(z * z, axis=0)
        done += take
    return out


def simulate_kernel_max(beta, d, m=None, replications=None, seed=0):
    """Maxima of the squared field over a cover, via the covariance route."""
    m = default_cover_size(d) if m is None else int(m)
    replications = default_replications(d) if replications is None else int(replications)
    if m < d:
        raise InputError(f"cover size {m} must be at least d = {d}")
    cover = uniform_points(d, m, stream(seed, NS_LIMIT, 0))
    kernel = ZonalKernel(beta, d)
    sigma = kernel.gram(cover)
    eigvals, eigvecs = np.linalg.eigh(sigma)
    if not np.all(np.isfinite(eigvals)):
        raise NumericalError("eigendecomposition of the cover covariance failed")
    # the matrix is PSD up to rounding: clip, keep the numerically nonzero part
    clipped = np.clip(eigvals, 0.0, None)
    keep = clipped > clipped[-1] * 1e-12
    transfer = eigvecs[:, keep] * np.sqrt(clipped[keep])
    rng = stream(seed, NS_LIMIT, 1)
    return _batched_max_square(transfer, replications, rng)


def simulate_harmonic_max(beta, d, m=None, replications=None, seed=0):
    """Maxima of the squared field via its spherical-harmonics expansion."""
    if d not in (2, 3):
        raise InputError("harmonic route implemented for d in {2, 3}; use the kernel route")
    m = default_cover_size(d) if m is None else int(m)
    replications = default_replications(d) if replications is None else int(replications)
    basis = field_basis(beta, d)
    cover = uniform_points(d, m, stream(seed, NS_LIMIT, 0))
    phi = basis.evaluate(cover)
    spec = ZonalKernel(beta, d).spectrum
    scale = np.array(
        [math.sqrt(surface_area(d) * spec.eigenvalue(k)) for k in basis.column_orders]
    )
    transfer = phi * scale[None, :]
    rng = stream(seed, NS_LIMIT, 1)
    return _batched_max_square(transfer, replications, rng)


# ---------------------------------------------------------------------------
# quantiles


@dataclass(frozen=True)
class LimitQuantile:
    beta: int
    d: int
    alpha: float
    method: str
    m: int
    replications: int
    seed: int
    value: float
    mc_stderr: float
    maxima: np.ndarray = field(repr=False, default=None)


def quantile_stderr(values, alpha, bootstrap=200, seed=0):
    """Bootstrap standard error of an empirical quantile."""
    values = np.asarray(values)
    rng = stream(seed, NS_LIMIT, 2)
    n = values.shape[0]
    reps = np.empty(bootstrap)
    for b in range(bootstrap):
        idx = rng.integers(0, n, size=n)
        reps[b] = np.quantile(values[idx], alpha)
    return float(reps.std(ddof=1))


def limit_quantile(beta, d, alpha=0.95, method="kernel", m=None, replications=None, seed=0):
    """Empirical alpha-quantile of the simulated limit maxima."""
    if not 0.0 < alpha < 1.0:
        raise InputError("alpha must lie in (0, 1)")
    if method == "kernel":
        maxima = simulate_kernel_max(beta, d, m=m, replications=replications, seed=seed)
    elif method == "harmonic":
        maxima = simulate_harmonic_max(beta, d, m=m, replications=replications, seed=seed)
    else:
        raise InputError(f"unknown method {method!r}; expected 'kernel' or 'harmonic'")
    value = float(np.quantile(maxima, alpha))
    return LimitQuantile(
        beta=beta,
        d=d,
        alpha=alpha,
        method=method,
        m=default_cover_size(d) if m is None else int(m),
        replications=maxima.shape[0],
        seed=int(seed),
        value=value,
        mc_stderr=quantile_stderr(maxima, alpha, seed=seed),
        maxima=maxima,
    )
