"""Random generation for the alternative distributions of the power study.

All alternatives are specified by small frozen dataclasses; :func:`sample`
draws exact iid variates and :func:`density` evaluates the density with
respect to the surface measure.

The rotationally symmetric families (von Mises-Fisher, Watson, the
Legendre-profile class) share one exact sampler: the cosine t = theta . X is
drawn by rejection, proposing from the *uniform* projection law
((t+1)/2 ~ Beta((d-1)/2, (d-1)/2)) and accepting with probability
w(t)/max w, where w is the family's angular profile.  The proposal already
carries the (1-t^2)^{(d-3)/2} geometry factor, so the envelope constant is
simply max w: exp(kappa) for exp(kappa t) and exp(kappa t^2), and 1 + kappa
for the profile 1 + kappa P_m.  The remaining tangent direction is uniform on
the equator subsphere.

The Bingham family (density proportional to exp(x' A x)) is not rotationally
symmetric and uses rejection from an angular central Gaussian proposal with a
one-dimensional tuning constant; a Metropolis fallback (10x thinning) covers
pathological acceptance rates.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize, special as sps

from ._errors import InputError, NumericalError
from .geometry import as_unit_vector, surface_area, uniform_points
from .legendre import legendre_eval
from .rng import as_generator
from .special import vmf_norm_const, watson_norm_const

_MIN_ACCEPT = 1e-4
_ACCEPT_WINDOW = 200_000


@dataclass(frozen=True)
class Uniform:
    d: int


@dataclass(frozen=True)
class VonMisesFisher:
    theta: np.ndarray
    kappa: float

    def __post_init__(self):
        object.__setattr__(self, "theta", as_unit_vector(self.theta))
        if self.kappa < 0:
            raise InputError("concentration must be >= 0")

    @property
    def d(self):
        return self.theta.shape[0]


@dataclass(frozen=True)
class Watson:
    theta: np.ndarray
    kappa: float

    def __post_init__(self):
        object.__setattr__(self, "theta", as_unit_vector(self.theta))
        if self.kappa < 0:
            raise InputError("negative Watson concentration is out of scope")

    @property
    def d(self):
        return self.theta.shape[0]


@dataclass(frozen=True)
class LegendreProfile:
    """Density (1 + kappa P_m(theta . x)) / |S^{d-1}|, kappa in [0, 1]."""

    m: int
    theta: np.ndarray
    kappa: float

    def __post_init__(self):
        object.__setattr__(self, "theta", as_unit_vector(self.theta))
        if self.m < 1:
            raise InputError("profile order must be >= 1")
        if not 0.0 <= self.kappa <= 1.0:
            raise InputError("kappa must lie in [0, 1] for a non-negative density")

    @property
    def d(self):
        return self.theta.shape[0]


@dataclass(frozen=True)
class Bingham:
    """Density exp(x' A x) / c(d, A) with symmetric A."""

    A: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise InputError("A must be a square matrix")
        if np.max(np.abs(A - A.T)) > 1e-12:
            raise InputError("A must be symmetric")
        object.__setattr__(self, "A", (A + A.T) / 2.0)

    @property
    def d(self):
        return self.A.shape[0]


@dataclass(frozen=True)
class MixtureVMF:
    """Finite mixture of von Mises-Fisher components."""

    weights: tuple
    components: tuple  # VonMisesFisher instances

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        if len(w) != len(self.components) or not self.components:
            raise InputError("need one weight per component")
        if any(x <= 0 for x in w) or abs(sum(w) - 1.0) > 1e-12:
            raise InputError("weights must be positive and sum to 1")
        ds = {c.d for c in self.components}
        if len(ds) != 1:
            raise InputError("components must share the dimension")
        object.__setattr__(self, "weights", w)

    @property
    def d(self):
        return self.components[0].d


def two_center_mix(p, theta1, theta2, kappa1, kappa2):
    """Draw from vMF(theta1, kappa1) w.p. p, else vMF(theta2, kappa2)."""
    if not 0.0 < p < 1.0:
        raise InputError("mixing weight must lie in (0, 1)")
    return MixtureVMF(
        weights=(p, 1.0 - p),
        components=(VonMisesFisher(theta1, kappa1), VonMisesFisher(theta2, kappa2)),
    )


def three_center_mix(p, theta1, theta2, theta3, kappa1, kappa2, kappa3):
    """Weights (p, p, 1-2p) over three vMF components; p in (0, 1/2)."""
    if not 0.0 < p < 0.5:
        raise InputError("mixing weight must lie in (0, 1/2)")
    return MixtureVMF(
        weights=(p, p, 1.0 - 2.0 * p),
        components=(
            VonMisesFisher(theta1, kappa1),
            VonMisesFisher(theta2, kappa2),
            VonMisesFisher(theta3, kappa3),
        ),
    )


# ---------------------------------------------------------------------------
# sampling


def _cosine_profile(spec):
    """(w(t) vectorized, max w) for the rotationally symmetric families."""
    if isinstance(spec, VonMisesFisher):
        k = spec.kappa
        return (lambda t: np.exp(k * (t - 1.0))), 1.0  # pre-divided by e^kappa
    if isinstance(spec, Watson):
        k = spec.kappa
        return (lambda t: np.exp(k * (t * t - 1.0))), 1.0
    if isinstance(spec, LegendreProfile):
        k, m, d = spec.kappa, spec.m, spec.d
        return (lambda t: (1.0 + k * legendre_eval(d, m, t)) / (1.0 + k)), 1.0
    raise InputError(f"not a rotationally symmetric family: {spec}")


def _sample_cosines(spec, n, rng):
    ratio, _ = _cosine_profile(spec)
    d = spec.d
    a = (d - 1) / 2.0
    out = np.empty(n)
    filled = proposed = accepted = 0
    while filled < n:
        block = max(2048, 2 * (n - filled))
        t = 2.0 * rng.beta(a, a, size=block) - 1.0
        keep = rng.random(block) <= ratio(t)
        got = t[keep]
        take = min(got.size, n - filled)
        out[filled : filled + take] = got[:take]
        filled += take
        proposed += block
        accepted += got.size
        if proposed >= _ACCEPT_WINDOW and accepted < _MIN_ACCEPT * proposed:
            raise NumericalError(
                f"cosine rejection acceptance {accepted/proposed:.2e} below {_MIN_ACCEPT:g}"
            )
    return out


def _equator_directions(theta, n, rng):
    """Uniform directions on the subsphere orthogonal to theta."""
    d = theta.shape[0]
    z = rng.standard_normal((n, d))
    z -= np.outer(z @ theta, theta)
    norms = np.linalg.norm(z, axis=1)
    while (redo := norms < 1e-12).any():
        fresh = rng.standard_normal((int(redo.sum()), d))
        fresh -= np.outer(fresh @ theta, theta)
        z[redo] = fresh
        norms = np.linalg.norm(z, axis=1)
    return z / norms[:, None]


def _sample_symmetric(spec, n, rng):
    t = _sample_cosines(spec, n, rng)
    xi = _equator_directions(spec.theta, n, rng)
    return t[:, None] * spec.theta[None, :] + np.sqrt(1.0 - t * t)[:, None] * xi


def _bingham_tuning(shifted_eigs, d):
    """Proposal constant b in (0, d] solving sum 1/(b + 2 a_i) = 1."""

    def f(b):
        return float(np.sum(1.0 / (b + 2.0 * shifted_eigs)) - 1.0)

    hi = float(d)
    if abs(f(hi)) < 1e-13:
        return hi
    return float(optimize.brentq(f, 1e-12, hi))


def _sample_bingham(spec, n, rng):
    d = spec.d
    eigs, vecs = np.linalg.eigh(spec.A)
    a = eigs.max() - eigs  # >= 0, exp(x'Ax) ∝ exp(-x' diag(a) x) in eigencoords
    b = _bingham_tuning(a, d)
    log_m = -(d - b) / 2.0 + (d / 2.0) * math.log(d / b)
    prop_sd = np.sqrt(1.0 / (1.0 + 2.0 * a / b))
    out = np.empty((n, d))
    filled = proposed = accepted = 0
    while filled < n:
        block = max(2048, 2 * (n - filled))
        y = rng.standard_normal((block, d)) * prop_sd
        x = y / np.linalg.norm(y, axis=1)[:, None]
        s = (x * x) @ a
        log_ratio = -s + (d / 2.0) * np.log1p(2.0 * s / b) - log_m
        keep = np.log(rng.random(block)) <= log_ratio
        got = x[keep]
        take = min(got.shape[0], n - filled)
        out[filled : filled + take] = got[:take]
        filled += take
        proposed += block
        accepted += got.shape[0]
        if proposed >= _ACCEPT_WINDOW and accepted < 1e-3 * proposed:
            warnings.warn(
                "Bingham rejection acceptance below 1e-3; falling back to Metropolis",
                RuntimeWarning,
            )
            return _bingham_metropolis(spec, n, rng)
    return out @ vecs.T


def _bingham_metropolis(spec, n, rng, thin=10):
    d = spec.d
    x = uniform_points(d, 1, rng)[0]
    logf = float(x @ spec.A @ x)
    out = np.empty((n, d))
    for i in range(n * thin):
        prop = x + 0.5 * rng.standard_normal(d)
        prop /= np.linalg.norm(prop)
        logf_prop = float(prop @ spec.A @ prop)
        if math.log(rng.random()) <= logf_prop - logf:
            x, logf = prop, logf_prop
        if (i + 1) % thin == 0:
            out[(i + 1) // thin - 1] = x
    return out


def sample(spec, n, rng):
    """Draw ``n`` iid variates from ``spec``; deterministic given ``rng``.

    Returns an ``(n, d)`` array of unit rows.
    """
    if n < 1:
        raise InputError(f"need n >= 1 draws, got {n}")
    rng = as_generator(rng)
    if isinstance(spec, Uniform):
        return uniform_points(spec.d, n, rng)
    if isinstance(spec, (VonMisesFisher, Watson, LegendreProfile)):
        if isinstance(spec, (VonMisesFisher, Watson)) and spec.kappa == 0.0:
            return uniform_points(spec.d, n, rng)
        if isinstance(spec, LegendreProfile) and spec.kappa == 0.0:
            return uniform_points(spec.d, n, rng)
        return _sample_symmetric(spec, n, rng)
    if isinstance(spec, Bingham):
        return _sample_bingham(spec, n, rng)
    if isinstance(spec, MixtureVMF):
        u = rng.random(n)
        edges = np.cumsum(spec.weights)
        labels = np.searchsorted(edges, u, side="right")
        labels = np.minimum(labels, len(spec.components) - 1)
        out = np.empty((n, spec.d))
        for i, comp in enumerate(spec.components):
            idx = np.flatnonzero(labels == i)
            if idx.size:
                out[idx] = sample(comp, idx.size, rng)
        return out
    raise InputError(f"unknown alternative spec: {spec!r}")


# ---------------------------------------------------------------------------
# densities


def _bingham_log_const(spec, mc_draws=200_000):
    """log c(d, A); quadrature for d <= 3, Monte Carlo (with SE) above.

    Returns (log_const, stderr_of_const_relative).
    """
    d = spec.d
    eigs = np.linalg.eigvalsh(spec.A)
    if d == 2:
        l1, l2 = eigs

        def f(phi):
            c = math.cos(phi)
            return math.exp(l1 * c * c + l2 * (1.0 - c * c))

        val, _ = integrate.quad(f, 0.0, 2.0 * math.pi, limit=200)
        return math.log(val), 0.0
    if d == 3:
        l1, l2, l3 = eigs

        def f(t):
            r2 = 1.0 - t * t
            mean = 0.5 * (l1 + l2) * r2
            half_diff = 0.5 * (l1 - l2) * r2
            # i0e avoids overflow: I0(x) = i0e(x) e^{|x|}
            return 2.0 * math.pi * math.exp(l3 * t * t + mean + abs(half_diff)) * sps.i0e(half_diff)

        val, _ = integrate.quad(f, -1.0, 1.0, limit=200)
        return math.log(val), 0.0
    rng = as_generator(0xB1A6)
    x = uniform_points(d, mc_draws, rng)
    vals = np.exp(np.einsum("ij,jk,ik->i", x, spec.A, x))
    mean = float(vals.mean())
    se = float(vals.std(ddof=1) / math.sqrt(mc_draws))
    return math.log(mean * surface_area(d)), se / mean


def density(spec, x):
    """Density of ``spec`` w.r.t. the surface measure, at one point or rows."""
    pts = np.atleast_2d(np.asarray(x, dtype=float))
    scalar = np.asarray(x).ndim == 1
    d = spec.d
    if pts.shape[1] != d:
        raise InputError(f"points have dimension {pts.shape[1]}, spec has {d}")
    area = surface_area(d)
    if isinstance(spec, Uniform):
        out = np.full(pts.shape[0], 1.0 / area)
    elif isinstance(spec, VonMisesFisher):
        out = np.exp(spec.kappa * (pts @ spec.theta)) / vmf_norm_const(d, spec.kappa)
    elif isinstance(spec, Watson):
        out = np.exp(spec.kappa * (pts @ spec.theta) ** 2) / watson_norm_const(d, spec.kappa)
    elif isinstance(spec, LegendreProfile):
        t = np.clip(pts @ spec.theta, -1.0, 1.0)
        out = (1.0 + spec.kappa * legendre_eval(d, spec.m, t)) / area
        out = np.maximum(out, 0.0)
    elif isinstance(spec, Bingham):
        log_c, _ = _bingham_log_const(spec)
        out = np.exp(np.einsum("ij,jk,ik->i", pts, spec.A, pts) - log_c)
    elif isinstance(spec, MixtureVMF):
        out = np.zeros(pts.shape[0])
        for w, comp in zip(spec.weights, spec.components):
            out += w * density(comp, pts)
    else:
        raise InputError(f"unknown alternative spec: {spec!r}")
    return float(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# study presets and CLI spec strings


def _theta1(d):
    v = np.zeros(d)
    v[0] = 1.0
    return v


def _theta2(d):
    return as_unit_vector(-np.ones(d))


def _theta3(d):
    v = np.ones(d)
    v[0] = -1.0
    return as_unit_vector(v)


def _a1(d):
    return np.diag(np.arange(1.0, d + 1.0))


def _a2(d):
    out = np.zeros((d, d))
    out[0, 0] = -float(d)
    out[-1, -1] = float(d)
    return out


def preset(name, d, **params):
    """Named alternatives of the simulation study.

    vmf1(kappa); mixvmf1(p)/mixvmf2(p) with antipodal centers;
    mixvmf3(p)/mixvmf4(p) with three centers; bing1(kappa)/bing2(kappa);
    lp(m, kappa); uniform.
    """
    name = name.lower()
    if name == "uniform":
        return Uniform(d)
    if name == "vmf1":
        return VonMisesFisher(_theta1(d), params["kappa"])
    if name == "mixvmf1":
        return two_center_mix(
            params["p"], -_theta1(d), _theta1(d), params.get("k1", 1.0), params.get("k2", 1.0)
        )
    if name == "mixvmf2":
        return two_center_mix(
            params["p"], -_theta1(d), _theta1(d), params.get("k1", 1.0), params.get("k2", 4.0)
        )
    if name == "mixvmf3":
        return three_center_mix(
            params["p"], _theta2(d), _theta3(d), _theta1(d),
            params.get("k1", 2.0), params.get("k2", 3.0), params.get("k3", 3.0),
        )
    if name == "mixvmf4":
        return three_center_mix(
            params["p"], _theta2(d), _theta3(d), _theta1(d),
            params.get("k1", 2.0), params.get("k2", 3.0), params.get("k3", 4.0),
        )
    if name == "bing1":
        return Bingham(params["kappa"] * _a1(d))
    if name == "bing2":
        return Bingham(params["kappa"] * _a2(d))
    if name == "lp":
        return LegendreProfile(int(params["m"]), _theta1(d), params["kappa"])
    raise InputError(f"unknown alternative preset {name!r}")


def parse_alternative(text, d):
    """Parse shorthand like ``vmf:kappa=1`` or ``lp:m=3,kappa=1``.

    The leading token is a preset name (``vmf`` aliases ``vmf1``); parameters
    follow after a colon as comma-separated ``key=value`` pairs.
    """
    text = text.strip()
    if ":" in text:
        name, _, rest = text.partition(":")
        params = {}
        for chunk in rest.split(","):
            if not chunk:
                continue
            key, _, val = chunk.partition("=")
            if not val:
                raise InputError(f"malformed alternative parameter {chunk!r} in {text!r}")
            params[key.strip()] = float(val)
    else:
        name, params = text, {}
    name = name.strip().lower()
    if name == "vmf":
        name = "vmf1"
    label = text if params else name
    return label, preset(name, d, **params)
