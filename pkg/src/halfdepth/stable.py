"""Univariate symmetric alpha-stable laws: characteristic function, CDF, samplers.

The characteristic function is exp(-|t|^alpha).  No closed-form CDF exists for
general alpha, so ``cdf_sas`` inverts the characteristic function with a
Gil-Pelaez integral

    F(x) = 1/2 + (1/pi) * int_0^inf sin(t x) exp(-t^alpha) / t dt,   x > 0,

evaluated after the substitution t = s^2 (which removes the singularity at the
origin and, for alpha = 1/2, turns the damping factor into a plain exp(-s)):

    F(x) = 1/2 + (1/pi) * int_0^inf 2 sin(s^2 x) exp(-s^(2 alpha)) / s ds.

The integrand changes sign exactly at s_k = sqrt(k pi / x); each lobe between
consecutive zeros is integrated with an adaptive two-rule Gauss-Legendre
scheme, and the alternating lobe series is summed with iterated averaging
(Euler-style acceleration), so the work stays bounded for arbitrarily large
|x|.  Accuracy is guaranteed for alpha in [1/4, 2]; alpha = 1 (Cauchy) and
alpha = 2 (Gaussian with variance 2) have closed forms used as cross-checks
in the test suite.

Sampling uses the Chambers-Mallows-Stuck construction; the positive 1/2-stable
mixing variable needed by the coupled multivariate family is generated by the
exact representation V = 1/(2 Z^2) with Z standard normal.
"""

import math
from dataclasses import dataclass

import numpy as np

from .rng import make_rng

__all__ = [
    "StableLaw1D",
    "PositiveStableLaw",
    "QuadratureError",
    "cf_sas",
    "cdf_sas",
    "sample_sas",
    "sample_positive_stable",
    "TabulatedCdf",
]

DEFAULT_TOL = 1e-8
SEGMENT_BUDGET = 10_000

# Max sine lobes before the accelerated sum must have converged.  ~60 lobes
# give the averaging scheme a 2^-60 reduction factor, far below any tolerance
# this module accepts, so hitting the cap means something is genuinely wrong.
_MAX_LOBES = 512

_GL_LO = np.polynomial.legendre.leggauss(7)
_GL_HI = np.polynomial.legendre.leggauss(15)


class QuadratureError(RuntimeError):
    """CDF inversion failed to converge within the segment budget."""


@dataclass(frozen=True)
class StableLaw1D:
    """Symmetric alpha-stable law with characteristic function exp(-|t|^alpha)."""

    alpha: float

    def __post_init__(self):
        if not (0.0 < self.alpha <= 2.0):
            raise ValueError(f"alpha must be in (0, 2], got {self.alpha}")


@dataclass(frozen=True)
class PositiveStableLaw:
    """Positive stable law with Laplace transform exp(-lambda^beta), beta in (0,1)."""

    beta: float

    def __post_init__(self):
        if not (0.0 < self.beta < 1.0):
            raise ValueError(f"beta must be in (0, 1), got {self.beta}")


def cf_sas(law: StableLaw1D, t):
    """Characteristic function exp(-|t|^alpha); accepts scalars or arrays."""
    t = np.asarray(t, dtype=float)
    out = np.exp(-np.abs(t) ** law.alpha)
    return out if out.ndim else float(out)


# ---------------------------------------------------------------------------
# CDF by characteristic-function inversion
# ---------------------------------------------------------------------------


def _gl_fixed(f, a: float, b: float, rule) -> float:
    nodes, weights = rule
    half = 0.5 * (b - a)
    return half * float(np.dot(weights, f(0.5 * (a + b) + half * nodes)))


def _adaptive_lobe(f, a: float, b: float, tol: float, budget: list) -> float:
    """Adaptive bisection with a 7/15-point Gauss-Legendre error estimate."""
    stack = [(a, b, tol)]
    total = 0.0
    while stack:
        lo, hi, t = stack.pop()
        budget[0] -= 1
        if budget[0] < 0:
            raise QuadratureError(
                "segment budget exhausted; |x| too extreme for the "
                "oscillatory inversion scheme"
            )
        coarse = _gl_fixed(f, lo, hi, _GL_LO)
        fine = _gl_fixed(f, lo, hi, _GL_HI)
        if abs(fine - coarse) <= t or (hi - lo) < 1e-300:
            total += fine
        else:
            mid = 0.5 * (lo + hi)
            stack.append((lo, mid, 0.5 * t))
            stack.append((mid, hi, 0.5 * t))
    return total


def _accelerated_sum(terms) -> float:
    """Sum an alternating series by iterated averaging of its partial sums."""
    a = np.cumsum(terms)
    while a.size > 1:
        a = 0.5 * (a[1:] + a[:-1])
    return float(a[0])


def _decay_radius(p: float, tol: float) -> float:
    """Radius A with a certified bound int_A^inf (2/s) exp(-s^p) ds <= tol."""
    # With r = s^p the remainder is (2/p) * E1(B) <= (2/p) exp(-B)/B, B = A^p;
    # B = log(2/(p tol)) >= 1 makes that bound equal tol/B <= tol.
    b = max(1.0, math.log(2.0 / (p * tol)))
    return max(1.0, b ** (1.0 / p))


def _tail_probability_bound(alpha: float, x: float) -> float:
    """Conservative upper estimate of 1 - F(x) for large x > 0."""
    if alpha >= 2.0:
        return math.erfc(x / 2.0)  # cf exp(-t^2) is N(0, 2)
    c = math.gamma(alpha) * math.sin(0.5 * math.pi * alpha) / math.pi
    return 4.0 * c * x ** (-alpha)


def _gil_pelaez_positive(alpha: float, x: float, tol: float) -> float:
    """F(x) for x > 0 via the substituted Gil-Pelaez integral."""
    p = 2.0 * alpha
    tol_i = max(0.25 * math.pi * tol, 1e-14)  # error budget for the integral
    radius = _decay_radius(p, 0.01 * tol_i)
    budget = [SEGMENT_BUDGET]

    def integrand(s):
        return 2.0 * np.sin(s * s * x) * np.exp(-(s ** p)) / s

    # Head lobe [0, s_1]; the integrand vanishes linearly at s = 0 and the
    # Gauss nodes are interior, so the endpoint itself is never evaluated.
    s1 = math.sqrt(math.pi / x)
    head_end = min(s1, radius)
    total = _adaptive_lobe(integrand, 0.0, head_end, 0.01 * tol_i, budget)
    if s1 >= radius:
        return 0.5 + total / math.pi

    # Alternating lobes; |c_k| decreases from k = 1 on, so the raw remainder
    # is bounded by the first omitted term and averaging accelerates the rest.
    lobe_tol = tol_i / 2000.0
    terms = []
    prev_accel = None
    k = 1
    while k <= _MAX_LOBES:
        lo = math.sqrt(k * math.pi / x)
        hi = math.sqrt((k + 1) * math.pi / x)
        clipped = min(hi, radius)
        terms.append(_adaptive_lobe(integrand, lo, clipped, lobe_tol, budget))
        if clipped < hi:  # decay radius reached: raw tail already certified
            return 0.5 + (total + math.fsum(terms)) / math.pi
        if abs(terms[-1]) <= 0.1 * tol_i:
            return 0.5 + (total + math.fsum(terms)) / math.pi
        if k >= 8:
            accel = _accelerated_sum(terms)
            if prev_accel is not None and abs(accel - prev_accel) <= 0.2 * tol_i:
                return 0.5 + (total + accel) / math.pi
            prev_accel = accel
        k += 1
    raise QuadratureError(
        f"inversion did not converge within {_MAX_LOBES} lobes "
        f"(alpha={alpha}, x={x})"
    )


def cdf_sas(law: StableLaw1D, x: float, tol: float = DEFAULT_TOL) -> float:
    """CDF of the symmetric alpha-stable law, |error| <= tol.

    Symmetry F(-x) = 1 - F(x) is enforced by construction, and far tails are
    short-circuited to 0/1 once the tail-probability bound drops below tol/10.
    Raises QuadratureError if the oscillatory scheme cannot converge within
    its segment budget.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    if not math.isfinite(x):
        raise ValueError("x must be finite")
    if x == 0.0:
        return 0.5
    ax = abs(x)
    if ax > 1.0 and _tail_probability_bound(law.alpha, ax) < 0.1 * tol:
        return 1.0 if x > 0 else 0.0
    upper = _gil_pelaez_positive(law.alpha, ax, tol)
    upper = min(max(upper, 0.0), 1.0)
    return upper if x > 0 else 1.0 - upper


# ---------------------------------------------------------------------------
# Samplers
# ---------------------------------------------------------------------------


def _cms_symmetric(rng: np.random.Generator, alpha: float, size) -> np.ndarray:
    """Symmetric CMS draws from an existing generator stream."""
    phi = rng.uniform(-0.5 * math.pi, 0.5 * math.pi, size=size)
    if alpha == 1.0:
        return np.tan(phi)
    w = rng.standard_exponential(size)
    scale = (np.cos((1.0 - alpha) * phi) / w) ** ((1.0 - alpha) / alpha)
    return scale * np.sin(alpha * phi) / np.cos(phi) ** (1.0 / alpha)


def _positive_half_stable(rng: np.random.Generator, n: int) -> np.ndarray:
    """Positive 1/2-stable draws V = 1/(2 Z^2); Z = 0 is redrawn."""
    z = rng.standard_normal(n)
    while True:
        zero = z == 0.0
        if not zero.any():
            break
        z[zero] = rng.standard_normal(int(zero.sum()))
    return 1.0 / (2.0 * z * z)


def sample_sas(law: StableLaw1D, n: int, seed: int) -> np.ndarray:
    """n i.i.d. draws via the Chambers-Mallows-Stuck construction.

    Deterministic per seed.  alpha = 1 uses the exact tangent (Cauchy) form;
    the general branch is the symmetric CMS formula.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return _cms_symmetric(make_rng(seed), law.alpha, n)


def sample_positive_stable(law: PositiveStableLaw, n: int, seed: int) -> np.ndarray:
    """n i.i.d. positive draws with Laplace transform exp(-lambda^beta).

    Only beta = 1/2 is supported, via the exact construction V = 1/(2 Z^2)
    with Z standard normal; Z = 0 is redrawn so no draw is ever infinite.
    """
    if law.beta != 0.5:
        raise ValueError(
            f"only beta = 1/2 is implemented (got beta={law.beta}); general "
            "positive-stable sampling is out of scope"
        )
    if n < 1:
        raise ValueError("n must be >= 1")
    return _positive_half_stable(make_rng(seed), n)


# ---------------------------------------------------------------------------
# Dense evaluation
# ---------------------------------------------------------------------------


class TabulatedCdf:
    """Fast monotone interpolant of cdf_sas for bulk evaluation (KS tests).

    Nodes are spaced uniformly in arcsinh(x / scale) out to x_span, where the
    CDF is gentle, and a PCHIP fit keeps the interpolant monotone.  The scale
    packs nodes near the origin, where heavy-tailed densities peak sharply
    (for alpha = 1/2 the density curvature at 0 is about -76, which at unit
    scale costs 2e-5 of cubic error in the first interval).  Beyond x_span
    the asymptotic power tail C(alpha) x^-alpha takes over (erfc for
    alpha = 2).  Interpolation error stays below 1e-6 (checked in the test
    suite), an order of magnitude under any KS threshold used here.
    """

    def __init__(self, law: StableLaw1D, tol: float = DEFAULT_TOL,
                 x_span: float = 1e12, nodes: int = 1600, scale: float = 0.05):
        from scipy.interpolate import PchipInterpolator

        self.law = law
        self.x_span = float(x_span)
        grid = scale * np.sinh(
            np.linspace(0.0, math.asinh(self.x_span / scale), nodes))
        grid[-1] = self.x_span  # exact span endpoint, no sinh/asinh rounding
        values = np.array([cdf_sas(law, float(g), tol) for g in grid])
        values[0] = 0.5
        # PCHIP needs strictly increasing data; drop flat far-tail nodes.
        keep = np.concatenate(([True], np.diff(values) > 0.0))
        self._interp = PchipInterpolator(grid[keep], values[keep], extrapolate=False)

    def _upper_tail(self, x):
        alpha = self.law.alpha
        if alpha >= 2.0:
            from scipy.special import erfc

            return 0.5 * erfc(np.asarray(x) / 2.0)
        c = math.gamma(alpha) * math.sin(0.5 * math.pi * alpha) / math.pi
        return c * np.asarray(x, dtype=float) ** (-alpha)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        ax = np.abs(x)
        out = np.empty_like(ax)
        inside = ax <= self.x_span
        out[inside] = self._interp(ax[inside])
        out[~inside] = 1.0 - self._upper_tail(ax[~inside])
        out = np.clip(out, 0.5, 1.0)
        result = np.where(x >= 0.0, out, 1.0 - out)
        return result if result.ndim else float(result)
