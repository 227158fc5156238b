"""The two multivariate counterexample families and their closed-form depth.

Both laws below have every one-dimensional marginal equal to the symmetric
alpha-stable law F with characteristic function exp(-|t|^alpha), yet they are
different distributions:

* COUPLED: characteristic function exp(-||t||_1^alpha).  All coordinates share
  one positive stable scale factor; realized at alpha = 1/2 as V * C with
  V ~ positive 1/2-stable and C a vector of i.i.d. standard Cauchy draws.
* INDEPENDENT: characteristic function exp(-sum_j |t_j|^alpha), i.e. d
  independent symmetric alpha-stable coordinates.

For any direction u the scaled projection u.X / ||u||_kappa (kappa the law's
symmetry index: 1 for COUPLED, alpha for INDEPENDENT) is again distributed as
F, and the halfspace depth of both laws is the same closed form

    depth(x) = F(-||x||_inf),

because inf_{u != 0} u.x / ||u||_kappa = -||x||_inf for every kappa in (0, 1].
``dual_norm_inf`` returns that infimum together with the coordinate direction
attaining it, and ``closed_form_depth`` evaluates the depth oracle.
"""

import enum
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .rng import make_rng
from .stable import (
    DEFAULT_TOL,
    StableLaw1D,
    _cms_symmetric,
    _positive_half_stable,
    cdf_sas,
)

__all__ = [
    "Kind",
    "AlphaSymmetricLaw",
    "SampleMatrix",
    "Direction",
    "alpha_norm",
    "cf_multivariate",
    "sample_law",
    "dual_norm_inf",
    "closed_form_depth",
    "project_scaled",
    "save_sample_csv",
    "load_sample_csv",
]


class Kind(enum.Enum):
    COUPLED = "coupled"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class AlphaSymmetricLaw:
    """d-variate law of one of the two kinds above, alpha in (0, 1]."""

    d: int
    alpha: float
    kind: Kind

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")
        if not isinstance(self.kind, Kind):
            raise ValueError(f"kind must be a Kind, got {self.kind!r}")

    @property
    def marginal(self) -> StableLaw1D:
        """Common one-dimensional marginal, identical for both kinds."""
        return StableLaw1D(self.alpha)

    @property
    def projection_norm_index(self) -> float:
        """kappa with u.X =d ||u||_kappa X_1: 1 for COUPLED, alpha otherwise."""
        return 1.0 if self.kind is Kind.COUPLED else self.alpha


@dataclass(frozen=True)
class Direction:
    """Nonzero direction vector; results depend only on its oriented ray."""

    u: np.ndarray

    def __post_init__(self):
        u = np.array(self.u, dtype=float, copy=True)
        if u.ndim != 1 or u.size == 0 or not np.all(np.isfinite(u)):
            raise ValueError("direction must be a finite 1-d vector")
        if not np.any(u != 0.0):
            raise ValueError("direction must be nonzero")
        u.setflags(write=False)
        object.__setattr__(self, "u", u)


@dataclass(frozen=True)
class SampleMatrix:
    """n x d observation matrix with provenance (law, seed)."""

    data: np.ndarray
    law: AlphaSymmetricLaw | None = None
    seed: int | None = None

    def __post_init__(self):
        data = np.array(self.data, dtype=float, copy=True, order="C")
        if data.ndim != 2 or data.shape[0] < 1 or data.shape[1] < 1:
            raise ValueError("sample must be a nonempty n x d matrix")
        if not np.all(np.isfinite(data)):
            raise ValueError("sample entries must be finite")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def d(self) -> int:
        return self.data.shape[1]


def alpha_norm(u, alpha: float):
    """(sum |u_j|^alpha)^(1/alpha); the usual norm for alpha >= 1, a quasinorm below."""
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    u = np.asarray(u, dtype=float)
    return np.sum(np.abs(u) ** alpha, axis=-1) ** (1.0 / alpha)


def cf_multivariate(law: AlphaSymmetricLaw, t):
    """Characteristic function at t (or rows of t)."""
    t = np.asarray(t, dtype=float)
    if law.kind is Kind.COUPLED:
        out = np.exp(-np.sum(np.abs(t), axis=-1) ** law.alpha)
    else:
        out = np.exp(-np.sum(np.abs(t) ** law.alpha, axis=-1))
    return out if out.ndim else float(out)


def sample_law(law: AlphaSymmetricLaw, n: int, seed: int) -> SampleMatrix:
    """Draw n rows from the law; deterministic per seed.

    INDEPENDENT stacks d independent CMS columns for any alpha in (0, 1].
    COUPLED is the scale mixture V * C (V positive 1/2-stable, C i.i.d.
    standard Cauchy), which exists in this closed form only at alpha = 1/2;
    other alpha raise.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = make_rng(seed)
    if law.kind is Kind.COUPLED:
        if law.alpha != 0.5:
            raise ValueError(
                f"COUPLED sampling is implemented only at alpha = 1/2 "
                f"(got alpha={law.alpha})"
            )
        # One scale draw per row times a row of Cauchy draws; then
        # E exp(i t.VC) = E exp(-V ||t||_1) = exp(-||t||_1^(1/2)).
        v = _positive_half_stable(rng, n)
        data = v[:, None] * _cms_symmetric(rng, 1.0, (n, law.d))
    else:
        data = _cms_symmetric(rng, law.alpha, (n, law.d))
    return SampleMatrix(data=data, law=law, seed=seed)


def dual_norm_inf(x, alpha: float) -> tuple[float, Direction]:
    """inf over u != 0 of (u.x)/||u||_alpha, with the attaining direction.

    For alpha in (0, 1] the infimum equals -||x||_inf, attained by the signed
    coordinate direction u = -sign(x_j*) e_j* at the largest-|x_j| coordinate
    (smallest index on ties).  x = 0 returns 0 with witness e_1.
    """
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size == 0 or not np.all(np.isfinite(x)):
        raise ValueError("x must be a finite 1-d vector")
    ax = np.abs(x)
    j = int(np.argmax(ax))  # argmax takes the smallest index on ties
    u = np.zeros(x.size)
    if ax[j] == 0.0:
        u[0] = 1.0
        return 0.0, Direction(u)
    u[j] = -math.copysign(1.0, x[j])
    return -float(ax[j]), Direction(u)


def closed_form_depth(law: AlphaSymmetricLaw, x, tol: float = DEFAULT_TOL) -> float:
    """Halfspace depth oracle F(-||x||_inf); identical for both kinds."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size != law.d:
        raise ValueError(f"x must be a vector of length d={law.d}")
    return cdf_sas(law.marginal, -float(np.max(np.abs(x))), tol)


def project_scaled(sample, u, alpha: float) -> np.ndarray:
    """Scaled linear projections (u . row_i) / ||u||_alpha.

    Invariant (up to rounding) under positive rescaling of u; with alpha set
    to the law's projection_norm_index the output is distributed as the
    univariate marginal F.
    """
    data = sample.data if isinstance(sample, SampleMatrix) else np.asarray(sample, dtype=float)
    direction = u if isinstance(u, Direction) else Direction(np.asarray(u, dtype=float))
    if direction.u.size != data.shape[1]:
        raise ValueError("direction length must match sample dimension")
    return data @ direction.u / alpha_norm(direction.u, alpha)


def save_sample_csv(sample: SampleMatrix, path) -> None:
    """Headerless CSV, one row per observation, full round-trip precision."""
    np.savetxt(path, sample.data, fmt="%.17g", delimiter=",")


def load_sample_csv(path) -> SampleMatrix:
    with warnings.catch_warnings():
        # an empty file is reported through SampleMatrix validation instead
        warnings.simplefilter("ignore", UserWarning)
        data = np.loadtxt(path, delimiter=",", ndmin=2)
    return SampleMatrix(data=data)
