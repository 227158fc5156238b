"""Verification harness for the shared-depth construction.

Draws one sample from each law (COUPLED scale mixture and INDEPENDENT
product), evaluates empirical halfspace depth over a query grid, and compares
both against the closed form F(-||x||_inf).  The two laws differ -- their
characteristic functions are far apart at t = (1, 1, 0, ...) -- yet their
depth surfaces agree, and the report quantifies both facts.

Empirical depths use the exact sweep at d = 2 and seeded direction sampling
with refinement at d >= 3; the approximation can only overshoot the true
empirical minimum, and both laws share one direction set so the overshoot
largely cancels in the P-vs-Q comparison.

All randomness expands from one master seed through role-labeled streams
(derive_seed), so reports are reproducible bit for bit.
"""

import json
import time
from dataclasses import dataclass

import numpy as np

from .depth import depth_2d_exact, depth_approx
from .alpha_symmetric import (AlphaSymmetricLaw, Kind, SampleMatrix,
                              closed_form_depth, project_scaled, sample_law)
from .rng import derive_seed, make_rng
from .stable import DEFAULT_TOL, StableLaw1D, TabulatedCdf

__all__ = [
    "ExperimentConfig",
    "ExperimentReport",
    "ProjectionCheck",
    "ConvergenceRow",
    "box_grid",
    "default_grid",
    "run_counterexample",
    "projection_suite",
    "convergence_table",
    "ks_statistic",
    "ks_two_sample",
    "empirical_cf",
    "write_report_csv",
    "write_report_json",
]

_CUBE_HALF_WIDTH = 2.0
_RANDOM_GRID_SIZE = 50
_KS_DIRECTIONS = 20


def box_grid(lo: float, hi: float, step: float, d: int) -> np.ndarray:
    """Cartesian product grid {lo, lo+step, ..., hi}^d, row-major order."""
    if not (step > 0.0 and hi > lo):
        raise ValueError("need hi > lo and step > 0")
    axis = np.arange(lo, hi + 0.5 * step, step)
    mesh = np.meshgrid(*([axis] * d), indexing="ij")
    return np.column_stack([m.ravel() for m in mesh])


def default_grid(d: int, seed: int) -> np.ndarray:
    """[-2,2]^2 with step 0.5 at d=2; 50 seeded uniform points in the
    ||x||_inf <= 2 cube at d >= 3."""
    if d == 2:
        return box_grid(-_CUBE_HALF_WIDTH, _CUBE_HALF_WIDTH, 0.5, 2)
    rng = make_rng(derive_seed(seed, "grid"))
    return rng.uniform(-_CUBE_HALF_WIDTH, _CUBE_HALF_WIDTH,
                       size=(_RANDOM_GRID_SIZE, d))


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of one verification run.

    grid rows are query points (m x d); k is the direction count for the
    approximate engine used when d >= 3.
    """

    d: int
    alpha: float
    n: int
    grid: np.ndarray
    k: int = 5000
    seed: int = 0
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")
        if self.n < 100:
            raise ValueError(f"n must be >= 100, got {self.n}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        grid = np.array(self.grid, dtype=float, copy=True)
        if grid.ndim != 2 or grid.shape[0] == 0 or grid.shape[1] != self.d:
            raise ValueError("grid must be a nonempty m x d array")
        if not np.all(np.isfinite(grid)):
            raise ValueError("grid entries must be finite")
        grid.setflags(write=False)
        object.__setattr__(self, "grid", grid)

    @classmethod
    def default(cls, d: int = 2, alpha: float = 0.5, n: int = 200_000,
                seed: int = 0, k: int = 5000,
                tol: float = DEFAULT_TOL) -> "ExperimentConfig":
        return cls(d=d, alpha=alpha, n=n, grid=default_grid(d, seed),
                   k=k, seed=seed, tol=tol)


@dataclass(frozen=True, eq=False)
class ExperimentReport:
    """Per-point depths plus summary statistics for one run."""

    config: ExperimentConfig
    engine: str
    closed_form: np.ndarray
    depth_p: np.ndarray
    depth_q: np.ndarray
    cf_t: np.ndarray
    cf_p_hat: float
    cf_q_hat: float
    cf_gap: float
    cf_gap_se: float
    wall_time_s: float

    @property
    def err_p(self) -> np.ndarray:
        return np.abs(self.depth_p - self.closed_form)

    @property
    def err_q(self) -> np.ndarray:
        return np.abs(self.depth_q - self.closed_form)

    @property
    def err_pq(self) -> np.ndarray:
        return np.abs(self.depth_p - self.depth_q)

    @property
    def sup_err_p(self) -> float:
        return float(np.max(self.err_p))

    @property
    def sup_err_q(self) -> float:
        return float(np.max(self.err_q))

    @property
    def sup_err_pq(self) -> float:
        return float(np.max(self.err_pq))


def empirical_cf(data: np.ndarray, t: np.ndarray) -> tuple[complex, float]:
    """Empirical characteristic function at t and the Monte Carlo standard
    error of its real part."""
    phase = data @ t
    c = np.cos(phase)
    s = np.sin(phase)
    n = len(phase)
    se = float(np.std(c, ddof=1) / np.sqrt(n))
    return complex(c.mean(), s.mean()), se


def _depth_on_grid(sample: SampleMatrix, grid: np.ndarray, k: int,
                   dir_seed: int) -> np.ndarray:
    d = grid.shape[1]
    out = np.empty(len(grid))
    for i, x in enumerate(grid):
        try:
            if d == 2:
                out[i] = depth_2d_exact(sample, x).value
            else:
                out[i] = depth_approx(sample, x, k=k, seed=dir_seed,
                                      refine=True).value
        except Exception as exc:
            raise RuntimeError(
                f"depth evaluation failed at grid point {i} "
                f"(x = {np.array2string(x)})") from exc
    return out


def run_counterexample(cfg: ExperimentConfig) -> ExperimentReport:
    """Sample both laws, compare empirical depths with F(-||x||_inf), and
    measure the characteristic-function gap that certifies the laws differ."""
    t0 = time.perf_counter()
    law_p = AlphaSymmetricLaw(d=cfg.d, alpha=cfg.alpha, kind=Kind.COUPLED)
    law_q = AlphaSymmetricLaw(d=cfg.d, alpha=cfg.alpha, kind=Kind.INDEPENDENT)
    sample_p = sample_law(law_p, cfg.n, derive_seed(cfg.seed, "sample:coupled"))
    sample_q = sample_law(law_q, cfg.n, derive_seed(cfg.seed, "sample:independent"))

    # One closed-form evaluation per distinct ||x||_inf.
    sup_norms = np.max(np.abs(cfg.grid), axis=1)
    cache: dict[float, float] = {}
    closed = np.empty(len(cfg.grid))
    for i, r in enumerate(sup_norms):
        r = float(r)
        if r not in cache:
            cache[r] = closed_form_depth(law_p, np.append(r, np.zeros(cfg.d - 1)),
                                         cfg.tol)
        closed[i] = cache[r]

    dir_seed = derive_seed(cfg.seed, "directions")
    depth_p = _depth_on_grid(sample_p, cfg.grid, cfg.k, dir_seed)
    depth_q = _depth_on_grid(sample_q, cfg.grid, cfg.k, dir_seed)

    # The two cf formulas differ most visibly at t with two active
    # coordinates; the gap certifies P != Q while the depths above agree.
    t = np.zeros(cfg.d)
    t[0] = t[1] = 1.0
    cf_p, se_p = empirical_cf(sample_p.data, t)
    cf_q, se_q = empirical_cf(sample_q.data, t)
    gap = abs(cf_p.real - cf_q.real)
    gap_se = float(np.hypot(se_p, se_q))

    engine = "exact_2d" if cfg.d == 2 else f"approx(k={cfg.k})"
    return ExperimentReport(
        config=cfg, engine=engine, closed_form=closed,
        depth_p=depth_p, depth_q=depth_q,
        cf_t=t, cf_p_hat=cf_p.real, cf_q_hat=cf_q.real,
        cf_gap=gap, cf_gap_se=gap_se,
        wall_time_s=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# KS machinery and the projection test suite
# ---------------------------------------------------------------------------


def ks_statistic(values, cdf) -> float:
    """One-sample KS: sup |F_n - F| against a vectorized CDF callable."""
    x = np.sort(np.asarray(values, dtype=float))
    n = len(x)
    if n == 0:
        raise ValueError("need at least one observation")
    f = np.asarray(cdf(x), dtype=float)
    hi = np.max(np.arange(1, n + 1) / n - f)
    lo = np.max(f - np.arange(0, n) / n)
    return float(max(hi, lo))


def ks_two_sample(a, b) -> float:
    """Two-sample KS: sup |F_a - F_b| over the pooled sample."""
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if len(a) == 0 or len(b) == 0:
        raise ValueError("need at least one observation per sample")
    pooled = np.concatenate([a, b])
    fa = np.searchsorted(a, pooled, side="right") / len(a)
    fb = np.searchsorted(b, pooled, side="right") / len(b)
    return float(np.max(np.abs(fa - fb)))


@dataclass(frozen=True)
class ProjectionCheck:
    kind: str
    direction: np.ndarray
    ks: float
    threshold: float

    @property
    def ok(self) -> bool:
        return self.ks <= self.threshold


def projection_suite(cfg: ExperimentConfig,
                     n_directions: int = _KS_DIRECTIONS) -> list[ProjectionCheck]:
    """KS tests of norm-scaled projections against the common marginal.

    Each law's projections are rescaled by its own norm index (the l1 norm for
    COUPLED, the alpha-(quasi)norm for INDEPENDENT); both must then match
    cdf_sas(alpha).  Pass threshold: 2/sqrt(n) per direction.
    """
    marginal = StableLaw1D(alpha=cfg.alpha)
    table = TabulatedCdf(marginal, cfg.tol)
    dirs = make_rng(derive_seed(cfg.seed, "ks-directions")) \
        .standard_normal((n_directions, cfg.d))
    threshold = 2.0 / np.sqrt(cfg.n)
    out = []
    for kind in (Kind.COUPLED, Kind.INDEPENDENT):
        law = AlphaSymmetricLaw(d=cfg.d, alpha=cfg.alpha, kind=kind)
        sample = sample_law(law, cfg.n, derive_seed(cfg.seed, f"ks-sample:{kind.value}"))
        for u in dirs:
            z = project_scaled(sample, u, law.projection_norm_index)
            out.append(ProjectionCheck(kind=kind.value, direction=u,
                                       ks=ks_statistic(z, table),
                                       threshold=float(threshold)))
    return out


# ---------------------------------------------------------------------------
# Convergence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    sup_err_p: float
    sup_err_q: float
    sup_err_pq: float


def convergence_table(cfg: ExperimentConfig, sizes) -> list[ConvergenceRow]:
    """Rerun the comparison at each sample size; when the sizes span at least
    two decades the largest-n sup error must drop below the smallest-n one
    (raises RuntimeError otherwise -- a numerical red flag, not a usage
    error)."""
    sizes = [int(s) for s in sizes]
    if sizes != sorted(sizes) or len(set(sizes)) != len(sizes):
        raise ValueError("sizes must be strictly increasing")
    rows = []
    for n in sizes:
        sub = ExperimentConfig(d=cfg.d, alpha=cfg.alpha, n=n, grid=cfg.grid,
                               k=cfg.k, seed=derive_seed(cfg.seed, f"size:{n}"),
                               tol=cfg.tol)
        rep = run_counterexample(sub)
        rows.append(ConvergenceRow(n=n, sup_err_p=rep.sup_err_p,
                                   sup_err_q=rep.sup_err_q,
                                   sup_err_pq=rep.sup_err_pq))
    if len(sizes) >= 2 and sizes[-1] >= 100 * sizes[0]:
        first, last = rows[0], rows[-1]
        if not (last.sup_err_p < first.sup_err_p
                and last.sup_err_q < first.sup_err_q):
            raise RuntimeError(
                "sup errors failed to shrink over two decades of n: "
                f"P {first.sup_err_p:.4g} -> {last.sup_err_p:.4g}, "
                f"Q {first.sup_err_q:.4g} -> {last.sup_err_q:.4g}")
    return rows


# ---------------------------------------------------------------------------
# Report emission
# ---------------------------------------------------------------------------


def write_report_csv(report: ExperimentReport, path) -> None:
    """Per-point table: x_1..x_d, depth_closed_form, depth_P, depth_Q,
    err_P, err_Q, err_PQ.  17 significant digits, bitwise reproducible."""
    d = report.config.d
    header = ",".join([f"x_{j + 1}" for j in range(d)]
                      + ["depth_closed_form", "depth_P", "depth_Q",
                         "err_P", "err_Q", "err_PQ"])
    body = np.column_stack([
        report.config.grid, report.closed_form, report.depth_p,
        report.depth_q, report.err_p, report.err_q, report.err_pq,
    ])
    np.savetxt(path, body, fmt="%.17g", delimiter=",", header=header,
               comments="")


def write_report_json(report: ExperimentReport, path) -> None:
    """Summary JSON.  Deterministic: key-sorted, no timing fields."""
    cfg = report.config
    summary = {
        "alpha": cfg.alpha,
        "cf_gap": report.cf_gap,
        "cf_gap_se": report.cf_gap_se,
        "cf_p_hat": report.cf_p_hat,
        "cf_q_hat": report.cf_q_hat,
        "cf_t": report.cf_t.tolist(),
        "d": cfg.d,
        "engine": report.engine,
        "grid_points": int(len(cfg.grid)),
        "k": cfg.k,
        "n": cfg.n,
        "seed": cfg.seed,
        "sup_err_P": report.sup_err_p,
        "sup_err_PQ": report.sup_err_pq,
        "sup_err_Q": report.sup_err_q,
        "tol": cfg.tol,
    }
    with open(path, "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
