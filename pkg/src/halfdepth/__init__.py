"""Halfspace (Tukey) depth toolkit built around a pair of multivariate
stable laws that share one depth surface.

The two laws -- a scale mixture whose characteristic function depends on
the l1 norm of t, and a product of independent stable marginals -- are
genuinely different distributions, yet both have halfspace depth
F(-||x||_inf) everywhere, with F the common univariate marginal CDF.
The package provides the univariate stable layer (sampling and CDF by
characteristic-function inversion), the two multivariate laws, exact and
approximate depth engines, and a verification harness.
"""

from .depth import (DepthMethod, DepthResult, depth_1d, depth_2d_exact,
                    depth_approx, depth_bruteforce)
from .experiment import (ConvergenceRow, ExperimentConfig, ExperimentReport,
                         ProjectionCheck, box_grid, convergence_table,
                         default_grid, empirical_cf, ks_statistic,
                         ks_two_sample, projection_suite, run_counterexample,
                         write_report_csv, write_report_json)
from .alpha_symmetric import (AlphaSymmetricLaw, Direction, Kind,
                              SampleMatrix, alpha_norm, cf_multivariate,
                              closed_form_depth, dual_norm_inf,
                              load_sample_csv, project_scaled, sample_law,
                              save_sample_csv)
from .rng import derive_seed, make_rng
from .stable import (DEFAULT_TOL, PositiveStableLaw, QuadratureError,
                     StableLaw1D, TabulatedCdf, cdf_sas, cf_sas,
                     sample_positive_stable, sample_sas)

__version__ = "0.1.0"

__all__ = [
    "AlphaSymmetricLaw",
    "ConvergenceRow",
    "DEFAULT_TOL",
    "DepthMethod",
    "DepthResult",
    "Direction",
    "ExperimentConfig",
    "ExperimentReport",
    "Kind",
    "PositiveStableLaw",
    "ProjectionCheck",
    "QuadratureError",
    "SampleMatrix",
    "StableLaw1D",
    "TabulatedCdf",
    "alpha_norm",
    "box_grid",
    "cdf_sas",
    "cf_multivariate",
    "cf_sas",
    "closed_form_depth",
    "convergence_table",
    "default_grid",
    "depth_1d",
    "depth_2d_exact",
    "depth_approx",
    "depth_bruteforce",
    "derive_seed",
    "dual_norm_inf",
    "empirical_cf",
    "ks_statistic",
    "ks_two_sample",
    "load_sample_csv",
    "make_rng",
    "project_scaled",
    "projection_suite",
    "run_counterexample",
    "sample_law",
    "sample_positive_stable",
    "sample_sas",
    "save_sample_csv",
    "write_report_csv",
    "write_report_json",
]
