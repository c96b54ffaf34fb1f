"""a-points of the Riemann zeta functional-equation factor.

The library locates the solutions of delta(s) = a for the factor
delta(s) = 2^s pi^(s-1) Gamma(1-s) sin(pi s/2) appearing in the
functional equation zeta(s) = delta(s) zeta(1-s), evaluates zeta at
shifts of those points, and verifies the counting main term, the
value-sum main term, the mean-value law (mean -> a+1), and the
clustering of the points around the critical line.
"""

from .apoints import (
    APoint,
    SolverConfig,
    TargetValue,
    count_contour,
    enumerate_apoints,
    refine,
    seed_beta,
    seed_gamma,
    winding_number,
)
from .backend import backend_name
from .complexfn import (
    delta,
    delta_asymptotic,
    delta_logderiv,
    digamma,
    log_gamma,
    theta_rs,
)
from .errors import (
    ConvergenceError,
    DomainError,
    DriftError,
    NoSolutionError,
    PoleError,
    QuadratureError,
    ZetaDeltaError,
)
from .verify import (
    CurveSample,
    SumReport,
    clustering_report,
    curve_sigma,
    empirical_sum,
    mean_zeta,
    n_main,
    reflected_mean,
    sum_main,
)
from .zetacore import ZetaEvalConfig, zeta, zeta_em

__version__ = "0.1.0"

__all__ = [
    "APoint",
    "ConvergenceError",
    "CurveSample",
    "DomainError",
    "DriftError",
    "NoSolutionError",
    "PoleError",
    "QuadratureError",
    "SolverConfig",
    "SumReport",
    "TargetValue",
    "ZetaDeltaError",
    "ZetaEvalConfig",
    "__version__",
    "backend_name",
    "clustering_report",
    "count_contour",
    "curve_sigma",
    "delta",
    "delta_asymptotic",
    "delta_logderiv",
    "digamma",
    "empirical_sum",
    "enumerate_apoints",
    "log_gamma",
    "mean_zeta",
    "n_main",
    "reflected_mean",
    "refine",
    "seed_beta",
    "seed_gamma",
    "sum_main",
    "theta_rs",
    "winding_number",
    "zeta",
    "zeta_em",
]
