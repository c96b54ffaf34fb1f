"""Desk-scale tolerance calibrations, kept in one place.

The limit statements the verify module checks are asymptotic with
unspecified constants, so every numerical threshold below is an
empirical calibration for the height ranges this artifact targets,
not a theorem constant.
"""

import math

# Newton / enumeration
DUPLICATE_DISTANCE = 1e-6          # two converged points closer than this are one
SEED_DRIFT_FRACTION = 0.5          # of the local mean spacing

# contour counting
CONTOUR_EDGE_MARGIN_C = 0.1        # horizontal edges stay c/log(T) clear of points
WINDING_STABILIZE_TOL = 1e-4       # panel-doubling convergence target
WINDING_INTEGER_TOL = 1e-3         # pre-rounding distance to the nearest integer
WINDING_MAX_DOUBLINGS = 7

# verification checks
COUNT_MAIN_TERM_LOG_FACTOR = 10.0  # |count - main term| <= 10 log T
SUM_IDENTITY_RTOL = 1e-9           # eta=0 algebraic identity
MEAN_ABS_TOL_AT_5000 = 0.1         # |mean - (a+1)| at height 5000
CLUSTER_CURVE_TOL = 0.02           # block max |beta-1/2| vs the curve formula
CLUSTER_DECREASE_SLACK = 1.10      # block maxima may ratchet up by 10%
NORMALIZED_ERROR_GROWTH = 2000.0 ** 0.6 / 500.0 ** 0.6  # T^0.6 fit ratio


def mean_tolerance(t_max: float) -> float:
    """Mean-value check tolerance, loosened ~T^(-1/2) below height 5000."""
    return MEAN_ABS_TOL_AT_5000 * max(1.0, math.sqrt(5000.0 / t_max))
