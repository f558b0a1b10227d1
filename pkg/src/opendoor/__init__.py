"""Generalized open-door functions.

Evaluation of the univalent door function R(z), certified solution of its
boundary-minimum equation, closed-form image geometry (strips, windows,
sector angles), open-set region membership including the exact image, and
a numeric verification harness (starlikeness, subordination implication,
winding-number oracle, univalence spot checks).
"""

from .boundary import (
    BoundaryPoint,
    SectorAngles,
    StripBounds,
    certified_strip,
    lower_branch,
    mocanu_theta,
    sector_angles,
    theta_to_x,
    u_cap,
    upper_branch,
    v_extrema,
)
from .core import (
    InitialPoint,
    OpenDoorParams,
    c_n_constant,
    mobius_g,
    principal_power,
)
from .errors import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    IndeterminateError,
    OpenDoorError,
    ParameterError,
)
from .figure import FigureJob, figure_summary, write_figure
from .functions import (
    TruncatedSeries,
    eval_r,
    eval_r_alpha1_closed,
    extremal_q,
    extremal_series,
    extremal_transform,
    gc_alpha_series,
    kuroki_owa_r,
    logderiv_transform,
    rotation_factor,
)
from .regions import (
    ExactImage,
    HalfPlaneLeft,
    Region,
    RegionUnion,
    Sector,
    Strip,
    Window,
    contains,
    in_image,
    omega_union,
    window_bounds,
)
from .roots import RootResult, bracket, f_poly, solve_xi
from .verify import (
    GridSpec,
    VerificationReport,
    check_close_to_convex,
    check_starlike_q,
    check_subordination,
    univalence_spot_check,
    winding_membership,
)

__version__ = "0.1.0"
