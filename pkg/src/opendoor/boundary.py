"""Image-boundary curves of the door function and their scalar geometry.

On the unit circle the door function traces two branches parameterized by
x = cot(theta/2) cos t + sin t (upper branch for x > 0, lower for x < 0
via y = -x):

    u_+(x) = a (r x)^alpha
    v_+(x) = b (r x)^alpha + (n alpha / (2 cos t)) (x - 2 sin t + 1/x)
    u_-(y) = a (r y)^alpha
    v_-(y) = -b (r y)^alpha - (n alpha / (2 cos t)) (y + 2 sin t + 1/y)

with a = cos(pi alpha/2), b = sin(pi alpha/2).  Both v-extrema sit at the
certified root xi of x^2 + A x^(1+alpha) = 1 and are evaluated through

    U(x) = (n / (2 cos t)) ((alpha - 1) x + (alpha + 1)/x) - n alpha tan t,

never by numeric optimization.  The module also derives the certified
strip, the branch argument bounds (theta_plus, theta_minus) for alpha < 1,
and the closed-form sector angle of Mocanu type used to cross-check them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import OpenDoorParams
from .errors import DomainError, ParameterError
from .roots import solve_xi

__all__ = [
    "BoundaryPoint",
    "StripBounds",
    "SectorAngles",
    "theta_to_x",
    "upper_branch",
    "lower_branch",
    "u_cap",
    "v_extrema",
    "certified_strip",
    "sector_angles",
    "mocanu_theta",
]


@dataclass(frozen=True)
class BoundaryPoint:
    """One point (u, v) on a boundary branch, tagged with its parameter."""

    branch: str  # "upper" or "lower"
    x: float
    u: float
    v: float


@dataclass(frozen=True)
class StripBounds:
    """A horizontal strip lower < Im w < upper; kind is "exact" or "certified"."""

    lower: float
    upper: float
    kind: str = "exact"

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            raise ParameterError(
                f"strip requires lower < upper, got ({self.lower!r}, {self.upper!r})"
            )
        if self.kind not in ("exact", "certified"):
            raise ParameterError(f"unknown strip kind {self.kind!r}")


@dataclass(frozen=True)
class SectorAngles:
    """Argument bounds of the boundary branches for alpha < 1.

    theta_plus/theta_minus are the angles in (pi alpha/2, pi/2); t_plus and
    t_minus are the corresponding tangent values (t_minus negative); the
    extrema of v/u are attained at the branch parameters xi_plus, xi_minus.
    """

    theta_plus: float
    theta_minus: float
    xi_plus: float
    xi_minus: float
    t_plus: float
    t_minus: float


def theta_to_x(theta: float, t: float) -> float:
    """Branch parameter x = cot(theta/2) cos t + sin t for theta in (0, 2 pi)."""
    theta = float(theta)
    if not 0.0 < theta < 2.0 * math.pi:
        raise DomainError(f"theta must lie in (0, 2 pi), got {theta!r}")
    return math.cos(t) / math.tan(0.5 * theta) + math.sin(t)


def _scale(params: OpenDoorParams) -> float:
    # n alpha / (2 cos t), the shared prefactor of the rational part
    return params.n * params.alpha / (2.0 * math.cos(params.initial.t))


def _radial(params: OpenDoorParams, x: float) -> float:
    return (params.initial.r * x) ** params.alpha


def _v_plus(params: OpenDoorParams, x: float) -> float:
    return params.b * _radial(params, x) + _scale(params) * (
        x - 2.0 * math.sin(params.initial.t) + 1.0 / x
    )


def _v_minus(params: OpenDoorParams, y: float) -> float:
    return -params.b * _radial(params, y) - _scale(params) * (
        y + 2.0 * math.sin(params.initial.t) + 1.0 / y
    )


def _check_positive(x: float, name: str) -> float:
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"{name} must be positive, got {x!r}")
    return x


def upper_branch(params: OpenDoorParams, x: float) -> BoundaryPoint:
    """Upper boundary branch at parameter x > 0; v is always positive."""
    x = _check_positive(x, "x")
    return BoundaryPoint("upper", x, params.a * _radial(params, x), _v_plus(params, x))


def lower_branch(params: OpenDoorParams, y: float) -> BoundaryPoint:
    """Lower boundary branch at parameter y > 0; v is always negative and
    u coincides with the upper branch's u at the same parameter."""
    y = _check_positive(y, "y")
    return BoundaryPoint("lower", y, params.a * _radial(params, y), _v_minus(params, y))


def _u_form(params: OpenDoorParams, x: float) -> float:
    """U(x) = (n/(2 cos t))((alpha-1) x + (alpha+1)/x) - n alpha tan t."""
    t = params.initial.t
    return params.n / (2.0 * math.cos(t)) * (
        (params.alpha - 1.0) * x + (params.alpha + 1.0) / x
    ) - params.n * params.alpha * math.tan(t)


def u_cap(params: OpenDoorParams) -> float:
    """The u-coordinate both branches share at the strip-extremum parameter."""
    return params.a * _radial(params, solve_xi(params.A, params.alpha).xi)


def v_extrema(params: OpenDoorParams) -> StripBounds:
    """Exact vertical extent of the image: (min v over the lower branch,
    min v over the upper branch), both attained at the certified root xi
    and evaluated through the U-form."""
    xi = solve_xi(params.A, params.alpha).xi
    t = params.initial.t
    base = params.n / (2.0 * math.cos(t)) * (
        (params.alpha - 1.0) * xi + (params.alpha + 1.0) / xi
    )
    shift = params.n * params.alpha * math.tan(t)
    return StripBounds(-base - shift, base - shift, "exact")


def certified_strip(params: OpenDoorParams) -> StripBounds:
    """The closed-form strip guaranteed to lie inside the image:

        |Im w + n alpha tan t| < (n/(2 cos t)) ((alpha-1)/sqrt(1+A) + (alpha+1) sqrt(1+A)).

    Contained in v_extrema's exact strip, strictly when alpha < 1; at
    alpha = 1 both reduce to (-C_n(c), C_n(conj c)).
    """
    t = params.initial.t
    sq = math.sqrt(1.0 + params.A)
    half = params.n / (2.0 * math.cos(t)) * (
        (params.alpha - 1.0) / sq + (params.alpha + 1.0) * sq
    )
    center = -params.n * params.alpha * math.tan(t)
    return StripBounds(center - half, center + half, "certified")


def sector_angles(params: OpenDoorParams) -> SectorAngles:
    """Argument bounds of the boundary for 0 < alpha < 1.

    xi_plus is the positive root of (1-alpha) x^2 + 2 alpha x sin t = 1+alpha,
    xi_minus the same with sin t negated, and

        theta_pm = arctan[ tan(pi alpha/2)
                           + n (xi_pm - 1/xi_pm) / (2 r^alpha xi_pm^alpha cos(pi alpha/2) cos t) ].

    Whichever quadratic-root form avoids cancellation for the sign of sin t
    is used.  The formulas are singular at alpha = 1 (a = 0), which is a
    domain error here.
    """
    alpha = params.alpha
    if alpha >= 1.0:
        raise DomainError("sector angles require alpha strictly below 1")
    ini = params.initial
    sin_t = math.sin(ini.t)
    cos_t = math.cos(ini.t)
    disc = math.sqrt(1.0 - alpha * alpha * cos_t * cos_t)
    if sin_t > 0.0:
        xi_plus = (1.0 + alpha) / (alpha * sin_t + disc)
        xi_minus = (alpha * sin_t + disc) / (1.0 - alpha)
    elif sin_t < 0.0:
        xi_plus = (-alpha * sin_t + disc) / (1.0 - alpha)
        xi_minus = (1.0 + alpha) / (-alpha * sin_t + disc)
    else:
        xi_plus = xi_minus = (1.0 + alpha) / disc

    tan_half = math.tan(0.5 * math.pi * alpha)

    def tangent(xi: float) -> float:
        return tan_half + params.n * (xi - 1.0 / xi) / (
            2.0 * ini.r**alpha * xi**alpha * params.a * cos_t
        )

    t_plus = tangent(xi_plus)
    t_minus_mag = tangent(xi_minus)
    return SectorAngles(
        theta_plus=math.atan(t_plus),
        theta_minus=math.atan(t_minus_mag),
        xi_plus=xi_plus,
        xi_minus=xi_minus,
        t_plus=t_plus,
        t_minus=-t_minus_mag,
    )


def mocanu_theta(alpha: float) -> float:
    """Closed-form sector half-angle for c = 1, n = 1 and 0 < alpha < 1:

        pi alpha/2 + arctan[ alpha cos(pi alpha/2)
            / ((1-alpha)^((1-alpha)/2) (1+alpha)^((1+alpha)/2) + alpha sin(pi alpha/2)) ].

    Equals both components of sector_angles(alpha, c=1, n=1).
    """
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")
    half = 0.5 * math.pi * alpha
    denom = (1.0 - alpha) ** (0.5 * (1.0 - alpha)) * (1.0 + alpha) ** (
        0.5 * (1.0 + alpha)
    ) + alpha * math.sin(half)
    return half + math.atan(alpha * math.cos(half) / denom)
