"""Open-set membership predicates for the certified regions and the image.

Every region here is open: boundary points test False.  The exact-image
predicate rests on the branch geometry: u = a (r x)^alpha is strictly
increasing along each boundary branch, so each branch is a graph over
u = Re w and membership for Re w > 0 reduces to comparing Im w against the
two branch heights at x(u) = (u/a)^(1/alpha) / r.  For alpha = 1 the image
degenerates to the window between -C_n(c) and C_n(conj c).  The graph
reduction is cross-validated against the winding-number oracle in the
verification module rather than trusted on its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boundary import StripBounds, _v_minus, _v_plus, certified_strip
from .core import OpenDoorParams, c_n_constant
from .errors import ParameterError

__all__ = [
    "Region",
    "Window",
    "HalfPlaneLeft",
    "Strip",
    "Sector",
    "RegionUnion",
    "ExactImage",
    "contains",
    "in_image",
    "omega_union",
    "window_bounds",
]

_EXP_OVERFLOW = 700.0  # beyond this exp() would overflow a double


class Region:
    """Base class; subclasses implement an open-set membership test."""

    def contains(self, w: complex) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Window(Region):
    """The plane minus the two closed vertical rays Im w <= lower and
    Im w >= upper of the imaginary axis."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            raise ParameterError(
                f"window requires lower < upper, got ({self.lower!r}, {self.upper!r})"
            )

    def contains(self, w: complex) -> bool:
        w = complex(w)
        return w.real != 0.0 or self.lower < w.imag < self.upper


@dataclass(frozen=True)
class HalfPlaneLeft(Region):
    """The open left half-plane Re w < 0."""

    def contains(self, w: complex) -> bool:
        return complex(w).real < 0.0


@dataclass(frozen=True)
class Strip(Region):
    """The open horizontal strip lower < Im w < upper."""

    bounds: StripBounds

    def contains(self, w: complex) -> bool:
        return self.bounds.lower < complex(w).imag < self.bounds.upper


@dataclass(frozen=True)
class Sector(Region):
    """The open sector Re w > 0, |arg w| < half_angle, half_angle in (0, pi/2]."""

    half_angle: float

    def __post_init__(self) -> None:
        if not 0.0 < self.half_angle <= 0.5 * math.pi:
            raise ParameterError(
                f"sector half-angle must lie in (0, pi/2], got {self.half_angle!r}"
            )

    def contains(self, w: complex) -> bool:
        w = complex(w)
        return w.real > 0.0 and abs(math.atan2(w.imag, w.real)) < self.half_angle


@dataclass(frozen=True)
class RegionUnion(Region):
    """Union of member regions."""

    members: tuple[Region, ...]

    def contains(self, w: complex) -> bool:
        w = complex(w)
        return any(member.contains(w) for member in self.members)


@dataclass(frozen=True)
class ExactImage(Region):
    """The open image of the door function for the given parameters."""

    params: OpenDoorParams

    def contains(self, w: complex) -> bool:
        return in_image(self.params, w)


def contains(region: Region, w: complex) -> bool:
    """Membership dispatch; True iff w lies in the open region."""
    return region.contains(w)


def window_bounds(params: OpenDoorParams) -> tuple[float, float]:
    """(-C_n(c), C_n(conj c)), the window of the alpha = 1 image."""
    ini = params.initial
    return (
        -c_n_constant(ini, params.n),
        c_n_constant(ini.conjugate(), params.n),
    )


def _x_from_u(params: OpenDoorParams, u: float) -> float:
    # invert u = a (r x)^alpha; exp/log keeps the inversion monotone and
    # stable for small alpha, saturating instead of overflowing
    ln_x = math.log(u / params.a) / params.alpha - math.log(params.initial.r)
    if ln_x > _EXP_OVERFLOW:
        return math.inf
    return math.exp(ln_x)


def in_image(params: OpenDoorParams, w: complex) -> bool:
    """True iff w lies in the open image of the door function.

    Re w <= 0 is always interior (the boundary lives strictly in Re w > 0
    when alpha < 1, and the left half-plane is contained in the image).
    """
    w = complex(w)
    if params.alpha == 1.0:
        lower, upper = window_bounds(params)
        return Window(lower, upper).contains(w)
    if w.real <= 0.0:
        return True
    x = _x_from_u(params, w.real)
    if x == 0.0 or math.isinf(x):
        # u beyond double range on either side: branch heights are +/- inf
        return True
    return _v_minus(params, x) < w.imag < _v_plus(params, x)


def omega_union(params: OpenDoorParams) -> RegionUnion:
    """The certified union: left half-plane, certified strip, and the
    symmetric sector of half-angle pi alpha / 2.  Every member point lies
    in the image; at alpha = 1 the union equals the window exactly."""
    return RegionUnion(
        (
            HalfPlaneLeft(),
            Strip(certified_strip(params)),
            Sector(0.5 * math.pi * params.alpha),
        )
    )
