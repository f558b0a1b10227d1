"""Numeric corroboration harness for the subordination machinery.

Nothing here proves anything: grids are finite and series are truncated,
so the checks can only corroborate or flag.  Reports therefore carry the
worst margin seen, not just a boolean, and every randomized sweep is
seeded.  The harness covers

  * starlikeness of Q(z) = alpha z g_c'(z)/g_c(z) via its closed form,
  * the close-to-convexity condition Re[g_c^alpha + n z Q'/Q] > 0,
  * the subordination implication on truncated series
    (hypothesis: transform values inside a region; conclusion:
    |arg q| < pi alpha / 2),
  * a winding-number membership oracle on the near-boundary curve
    R(rho e^{i theta}), used to cross-validate the graph-based image
    predicate,
  * a univalence spot check on random point pairs.

Grid sweeps are data-parallel over independent points; the curve used by
the winding oracle is cached per parameter set and treated as read-only.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core import InitialPoint, OpenDoorParams, principal_power
from .errors import IndeterminateError, ParameterError
from .functions import TruncatedSeries, eval_r, logderiv_transform
from .regions import ExactImage, Region, omega_union

__all__ = [
    "GridSpec",
    "VerificationReport",
    "check_starlike_q",
    "check_close_to_convex",
    "check_subordination",
    "winding_membership",
    "univalence_spot_check",
    "DEFAULT_RESOLUTION",
    "DEFAULT_RHO",
]

DEFAULT_RADII = (0.1, 0.3, 0.5, 0.7, 0.85, 0.95)
DEFAULT_ANGULAR_COUNT = 720
DEFAULT_RESOLUTION = 8192
DEFAULT_RHO = 1.0 - 2.0**-10
INDETERMINATE_DIST = 1e-6
_SAMPLE_CAP = 2**20
_HYPOTHESIS_KINDS = ("exact_image", "omega")


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid: circles of the given radii, angular_count points each."""

    radii: tuple[float, ...] = DEFAULT_RADII
    angular_count: int = DEFAULT_ANGULAR_COUNT

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if not radii:
            raise ParameterError("grid needs at least one radius")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ParameterError(f"radii must be strictly increasing, got {radii!r}")
        if not 0.0 < radii[0] and radii[-1] < 1.0:
            raise ParameterError(f"radii must lie in (0, 1), got {radii!r}")
        if self.angular_count < 1:
            raise ParameterError(f"angular_count must be positive, got {self.angular_count!r}")
        object.__setattr__(self, "radii", radii)

    def points(self):
        step = 2.0 * math.pi / self.angular_count
        for radius in self.radii:
            for k in range(self.angular_count):
                yield radius * cmath.exp(1j * step * k)

    @property
    def size(self) -> int:
        return len(self.radii) * self.angular_count


@dataclass
class VerificationReport:
    """Outcome of one sweep.

    A nonempty conclusion_failures list flags a counterexample *candidate*
    at truncation/grid scale, never a disproof.
    """

    checked: int
    hypothesis_failures: list = field(default_factory=list)
    conclusion_failures: list = field(default_factory=list)
    min_margin: float = math.inf
    tail_bound: float | None = None

    @property
    def passed(self) -> bool:
        return (
            not self.hypothesis_failures
            and not self.conclusion_failures
            and self.min_margin > 0.0
        )


def check_starlike_q(initial: InitialPoint, grid: GridSpec | None = None) -> VerificationReport:
    """Sweep Re[z Q'(z)/Q(z)] for Q(z) = alpha z g_c'(z)/g_c(z).

    The closed form

        z Q'/Q = ((c - conj(c) z)/(c + conj(c) z) + (1 + z)/(1 - z)) / 2

    averages two disk-to-right-half-plane maps, so the margin must stay
    positive; the report records the worst one.
    """
    grid = grid or GridSpec()
    c = initial.c
    cb = c.conjugate()
    report = VerificationReport(checked=0)
    for z in grid.points():
        value = 0.5 * ((c - cb * z) / (c + cb * z) + (1.0 + z) / (1.0 - z))
        report.checked += 1
        margin = value.real
        report.min_margin = min(report.min_margin, margin)
        if margin <= 0.0:
            report.conclusion_failures.append((z, margin))
    return report


def check_close_to_convex(params: OpenDoorParams, grid: GridSpec | None = None) -> VerificationReport:
    """Sweep Re[g_c(z)^alpha + n z Q'(z)/Q(z)], the closed form of
    z R'(z)/Q(z); positivity makes the door function close-to-convex and
    hence univalent."""
    grid = grid or GridSpec()
    c = params.initial.c
    cb = c.conjugate()
    report = VerificationReport(checked=0)
    for z in grid.points():
        power = principal_power((c + cb * z) / (1.0 - z), params.alpha)
        ratio = 0.5 * ((c - cb * z) / (c + cb * z) + (1.0 + z) / (1.0 - z))
        margin = (power + params.n * ratio).real
        report.checked += 1
        report.min_margin = min(report.min_margin, margin)
        if margin <= 0.0:
            report.conclusion_failures.append((z, margin))
    return report


def _check_hypothesis_class(params: OpenDoorParams, q: TruncatedSeries) -> None:
    lead = principal_power(params.initial.c, params.alpha)
    coeffs = q.coefficients
    if abs(coeffs[0] - lead) > 1e-12 * (1.0 + abs(lead)):
        raise ParameterError(
            f"series constant term {coeffs[0]!r} is not c^alpha = {lead!r}"
        )
    for k in range(1, min(params.n, len(coeffs))):
        if abs(coeffs[k]) > 1e-12:
            raise ParameterError(
                f"series coefficient {k} must vanish below order n = {params.n}"
            )


def check_subordination(
    params: OpenDoorParams,
    q: TruncatedSeries,
    grid: GridSpec | None = None,
    hypothesis: str = "exact_image",
) -> VerificationReport:
    """Test the subordination implication on a truncated series.

    At every grid point the transform w = q + z q'/q is tested against the
    chosen region (the exact image, or the certified union omega) and the
    conclusion margin pi alpha/2 - |arg q(z)| is recorded.  Failures of the
    two sides are reported separately; the implication predicts that an
    empty hypothesis list forces an empty conclusion list.
    """
    if hypothesis not in _HYPOTHESIS_KINDS:
        raise ParameterError(f"hypothesis must be one of {_HYPOTHESIS_KINDS}, got {hypothesis!r}")
    grid = grid or GridSpec()
    _check_hypothesis_class(params, q)
    region: Region = ExactImage(params) if hypothesis == "exact_image" else omega_union(params)
    half = 0.5 * math.pi * params.alpha
    report = VerificationReport(checked=0)
    for z in grid.points():
        w = logderiv_transform(q, z)
        if not region.contains(w):
            report.hypothesis_failures.append((z, w))
        value = q.eval(z)
        margin = half - abs(cmath.phase(value))
        report.checked += 1
        report.min_margin = min(report.min_margin, margin)
        if margin <= 0.0:
            report.conclusion_failures.append((z, cmath.phase(value)))
    report.tail_bound = max(q.tail_bound(r) for r in grid.radii)
    return report


def _eval_r_array(params: OpenDoorParams, z: np.ndarray) -> np.ndarray:
    # vectorized eval_r without domain checks; callers keep |z| < 1
    c = params.initial.c
    g = (c + np.conj(c) * z) / (1.0 - z)
    power = np.exp(params.alpha * np.log(g))
    rational = 2.0 * params.n * params.alpha * c.real * z / ((1.0 - z) * (c + np.conj(c) * z))
    return power + rational


@lru_cache(maxsize=16)
def _image_curve(params: OpenDoorParams, resolution: int, rho: float):
    """Sampled near-boundary curve R(rho e^{i theta}).

    The base grid is uniform with dyadic clustering toward the two angles
    where the boundary diverges (theta = 0 mod 2 pi, and the zero of
    c + conj(c) z at theta = pi + 2t), so the far excursions are already
    resolved and per-query refinement stays local.
    """
    step = 2.0 * math.pi / resolution
    thetas = [np.linspace(0.0, 2.0 * math.pi, resolution + 1)]
    extras = []
    for special in (0.0, 2.0 * math.pi, math.pi + 2.0 * params.initial.t):
        for j in range(1, 52):
            for sign in (1.0, -1.0):
                theta = special + sign * step * 2.0**-j
                if 0.0 < theta < 2.0 * math.pi:
                    extras.append(theta)
    thetas.append(np.array(extras))
    theta = np.unique(np.concatenate(thetas))
    values = _eval_r_array(params, rho * np.exp(1j * theta))
    return theta, values


def _wrap(angle: float) -> float:
    return (angle + math.pi) % (2.0 * math.pi) - math.pi


def winding_membership(
    params: OpenDoorParams,
    w: complex,
    resolution: int = DEFAULT_RESOLUTION,
    rho: float = DEFAULT_RHO,
) -> bool:
    """True iff the curve R(rho e^{i theta}) winds around w.

    Principal argument increments of R(z_k) - w are summed along the curve.
    A wrapped increment can never exceed pi, so refinement triggers at half
    that: any arc with |increment| >= pi/2 is bisected recursively (shared
    budget 2^20 samples).  Points within 1e-6 of the sampled polyline are
    refused as indeterminate.
    """
    if resolution < 8:
        raise ParameterError(f"resolution must be at least 8, got {resolution!r}")
    if not 0.0 < rho < 1.0:
        raise ParameterError(f"rho must lie in (0, 1), got {rho!r}")
    w = complex(w)
    theta, values = _image_curve(params, resolution, rho)
    delta = values - w
    if np.min(np.abs(delta)) < INDETERMINATE_DIST:
        raise IndeterminateError(
            f"{w!r} is within {INDETERMINATE_DIST} of the sampled boundary polyline"
        )
    angles = np.angle(delta)
    increments = np.diff(angles)
    increments = (increments + np.pi) % (2.0 * np.pi) - np.pi
    total = float(increments.sum())
    bad = np.nonzero(np.abs(increments) >= 0.5 * np.pi)[0]
    if bad.size:
        budget = [theta.size]

        def refine(t0: float, v0: complex, t1: float, v1: complex) -> float:
            increment = _wrap(cmath.phase(v1 - w) - cmath.phase(v0 - w))
            if abs(increment) < 0.5 * math.pi:
                return increment
            if budget[0] >= _SAMPLE_CAP:
                raise IndeterminateError(
                    f"refinement budget exhausted classifying {w!r}"
                )
            tm = 0.5 * (t0 + t1)
            vm = complex(_eval_r_array(params, np.asarray(rho * cmath.exp(1j * tm))))
            budget[0] += 1
            if abs(vm - w) < INDETERMINATE_DIST:
                raise IndeterminateError(
                    f"{w!r} is within {INDETERMINATE_DIST} of the refined polyline"
                )
            return refine(t0, v0, tm, vm) + refine(tm, vm, t1, v1)

        for k in bad:
            total -= float(increments[k])
            total += refine(
                float(theta[k]), complex(values[k]), float(theta[k + 1]), complex(values[k + 1])
            )
    return round(total / (2.0 * math.pi)) != 0


def univalence_spot_check(
    params: OpenDoorParams, pair_count: int, seed: int = 0
) -> bool:
    """Sample pair_count random pairs with |z| <= 0.98 and check that the
    door function separates them: |R(z1) - R(z2)| > 1e-12 (1 + |R(z1)|).
    Degenerate pairs (z1 == z2 to float precision) are skipped."""
    rng = random.Random(seed)

    def sample() -> complex:
        return 0.98 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())

    for _ in range(pair_count):
        z1, z2 = sample(), sample()
        if z1 == z2:
            continue
        r1 = eval_r(params, z1)
        r2 = eval_r(params, z2)
        if abs(r1 - r2) <= 1e-12 * (1.0 + abs(r1)):
            return False
    return True
