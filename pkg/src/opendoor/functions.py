"""The generalized open-door function and its companions.

The central object is

    R(z) = g_c(z)^alpha + n alpha z g_c'(z) / g_c(z)
         = ((c + conj(c) z)/(1 - z))^alpha + 2 n alpha (Re c) z / ((1-z)(c + conj(c) z)),

a univalent function of the unit disk whose image is the admissible region
for the transform q + z q'/q.  This module evaluates R, its alpha = 1
partial-fraction form, the rotated variant of Kuroki-Owa type, and the
extremal function q(z) = g_c(z^n)^alpha, and provides truncated power
series (with Horner evaluation and the log-derivative transform) for the
verification harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import InitialPoint, OpenDoorParams, mobius_g, principal_power
from .errors import DomainError, EvaluationError, ParameterError

__all__ = [
    "TruncatedSeries",
    "eval_r",
    "eval_r_alpha1_closed",
    "kuroki_owa_r",
    "rotation_factor",
    "extremal_q",
    "extremal_transform",
    "gc_alpha_series",
    "extremal_series",
    "logderiv_transform",
    "DEFAULT_SERIES_DEGREE",
    "POLE_TOL",
]

DEFAULT_SERIES_DEGREE = 64
POLE_TOL = 1e-13


def _check_disk(z: complex) -> complex:
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"z must lie in the open unit disk, got |z| = {abs(z)!r}")
    return z


def eval_r(params: OpenDoorParams, z: complex) -> complex:
    """Evaluate R(z); R(0) = c^alpha exactly (both z factors vanish)."""
    z = _check_disk(z)
    c = params.initial.c
    g = (c + c.conjugate() * z) / (1.0 - z)
    rational = (
        2.0
        * params.n
        * params.alpha
        * c.real
        * z
        / ((1.0 - z) * (c + c.conjugate() * z))
    )
    return principal_power(g, params.alpha) + rational


def eval_r_alpha1_closed(initial: InitialPoint, n: int, z: complex) -> complex:
    """Partial-fraction form of the alpha = 1 door function:

        R(z) = (2 Re c + n)/(1 - z) - n/(1 + (conj(c)/c) z) - conj(c).

    Agrees with eval_r at alpha = 1 to machine precision.
    """
    z = _check_disk(z)
    c = initial.c
    return (2.0 * c.real + n) / (1.0 - z) - n / (1.0 + (c.conjugate() / c) * z) - c.conjugate()


def rotation_factor(initial: InitialPoint, n: int) -> complex:
    """omega = (c/|c|) sqrt(2 Re c / n + 1) + 1, the rotation parameter
    linking the Kuroki-Owa variant to the alpha = 1 door function."""
    c = initial.c
    return (c / abs(c)) * math.sqrt(2.0 * c.real / n + 1.0) + 1.0


def kuroki_owa_r(initial: InitialPoint, n: int, z: complex) -> complex:
    """Rotated alpha = 1 door function.

    With omega = rotation_factor(c, n) and zeta = 1 - 2/omega,

        R(z) = (2 n |c| / Re c) sqrt(2 Re c / n + 1)
               * (zeta - z)(1 - conj(zeta) z) / ((1 - conj(zeta) z)^2 - (zeta - z)^2)
               - (n Im c / Re c) i,

    and R(z) = eval_r_alpha1_closed(c, n, -omega z / conj(omega)).  The
    vertical shift carries the factor n; without it the rotation identity
    only holds at n = 1.
    """
    z = _check_disk(z)
    c = initial.c
    omega = rotation_factor(initial, n)
    zeta = 1.0 - 2.0 / omega
    zb = zeta.conjugate()
    numerator = (zeta - z) * (1.0 - zb * z)
    denominator = (1.0 - zb * z) ** 2 - (zeta - z) ** 2
    prefactor = (2.0 * n * abs(c) / c.real) * math.sqrt(2.0 * c.real / n + 1.0)
    return prefactor * numerator / denominator - 1j * n * c.imag / c.real


def extremal_q(params: OpenDoorParams, z: complex) -> complex:
    """The extremal solution q(z) = g_c(z^n)^alpha of the subordination
    problem; maps the disk into the sector |arg w| < pi alpha / 2."""
    z = _check_disk(z)
    return principal_power(mobius_g(params.initial, z**params.n), params.alpha)


def extremal_transform(params: OpenDoorParams, z: complex) -> complex:
    """q(z) + z q'(z)/q(z) for the extremal q, assembled in closed form.

    z q'/q = n alpha z^n g_c'(z^n)/g_c(z^n) with g_c'(w) = 2 Re c/(1-w)^2;
    the value equals eval_r(params, z^n) up to rounding.
    """
    z = _check_disk(z)
    zn = z**params.n
    c = params.initial.c
    g = mobius_g(params.initial, zn)
    logderiv = params.n * params.alpha * zn * (2.0 * c.real / ((1.0 - zn) * (1.0 - zn))) / g
    return principal_power(g, params.alpha) + logderiv


@dataclass(frozen=True)
class TruncatedSeries:
    """A finite power series c_0 + c_1 z + ... + c_M z^M.

    Evaluation of the series and of its derivative is by Horner's rule.
    `tail_bound` gives the rough geometric estimate |c_M| rad^M / (1 - rad)
    of the dropped tail, reported alongside harness results so truncation
    adequacy stays visible.
    """

    coefficients: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) == 0:
            raise ParameterError("a series needs at least its constant term")
        object.__setattr__(
            self, "coefficients", tuple(complex(v) for v in self.coefficients)
        )

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def eval(self, z: complex) -> complex:
        z = complex(z)
        acc = 0j
        for coeff in reversed(self.coefficients):
            acc = acc * z + coeff
        return acc

    def eval_derivative(self, z: complex) -> complex:
        z = complex(z)
        acc = 0j
        for k in range(self.degree, 0, -1):
            acc = acc * z + k * self.coefficients[k]
        return acc

    def tail_bound(self, radius: float) -> float:
        if not 0.0 <= radius < 1.0:
            raise DomainError(f"radius must lie in [0, 1), got {radius!r}")
        return abs(self.coefficients[-1]) * radius**self.degree / (1.0 - radius)


def logderiv_transform(q: TruncatedSeries, z: complex) -> complex:
    """q(z) + z q'(z)/q(z) for a truncated series, by Horner evaluation."""
    z = _check_disk(z)
    qv = q.eval(z)
    if abs(qv) < POLE_TOL:
        raise EvaluationError(f"log-derivative pole: |q({z!r})| = {abs(qv)!r}")
    return qv + z * q.eval_derivative(z) / qv


def gc_alpha_series(
    initial: InitialPoint, alpha: float, degree: int = DEFAULT_SERIES_DEGREE
) -> TruncatedSeries:
    """Taylor coefficients of g_c(z)^alpha at the origin.

    (log g_c)'(z) = 1/(1-z) + (q/(1 + q z)) with q = conj(c)/c is rational,
    so its coefficients are explicit and exp(alpha log g_c) follows from the
    standard exponential-of-a-series recurrence  (k+1) e_{k+1} =
    sum_j (j+1) s_{j+1} e_{k-j}.
    """
    if degree < 0:
        raise ParameterError(f"degree must be nonnegative, got {degree!r}")
    c = initial.c
    q = c.conjugate() / c
    # coefficients of (log g_c)', index 0..degree-1
    logderiv = []
    qpow = q
    sign = 1.0
    for _ in range(degree):
        logderiv.append(1.0 + sign * qpow)
        qpow *= q
        sign = -sign
    # s = alpha (log g_c - log c); s_0 = 0
    s = [0j] * (degree + 1)
    for k in range(1, degree + 1):
        s[k] = alpha * logderiv[k - 1] / k
    e = [1.0 + 0j] + [0j] * degree
    for k in range(degree):
        acc = 0j
        for j in range(k + 1):
            acc += (j + 1) * s[j + 1] * e[k - j]
        e[k + 1] = acc / (k + 1)
    lead = principal_power(c, alpha)
    return TruncatedSeries(tuple(lead * v for v in e))


def extremal_series(
    params: OpenDoorParams, degree: int = DEFAULT_SERIES_DEGREE
) -> TruncatedSeries:
    """Truncated extremal function q(z) = g_c(z^n)^alpha.

    The result is a hypothesis-class member: constant term c^alpha and the
    first nonzero higher coefficient at z^n.  `degree` counts powers of z,
    so the inner series is built to floor(degree / n).
    """
    if degree < 0:
        raise ParameterError(f"degree must be nonnegative, got {degree!r}")
    inner = gc_alpha_series(params.initial, params.alpha, degree // params.n)
    coeffs = [0j] * (params.n * inner.degree + 1)
    for k, v in enumerate(inner.coefficients):
        coeffs[k * params.n] = v
    return TruncatedSeries(tuple(coeffs))
