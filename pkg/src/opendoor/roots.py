"""Certified root of the boundary-minimum equation x^2 + A x^(1+alpha) = 1.

F(x) = x^2 + A x^(1+alpha) - 1 is strictly increasing on x > 0 with
F(0) = -1, so it has a unique positive root xi(A, alpha).  The closed-form
bracket

    (1+A)^(-1/(1+alpha))  <=  xi  <=  (1+A)^(-1/2)  <  1

(strict on the inside for alpha < 1) certifies the root; the solver bisects
the bracket down to width 1e-8 and then polishes with Newton steps, which
converge since F'(x) = 2x + (1+alpha) A x^alpha > 0 there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, ParameterError

__all__ = ["RootResult", "f_poly", "bracket", "solve_xi", "DEFAULT_TOL"]

DEFAULT_TOL = 1e-14
_BISECT_WIDTH = 1e-8
_MAX_ITER = 200


@dataclass(frozen=True)
class RootResult:
    """Root xi together with its certified bracket and residual |F(xi)|."""

    xi: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int


def _check_coeffs(A: float, alpha: float) -> None:
    if not (math.isfinite(A) and A > 0.0):
        raise ParameterError(f"A must be positive and finite, got {A!r}")
    if not (math.isfinite(alpha) and 0.0 < alpha <= 1.0):
        raise ParameterError(f"alpha must lie in (0, 1], got {alpha!r}")


def _pow_pos(x: float, p: float) -> float:
    # x**p as exp(p ln x); x = 0 is handled by the callers.
    return math.exp(p * math.log(x))


def f_poly(x: float, A: float, alpha: float) -> float:
    """Evaluate F(x) = x^2 + A x^(1+alpha) - 1 for x >= 0."""
    _check_coeffs(A, alpha)
    x = float(x)
    if x < 0.0:
        raise DomainError(f"F is only defined for x >= 0, got {x!r}")
    if x == 0.0:
        return -1.0
    return x * x + A * _pow_pos(x, 1.0 + alpha) - 1.0


def bracket(A: float, alpha: float) -> tuple[float, float]:
    """Closed-form bracket ((1+A)^(-1/(1+alpha)), (1+A)^(-1/2)) for the root.

    F is nonpositive at the lower end and nonnegative at the upper end,
    strictly so when alpha < 1; the endpoints coincide exactly at alpha = 1.
    """
    _check_coeffs(A, alpha)
    lo = (1.0 + A) ** (-1.0 / (1.0 + alpha))
    hi = (1.0 + A) ** -0.5
    if lo > hi:  # can only happen by an ulp when alpha is at 1
        lo = hi
    return lo, hi


def solve_xi(A: float, alpha: float, tol: float = DEFAULT_TOL) -> RootResult:
    """Solve F(x) = 0 to |F| <= tol inside the certified bracket."""
    _check_coeffs(A, alpha)
    if not tol > 0.0:
        raise ParameterError(f"tol must be positive, got {tol!r}")
    lo0, hi0 = bracket(A, alpha)
    lo, hi = lo0, hi0
    iterations = 0
    while hi - lo > _BISECT_WIDTH and iterations < _MAX_ITER:
        mid = 0.5 * (lo + hi)
        iterations += 1
        if f_poly(mid, A, alpha) < 0.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    fx = f_poly(x, A, alpha)
    while abs(fx) > tol and iterations < _MAX_ITER:
        slope = 2.0 * x + (1.0 + alpha) * A * _pow_pos(x, alpha)
        x -= fx / slope
        iterations += 1
        fx = f_poly(x, A, alpha)
    # Newton may step past a closed-form endpoint by an ulp; keep the
    # reported root inside the certified bracket.
    x = min(max(x, lo0), hi0)
    fx = f_poly(x, A, alpha)
    if abs(fx) > tol:
        raise ConvergenceError(
            f"|F(x)| = {abs(fx)!r} > tol = {tol!r} after {iterations} iterations"
        )
    return RootResult(x, lo0, hi0, fx, iterations)
