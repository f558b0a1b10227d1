"""Scalar complex primitives shared by the whole library.

Provides the principal power, the Mobius map g_c of the unit disk onto the
right half-plane, the classical slit constant C_n(c), and the two frozen
parameter bundles (`InitialPoint`, `OpenDoorParams`) every other module
consumes.  Derived quantities (modulus, argument, the constants a, b, A)
are computed once at construction and cached on the instances so all
modules see identical numbers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, ParameterError

__all__ = [
    "InitialPoint",
    "OpenDoorParams",
    "principal_power",
    "mobius_g",
    "c_n_constant",
]


def _finite_complex(w: complex, name: str) -> complex:
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise ParameterError(f"{name} must have finite components, got {w!r}")
    return w


def _check_n(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")
    return n


@dataclass(frozen=True)
class InitialPoint:
    """A base point c with Re c > 0, with modulus and argument cached.

    r = |c| and t = arg c in (-pi/2, pi/2) are fixed here at construction;
    downstream code must use the cached values rather than recomputing them,
    so no two modules can ever disagree about r or t.
    """

    c: complex
    r: float = field(init=False)
    t: float = field(init=False)

    def __post_init__(self) -> None:
        c = _finite_complex(self.c, "c")
        if not c.real > 0.0:
            raise ParameterError(
                f"initial point must have strictly positive real part, got {c!r}"
            )
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "r", abs(c))
        object.__setattr__(self, "t", math.atan2(c.imag, c.real))

    def conjugate(self) -> "InitialPoint":
        return InitialPoint(self.c.conjugate())


@dataclass(frozen=True)
class OpenDoorParams:
    """The parameter triple (alpha, c, n) plus its derived constants.

    a = cos(pi alpha / 2), b = sin(pi alpha / 2) and
    A = (2/n) |c|^alpha b cos(arg c) > 0.  At alpha = 1 the pair (a, b) is
    snapped to exactly (0, 1) so the degenerate boundary (u identically 0)
    comes out exact instead of picking up cos(pi/2) rounding.
    """

    alpha: float
    initial: InitialPoint
    n: int
    a: float = field(init=False)
    b: float = field(init=False)
    A: float = field(init=False)

    def __post_init__(self) -> None:
        alpha = float(self.alpha)
        if not (math.isfinite(alpha) and 0.0 < alpha <= 1.0):
            raise ParameterError(f"alpha must lie in (0, 1], got {self.alpha!r}")
        object.__setattr__(self, "alpha", alpha)
        if not isinstance(self.initial, InitialPoint):
            object.__setattr__(self, "initial", InitialPoint(complex(self.initial)))
        object.__setattr__(self, "n", _check_n(self.n))
        if alpha == 1.0:
            a, b = 0.0, 1.0
        else:
            half = 0.5 * math.pi * alpha
            a, b = math.cos(half), math.sin(half)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        ini = self.initial
        object.__setattr__(
            self, "A", (2.0 / self.n) * ini.r**alpha * b * math.cos(ini.t)
        )

    @classmethod
    def from_c(cls, alpha: float, c: complex, n: int) -> "OpenDoorParams":
        return cls(alpha, InitialPoint(complex(c)), n)

    @property
    def c(self) -> complex:
        return self.initial.c


def principal_power(w: complex, alpha: float) -> complex:
    """Principal branch of w**alpha, i.e. exp(alpha (ln |w| + i Arg w)).

    Arg is taken in (-pi, pi); w = 0 and the closed negative real axis are
    rejected.  For w in the right half-plane, |arg of the result| is exactly
    alpha |Arg w| < pi alpha / 2.
    """
    w = complex(w)
    if w == 0 or (w.imag == 0.0 and w.real <= 0.0):
        raise DomainError(f"principal power is undefined at {w!r}")
    return cmath.exp(alpha * cmath.log(w))


def mobius_g(initial: InitialPoint, z: complex) -> complex:
    """g_c(z) = (c + conj(c) z) / (1 - z), unit disk onto Re w > 0, g_c(0) = c."""
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"z must lie in the open unit disk, got |z| = {abs(z)!r}")
    c = initial.c
    return (c + c.conjugate() * z) / (1.0 - z)


def c_n_constant(initial: InitialPoint, n: int) -> float:
    """The slit endpoint constant (n / Re c) (|c| sqrt(2 Re c / n + 1) + Im c).

    Always positive; for real c it equals sqrt(n (n + 2c)).  The alpha = 1
    image is the window between -c_n_constant(c) and +c_n_constant(conj c).
    """
    _check_n(n)
    c = initial.c
    return (n / c.real) * (abs(c) * math.sqrt(2.0 * c.real / n + 1.0) + c.imag)
