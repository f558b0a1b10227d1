"""Shared random generators for the test suite (always seeded by callers)."""

from __future__ import annotations

import cmath
import math
import random

from opendoor import InitialPoint, OpenDoorParams


def random_initial(
    rng: random.Random,
    re_range: tuple[float, float] = (0.1, 5.0),
    im_range: tuple[float, float] = (-5.0, 5.0),
) -> InitialPoint:
    return InitialPoint(complex(rng.uniform(*re_range), rng.uniform(*im_range)))


def random_params(
    rng: random.Random,
    alpha_range: tuple[float, float] = (0.05, 0.95),
    re_range: tuple[float, float] = (0.1, 5.0),
    im_range: tuple[float, float] = (-5.0, 5.0),
    n_max: int = 8,
) -> OpenDoorParams:
    return OpenDoorParams(
        rng.uniform(*alpha_range),
        random_initial(rng, re_range, im_range),
        rng.randint(1, n_max),
    )


def random_disk_point(rng: random.Random, radius: float = 0.95) -> complex:
    return radius * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
