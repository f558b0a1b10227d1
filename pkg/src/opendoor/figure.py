"""CSV, SVG and JSON emission for the boundary curves and certified regions.

A figure job samples both boundary branches log-uniformly over a parameter
range and writes up to four files into a directory:

    boundary.csv   branch,x,u,v rows, both branches (2 * samples rows)
    regions.csv    region,kind,param1,param2 rows describing the union
    figure.svg     boundary polylines overlaid with the region outlines
    summary.json   strip bounds, angles/constants, root data

All numbers come straight from library calls; the emitters do no arithmetic
of their own beyond coordinate mapping, and the sampling is deterministic
so outputs are bit-stable across runs.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

import numpy as np

from .boundary import (
    certified_strip,
    lower_branch,
    sector_angles,
    u_cap,
    upper_branch,
    v_extrema,
)
from .core import OpenDoorParams, c_n_constant
from .errors import ParameterError
from .regions import window_bounds
from .roots import solve_xi

__all__ = ["FigureJob", "write_figure", "figure_summary"]

_ALL_OUTPUTS = frozenset({"csv", "svg", "json"})


@dataclass(frozen=True)
class FigureJob:
    """Sampling and output selection for one figure."""

    params: OpenDoorParams
    x_range: tuple[float, float] = (1e-3, 1e3)
    samples: int = 2000
    outputs: frozenset[str] = _ALL_OUTPUTS

    def __post_init__(self) -> None:
        lo, hi = (float(self.x_range[0]), float(self.x_range[1]))
        if not (0.0 < lo < hi):
            raise ParameterError(f"x_range must be positive and increasing, got {self.x_range!r}")
        object.__setattr__(self, "x_range", (lo, hi))
        if self.samples < 2:
            raise ParameterError(f"samples must be at least 2, got {self.samples!r}")
        outputs = frozenset(self.outputs)
        if not outputs or not outputs <= _ALL_OUTPUTS:
            raise ParameterError(f"outputs must be a nonempty subset of {sorted(_ALL_OUTPUTS)}")
        object.__setattr__(self, "outputs", outputs)


def _fmt(value: float) -> str:
    # shortest round-trip decimal; integers lose the trailing ".0"
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def _sample_xs(job: FigureJob) -> np.ndarray:
    lo, hi = job.x_range
    return np.exp(np.linspace(math.log(lo), math.log(hi), job.samples))


def figure_summary(params: OpenDoorParams) -> dict:
    """Everything the JSON summary reports, straight from library calls."""
    root = solve_xi(params.A, params.alpha)
    exact = v_extrema(params)
    certified = certified_strip(params)
    summary = {
        "alpha": params.alpha,
        "c_re": params.c.real,
        "c_im": params.c.imag,
        "n": params.n,
        "big_a": params.A,
        "xi": root.xi,
        "bracket_lo": root.bracket_lo,
        "bracket_hi": root.bracket_hi,
        "residual": root.residual,
        "strip_exact": [exact.lower, exact.upper],
        "strip_certified": [certified.lower, certified.upper],
        "u_cap": u_cap(params),
    }
    if params.alpha < 1.0:
        angles = sector_angles(params)
        summary.update(
            theta_plus=angles.theta_plus,
            theta_minus=angles.theta_minus,
            xi_plus=angles.xi_plus,
            xi_minus=angles.xi_minus,
            t_plus=angles.t_plus,
            t_minus=angles.t_minus,
        )
    else:
        lower, upper = window_bounds(params)
        summary.update(
            c_n=c_n_constant(params.initial, params.n),
            c_n_bar=c_n_constant(params.initial.conjugate(), params.n),
            window=[lower, upper],
        )
    return summary


def write_figure(job: FigureJob, out_dir: str) -> dict:
    """Write the selected outputs into out_dir and return the summary dict."""
    params = job.params
    os.makedirs(out_dir, exist_ok=True)
    xs = _sample_xs(job)
    upper = [upper_branch(params, float(x)) for x in xs]
    lower = [lower_branch(params, float(x)) for x in xs]
    summary = figure_summary(params)
    summary["x_range"] = list(job.x_range)
    summary["samples"] = job.samples

    if "csv" in job.outputs:
        _write_boundary_csv(os.path.join(out_dir, "boundary.csv"), upper, lower)
        _write_regions_csv(os.path.join(out_dir, "regions.csv"), params)
    if "svg" in job.outputs:
        _write_svg(os.path.join(out_dir, "figure.svg"), params, upper, lower, summary)
    if "json" in job.outputs:
        with open(os.path.join(out_dir, "summary.json"), "w") as handle:
            json.dump(summary, handle, indent=2, sort_keys=True)
            handle.write("\n")
    return summary


def _write_boundary_csv(path: str, upper, lower) -> None:
    with open(path, "w") as handle:
        handle.write("branch,x,u,v\n")
        for point in upper:
            handle.write(f"upper,{_fmt(point.x)},{_fmt(point.u)},{_fmt(point.v)}\n")
        for point in lower:
            handle.write(f"lower,{_fmt(point.x)},{_fmt(point.u)},{_fmt(point.v)}\n")


def _write_regions_csv(path: str, params: OpenDoorParams) -> None:
    strip = certified_strip(params)
    with open(path, "w") as handle:
        handle.write("region,kind,param1,param2\n")
        handle.write("omega1,half_plane_left,,\n")
        handle.write(f"omega2,strip,{_fmt(strip.lower)},{_fmt(strip.upper)}\n")
        handle.write(f"omega3,sector,{_fmt(0.5 * math.pi * params.alpha)},\n")


def _write_svg(path: str, params, upper, lower, summary) -> None:
    # viewport: certified strip plus a 20% margin, square aspect; the
    # divergent curve tails are clipped by the viewport, not dropped
    strip = certified_strip(params)
    height = strip.upper - strip.lower
    pad = 0.2 * height
    y_lo, y_hi = strip.lower - pad, strip.upper + pad
    half_w = 0.5 * (y_hi - y_lo)
    x_lo, x_hi = -half_w, half_w

    size = 640.0
    scale = size / (x_hi - x_lo)

    def to_px(u: float, v: float) -> tuple[float, float]:
        return (u - x_lo) * scale, (y_hi - v) * scale

    def polyline(points, color: str) -> str:
        coords = " ".join(f"{px:.2f},{py:.2f}" for px, py in points)
        return f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>'

    def line(u0, v0, u1, v1, color, dash="", width=1.0) -> str:
        (a, b), (c, d) = to_px(u0, v0), to_px(u1, v1)
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        return (
            f'<line x1="{a:.2f}" y1="{b:.2f}" x2="{c:.2f}" y2="{d:.2f}" '
            f'stroke="{color}" stroke-width="{width}"{dash_attr}/>'
        )

    elements = [
        f'<rect width="{size}" height="{size}" fill="white"/>',
        line(x_lo, 0.0, x_hi, 0.0, "#bbbbbb"),
        line(0.0, y_lo, 0.0, y_hi, "#bbbbbb"),
        line(x_lo, strip.lower, x_hi, strip.lower, "#2b6cb0", dash="6,4"),
        line(x_lo, strip.upper, x_hi, strip.upper, "#2b6cb0", dash="6,4"),
    ]
    half_angle = 0.5 * math.pi * params.alpha
    reach = 2.0 * (x_hi - x_lo)
    elements.append(
        line(0.0, 0.0, reach * math.cos(half_angle), reach * math.sin(half_angle), "#2f855a", dash="2,3")
    )
    elements.append(
        line(0.0, 0.0, reach * math.cos(half_angle), -reach * math.sin(half_angle), "#2f855a", dash="2,3")
    )
    if params.alpha == 1.0:
        lower_ray, upper_ray = summary["window"]
        elements.append(line(0.0, upper_ray, 0.0, y_hi + pad, "#c53030", width=3.0))
        elements.append(line(0.0, lower_ray, 0.0, y_lo - pad, "#c53030", width=3.0))
    else:
        elements.append(polyline([to_px(p.u, p.v) for p in upper], "#c53030"))
        elements.append(polyline([to_px(p.u, p.v) for p in lower], "#9b2c2c"))
    label = f"alpha={_fmt(params.alpha)} c={_fmt(params.c.real)}+{_fmt(params.c.imag)}i n={params.n}"
    elements.append(f'<text x="10" y="20" font-size="14" font-family="sans-serif">{label}</text>')

    body = "\n".join(elements)
    with open(path, "w") as handle:
        handle.write(
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{size:.0f}" height="{size:.0f}" viewBox="0 0 {size:.0f} {size:.0f}">\n'
        )
        handle.write(body)
        handle.write("\n</svg>\n")
