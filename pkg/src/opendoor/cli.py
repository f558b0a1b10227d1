"""Command-line surface.

Subcommands: eval (door function value), root (certified root of the
minimum equation), region (membership queries), figure (CSV/SVG/JSON
emission), verify (corroboration sweeps).

Exit codes: 0 ok, 1 verification failure, 2 bad parameters, 3 point outside
an operation's domain, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

from .boundary import certified_strip, sector_angles
from .core import InitialPoint, OpenDoorParams
from .errors import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    IndeterminateError,
    ParameterError,
)
from .figure import FigureJob, write_figure
from .functions import eval_r, extremal_series, TruncatedSeries, principal_power
from .regions import (
    Sector,
    Strip,
    Window,
    contains,
    in_image,
    omega_union,
    window_bounds,
)
from .roots import solve_xi
from .verify import (
    DEFAULT_RESOLUTION,
    DEFAULT_RHO,
    GridSpec,
    check_starlike_q,
    check_subordination,
    univalence_spot_check,
    winding_membership,
)

__all__ = ["main", "run", "parse_complex"]

_VERIFY_SERIES_DEGREE = 256  # extremal truncation with headroom at radius 0.95


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' / 'a-bi' with optional parts ('3', '2i', '-i', '1+i')."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    if s[-1] in "iI":
        body = s[:-1]
        re_part, im_part = "", body
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE":
                re_part, im_part = body[:k], body[k:]
                break
        if im_part in ("", "+"):
            imag = 1.0
        elif im_part == "-":
            imag = -1.0
        else:
            imag = float(im_part)
        real = float(re_part) if re_part else 0.0
        return complex(real, imag)
    return complex(float(s), 0.0)


def _complex_flag(flag: str):
    def parse(text: str) -> complex:
        try:
            return parse_complex(text)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"{flag} expects a complex literal like '4+3i', got {text!r}"
            )

    return parse


def _fmt(value: float) -> str:
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def _params(args) -> OpenDoorParams:
    return OpenDoorParams.from_c(args.alpha, args.c, args.n)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _cmd_eval(args) -> int:
    value = eval_r(_params(args), args.z)
    if args.json:
        _emit({"re": value.real, "im": value.imag})
    else:
        print(f"{_fmt(value.real)} {_fmt(value.imag)}")
    return 0


def _cmd_root(args) -> int:
    result = solve_xi(args.A, args.alpha, args.tol)
    _emit(
        {
            "xi": result.xi,
            "bracket_lo": result.bracket_lo,
            "bracket_hi": result.bracket_hi,
            "residual": result.residual,
            "iterations": result.iterations,
        }
    )
    return 0


def _cmd_region(args) -> int:
    params = _params(args)
    w = args.w
    bounds = None
    extra: dict = {}
    if args.which == "image":
        member = in_image(params, w)
    elif args.which == "omega":
        member = contains(omega_union(params), w)
    elif args.which == "strip":
        strip = certified_strip(params)
        member = contains(Strip(strip), w)
        bounds = (strip.lower, strip.upper)
    elif args.which == "sector":
        member = contains(Sector(0.5 * math.pi * params.alpha), w)
        if params.alpha < 1.0:
            angles = sector_angles(params)
            extra.update(theta_plus=angles.theta_plus, theta_minus=angles.theta_minus)
    else:  # window
        if params.alpha != 1.0:
            raise DomainError("the window region is defined only for alpha = 1")
        lower, upper = window_bounds(params)
        member = contains(Window(lower, upper), w)
        bounds = (lower, upper)
    if args.json:
        payload = {"which": args.which, "member": member, **extra}
        if bounds is not None:
            payload["bounds"] = list(bounds)
        _emit(payload)
    else:
        text = "true" if member else "false"
        if bounds is not None:
            text += f" bounds={_fmt(bounds[0])},{_fmt(bounds[1])}"
        print(text)
    return 0


def _cmd_figure(args) -> int:
    outputs = frozenset(s.strip() for s in args.outputs.split(",") if s.strip())
    job = FigureJob(
        params=_params(args),
        x_range=(args.x_min, args.x_max),
        samples=args.samples,
        outputs=outputs,
    )
    summary = write_figure(job, args.out)
    if args.json:
        _emit(summary)
    else:
        print(f"wrote {', '.join(sorted(outputs))} to {args.out}")
    return 0


def _verify_starlike(params, report_to) -> bool:
    report = check_starlike_q(params.initial)
    report_to["starlike"] = {
        "checked": report.checked,
        "min_margin": report.min_margin,
        "failures": len(report.conclusion_failures),
        "passed": report.passed,
    }
    return report.passed


def _verify_subordination(params, report_to) -> bool:
    runs = {
        "extremal_vs_exact_image": (
            extremal_series(params, _VERIFY_SERIES_DEGREE * params.n),
            "exact_image",
        ),
        "constant_vs_omega": (
            TruncatedSeries((principal_power(params.c, params.alpha),)),
            "omega",
        ),
    }
    passed = True
    section = {}
    for name, (series, hypothesis) in runs.items():
        report = check_subordination(params, series, hypothesis=hypothesis)
        section[name] = {
            "checked": report.checked,
            "hypothesis_failures": len(report.hypothesis_failures),
            "conclusion_failures": len(report.conclusion_failures),
            "min_margin": report.min_margin,
            "tail_bound": report.tail_bound,
            "passed": report.passed,
        }
        passed = passed and report.passed
    report_to["subordination"] = section
    return passed


def _verify_winding(params, args, report_to) -> bool:
    rng = random.Random(args.seed)
    disagreements = 0
    skipped = 0
    checked = 0
    for _ in range(args.points):
        w = complex(rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0))
        try:
            oracle = winding_membership(params, w, resolution=args.resolution, rho=args.rho)
        except IndeterminateError:
            skipped += 1
            continue
        checked += 1
        if oracle != in_image(params, w):
            disagreements += 1
    report_to["winding"] = {
        "checked": checked,
        "skipped": skipped,
        "disagreements": disagreements,
        "passed": disagreements == 0,
    }
    return disagreements == 0


def _verify_univalence(params, args, report_to) -> bool:
    ok = univalence_spot_check(params, args.pairs, seed=args.seed)
    report_to["univalence"] = {"pairs": args.pairs, "passed": ok}
    return ok


def _cmd_verify(args) -> int:
    params = _params(args)
    checks = {}
    passed = True
    suites = ("starlike", "subordination", "winding", "univalence") if args.suite == "all" else (args.suite,)
    for suite in suites:
        if suite == "starlike":
            passed = _verify_starlike(params, checks) and passed
        elif suite == "subordination":
            passed = _verify_subordination(params, checks) and passed
        elif suite == "winding":
            passed = _verify_winding(params, args, checks) and passed
        else:
            passed = _verify_univalence(params, args, checks) and passed
    _emit(
        {
            "alpha": params.alpha,
            "c_re": params.c.real,
            "c_im": params.c.imag,
            "n": params.n,
            "seed": args.seed,
            "suite": args.suite,
            "checks": checks,
            "passed": passed,
        }
    )
    return 0 if passed else 1


def _add_param_flags(parser, default_alpha=0.5, default_c=1 + 0j, default_n=1):
    parser.add_argument("--alpha", type=float, default=default_alpha, help="exponent in (0, 1]")
    parser.add_argument(
        "--c", type=_complex_flag("--c"), default=default_c, help="initial point, Re c > 0 (a+bi)"
    )
    parser.add_argument("--n", type=int, default=default_n, help="series order, n >= 1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opendoor",
        description="Generalized open-door functions: evaluation, regions, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the door function at a point")
    _add_param_flags(p_eval)
    p_eval.add_argument("--z", type=_complex_flag("--z"), required=True, help="point with |z| < 1")
    p_eval.add_argument("--json", action="store_true")
    p_eval.set_defaults(func=_cmd_eval)

    p_root = sub.add_parser("root", help="solve x^2 + A x^(1+alpha) = 1")
    p_root.add_argument("--A", type=float, required=True, dest="A")
    p_root.add_argument("--alpha", type=float, required=True)
    p_root.add_argument("--tol", type=float, default=1e-14)
    p_root.add_argument("--json", action="store_true")
    p_root.set_defaults(func=_cmd_root)

    p_region = sub.add_parser("region", help="region membership queries")
    _add_param_flags(p_region)
    p_region.add_argument(
        "--which",
        choices=("image", "omega", "strip", "sector", "window"),
        required=True,
    )
    p_region.add_argument("--w", type=_complex_flag("--w"), required=True, help="query point (a+bi)")
    p_region.add_argument("--json", action="store_true")
    p_region.set_defaults(func=_cmd_region)

    p_figure = sub.add_parser("figure", help="emit boundary/region CSV, SVG and JSON files")
    _add_param_flags(p_figure)
    p_figure.add_argument("--x-min", type=float, default=1e-3)
    p_figure.add_argument("--x-max", type=float, default=1e3)
    p_figure.add_argument("--samples", type=int, default=2000)
    p_figure.add_argument("--out", default=".", help="output directory")
    p_figure.add_argument("--outputs", default="csv,svg,json", help="comma list of csv,svg,json")
    p_figure.add_argument("--json", action="store_true", help="also print the summary JSON")
    p_figure.set_defaults(func=_cmd_figure)

    p_verify = sub.add_parser("verify", help="run corroboration sweeps")
    _add_param_flags(p_verify)
    p_verify.add_argument(
        "--suite",
        choices=("starlike", "subordination", "winding", "univalence", "all"),
        default="all",
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--points", type=int, default=2000, help="winding sample count")
    p_verify.add_argument("--pairs", type=int, default=10000, help="univalence pair count")
    p_verify.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    p_verify.add_argument("--rho", type=float, default=DEFAULT_RHO, help="winding curve radius")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: bad parameters: {exc}", file=sys.stderr)
        return 2
    except (DomainError, EvaluationError, IndeterminateError) as exc:
        print(f"error: out of domain: {exc}", file=sys.stderr)
        return 3
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: i/o failure: {exc}", file=sys.stderr)
        return 4


def run() -> None:
    sys.exit(main())
