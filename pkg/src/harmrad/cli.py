"""``harmrad`` command line: radii, the truncated fully-convex grid, verification suites and boundary plots.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import radii
from .psi import CATALOG, CLOSED_FORM_KINDS, PsiSpec, convexity_radius, has_closed_convexity_bound
from .solve import NumericalFailure
from .verify import (
    DilatationSpec,
    build_harmonic,
    close_to_convex_probe,
    counterexample_suite,
    fully_convex_margin,
    fully_starlike_margin,
    identity_map,
    sense_preserving_margin,
    table1,
    verification_matrix,
)

EXIT_USAGE, EXIT_NUMERIC, EXIT_VERIFY = 1, 2, 3
DEFAULT_SAMPLES = 2048
MIN_SAMPLES = 64
INTERIOR_CIRCLES = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- radius dispatch -------------------------------------------------------------

def _radius(theorem, spec, a):
    if theorem == "univalence":
        return radii.univalence_radius(spec)
    if theorem == "fully-starlike":
        return radii.fully_starlike_radius(spec, a.beta, majorant=a.majorant)
    if theorem == "fully-starlike-improved":
        return radii.fully_starlike_radius_improved(spec, a.beta)
    if theorem == "fully-starlike-sp":
        return radii.fully_starlike_radius_improved(spec, a.beta, sense_preserving=True)
    if theorem == "fully-convex":
        return radii.fully_convex_radius(spec, a.beta, a.reading, majorant=a.majorant, k_max=a.k_max)
    if theorem.startswith("bernardi-"):
        return radii.bernardi_radius(spec, a.beta, theorem[len("bernardi-") :].replace("-", "_"), majorant=a.majorant)
    if theorem in ("uniformly-starlike", "uniformly-convex"):
        return radii.uniform_radius(spec, theorem.split("-")[1], majorant=a.majorant)
    if theorem == "strongly-starlike":
        if a.alpha is None:
            raise UsageError("strongly-starlike needs --alpha")
        return radii.strongly_starlike_radius(spec, a.alpha, majorant=a.majorant)
    if theorem == "close-to-convex":
        return radii.close_to_convex_radius("general", spec=spec)
    if theorem == "close-to-convex-lemniscate":
        return radii.close_to_convex_radius("lemniscate")
    if theorem == "close-to-convex-sg":
        return radii.close_to_convex_radius("sigmoid_sg")
    if theorem == "close-to-convex-monomial":
        if a.n is None:
            raise UsageError("close-to-convex-monomial needs --n")
        return radii.close_to_convex_radius("monomial", n=a.n)
    if theorem == "convexity":
        return convexity_radius(spec)
    raise UsageError(f"unknown theorem {theorem!r}")


THEOREMS = (
    "univalence",
    "fully-starlike",
    "fully-starlike-improved",
    "fully-starlike-sp",
    "fully-convex",
    "bernardi-fully-starlike",
    "bernardi-fully-convex",
    "bernardi-uniformly-starlike",
    "uniformly-starlike",
    "uniformly-convex",
    "strongly-starlike",
    "close-to-convex",
    "close-to-convex-lemniscate",
    "close-to-convex-monomial",
    "close-to-convex-sg",
    "convexity",
)


def radius_record(theorem, spec, a):
    res = _radius(theorem, spec, a)
    rec = res.to_record()
    if theorem == "fully-convex":
        rec["readings"] = {
            reading: radii.fully_convex_radius(spec, a.beta, reading, majorant=a.majorant, k_max=a.k_max).value
            for reading in radii.READINGS
        }
    return rec


# -- formatting ------------------------------------------------------------------

def _json(obj):
    return json.dumps(obj, indent=2, allow_nan=True) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _cell(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return v


def format_records(records, fmt):
    if fmt == "json":
        return _json(records if len(records) != 1 else records[0])
    if fmt == "csv":
        header = list(records[0].keys())
        return _csv(header, [[_cell(r.get(k, "")) for k in header] for r in records])
    if fmt == "text":
        lines = []
        for r in records:
            lines.append("  ".join(f"{k}={_cell(v)}" for k, v in r.items()))
        return "\n".join(lines) + "\n"
    raise UsageError(f"format {fmt!r} not available here")


# -- plots -----------------------------------------------------------------------

def plot_curves(f, r, samples):
    """(curve_id, radius, theta, w) for 8 interior circles and the boundary circle |z| = r."""
    if not 0.0 < r < 1.0:
        raise UsageError(f"plot radius must lie in (0, 1), got {r}")
    theta = 2.0 * math.pi * np.arange(samples) / samples
    out = []
    for j in range(INTERIOR_CIRCLES + 1):
        rho = r * (j + 1) / (INTERIOR_CIRCLES + 1)
        out.append((j, rho, theta, f(rho * np.exp(1j * theta))))
    return out


def curves_csv(curves):
    buf = io.StringIO()
    buf.write("curve_id,theta,re,im\n")
    for cid, _, theta, w in curves:
        for t, x, y in zip(theta, w.real, w.imag):
            buf.write(f"{cid},{t:.12f},{x:.12f},{y:.12f}\n")
    return buf.getvalue()


def curves_svg(curves):
    """One closed path per circle, scaled into a unit-square viewBox."""
    pts = np.concatenate([w for _, _, _, w in curves])
    lo_x, hi_x = pts.real.min(), pts.real.max()
    lo_y, hi_y = pts.imag.min(), pts.imag.max()
    span = max(hi_x - lo_x, hi_y - lo_y) or 1.0
    pad = 0.05
    scale = (1.0 - 2 * pad) / span
    cx, cy = 0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1" width="600" height="600">',
        '<rect x="0" y="0" width="1" height="1" fill="white"/>',
    ]
    for cid, _, _, w in curves:
        x = 0.5 + (w.real - cx) * scale
        y = 0.5 - (w.imag - cy) * scale
        d = "M" + " L".join(f"{a:.6f},{b:.6f}" for a, b in zip(x, y)) + " Z"
        width = "0.004" if cid == INTERIOR_CIRCLES else "0.002"
        lines.append(f'<path id="c{cid}" d="{d}" fill="none" stroke="black" stroke-width="{width}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


PRESETS = {
    # name: (psi, dilatation, coupling, radius)
    "figure2-left": ("lemniscate", "identity", "product", 0.238778),
    "figure2-right": ("lemniscate", "identity", "product", 0.3524),
    "figure3": ("kappa-exp", "monomial:1,0", "product", 0.195106),
}


def emit_plot(f, r, samples, fmt):
    if samples < MIN_SAMPLES:
        raise UsageError(f"samples must be at least {MIN_SAMPLES}")
    curves = plot_curves(f, r, samples)
    if fmt == "csv":
        return curves_csv(curves)
    if fmt == "svg":
        return curves_svg(curves)
    raise UsageError("plot format must be csv or svg")


# -- commands --------------------------------------------------------------------

def _psi_arg(text):
    try:
        return PsiSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _phi_arg(text):
    try:
        return DilatationSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _grid_arg(text):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 512,1024, got {text!r}") from None
    if a < 1 or b < 8:
        raise argparse.ArgumentTypeError("grid counts too small")
    return a, b


def cmd_radius(a):
    rec = radius_record(a.theorem, a.psi, a)
    return format_records([rec], a.format or "text"), 0


def cmd_table1(a):
    rows = table1(a.psi)
    fmt = a.format or "csv"
    cols = ["S5", "S10", "S20", "Sinf"]
    if fmt == "csv":
        return _csv(["beta"] + cols, [[f"{b:g}"] + [f"{v:.12f}" for v in vals] for b, vals in rows]), 0
    recs = [dict(beta=b, **dict(zip(cols, vals))) for b, vals in rows]
    return format_records(recs, fmt), 0


def _margin(check, f, r, beta, grid):
    if check == "sense-preserving":
        return sense_preserving_margin(f, r, grid)
    if check == "fully-starlike":
        return fully_starlike_margin(f, r, beta, grid)
    if check == "fully-convex":
        return fully_convex_margin(f, r, beta, grid)
    if check == "close-to-convex":
        return close_to_convex_probe(f, r, grid=grid)
    raise UsageError(f"unknown check {check!r}")


DEFAULT_CHECK_RADIUS = {
    "sense-preserving": lambda spec, beta: radii.univalence_radius(spec).value,
    "fully-starlike": lambda spec, beta: radii.fully_starlike_radius(spec, beta).value,
    "fully-convex": lambda spec, beta: radii.fully_convex_radius(spec, beta).value,
    "close-to-convex": lambda spec, beta: radii.close_to_convex_radius("general", spec=spec).value,
}


def cmd_verify(a):
    if a.suite == "matrix":
        reports = verification_matrix(grid=a.grid or (512, 512))
    else:
        f = build_harmonic(a.psi, a.dilatation, a.coupling, r_max=max(0.5, a.radius or 0.0))
        r = a.radius if a.radius is not None else 0.99 * DEFAULT_CHECK_RADIUS[a.check](a.psi, a.beta)
        reports = [_margin(a.check, f, r, a.beta, a.grid or (512, 1024))]
    recs = [rep.to_record() for rep in reports]
    code = 0 if all(rep.as_expected for rep in reports) else EXIT_VERIFY
    return format_records(recs, a.format or "text"), code


def cmd_counterexamples(a):
    reports = counterexample_suite(grid=a.grid or (1024, 1024))
    code = 0 if all(rep.as_expected for rep in reports) else EXIT_VERIFY
    return format_records([rep.to_record() for rep in reports], a.format or "text"), code


def cmd_plot(a):
    if a.preset:
        psi, phi, coupling, r = PRESETS[a.preset]
        spec, phi, r = PsiSpec.parse(psi), DilatationSpec.parse(phi), a.radius or r
    else:
        spec, phi, coupling, r = a.psi, a.dilatation, a.coupling, a.radius
        if r is None:
            raise UsageError("plot needs --radius or --preset")
    if not 0.0 < r < 1.0:
        raise UsageError(f"plot radius must lie in (0, 1), got {r}")
    if a.identity:
        f = identity_map()
    else:
        f = build_harmonic(spec, phi, coupling, r_max=r)
    return emit_plot(f, r, a.samples, a.format or "csv"), 0


def cmd_list_psi(a):
    recs = [
        {
            "name": s.name,
            "kind": s.kind,
            "params": list(s.params),
            "closed_hpsi_prime": s.kind in CLOSED_FORM_KINDS,
            "closed_convexity_bound": has_closed_convexity_bound(s),
        }
        for s in CATALOG
    ]
    return format_records(recs, a.format or "text"), 0


def build_parser():
    p = _Parser(prog="harmrad", description="Radius constants for harmonic maps with Ma-Minda analytic part.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats):
        sp.add_argument("--format", choices=formats)
        sp.add_argument("--output", "-o", help="write here instead of stdout")

    r = sub.add_parser("radius", help="compute one radius")
    r.add_argument("--theorem", required=True, choices=THEOREMS)
    r.add_argument("--psi", type=_psi_arg, default=PsiSpec.janowski(1, -1))
    r.add_argument("--beta", type=float, default=0.0)
    r.add_argument("--alpha", type=float)
    r.add_argument("--reading", choices=radii.READINGS, default=radii.PROOF_CONSISTENT)
    r.add_argument("--majorant", action="store_true", help="use |a_n| instead of the signed coefficients")
    r.add_argument("--k-max", type=int, dest="k_max", help="truncate coefficient sums at n = k_max + 1")
    r.add_argument("--n", type=int, help="monomial power for close-to-convex-monomial")
    common(r, ("json", "csv", "text"))
    r.set_defaults(run=cmd_radius)

    t = sub.add_parser("table1", help="truncated fully-convex roots (table reading)")
    t.add_argument("--psi", type=_psi_arg, default=PsiSpec.kappa_exp())
    common(t, ("json", "csv", "text"))
    t.set_defaults(run=cmd_table1)

    v = sub.add_parser("verify", help="sample geometric margins")
    v.add_argument("--suite", choices=("single", "matrix"), default="single")
    v.add_argument("--psi", type=_psi_arg, default=PsiSpec.lemniscate())
    v.add_argument("--dilatation", type=_phi_arg, default=DilatationSpec.identity())
    v.add_argument("--coupling", choices=("product", "derivative"), default="product")
    v.add_argument("--check", choices=tuple(DEFAULT_CHECK_RADIUS), default="sense-preserving")
    v.add_argument("--radius", type=float, help="override the computed radius (default 0.99 x radius)")
    v.add_argument("--beta", type=float, default=0.0)
    v.add_argument("--grid", type=_grid_arg)
    common(v, ("json", "csv", "text"))
    v.set_defaults(run=cmd_verify)

    pl = sub.add_parser("plot", help="image curves of circles")
    pl.add_argument("--preset", choices=tuple(PRESETS))
    pl.add_argument("--identity", action="store_true", help="plot the identity map h = z, g = 0")
    pl.add_argument("--psi", type=_psi_arg, default=PsiSpec.lemniscate())
    pl.add_argument("--dilatation", type=_phi_arg, default=DilatationSpec.identity())
    pl.add_argument("--coupling", choices=("product", "derivative"), default="product")
    pl.add_argument("--radius", type=float)
    pl.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    common(pl, ("csv", "svg"))
    pl.set_defaults(run=cmd_plot)

    lp = sub.add_parser("list-psi", help="list catalog generators")
    common(lp, ("json", "csv", "text"))
    lp.set_defaults(run=cmd_list_psi)

    ce = sub.add_parser("counterexamples", help="F, G and Lambda_{0,1}[K] witnesses")
    ce.add_argument("--grid", type=_grid_arg)
    common(ce, ("json", "csv", "text"))
    ce.set_defaults(run=cmd_counterexamples)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", DEFAULT_SAMPLES) < MIN_SAMPLES:
        parser.error(f"--samples must be at least {MIN_SAMPLES}")
    try:
        text, code = args.run(args)
    except UsageError as exc:
        parser.error(str(exc))
    except NumericalFailure as exc:
        print(f"harmrad: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        parser.error(str(exc))
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"harmrad: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
