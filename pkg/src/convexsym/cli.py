"""Command-line front end.

    convexsym compute  --family NAME [--param k=v ...] | --file PATH
                       [--gauge SPEC] [--out PATH]
    convexsym verify   --suite NAME [--samples N] [--seed S] [--csv PATH]
    convexsym diagram  --which alpha|dw --grid N --csv PATH --svg PATH

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.  The env
var ASYM_TOL overrides the default tolerance of the completeness predicates
reported by `compute`.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import complete as comp
from . import diagram as dia
from . import families as fam
from . import geom, symm, verify
from .errors import ConvexSymError, DomainError, ParseError
from .gauges import GaugeBody, make_gauge, minkowski_asymmetry

_FAMILY_PARAMS = {
    "triangle": {},
    "golden_house": {},
    "k_t": {"t": float},
    "regular_kgon": {"k": int},
    "s_cap": {"s": float},
    "k_min": {"s": float},
    "k_max": {"s": float},
    "k_rho": {"rho1": float, "rho2": float},
    "interpolate": {"s": float, "t": float},
    "hood": {"m": int},
}


def _parse_params(pairs, spec, family):
    out = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise ParseError(f"--param expects k=v, got {pair!r}")
        key, value = pair.split("=", 1)
        if key not in spec:
            raise ParseError(f"family {family!r} has no parameter {key!r} "
                             f"(expected {sorted(spec)})")
        try:
            out[key] = spec[key](value)
        except ValueError as exc:
            raise ParseError(f"bad value for {key!r}: {value!r}") from exc
    missing = set(spec) - set(out)
    if family == "hood":
        out.setdefault("m", 4096)
        missing.discard("m")
    if missing:
        raise ParseError(f"family {family!r} missing parameters {sorted(missing)}")
    return out


def make_body(family: str | None, params, file: str | None):
    """(label, polygon, optional bundled gauge) from a family spec or file."""
    if (family is None) == (file is None):
        raise ParseError("exactly one of --family/--file is required")
    if file is not None:
        return file, geom.read_polygon(file), None
    if family not in _FAMILY_PARAMS:
        raise ParseError(f"unknown family {family!r} "
                         f"(choose from {sorted(_FAMILY_PARAMS)})")
    kv = _parse_params(params, _FAMILY_PARAMS[family], family)
    label = family + "".join(f" {k}={v}" for k, v in sorted(kv.items()))
    if family == "hood":
        body, disk = fam.hood(**kv)
        return label, body, disk
    return label, getattr(fam, family)(**kv), None


def make_gauge_from_spec(spec: str, body: geom.ConvexPolygon,
                         bundled: GaugeBody | None) -> GaugeBody:
    """Gauge specs: file:PATH, disk[:m=N], c_lambda:lambda=X, inner, central,
    outer; `disk` reuses the hood's bundled model when present."""
    if spec.startswith("file:"):
        return make_gauge(geom.read_polygon(spec[5:]))
    name, _, rest = spec.partition(":")
    kv = dict(pair.split("=", 1) for pair in rest.split(",") if pair)
    if name == "disk":
        if bundled is not None and not kv:
            return bundled
        m = int(kv.get("m", 4096))
        ang = -np.pi / 2 + 2 * np.pi * np.arange(m + m % 2) / (m + m % 2)
        return make_gauge(geom.make_polygon(
            np.column_stack((np.cos(ang), np.sin(ang)))), symmetric=True)
    negK = geom.negate(body)
    if name == "c_lambda":
        return fam.c_lambda(body, float(kv.get("lambda", 1.0)))
    if name == "inner":
        return make_gauge(geom.intersect(body, negK))
    if name == "central":
        return make_gauge(geom.scale(geom.minkowski_sum(body, negK), 0.5))
    if name == "outer":
        return make_gauge(geom.hull_union(body, negK))
    raise ParseError(f"unknown gauge spec {spec!r}")


def cmd_compute(args) -> int:
    label, body, bundled = make_body(args.family, args.param, args.file)
    res = minkowski_asymmetry(body)
    K = geom.translate(body, -res.center)
    cross = symm.crossing_count(K)
    a, t = symm.alpha_tau(K)
    print(f"body: {label} ({body.n} vertices)")
    print(f"s = {res.s:.9f}")
    print(f"center = ({res.center[0]:.9f}, {res.center[1]:.9f})")
    print(f"alpha = {a:.9f}")
    print(f"tau = {t:.9f}")
    if cross.segments:
        print(f"crossings = -1 ({len(cross.points)} points, "
              f"{len(cross.segments)} overlap segments)")
    else:
        print(f"crossings = {len(cross.points)}")
    if args.gauge:
        C = make_gauge_from_spec(args.gauge, K, bundled)
        default_tol = comp.TOL_ARC if bundled is not None else comp.TOL_EXACT
        tol = float(os.environ.get("ASYM_TOL", default_tol))
        rep = comp.completeness_report(K, C, tol=tol)
        print(f"gauge: {args.gauge} ({C.body.n} vertices, tol {tol:g})")
        print(f"r = {rep.r:.9f}")
        print(f"R = {rep.R:.9f}")
        print(f"D = {rep.D:.9f}")
        print(f"w = {rep.w:.9f}")
        print(f"D/w = {rep.dw_ratio:.9f}")
        print(f"pseudo_complete = {rep.pseudo_complete}")
        print(f"complete = {rep.complete}")
        print(f"constant_width = {rep.constant_width}")
    if args.out:
        geom.write_polygon(K, args.out)
        print(f"wrote Minkowski-centered polygon to {args.out}")
    return 0


def cmd_verify(args) -> int:
    summary = verify.run_suite(args.suite, samples=args.samples, seed=args.seed)
    if args.csv:
        recs = verify.sample_records(args.samples, args.seed)
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(verify.CSV_HEADER + "\n")
            for rec in recs:
                fh.write(verify.record_csv_line(rec) + "\n")
    print(summary.render())
    return 0 if summary.ok else 1


def cmd_diagram(args) -> int:
    if args.which == "alpha":
        n = dia.write_alpha_diagram(args.csv, args.svg, args.grid)
    else:
        n = dia.write_dw_diagram(args.csv, args.svg, args.grid)
    print(f"wrote {n} scatter points to {args.csv} and {args.svg}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexsym",
                                description="planar symmetrization functionals "
                                            "and completeness verification")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="evaluate one body (and optional gauge)")
    pc.add_argument("--family", help="family name, e.g. k_max")
    pc.add_argument("--param", action="append", metavar="K=V",
                    help="family parameter, repeatable")
    pc.add_argument("--file", help="polygon JSON file")
    pc.add_argument("--gauge", help="gauge spec: file:PATH, disk[:m=N], "
                                    "c_lambda:lambda=X, inner, central, outer")
    pc.add_argument("--out", help="write the Minkowski-centered polygon here")
    pc.set_defaults(fn=cmd_compute)

    pv = sub.add_parser("verify", help="run a theorem-verification suite")
    pv.add_argument("--suite", required=True, choices=verify.SUITES)
    pv.add_argument("--samples", type=int, default=100,
                    help="number of random bodies (default 100)")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--csv", help="dump the evaluated sample records here")
    pv.set_defaults(fn=cmd_verify)

    pd = sub.add_parser("diagram", help="emit a region diagram as CSV + SVG")
    pd.add_argument("--which", required=True, choices=("alpha", "dw"))
    pd.add_argument("--grid", type=int, default=21)
    pd.add_argument("--csv", required=True)
    pd.add_argument("--svg", required=True)
    pd.set_defaults(fn=cmd_diagram)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    except ConvexSymError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
