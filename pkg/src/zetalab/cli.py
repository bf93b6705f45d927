"""Command-line front end.

    zetalab eval --sigma 0.5 --t 14.134725 --method eta
    zetalab zeros --t-min 10 --t-max 30
    zetalab psi-scan --sigma 0.75 --t 2 --N 64 128 256 512
    zetalab region --t-min 3 --t-max 50
    zetalab bernoulli --k-max 12
    zetalab em-table --sigma 0.75 --t 10 --N 100 200 400

Tables default to CSV (params in leading ``#`` comment lines), single
results to JSON. Floats carry 17 significant digits. Exit status is 0 on
success, 2 for argument or domain errors and 3 for numerical failures.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any

from . import bernoulli as bern
from . import psi_probe as pp
from . import zeros as zr
from . import zeta_eval as ze
from ._parallel import resolve_threads
from .errors import NumericalFailure

SCHEMA_VERSION = "1"


@dataclass
class OutputRecord:
    command: str
    params: dict[str, Any]
    rows: list[dict[str, Any]]
    schema_version: str = SCHEMA_VERSION
    timestamp: str | None = field(default=None)

    def __post_init__(self):
        if self.rows:
            cols = list(self.rows[0])
            for row in self.rows[1:]:
                if list(row) != cols:
                    raise ValueError("all rows must share one column set")

    def as_dict(self) -> dict[str, Any]:
        out = {"schema_version": self.schema_version, "command": self.command,
               "params": self.params, "rows": self.rows}
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out


def fmt_number(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if not math.isfinite(x):
        raise NumericalFailure(f"non-finite value {x} in output")
    return format(x, ".17g")


def dumps(obj, indent: int = 0) -> str:
    """JSON with floats at 17 significant digits; parse-then-dump is idempotent."""
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    if obj is None:
        return "null"
    if isinstance(obj, (bool, int, float)):
        return fmt_number(obj)
    return json.dumps(str(obj))


def _csv_cell(v) -> str:
    if v is None:
        return ""
    return v if isinstance(v, str) else fmt_number(v)


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return dumps(record.as_dict()) + "\n"
    buf = io.StringIO()
    buf.write(f"# schema_version: {record.schema_version}\n")
    buf.write(f"# command: {record.command}\n")
    buf.write(f"# params: {json.dumps(json.loads(dumps(record.params)), separators=(',', ':'))}\n")
    if record.timestamp is not None:
        buf.write(f"# timestamp: {record.timestamp}\n")
    if record.rows:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(record.rows[0].keys())
        for row in record.rows:
            writer.writerow([_csv_cell(v) for v in row.values()])
    return buf.getvalue()


def _cplx(prefix: str, z: complex) -> dict[str, float]:
    return {f"{prefix}_re": z.real, f"{prefix}_im": z.imag}


# -- subcommands ------------------------------------------------------------

def cmd_eval(args) -> OutputRecord:
    s = complex(args.sigma, args.t)
    params: dict[str, Any] = {"sigma": args.sigma, "t": args.t, "method": args.method}
    if args.method == "em":
        default = ze.default_em_params(s)
        p = ze.EMParams(args.N or default.N, args.m or default.m)
        params.update(N=p.N, m=p.m)
        res = ze.em_zeta(s, p)
    elif args.method == "eta":
        params["terms"] = args.terms
        res = ze.zeta_from_eta(s, args.terms)
    else:
        params["quad_points"] = args.quad_points
        res = ze.integral_zeta(s, args.quad_points)
    row = {"re": res.value.real, "im": res.value.imag, "abs": abs(res.value),
           "error_bound": res.error_bound, "rigorous": res.rigorous, "method": res.method.value}
    return OutputRecord("eval", params, [row])


def cmd_zeros(args) -> OutputRecord:
    params = {"t_min": args.t_min, "t_max": args.t_max, "step": args.step, "tol": args.tol,
              "sigma": 0.5, "width": 1e-9}
    recs = zr.scan_critical_line(args.t_min, args.t_max, args.step, args.tol, threads=args.threads)
    rows = [{"index": r.index, "t": r.t, "residual": r.residual, "bracket_width": r.bracket_width}
            for r in recs]
    return OutputRecord("zeros", params, rows)


def cmd_psi_scan(args) -> OutputRecord:
    s = complex(args.sigma, args.t)
    Ns = sorted(args.N)
    rows = []
    for N in Ns:
        d = pp.psi_decompose(s, N)
        rows.append({
            "N": N,
            "abs_psi": abs(d.total),
            "abs_recursive": abs(d.recursive_part),
            "abs_constant": abs(d.constant_part),
            "abs_growth": abs(d.growth_part),
            "abs_half_bracket": abs(d.half_bracket),
            "abs_twelfth": abs(d.twelfth_part),
            "abs_residual": abs(d.residual),
            "em_remainder_bound": pp.em_remainder_bound(s, ze.EMParams(N)),
        })
    return OutputRecord("psi-scan", {"sigma": args.sigma, "t": args.t, "N": Ns, "j": "N/2"}, rows)


def cmd_region(args) -> OutputRecord:
    rep = zr.verify_region(args.t_min, args.t_max, args.sigma_samples, args.t_samples,
                           threads=args.threads)
    params = {"t_min": args.t_min, "t_max": args.t_max, "sigma_samples": args.sigma_samples,
              "t_samples": args.t_samples, "region_constant": zr.REGION_CONSTANT,
              "note": "sampled sanity check at desk scale, not a proof"}
    row = {"samples": rep.samples, "min_abs_zeta": rep.min_abs_zeta,
           "argmin_sigma": rep.argmin_point.real, "argmin_t": rep.argmin_point.imag,
           "sigma_bound_min": rep.sigma_bound_range[0], "sigma_bound_max": rep.sigma_bound_range[1]}
    return OutputRecord("region", params, [row])


def cmd_bernoulli(args) -> OutputRecord:
    rows = []
    for k in range(args.k_max + 1):
        b = bern.bernoulli_number(k)
        row = {"k": k, "numerator": b.numerator, "denominator": b.denominator, "value": float(b)}
        if args.x is not None:
            row["poly_at_x"] = bern.bernoulli_poly(k, args.x)
            row["periodic_at_x"] = bern.periodic_bernoulli(k, args.x)
        rows.append(row)
    return OutputRecord("bernoulli", {"k_max": args.k_max, "x": args.x}, rows)


def cmd_em_table(args) -> OutputRecord:
    s = complex(args.sigma, args.t)
    rows = []
    for N in sorted(args.N):
        p = ze.EMParams(N, 1, args.j if args.j else N // 2)
        terms = pp.phi_em(s, p)
        row = {"N": N, "j": p.j}
        for name in ("head_sum", "integral_term", "half_term", "bernoulli_term",
                     "boundary_terms", "remainder_E"):
            row.update(_cplx(name, getattr(terms, name)))
        row.update(_cplx("phi_direct", pp.phi_direct(s, N)))
        # the closed-form bound only holds for 1/2 <= sigma < 1
        row["remainder_bound"] = pp.em_remainder_bound(s, p) if 0.5 <= s.real < 1 else None
        rows.append(row)
    params = {"sigma": args.sigma, "t": args.t, "N": sorted(args.N), "j": args.j or "N/2", "m": 1}
    return OutputRecord("em-table", params, rows)


# -- argument parsing -------------------------------------------------------

def _even_int(text: str) -> int:
    n = int(text)
    if n < 2 or n % 2:
        raise argparse.ArgumentTypeError(f"N must be an even integer >= 2, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--threads", type=int, default=1, help="worker threads (0 = auto)")
    common.add_argument("--no-timestamp", action="store_true")

    parser = argparse.ArgumentParser(prog="zetalab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate zeta(sigma + it)")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--method", choices=("em", "eta", "integral"), default="em")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--terms", type=int, default=ze.DEFAULT_ETA_TERMS)
    p.add_argument("--quad-points", type=int, default=256)
    p.set_defaults(func=cmd_eval, default_format="json")

    p = sub.add_parser("zeros", parents=[common], help="locate critical-line zeros")
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_zeros, default_format="csv")

    p = sub.add_parser("psi-scan", parents=[common], help="decompose N^s phi(N,s) over N")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--N", type=_even_int, nargs="+", default=[64, 128, 256, 512, 1024, 2048, 4096])
    p.set_defaults(func=cmd_psi_scan, default_format="csv")

    p = sub.add_parser("region", parents=[common], help="sample |zeta| in the zero-free region")
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--sigma-samples", type=int, default=20)
    p.add_argument("--t-samples", type=int, default=200)
    p.set_defaults(func=cmd_region, default_format="json")

    p = sub.add_parser("bernoulli", parents=[common], help="tabulate Bernoulli numbers")
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--x", type=float, default=None, help="also evaluate B_k(x) and its periodic form")
    p.set_defaults(func=cmd_bernoulli, default_format="csv")

    p = sub.add_parser("em-table", parents=[common], help="first-order EM split of phi(N,s) vs N")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--N", type=_even_int, nargs="+", default=[16, 32, 64, 128, 256])
    p.add_argument("--j", type=int, default=None)
    p.set_defaults(func=cmd_em_table, default_format="csv")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        resolve_threads(args.threads)
        record = args.func(args)
        if not args.no_timestamp:
            record.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        text = render(record, args.format or args.default_format)
    except NumericalFailure as exc:
        print(f"zetalab {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"zetalab {args.command}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
