"""Command-line front end: certify, scan, oracle, caps, critical-p.

Exit codes: 0 success, 1 usage/domain error, 2 growth-hypothesis violation,
3 oracle soundness failure. Identical invocations (including seeds) produce
byte-identical output; all bounds are printed both as natural logs and as
per-dimension rates.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import certificate as cert_mod
from .certificate import (
    Certificate,
    ScanRow,
    besicovitch_upper,
    critical_p,
    decp_certificate,
    decp_generalized_certificate,
    doubling_certificate,
    lebesgue_ball_certificate,
    lemma_certificate,
)
from .errors import DomainError, HypothesisViolationError
from .oracle import run_oracle
from .radial import RadialDensity, density_from_mapping, parse_kv
from .specfun import CapSpec, cap_area_bounds, cap_area_exact

OUTPUT_DIR_ENV = "HLMAX_OUTPUT_DIR"

CONSTRUCTIONS = ("lemma", "decp", "decp-generalized", "doubling", "lebesgue-ball")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    """One CLI invocation, fully resolved."""

    command: str
    family: str | None = None
    t: float | None = None
    segments: str | None = None
    d_values: list[int] = field(default_factory=list)
    p_values: list[float] = field(default_factory=list)
    construction: str | None = None
    fmt: str = "json"
    output: str | None = None
    seed: int = 0
    tol: float | None = None


def _range_spec(text: str) -> list[float]:
    """Parse 'start:stop:step' (inclusive stop, within half a step)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must look like start:stop:step, got {text!r}")
    start, stop, step = (float(x) for x in parts)
    if step <= 0 or stop < start:
        raise UsageError(f"bad range {text!r}")
    out = []
    x = start
    while x <= stop + 0.5 * step:
        out.append(x)
        x += step
    return out


def _build_density(args, d: int) -> RadialDensity:
    if not args.family:
        raise UsageError("--family is required")
    kv = {"family": args.family, "d": str(d)}
    if getattr(args, "t", None) is not None:
        kv["t"] = repr(args.t)
    if getattr(args, "segments", None):
        kv["segments"] = args.segments
    return density_from_mapping(kv)


def _emit(records: list[dict], fmt: str, output: str | None) -> None:
    if fmt == "json":
        text = "\n".join(json.dumps(r) for r in records) + "\n"
    else:
        scalar_keys = [
            k for k in records[0] if not isinstance(records[0][k], (dict, list, tuple))
        ]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(scalar_keys)
        for rec in records:
            writer.writerow([_csv_cell(rec.get(k)) for k in scalar_keys])
        text = buf.getvalue()
    if output:
        out_dir = os.environ.get(OUTPUT_DIR_ENV)
        if out_dir and not os.path.isabs(output):
            output = os.path.join(out_dir, output)
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


# -- certify -----------------------------------------------------------------


def _certify_record(args) -> dict:
    d = args.d
    p = args.p
    construction = args.construction
    if construction == "lebesgue-ball":
        res = lebesgue_ball_certificate(d, p, rel_tol=args.tol)
        rec = res.certificate.to_record()
        _attach_floor(rec, res.floor_log, d)
        return rec
    if construction == "doubling":
        if args.t is None or args.c is None:
            raise UsageError("doubling needs --t and --c")
        budget = args.p0_budget if args.p0_budget is not None else p
        res = doubling_certificate(args.t, d, p, budget, args.c, rel_tol=args.tol)
        rec = res.certificate.to_record()
        _attach_floor(rec, res.floor_log, (1.0 - args.t) * d)
        rec.update(
            {
                "inner_term_log": res.inner_term_log,
                "middle_bound_log": res.middle_bound_log,
                "outer_bound_log": res.outer_bound_log,
                "dominance_ok": res.dominance_ok,
                "d0": res.d0,
                "b0": res.b0,
                "c": args.c,
                "p0_budget": budget,
            }
        )
        return rec
    density = _build_density(args, d)
    if construction == "lemma":
        cert = lemma_certificate(density, p, args.v, args.R, rel_tol=args.tol)
        return cert.to_record()
    if construction == "decp":
        res = decp_certificate(density, p, epsilon=args.epsilon, rel_tol=args.tol)
        rec = res.certificate.to_record()
        _attach_floor(rec, res.floor_log, d)
        rec.update(
            {
                "epsilon": res.epsilon,
                "r1": res.r1,
                "degenerate_rate": res.degenerate_rate,
                "hypothesis": _hypothesis_dict(res.hypothesis),
            }
        )
        return rec
    if construction == "decp-generalized":
        if args.t0 is None or args.t1 is None:
            raise UsageError("decp-generalized needs --t0 and --t1")
        res = decp_generalized_certificate(
            density, p, args.t0, args.t1, epsilon=args.epsilon, rel_tol=args.tol
        )
        rec = res.certificate.to_record()
        rec.update(
            {
                "p0": res.p0,
                "b": res.b,
                "beta_log": res.beta_log,
                "degenerate_rate": res.degenerate_rate,
                "hypothesis": _hypothesis_dict(res.hypothesis),
            }
        )
        return rec
    raise UsageError(f"unknown construction {construction!r}")


def _attach_floor(rec: dict, floor_log: float, rate_divisor: float) -> None:
    rec["floor_log_lower_bound"] = floor_log
    rec["floor_rate_per_dim"] = floor_log / rec["d"]
    rec["floor_provenance"] = "floor"
    rec["exact_dominates_floor"] = rec["log_lower_bound"] >= floor_log - 1e-9


def _hypothesis_dict(rep) -> dict:
    return {
        "u": rep.u,
        "sup_required_log": rep.sup_required_log,
        "sup_estimate_log": rep.sup_estimate_log,
        "sup_location": rep.sup_location,
        "tail_required_log": rep.tail_required_log,
        "tail_radii": list(rep.tail_radii),
        "tail_log_values": list(rep.tail_log_values),
        "note": rep.note,
    }


def cmd_certify(args) -> int:
    rec = _certify_record(args)
    _emit([rec], args.format, args.output)
    return 0


# -- scan ----------------------------------------------------------------------


def _scan_cell(args, d: int, p: float) -> ScanRow:
    family = args.family or (
        "restricted-lebesgue" if args.construction == "lebesgue-ball" else None
    )
    params = ""
    if args.t is not None:
        params = f"t={args.t!r}"
    if args.segments:
        params = f"segments={args.segments}"
    try:
        if args.construction == "lebesgue-ball":
            low = lebesgue_ball_certificate(d, p, rel_tol=args.tol).certificate.log_lower_bound
        elif args.construction == "doubling":
            budget = args.p0_budget if args.p0_budget is not None else p
            low = doubling_certificate(
                args.t, d, p, budget, args.c, rel_tol=args.tol
            ).certificate.log_lower_bound
        elif args.construction == "decp":
            density = _build_density(args, d)
            low = decp_certificate(
                density, p, epsilon=args.epsilon, rel_tol=args.tol
            ).certificate.log_lower_bound
        else:
            density = _build_density(args, d)
            low = lemma_certificate(
                density, p, args.v, args.R, rel_tol=args.tol
            ).log_lower_bound
        return ScanRow(
            family=family or "",
            params=params,
            d=d,
            p=p,
            log_lower_bound=low,
            per_dim_rate=low / d,
            upper_log=besicovitch_upper(d, p),
        )
    except Exception as exc:  # recorded per-row; scan carries on
        return ScanRow(
            family=family or "",
            params=params,
            d=d,
            p=p,
            log_lower_bound=math.nan,
            per_dim_rate=math.nan,
            upper_log=besicovitch_upper(d, p),
            error=f"{type(exc).__name__}: {exc}",
        )


def cmd_scan(args) -> int:
    ds = [int(x) for x in _range_spec(args.d_range)]
    ps = [float(x) for x in args.p_list.split(",") if x.strip()]
    if not ds or not ps:
        raise UsageError("empty d-range or p-list")
    if any(d < 1 for d in ds) or any(p < 1 for p in ps):
        raise UsageError("need every d >= 1 and every p >= 1")
    cells = [(d, p) for d in ds for p in ps]
    jobs = args.jobs or os.cpu_count() or 1
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        rows = list(pool.map(lambda dp: _scan_cell(args, *dp), cells))
    rows.sort(key=lambda r: (r.family, r.d, r.p))
    records = [
        {
            "family": r.family,
            "params": r.params,
            "d": r.d,
            "p": r.p,
            "log_lower": r.log_lower_bound,
            "rate_per_dim": r.per_dim_rate,
            "upper_log": r.upper_log,
            "error": r.error,
        }
        for r in rows
    ]
    _emit(records, args.format, args.output)
    return 0 if any(not r.error for r in rows) else 1


# -- oracle --------------------------------------------------------------------


def cmd_oracle(args) -> int:
    if args.d > 10:
        raise UsageError(
            f"d = {args.d} > 10: direct maximal-function evaluation needs one "
            "two-dimensional quadrature per radius and becomes intractable"
        )
    density = _build_density(args, args.d)
    report = run_oracle(
        density,
        args.p,
        args.v,
        args.R,
        seed=args.seed,
        samples=args.samples,
        grid=args.grid,
    )
    _emit([report.to_record()], args.format, args.output)
    return 0 if report.sound() else 3


# -- caps ----------------------------------------------------------------------


def cmd_caps(args) -> int:
    if args.s is None and not args.s_grid:
        raise UsageError("caps needs --s or --s-grid")
    svals = [args.s] if args.s is not None else _range_spec(args.s_grid)
    records = []
    for s in svals:
        if not (0.0 <= s < 1.0):
            raise UsageError(f"s must lie in [0, 1), got {s}")
        cap = CapSpec.from_cos(args.d, s)
        exact = cap_area_exact(cap).log_magnitude
        if s > 0.0:
            lo, hi = cap_area_bounds(cap)
            lo, hi = lo.log_magnitude, hi.log_magnitude
            ok = lo - 1e-10 <= exact <= hi + 1e-10
        else:
            lo = hi = None
            ok = True
        records.append(
            {
                "d": args.d,
                "s": s,
                "t": cap.t,
                "log_exact": exact,
                "log_lower": lo,
                "log_upper": hi,
                "sandwich_ok": ok,
            }
        )
    _emit(records, args.format, args.output)
    return 0


def cmd_critical_p(args) -> int:
    tags = [args.base] if args.base else ["decp", "lebesgue_ball"]
    records = [{"base": tag, "p0": critical_p(tag)} for tag in tags]
    _emit(records, args.format, args.output)
    return 0


# -- parser --------------------------------------------------------------------


def _add_common(sp) -> None:
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--output", default=None, help="output path (stdout if omitted)")
    sp.add_argument("--config", default=None, help="key=value defaults file")
    sp.add_argument("--tol", type=float, default=None, help="quadrature rel. tolerance")


def _add_density_flags(sp) -> None:
    sp.add_argument(
        "--family",
        default=None,
        help="lebesgue, restricted-lebesgue, power, truncated-power, "
        "log-singularity or piecewise",
    )
    sp.add_argument("--t", type=float, default=None, help="power-family exponent fraction")
    sp.add_argument(
        "--segments", default=None, help="piecewise segments: end:coef[:exp],..."
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="hlmax", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("certify", help="one certificate at a single (d, p)")
    _add_density_flags(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--construction", choices=CONSTRUCTIONS, default="lemma")
    sp.add_argument("--v", type=float, default=0.5)
    sp.add_argument("--R", type=float, default=1.0)
    sp.add_argument("--epsilon", type=float, default=0.01)
    sp.add_argument("--t0", type=float, default=None)
    sp.add_argument("--t1", type=float, default=None)
    sp.add_argument("--c", type=float, default=None)
    sp.add_argument("--p0-budget", dest="p0_budget", type=float, default=None)
    _add_common(sp)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("scan", help="certificates over a (d, p) grid")
    _add_density_flags(sp)
    sp.add_argument("--d-range", dest="d_range", required=True, help="start:stop:step")
    sp.add_argument("--p-list", dest="p_list", required=True, help="comma-separated")
    sp.add_argument("--construction", choices=CONSTRUCTIONS, default="lemma")
    sp.add_argument("--v", type=float, default=0.5)
    sp.add_argument("--R", type=float, default=1.0)
    sp.add_argument("--epsilon", type=float, default=0.01)
    sp.add_argument("--c", type=float, default=None)
    sp.add_argument("--p0-budget", dest="p0_budget", type=float, default=None)
    sp.add_argument("--jobs", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("oracle", help="brute-force check of one configuration")
    _add_density_flags(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--p", type=float, default=1.0)
    sp.add_argument("--v", type=float, default=0.5)
    sp.add_argument("--R", type=float, default=1.0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--grid", type=int, default=128)
    _add_common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("caps", help="exact cap areas against the two-sided bounds")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--s", type=float, default=None)
    sp.add_argument("--s-grid", dest="s_grid", default=None, help="start:stop:step")
    _add_common(sp)
    sp.set_defaults(func=cmd_caps)

    sp = sub.add_parser("critical-p", help="closed-form critical exponents")
    sp.add_argument("--base", choices=("decp", "lebesgue_ball"), default=None)
    _add_common(sp)
    sp.set_defaults(func=cmd_critical_p)

    return parser


def _inject_config(argv: list[str]) -> list[str]:
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    path = argv[idx + 1]
    with open(path) as fh:
        cfg = parse_kv(fh.read())
    injected = []
    for key, value in cfg.items():
        flag = "--" + key.replace("_", "-")
        if flag not in argv:
            injected.extend([flag, value])
    return argv[:1] + injected + argv[1:]


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and not argv[0].startswith("-"):
            argv = _inject_config(argv)
        parser = build_parser()
        args = parser.parse_args(argv)
        if getattr(args, "d", None) is not None and args.d < 1:
            raise UsageError(f"d must be a positive integer, got {args.d}")
        if getattr(args, "p", None) is not None and args.p < 1:
            raise UsageError(f"p must be >= 1, got {args.p}")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except HypothesisViolationError as exc:
        print(f"hypothesis violation ({exc.failed}): {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
