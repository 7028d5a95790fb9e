"""Command-line reports: ``table1``, ``derivs``, ``transform``, ``validate-bounds``.

Every command writes either CSV (numbers as ``%.5e``, LF line endings) or a
JSON envelope ``{"config": ..., "rows": [...], "version": ...}``.  Output
depends only on the configuration, so repeated runs are byte-identical.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 partial results.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from dataclasses import asdict, dataclass, field, fields

from . import __version__
from .asymptotics import jn_deriv_asymptotic, validate_bounds
from .exceptions import ConvergenceError, DomainError
from .hiord import OrderLadder, _check_args
from .specfun import BesselKind
from .transforms import TransformQuery, closed_inf, evaluate, quadrature_oracle, quadrature_tail_oracle

__all__ = ["ReportConfig", "UsageError", "build_parser", "run", "main", "load_report",
           "parse_range", "parse_list", "render"]

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_PARTIAL = 0, 1, 2, 3
COMMANDS = ("table1", "derivs", "transform", "validate-bounds")
TRANSFORM_METHODS = ("poincare", "hadamard", "convergent", "quadrature")

_DEFAULT_N = {"table1": "40,60,100,200", "derivs": "0:20"}
_DEFAULT_X = {"transform": "5,10,20,40", "validate-bounds": "0.5,1,2,5,10"}


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"40,60,100"``, ``"0:20"`` (inclusive) or ``"0:100:10"`` to a list of ints."""
    out: list[int] = []
    try:
        for part in filter(None, (p.strip() for p in text.split(","))):
            if ":" in part:
                bits = [int(b) for b in part.split(":")]
                if len(bits) not in (2, 3):
                    raise ValueError(part)
                lo, hi = bits[0], bits[1]
                step = bits[2] if len(bits) == 3 else 1
                if step <= 0 or hi < lo:
                    raise ValueError(part)
                out.extend(range(lo, hi + 1, step))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"invalid integer range {text!r}") from None
    if any(n < 0 for n in out):
        raise UsageError(f"range {text!r} contains negative values")
    return out


def parse_list(text: str) -> list[float]:
    try:
        vals = [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"invalid number list {text!r}") from None
    if any(not math.isfinite(v) for v in vals):
        raise UsageError(f"non-finite value in {text!r}")
    return vals


@dataclass
class ReportConfig:
    command: str
    kind: str = "J"
    nu: list[float] = field(default_factory=lambda: [0.0])
    a: float = 1.0
    n: list[int] = field(default_factory=list)
    x: list[float] = field(default_factory=list)
    kmax: int = 2
    method: str | None = None
    format: str = "csv"
    out: str | None = None
    tol: float | None = None
    variant: str = "printed"

    def validate(self) -> None:
        """Check domain constraints before any computation starts."""
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        try:
            kind = BesselKind.coerce(self.kind)
        except (ValueError, DomainError) as exc:
            raise UsageError(str(exc)) from None
        self.kind = kind.value
        if self.kmax not in (0, 1, 2):
            raise UsageError(f"--kmax must be 0, 1 or 2, got {self.kmax}")
        if self.format not in ("csv", "json"):
            raise UsageError(f"--format must be csv or json, got {self.format!r}")
        if self.tol is not None and not self.tol > 0:
            raise UsageError(f"--tol must be positive, got {self.tol}")
        if not self.nu:
            raise UsageError("--nu needs at least one value")
        if self.command != "validate-bounds" and len(self.nu) != 1:
            raise UsageError(f"{self.command} takes a single --nu")
        if self.command in ("table1", "derivs", "transform") and not self.a > 0:
            raise UsageError(f"--a must be positive, got {self.a}")
        nu = self.nu[0]
        try:
            if self.command == "table1":
                if not float(nu).is_integer() or nu < 0:
                    raise UsageError(f"table1 needs a non-negative integer --nu, got {nu}")
                if not self.n or min(self.n) < 1:
                    raise UsageError("table1 needs derivative orders n >= 1")
            elif self.command == "derivs":
                _check_args(kind, nu, self.a)
                if not self.n:
                    raise UsageError("derivs needs a non-empty --n range")
            elif self.command == "transform":
                if self.method is not None and self.method not in TRANSFORM_METHODS:
                    raise UsageError(f"--method must be one of {TRANSFORM_METHODS}")
                if self.method == "convergent" and not (float(nu).is_integer() and kind in (BesselKind.J, BesselKind.I)):
                    raise UsageError("convergent method needs integer-order J or I")
                for xv in self.x:
                    TransformQuery(kind, nu, self.a, xv)
            else:
                if not self.x:
                    raise UsageError("validate-bounds needs a non-empty --x grid")
                if any(v < 0 for v in self.nu) or any(not v > 0 for v in self.x):
                    raise UsageError("validate-bounds needs nu >= 0 and x > 0")
                if self.variant not in ("printed", "corrected"):
                    raise UsageError(f"--variant must be printed or corrected, got {self.variant!r}")
        except DomainError as exc:
            raise UsageError(str(exc)) from None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ReportConfig":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class Report:
    config: ReportConfig
    rows: list[dict]
    columns: list[str]
    status: int = EXIT_OK
    # optional alternate CSV layout (header, body rows)
    csv_table: tuple[list[str], list[list]] | None = None


def run_table1(cfg: ReportConfig) -> Report:
    nu, a = int(cfg.nu[0]), cfg.a
    ladder = OrderLadder(BesselKind.J, nu, a, max(cfg.n))
    rows = []
    for k in range(cfg.kmax + 1):
        for n in cfg.n:
            exact = ladder.derivative(n).value.to_real()
            approx = jn_deriv_asymptotic(nu, a, n, k_max=k)
            rows.append({"k": k, "n": n, "exact": exact, "asymptotic": approx.value.to_real(),
                         "abs_error": abs(exact - approx.value.to_real()), "est_abs_err": approx.est_abs_err})
    header = ["k"] + [f"n={n}" for n in cfg.n]
    body = [[k] + [r["abs_error"] for r in rows if r["k"] == k] for k in range(cfg.kmax + 1)]
    return Report(cfg, rows, list(rows[0]), csv_table=(header, body))


def run_derivs(cfg: ReportConfig) -> Report:
    kind = BesselKind.coerce(cfg.kind)
    nu, a = cfg.nu[0], cfg.a
    ladder = OrderLadder(kind, nu, a, max(cfg.n))
    with_asym = kind is BesselKind.J and float(nu).is_integer() and nu >= 0
    rows = []
    for n in cfg.n:
        d = ladder.derivative(n)
        row = {"n": n, "value": d.value.to_real(), "sign": d.value.sign,
               "log_abs": d.value.log_abs if d.value.sign else -math.inf,
               "est_abs_err": d.est_abs_err, "condition": d.condition}
        if with_asym:
            if n >= 1:
                approx = jn_deriv_asymptotic(int(nu), a, n, k_max=cfg.kmax).value.to_real()
                row["asymptotic"] = approx
                row["abs_error"] = abs(row["value"] - approx)
            else:
                row["asymptotic"] = row["abs_error"] = None
        rows.append(row)
    columns = ["n", "value", "sign", "log_abs", "est_abs_err", "condition"]
    if with_asym:
        columns += ["asymptotic", "abs_error"]
    return Report(cfg, rows, columns)


def _applicable_methods(query: TransformQuery) -> list[str]:
    methods = ["poincare", "hadamard"]
    if query.integer_order and query.kind in (BesselKind.J, BesselKind.I) and query.x > 1:
        methods.append("convergent")
    return methods


def run_transform(cfg: ReportConfig) -> Report:
    kind = BesselKind.coerce(cfg.kind)
    nu, a = cfg.nu[0], cfg.a
    oracle_tol = cfg.tol if cfg.tol is not None else 1e-15
    methods = [cfg.method] if cfg.method else [m for m in TRANSFORM_METHODS if m != "quadrature"]
    columns = ["x", "ax", "closed_inf", "oracle", "oracle_error", "log_tail_plus_ax"]
    for m in methods:
        columns += [f"{m}_value", f"{m}_deviation", f"{m}_bound", f"{m}_smallest_index"]
    columns.append("error")
    rows, failed = [], 0
    for xv in cfg.x:
        query = TransformQuery(kind, nu, a, xv)
        row = dict.fromkeys(columns)
        row.update(x=xv, ax=query.ax)
        errors = []
        try:
            row["closed_inf"] = closed_inf(kind, nu, xv)
            oracle, oerr = quadrature_oracle(query, abs_tol=oracle_tol, with_error=True)
            row["oracle"], row["oracle_error"] = oracle, oerr
            tail, _ = quadrature_tail_oracle(query)
            # ln|H(inf) - H(a)| + ax, without the cancellation of the difference
            row["log_tail_plus_ax"] = math.log(abs(tail)) if tail else -math.inf
        except (ConvergenceError, DomainError, ArithmeticError) as exc:
            errors.append(f"oracle: {exc}")
        for m in methods:
            if m not in _applicable_methods(query) and m != "quadrature":
                continue
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    r = evaluate(query, m, oracle_tol=oracle_tol)
            except (ConvergenceError, DomainError, ArithmeticError) as exc:
                errors.append(f"{m}: {exc}")
                continue
            row[f"{m}_value"] = r.value
            row[f"{m}_bound"] = r.remainder_bound + r.error_estimate
            if row["oracle"] is not None:
                row[f"{m}_deviation"] = abs(r.value - row["oracle"])
            if r.tail is not None:
                row[f"{m}_smallest_index"] = r.tail.smallest_term_index
        if errors:
            failed += 1
            row["error"] = "; ".join(errors)
        rows.append(row)
    status = EXIT_OK
    if failed:
        status = EXIT_NUMERIC if failed == len(rows) else EXIT_PARTIAL
    return Report(cfg, rows, columns, status)


def run_validate_bounds(cfg: ReportConfig) -> Report:
    tol = cfg.tol if cfg.tol is not None else 1e-12
    rows = []
    for nu in cfg.nu:
        report = validate_bounds(nu, cfg.x, tol=tol, variant=cfg.variant)
        for c in report.checks:
            rows.append({"name": c.name, "nu": c.nu, "x": c.x, "lower": c.lower, "value": c.value,
                         "upper": c.upper, "slack_lower": c.slack_lower, "slack_upper": c.slack_upper,
                         "ok": c.ok})
    columns = ["name", "nu", "x", "lower", "value", "upper", "slack_lower", "slack_upper", "ok"]
    return Report(cfg, rows, columns)


_RUNNERS = {"table1": run_table1, "derivs": run_derivs, "transform": run_transform,
            "validate-bounds": run_validate_bounds}


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return f"{v:.5e}"
    return str(v)


def _json_value(v):
    # JSON has no inf/nan; encode them as strings and decode in load_report
    if isinstance(v, float) and not math.isfinite(v):
        return "nan" if math.isnan(v) else ("inf" if v > 0 else "-inf")
    return v


def render(report: Report) -> str:
    cfg = report.config
    if cfg.format == "json":
        doc = {"config": cfg.to_dict(),
               "rows": [{k: _json_value(v) for k, v in row.items()} for row in report.rows],
               "version": __version__}
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if report.csv_table is not None:
        header, body = report.csv_table
    else:
        header = report.columns
        body = [[row.get(c) for c in header] for row in report.rows]
    writer.writerow(header)
    for line in body:
        writer.writerow([_csv_cell(v) for v in line])
    return buf.getvalue()


def load_report(text: str) -> tuple[ReportConfig, list[dict], str]:
    """Parse a JSON report back into ``(config, rows, version)``."""
    doc = json.loads(text)
    special = {"inf": math.inf, "-inf": -math.inf, "nan": math.nan}

    def decode(v):
        return special[v] if isinstance(v, str) and v in special else v

    rows = [{k: decode(v) for k, v in row.items()} for row in doc["rows"]]
    return ReportConfig.from_dict(doc["config"]), rows, doc["version"]


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--kind", choices=[k.value for k in BesselKind], default="J")
    common.add_argument("--nu", default=None,
                        help="order (validate-bounds accepts a comma list)")
    common.add_argument("--a", type=float, default=1.0, help="evaluation point / upper limit")
    common.add_argument("--n", default=None, help="derivative orders, e.g. 40,60 or 0:20 or 0:100:10")
    common.add_argument("--x", default=None, help="comma list of x values")
    common.add_argument("--kmax", type=int, choices=(0, 1, 2), default=2)
    common.add_argument("--method", choices=TRANSFORM_METHODS, default=None)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--tol", type=float, default=None,
                        help="quadrature tolerance (transform) or bound tolerance (validate-bounds)")
    parser = _Parser(prog="bessel-hiord",
                     description="High-order Bessel derivatives and incomplete Laplace transforms.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("table1", parents=[common], help="asymptotic-vs-exact error grid for J_nu^(n)(a)")
    sub.add_parser("derivs", parents=[common], help="exact derivatives f^(n)(a) over a range of n")
    sub.add_parser("transform", parents=[common], help="incomplete Laplace transform accuracy sweep")
    vb = sub.add_parser("validate-bounds", parents=[common], help="check the K and I inequalities")
    vb.add_argument("--variant", choices=("printed", "corrected"), default="printed")
    return parser


def config_from_args(args: argparse.Namespace) -> ReportConfig:
    cmd = args.command
    default_nu = "0.1,0.3,0.5,0.7,0.9" if cmd == "validate-bounds" else "0"
    nu = parse_list(args.nu if args.nu is not None else default_nu)
    n_text = args.n if args.n is not None else _DEFAULT_N.get(cmd, "")
    x_text = args.x if args.x is not None else _DEFAULT_X.get(cmd, "")
    cfg = ReportConfig(command=cmd, kind=args.kind, nu=nu, a=args.a, n=parse_range(n_text),
                       x=parse_list(x_text), kmax=args.kmax, method=args.method, format=args.format,
                       out=args.out, tol=args.tol, variant=getattr(args, "variant", "printed"))
    cfg.validate()
    return cfg


def run(cfg: ReportConfig) -> tuple[str, int]:
    """Run a validated config; returns ``(rendered_output, exit_code)``."""
    report = _RUNNERS[cfg.command](cfg)
    return render(report), report.status


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = config_from_args(args)
    except UsageError as exc:
        print(f"bessel-hiord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        text, status = run(cfg)
    except (ConvergenceError, ArithmeticError) as exc:
        print(f"bessel-hiord: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
