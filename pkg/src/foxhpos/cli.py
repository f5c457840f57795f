"""Command-line surface: build / check / eval / oracle / verify / transform / reduce / corpus.

Exit codes: 0 success, 1 schema violation, 2 precondition failure, 3 numeric
non-convergence; a machine-readable error object goes to stderr. All outputs
are deterministic for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import corpus as corpus_mod
from .construct import build_foxh, ep_report
from .errors import (
    EpFailedError,
    FoxHError,
    NoConvergenceError,
    SchemaError,
)
from .mbquad import EvalOptions, eval_h, eval_h_grid, xi_value
from .oracle import eval_f_grid, mellin_numeric
from .params import char_params, mellin_strip, validate_params
from .rewrite import (
    euler_extend,
    laplace_extend,
    power_arg,
    power_weight,
    product_extend,
    reciprocal,
)
from .serialize import (
    dump_json,
    dump_params,
    dump_spec,
    format_number,
    load_json,
    load_params,
    load_spec,
    parse_number,
    write_eval_csv,
    write_oracle_csv,
)
from .special import as_macrobert, as_meijer, as_wright

_DEFAULT_GRID = "0.01:100:25:log"


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    count: int
    scale: str  # "log" or "lin"

    def points(self) -> List[float]:
        if self.count == 1:
            return [self.lo]
        if self.scale == "log":
            ratio = self.hi / self.lo
            return [
                self.lo * ratio ** (i / (self.count - 1)) for i in range(self.count)
            ]
        step = (self.hi - self.lo) / (self.count - 1)
        return [self.lo + i * step for i in range(self.count)]


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[str] = None
    input2: Optional[str] = None
    output: Optional[str] = None
    grid: GridSpec = GridSpec(0.01, 100.0, 25, "log")
    tol: float = 1e-10
    seed: int = 0
    count: int = 20
    op: Optional[str] = None
    omega: Optional[str] = None
    lam: Optional[str] = None
    variant: str = "direct"


def parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) != 4:
        raise SchemaError(f"grid must be min:max:count:scale, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise SchemaError(f"bad grid numbers in {text!r}") from exc
    scale = parts[3]
    if scale not in ("log", "lin"):
        raise SchemaError(f"grid scale must be log or lin, got {scale!r}")
    if not (lo < hi and count >= 1) or (scale == "log" and not lo > 0):
        raise SchemaError(f"grid requires 0 < min < max and count >= 1: {text!r}")
    return GridSpec(lo, hi, count, scale)


def _emit(doc: dict, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            dump_json(doc, fh)
    else:
        dump_json(doc, sys.stdout)


def _emit_text(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _strip_doc(strip) -> dict:
    def fmt(x):
        xf = float(x)
        if math.isinf(xf):
            return "inf" if xf > 0 else "-inf"
        return format_number(x)

    return {"lo": fmt(strip.lo), "hi": fmt(strip.hi)}


def _ep_doc(rep) -> dict:
    return {
        "ok": rep.ok,
        "chi_prime": format_number(rep.chi_prime),
        "strip": _strip_doc(rep.strip),
        "violations": [list(v) for v in rep.violations],
        "pole_check_mode": rep.pole_check_mode,
    }


def _require_grid_ok(results) -> None:
    for r in results:
        if r.error is not None:
            raise NoConvergenceError(f"grid point failed: {r.error}")


def verify_spec(spec, grid_pts: Sequence[float], tol: float) -> dict:
    """Cross-check a built instance against the convolution oracle and its transform."""
    rep = ep_report(spec)
    if not rep.ok:
        raise EpFailedError(
            "; ".join(msg for _, msg in rep.violations) or "e.p. failed"
        )
    h = build_foxh(spec)
    opts = EvalOptions(tol=tol)
    results = eval_h_grid(h, grid_pts, opts)
    _require_grid_ok(results)
    values = [r.value for r in results]
    min_value = min(values)
    positivity_ok = all(v > -1e-6 * max(1.0, abs(v)) for v in values)

    max_abs_diff = None
    if spec.kernel_count <= 3:
        oracle_rows = eval_f_grid(spec, grid_pts, tol=max(tol, 1e-10))
        max_abs_diff = max(
            abs(v - f) for v, (f, _) in zip(values, oracle_rows)
        )

    # the roundtrip quadrature tolerance must sit above the contour evaluator's
    # own noise floor, or the adaptive integrator subdivides chasing noise
    lo, hi = rep.strip.as_floats()
    hi_c = min(hi, lo + 4.0)
    rt_opts = EvalOptions(tol=1e-7)
    rt_err = 0.0
    for frac in (0.3, 0.5, 0.7):
        s = lo + frac * (hi_c - lo)
        numeric = mellin_numeric(
            lambda t: eval_h(h, t, rt_opts).value, s, tol=1e-6, limit=60
        )
        exact = complex(xi_value(h, complex(s)))
        rt_err = max(rt_err, abs(numeric - exact) / abs(exact))

    return {
        "max_abs_diff": max_abs_diff,
        "min_value": min_value,
        "positivity_ok": positivity_ok,
        "mellin_roundtrip_max_rel_err": rt_err,
    }


def _cmd_build(cfg: RunConfig) -> int:
    spec = load_spec(load_json(cfg.input))
    rep = ep_report(spec)
    if not rep.ok:
        raise EpFailedError("; ".join(msg for _, msg in rep.violations))
    h = build_foxh(spec)
    doc = dump_params(h, derivation=[{"op": "build", "spec": dump_spec(spec)}])
    doc["ep"] = _ep_doc(rep)
    _emit(doc, cfg.output)
    return 0


def _cmd_check(cfg: RunConfig) -> int:
    spec = load_spec(load_json(cfg.input))
    _emit(_ep_doc(ep_report(spec)), cfg.output)
    return 0


def _cmd_eval(cfg: RunConfig) -> int:
    h = load_params(load_json(cfg.input))
    # surface precondition failures before producing a CSV of nans
    rep = validate_params(h)
    if not rep.ok:
        from .errors import InvalidParamsError

        raise InvalidParamsError("; ".join(msg for _, msg in rep.violations))
    mellin_strip(h)
    ts = cfg.grid.points()
    opts = EvalOptions(tol=cfg.tol)
    results = eval_h_grid(h, ts, opts)
    _require_grid_ok(results)
    import io

    buf = io.StringIO()
    write_eval_csv(buf, ts, results)
    _emit_text(buf.getvalue(), cfg.output)
    return 0


def _cmd_oracle(cfg: RunConfig) -> int:
    spec = load_spec(load_json(cfg.input))
    ts = cfg.grid.points()
    rows = eval_f_grid(spec, ts, tol=cfg.tol)
    import io

    buf = io.StringIO()
    write_oracle_csv(buf, ts, rows)
    _emit_text(buf.getvalue(), cfg.output)
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    spec = load_spec(load_json(cfg.input))
    report = verify_spec(spec, cfg.grid.points(), cfg.tol)
    _emit(report, cfg.output)
    return 0


def _parse_float_list(text: Optional[str], name: str, arity: int) -> List[float]:
    if text is None:
        raise SchemaError(f"--{name} is required for this op")
    parts = [p for p in text.split(",") if p]
    if len(parts) != arity:
        raise SchemaError(f"--{name} needs {arity} comma-separated values")
    return [float(parse_number(p)) for p in parts]


def _cmd_transform(cfg: RunConfig) -> int:
    doc_in = load_json(cfg.input)
    h = load_params(doc_in)
    chain = list(doc_in.get("derivation", []))
    op = cfg.op
    if op == "reciprocal":
        out = reciprocal(h)
        chain.append({"op": "reciprocal"})
    elif op == "power-arg":
        (om,) = _parse_float_list(cfg.omega, "omega", 1)
        weighted = power_arg(h, parse_number(cfg.omega))
        out = weighted.params
        chain.append(
            {
                "op": "power-arg",
                "omega": om,
                "scalar": weighted.scalar,
                "arg_power": weighted.arg_power,
            }
        )
    elif op == "power-weight":
        (w,) = _parse_float_list(cfg.omega, "omega", 1)
        out = power_weight(h, parse_number(cfg.omega))
        chain.append({"op": "power-weight", "w": w})
    elif op == "laplace":
        (om,) = _parse_float_list(cfg.omega, "omega", 1)
        (lam,) = _parse_float_list(cfg.lam, "lambda", 1)
        out = laplace_extend(h, om, lam)
        chain.append({"op": "laplace", "omega": om, "lambda": lam})
    elif op == "euler":
        om1, om2 = _parse_float_list(cfg.omega, "omega", 2)
        lam1, lam2 = _parse_float_list(cfg.lam, "lambda", 2)
        out = euler_extend(h, om1, lam1, om2, lam2)
        chain.append(
            {"op": "euler", "omega1": om1, "lambda1": lam1, "omega2": om2, "lambda2": lam2}
        )
    elif op == "product":
        if not cfg.input2:
            raise SchemaError("--in2 is required for --op product")
        h2 = load_params(load_json(cfg.input2))
        (om,) = _parse_float_list(cfg.omega, "omega", 1)
        (lam,) = _parse_float_list(cfg.lam, "lambda", 1)
        out = product_extend(h, h2, om, lam, variant=cfg.variant)
        chain.append(
            {"op": "product", "omega": om, "lambda": lam, "variant": cfg.variant}
        )
    else:
        raise SchemaError(f"unknown --op {op!r}")
    _emit(dump_params(out, derivation=chain), cfg.output)
    return 0


def _cmd_reduce(cfg: RunConfig) -> int:
    h = load_params(load_json(cfg.input))
    doc: dict = {}
    w = as_wright(h)
    doc["wright"] = (
        None
        if w is None
        else {
            "upper": [[format_number(a), format_number(A)] for a, A in w.upper],
            "lower": [[format_number(b), format_number(B)] for b, B in w.lower],
            "mu": format_number(w.mu),
        }
    )
    e = as_macrobert(h)
    doc["macrobert"] = (
        None
        if e is None
        else {
            "betas": [format_number(b) for b in e.betas],
            "alphas": [format_number(a) for a in e.alphas],
        }
    )
    g = as_meijer(h)
    doc["meijer"] = (
        None
        if g is None
        else {
            "m": g.m,
            "n": g.n,
            "alphas": [format_number(a) for a in g.alphas],
            "betas": [format_number(b) for b in g.betas],
            "lambda": format_number(g.lam),
        }
    )
    _emit(doc, cfg.output)
    return 0


def _cmd_corpus(cfg: RunConfig) -> int:
    specs = corpus_mod.generate_specs(cfg.seed, cfg.count)
    lines = [
        "idx,n1,n2,n3,n4,chi_prime,min_value,max_abs_diff,roundtrip_rel_err,positivity_ok"
    ]
    for i, spec in enumerate(specs):
        rep = ep_report(spec)
        report = verify_spec(spec, cfg.grid.points(), cfg.tol)
        diff = report["max_abs_diff"]
        lines.append(
            ",".join(
                [
                    str(i),
                    str(spec.n1),
                    str(spec.n2),
                    str(spec.n3),
                    str(spec.n4),
                    format(float(rep.chi_prime), ".17g"),
                    format(report["min_value"], ".17g"),
                    "" if diff is None else format(diff, ".17g"),
                    format(report["mellin_roundtrip_max_rel_err"], ".17g"),
                    "1" if report["positivity_ok"] else "0",
                ]
            )
        )
    _emit_text("\n".join(lines) + "\n", cfg.output)
    return 0


_COMMANDS = {
    "build": _cmd_build,
    "check": _cmd_check,
    "eval": _cmd_eval,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "transform": _cmd_transform,
    "reduce": _cmd_reduce,
    "corpus": _cmd_corpus,
}


def run(cfg: RunConfig) -> int:
    return _COMMANDS[cfg.command](cfg)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="foxhpos",
        description="Construct, certify, evaluate, and rewrite positive Fox H-functions.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    for name, needs_input in [
        ("build", True),
        ("check", True),
        ("eval", True),
        ("oracle", True),
        ("verify", True),
        ("transform", True),
        ("reduce", True),
        ("corpus", False),
    ]:
        sp = sub.add_parser(name)
        if needs_input:
            sp.add_argument("--in", dest="input", required=True, help="input JSON path")
        sp.add_argument("--out", dest="output", default=None, help="output path (default stdout)")
        sp.add_argument("--grid", default=_DEFAULT_GRID, help="min:max:count:log|lin")
        sp.add_argument("--tol", type=float, default=1e-10)
        if name == "transform":
            sp.add_argument("--in2", dest="input2", default=None, help="second params JSON (product)")
            sp.add_argument(
                "--op",
                required=True,
                choices=["reciprocal", "power-arg", "power-weight", "laplace", "euler", "product"],
            )
            sp.add_argument("--omega", default=None)
            sp.add_argument("--lambda", dest="lam", default=None)
            sp.add_argument("--variant", choices=["direct", "reciprocal"], default="direct")
        if name == "corpus":
            sp.add_argument("--seed", type=int, default=0)
            sp.add_argument("--count", type=int, default=20)
    return p


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        input2=getattr(args, "input2", None),
        output=args.output,
        grid=parse_grid(args.grid),
        tol=args.tol,
        seed=getattr(args, "seed", 0),
        count=getattr(args, "count", 20),
        op=getattr(args, "op", None),
        omega=getattr(args, "omega", None),
        lam=getattr(args, "lam", None),
        variant=getattr(args, "variant", "direct"),
    )


def _error_name(exc: Exception) -> str:
    name = type(exc).__name__
    return name[: -len("Error")] if name.endswith("Error") else name


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return run(cfg)
    except (SchemaError, OSError) as exc:
        json.dump({"error": _error_name(exc), "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    except NoConvergenceError as exc:
        json.dump({"error": _error_name(exc), "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 3
    except FoxHError as exc:
        json.dump({"error": _error_name(exc), "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
