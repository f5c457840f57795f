"""JSON schemas foxh.spec.v1 / foxh.params.v1 and CSV emission.

Numbers travel as decimal strings so that CLI-ingested parameters stay exact
rationals; emission renders an exact decimal whenever the denominator divides
a power of ten and falls back to the float repr otherwise. CSV values are
written with 17 significant digits.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import IO, Iterable, List, Optional, Sequence

from .construct import ConvolutionSpec
from .errors import SchemaError
from .mbquad import EvalResult
from .params import FoxHParams, Number

SPEC_SCHEMA = "foxh.spec.v1"
PARAMS_SCHEMA = "foxh.params.v1"


def parse_number(v) -> Number:
    """Decimal string, int, or float -> exact Fraction (strings/ints) or float."""
    if isinstance(v, bool):
        raise SchemaError(f"expected a number, got {v!r}")
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"not a decimal string: {v!r}") from exc
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return v
    raise SchemaError(f"expected a number, got {type(v).__name__}")


def format_number(x: Number) -> str:
    """Exact decimal string when possible, float repr otherwise."""
    if isinstance(x, bool):
        raise SchemaError("booleans are not numbers")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        den = x.denominator
        if den == 1:
            return str(x.numerator)
        k2 = 0
        while den % 2 == 0:
            den //= 2
            k2 += 1
        k5 = 0
        while den % 5 == 0:
            den //= 5
            k5 += 1
        if den != 1:
            return repr(float(x))
        k = max(k2, k5)
        scaled = abs(x.numerator) * 10**k // x.denominator
        digits = str(scaled).rjust(k + 1, "0")
        sign = "-" if x.numerator < 0 else ""
        whole, frac = digits[:-k] if k else digits, digits[-k:] if k else ""
        return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"
    return repr(float(x))


def _pairs_out(pairs) -> List[List[str]]:
    return [[format_number(x), format_number(y)] for x, y in pairs]


def _pairs_in(obj, where: str, arity: int) -> tuple:
    if not isinstance(obj, list):
        raise SchemaError(f"{where} must be a list")
    out = []
    for j, entry in enumerate(obj):
        if not isinstance(entry, (list, tuple)) or len(entry) != arity:
            raise SchemaError(f"{where}[{j}] must have {arity} entries")
        out.append(tuple(parse_number(v) for v in entry))
    return tuple(out)


def dump_spec(spec: ConvolutionSpec) -> dict:
    return {
        "varphi": _pairs_out(spec.varphi),
        "phi": [[format_number(v) for v in e] for e in spec.phi],
        "psi": [[format_number(v) for v in e] for e in spec.psi],
        "eta": [[format_number(v) for v in e] for e in spec.eta],
    }


def load_spec(obj) -> ConvolutionSpec:
    if not isinstance(obj, dict):
        raise SchemaError("spec document must be a JSON object")
    return ConvolutionSpec(
        varphi=_pairs_in(obj.get("varphi", []), "varphi", 2),
        phi=_pairs_in(obj.get("phi", []), "phi", 3),
        psi=_pairs_in(obj.get("psi", []), "psi", 3),
        eta=_pairs_in(obj.get("eta", []), "eta", 3),
    )


def dump_params(h: FoxHParams, derivation: Optional[Sequence] = None) -> dict:
    doc = {
        "m": h.m,
        "n": h.n,
        "p": h.p,
        "q": h.q,
        "upper": _pairs_out(h.upper),
        "lower": _pairs_out(h.lower),
    }
    if derivation is not None:
        doc["derivation"] = list(derivation)
    return doc


def load_params(obj) -> FoxHParams:
    if not isinstance(obj, dict):
        raise SchemaError("params document must be a JSON object")
    for key in ("m", "n", "p", "q"):
        if key not in obj:
            raise SchemaError(f"missing index {key!r}")
        if not isinstance(obj[key], int) or isinstance(obj[key], bool):
            raise SchemaError(f"index {key!r} must be an integer")
    return FoxHParams(
        m=obj["m"],
        n=obj["n"],
        p=obj["p"],
        q=obj["q"],
        upper=_pairs_in(obj.get("upper", []), "upper", 2),
        lower=_pairs_in(obj.get("lower", []), "lower", 2),
    )


def load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}") from exc


def dump_json(doc: dict, fh: IO[str]) -> None:
    json.dump(doc, fh, indent=2, sort_keys=True)
    fh.write("\n")


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def write_eval_csv(fh: IO[str], ts: Sequence[float], results: Sequence[EvalResult]) -> None:
    """CSV grid from the contour evaluator: t,value,abs_err_est,height_used,panels."""
    fh.write("t,value,abs_err_est,height_used,panels\n")
    for t, r in zip(ts, results):
        fh.write(
            f"{_g17(t)},{_g17(r.value)},{_g17(r.abs_err_est)},{_g17(r.height_used)},{r.panels}\n"
        )


def write_oracle_csv(fh: IO[str], ts: Sequence[float], rows: Iterable) -> None:
    """CSV grid from the convolution oracle: t,value,abs_err_est."""
    fh.write("t,value,abs_err_est\n")
    for t, (value, err) in zip(ts, rows):
        fh.write(f"{_g17(t)},{_g17(value)},{_g17(err)}\n")
