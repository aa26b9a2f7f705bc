"""Command-line interface: ``logpot {eval,zeros,counterexample,check,grid}``.

Configurations are JSON objects::

    {"model": "disc",
     "charges": [{"a": 1.0, "z": [0.5, 0.0]}],
     "family": {"kind": "geometric", "ratio": 0.5, "count": 40},
     "truncation": 40}

Complex numbers are always [re, im] pairs.  Errors are reported as a single
JSON record on stderr; exit status 2 marks bad input, 3 a numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import math
import sys
from dataclasses import asdict, dataclass, field

import jsonschema
import numpy as np

from . import contour_zeros as cz
from . import counterexample as ce
from . import hypotheses as hy
from .errors import ConstraintError, DomainError, InputError, LogPotError, SchemaError
from .families import FamilyGenerator
from .potential_core import (
    DISC,
    HALF_PLANE,
    ChargeConfiguration,
    PointCharge,
    disc_to_halfplane,
    eval_f,
    eval_F,
    eval_potential_u,
    field_values,
    halfplane_to_disc,
    potential_values,
    to_disc,
    to_halfplane,
)

log = logging.getLogger("logpot")

_POINT = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}
_POS_INT = {"type": "integer", "minimum": 1}

CONFIG_SCHEMA = {
    "type": "object",
    "properties": {
        "model": {"enum": [DISC, HALF_PLANE]},
        "charges": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"a": {"type": "number"}, "z": _POINT},
                "required": ["a", "z"],
                "additionalProperties": False,
            },
        },
        "family": {
            "type": "object",
            "properties": {
                "kind": {"enum": ["geometric", "power-law", "counterexample", "explicit"]},
                "ratio": {"type": "number"},
                "count": _POS_INT,
                "exponent": {"type": "number"},
                "angle": {"type": "number"},
                "weight_exponent": {"type": "number"},
                "half_width": _POS_INT,
                "lambda": {"anyOf": [{"type": "number"}, {"const": "unknown"}]},
                "accumulates": {"type": "boolean"},
            },
            "required": ["kind"],
            "additionalProperties": False,
        },
        "truncation": _POS_INT,
        "weight_tail_bound": {"type": "number", "minimum": 0},
        "tail_radius": {"type": "number", "minimum": 0},
    },
    "required": ["model"],
    "anyOf": [{"required": ["charges"]}, {"required": ["family"]}],
    "additionalProperties": False,
}

_FAMILY_SIZE = {"geometric": "count", "power-law": "count", "counterexample": "half_width"}


# ---------------------------------------------------------------------------
# Configuration I/O
# ---------------------------------------------------------------------------

def _field_line(text: str, path) -> int | None:
    """Best-effort line of the last key in ``path``."""
    keys = [p for p in path if isinstance(p, str)]
    if not keys:
        return None
    needle = json.dumps(keys[-1]) + ":"
    for i, line in enumerate(text.splitlines(), 1):
        if needle in line.replace('" :', '":'):
            return i
    return None


def _family_from_dict(d: dict, truncation: int | None) -> FamilyGenerator:
    kind = d["kind"]
    if kind == "explicit":
        lam = d.get("lambda", "unknown")
        return FamilyGenerator("explicit", lam=None if lam == "unknown" else float(lam),
                               accumulates=bool(d.get("accumulates", False)))
    size_key = _FAMILY_SIZE[kind]
    size = truncation if truncation is not None else d.get(size_key)
    if size is None:
        raise SchemaError(f"{kind} family needs {size_key!r} or a truncation", field=f"family.{size_key}")
    if kind == "geometric":
        return FamilyGenerator(kind, size=size, ratio=float(d.get("ratio", 0.5)))
    if kind == "power-law":
        if "exponent" not in d:
            raise SchemaError("power-law family needs 'exponent'", field="family.exponent")
        return FamilyGenerator(kind, size=size, exponent=float(d["exponent"]),
                               angle=float(d.get("angle", 0.0)),
                               weight_exponent=float(d.get("weight_exponent", 2.0)))
    return FamilyGenerator(kind, size=size)


def parse_config(text: str) -> ChargeConfiguration:
    """Validate JSON text and build the configuration it describes."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    try:
        jsonschema.validate(data, CONFIG_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = ".".join(str(p) for p in exc.absolute_path) or None
        raise SchemaError(exc.message, field=path, line=_field_line(text, exc.absolute_path)) from None

    model = data["model"]
    fam = _family_from_dict(data["family"], data.get("truncation")) if "family" in data else None
    if fam is not None and fam.kind != "explicit":
        if "charges" in data:
            raise SchemaError("give either generated family or explicit charges", field="charges")
        return ChargeConfiguration.from_family(fam, model)

    charges = []
    for i, ch in enumerate(data["charges"]):
        a, (x, y) = ch["a"], ch["z"]
        if not (math.isfinite(a) and a > 0):
            raise ConstraintError(f"weight a_k > 0 violated at index {i}")
        if model == DISC and not x < 1.0:
            raise ConstraintError(f"Re z_k < 1 violated at index {i}")
        if model == HALF_PLANE and not x > 0.0:
            raise ConstraintError(f"Re w_k > 0 violated at index {i}")
        charges.append(PointCharge(float(a), complex(x, y)))
    return ChargeConfiguration(model, tuple(charges), family=fam,
                               weight_tail_bound=float(data.get("weight_tail_bound", 0.0)),
                               tail_radius=float(data.get("tail_radius", 0.0)))


def config_to_dict(config: ChargeConfiguration) -> dict:
    fam = config.family
    if fam is not None and fam.kind != "explicit":
        return {"model": config.model, "family": fam.to_dict()}
    d: dict = {"model": config.model,
               "charges": [{"a": c.weight, "z": [c.location.real, c.location.imag]} for c in config.charges]}
    if fam is not None:
        d["family"] = fam.to_dict()
    if config.weight_tail_bound:
        d["weight_tail_bound"] = config.weight_tail_bound
    if config.tail_radius:
        d["tail_radius"] = config.tail_radius
    return d


def serialize_config(config: ChargeConfiguration) -> str:
    """Canonical JSON; ``parse_config`` inverts it exactly."""
    return json.dumps(config_to_dict(config), sort_keys=True, indent=1)


def config_digest(config: ChargeConfiguration) -> str:
    canon = json.dumps(config_to_dict(config), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


@dataclass(frozen=True)
class RunManifest:
    command: str
    config_digest: str
    parameters: dict = field(default_factory=dict)
    results_path: str = ""

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(asdict(self), fh, sort_keys=True, indent=1)
            fh.write("\n")


# ---------------------------------------------------------------------------
# Formatting
# ---------------------------------------------------------------------------

def _num(x: float) -> str:
    return format(float(x) + 0.0, ".16g")


def _cnum(z: complex) -> str:
    z = complex(z)
    sign = "-" if math.copysign(1.0, z.imag) < 0 and z.imag != 0 else "+"
    return f"{_num(z.real)} {sign} {_num(abs(z.imag))}i"


def _err(x: float) -> str:
    return format(float(x), ".3g")


def _pair(text: str, n: int, name: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        raise SchemaError(f"{name} must be {n} comma-separated numbers", field=name) from None
    if len(vals) != n or not all(math.isfinite(v) for v in vals):
        raise SchemaError(f"{name} must be {n} comma-separated finite numbers", field=name)
    return vals


def _write_rows(path: str, header: list[str], rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(buf.getvalue())


def _zero_rows(records) -> list[list[str]]:
    return [[_num(r.location.real), _num(r.location.imag), _num(r.residual),
             "" if r.annulus is None else str(r.annulus)] for r in records]


ZERO_HEADER = ["re", "im", "residual", "annulus"]
GRID_HEADER = ["re", "im", "u", "abs_f", "arg_f"]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _load(args) -> ChargeConfiguration:
    if args.config == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read config: {exc}") from None
    return parse_config(text)


def cmd_eval(args, out) -> int:
    config = _load(args)
    x, y = _pair(args.at, 2, "--at")
    p = complex(x, y)
    disc = config if config.model == DISC else to_disc(config)
    z = p if config.model == DISC else halfplane_to_disc(p)
    f = eval_f(disc, z)
    u = eval_potential_u(disc, z)
    print(f"z = {_cnum(z)}", file=out)
    print(f"f = {_cnum(f.value)} (±{_err(f.remainder)}); rounding <= {_err(f.rounding)}", file=out)
    if z == 1:
        print("F = undefined at z = 1", file=out)
    else:
        hp = config if config.model == HALF_PLANE else to_halfplane(config)
        w = p if config.model == HALF_PLANE else disc_to_halfplane(z)
        F = eval_F(hp, w)
        print(f"w = {_cnum(w)}", file=out)
        print(f"F = {_cnum(F.value)} (±{_err(F.remainder)}); rounding <= {_err(F.rounding)}", file=out)
    print(f"u = {_num(u.value)} (±{_err(u.remainder)}); rounding <= {_err(u.rounding)}", file=out)
    return 0


def cmd_zeros(args, out) -> int:
    config = _load(args)
    if args.region is None and args.toward_boundary is None:
        raise SchemaError("zeros needs --region and/or --toward-boundary", field="--region")
    records = []
    empty: list[int] = []
    unresolved: list[int] = []
    if args.region is not None:
        box = cz.ContourSpec.rectangle(*_pair(args.region, 4, "--region"))
        records += cz.isolate_zeros(config, box, min_box=args.min_box)
    if args.toward_boundary is not None:
        disc = config if config.model == DISC else to_disc(config)
        res = cz.zero_sequence_toward_boundary(disc, args.toward_boundary)
        records += res.zeros
        empty, unresolved = res.empty_annuli, res.unresolved_annuli
    rows = _zero_rows(records)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(ZERO_HEADER)
    w.writerows(rows)
    for j in empty:
        note = " (field not resolved on part of the annulus)" if j in unresolved else ""
        print(f"# no zero found in annulus {j}{note}", file=out)
    if args.out:
        _write_rows(args.out, ZERO_HEADER, rows)
        _manifest(args, config_digest(config), {"region": args.region, "toward_boundary": args.toward_boundary,
                                                 "min_box": args.min_box})
    return 0


def cmd_counterexample(args, out) -> int:
    if args.m < 1:
        raise DomainError("m must be a positive integer")
    model = ce.build_model(args.n)
    if model.half_width < 2 * args.m - 1:
        raise DomainError(f"--n {args.n} drops poles inside |w-1| = {4 * args.m}pi")
    lhs, rhs = ce.residue_identity(model)
    print(f"a = {_num(lhs)}", file=out)
    print(f"b = {_num(model.b)}", file=out)
    print(f"b + sum c_k = {_num(rhs.value)} (±{_err(rhs.remainder)})", file=out)
    print(f"residue identity certified = {str(ce.identity_certified(model)).lower()}", file=out)
    L = ce.certify_L(model)
    print(f"max |h - g| = {_err(L.max_difference)} (remainder {_err(L.max_remainder)}, "
          f"rounding {_err(L.max_rounding)})", file=out)
    print(f"L certified = {str(L.certified).lower()}", file=out)
    cert = ce.certify_zero_free(model, args.m)
    print(f"radius = {_num(cert.radius)}", file=out)
    print(f"winding(g) = {cert.winding_g.index}", file=out)
    print(f"winding(F) = {cert.winding_F.index}", file=out)
    print(f"poles(g) = {cert.poles_g}", file=out)
    print(f"poles(F) = {cert.poles_F}", file=out)
    print(f"zeros(g) = {cert.zeros_g}", file=out)
    print(f"zeros(F) = {cert.zeros_F}", file=out)
    print(f"zero-free certified = {str(cert.certified).lower()}", file=out)
    return 0


def cmd_check(args, out) -> int:
    config = _load(args)
    disc = config if config.model == DISC else to_disc(config)
    report = hy.check_hypotheses(disc, args.epsilon, args.sigma)
    d = report.as_dict()
    if args.json:
        print(json.dumps(d, sort_keys=True), file=out)
    else:
        for k, v in d.items():
            if k == "notes":
                for n in v:
                    print(f"note: {n}", file=out)
            else:
                print(f"{k} = {v}", file=out)
    return 0


def cmd_grid(args, out) -> int:
    config = _load(args)
    disc = config if config.model == DISC else to_disc(config)
    x0, y0, x1, y1 = _pair(args.region, 4, "--region")
    if args.nx < 2 or args.ny < 2:
        raise ConstraintError("--nx and --ny must be at least 2")
    xs = np.linspace(x0, x1, args.nx)
    ys = np.linspace(y0, y1, args.ny)
    pts = (xs[None, :] + 1j * ys[:, None]).ravel()
    with np.errstate(all="ignore"):
        f, _ = field_values(disc, pts)
        u = potential_values(disc, pts)
    rows = [[_num(p.real), _num(p.imag), _num(uu), _num(abs(ff)), _num(np.angle(ff))]
            for p, uu, ff in zip(pts, u, f)]
    _write_rows(args.out, GRID_HEADER, rows)
    params = {"region": args.region, "nx": args.nx, "ny": args.ny}
    if args.zeros_out:
        recs = cz.isolate_zeros(disc, cz.ContourSpec.rectangle(x0, y0, x1, y1))
        _write_rows(args.zeros_out, ZERO_HEADER, _zero_rows(recs))
        params["zeros_out"] = args.zeros_out
    _manifest(args, config_digest(config), params)
    print(f"wrote {len(rows)} grid points to {args.out}", file=out)
    return 0


def _manifest(args, digest: str, params: dict) -> None:
    path = args.out
    RunManifest(args.command, digest, params, path).write(path + ".manifest.json")


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"usage: {message}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="logpot", description="Zeros of logarithmic potential fields")
    ap.add_argument("--log-level", default="WARNING")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    cfg = _Parser(add_help=False)
    cfg.add_argument("--config", required=True, help="JSON configuration file, or - for stdin")

    p = sub.add_parser("eval", parents=[cfg], help="evaluate f, F and u at a point")
    p.add_argument("--at", required=True, metavar="RE,IM")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("zeros", parents=[cfg], help="isolate zeros")
    p.add_argument("--region", metavar="X0,Y0,X1,Y1")
    p.add_argument("--toward-boundary", type=int, metavar="DEPTH")
    p.add_argument("--min-box", type=float, default=cz.MIN_BOX, help="relative minimum box size")
    p.add_argument("--out", help="also write the zero table to this CSV file")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("counterexample", help="certificates for the zero-free example")
    p.add_argument("--m", type=int, default=1, help="contour |w-1| = 4 m pi")
    p.add_argument("--n", type=int, default=10_000, help="truncation half-width N")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("check", parents=[cfg], help="check the accumulation hypotheses")
    p.add_argument("--epsilon", type=float, default=hy.DEFAULT_EPSILON)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("grid", parents=[cfg], help="sample u and f on a grid")
    p.add_argument("--out", required=True)
    p.add_argument("--nx", type=int, default=101)
    p.add_argument("--ny", type=int, default=101)
    p.add_argument("--region", default="-1,-1,1,1", metavar="X0,Y0,X1,Y1")
    p.add_argument("--zeros-out", help="CSV file for zeros inside the region")
    p.set_defaults(func=cmd_grid)
    return ap


def error_record(exc: Exception, code: int) -> dict:
    rec = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    for key in ("field", "line"):
        if getattr(exc, key, None) is not None:
            rec[key] = getattr(exc, key)
    return rec


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=args.log_level.upper(), stream=err)
        return args.func(args, out)
    except Exception as exc:  # noqa: BLE001 - every failure gets one record
        if isinstance(exc, LogPotError):
            code = exc.exit_code
        elif isinstance(exc, OSError):
            code = 2
        else:
            log.debug("unexpected failure", exc_info=True)
            code = 3
        print(json.dumps(error_record(exc, code), sort_keys=True), file=err)
        return code

if __name__ == "__main__":
    sys.exit(main())
