"""Command-line front end: ``socdisj {classify,cuts,membership,separate,verify,sample-hull}``.

Instances are JSON documents::

    {"cone": {"type": "second-order", "n": 3}, "c1": [0, 0, 1], "c1_0": 1,
     "c2": [1, 0, 1], "c2_0": 1}

Results go to stdout as JSON (CSV for ``sample-hull``); a one-line summary goes
to stderr.  Exit codes: 0 success, 2 invalid instance or failed assumption,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

import numpy as np

from . import cuts as ce
from . import oracle, porder
from .cone import DEFAULT_TOL, ConeSpec
from .disjunction import Disjunction, normalize, preflight
from .errors import (AssumptionViolation, InvalidInputError, NumericalFailure, SocDisjError,
                     UnsupportedInstanceError)

EXIT_OK, EXIT_INVALID, EXIT_NUMERIC = 0, 2, 3


class ParseError(InvalidInputError):
    """Problem with an instance document, tagged with the offending field path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(path, "expected a number")
    if not math.isfinite(float(value)):
        raise ParseError(path, "number must be finite")
    return float(value)


def parse_instance(text) -> dict:
    """Validate an instance document; returns a dict with numpy coefficient arrays."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("$", f"not UTF-8: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("$", f"invalid JSON: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("$", "expected an object")
    for key in ("cone", "c1", "c1_0", "c2", "c2_0"):
        if key not in doc:
            raise ParseError(f"$.{key}", "missing field")
    cone = doc["cone"]
    if not isinstance(cone, dict):
        raise ParseError("$.cone", "expected an object")
    kind = cone.get("type")
    if kind not in ("second-order", "p-order"):
        raise ParseError("$.cone.type", "expected 'second-order' or 'p-order'")
    n = cone.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ParseError("$.cone.n", "expected an integer >= 2")
    p = 2.0
    if kind == "p-order":
        if "p" not in cone:
            raise ParseError("$.cone.p", "missing field")
        p = _number(cone["p"], "$.cone.p")
        if not p > 1.0:
            raise ParseError("$.cone.p", "exponent must exceed 1")
    out = {"cone": ConeSpec(kind, n, p) if kind == "p-order" else ConeSpec.second_order(n)}
    for key in ("c1", "c2"):
        arr = doc[key]
        if not isinstance(arr, list):
            raise ParseError(f"$.{key}", "expected an array")
        if len(arr) != n:
            raise ParseError(f"$.{key}", f"expected {n} entries, got {len(arr)}")
        out[key] = np.array([_number(v, f"$.{key}[{j}]") for j, v in enumerate(arr)])
    for key in ("c1_0", "c2_0"):
        out[key] = _number(doc[key], f"$.{key}")
    return out


def load_instance(path: str) -> Disjunction:
    with open(path, "rb") as fh:
        doc = parse_instance(fh.read())
    return normalize(doc["cone"], doc["c1"], doc["c1_0"], doc["c2"], doc["c2_0"])


def _parse_point(text: str, n: int) -> np.ndarray:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError as exc:
        raise ParseError("--point", "expected comma-separated reals") from exc
    if len(vals) != n or not all(math.isfinite(v) for v in vals):
        raise ParseError("--point", f"expected {n} finite comma-separated reals")
    return np.array(vals)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        if math.isnan(v):
            return None
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return _Float(v)
    return obj


class _Float(float):
    def __repr__(self) -> str:
        return format(float(self), ".17g")


def _iterencode(o):
    if isinstance(o, dict):
        yield "{"
        for j, (k, v) in enumerate(o.items()):
            if j:
                yield ", "
            yield json.dumps(k) + ": "
            yield from _iterencode(v)
        yield "}"
    elif isinstance(o, list):
        yield "["
        for j, v in enumerate(o):
            if j:
                yield ", "
            yield from _iterencode(v)
        yield "]"
    elif isinstance(o, _Float):
        yield repr(o)
    else:
        yield json.dumps(o)


def dumps(obj) -> str:
    """JSON with 17 significant digits for floats and ``"inf"`` strings for infinities."""
    return "".join(_iterencode(_jsonable(obj)))


def _tol() -> float:
    raw = os.environ.get("SOCDISJ_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        val = float(raw)
    except ValueError as exc:
        raise InvalidInputError(f"SOCDISJ_TOL must be a positive real, got {raw!r}") from exc
    if not (val > 0 and math.isfinite(val)):
        raise InvalidInputError(f"SOCDISJ_TOL must be a positive real, got {raw!r}")
    return val


def _instance_header(d: Disjunction) -> dict:
    return {"instance": d.to_dict(), "input_side": d.user_sides()}


def _split_or_none(d: Disjunction):
    if d.cone.is_second_order:
        return None
    return porder.from_disjunction(d)


def _checked_bsets(d: Disjunction, tol: float) -> ce.BSets:
    return ce.b_sets(d, eps=tol)


# ---------------------------------------------------------------- subcommands

def cmd_classify(d: Disjunction, args, tol: float) -> dict:
    split = _split_or_none(d)
    if split is not None:
        return {**_instance_header(d), "split": split.to_dict(),
                "hull_is_K": isinstance(split, porder.TrivialSplit)}
    report = preflight(d, tol)
    out = {**_instance_header(d), "report": report.to_dict()}
    if report.passed:
        out["b_sets"] = _checked_bsets(d, tol).to_dict()
    return out


def cmd_cuts(d: Disjunction, args, tol: float) -> dict:
    split = _split_or_none(d)
    if split is not None:
        if isinstance(split, porder.TrivialSplit):
            return {**_instance_header(d), "hull_is_K": True, "cuts": []}
        return {**_instance_header(d), "hull_is_K": False,
                "cuts": [porder.POrderSplitCut(split).to_dict()]}
    bs = _checked_bsets(d, tol)
    family = ce.cut_family(d, args.beta_grid, bs)
    return {**_instance_header(d), "b_sets": bs.to_dict(), "hull_is_K": bs.trivial,
            "cuts": [c.to_dict() for c in family]}


def cmd_membership(d: Disjunction, args, tol: float) -> dict:
    x = _parse_point(args.point, d.n)
    split = _split_or_none(d)
    if split is not None:
        if isinstance(split, porder.TrivialSplit):
            member = bool(d.cone.margin(x) >= -tol)
        else:
            member = bool(porder.porder_membership(split, x[None, :])[0])
        return {**_instance_header(d), "point": x, "member": member}
    return {**_instance_header(d), "point": x, "member": ce.membership(d, x, _checked_bsets(d, tol))}


def cmd_separate(d: Disjunction, args, tol: float) -> dict:
    x = _parse_point(args.point, d.n)
    split = _split_or_none(d)
    if split is not None:
        in_cone = float(d.cone.margin(x))
        if in_cone < -tol:
            res = {"result": "Separated", "cone_violated": True, "violation": -in_cone}
        elif isinstance(split, porder.TrivialSplit):
            res = {"result": "Member"}
        else:
            m = porder.split_cut_margin(split, x)
            res = ({"result": "Member"} if m >= -tol else
                   {"result": "Separated", "cone_violated": False, "violation": -m,
                    "cut": porder.POrderSplitCut(split).to_dict()})
        return {**_instance_header(d), "point": x, **res}
    return {**_instance_header(d), "point": x,
            **ce.separate(d, x, _checked_bsets(d, tol)).to_dict()}


def cmd_verify(d: Disjunction, args, tol: float) -> dict:
    rng = np.random.default_rng(args.seed)
    split = _split_or_none(d)
    if split is not None:
        family = [] if isinstance(split, porder.TrivialSplit) else [porder.POrderSplitCut(split)]
    else:
        family = ce.cut_family(d, args.beta_grid, _checked_bsets(d, tol))
    report = oracle.verify_validity(d, family, args.samples, args.tol, rng)
    return {**_instance_header(d), "cuts_checked": len(family), "report": report.to_dict()}


def _grid_points(d: Disjunction, g: int) -> np.ndarray:
    axes = [np.linspace(-2.0, 2.0, g)] * (d.n - 1) + [np.linspace(0.0, 3.0, g)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.column_stack([m.ravel() for m in mesh])


def cmd_sample_hull(d: Disjunction, args, tol: float) -> dict:
    X = _grid_points(d, args.grid)
    X = X[d.cone.margin(X) >= -tol]
    in_union = (X @ d.c1 >= d.c1_0 - tol) | (X @ d.c2 >= d.c2_0 - tol)
    split = _split_or_none(d)
    if split is None:
        in_hull = ce.membership_batch(d, X, _checked_bsets(d, tol))
    elif isinstance(split, porder.TrivialSplit):
        in_hull = np.ones(X.shape[0], dtype=bool)
    else:
        in_hull = porder.porder_membership(split, X, tol)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"x{j + 1}" for j in range(d.n)] + ["in_union", "in_hull"])
        for row, a, b in zip(X, in_union, in_hull):
            writer.writerow([format(v, ".17g") for v in row] + [int(a), int(b)])
    return {**_instance_header(d), "rows": int(X.shape[0]), "out": args.out,
            "in_union": int(in_union.sum()), "in_hull": int(in_hull.sum())}


COMMANDS = {"classify": cmd_classify, "cuts": cmd_cuts, "membership": cmd_membership,
            "separate": cmd_separate, "verify": cmd_verify, "sample-hull": cmd_sample_hull}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="socdisj", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", help="assumption, closedness and single-inequality report")
    p.add_argument("file")
    p = sub.add_parser("cuts", help="list the cut family")
    p.add_argument("file")
    p.add_argument("--beta-grid", type=int, default=21)
    for name in ("membership", "separate"):
        p = sub.add_parser(name, help=f"{name} query for one point")
        p.add_argument("file")
        p.add_argument("--point", required=True)
    p = sub.add_parser("verify", help="check every cut on sampled hull points")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--beta-grid", type=int, default=21)
    p = sub.add_parser("sample-hull", help="grid points with union and hull flags as CSV")
    p.add_argument("file")
    p.add_argument("--grid", type=int, default=50)
    p.add_argument("--out", required=True)
    return parser


def _summary(name: str, out: dict) -> str:
    if name == "classify" and "report" in out:
        r = out["report"]
        return (f"assumptions {'ok' if r['assumption1_holds'] and r['assumption2_holds'] else 'FAIL'}, "
                f"case {r['case_tag']}, closed {r['conv_closed']}, single {r['single_inequality']}")
    if name == "cuts":
        return f"{len(out['cuts'])} cuts"
    if name in ("separate", "membership"):
        return str(out.get("result", out.get("member")))
    if name == "verify":
        rep = out["report"]
        return f"{'passed' if rep['passed'] else 'FAILED'}, max violation {rep['max_violation']:.3e}"
    if name == "sample-hull":
        return f"wrote {out['rows']} rows to {out['out']}"
    return name


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    args = build_parser().parse_args(argv)
    try:
        tol = _tol()
        d = load_instance(args.file)
        out = COMMANDS[args.command](d, args, tol)
    except (AssumptionViolation, InvalidInputError, UnsupportedInstanceError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except (NumericalFailure, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return EXIT_NUMERIC
    except SocDisjError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    if args.command != "sample-hull":
        stdout.write(dumps(out) + "\n")
    print(_summary(args.command, out), file=stderr)
    # a classify report is still printed when the assumptions fail
    if args.command == "classify" and not out.get("report", {}).get("passed", True):
        return EXIT_INVALID
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
