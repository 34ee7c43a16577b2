"""Command-line front end.

Exit codes: 0 success, 1 the ring fails validation, 2 unsupported input,
3 an internal cross-check failed.
"""

from __future__ import annotations

import argparse
import ast
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import gf2
from . import ring_inv as ri
from .errors import CrossCheckError, InputError
from .geomfix import (
    METHODS,
    DefectReport,
    GeomFixResult,
    format_terms,
    norm_quotient,
    pi0_geometric_fixed_points,
    product_defect,
    relation_subgroup,
    resolve_max_enum,
)
from .oracle import brute_force_relation_subgroup, coequalizer_pi0, format_factors, homology_H1
from .ring_inv import RingWithInvolution, validate
from .witt import GENUINE_NOTE, witt_group_structure

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_CROSSCHECK = 0, 1, 2, 3
SPEC_FIELDS = ("name", "orders", "unit", "mul", "involution", "commutative")
_INT64 = 2 ** 63


class ValidationFailed(Exception):
    """The file parsed but does not describe a ring with anti-involution."""


# ---------------------------------------------------------------------------
# ring spec files
# ---------------------------------------------------------------------------

def _int(x: Any, where: str) -> int:
    if isinstance(x, bool):
        raise InputError(f"{where}: expected an integer, got a boolean")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x, 10)
        except ValueError:
            pass
    raise InputError(f"{where}: expected an integer, got {x!r}")


def _int_list(x: Any, where: str) -> List[int]:
    if not isinstance(x, list):
        raise InputError(f"{where}: expected a list")
    return [_int(v, f"{where}[{i}]") for i, v in enumerate(x)]


def _enc(x: int):
    return str(x) if abs(x) >= _INT64 else x


def ring_to_spec(R: RingWithInvolution) -> Dict[str, Any]:
    return {
        "name": R.name,
        "orders": [_enc(d) for d in R.orders],
        "unit": [_enc(c) for c in R.unit],
        "mul": [[[_enc(c) for c in v] for v in row] for row in R.mul_table],
        "involution": [[_enc(c) for c in row] for row in R.involution],
        "commutative": bool(R.commutative),
    }


def ring_from_spec(data: Any) -> RingWithInvolution:
    """Parse a spec dictionary; raises InputError or ValidationFailed."""
    if not isinstance(data, dict):
        raise InputError("ring spec must be a JSON object")
    missing = [f for f in SPEC_FIELDS if f not in data]
    extra = sorted(set(data) - set(SPEC_FIELDS))
    if missing:
        raise InputError(f"ring spec is missing fields: {', '.join(missing)}")
    if extra:
        raise InputError(f"ring spec has unknown fields: {', '.join(extra)}")
    if not isinstance(data["name"], str):
        raise InputError("name must be a string")
    if not isinstance(data["commutative"], bool):
        raise InputError("commutative must be true or false")
    orders = _int_list(data["orders"], "orders")
    unit = _int_list(data["unit"], "unit")
    if not isinstance(data["mul"], list) or not all(isinstance(r, list) for r in data["mul"]):
        raise InputError("mul must be a list of lists of vectors")
    mul = [[_int_list(v, f"mul[{i}][{j}]") for j, v in enumerate(row)] for i, row in enumerate(data["mul"])]
    if not isinstance(data["involution"], list):
        raise InputError("involution must be a matrix")
    invol = [_int_list(row, f"involution[{i}]") for i, row in enumerate(data["involution"])]
    try:
        R = RingWithInvolution(tuple(orders), tuple(tuple(tuple(v) for v in row) for row in mul),
                               tuple(unit), tuple(tuple(r) for r in invol), data["commutative"], data["name"])
    except InputError as e:
        raise ValidationFailed(str(e)) from e
    report = validate(R)
    if not report:
        raise ValidationFailed(_report_text(report))
    return R


def _report_text(report) -> str:
    lines = [f"{f.axiom} fails at {f.witness}" + (f": {f.detail}" if f.detail else "") for f in report.failures]
    return "\n".join(lines)


def load_ring(path: str) -> RingWithInvolution:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: not valid JSON ({e.msg} at line {e.lineno})") from e
    return ring_from_spec(data)


def dump_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# builtin ring expressions
# ---------------------------------------------------------------------------

def _group_table(name: str) -> Tuple[List[List[int]], str]:
    if name == "S3":
        return ri.symmetric_group_table(3), "S3"
    if name == "V4":
        t = [[a ^ b for b in range(4)] for a in range(4)]
        return t, "V4"
    if name.startswith("C") and name[1:].isdigit() and int(name[1:]) >= 1:
        m = int(name[1:])
        return ri.cyclic_group_table(m), name
    raise InputError(f"unknown group {name!r}; use C<n>, S3 or V4")


def _group_ring(R, group):
    table, gname = _group_table(group)
    return ri.group_ring(R, table, gname)


BUILTINS: Dict[str, Callable[..., RingWithInvolution]] = {
    "cyclic": ri.cyclic_ring,
    "finite_field": ri.finite_field,
    "trunc_poly": ri.truncated_polynomial,
    "matrix": ri.matrix_ring,
    "group_ring": _group_ring,
    "product": ri.product,
    "gaussian": ri.gaussian_integers,
    "quaternion": ri.quaternion_ring,
}


def _eval_node(node: ast.AST):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, str)) and not isinstance(node.value, bool):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        v = _eval_node(node.operand)
        if isinstance(v, int):
            return -v
    if isinstance(node, ast.Name):
        # bare words: families without arguments or group/involution names
        if node.id in BUILTINS:
            return _call(node.id, [])
        return node.id
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        return _call(node.func.id, [_eval_node(a) for a in node.args])
    raise InputError(f"cannot interpret {ast.dump(node)} in a ring expression")


def _call(family: str, args: list) -> RingWithInvolution:
    fn = BUILTINS.get(family)
    if fn is None:
        raise InputError(f"unknown ring family {family!r}; choose from {', '.join(BUILTINS)}")
    try:
        return fn(*args)
    except TypeError as e:
        raise InputError(f"bad arguments for {family}: {e}") from e


def parse_ring_expression(text: str) -> RingWithInvolution:
    """Evaluate e.g. ``trunc_poly(finite_field(2), 3)`` or ``cyclic(4)``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as e:
        raise InputError(f"cannot parse ring expression {text!r}") from e
    R = _eval_node(tree.body)
    if not isinstance(R, RingWithInvolution):
        raise InputError(f"{text!r} does not describe a ring")
    return R


def builtin_ring(family: str, params: Sequence[str]) -> RingWithInvolution:
    if "(" in family:
        if params:
            raise InputError("give either a full expression or a family with parameters")
        return parse_ring_expression(family)
    args = []
    for p in params:
        try:
            args.append(int(p))
            continue
        except ValueError:
            pass
        args.append(parse_ring_expression(p) if "(" in p or p in BUILTINS else p)
    return _call(family, args)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def _order_text(R: RingWithInvolution) -> str:
    return str(R.order()) if R.is_finite else "infinite"


def _result_dict(R: RingWithInvolution, res: GeomFixResult, witness: bool) -> Dict[str, Any]:
    out = {
        "ring": R.name,
        "order": R.order() if R.is_finite else None,
        "method": "all" if res.cross_check else res.method,
        "invariant_factors": list(res.invariant_factors),
        "f2_dimension": res.f2_dimension,
    }
    if res.cross_check:
        out["cross_check"] = {
            "methods": res.cross_check["methods"],
            "agree": res.cross_check["agree"],
            "skipped": res.cross_check["skipped"],
        }
    if witness:
        out["witnesses"] = [format_terms(R, w) for w in res.witnesses]
    return out


def _result_text(d: Dict[str, Any]) -> List[str]:
    lines = [
        f"ring: {d['ring']}",
        f"order: {d['order'] if d['order'] is not None else 'infinite'}",
        f"method: {d['method']}",
        f"invariant_factors: {format_factors(d['invariant_factors'])}",
        f"f2_dimension: {d['f2_dimension']}",
    ]
    if "cross_check" in d:
        cc = d["cross_check"]
        parts = [f"{m}={format_factors(f)}" for m, f in cc["methods"].items()]
        lines.append("cross_check: " + " ".join(parts) + (" agree" if cc["agree"] else " DISAGREE"))
        if cc["skipped"]:
            lines.append("skipped: " + ", ".join(cc["skipped"]))
    if "witnesses" in d:
        lines.append("witnesses:")
        lines.extend(f"  {w}" for w in d["witnesses"] or ["(none)"])
    return lines


def _emit(args, obj: Any, lines: List[str]) -> None:
    if args.json:
        print(dump_json(obj))
    else:
        for line in lines:
            print(line)


def _run_guarded(fn: Callable[[], int]) -> int:
    try:
        return fn()
    except ValidationFailed as e:
        print(f"invalid ring: {e}", file=sys.stderr)
        return EXIT_INVALID
    except InputError as e:
        print(f"unsupported input: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except CrossCheckError as e:
        print(f"cross-check failure: {e}", file=sys.stderr)
        return EXIT_CROSSCHECK


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
        data = json.loads(text)
    except OSError as e:
        raise InputError(f"cannot read {args.file}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{args.file}: not valid JSON ({e.msg})") from e
    try:
        R = ring_from_spec(data)
    except ValidationFailed as e:
        failures = str(e).splitlines()
        obj = {"file": args.file, "valid": False, "failures": failures}
        _emit(args, obj, ["valid: false"] + [f"  {f}" for f in failures])
        return EXIT_INVALID
    obj = {"file": args.file, "valid": True, "ring": R.name, "rank": R.n,
           "order": R.order() if R.is_finite else None}
    _emit(args, obj, ["valid: true", f"ring: {R.name}", f"order: {_order_text(R)}"])
    return EXIT_OK


def _compute_one(path: str, args) -> Tuple[int, Dict[str, Any]]:
    R = load_ring(path)
    res = pi0_geometric_fixed_points(R, args.method, args.max_enum)
    return EXIT_OK, _result_dict(R, res, args.witness)


def cmd_compute(args) -> int:
    if args.batch:
        if args.file:
            raise InputError("give either a file or --batch, not both")
        folder = Path(args.batch)
        if not folder.is_dir():
            raise InputError(f"{args.batch} is not a directory")
        files = sorted(p for p in folder.iterdir() if p.suffix == ".json")
        worst = EXIT_OK
        records, lines = [], []
        for p in files:
            code, rec = _batch_entry(str(p), args)
            worst = max(worst, code)
            records.append(rec)
            lines.append(f"== {p.name}")
            lines.extend(_result_text(rec) if code == EXIT_OK else [f"error: {rec['error']}", f"exit: {code}"])
        _emit(args, records, lines)
        return worst
    if not args.file:
        raise InputError("compute needs a ring file or --batch DIR")
    code, rec = _compute_one(args.file, args)
    _emit(args, rec, _result_text(rec))
    return code


def _batch_entry(path: str, args) -> Tuple[int, Dict[str, Any]]:
    name = Path(path).name
    try:
        code, rec = _compute_one(path, args)
    except ValidationFailed as e:
        return EXIT_INVALID, {"file": name, "error": str(e), "exit": EXIT_INVALID}
    except InputError as e:
        return EXIT_UNSUPPORTED, {"file": name, "error": str(e), "exit": EXIT_UNSUPPORTED}
    except CrossCheckError as e:
        return EXIT_CROSSCHECK, {"file": name, "error": str(e), "exit": EXIT_CROSSCHECK}
    rec = dict(rec, file=name)
    return code, rec


def _same_span(a: Sequence[int], b: Sequence[int], dim: int) -> bool:
    sa, sb = gf2.F2Span(dim, a), gf2.F2Span(dim, b)
    return all(v in sa for v in b) and all(v in sb for v in a)


def cmd_oracle(args) -> int:
    R = load_ring(args.file)
    cap = resolve_max_enum(args.max_enum)
    nq = norm_quotient(R, cap)
    q = list(nq.Q.invariant_factors())
    h1 = homology_H1(R, check=False).invariant_factors()
    linear = pi0_geometric_fixed_points(R, "linear", cap)
    coeq = coequalizer_pi0(R)
    checks = {
        "H1_equals_Q": h1 == q,
        "coequalizer_equals_linear": list(coeq.invariant_factors) == list(linear.invariant_factors),
    }
    brute = None
    if R.is_finite and R.order() <= cap:
        gens_b = brute_force_relation_subgroup(R, nq, cap)
        gens_l = relation_subgroup(R, nq, "linear")
        brute = gf2.F2Span(nq.dim ** 2, gens_b).rank
        checks["brute_force_span_equals_linear"] = _same_span(gens_b, gens_l, nq.dim ** 2)
    obj = {
        "ring": R.name,
        "Q": q,
        "H1": h1,
        "linear": list(linear.invariant_factors),
        "coequalizer": list(coeq.invariant_factors),
        "brute_force_dim_I": brute,
        "checks": checks,
    }
    lines = [
        f"ring: {R.name}",
        f"Q: {format_factors(q)}",
        f"H1: {format_factors(h1)}",
        f"linear: {format_factors(linear.invariant_factors)}",
        f"coequalizer: {format_factors(coeq.invariant_factors)}",
        f"brute_force_dim_I: {brute if brute is not None else 'skipped'}",
    ] + [f"{k}: {'ok' if v else 'MISMATCH'}" for k, v in checks.items()]
    _emit(args, obj, lines)
    if not all(checks.values()):
        print("cross-check failure: " + ", ".join(k for k, v in checks.items() if not v), file=sys.stderr)
        return EXIT_CROSSCHECK
    return EXIT_OK


def cmd_witt(args) -> int:
    R = load_ring(args.file)
    if not R.commutative:
        raise InputError(f"{R.name} is not commutative")
    if not R.is_finite:
        raise InputError(f"{R.name} is infinite")
    cap = resolve_max_enum(args.max_enum)
    if R.order() ** 2 > cap:
        raise InputError(f"W({R.name}) has {R.order() ** 2} elements > enumeration cap {cap}")
    wf = witt_group_structure(R)
    gf = list(pi0_geometric_fixed_points(R, "all", args.max_enum).invariant_factors)
    obj = {
        "ring": R.name,
        "witt_factors": wf,
        "geomfix_factors": gf,
        "isomorphic_as_groups": wf == gf,
        "involution": "identity" if R.is_identity_involution() else "nontrivial",
        "note": GENUINE_NOTE,
    }
    lines = [
        f"ring: {R.name}",
        f"witt_factors: {format_factors(wf)}",
        f"geomfix_factors: {format_factors(gf)}",
        f"isomorphic_as_groups: {str(wf == gf).lower()}",
        f"note: {GENUINE_NOTE}",
    ]
    _emit(args, obj, lines)
    return EXIT_OK


def _defect_dict(rep: DefectReport, witness: bool) -> Dict[str, Any]:
    P = rep.ring
    t1, t2 = rep.target
    out = {
        "product": P.name,
        "source": list(rep.source.invariant_factors),
        "target": [list(t1.invariant_factors), list(t2.invariant_factors)],
        "injective": rep.injective,
        "surjective": rep.surjective,
        "kernel_witnesses": [format_terms(P, w) for w in rep.kernel_witnesses],
    }
    if witness:
        out["source_witnesses"] = [format_terms(P, w) for w in rep.source.witnesses]
    return out


def cmd_defect(args) -> int:
    R1, R2 = load_ring(args.file1), load_ring(args.file2)
    rep = product_defect(R1, R2, args.method, args.max_enum)
    d = _defect_dict(rep, args.witness)
    lines = [
        f"product: {d['product']}",
        f"source: {format_factors(d['source'])}",
        f"target: {format_factors(d['target'][0])} x {format_factors(d['target'][1])}",
        f"injective: {str(d['injective']).lower()}",
        f"surjective: {str(d['surjective']).lower()}",
    ]
    lines.extend(f"kernel_witness: {w}" for w in d["kernel_witnesses"])
    if args.witness:
        lines.append("source_witnesses:")
        lines.extend(f"  {w}" for w in d["source_witnesses"])
    _emit(args, d, lines)
    return EXIT_OK


def cmd_builtin(args) -> int:
    R = builtin_ring(args.family, args.params)
    if args.name:
        R = R.renamed(args.name)
    print(dump_json(ring_to_spec(R)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="thrfix",
        description="Component group of the geometric fixed points of real THH for rings with anti-involution.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, enum=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if enum:
            p.add_argument("--max-enum", type=int, default=None, metavar="N",
                           help="enumeration cap on ring order (default $THRFIX_MAX_ENUM or 4096)")

    p = sub.add_parser("validate", help="check the ring axioms of a spec file")
    p.add_argument("file")
    common(p, enum=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("compute", help="compute the invariant of a ring")
    p.add_argument("file", nargs="?")
    p.add_argument("--method", choices=METHODS, default="all")
    p.add_argument("--witness", action="store_true", help="print spanning tensor classes")
    p.add_argument("--batch", metavar="DIR", help="process every *.json file in DIR")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("oracle", help="run the chain-complex and brute-force cross-checks")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("witt", help="compare length-2 Witt vectors with the invariant")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("defect", help="compare the invariant of R1 x R2 with the product")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--method", choices=("linear", "enumerate", "coequalizer", "all"), default="linear")
    p.add_argument("--witness", action="store_true")
    common(p)
    p.set_defaults(func=cmd_defect)

    p = sub.add_parser("builtin", help="emit a ring spec for a built-in family")
    p.add_argument("family", help=f"one of {', '.join(BUILTINS)} or a full expression")
    p.add_argument("params", nargs="*")
    p.add_argument("--name", help="override the ring name")
    p.set_defaults(func=cmd_builtin)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        sys.stdout.reconfigure(encoding="utf-8")
    except (AttributeError, ValueError):
        pass
    args = build_parser().parse_args(argv)
    return _run_guarded(lambda: args.func(args))


if __name__ == "__main__":
    sys.exit(main())
