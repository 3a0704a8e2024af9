"""Command line front end (``hh``).

Exit codes: 0 ok, 1 cross-check mismatch, 2 parse error, 3 precondition
violation. Reports are JSON with sorted keys; ``--table`` renders the same
report as aligned text.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from fractions import Fraction

from . import reps
from .algebra import BoundQuiverAlgebra, Relation
from .errors import EndpointMismatch, PreconditionError
from .families import (CanonicalSpec, beilinson_algebra, canonical_algebra, linear_quiver_algebra,
                       squid_algebra)
from .geometry import (WeightedCurveSpec, companion_invariants, curve_hh_dims, euler_classify,
                       hurwitz_check, realizable_as_quotient, weight_condition)
from .hochschild import (build_hh_complex, hh_cohomology, hh_envelope_oracle, hh_homology_acyclic,
                         oracle_cap)
from .quiver import Arrow, PathVector, Quiver, connected_components

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(Exception):
    pass


# input parsing ---------------------------------------------------------------


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"{x!r} is not an exact rational (use an integer or a \"p/q\" string)")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.match(x.strip()):
        try:
            return Fraction(x.strip())
        except ZeroDivisionError:
            raise ParseError(f"{x!r} has a zero denominator") from None
    raise ParseError(f"{x!r} is not an exact rational (use an integer or a \"p/q\" string)")


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def _get(obj: dict, key: str, what: str):
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be an object")
    if key not in obj:
        raise ParseError(f"{what} is missing the key {key!r}")
    return obj[key]


def _int_list(xs, what: str) -> list[int]:
    if not isinstance(xs, list):
        raise ParseError(f"{what} must be a list")
    return [_int(x, what) for x in xs]


def _points(raw, what: str):
    if raw is None:
        return None
    if not isinstance(raw, list):
        raise ParseError(f"{what} must be a list")
    return [parse_rational(p) for p in raw]


def _fmt(f: Fraction) -> str:
    return str(f)


def parse_algebra_object(obj: dict) -> tuple[BoundQuiverAlgebra, dict]:
    vertices = _get(obj, "vertices", "algebra")
    if not isinstance(vertices, list) or not all(isinstance(v, (str, int)) and not isinstance(v, bool)
                                                 for v in vertices):
        raise ParseError("algebra.vertices must be a list of names")
    arrows_raw = _get(obj, "arrows", "algebra")
    if not isinstance(arrows_raw, list):
        raise ParseError("algebra.arrows must be a list")
    vset = set(vertices)
    arrows = []
    for a in arrows_raw:
        aid, src, tgt = _get(a, "id", "arrow"), _get(a, "from", "arrow"), _get(a, "to", "arrow")
        if not isinstance(aid, str):
            raise ParseError(f"arrow id {aid!r} must be a string")
        if src not in vset or tgt not in vset:
            raise ParseError(f"arrow {aid!r} refers to an unknown vertex")
        arrows.append(Arrow(aid, src, tgt))
    ids = {a.id for a in arrows}
    rels_raw = obj.get("relations", [])
    if not isinstance(rels_raw, list):
        raise ParseError("algebra.relations must be a list")
    q = Quiver(vertices, arrows)
    rels = []
    echo_rels = []
    for rel in rels_raw:
        if not isinstance(rel, list) or not rel:
            raise ParseError("each relation must be a non-empty list of terms")
        terms = []
        echo_terms = []
        for t in rel:
            c = parse_rational(_get(t, "coeff", "relation term"))
            path = _get(t, "path", "relation term")
            if not isinstance(path, list) or not path or not all(isinstance(x, str) for x in path):
                raise ParseError("relation paths must be non-empty lists of arrow ids")
            for x in path:
                if x not in ids:
                    raise ParseError(f"relation refers to unknown arrow {x!r}")
            try:
                p = q.path(path)
            except EndpointMismatch as exc:
                raise ParseError(f"relation path {path} is not composable: {exc}") from exc
            terms.append((p, c))
            echo_terms.append({"coeff": _fmt(c), "path": list(path)})
        body = PathVector(terms)
        if not body:
            raise PreconditionError("a relation must be a nonzero combination of paths")
        rels.append(Relation(body))
        echo_rels.append(echo_terms)
    echo = {
        "vertices": vertices,
        "arrows": [{"from": a.source, "id": a.id, "to": a.target} for a in arrows],
        "relations": echo_rels,
    }
    return BoundQuiverAlgebra(q, rels), {"algebra": echo}


def parse_family_object(obj: dict) -> tuple[BoundQuiverAlgebra, dict]:
    kind = _get(obj, "kind", "family")
    if kind in ("canonical", "squid"):
        weights = _int_list(_get(obj, "weights", "family"), "family.weights")
        pts = _points(obj.get("points"), "family.points")
        spec = CanonicalSpec(weights, pts)
        alg = canonical_algebra(spec) if kind == "canonical" else squid_algebra(spec)
        echo = {"kind": kind, "points": [_fmt(p) for p in spec.points], "weights": list(spec.weights)}
    elif kind == "beilinson":
        n = _int(_get(obj, "n", "family"), "family.n")
        alg = beilinson_algebra(n)
        echo = {"kind": kind, "n": n}
    elif kind == "linear":
        n = _int(_get(obj, "n", "family"), "family.n")
        zr = _int_list(obj.get("zero_relations", []), "family.zero_relations")
        alg = linear_quiver_algebra(n, zr)
        echo = {"kind": kind, "n": n, "zero_relations": zr}
    else:
        raise ParseError(f"unknown family kind {kind!r}")
    return alg, {"family": echo}


def curve_as_canonical(spec: WeightedCurveSpec, points) -> CanonicalSpec:
    """Genus-0 curve -> canonical spec; missing stacky points get weight 1."""
    ws = list(spec.weights) + [1] * max(0, 2 - spec.m)
    return CanonicalSpec(ws, points)


def parse_document(text: str):
    """Return (kind, payload, echo). kind is 'algebra' or 'curve'."""
    try:
        doc = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("the input must be a JSON object")
    keys = [k for k in ("algebra", "curve", "family") if k in doc]
    if len(keys) != 1:
        raise ParseError("the input needs exactly one of 'algebra', 'curve', 'family'")
    key = keys[0]
    if key == "algebra":
        alg, echo = parse_algebra_object(doc["algebra"])
        return "algebra", alg, echo
    if key == "family":
        alg, echo = parse_family_object(doc["family"])
        return "algebra", alg, echo
    obj = doc["curve"]
    genus = _int(_get(obj, "genus", "curve"), "curve.genus")
    weights = _int_list(obj.get("weights", []), "curve.weights")
    pts = _points(obj.get("points"), "curve.points")
    spec = WeightedCurveSpec(genus, tuple(weights), None if pts is None else tuple(pts))
    echo = {"curve": {"genus": genus, "weights": weights}}
    if pts is not None:
        echo["curve"]["points"] = [_fmt(p) for p in pts]
    return "curve", spec, echo


def _reject_float(s: str):
    raise ParseError(f"floating point literal {s} is not allowed; use \"p/q\" strings")


# reports ---------------------------------------------------------------------


def algebra_report(alg: BoundQuiverAlgebra, method: str) -> dict:
    gd = reps.global_dimension(alg)
    if method == "auto":
        method = "complex" if gd <= 2 else "oracle"
    if method == "complex":
        rep = hh_cohomology(alg)
    else:
        rep = hh_envelope_oracle(alg)
    out = rep.as_dict()
    out.update({
        "connected_components": connected_components(alg.quiver),
        "global_dim": gd,
        "total_dim": alg.total_dim,
    })
    return out


def curve_report(spec: WeightedCurveSpec) -> dict:
    dims = curve_hh_dims(spec)
    out = dims.as_dict()
    out["realizable_as_quotient"] = realizable_as_quotient(spec)
    out["method"] = "curve-formula"
    return out


def classify_report(weights: list[int]) -> dict:
    cl = euler_classify(weights)
    out = cl.as_dict()
    out["weights"] = list(weights)
    out["weight_condition"] = weight_condition(weights)
    if len(weights) >= 2:
        inv = companion_invariants(weights)
        out["companion"] = {"genus": inv.genus, "group_order": inv.group_order,
                            "lcm": inv.lcm, "omega": inv.omega}
    else:
        out["companion"] = None
    return out


def companion_report(weights: list[int]) -> dict:
    inv = companion_invariants(weights)
    out = inv.as_dict()
    out["hurwitz_holds"] = hurwitz_check(weights) if inv.weight_condition else None
    return out


# cross-check -----------------------------------------------------------------


def _point_sets(n: int, count: int) -> list[tuple]:
    """``count`` distinct valid point tuples for n weights."""
    need = max(n - 2, 0)
    if need == 0:
        return [()]
    base = [
        tuple(Fraction(k) for k in range(1, need + 1)),
        tuple(Fraction(-k, k + 1) for k in range(1, need + 1)),
        tuple(Fraction(2 * k + 1, 3) for k in range(1, need + 1)),
        tuple(Fraction(-(k + 2)) for k in range(1, need + 1)),
        tuple(Fraction(1, k + 4) for k in range(1, need + 1)),
    ]
    while len(base) < count:
        s = len(base)
        base.append(tuple(Fraction(k * (s + 1), s + 2) for k in range(1, need + 1)))
    return base[:count]


def crosscheck_specs(max_arms: int, max_weight: int, point_sets: int = 1):
    """All canonical specs in range: n = 2 with weights 1..A, 3 <= n <= N with 2..A."""
    for a1, a2 in itertools.product(range(1, max_weight + 1), repeat=2):
        yield (a1, a2), ()
    for n in range(3, max_arms + 1):
        for ws in itertools.product(range(2, max_weight + 1), repeat=n):
            for pts in _point_sets(n, point_sets):
                yield ws, pts


def _corrupted(alg: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    """Negative control: move the last point onto x_2 = 0 by dropping the X_1 term."""
    if not alg.generators:
        return alg
    gens = list(alg.generators)
    body = {p: c for p, c in gens[-1].body.terms.items() if not p.arrows[0].startswith("x1_")}
    gens[-1] = Relation(PathVector(body))
    return BoundQuiverAlgebra(alg.quiver, gens)


def crosscheck_case(weights, points, with_oracle: bool, corrupt: bool = False, cap: int | None = None) -> dict:
    spec = CanonicalSpec(list(weights), list(points))
    alg = canonical_algebra(spec)
    if corrupt:
        alg = _corrupted(alg)
    problems = []
    rep = hh_cohomology(alg)
    stacky = tuple(a for a in weights if a > 1)
    formula = curve_hh_dims(WeightedCurveSpec(0, stacky))
    if rep.triple() != (formula.hh0, formula.hh1, formula.hh2):
        problems.append(f"complex {rep.triple()} != formula {(formula.hh0, formula.hh1, formula.hh2)}")
    hom = hh_homology_acyclic(alg)
    if hom.get(0, 0) != formula.hh_homology[0]:
        problems.append(f"HH_0 {hom.get(0, 0)} != formula {formula.hh_homology[0]}")
    n = len(weights)
    if n >= 3:
        rg = build_hh_complex(alg).rank_g
        if rg != n - 1:
            problems.append(f"rank g = {rg} != n - 1 = {n - 1}")
    oracle = None
    if with_oracle:
        limit = oracle_cap() if cap is None else cap
        if alg.total_dim <= limit:
            o = hh_envelope_oracle(alg, max_degree=4, cap=limit)
            oracle = "ran"
            if o.triple() != rep.triple() or not o.higher_vanish:
                problems.append(f"oracle cohomology {o.cohomology} != complex {rep.triple()}")
            want = {d: (hom.get(d, 0)) for d in range(5)}
            if o.homology != want:
                problems.append(f"oracle homology {o.homology} != {want}")
        else:
            oracle = "skipped (above cap)"
    case = {
        "hh": list(rep.triple()),
        "points": [_fmt(p) for p in points],
        "status": "fail" if problems else "pass",
        "total_dim": alg.total_dim,
        "weights": list(weights),
    }
    if oracle is not None:
        case["oracle"] = oracle
    if problems:
        case["problems"] = problems
    return case


def run_crosscheck(max_arms: int, max_weight: int, with_oracle: bool, point_sets: int = 1,
                   corrupt: bool = False) -> dict:
    cases = [crosscheck_case(ws, pts, with_oracle, corrupt)
             for ws, pts in crosscheck_specs(max_arms, max_weight, point_sets)]
    cases.sort(key=lambda c: (len(c["weights"]), c["weights"], c["points"]))
    failed = sum(c["status"] == "fail" for c in cases)
    return {
        "cases": cases,
        "input": {"corrupt": corrupt, "max_arms": max_arms, "max_weight": max_weight,
                  "point_sets": point_sets, "with_oracle": with_oracle},
        "summary": {"failed": failed, "passed": len(cases) - failed, "total": len(cases)},
    }


# rendering --------------------------------------------------------------------


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def render_table(report: dict, prefix: str = "") -> str:
    lines = []
    for key in sorted(report):
        val = report[key]
        name = f"{prefix}{key}"
        if isinstance(val, dict) and val:
            lines.append(render_table(val, name + ".").rstrip("\n"))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            for i, item in enumerate(val):
                lines.append(render_table(item, f"{name}[{i}].").rstrip("\n"))
        else:
            lines.append(f"{name:<36} {json.dumps(val, sort_keys=True)}")
    return "\n".join(lines) + "\n"


# entry point -------------------------------------------------------------------


def _weights_arg(s: str) -> list[int]:
    s = s.strip()
    if not s:
        return []
    try:
        return [int(x) for x in s.split(",")]
    except ValueError as exc:
        raise ParseError(f"weights must be comma-separated integers, got {s!r}") from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hh", description="Hochschild dimensions of bound quiver algebras and weighted curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("algebra", help="HH of an algebra, family or genus-0 curve given as JSON")
    a.add_argument("--input", required=True, help="JSON file, or - for stdin")
    a.add_argument("--method", choices=["auto", "complex", "oracle"], default="auto")
    a.add_argument("--table", action="store_true")

    c = sub.add_parser("curve", help="closed-form HH of a weighted curve")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--weights", default="")
    c.add_argument("--table", action="store_true")

    k = sub.add_parser("classify", help="Euler characteristic class and quotient realization")
    k.add_argument("--weights", required=True)
    k.add_argument("--table", action="store_true")

    m = sub.add_parser("companion", help="invariants of the projective companion")
    m.add_argument("--weights", required=True)
    m.add_argument("--table", action="store_true")

    x = sub.add_parser("crosscheck", help="formula vs complex (vs oracle) over canonical algebras")
    x.add_argument("--max-arms", type=int, required=True)
    x.add_argument("--max-weight", type=int, required=True)
    x.add_argument("--with-oracle", action="store_true")
    x.add_argument("--point-sets", type=int, default=1, help="point tuples per weight vector")
    x.add_argument("--corrupt", action="store_true", help="negative control: corrupt one relation")
    x.add_argument("--table", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = EXIT_OK
    try:
        if args.command == "algebra":
            text = sys.stdin.read() if args.input == "-" else _read(args.input)
            kind, payload, echo = parse_document(text)
            if kind == "curve":
                if payload.genus != 0:
                    raise PreconditionError("only genus-0 curves have a canonical algebra")
                pts = None if payload.points is None else list(payload.points)
                alg = canonical_algebra(curve_as_canonical(payload, pts))
                report = algebra_report(alg, args.method)
                report["formula"] = curve_report(payload)
            else:
                report = algebra_report(payload, args.method)
            report["input"] = echo
        elif args.command == "curve":
            spec = WeightedCurveSpec(args.genus, tuple(_weights_arg(args.weights)))
            report = curve_report(spec)
            report["input"] = {"genus": args.genus, "weights": list(spec.weights)}
        elif args.command == "classify":
            ws = _weights_arg(args.weights)
            report = classify_report(ws)
            report["input"] = {"weights": ws}
        elif args.command == "companion":
            ws = _weights_arg(args.weights)
            report = companion_report(ws)
            report["input"] = {"weights": ws}
        else:
            if args.max_arms < 2 or args.max_weight < 1 or args.point_sets < 1:
                raise PreconditionError("need --max-arms >= 2, --max-weight >= 1, --point-sets >= 1")
            report = run_crosscheck(args.max_arms, args.max_weight, args.with_oracle,
                                    args.point_sets, args.corrupt)
            if report["summary"]["failed"]:
                status = EXIT_MISMATCH
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        sys.stderr.write(f"precondition violated ({type(exc).__name__}): {exc}\n")
        return EXIT_PRECONDITION
    sys.stdout.write(render_table(report) if args.table else render_json(report))
    return status


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


if __name__ == "__main__":
    raise SystemExit(main())
