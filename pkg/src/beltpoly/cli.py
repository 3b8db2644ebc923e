"""Command-line interface.

Every command writes one JSON document (or CSV with ``--csv``) to standard
output. Wall-clock timing is reported under a separate ``timing`` key and is
omitted entirely with ``--no-timing``, which makes output byte-stable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import angles
from .arrangements import (
    Arrangement,
    boolean_arrangement,
    braid_arrangement,
    characteristic_polynomial,
    type_b_arrangement,
)
from .combinatorics import stirling1_b_row, stirling1_row, stirling2, stirling2_b
from .errors import BeltpolyError, NotCertifiedError
from .exact_linalg import RationalMatrix, as_rational
from .permutohedra import PermutohedronA, PermutohedronB, enumerate_faces, face_vector, face_vertices
from .projection import (
    BeltPolytopeByArrangement,
    ProjectionSetup,
    default_threads,
    describe,
    face_count_report,
)
from .verify import run_suite


def _fmt(v) -> str | int:
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def _parse_x(text: str) -> list[Fraction]:
    return [as_rational(t) for t in text.replace(" ", "").split(",") if t]


def _load_arrangement(args) -> Arrangement:
    if getattr(args, "arrangement", None):
        return Arrangement.from_text(Path(args.arrangement).read_text())
    family, n = getattr(args, "family", None), getattr(args, "n", None)
    if family and n is not None:
        return {"braid": braid_arrangement, "typeB": type_b_arrangement, "boolean": boolean_arrangement}[family](n)
    raise BeltpolyError("need --arrangement FILE or --family with --n")


def _polytope(args):
    if args.type == "belt":
        a = _load_arrangement(args)
        return BeltPolytopeByArrangement(a, args.dim if args.dim is not None else -1)
    if not args.x:
        raise BeltpolyError("--x is required for permutohedra")
    x = _parse_x(args.x)
    return PermutohedronA(x) if args.type == "A" else PermutohedronB(x)


def _emit(doc: dict, args, started: float | None = None) -> None:
    if started is not None and not getattr(args, "no_timing", False):
        doc["timing"] = {"seconds": round(time.perf_counter() - started, 3)}
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(v) for v in r])
    sys.stdout.write(buf.getvalue())


def cmd_stirling(args) -> int:
    n = args.n
    if args.kind == "1":
        row = list(stirling1_row(n))
    elif args.kind == "1B":
        row = list(stirling1_b_row(n))
    elif args.kind == "2":
        row = [stirling2(n, k) for k in range(n + 1)]
    else:
        row = [stirling2_b(n, k) for k in range(n + 1)]
    if args.csv:
        _emit_csv(["k", "value"], [[k, v] for k, v in enumerate(row)])
    else:
        sys.stdout.write(json.dumps(row) + "\n")
    return 0


def cmd_faces(args) -> int:
    started = time.perf_counter()
    p = _polytope(args)
    fv = face_vector(p)
    doc = {"command": "faces", "inputs": {"type": p.kind, "x": [_fmt(v) for v in p.x]}}
    js = [args.j] if args.j is not None else list(range(p.dim + 1))
    counts = {}
    listing = []
    for j in js:
        n_enum = 0
        for f in enumerate_faces(p, j):
            n_enum += 1
            if args.j is not None:
                item = f.to_json()
                if args.vertices:
                    item["vertices"] = [[_fmt(c) for c in v] for v in face_vertices(p, f)]
                listing.append(item)
        counts[f"j{j}"] = {"formula": fv[j], "enumerated": n_enum}
    doc["face_vector"] = fv
    doc["counts"] = counts
    doc["agreement"] = all(c["formula"] == c["enumerated"] for c in counts.values())
    if args.j is not None:
        doc["faces"] = listing
    if args.csv:
        _emit_csv(["j", "formula", "enumerated"],
                  [[int(k[1:]), v["formula"], v["enumerated"]] for k, v in counts.items()])
        return 0
    _emit(doc, args, started)
    return 0 if doc["agreement"] else 1


def cmd_charpoly(args) -> int:
    a = _load_arrangement(args)
    chi = characteristic_polynomial(a, args.method)
    if args.csv:
        _emit_csv(["k", "a_k"], [[k, v] for k, v in enumerate(chi.a)])
    else:
        sys.stdout.write(json.dumps(chi.to_json()) + "\n")
    return 0


def cmd_project(args) -> int:
    started = time.perf_counter()
    p = _polytope(args)
    if args.matrix:
        g = RationalMatrix.from_text(Path(args.matrix).read_text())
        if g.rows != args.d:
            raise BeltpolyError(f"matrix has {g.rows} rows but --d is {args.d}")
        setup = ProjectionSetup.create(p, g)
    elif args.seed is not None:
        setup = ProjectionSetup.random(p, args.d, args.seed)
    else:
        raise BeltpolyError("need --matrix FILE or --seed S")
    inputs = {"polytope": describe(p), "d": args.d, "method": args.method,
              "matrix": [[_fmt(v) for v in r] for r in setup.matrix.entries]}
    if setup.seed is not None:
        inputs["seed_requested"] = args.seed
        inputs["seed_used"] = setup.seed
    doc = {"command": "project", "inputs": inputs, "certificate": setup.certificate.to_json()}
    if not setup.certificate.passed:
        doc["error"] = "projection is not in general position; counts refused"
        _emit(doc, args, started)
        return 1
    js = [args.j] if args.j is not None else None
    rep = face_count_report(setup, js, args.method, args.threads)
    counts, provenance, by_method = {}, {}, {}
    for j, entry in sorted(rep.counts.items()):
        key = f"j{j}"
        values = set(entry.values())
        counts[key] = values.pop() if len(values) == 1 else None
        provenance[key] = "+".join(sorted(entry))
        for m, v in entry.items():
            by_method.setdefault(m, {})[key] = v
    doc["counts"] = counts
    doc["provenance"] = provenance
    doc["by_method"] = by_method
    if rep.agreement is not None:
        doc["agreement"] = rep.agreement
    if args.csv:
        methods = sorted(by_method)
        _emit_csv(["j"] + methods, [[int(k[1:])] + [by_method[m][k] for m in methods] for k in counts])
        return 0 if rep.agreement is not False else 1
    _emit(doc, args, started)
    return 0 if rep.agreement is not False else 1


def cmd_angles(args) -> int:
    started = time.perf_counter()
    if args.type == "belt":
        a = _load_arrangement(args)
        dim = args.dim if args.dim is not None else BeltPolytopeByArrangement(a).dim
        table = angles.table_belt(a, dim, f"belt(n={a.ambient_dim}, hyperplanes={len(a)}, dim={dim})")
    else:
        n = args.n if args.n is not None else (len(_parse_x(args.x)) if args.x else None)
        if n is None:
            raise BeltpolyError("need --n or --x")
        table = angles.table_a(n) if args.type == "A" else angles.table_b(n)
    crofton = angles.crofton_violations(table)
    totals = angles.total_violations(table)
    doc = {"command": "angles", "inputs": {"type": args.type, "polytope": table.polytope, "dim": table.dim},
           "provenance": "formula", "checks": {"crofton": not crofton, "totals": not totals}}
    if args.table:
        doc["table"] = table.to_json()
        if args.csv:
            rows = [[j, d, table.upsilon[j, d], table.gamma.get((j, d), "")]
                    for (j, d) in sorted(table.upsilon)]
            _emit_csv(["j", "d", "upsilon_sum", "gamma_sum"], rows)
            return 0
    else:
        if args.j is None or args.d is None:
            raise BeltpolyError("give --table or both --j and --d")
        if (args.j, args.d) not in table.upsilon:
            raise BeltpolyError(f"(j, d) = ({args.j}, {args.d}) is outside 0 <= j <= d <= {table.dim}")
        doc["j"], doc["d"] = args.j, args.d
        doc["upsilon_sum"] = str(table.upsilon[args.j, args.d])
        if (args.j, args.d) in table.gamma:
            doc["gamma_sum"] = str(table.gamma[args.j, args.d])
    _emit(doc, args, started)
    return 0 if not crofton and not totals else 1


def cmd_verify(args) -> int:
    started = time.perf_counter()
    only = [int(t) for t in args.only.split(",")] if args.only else None
    results = run_suite(args.seed, args.threads, only)
    for r in results:
        sys.stderr.write(r.line() + "\n")
    ok = all(r.passed for r in results if r.gating)
    doc = {"command": "verify", "suite": args.suite, "seed": args.seed, "passed": ok,
           "criteria": [r.to_json() for r in results]}
    _emit(doc, args, started)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beltpoly",
                                     description="Exact face and angle counts for projected belt polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true", help="CSV instead of JSON where a table exists")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")

    def threads_opt(p):
        p.add_argument("--threads", type=int, default=default_threads(),
                       help="worker processes (default: $BELTPOLY_THREADS or 1)")

    def arrangement_opts(p):
        p.add_argument("--arrangement", metavar="FILE", help="arrangement file")
        p.add_argument("--family", choices=["braid", "typeB", "boolean"], help="built-in arrangement family")

    p = sub.add_parser("stirling", parents=[common], help="one row of a Stirling table")
    p.add_argument("--kind", choices=["1", "2", "1B", "2B"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("faces", parents=[common], help="faces of a permutohedron")
    p.add_argument("--type", choices=["A", "B"], required=True)
    p.add_argument("--x", required=True, help='strictly decreasing coordinates, e.g. "3,2,1"')
    p.add_argument("--j", type=int)
    p.add_argument("--vertices", action="store_true")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial of an arrangement")
    arrangement_opts(p)
    p.add_argument("--n", type=int, help="size for --family")
    p.add_argument("--method", choices=["whitney", "moebius"], default="moebius")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("project", parents=[common], help="face numbers of a generic projection")
    p.add_argument("--type", choices=["A", "B", "belt"], required=True)
    p.add_argument("--x")
    arrangement_opts(p)
    p.add_argument("--n", type=int, help="size for --family")
    p.add_argument("--dim", type=int, help="dimension of the belt polytope (default: rank of normals)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--j", type=int)
    p.add_argument("--matrix", metavar="FILE")
    p.add_argument("--seed", type=int, help="seed for the random matrix (required without --matrix)")
    p.add_argument("--method", choices=["formula", "oracle", "both"], default="both")
    threads_opt(p)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("angles", parents=[common], help="angle sums over j-faces")
    p.add_argument("--type", choices=["A", "B", "belt"], required=True)
    p.add_argument("--x")
    p.add_argument("--n", type=int)
    arrangement_opts(p)
    p.add_argument("--dim", type=int)
    p.add_argument("--table", action="store_true")
    p.add_argument("--j", type=int)
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_angles)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    p.add_argument("--suite", choices=["desk"], default="desk")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--only", help="comma-separated criterion numbers")
    threads_opt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotCertifiedError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (BeltpolyError, ValueError, OSError) as exc:
        parser.error(str(exc))
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
