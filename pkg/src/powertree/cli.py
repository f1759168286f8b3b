"""Command-line front end.

Subcommands: kappa, table1, verify, divisor-graph, classify, graph, det.
Exit codes: 0 success, 1 computation discrepancy or failed verification,
2 parse/usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial

from . import classify as classify_mod
from . import closedform, table1
from .errors import (
    Disconnected,
    DiscrepancyDetected,
    EqualPrimes,
    InvalidPair,
    InvalidSpec,
    MethodUnavailable,
    NotEPO,
    NotPowerOfTwo,
    NotPrime,
    OutOfRange,
    ParseError,
    PowerTreeError,
    TooLarge,
    TooManyDivisors,
    TrivialGroup,
    UnsupportedOrder,
)
from .groups import GroupSpec, build
from .powergraph import power_graph, reduced_power_graph, to_dot, to_json
from .specparse import parse_group_spec
from .treecount import TreeNumber, exact_integer_determinant, temperley_kappa
from .treecount import block_decomposition_kappa

USAGE_ERRORS = (
    ParseError,
    InvalidSpec,
    NotPrime,
    TrivialGroup,
    OutOfRange,
    EqualPrimes,
    NotPowerOfTwo,
    InvalidPair,
    NotEPO,
    MethodUnavailable,
    Disconnected,
)
RESOURCE_ERRORS = (UnsupportedOrder, TooLarge, TooManyDivisors)


@dataclass
class OutputRecord:
    """One computed tree count, ready for plain/factored/JSON rendering."""

    group: str
    order: int
    method: str
    kappa: str
    factorization: str | None
    reduced: bool
    elapsed_ms: float

    def to_dict(self, timing: bool = False) -> dict:
        payload = {
            "group": self.group,
            "order": self.order,
            "method": self.method,
            "kappa": self.kappa,
            "factorization": self.factorization,
            "reduced": self.reduced,
        }
        if timing:
            payload["elapsed_ms"] = round(self.elapsed_ms, 3)
        return payload


def _spec_name(spec: GroupSpec) -> str:
    k, p = spec.kind, spec.params
    if k == "cyclic":
        return f"Z_{p[0]}"
    if k == "dihedral":
        return f"D_{2 * p[0]}"
    if k == "quaternion":
        return f"Q_{4 * p[0]}"
    if k == "elemabelian":
        return f"Z_{p[0]}" if p[1] == 1 else f"Z_{p[0]}^{p[1]}"
    if k == "sym":
        return f"S_{p[0]}"
    if k == "alt":
        return f"A_{p[0]}"
    if k == "semidirect":
        return f"Z_{p[0]}⋊Z_{p[1]}"
    if k == "product":
        return "×".join(_spec_name(f) for f in spec.factors)
    return spec.render()


def _spec_order(spec: GroupSpec) -> int | None:
    k, p = spec.kind, spec.params
    if k == "cyclic":
        return p[0]
    if k == "dihedral":
        return 2 * p[0]
    if k == "quaternion":
        return 4 * p[0]
    if k == "elemabelian":
        return p[0] ** p[1]
    if k == "sym":
        return factorial(p[0])
    if k == "alt":
        return max(1, factorial(p[0]) // 2)
    if k == "semidirect":
        return p[0] * p[1]
    if k == "product":
        orders = [_spec_order(f) for f in spec.factors]
        return None if None in orders else orders[0] * orders[1]
    return None


def _closed_form(spec: GroupSpec, reduced: bool) -> TreeNumber | None:
    """Formula-based count when one applies to this family, else None."""
    k, p = spec.kind, spec.params
    if k == "cyclic":
        n = p[0]
        return closedform.kappa_cyclic_reduced(n) if reduced else closedform.kappa_cyclic(n)
    if k == "dihedral":
        return None if reduced else closedform.kappa_dihedral(p[0])
    if k == "quaternion":
        n = p[0]
        if reduced:
            return closedform.kappa_quaternion_reduced(n)
        if n & (n - 1) == 0:
            return closedform.kappa_quaternion_pow2(n)
        return None
    if reduced:
        return None
    if k == "elemabelian":
        return closedform.kappa_elementary_abelian(*p)
    if k == "semidirect":
        return closedform.kappa_semidirect_pq(*p)
    try:
        return closedform.kappa_epo(build(spec))
    except NotEPO:
        return None


def _compute_record(
    spec: GroupSpec, method: str, reduced: bool, fallback: bool = True
) -> OutputRecord | None:
    start = time.perf_counter()
    used = method
    if method == "closed-form":
        result = _closed_form(spec, reduced)
        if result is None:
            if not fallback:
                return None
            print(
                f"note: no closed form for {spec.render()}"
                f"{' (reduced)' if reduced else ''}; using matrix-tree",
                file=sys.stderr,
            )
            used = "matrix-tree"
        else:
            g_order = _spec_order(spec)
            if g_order is None:
                g_order = build(spec).order
            return OutputRecord(
                group=_spec_name(spec),
                order=g_order,
                method="closed-form",
                kappa=str(result.value),
                factorization=result.factored(),
                reduced=reduced,
                elapsed_ms=(time.perf_counter() - start) * 1000,
            )
    g = build(spec)
    graph = reduced_power_graph(g) if reduced else power_graph(g)
    if used == "decomposition":
        result = block_decomposition_kappa(graph)
    else:
        result = temperley_kappa(graph)
    return OutputRecord(
        group=g.name,
        order=g.order,
        method=used,
        kappa=str(result.value),
        factorization=result.factored(),
        reduced=reduced,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def cmd_kappa(args) -> int:
    spec = parse_group_spec(args.spec)
    methods = (
        ["matrix-tree", "decomposition", "closed-form"]
        if args.method == "all"
        else [args.method]
    )
    records = []
    for method in methods:
        try:
            record = _compute_record(
                spec, method, args.reduced, fallback=args.method != "all"
            )
        except Disconnected:
            # block products are undefined on disconnected reduced graphs;
            # the count is 0 there by convention
            record = OutputRecord(
                group=_spec_name(spec),
                order=_spec_order(spec) or build(spec).order,
                method=method,
                kappa="0",
                factorization="0",
                reduced=args.reduced,
                elapsed_ms=0.0,
            )
        if record is not None:
            records.append(record)
    values = {r.kappa for r in records}
    if len(values) > 1:
        print("discrepancy between methods:", file=sys.stderr)
        for r in records:
            print(f"  {r.method}: {r.kappa}", file=sys.stderr)
        return 1
    _emit_records(records, args.format, getattr(args, "timing", False))
    return 0


def _emit_records(records, fmt: str, timing: bool) -> None:
    if fmt == "json":
        payload = [r.to_dict(timing) for r in records]
        print(json.dumps(payload[0] if len(payload) == 1 else payload,
                         ensure_ascii=False, indent=2))
        return
    for r in records:
        text = r.kappa if fmt == "plain" else (r.factorization or r.kappa)
        if len(records) > 1:
            print(f"{r.method}: {text}")
        else:
            print(text)


def cmd_table1(args) -> int:
    results = table1.compute_table()
    print(table1.render_table(results))
    return 0 if all(r.ok for r in results) else 1


def _verify_single(n: int) -> tuple[int, str | None]:
    """Closed forms against determinants for Z_n; returns (n, failure or None)."""
    g = build(GroupSpec("cyclic", (n,)))
    closed = closedform.kappa_cyclic(n).value
    direct = temperley_kappa(power_graph(g)).value
    if closed != direct:
        return n, f"kappa(Z_{n}): closed form {closed} != matrix-tree {direct}"
    if n >= 2:
        closed_r = closedform.kappa_cyclic_reduced(n).value
        direct_r = temperley_kappa(reduced_power_graph(g)).value
        if closed_r != direct_r:
            return n, (
                f"kappa(Z_{n} reduced): closed form {closed_r} != "
                f"matrix-tree {direct_r}"
            )
    return n, None


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise OutOfRange("--max-n must be >= 1")
    values = range(1, args.max_n + 1)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_single, values))
    else:
        results = [_verify_single(n) for n in values]
    for _, failure in sorted(results):
        if failure is not None:
            print(f"FAIL: {failure}")
            return 1
    print(f"all n up to {args.max_n} verified")
    return 0


def cmd_divisor_graph(args) -> int:
    if args.n < 1:
        raise OutOfRange("n must be >= 1")
    dg = closedform.divisor_graph(args.n)
    middle = set(dg.middle)
    if args.complement:
        edges = list(dg.complement_middle_edges)
        title = f"divisor graph complement, middle divisors of {args.n}"
    else:
        edges = [e for e in dg.edges if e[0] in middle and e[1] in middle]
        title = f"divisor graph, middle divisors of {args.n}"
    if args.format == "json":
        payload = {
            "n": args.n,
            "complement": args.complement,
            "vertices": list(dg.middle),
            "edges": [list(e) for e in sorted(edges)],
        }
        print(json.dumps(payload, ensure_ascii=False, separators=(", ", ": ")))
    else:
        lines = [f'graph "{title}" {{']
        for d in dg.middle:
            lines.append(f"  {d};")
        for a, b in sorted(edges):
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        print("\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    if args.a5:
        report = classify_mod.verify_a5_recognition()
        print(json.dumps(report, ensure_ascii=False, indent=2))
        failures = [r for r in report if r["verdict"] != "PASS"]
        return 0 if not failures else 1
    if args.target is None:
        raise OutOfRange("classify needs a target value or --a5")
    entry = classify_mod.classify_kappa_below_125(args.target)
    if entry is None:
        print(f"no group has tree count {args.target}")
    elif entry.symbolic_family:
        print(f"tree count {entry.kappa_value}: {entry.symbolic_family}")
    else:
        names = ", ".join(entry.groups)
        print(f"tree count {entry.kappa_value}: {names}")
    return 0


def cmd_graph(args) -> int:
    g = build(parse_group_spec(args.spec))
    graph = reduced_power_graph(g) if args.reduced else power_graph(g)
    text = to_dot(graph) if args.format == "dot" else to_json(graph) + "\n"
    sys.stdout.write(text)
    return 0


def cmd_det(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            matrix = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidSpec(f"cannot read matrix from {args.file}: {exc}") from exc
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise InvalidSpec("matrix file must hold a JSON array of arrays")
    try:
        print(exact_integer_determinant(matrix))
    except (ValueError, TypeError) as exc:
        raise InvalidSpec(str(exc)) from exc
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powertree",
        description="Exact spanning-tree counts of power graphs of finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", help="tree count of a group's power graph")
    p.add_argument("spec", help="group spec, e.g. cyclic:12 or product:(cyclic:3)x(cyclic:2)")
    p.add_argument("--reduced", action="store_true", help="delete the identity vertex first")
    p.add_argument("--method", default="matrix-tree",
                   choices=["matrix-tree", "closed-form", "decomposition", "all"])
    p.add_argument("--format", default="plain", choices=["plain", "factored", "json"])
    p.add_argument("--timing", action="store_true", help="include elapsed_ms in JSON output")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("table1", help="recompute the small-group golden table")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", help="closed forms vs determinants for Z_1..Z_N")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("divisor-graph", help="middle-divisor graph of n (or its complement)")
    p.add_argument("n", type=int)
    p.add_argument("--complement", action="store_true")
    p.add_argument("--format", default="dot", choices=["dot", "json"])
    p.set_defaults(func=cmd_divisor_graph)

    p = sub.add_parser("classify", help="groups with a given tree count (< 125)")
    p.add_argument("target", nargs="?", type=int)
    p.add_argument("--a5", action="store_true",
                   help="run the A_5 recognition evidence chain")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("graph", help="emit a power graph as DOT or JSON")
    p.add_argument("spec")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--format", default="dot", choices=["dot", "json"])
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("det", help="exact determinant of a JSON matrix file")
    p.add_argument("file")
    p.set_defaults(func=cmd_det)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RESOURCE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DiscrepancyDetected as exc:
        print(f"discrepancy: {exc}", file=sys.stderr)
        return 1
    except PowerTreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
