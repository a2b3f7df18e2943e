"""Command-line interface.

Results go to stdout as one JSON object per invocation:

    {"ring": ..., "command": ..., "result": ..., "truncated": ..., "runtime_ms": ...}

``--pretty`` renders the same data as human-readable text.  Diagnostics
go to stderr.  Exit codes: 0 success, 1 a verify run found a
disagreement, 2 usage or parse error, 3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources

from .classify import (
    SKIPPED,
    classify_cm,
    classify_well_covered,
    cross_validate,
)
from .complexes import (
    BudgetExceeded,
    ComplexError,
    complex_from_json,
    independence_complex,
    is_cm_gf2,
    is_gorenstein_gf2,
    is_pure,
    is_shellable,
)
from .constructions import (
    ConstructionError,
    nonunit_complement_witness,
    lift_nonunit_mis,
    lift_unit_mis_reps,
    signature_set,
    two_size_witnesses,
    zero_first_row_set,
)
from .descriptors import DescriptorError, Gf, Mat
from .dsl import RingExprError, parse_ring_expr, print_ring_expr
from .graphs import GraphError, build_graph, graph_to_dot, graph_to_json
from .indsets import enumerate_mis, well_covered_bruteforce
from .rings import (
    CapExceeded,
    VertexSet,
    build_ring,
    jacobson_radical,
    quotient_by_radical,
)
from .wedderburn import wedderburn_shape

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(args, ring_expr, command, result, truncated=False, start=None):
    runtime_ms = int((time.monotonic() - start) * 1000) if start else 0
    payload = {
        "ring": ring_expr,
        "command": command,
        "result": result,
        "truncated": truncated,
        "runtime_ms": runtime_ms,
    }
    if getattr(args, "pretty", False):
        _render_pretty(payload)
    else:
        print(json.dumps(payload))


def _render_pretty(payload, indent=""):
    print(f"ring:    {payload['ring']}")
    print(f"command: {payload['command']}")
    _render_value(payload["result"], "  ")
    if payload["truncated"]:
        print("  (truncated)")


def _render_value(value, indent):
    if isinstance(value, dict):
        width = max((len(str(k)) for k in value), default=0)
        for k, v in value.items():
            if isinstance(v, dict) and v:
                print(f"{indent}{k}:")
                _render_value(v, indent + "  ")
            elif isinstance(v, list) and v and not _is_flat(v):
                print(f"{indent}{k}:")
                _render_value(v, indent + "  ")
            else:
                shown = json.dumps(v) if isinstance(v, list) else v
                print(f"{indent}{str(k).ljust(width)} = {shown}")
    elif isinstance(value, list):
        for v in value:
            _render_value(v, indent)
    else:
        print(f"{indent}{value}")


def _is_flat(v):
    if isinstance(v, list):
        return all(
            not isinstance(x, dict)
            and (not isinstance(x, list) or all(not isinstance(y, (dict, list)) for y in x))
            for x in v
        )
    return False


def _parse_ring(text: str):
    try:
        return parse_ring_expr(text)
    except RingExprError as exc:
        raise _CliError(f"cannot parse ring expression: {exc}", EXIT_USAGE)


def _realize(descriptor):
    try:
        return build_ring(descriptor)
    except CapExceeded as exc:
        raise _CliError(str(exc), EXIT_CAP)
    except DescriptorError as exc:
        raise _CliError(str(exc), EXIT_USAGE)


def _indices_arg(text: str, universe: int) -> VertexSet:
    try:
        indices = [int(part) for part in text.split(",") if part.strip() != ""]
        return VertexSet.from_indices(indices, universe)
    except ValueError as exc:
        raise _CliError(f"bad index list {text!r}: {exc}", EXIT_USAGE)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_info(args) -> int:
    start = time.monotonic()
    descriptor = _parse_ring(args.ring)
    ring = _realize(descriptor)
    radical = jacobson_radical(ring)
    quotient = quotient_by_radical(ring)
    shape = wedderburn_shape(descriptor)
    result = {
        "order": ring.order,
        "characteristic": ring.characteristic,
        "units": len(ring.unit_set),
        "radical_size": len(radical),
        "quotient_char": quotient.characteristic,
        "shape": [list(b) for b in shape] if shape is not None else "unsupported",
    }
    _emit(args, print_ring_expr(descriptor), "info", result, start=start)
    return EXIT_OK


def _cmd_graph(args) -> int:
    descriptor = _parse_ring(args.ring)
    ring = _realize(descriptor)
    try:
        graph = build_graph(ring, args.kind)
    except GraphError as exc:
        raise _CliError(str(exc), EXIT_CAP)
    if args.format == "dot":
        sys.stdout.write(graph_to_dot(graph))
    else:
        print(graph_to_json(graph))
    return EXIT_OK


def _cmd_mis(args) -> int:
    start = time.monotonic()
    descriptor = _parse_ring(args.ring)
    ring = _realize(descriptor)
    try:
        graph = build_graph(ring, args.kind)
    except GraphError as exc:
        raise _CliError(str(exc), EXIT_CAP)
    report = enumerate_mis(
        graph,
        stop_mode="all",
        max_sets=args.max_sets,
        time_budget=args.time_budget,
        collect=args.list,
    )
    result = {
        "count": report.count,
        "sizes": {str(k): v for k, v in sorted(report.sizes_seen.items())},
        "independence_number": report.independence_number,
        "well_covered": report.well_covered,
        "stop_reason": report.stop_reason,
    }
    if args.list:
        result["sets"] = [s.indices() for s in report.sets]
    if args.count:
        result = {"count": report.count, "stop_reason": report.stop_reason}
    _emit(
        args,
        print_ring_expr(descriptor),
        "mis",
        result,
        truncated=report.truncated,
        start=start,
    )
    return EXIT_OK


def _cmd_wellcovered(args) -> int:
    start = time.monotonic()
    descriptor = _parse_ring(args.ring)
    result: dict[str, object] = {}
    truncated = False
    if args.method in ("classify", "both"):
        result["predicted"] = classify_well_covered(descriptor)
        if result["predicted"] is None:
            result["note"] = "shape unsupported; try --method brute"
    if args.method in ("brute", "both"):
        ring = _realize(descriptor)
        try:
            graph = build_graph(ring, "unit")
        except GraphError as exc:
            raise _CliError(str(exc), EXIT_CAP)
        verdict = well_covered_bruteforce(
            graph, max_sets=args.max_sets, time_budget=args.time_budget
        )
        truncated = verdict is None
        result["observed"] = "undecided" if verdict is None else verdict
    if args.method == "both":
        pred, obs = result.get("predicted"), result.get("observed")
        result["agreement"] = (
            None if pred is None or isinstance(obs, str) else pred == obs
        )
    _emit(
        args,
        print_ring_expr(descriptor),
        "wellcovered",
        result,
        truncated=truncated,
        start=start,
    )
    return EXIT_OK


def _cmd_classify(args) -> int:
    start = time.monotonic()
    descriptor = _parse_ring(args.ring)
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    if args.cross_validate:
        report = cross_validate(
            descriptor,
            checks,
            facet_cap=args.facet_cap,
            max_sets=args.max_sets,
            time_budget=args.time_budget,
        )
        result = report.to_dict()
        result.pop("runtime_ms", None)
    else:
        ring = _realize(descriptor)
        cm = classify_cm(ring)
        result = {
            "predicted": {
                "well_covered": classify_well_covered(descriptor),
                "cm": cm["cm"],
                "shellable": cm["shellable"],
                "gorenstein": cm["gorenstein"],
            }
        }
    _emit(args, print_ring_expr(descriptor), "classify", result, start=start)
    return EXIT_OK


def _cmd_construct(args) -> int:
    start = time.monotonic()
    descriptor = _parse_ring(args.ring)
    ring = _realize(descriptor)
    what = args.what
    try:
        if what in ("signature", "zerorow"):
            n, q = _matrix_params(descriptor)
            builder = signature_set if what == "signature" else zero_first_row_set
            out = builder(n, q)
            result = {
                "set": out.indices(),
                "size": len(out),
                "verified_maximal": True,
            }
        elif what in ("complement", "claim"):
            if args.y is None:
                raise _CliError("--y <index> is required", EXIT_USAGE)
            z = nonunit_complement_witness(ring, args.y)
            result = {
                "y": args.y,
                "witness": z,
                "witness_repr": ring.element_repr(z),
                "verified": True,
            }
        elif what == "two-size":
            unit_side, nonunit_side = two_size_witnesses(ring)
            result = {
                "sets": [unit_side.indices(), nonunit_side.indices()],
                "sizes": [len(unit_side), len(nonunit_side)],
                "verified_maximal": True,
            }
        elif what == "lift":
            if args.quotient_set is None:
                raise _CliError("--quotient-set <indices> is required", EXIT_USAGE)
            quotient = quotient_by_radical(ring)
            qset = _indices_arg(args.quotient_set, quotient.order)
            lifter = lift_unit_mis_reps if args.side == "unit" else lift_nonunit_mis
            out = lifter(ring, qset)
            result = {
                "set": out.indices(),
                "size": len(out),
                "verified_maximal": True,
            }
        else:  # pragma: no cover - argparse restricts choices
            raise _CliError(f"unknown construction {what!r}", EXIT_USAGE)
    except ConstructionError as exc:
        raise _CliError(str(exc), EXIT_USAGE)
    _emit(args, print_ring_expr(descriptor), f"construct {what}", result, start=start)
    return EXIT_OK


def _matrix_params(descriptor) -> tuple[int, int]:
    if isinstance(descriptor, Mat) and isinstance(descriptor.base, Gf):
        return descriptor.k, descriptor.base.q
    if isinstance(descriptor, Gf):
        return 1, descriptor.q
    raise _CliError(
        "this construction needs a matrix ring over a field, like M2(GF(3))",
        EXIT_USAGE,
    )


def _cmd_complex(args) -> int:
    start = time.monotonic()
    if args.facets_file:
        with open(args.facets_file, "r", encoding="utf-8") as fh:
            complex_ = complex_from_json(fh.read())
        ring_expr = None
    else:
        if not args.ring:
            raise _CliError("a ring expression or --facets-file is required", EXIT_USAGE)
        descriptor = _parse_ring(args.ring)
        ring = _realize(descriptor)
        try:
            graph = build_graph(ring, "unit")
            complex_ = independence_complex(graph)
        except (GraphError, BudgetExceeded) as exc:
            raise _CliError(str(exc), EXIT_CAP)
        ring_expr = print_ring_expr(descriptor)
    result: dict[str, object] = {
        "facets": len(complex_.facets),
        "dimension": complex_.dimension,
    }
    try:
        if args.pure:
            result["pure"] = is_pure(complex_)
        if args.shellable:
            verdict = is_shellable(complex_, facet_cap=args.facet_cap)
            result["shellable"] = "undecided" if verdict is None else verdict
        if args.cm:
            result["cm_gf2"] = is_cm_gf2(complex_)
        if args.gorenstein:
            result["gorenstein_gf2"] = is_gorenstein_gf2(complex_)
    except BudgetExceeded as exc:
        raise _CliError(str(exc), EXIT_CAP)
    _emit(args, ring_expr, "complex", result, start=start)
    return EXIT_OK


def _cmd_verify(args) -> int:
    start = time.monotonic()
    if args.catalog:
        with open(args.catalog, "r", encoding="utf-8") as fh:
            catalog = json.load(fh)
    else:
        catalog = json.loads(
            resources.files("unitgraphs").joinpath("data/catalog.json").read_text()
        )
    rows = []
    disagreements = 0
    for entry in catalog:
        row = _verify_entry(entry, facet_cap=args.facet_cap)
        rows.append(row)
        if not row["ok"]:
            disagreements += 1
    if args.pretty:
        width = max(len(r["ring"]) for r in rows)
        print(
            f"{'ring'.ljust(width)}  predicted  observed  expected  checks  ok"
        )
        for r in rows:
            print(
                f"{r['ring'].ljust(width)}  "
                f"{str(r['predicted']).ljust(9)}  "
                f"{str(r['observed']).ljust(8)}  "
                f"{str(r['expected']).ljust(8)}  "
                f"{str(r.get('extra', '')).ljust(6)}  "
                f"{'yes' if r['ok'] else 'NO'}"
            )
        print(f"{len(rows)} rings, {disagreements} disagreement(s)")
    else:
        _emit(
            args,
            None,
            "verify",
            {"entries": rows, "disagreements": disagreements},
            start=start,
        )
    return EXIT_OK if disagreements == 0 else EXIT_DISAGREEMENT


def _verify_entry(entry, facet_cap) -> dict:
    expr = entry["ring"]
    descriptor = parse_ring_expr(expr)
    expected = entry.get("well_covered")
    predicted = classify_well_covered(descriptor)
    ring = build_ring(descriptor)
    graph = build_graph(ring, "unit")
    observed = well_covered_bruteforce(graph)
    ok = True
    if predicted is not None and observed is not None and predicted != observed:
        ok = False
    if expected is not None and observed is not None and observed != expected:
        ok = False
    row = {
        "ring": expr,
        "predicted": predicted,
        "observed": SKIPPED if observed is None else observed,
        "expected": expected,
        "ok": ok,
    }
    wanted = [c for c in ("cm", "shellable", "gorenstein") if c in entry]
    if wanted:
        report = cross_validate(descriptor, tuple(wanted), facet_cap=facet_cap)
        checks_ok = report.agreement in (True, None)
        for check in wanted:
            pred_key, obs_key = {
                "cm": ("cm", "cm_gf2"),
                "shellable": ("shellable", "shellable"),
                "gorenstein": ("gorenstein", "gorenstein_gf2"),
            }[check]
            obs = report.observed.get(obs_key)
            if obs != SKIPPED and obs != entry[check]:
                checks_ok = False
        row["extra"] = "+".join(wanted)
        row["cm_report"] = {
            "predicted": report.predicted,
            "observed": report.observed,
        }
        if not checks_ok:
            row["ok"] = False
    return row


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitgraphs",
        description="Unit graphs of finite rings: construction, independent "
        "sets, and well-covered / Cohen-Macaulay classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, ring=True):
        if ring:
            p.add_argument("ring", help="ring expression, e.g. 'Z4 x M2(GF(2))'")
        p.add_argument("--pretty", action="store_true", help="human-readable output")

    p = sub.add_parser("info", help="order, characteristic, units, radical, shape")
    add_common(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("graph", help="emit a graph in DOT or JSON form")
    add_common(p)
    p.add_argument("--kind", choices=["unit", "cayley", "generalized"], default="unit")
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("mis", help="enumerate maximal independent sets")
    add_common(p)
    p.add_argument("--kind", choices=["unit", "cayley", "generalized"], default="unit")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true", help="include the sets")
    group.add_argument("--sizes", action="store_true", help="sizes summary (default)")
    group.add_argument("--count", action="store_true", help="count only")
    p.add_argument("--max-sets", type=int, default=10**6)
    p.add_argument("--time-budget", type=float, default=60.0)
    p.set_defaults(func=_cmd_mis)

    p = sub.add_parser("wellcovered", help="decide well-coveredness")
    add_common(p)
    p.add_argument("--method", choices=["brute", "classify", "both"], default="both")
    p.add_argument("--max-sets", type=int, default=10**6)
    p.add_argument("--time-budget", type=float, default=60.0)
    p.set_defaults(func=_cmd_wellcovered)

    p = sub.add_parser("classify", help="well-covered / CM / shellable / Gorenstein")
    add_common(p)
    p.add_argument("--checks", default="wc,cm,shellable,gorenstein")
    p.add_argument("--cross-validate", action="store_true")
    p.add_argument("--facet-cap", type=int, default=12)
    p.add_argument("--max-sets", type=int, default=10**6)
    p.add_argument("--time-budget", type=float, default=60.0)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("construct", help="run one of the explicit constructions")
    p.add_argument("ring")
    p.add_argument(
        "what",
        choices=["signature", "zerorow", "complement", "claim", "two-size", "lift"],
        help="construction to run ('claim' is an alias of 'complement')",
    )
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--y", type=int, default=None, help="element index for complement")
    p.add_argument("--side", choices=["unit", "nonunit"], default="nonunit")
    p.add_argument("--quotient-set", default=None, help="comma-separated quotient indices")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("complex", help="independence complex properties")
    p.add_argument("ring", nargs="?", default=None)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--facets-file", default=None, help="standalone facet JSON file")
    p.add_argument("--pure", action="store_true")
    p.add_argument("--shellable", action="store_true")
    p.add_argument("--cm", action="store_true")
    p.add_argument("--gorenstein", action="store_true")
    p.add_argument("--facet-cap", type=int, default=12)
    p.set_defaults(func=_cmd_complex)

    p = sub.add_parser("verify", help="run the classification catalog")
    p.add_argument("--catalog", default=None, help="catalog JSON path (default: shipped)")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--facet-cap", type=int, default=40)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except _CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except (CapExceeded, BudgetExceeded) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CAP
    except (DescriptorError, RingExprError, ComplexError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
