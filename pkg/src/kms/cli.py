"""Command-line interface: one subcommand per capability.

Exit codes: 0 success (and zero violations), 1 violations or failed
checks found, 2 usage or validation errors.  Numeric output is printed
to 10 significant digits.  Graphs come from an inline graph6 line, a
graph6 file ('-' for stdin), a named family, or the built-in enumerator;
KMS_WORKERS sets the default worker count for verification runs.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .enumeration import connected_graphs
from .errors import (
    BudgetExceededError,
    ConvergenceError,
    DisconnectedGraphError,
    EmptyCandidateError,
    Graph6Error,
    GraphInputError,
    InvalidPartitionError,
    InvalidQueryError,
    InvalidSpecError,
    OrderCapError,
    ParityError,
)
from .graphs import Graph, iter_graph6, parse_graph6, write_graph6
from .harness import (
    TheoremSpec,
    lemma_numeric_check,
    minimizer_search,
    report_csv,
    report_json,
    sample_source,
    sharpness_check,
    verify_theorem,
)
from .matching import (
    Property,
    PropertyQuery,
    decide_property,
    deficiency,
    direct_property_oracle,
)
from .quotients import (
    balanced_split_family,
    build_family,
    clique_join_family,
    double_pendant_clique_family,
    pendant_clique_family,
    split_star_family,
    surplus_split_family,
)
from .spectra import distance_spectral_radius, rayleigh_lower_bound, wiener

USAGE_ERRORS = (
    BudgetExceededError,
    ConvergenceError,
    DisconnectedGraphError,
    EmptyCandidateError,
    Graph6Error,
    GraphInputError,
    InvalidPartitionError,
    InvalidQueryError,
    InvalidSpecError,
    OrderCapError,
    ParityError,
)

FAMILIES = (
    "split-star",
    "pendant-clique",
    "double-pendant-clique",
    "balanced-split",
    "surplus-split",
    "clique-join",
)


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _add_source_args(p: argparse.ArgumentParser, with_order: bool = True) -> None:
    src = p.add_argument_group("graph source (choose one)")
    src.add_argument("--g6", metavar="LINE", help="inline graph6 line")
    src.add_argument("--file", metavar="PATH", help="graph6 file, '-' for stdin")
    src.add_argument("--family", choices=FAMILIES, help="named extremal family")
    if with_order:
        src.add_argument(
            "--order",
            type=int,
            metavar="N",
            help="all connected graphs of order N (built-in enumeration)",
        )
    fam = p.add_argument_group("family parameters")
    fam.add_argument("--n", type=int, help="family order")
    fam.add_argument("--k-clique", type=int, dest="k_clique", help="split-star clique size")
    fam.add_argument("--apex", type=int, help="apex clique size")
    fam.add_argument("--cores", help="comma-separated core clique sizes")
    fam.add_argument("--isolated", type=int, help="isolated vertex count")


def _family_from_args(args) -> Graph:
    name = args.family
    if name == "clique-join":
        if args.apex is None or args.cores is None or args.isolated is None:
            raise InvalidSpecError("clique-join needs --apex, --cores and --isolated")
        cores = tuple(int(c) for c in args.cores.split(",") if c.strip())
        return build_family(clique_join_family(args.apex, cores, args.isolated))
    if args.n is None:
        raise InvalidSpecError(f"--family {name} needs --n")
    if name == "split-star":
        if args.k_clique is None:
            raise InvalidSpecError("split-star needs --k-clique")
        return build_family(split_star_family(args.n, args.k_clique))
    if name == "pendant-clique":
        return build_family(pendant_clique_family(args.n))
    if name == "double-pendant-clique":
        return build_family(double_pendant_clique_family(args.n))
    if args.apex is None:
        raise InvalidSpecError(f"--family {name} needs --apex")
    if name == "balanced-split":
        return build_family(balanced_split_family(args.n, args.apex))
    return build_family(surplus_split_family(args.n, args.apex))


def _read_lines(path: str):
    if path == "-":
        return [line for line in sys.stdin.read().splitlines() if line.strip()]
    with open(path, "r", encoding="ascii") as fh:
        return [line for line in fh.read().splitlines() if line.strip()]


def _resolve_graphs(args) -> list[Graph]:
    chosen = [
        s
        for s in ("g6", "file", "family", "order")
        if getattr(args, s, None) not in (None, False)
    ]
    if len(chosen) != 1:
        raise InvalidSpecError(
            "exactly one graph source required (--g6 | --file | --family | --order)"
        )
    if args.g6 is not None:
        return [parse_graph6(args.g6)]
    if args.file is not None:
        return list(iter_graph6(_read_lines(args.file)))
    if getattr(args, "order", None) is not None:
        return list(connected_graphs(args.order))
    return [_family_from_args(args)]


def _query_from_args(args) -> PropertyQuery:
    return PropertyQuery(Property(args.property), args.k, args.d)


def _emit_values(graphs, values, fmt, single_fmt=_fmt):
    """Plain prints bare values; csv prints graph6,value rows."""
    if fmt == "csv" or (fmt == "auto" and len(graphs) > 1):
        print("graph6,value")
        for g, v in zip(graphs, values):
            print(f"{write_graph6(g)},{single_fmt(v)}")
    else:
        for v in values:
            print(single_fmt(v))


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_spectrum(args) -> int:
    graphs = _resolve_graphs(args)
    values = [distance_spectral_radius(g, args.tol).lambda1 for g in graphs]
    _emit_values(graphs, values, args.format)
    return 0


def _cmd_wiener(args) -> int:
    graphs = _resolve_graphs(args)
    if args.bound:
        values = [rayleigh_lower_bound(g) for g in graphs]
        _emit_values(graphs, values, args.format)
    else:
        values = [wiener(g) for g in graphs]
        _emit_values(graphs, values, args.format, single_fmt=str)
    return 0


def _set_str(s: frozenset[int]) -> str:
    return "{" + " ".join(str(v) for v in sorted(s)) + "}"


def _cmd_deficiency(args) -> int:
    graphs = _resolve_graphs(args)
    for g in graphs:
        rep = deficiency(g, args.k)
        barrier_text = ";".join(_set_str(b) for b in rep.barriers)
        if len(graphs) > 1 or args.format == "csv":
            print(f"{write_graph6(g)},{rep.value},{barrier_text}")
        else:
            print(rep.value)
            for b, (iso, odd, size) in zip(rep.barriers, rep.barrier_stats):
                print(f"barrier {_set_str(b)} isolated={iso} odd={odd} size={size}")
    return 0


def _cmd_barriers(args) -> int:
    graphs = _resolve_graphs(args)
    for g in graphs:
        rep = deficiency(g, args.k)
        prefix = f"{write_graph6(g)}," if len(graphs) > 1 else ""
        for b in rep.barriers:
            print(f"{prefix}{_set_str(b)}")
    return 0


def _cmd_check(args) -> int:
    graphs = _resolve_graphs(args)
    query = _query_from_args(args)
    failures = 0
    for g in graphs:
        verdict = decide_property(g, query)
        if verdict.holds:
            line = "true"
        else:
            failures += 1
            line = f"false witness={_set_str(verdict.witness)}"
        if len(graphs) > 1:
            line = f"{write_graph6(g)} {line}"
        print(line)
    return 1 if failures else 0


def _cmd_oracle(args) -> int:
    graphs = _resolve_graphs(args)
    query = _query_from_args(args)
    failures = 0
    for g in graphs:
        holds = direct_property_oracle(g, query)
        failures += 0 if holds else 1
        prefix = f"{write_graph6(g)} " if len(graphs) > 1 else ""
        print(f"{prefix}{str(holds).lower()}")
    return 1 if failures else 0


def _cmd_enumerate(args) -> int:
    if (args.order is None) == (args.file is None):
        raise InvalidSpecError("enumerate needs exactly one of --order or --file")
    if args.order is not None:
        graphs = connected_graphs(args.order)
    else:
        graphs = list(iter_graph6(_read_lines(args.file)))
    if args.count_only:
        print(len(graphs))
        return 0
    out = sys.stdout if args.out is None else open(args.out, "w", encoding="ascii")
    try:
        for g in graphs:
            out.write(write_graph6(g) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _theorem_spec(args) -> TheoremSpec:
    return TheoremSpec(args.theorem, args.n, args.k, args.d)


def _cmd_verify(args) -> int:
    spec = _theorem_spec(args)
    if args.source == "builtin":
        report = verify_theorem(spec, workers=args.workers)
    elif args.source == "file":
        if args.file is None:
            raise InvalidSpecError("--source file needs --file")
        graphs = list(iter_graph6(_read_lines(args.file)))
        report = verify_theorem(
            spec, graphs, source=f"file:{args.file}", exhaustive=False,
            workers=args.workers,
        )
    else:
        graphs = sample_source(spec.n, count=args.samples, seed=args.seed)
        report = verify_theorem(
            spec,
            graphs,
            source=f"sampled(count={args.samples},seed={args.seed})",
            exhaustive=False,
            workers=args.workers,
        )
    text = report_json(report) if args.format == "json" else report_csv(report)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(
        f"# {spec.theorem} n={spec.n} k={spec.k}"
        + (f" d={spec.d}" if spec.d is not None else "")
        + f": rows={len(report.rows)} exceptions={report.exceptions}"
        + f" violations={report.violations} exhaustive={report.exhaustive}",
        file=sys.stderr,
    )
    return 1 if report.violations else 0


def _cmd_sharpness(args) -> int:
    spec = _theorem_spec(args)
    ok = sharpness_check(spec)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_minimize(args) -> int:
    query = _query_from_args(args)
    if args.source == "sample":
        graphs = sample_source(args.order, count=args.samples, seed=args.seed)
    elif args.source == "file":
        if args.file is None:
            raise InvalidSpecError("--source file needs --file")
        graphs = list(iter_graph6(_read_lines(args.file)))
    else:
        graphs = None
    g, lam = minimizer_search(query, args.order, graphs)
    print(f"{write_graph6(g)} {_fmt(lam)}")
    return 0


def _cmd_lemmas(args) -> int:
    report = lemma_numeric_check(args.lemma, max_n=args.max_n)
    bad = [r for r in report.rows if not r.ok]
    if args.format == "csv" or args.verbose:
        print("item,params,lhs,rhs,cmp,equality_expected,ok")
        for r in report.rows:
            print(
                f"{r.item},{r.params},{_fmt(r.lhs)},{_fmt(r.rhs)},{r.cmp},"
                f"{str(r.equality_expected).lower()},{str(r.ok).lower()}"
            )
    print(f"# {report.lemma}: {len(report.rows)} instances, {len(bad)} failures")
    return 0 if report.ok else 1


def _cmd_g6(args) -> int:
    lines = _read_lines(args.file if args.file else "-")
    mismatches = 0
    count = 0
    for line in lines:
        g = parse_graph6(line)
        count += 1
        stripped = line.strip()
        if stripped.startswith(">>graph6<<"):
            stripped = stripped[len(">>graph6<<"):]
        if g.n <= 62 and write_graph6(g) != stripped:
            mismatches += 1
            print(f"mismatch: {stripped} -> {write_graph6(g)}")
    print(f"# {count} lines, {mismatches} round-trip mismatches")
    return 1 if mismatches else 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kms",
        description="Distance spectral radius conditions for integer k-matchings: "
        "spectra, deficiency, property deciders, and verification runs.",
    )
    parser.add_argument("--version", action="version", version=f"kms {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "spectrum",
        help="distance spectral radius (largest distance-matrix eigenvalue)",
    )
    _add_source_args(p)
    p.add_argument("--tol", type=float, default=1e-10, help="relative residual target")
    p.add_argument("--format", choices=("auto", "plain", "csv"), default="auto")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser(
        "wiener", help="Wiener index (sum of distances over vertex pairs)"
    )
    _add_source_args(p)
    p.add_argument(
        "--bound",
        action="store_true",
        help="print 2W/n, the all-ones Rayleigh lower bound for the radius",
    )
    p.add_argument("--format", choices=("auto", "plain", "csv"), default="auto")
    p.set_defaults(func=_cmd_wiener)

    p = sub.add_parser(
        "deficiency",
        help="integer k-matching deficiency (Berge-Tutte-type maximum)",
    )
    _add_source_args(p)
    p.add_argument("--k", type=int, required=True, help="matching order k")
    p.add_argument("--format", choices=("auto", "csv"), default="auto")
    p.set_defaults(func=_cmd_deficiency)

    p = sub.add_parser(
        "barriers", help="all deficiency-maximizing vertex subsets (k-barriers)"
    )
    _add_source_args(p)
    p.add_argument("--k", type=int, required=True, help="matching order k")
    p.set_defaults(func=_cmd_barriers)

    p = sub.add_parser(
        "check",
        help="decide perfect k-matching / factor-critical / bicritical / "
        "d-critical via the subset characterizations",
    )
    _add_source_args(p)
    p.add_argument("--property", choices=[pr.value for pr in Property], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, help="deficiency parameter for d-critical")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser(
        "oracle",
        help="decide a property constructively by edge-weight search "
        "(small instances; cross-validates 'check')",
    )
    _add_source_args(p)
    p.add_argument("--property", choices=[pr.value for pr in Property], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser(
        "enumerate",
        help="connected graphs of order n, one per isomorphism class "
        "(built-in n <= 8, or re-emit a graph6 file)",
    )
    p.add_argument("--order", type=int, help="order for built-in enumeration")
    p.add_argument("--file", help="graph6 file to ingest instead")
    p.add_argument("--count-only", action="store_true", dest="count_only")
    p.add_argument("--out", help="write graph6 lines here instead of stdout")
    p.set_defaults(func=_cmd_enumerate)

    for name, helptext in (
        (
            "verify",
            "run one claim cell: every graph under the radius threshold has "
            "the property, except the designated extremal graph",
        ),
        ("sharpness", "confirm the extremal graph attains the threshold and fails"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--theorem", choices=("T1", "T2", "T3", "T4", "T5"), required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--d", type=int)
        if name == "verify":
            p.add_argument(
                "--source", choices=("builtin", "file", "sample"), default="builtin"
            )
            p.add_argument("--file", help="graph6 file for --source file")
            p.add_argument("--samples", type=int, default=300)
            p.add_argument("--seed", type=int, default=20260809)
            p.add_argument("--out", help="report path")
            p.add_argument("--format", choices=("csv", "json"), default="csv")
            p.add_argument(
                "--workers",
                type=int,
                default=int(os.environ.get("KMS_WORKERS", "1")),
                help="parallel workers (default: KMS_WORKERS or 1)",
            )
            p.set_defaults(func=_cmd_verify)
        else:
            p.set_defaults(func=_cmd_sharpness)

    p = sub.add_parser(
        "minimize",
        help="minimum-radius graph lacking a property (expected: the "
        "extremal graph of the matching claim)",
    )
    p.add_argument("--property", choices=[pr.value for pr in Property], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--source", choices=("builtin", "file", "sample"), default="builtin")
    p.add_argument("--file")
    p.add_argument("--samples", type=int, default=300)
    p.add_argument("--seed", type=int, default=20260809)
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser(
        "lemmas",
        help="numeric sweeps of the radius-comparison lemmas with their "
        "equality cases (L2.6 merge, L2.7/L2.8 family orderings)",
    )
    p.add_argument("--lemma", choices=("L2.6", "L2.7", "L2.8"), required=True)
    p.add_argument("--max-n", type=int, default=30, dest="max_n")
    p.add_argument("--format", choices=("plain", "csv"), default="plain")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_lemmas)

    p = sub.add_parser(
        "g6", help="graph6 codec round-trip check over a file or stdin"
    )
    p.add_argument("--file", help="graph6 file; default stdin")
    p.set_defaults(func=_cmd_g6)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
