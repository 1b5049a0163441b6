"""Command-line entry point: ``ksforge <subcommand>``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .construction import construct_11, construct_13, construct_15, trace_render
from .enumeration import cross_check_constructions, enumerate_parity_proofs, fixture_differences, kernel_catalog
from .errors import (
    AmbiguousFinalBasis,
    CrossedPairConflict,
    DocumentError,
    FixtureMismatch,
    GammaMismatch,
    InadmissiblePick,
    KSForgeError,
    SameColumn,
    Stalled,
    UnexpectedBasisCount,
)
from .geometry import default_geometry
from .parity import census_signature, find_coloring, is_parity_proof
from .rays import build_ray_table

EXIT_PARSE = 1
EXIT_FIXTURE = 2
EXIT_CODES = {
    SameColumn: 3,
    CrossedPairConflict: 4,
    Stalled: 5,
    AmbiguousFinalBasis: 5,
    InadmissiblePick: 5,
}
EXIT_CATALOG = 6


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _gamma_arg(text: str) -> tuple[int, int]:
    try:
        column, row = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected COLUMN,ROW, got {text!r}")
    if not (1 <= column <= 5 and 1 <= row <= 8):
        raise argparse.ArgumentTypeError(f"Gamma index out of range: {text!r}")
    return column, row


def _ray_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ray ids, got {text!r}")


def cmd_rays(args) -> int:
    table = build_ray_table()
    if args.check:
        print(f"OK: {len(table)} rays match Table 1")
        return 0
    _emit(io.rays_json(table) if args.format == "json" else io.rays_table(table, bar=args.bar))
    return 0


def cmd_bases(args) -> int:
    geom = default_geometry()
    _emit(io.bases_json(geom) if args.format == "json" else io.bases_table(geom))
    return 0


def cmd_gamma(args) -> int:
    geom = default_geometry()
    _emit(io.gamma_json(geom) if args.format == "json" else io.gamma_table(geom))
    return 0


def cmd_construct(args, parser) -> int:
    gammas = args.gamma or []
    needed = {11: 1, 13: 3, 15: 4}[args.type]
    if len(gammas) != needed:
        parser.error(f"--type {args.type} needs exactly {needed} --gamma arguments")
    if args.picks is not None and args.type != 11:
        parser.error("--picks is only valid with --type 11")
    try:
        if args.type == 11:
            result = construct_11(gammas[0], args.picks)
        elif args.type == 13:
            result = construct_13(*gammas)
        else:
            result = construct_15(*gammas)
    except tuple(EXIT_CODES) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CODES[type(exc)]
    doc = io.KSSetDocument.from_bases(result.bases, expand=args.expand)
    if args.out:
        _emit(doc.to_json(), args.out)
        sys.stdout.write(trace_render(result))
    elif args.format == "json":
        sys.stdout.write(doc.to_json())
    else:
        sys.stdout.write(trace_render(result))
        sys.stdout.write(doc.to_json())
    return 0


def _load_document(path: str) -> io.KSSetDocument:
    return io.KSSetDocument.parse(Path(path).read_text(encoding="utf-8"))


def cmd_verify(args) -> int:
    doc = _load_document(args.file)
    if is_parity_proof(doc.bases):
        print(f"parity proof: yes; signature {census_signature(doc.bases)}")
    else:
        print(f"parity proof: no; census {census_signature(doc.bases)}")
    return 0


def cmd_color_check(args) -> int:
    doc = _load_document(args.file)
    parity = "yes" if is_parity_proof(doc.bases) else "no"
    coloring = find_coloring(doc.bases)
    if coloring is None:
        print(f"parity proof: {parity}; uncolorable: yes")
    else:
        ones = " ".join(f"R{r}" for r, v in coloring.items() if v == 1)
        print(f"parity proof: {parity}; uncolorable: no")
        print(f"witness (rays valued 1): {ones}")
    return 0


def cmd_enumerate(args) -> int:
    catalog = enumerate_parity_proofs()
    if args.fixture_check:
        problems = fixture_differences(catalog)
        if catalog != kernel_catalog():
            problems.append("subset scan and GF(2) kernel span disagree")
        if problems:
            for p in problems:
                print(f"MISMATCH {p}", file=sys.stderr)
            return EXIT_CATALOG
    if args.classify and args.format == "json":
        sys.stdout.write(catalog.to_json(minimal_only=args.minimal))
        return 0
    counts = catalog.minimal_counts if args.minimal else catalog.counts
    label = "minimal parity proofs" if args.minimal else "parity proofs"
    print(f"{label}: {sum(counts.values())}")
    for sig, n in counts.items():
        print(f"  {sig:<20} {n}")
    if args.fixture_check:
        print("fixture check: OK")
    if args.cross_check:
        sys.stdout.write(cross_check_constructions(catalog).render())
    return 0


def cmd_graph(args) -> int:
    if args.kind == "orthogonality":
        text = io.orthogonality_dot(build_ray_table())
    else:
        text = io.bases_dot(default_geometry())
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ksforge", description="Three-qubit Kochen-Specker sets from the Mermin pentagram.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rays", help="print the 40 rays")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--bar", action="store_true", help="render -1 as 1 with an overbar")
    p.add_argument("--check", action="store_true", help="only confirm the derivation matches Table 1")

    p = sub.add_parser("bases", help="print the 25 bases with lines and partners")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("gamma", help="print the Gamma table")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("construct", help="run a manual construction")
    p.add_argument("--type", type=int, choices=(11, 13, 15), required=True)
    p.add_argument("--gamma", type=_gamma_arg, action="append", metavar="COLUMN,ROW")
    p.add_argument("--picks", type=_ray_list, metavar="R,R,...")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--expand", action="store_true", help="include rays_per_basis in the document")
    p.add_argument("--out", help="write the KS-set document to this file")

    p = sub.add_parser("verify", help="check whether a KS-set document is a parity proof")
    p.add_argument("file")

    p = sub.add_parser("color-check", help="search for a noncontextual 0/1 assignment")
    p.add_argument("file")

    p = sub.add_parser("enumerate", help="enumerate all parity proofs over the 25 bases")
    p.add_argument("--classify", action="store_true", help="list every proof with its signature")
    p.add_argument("--minimal", action="store_true", help="restrict to subset-minimal proofs")
    p.add_argument("--fixture-check", action="store_true", help="compare counts with the frozen fixture")
    p.add_argument("--cross-check", action="store_true", help="also sweep all manual constructions")
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("graph", help="export a graph in DOT format")
    p.add_argument("--kind", choices=("orthogonality", "bases"), required=True)
    p.add_argument("--out")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            return cmd_construct(args, parser)
        handler = {
            "rays": cmd_rays,
            "bases": cmd_bases,
            "gamma": cmd_gamma,
            "verify": cmd_verify,
            "color-check": cmd_color_check,
            "enumerate": cmd_enumerate,
            "graph": cmd_graph,
        }[args.command]
        return handler(args)
    except (FixtureMismatch, GammaMismatch, UnexpectedBasisCount) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except (DocumentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except KSForgeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FIXTURE


if __name__ == "__main__":
    sys.exit(main())
