"""
Command-line surface for the workbench

Exit status: 0 on success, 1 on a usage or input error, 2 when a
verification suite fails.
"""

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from valuta.errors import ParseError, UsageError, ValutaError
from valuta.models.descriptor import parse_descriptor
from valuta.models.matroid import Matroid, elements_of, parse_mtx
from valuta.services.decomposition import RANK_FAMILIES, decomposition_service
from valuta.services.families import family_service
from valuta.services.generation import RANDOM_KINDS, generation_service
from valuta.services.invariants import invariant_service
from valuta.services.verification import SUITES, verification_service

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2

BASIS_CHOICES = {"cuspidal": "cuspidal", "class-u": "class_U", "class-t": "class_T"}


class WorkbenchParser(argparse.ArgumentParser):
    """argparse reports bad flags through UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(message)


def load_matroid(source: str) -> Matroid:
    """A `.mtx` file path, or a descriptor such as `cuspidal:1,2,2,4`"""
    if source.endswith(".mtx") or os.path.isfile(source):
        try:
            with open(source, encoding="utf-8") as handle:
                return parse_mtx(handle.read())
        except OSError as e:
            raise ParseError(f"cannot read {source}: {e.strerror}", module="matroid-core")
    return family_service.realize(parse_descriptor(source))


def describe(M: Matroid) -> dict:
    return {
        "n": M.n,
        "k": M.k,
        "bases": [elements_of(b) for b in M.sorted_bases],
        "loops": elements_of(M.loops),
        "coloops": elements_of(M.coloops),
        "cyclic_flats": [[elements_of(mask), rank] for mask, rank in M.cyclic_flats()],
        "connected": M.is_connected(),
        "paving": M.is_paving(),
        "sparse_paving": M.is_sparse_paving(),
        "simple": M.is_simple(),
    }


def add_common_options(parser: argparse.ArgumentParser, suppress: bool = False):
    """--json and --threads, accepted before or after the subcommand"""
    parser.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS if suppress else False, help="machine-readable output")
    parser.add_argument("--threads", type=int,
                        default=argparse.SUPPRESS if suppress else None, help="worker processes for batch work")


def build_parser() -> WorkbenchParser:
    parser = WorkbenchParser(prog="valuta", description="Matroid valuative-invariant workbench")
    add_common_options(parser)
    # SUPPRESS keeps a subcommand from resetting options given before it
    common = WorkbenchParser(add_help=False)
    add_common_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", parser_class=WorkbenchParser)
    sub.required = True

    for name, text in (
        ("show", "print a matroid and its basic properties"),
        ("tutte", "Tutte polynomial"),
        ("ginv", "G-invariant"),
        ("classify", "excluded-minor class membership"),
    ):
        command = sub.add_parser(name, help=text, parents=[common])
        command.add_argument("input", help=".mtx path or descriptor")

    decompose = sub.add_parser("decompose", help="integer decomposition of the Tutte polynomial", parents=[common])
    decompose.add_argument("input", help=".mtx path or descriptor")
    decompose.add_argument("--basis", choices=sorted(BASIS_CHOICES), default="cuspidal")

    table = sub.add_parser("rank-table", help="T-rank and G-rank of a family per stratum", parents=[common])
    table.add_argument("--family", choices=RANK_FAMILIES, default="all")
    table.add_argument("--n", type=int, action="append", required=True)
    table.add_argument("--k", type=int, action="append")
    table.add_argument("--invariant", choices=("tutte", "ginv"), action="append")
    table.add_argument("--csv", action="store_true")

    enumerate_ = sub.add_parser("enumerate", help="all matroids of a stratum, up to isomorphism", parents=[common])
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--k", type=int, required=True)
    enumerate_.add_argument("--labeled", action="store_true", help="every labeled matroid")
    enumerate_.add_argument("--force-cap-override", action="store_true")

    random_ = sub.add_parser("random", help="seeded random matroid", parents=[common])
    random_.add_argument("--kind", choices=RANDOM_KINDS, required=True)
    random_.add_argument("--n", type=int, required=True)
    random_.add_argument("--k", type=int, required=True)
    random_.add_argument("--seed", type=int, required=True)

    verify = sub.add_parser("verify", help="run a verification suite", parents=[common])
    verify.add_argument("suite", choices=SUITES + ("all",))
    return parser


def execute(args: argparse.Namespace) -> tuple:
    """Run one parsed command; returns (output text, exit status)"""
    as_json = args.json

    if args.command == "verify":
        report = verification_service.run(args.suite, args.threads)
        text = json.dumps(report.to_json(), indent=2) if as_json else report.to_text()
        return text, EXIT_OK if report.passed else EXIT_VERIFY

    if args.command == "rank-table":
        invariants = args.invariant or ["tutte", "ginv"]
        table = decomposition_service.rank_table(args.family, args.n, args.k, invariants)
        if as_json:
            return json.dumps(table.to_json(), indent=2), EXIT_OK
        if len(table.entries) == 1 and len(invariants) == 1:
            (entry,) = table.entries.values()
            return str(entry[f"{invariants[0]}_rank"]), EXIT_OK
        return (table.to_csv().rstrip("\n") if args.csv else table.to_text()), EXIT_OK

    if args.command == "enumerate":
        matroids = generation_service.enumerate_matroids(
            args.n, args.k, up_to_iso=not args.labeled, force=args.force_cap_override
        )
        if as_json:
            return json.dumps([describe(M)["bases"] for M in matroids]), EXIT_OK
        return "\n".join(M.to_mtx() for M in matroids).rstrip("\n"), EXIT_OK

    if args.command == "random":
        M = generation_service.random_matroid(args.n, args.k, args.kind, args.seed)
        if as_json:
            return json.dumps(describe(M)), EXIT_OK
        return M.to_mtx(comment=f"{args.kind} seed={args.seed}").rstrip("\n"), EXIT_OK

    M = load_matroid(args.input)
    if args.command == "show":
        if as_json:
            return json.dumps(describe(M)), EXIT_OK
        info = describe(M)
        lines = [M.to_mtx().rstrip("\n")]
        lines += [f"# {key}: {info[key]}" for key in ("loops", "coloops", "connected", "paving",
                                                      "sparse_paving", "simple")]
        return "\n".join(lines), EXIT_OK
    if args.command == "tutte":
        T = invariant_service.tutte(M)
        return (json.dumps({"tutte": T.to_json(), "text": str(T)}) if as_json else str(T)), EXIT_OK
    if args.command == "ginv":
        G = invariant_service.g_invariant(M, args.threads)
        return (json.dumps({"n": M.n, "k": M.k, "ginv": G.to_json()}) if as_json else str(G)), EXIT_OK
    if args.command == "classify":
        report = family_service.classify(M)
        return (json.dumps(report.to_json()) if as_json else str(report)), EXIT_OK
    if args.command == "decompose":
        dec = decomposition_service.decompose(M, BASIS_CHOICES[args.basis])
        return (json.dumps(dec.to_json()) if as_json else str(dec)), EXIT_OK
    raise UsageError(f"unknown command {args.command}")


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.threads is not None and args.threads < 1:
            raise UsageError("--threads must be at least 1")
        text, code = execute(args)
    except ValutaError as e:
        print(f"❌ {e}", file=err)
        return EXIT_INPUT
    except Exception as e:
        print(f"❌ [cli] {type(e).__name__}: {e}", file=err)
        return EXIT_INPUT
    print(text, file=out)
    return code


def main(argv: Optional[List[str]] = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
