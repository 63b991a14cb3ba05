"""Command-line front end.

Subcommands: check, ideal, sw, kahler, census, verify.  Verdicts are
data, not errors: a non-Spin manifold still exits 0.  Exit code 2 is
reserved for input and processing problems (unparseable files, bad
dimensions, size guards).  The verify subcommand exits 1 when the
oracle cross-check finds disagreements.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .bottcore import (
    BottMatrix,
    MatrixParseError,
    PMatrix,
    analyze,
    bott_to_p,
    characteristic_ideal,
    is_kahler,
    parse_bott,
    parse_pmatrix,
    pmatrix_to_bott,
    spin_membership,
    has_full_holonomy,
    is_free,
    sw_class,
)
from .census import (
    CSV_HEADER,
    CensusConfig,
    apply_worker_cap,
    enumerate_bott,
    run_census,
)
from .euclid import check_against_rows
from .f2poly import decode_degree2


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_pmatrix(args: argparse.Namespace) -> PMatrix:
    text = _read(args.path)
    if args.pmat:
        return parse_pmatrix(text)
    return bott_to_p(parse_bott(text))


def _bott_report(a: BottMatrix) -> dict:
    rep = analyze(a)
    pairing = None
    s_vector = None
    if rep.kahler is not None:
        pairing = [[i + 1, j + 1] for i, j in rep.kahler.pairs]
        s_vector = list(rep.s_vector)
    return {
        "dimension": rep.n,
        "free": rep.free,
        "holonomyFull": rep.holonomy_full,
        "orientable": rep.orientable,
        "w1": str(rep.w1),
        "w2": str(rep.w2raw),
        "kahler": rep.kahler is not None,
        "pairing": pairing,
        "sVector": s_vector,
        "spin": rep.spin,
        "spinMethod": "both-agree" if rep.kahler is not None else "general",
    }


def _pmatrix_report(p: PMatrix) -> dict:
    # Generic P-matrix: the Kahler column test needs a Bott matrix, so
    # those fields stay null; Spin still comes from the membership test.
    spin, w1, w2 = spin_membership(p)
    return {
        "dimension": p.n,
        "free": is_free(p),
        "holonomyFull": has_full_holonomy(p),
        "orientable": w1.is_zero,
        "w1": str(w1),
        "w2": str(w2),
        "kahler": None,
        "pairing": None,
        "sVector": None,
        "spin": spin,
        "spinMethod": "general",
    }


def _print_report(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report))
        return
    width = max(len(k) for k in report)
    for key, value in report.items():
        if value is None:
            text = "n/a"
        elif isinstance(value, bool):
            text = "true" if value else "false"
        elif key == "pairing":
            text = " ".join(f"({i},{j})" for i, j in value)
        elif key == "sVector":
            text = " ".join(str(v) for v in value)
        else:
            text = str(value)
        print(f"{key:<{width}}  {text}")


def _cmd_check(args: argparse.Namespace) -> int:
    text = _read(args.path)
    if args.pmat:
        p = parse_pmatrix(text)
        a = pmatrix_to_bott(p)
        report = _bott_report(a) if a is not None else _pmatrix_report(p)
    else:
        report = _bott_report(parse_bott(text))
    _print_report(report, args.json)
    return 0


def _cmd_ideal(args: argparse.Namespace) -> int:
    p = _load_pmatrix(args)
    basis = characteristic_ideal(p)
    for j, theta in enumerate(basis.thetas, start=1):
        print(f"theta_{j} = {theta}")
    print(f"reduced degree-2 basis (rank {basis.rank}):")
    for row in basis.reduced.rows:
        print(f"  {decode_degree2(p.d, row)}")
    return 0


def _cmd_sw(args: argparse.Namespace) -> int:
    p = _load_pmatrix(args)
    print(sw_class(p, args.max_degree))
    return 0


def _cmd_kahler(args: argparse.Namespace) -> int:
    a = parse_bott(_read(args.path))
    pairing = is_kahler(a)
    if args.json:
        payload = {
            "dimension": a.n,
            "kahler": pairing is not None,
            "pairing": None
            if pairing is None
            else [[i + 1, j + 1] for i, j in pairing.pairs],
        }
        print(json.dumps(payload))
    elif pairing is None:
        print("kahler: false")
    else:
        pairs = " ".join(f"({i + 1},{j + 1})" for i, j in pairing.pairs)
        print(f"kahler: true  pairing {pairs}")
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    cfg = CensusConfig(
        n=args.n,
        emit_matrices=args.emit,
        check_oracles=args.check_oracles,
        workers=apply_worker_cap(args.workers),
    )
    row, emitted = run_census(cfg)
    if args.csv:
        print(CSV_HEADER)
        print(row.to_csv())
    else:
        print(f"n               {row.n}")
        print(f"total           {row.total}")
        print(f"orientable      {row.orientable}")
        print(f"kahler          {row.kahler}")
        print(f"spin            {row.spin}")
        print(f"kahler_and_spin {row.kahler_and_spin}")
        print(f"kahler_not_spin {row.kahler_not_spin}")
    for line in emitted:
        print(line)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.n is not None:
        matrices = enumerate_bott(args.n)
    else:
        matrices = iter([parse_bott(_read(args.path))])
    total = 0
    problems: list[str] = []
    for a in matrices:
        total += 1
        problems.extend(check_against_rows(a))
    noun = "matrix" if total == 1 else "matrices"
    print(f"{total} {noun}, {len(problems)} disagreements")
    for msg in problems:
        print(msg)
    return 0 if not problems else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realbott",
        description="Characteristic classes and Spin/Kahler deciders for real Bott manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_command(name: str, help_text: str, pmat: bool = True):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("path", help="matrix file (rows of digits; '#' comments)")
        if pmat:
            cmd.add_argument(
                "--pmat",
                action="store_true",
                help="read a P-matrix over 0..3 instead of a Bott matrix",
            )
        return cmd

    check = add_matrix_command("check", "full report for one matrix")
    check.add_argument("--json", action="store_true", help="machine-readable output")

    ideal = add_matrix_command("ideal", "characteristic-ideal generators and reduced basis")

    sw = add_matrix_command("sw", "total Stiefel-Whitney class, truncated")
    sw.add_argument(
        "--max-degree",
        type=int,
        default=2,
        metavar="K",
        help="truncation degree (default 2)",
    )

    kahler = add_matrix_command("kahler", "Kahler verdict and column pairing", pmat=False)
    kahler.add_argument("--json", action="store_true", help="machine-readable output")

    census = sub.add_parser("census", help="classify every Bott matrix of one dimension")
    census.add_argument("-n", type=int, required=True, help="matrix dimension")
    census.add_argument("--csv", action="store_true", help="CSV output")
    census.add_argument(
        "--check-oracles",
        action="store_true",
        help="cross-check every matrix against the Euclidean-motion oracle",
    )
    census.add_argument(
        "--emit", action="store_true", help="list every matrix, one per line"
    )
    census.add_argument(
        "--workers",
        type=int,
        default=1,
        help="parallel workers (BOTT_THREADS caps this)",
    )

    verify = sub.add_parser("verify", help="oracle cross-check report")
    group = verify.add_mutually_exclusive_group(required=True)
    group.add_argument("path", nargs="?", help="matrix file to verify")
    group.add_argument("-n", type=int, help="verify every matrix of this dimension")

    check.set_defaults(func=_cmd_check)
    ideal.set_defaults(func=_cmd_ideal)
    sw.set_defaults(func=_cmd_sw)
    kahler.set_defaults(func=_cmd_kahler)
    census.set_defaults(func=_cmd_census)
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
