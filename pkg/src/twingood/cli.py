"""Command-line front door.

Exit codes are a stable contract:
  0  success / agreement
  1  input error (unparseable descriptor, file, or usage)
  2  the matrix is not twin-good
  3  oracle/criterion disagreement, or a certificate that fails replay
  4  exhaustion bound exceeded
"""

from __future__ import annotations

import argparse
import sys

from .construct import twin_decompose, two_sum_decompose, verify_twin_certificate
from .errors import (
    DocumentParseError,
    Error,
    ExhaustionBoundExceeded,
    NotSquare,
    NotTwinGood,
    RingMismatch,
    RingParseError,
    ShapeMismatch,
)
from .oracle import goodness_report, sweep
from .rings import DEFAULT_EXHAUSTION_BOUND, parse_family, parse_ring
from .serialize import (
    format_certificate_doc,
    format_matrix_doc,
    format_report_doc,
    format_sweep_table,
    parse_certificate_doc,
    parse_matrix_doc,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_TWIN_GOOD = 2
EXIT_DISAGREEMENT = 3
EXIT_BOUND = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the contract wants 1
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twingood", description="Twin-unit decompositions over small finite rings")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized trial modes (reserved; the shipped commands are deterministic)")
        p.add_argument("--bound", type=int, default=DEFAULT_EXHAUSTION_BOUND, help="exhaustive-enumeration bound on ring size")
        p.add_argument("--kmax", type=int, default=8, help="largest k reported in k-goodness maps")
        p.add_argument("--format", choices=("structured-text", "table"), default=None, help="output format")
        p.add_argument("-v", "--verbose", action="count", default=0, help="progress notes on stderr")

    p_dec = sub.add_parser("decompose", help="read a matrix file, emit a twin certificate")
    p_dec.add_argument("--in", dest="infile", required=True, metavar="PATH", help="matrix document")
    common(p_dec)

    p_chk = sub.add_parser("check", help="run the goodness oracle on one ring")
    p_chk.add_argument("--ring", required=True, help="ring descriptor, e.g. Z/35 or M(2, Z/3)")
    common(p_chk)

    p_swp = sub.add_parser("sweep", help="criterion census over a ring family")
    p_swp.add_argument("family", help="e.g. 'Z/2..60' or 'GF(2),GF(3),GF(4),GF(5)'")
    common(p_swp)

    p_ver = sub.add_parser("verify", help="replay a certificate document")
    p_ver.add_argument("--in", dest="infile", required=True, metavar="PATH", help="certificate document")
    common(p_ver)
    return parser


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(args, message: str):
    if getattr(args, "verbose", 0):
        sys.stderr.write(message + "\n")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentParseError(f"cannot read {path}: {exc}") from None


def cmd_decompose(args) -> int:
    matrix = parse_matrix_doc(_read(args.infile))
    try:
        cert = twin_decompose(matrix, bound=args.bound)
    except NotTwinGood as exc:
        sys.stdout.write(f"not twin-good: {exc}\n")
        return EXIT_NOT_TWIN_GOOD
    u1, u2 = two_sum_decompose(matrix, bound=args.bound)
    _note(args, f"decomposed {matrix.nrows}x{matrix.ncols} over {matrix.ring} via {cert.method}")
    _emit(args, format_certificate_doc(cert, two_sum=(u1, u2)))
    return EXIT_OK


def cmd_check(args) -> int:
    ring = parse_ring(args.ring)
    _note(args, f"checking {ring} ({ring.order} elements)")
    report = goodness_report(ring, k_max=args.kmax, bound=args.bound)
    if args.format == "table":
        _emit(args, format_sweep_table([report]))
    else:
        _emit(args, format_report_doc(report))
    return EXIT_OK if report.agreement else EXIT_DISAGREEMENT


def cmd_sweep(args) -> int:
    rings = parse_family(args.family)
    _note(args, f"sweeping {len(rings)} rings")
    reports = sweep(rings, k_max=args.kmax, bound=args.bound)
    if args.format == "structured-text":
        _emit(args, "\n".join(format_report_doc(r) for r in reports) or "")
    else:
        _emit(args, format_sweep_table(reports))
    disagreements = [r for r in reports if r.agreement is False]
    return EXIT_DISAGREEMENT if disagreements else EXIT_OK


def cmd_verify(args) -> int:
    cert = parse_certificate_doc(_read(args.infile))
    replay = verify_twin_certificate(cert)
    agree = replay == cert.verified
    _emit(
        args,
        f"replay: {'pass' if replay else 'fail'}\n"
        f"embedded: {'true' if cert.verified else 'false'}\n"
        f"agreement: {'true' if agree else 'false'}\n",
    )
    return EXIT_OK if agree else EXIT_DISAGREEMENT


_COMMANDS = {
    "decompose": cmd_decompose,
    "check": cmd_check,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    try:
        return _COMMANDS[args.command](args)
    except ExhaustionBoundExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BOUND
    except (RingParseError, DocumentParseError, ShapeMismatch, RingMismatch, NotSquare) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except Error as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
