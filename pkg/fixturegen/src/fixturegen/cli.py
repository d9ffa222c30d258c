"""Command line for the exporter.

Exit codes: 0 success, 1 invalid input or unavailable calculator,
2 internal error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .export import (
    ExportError,
    ExportRequest,
    ToolMissingError,
    convention_selftest,
    export,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="fixturegen",
        description="Export knot Floer data from an external calculator "
        "as knot files in the certification engine's format.")
    sub = parser.add_subparsers(
        dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser(
        "export", help="export one knot to a knot file",
        epilog="names starting with '-' need a separator: "
        "fixturegen export -o out.json -- '-T(2,3)'")
    p.add_argument("knot",
                   help="knot name in the calculator's convention, "
                   "e.g. T(2,3) or 4_1")
    p.add_argument("-o", "--out", type=Path, required=True,
                   help="where to write the knot file")
    p.add_argument("--complex", dest="include_complex", action="store_true",
                   help="also export generators and differentials")
    p.add_argument("--no-selftest", action="store_true",
                   help="skip the trefoil convention check")

    sub.add_parser(
        "selftest",
        help="check the calculator's conventions against the known "
        "trefoil table")

    return parser


def main(argv=None, backend=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    try:
        if backend is None:
            from .snappy_backend import SnapPyBackend
            backend = SnapPyBackend()
        if args.command == "selftest" or not args.no_selftest:
            convention_selftest(backend)
        if args.command == "export":
            out = export(ExportRequest(
                args.knot, args.out, args.include_complex), backend)
            print("wrote %s (%s)" % (out, args.knot))
        else:
            print("calculator conventions match the known trefoil table")
        return 0
    except (ExportError, OSError) as err:
        # ToolMissingError lands here too, with its install hint intact
        print("error: %s" % err, file=sys.stderr)
        return 1
    except Exception as err:  # noqa: BLE001  last resort
        print("internal error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
