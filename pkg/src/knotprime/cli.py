"""Command line front end.

Six subcommands: ``analyze`` certifies one knot file, ``batch`` sweeps a
directory, ``tensor`` writes the connected sum of two files, ``reduce``
prints the bar normal form of a stored complex, ``factor`` prints the
factorization report for a rank table, and ``selftest`` re-checks the
bundled corpus plus the two-bar product closed form.

Exit codes: 0 on success, 1 on invalid input (including files whose
analysis comes back INVALID), 2 on internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .barred import (
    Bar,
    ComplexError,
    FilteredComplex,
    Generator,
    counts,
    reduce_to_bars,
    split_bars,
    tensor,
)
from .engine import (
    INVALID,
    KnotFileError,
    Verdict,
    analyze,
    batch_files,
    build_omega,
    connected_sum,
    corpus_paths,
    describe_verdict,
    load_knot_file,
    summary_csv,
    write_knot_file,
)
from .factor import (
    factor_laurent,
    is_symmetrically_irreducible,
    maximal_symmetric_factorizations,
)
from .laurent import LaurentError


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; 2 is reserved for
    # internal errors here, so remap to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="knotprime",
        description="Certify knot primality from rank tables and "
        "filtered chain complexes stored as JSON knot files.")
    sub = parser.add_subparsers(
        dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("analyze", help="certify a single knot file")
    p.add_argument("file", type=Path, help="knot file to analyze")
    p.add_argument("--explain", action="store_true",
                   help="append factorizations, warnings and notes")
    p.add_argument("--json", dest="as_json", action="store_true",
                   help="emit the verdict as JSON instead of one line")
    p.set_defaults(run=cmd_analyze)

    p = sub.add_parser("batch", help="analyze every *.json in a directory")
    p.add_argument("dir", type=Path, help="directory of knot files")
    p.add_argument("--out", type=Path, default=None,
                   help="also write a CSV summary to this path")
    p.set_defaults(run=cmd_batch)

    p = sub.add_parser("tensor", help="write the connected sum of two files")
    p.add_argument("left", type=Path)
    p.add_argument("right", type=Path)
    p.add_argument("--out", type=Path, required=True,
                   help="where to write the combined knot file")
    p.set_defaults(run=cmd_tensor)

    p = sub.add_parser(
        "reduce", help="print the bar normal form of a stored complex")
    p.add_argument("file", type=Path)
    p.set_defaults(run=cmd_reduce)

    p = sub.add_parser(
        "factor", help="print the factorization report for a rank table")
    p.add_argument("file", type=Path)
    p.set_defaults(run=cmd_factor)

    p = sub.add_parser(
        "selftest",
        help="re-check the bundled corpus and the two-bar closed form")
    p.set_defaults(run=cmd_selftest)

    return parser


def _fail(message) -> int:
    print("invalid input: %s" % message, file=sys.stderr)
    return 1


def _explain_lines(v: Verdict):
    lines = []
    for report in v.diagnostics.factorizations:
        lines.append("factorization: %s" % report)
    if v.required_exclusions:
        lines.append(
            "classes to exclude: " + ", ".join(v.required_exclusions))
    if v.diagnostics.l_space_pattern is not None:
        lines.append("L-space pattern: %s"
                     % ("yes" if v.diagnostics.l_space_pattern else "no"))
    for w in v.warnings:
        lines.append("warning: %s" % w)
    for m in v.messages:
        lines.append("note: %s" % m)
    if not lines:
        lines.append("no additional detail")
    return lines


def cmd_analyze(args) -> int:
    name = args.file.stem
    try:
        knot = load_knot_file(args.file)
        name = knot.name
        verdict = analyze(knot)
    except (KnotFileError, OSError) as err:
        verdict = Verdict(INVALID, messages=(str(err),))
    if args.as_json:
        payload = verdict.to_json()
        payload["name"] = name
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(describe_verdict(verdict))
        if args.explain:
            for line in _explain_lines(verdict):
                print("  " + line)
    return 1 if verdict.status == INVALID else 0


def cmd_batch(args) -> int:
    if not args.dir.is_dir():
        return _fail("not a directory: %s" % args.dir)
    summary = batch_files(sorted(args.dir.glob("*.json")))
    for line in summary.lines():
        print(line)
    if args.out is not None:
        args.out.write_text(summary_csv(summary), encoding="utf-8")
        print("wrote %s" % args.out)
    return 0


def cmd_tensor(args) -> int:
    try:
        left = load_knot_file(args.left)
        right = load_knot_file(args.right)
        combined = connected_sum(left, right)
    except (KnotFileError, OSError, LaurentError, ComplexError) as err:
        return _fail(err)
    write_knot_file(combined, args.out)
    print("wrote %s (%s)" % (args.out, combined.name))
    return 0


def cmd_reduce(args) -> int:
    try:
        knot = load_knot_file(args.file)
    except (KnotFileError, OSError) as err:
        return _fail(err)
    if knot.complex is None:
        return _fail("no chain complex stored in %s" % args.file)
    try:
        bars = reduce_to_bars(knot.complex)
    except ComplexError as err:
        return _fail(err)
    print("tau = %d" % bars.tau_filtration)
    for bar in bars.bars:
        parity = "even" if bar.bottom_grading % 2 == 0 else "odd"
        print("bar: top %d bottom %d grading %d (%s)"
              % (bar.top_filtration, bar.bottom_filtration,
                 bar.bottom_grading, parity))
    c = counts(bars)
    print("counts: delta=%d b_e=%d b_o=%d" % (c.delta, c.b_even, c.b_odd))
    return 0


def cmd_factor(args) -> int:
    try:
        knot = load_knot_file(args.file)
        omega = build_omega(knot.ranks)
    except (KnotFileError, OSError) as err:
        return _fail(err)
    print("omega = %s" % omega.to_text())
    if omega == type(omega).one():
        print("unit rank polynomial; nothing to factor")
        return 0
    if not omega.is_symmetric():
        return _fail("rank polynomial fails the symmetry relation")
    try:
        irr = factor_laurent(omega)
        for cf, mult in irr.factors:
            suffix = "" if mult == 1 else " ^%d" % mult
            print("irreducible: (%s)%s" % (cf.to_text(), suffix))
        if is_symmetrically_irreducible(omega):
            print("symmetrically irreducible")
        else:
            print("maximal symmetric factorizations:")
            for fact in maximal_symmetric_factorizations(omega):
                print("  " + " * ".join(
                    "(%s)" % piece.to_text()
                    for piece in fact.laurent_parts()))
    except LaurentError as err:
        return _fail(err)
    return 0


def _single_bar(top, bottom, grading, tag) -> FilteredComplex:
    x = Generator("x" + tag, grading + 1, top)
    y = Generator("y" + tag, grading, bottom)
    return FilteredComplex((x, y), {x.id: {y.id}})


def _bar_pair_cases(span):
    ends = [(t, b) for b in range(-span, span + 1)
            for t in range(b + 1, span + 1)]
    grades = range(-span, span + 1)
    for t1, b1 in ends:
        for g1 in grades:
            for t2, b2 in ends:
                for g2 in grades:
                    yield t1, b1, g1, t2, b2, g2


def cmd_selftest(args) -> int:
    failures = []

    summary = batch_files(corpus_paths())
    matched = sum(1 for e in summary.entries if e.matches_expected())
    print("corpus: %d/%d fixtures match their recorded verdicts"
          % (matched, len(summary.entries)))
    for e in summary.entries:
        if not e.matches_expected():
            failures.append("corpus: %s analyzed %s, recorded %s"
                            % (e.name, e.verdict.status, e.expected))

    cases = 0
    for t1, b1, g1, t2, b2, g2 in _bar_pair_cases(3):
        free, bars = split_bars(tensor(
            _single_bar(t1, b1, g1, "1"), _single_bar(t2, b2, g2, "2")))
        want = {
            Bar(min(t1 + b2, b1 + t2), b1 + b2, g1 + g2),
            Bar(t1 + t2, max(t1 + b2, b1 + t2), g1 + g2 + 1),
        }
        if free or set(bars) != want:
            failures.append(
                "two-bar product (%d,%d,%d)x(%d,%d,%d) reduced to %r"
                % (t1, b1, g1, t2, b2, g2, bars))
        cases += 1
    print("two-bar products: %d reductions match the closed form" % cases)

    if failures:
        for f in failures:
            print("FAIL %s" % f, file=sys.stderr)
        return 2
    print("selftest passed")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        # --help exits 0, usage errors exit 1; surface either as a return
        return int(stop.code or 0)
    try:
        return args.run(args)
    except Exception as err:  # noqa: BLE001  last resort, keep the shell sane
        print("internal error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
