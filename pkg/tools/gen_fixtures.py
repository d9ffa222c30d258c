"""Regenerate the bundled fixture corpus under src/knotprime/fixtures/.

Run from the repository root:  python3 tools/gen_fixtures.py
Every generated file is verified against its expected verdict before the
script succeeds; malformed.json is written raw on purpose.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from knotprime.barred import FilteredComplex, Generator, graded_ranks, mirror
from knotprime.engine import (
    CONDITIONALLY_PRIME,
    PRIME,
    UNKNOT,
    KnotInput,
    analyze,
    connected_sum,
    write_knot_file,
)

OUT = Path(__file__).resolve().parents[1] / "src" / "knotprime" / "fixtures"


def staircase(n, prefix="g"):
    half = (n - 1) // 2
    gens = [Generator("%s%d" % (prefix, k), -k, half - k) for k in range(n)]
    boundary = {"%s%d" % (prefix, k): {"%s%d" % (prefix, k + 1)}
                for k in range(1, n, 2)}
    return FilteredComplex(gens, boundary)


def fig8():
    return FilteredComplex(
        [Generator("g1", 0, 0), Generator("g2", 1, 1), Generator("g3", 0, 0),
         Generator("g4", 0, 0), Generator("g5", -1, -1)],
        {"g2": {"g3"}, "g4": {"g5"}})


def from_complex(name, cx, expected):
    return KnotInput(name=name, ranks=graded_ranks(cx), complex=cx,
                     expected_verdict=expected)


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    t23 = from_complex("T(2,3)", staircase(3), PRIME)
    t23m = from_complex("-T(2,3)", mirror(staircase(3)), PRIME)
    t25 = from_complex("T(2,5)", staircase(5), PRIME)
    t25m = from_complex("-T(2,5)", mirror(staircase(5)), PRIME)
    t27 = from_complex("T(2,7)", staircase(7), PRIME)
    f8 = from_complex("4_1", fig8(), PRIME)
    unknot = from_complex(
        "unknot", FilteredComplex([Generator("g0", 0, 0)], {}), UNKNOT)

    granny = connected_sum(t23, t23, name="granny")
    square = connected_sum(t23, t23m, name="square")
    t23_f8 = connected_sum(t23, f8)
    granny = KnotInput(name=granny.name, ranks=granny.ranks,
                       complex=granny.complex,
                       expected_verdict=CONDITIONALLY_PRIME)
    square = KnotInput(name=square.name, ranks=square.ranks,
                       complex=square.complex,
                       expected_verdict=CONDITIONALLY_PRIME)
    t23_f8 = KnotInput(name=t23_f8.name, ranks=t23_f8.ranks,
                       complex=t23_f8.complex,
                       expected_verdict=CONDITIONALLY_PRIME)

    # same ranks as T(2,3) # 4_1, but with the trefoil class certified
    # absent: exercises the exclusion route on its own
    t3logic = KnotInput(
        name="t3logic",
        ranks=t23_f8.ranks,
        certificates=frozenset({"T(2,3)", "-T(2,3)"}),
        expected_verdict=PRIME)

    corpus = {
        "t23.json": t23,
        "t23m.json": t23m,
        "t25.json": t25,
        "t25m.json": t25m,
        "t27.json": t27,
        "fig8.json": f8,
        "unknot.json": unknot,
        "granny.json": granny,
        "square.json": square,
        "t23_fig8.json": t23_f8,
        "t3logic.json": t3logic,
    }
    for fname, knot in corpus.items():
        verdict = analyze(knot)
        if verdict.status != knot.expected_verdict:
            raise SystemExit("%s: got %s, labeled %s" % (
                fname, verdict.status, knot.expected_verdict))
        if verdict.warnings:
            raise SystemExit("%s: unexpected warnings %r" % (
                fname, verdict.warnings))
        write_knot_file(knot, OUT / fname)
        print("wrote %-16s %s" % (fname, verdict.status))

    malformed = {
        "name": "malformed",
        "ranks": [{"alexander": 0, "maslov": 0}],
        "expected_verdict": "INVALID",
    }
    (OUT / "malformed.json").write_text(
        json.dumps(malformed, indent=2, sort_keys=True) + "\n",
        encoding="utf-8")
    print("wrote malformed.json    INVALID (on purpose)")


if __name__ == "__main__":
    main()
