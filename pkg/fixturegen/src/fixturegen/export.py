"""Translation from a knot Floer calculator's output to knot files.

The calculator sits behind a one-method backend protocol
(``compute(name, include_complex) -> raw dict``), so everything here is
testable without the external tool installed.  Raw payloads carry

- ``ranks``: dict mapping (alexander, maslov) to a positive dimension
- ``generators`` (optional): dict mapping an integer index to an
  (alexander, maslov) pair
- ``differentials`` (optional): dict mapping (source index, target
  index) to an integer coefficient; odd coefficients are arrows mod 2

and are translated verbatim into the engine's JSON schema.  The rank
table's grading symmetry is checked before anything is written: a
violation means the calculator's conventions drifted from the ones the
engine expects, and the export aborts rather than guessing a repair.

Output files are serialized exactly the way the engine writes its own
(two-space indent, sorted keys, trailing newline, ranks ordered by
(alexander, maslov)), so byte-level comparison against existing corpus
files works.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


class ExportError(RuntimeError):
    """Raised when the calculator's output cannot become a knot file."""


class ToolMissingError(ExportError):
    """Raised when the external calculator is not available."""


# rank table of the left-handed trefoil in the engine's conventions;
# the convention self-test pins the calculator to it
KNOWN_TREFOIL_NAME = "T(2,3)"
KNOWN_TREFOIL_RANKS = {(1, 0): 1, (0, -1): 1, (-1, -2): 1}


@dataclass(frozen=True)
class ExportRequest:
    knot: str
    out: Path
    include_complex: bool = False


def _as_pair(value, what):
    if (not isinstance(value, tuple) or len(value) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool)
                       for x in value)):
        raise ExportError("%s must be a pair of integers, got %r"
                          % (what, value))
    return value


def _checked_ranks(raw_ranks):
    if not isinstance(raw_ranks, dict) or not raw_ranks:
        raise ExportError("calculator returned an empty rank table")
    ranks = {}
    for key, dim in raw_ranks.items():
        i, j = _as_pair(key, "rank key")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
            raise ExportError(
                "rank at (%d, %d) must be a positive integer, got %r"
                % (i, j, dim))
        ranks[(i, j)] = dim
    for (i, j), dim in ranks.items():
        if ranks.get((-i, j - 2 * i)) != dim:
            raise ExportError(
                "rank table breaks the grading symmetry at (%d, %d); the "
                "calculator's conventions no longer match the engine's"
                % (i, j))
    return ranks


def _checked_complex(raw):
    gens = raw.get("generators")
    diffs = raw.get("differentials")
    if not isinstance(gens, dict) or gens is None or diffs is None:
        raise ExportError(
            "calculator output has no chain complex; rerun it with the "
            "complex enabled")
    ids = {}
    entries = []
    for idx, place in gens.items():
        if not isinstance(idx, int) or isinstance(idx, bool):
            raise ExportError("generator index %r is not an integer" % (idx,))
        alexander, maslov = _as_pair(place, "generator %r" % (idx,))
        ids[idx] = "g%d" % idx
        entries.append(
            {"id": ids[idx], "maslov": maslov, "alexander": alexander})
    # engine order: (alexander filtration, maslov grading, id)
    entries.sort(key=lambda e: (e["alexander"], e["maslov"], e["id"]))
    arrows = []
    for key, coeff in diffs.items():
        src, dst = _as_pair(key, "differential key")
        if src not in ids or dst not in ids:
            raise ExportError(
                "differential %r -> %r references a missing generator"
                % (src, dst))
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            raise ExportError(
                "differential %r -> %r has coefficient %r" % (src, dst, coeff))
        if coeff % 2:
            arrows.append({"from": ids[src], "to": ids[dst]})
    arrows.sort(key=lambda a: (a["from"], a["to"]))
    return {"generators": entries, "differentials": arrows}


def translate(name, raw, include_complex) -> dict:
    """Raw calculator payload -> knot file data (engine schema)."""
    if not isinstance(raw, dict):
        raise ExportError("calculator returned %r" % (raw,))
    ranks = _checked_ranks(raw.get("ranks"))
    data = {
        "name": name,
        "ranks": [
            {"alexander": i, "maslov": j, "dim": ranks[(i, j)]}
            for i, j in sorted(ranks)
        ],
    }
    if include_complex:
        data["complex"] = _checked_complex(raw)
    return data


def serialize(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def convention_selftest(backend) -> None:
    """Abort if the calculator's trefoil disagrees with the known table.

    Guards every export against silent upstream convention changes."""
    raw = backend.compute(KNOWN_TREFOIL_NAME, False)
    got = raw.get("ranks") if isinstance(raw, dict) else None
    if got != KNOWN_TREFOIL_RANKS:
        raise ExportError(
            "convention self-test failed: calculator's trefoil ranks %r "
            "differ from the known table %r" % (got, KNOWN_TREFOIL_RANKS))


def export(req: ExportRequest, backend) -> Path:
    raw = backend.compute(req.knot, req.include_complex)
    data = translate(req.knot, raw, req.include_complex)
    out = Path(req.out)
    out.write_text(serialize(data), encoding="utf-8")
    return out
