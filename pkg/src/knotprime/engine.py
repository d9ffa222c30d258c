"""Verdict assembly: rank tables in, primality certificates out.

A knot arrives as a table of homology ranks, optionally backed by a filtered
chain complex and by externally-computed exclusion certificates.  Three
routes can certify primality, each named by the tag it leaves in
``methods_fired``:

* ``T2``: the rank polynomial admits no factorization into two symmetric
  non-unit pieces.
* ``T3``: every maximal symmetric factorization has exactly two parts and
  contains a part whose cataloged knot class is fully excluded by
  certificates.
* ``BAR``: the bar census of the complex rules out every compatible
  factorization of the total dimension.

Knot files are UTF-8 JSON, one knot per file; ``write_knot_file`` is the
single canonical serializer so fixtures stay byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .barred import (
    ComplexError,
    FilteredComplex,
    Generator,
    counts,
    corollary_test,
    graded_ranks,
    reduce_to_bars,
    tensor,
    validate,
)
from .factor import (
    KNOWN_KNOT_NAMES,
    is_symmetrically_irreducible,
    known_knot_matches,
    maximal_symmetric_factorizations,
)
from .laurent import BivariateLaurent, LaurentError

UNKNOT = "UNKNOT"
PRIME = "PRIME"
CONDITIONALLY_PRIME = "CONDITIONALLY_PRIME"
INCONCLUSIVE = "INCONCLUSIVE"
INVALID = "INVALID"
STATUSES = (UNKNOT, PRIME, CONDITIONALLY_PRIME, INCONCLUSIVE, INVALID)

T2 = "T2"
T3 = "T3"
BAR = "BAR"
METHODS = (T2, T3, BAR)

SCHEMA_VERSION = 1


class KnotFileError(ValueError):
    """Unreadable knot data or a schema violation."""


@dataclass(frozen=True)
class KnotInput:
    name: str
    ranks: dict
    complex: FilteredComplex | None = None
    certificates: frozenset = frozenset()
    expected_verdict: str | None = None


@dataclass(frozen=True)
class Diagnostics:
    delta: int | None = None
    b_even: int | None = None
    b_odd: int | None = None
    tau: int | None = None
    l_space_pattern: bool | None = None
    factorizations: tuple = ()


@dataclass(frozen=True)
class Verdict:
    status: str
    methods_fired: tuple = ()
    required_exclusions: tuple = ()
    diagnostics: Diagnostics = field(default_factory=Diagnostics)
    warnings: tuple = ()
    messages: tuple = ()

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "status": self.status,
            "methods_fired": list(self.methods_fired),
            "required_exclusions": list(self.required_exclusions),
            "warnings": list(self.warnings),
            "messages": list(self.messages),
            "diagnostics": {
                "delta": self.diagnostics.delta,
                "b_even": self.diagnostics.b_even,
                "b_odd": self.diagnostics.b_odd,
                "tau": self.diagnostics.tau,
                "l_space_pattern": self.diagnostics.l_space_pattern,
                "factorizations": list(self.diagnostics.factorizations),
            },
        }

    @classmethod
    def from_json(cls, data) -> "Verdict":
        if not isinstance(data, dict) or data.get("schema") != SCHEMA_VERSION:
            raise KnotFileError("unsupported verdict schema")
        diag = data.get("diagnostics") or {}
        return cls(
            status=data["status"],
            methods_fired=tuple(data.get("methods_fired", ())),
            required_exclusions=tuple(data.get("required_exclusions", ())),
            diagnostics=Diagnostics(
                delta=diag.get("delta"),
                b_even=diag.get("b_even"),
                b_odd=diag.get("b_odd"),
                tau=diag.get("tau"),
                l_space_pattern=diag.get("l_space_pattern"),
                factorizations=tuple(diag.get("factorizations", ())),
            ),
            warnings=tuple(data.get("warnings", ())),
            messages=tuple(data.get("messages", ())),
        )


def build_omega(ranks) -> BivariateLaurent:
    """The rank polynomial: coefficient of s^j t^i is the dimension at
    (alexander i, maslov j).  Dimensions must be positive integers."""
    if not ranks:
        raise KnotFileError("empty rank table")
    for (i, j), dim in ranks.items():
        if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
            raise KnotFileError(
                "dimension at (%r, %r) must be a positive integer" % (i, j))
    return BivariateLaurent(dict(ranks))


# ---------------------------------------------------------------------------
# the exclusion route
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExclusionAnalysis:
    status: str
    required_exclusions: tuple
    factorizations: tuple


def theorem3_analysis(omega: BivariateLaurent,
                      certificates=frozenset()) -> ExclusionAnalysis:
    """Conservative exclusion logic over all maximal symmetric
    factorizations of a symmetric, non-unit, symmetrically-reducible input.

    Applicable only when every maximal factorization has exactly two parts.
    A factorization is blocked when some part's cataloged class is entirely
    certified absent; mirror pairs share rank data, so whole classes must be
    excluded, never single names.  PRIME needs every factorization blocked;
    if the unblocked ones all contain cataloged parts, the missing names are
    reported and the verdict is conditional; anything else is inconclusive.
    """
    certificates = frozenset(certificates)
    factorizations = maximal_symmetric_factorizations(omega)
    if not factorizations or any(len(f.parts) != 2 for f in factorizations):
        return ExclusionAnalysis(INCONCLUSIVE, (), factorizations)
    needed = set()
    for f in factorizations:
        part_classes = [names for _, names in known_knot_matches(f)]
        if any(names and certificates.issuperset(names)
               for names in part_classes):
            continue
        missing = set()
        for names in part_classes:
            missing.update(set(names) - certificates)
        if not missing:
            # no cataloged part: no certificate could ever block this one
            return ExclusionAnalysis(INCONCLUSIVE, (), factorizations)
        needed.update(missing)
    if not needed:
        return ExclusionAnalysis(PRIME, (), factorizations)
    return ExclusionAnalysis(
        CONDITIONALLY_PRIME, tuple(sorted(needed)), factorizations)


def _render_factorization(f) -> str:
    return " * ".join("(%s)" % piece.to_text() for piece in f.laurent_parts())


# ---------------------------------------------------------------------------
# the analysis pipeline
# ---------------------------------------------------------------------------

def analyze(k: KnotInput) -> Verdict:
    warnings = []
    try:
        omega = build_omega(k.ranks)
    except KnotFileError as err:
        return Verdict(INVALID, messages=(str(err),))

    rank_total = sum(k.ranks.values())
    if not omega.is_symmetric():
        return Verdict(
            INVALID,
            diagnostics=Diagnostics(delta=rank_total),
            messages=("rank table breaks the (i, j) -> (-i, j - 2i) "
                      "symmetry",))

    if omega.eval_units(1, 1) % 2 == 0:
        warnings.append("total rank %d is even" % rank_total)
    determinant_sign = omega.eval_units(-1, 1)
    if determinant_sign not in (1, -1):
        warnings.append(
            "evaluation at s = -1, t = 1 is %d, not a unit"
            % determinant_sign)
    unknown_certs = sorted(set(k.certificates) - set(KNOWN_KNOT_NAMES))
    if unknown_certs:
        warnings.append("certificates name no cataloged class: %s"
                        % ", ".join(unknown_certs))

    bar = None
    bar_counts = None
    if k.complex is not None:
        violations = validate(k.complex)
        if violations:
            return Verdict(
                INVALID,
                diagnostics=Diagnostics(delta=rank_total),
                warnings=tuple(warnings),
                messages=tuple(violations))
        if graded_ranks(k.complex) != dict(k.ranks):
            return Verdict(
                INVALID,
                diagnostics=Diagnostics(delta=rank_total),
                warnings=tuple(warnings),
                messages=("graded homology of the complex disagrees with "
                          "the rank table",))
        bar = reduce_to_bars(k.complex)
        bar_counts = counts(bar)

    def diagnostics(report=()):
        if bar_counts is None:
            return Diagnostics(delta=rank_total, factorizations=report)
        return Diagnostics(
            delta=bar_counts.delta,
            b_even=bar_counts.b_even,
            b_odd=bar_counts.b_odd,
            tau=bar.tau_filtration,
            l_space_pattern=(bar_counts.b_odd == 0 and bar_counts.delta > 1),
            factorizations=report,
        )

    if omega == BivariateLaurent.one():
        return Verdict(UNKNOT, diagnostics=diagnostics(),
                       warnings=tuple(warnings))

    status = INCONCLUSIVE
    methods = []
    required = ()
    report = ()
    try:
        if is_symmetrically_irreducible(omega):
            status = PRIME
            methods.append(T2)
            report = ("symmetrically irreducible",)
        else:
            exclusion = theorem3_analysis(omega, k.certificates)
            report = tuple(
                _render_factorization(f) for f in exclusion.factorizations)
            if exclusion.status == PRIME:
                status = PRIME
                methods.append(T3)
            elif exclusion.status == CONDITIONALLY_PRIME:
                status = CONDITIONALLY_PRIME
                required = exclusion.required_exclusions
    except LaurentError as err:
        return Verdict(
            INVALID,
            diagnostics=diagnostics(),
            warnings=tuple(warnings),
            messages=(str(err),))

    if bar_counts is not None and corollary_test(bar_counts) == PRIME:
        if status != PRIME:
            status = PRIME
            required = ()
        methods.append(BAR)

    return Verdict(
        status,
        methods_fired=tuple(methods),
        required_exclusions=required,
        diagnostics=diagnostics(report),
        warnings=tuple(warnings),
    )


def describe_verdict(v: Verdict) -> str:
    """The stable one-line rendering, e.g.
    ``PRIME via T2, BAR; δ=3 b_e=1 b_o=0 τ=1``."""
    if v.status == INVALID:
        detail = "; ".join(v.messages) or "invalid input"
        return "INVALID: %s" % detail
    line = v.status
    if v.methods_fired:
        line += " via " + ", ".join(v.methods_fired)
    if v.required_exclusions:
        line += " (exclude %s)" % ", ".join(v.required_exclusions)
    d = v.diagnostics
    if d.delta is not None:
        line += "; δ=%d" % d.delta
        if d.b_even is not None:
            line += " b_e=%d b_o=%d τ=%d" % (d.b_even, d.b_odd, d.tau)
    return line


# ---------------------------------------------------------------------------
# knot files
# ---------------------------------------------------------------------------

def _as_int(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        raise KnotFileError("%s must be an integer, got %r" % (what, value))
    return value


def knot_input_from_data(data) -> KnotInput:
    if not isinstance(data, dict):
        raise KnotFileError("knot file must hold a JSON object")
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise KnotFileError("missing knot name")
    entries = data.get("ranks")
    if not isinstance(entries, list) or not entries:
        raise KnotFileError("missing rank table")
    ranks = {}
    for entry in entries:
        if not isinstance(entry, dict) or not {
                "alexander", "maslov", "dim"} <= set(entry):
            raise KnotFileError(
                "rank entries need alexander, maslov and dim fields")
        key = (_as_int(entry["alexander"], "alexander"),
               _as_int(entry["maslov"], "maslov"))
        if key in ranks:
            raise KnotFileError("duplicate rank entry at %r" % (key,))
        ranks[key] = _as_int(entry["dim"], "dim")

    cx = None
    if data.get("complex") is not None:
        raw = data["complex"]
        if not isinstance(raw, dict):
            raise KnotFileError("complex must be an object")
        gens = []
        for g in raw.get("generators", ()):
            if not isinstance(g, dict) or not isinstance(g.get("id"), str):
                raise KnotFileError("complex generators need string ids")
            gens.append(Generator(
                id=g["id"],
                maslov=_as_int(g.get("maslov"), "generator maslov"),
                alexander=_as_int(g.get("alexander"), "generator alexander")))
        boundary = {}
        for arrow in raw.get("differentials", ()):
            if not isinstance(arrow, dict) \
                    or not isinstance(arrow.get("from"), str) \
                    or not isinstance(arrow.get("to"), str):
                raise KnotFileError("differentials need from and to ids")
            boundary.setdefault(arrow["from"], set()).add(arrow["to"])
        try:
            cx = FilteredComplex(gens, boundary)
        except ComplexError as err:
            raise KnotFileError(str(err))

    certificates = frozenset()
    if data.get("certificates") is not None:
        raw = data["certificates"]
        if not isinstance(raw, dict) \
                or not isinstance(raw.get("excluded_factors"), list) \
                or not all(isinstance(n, str)
                           for n in raw["excluded_factors"]):
            raise KnotFileError(
                "certificates must hold an excluded_factors name list")
        certificates = frozenset(raw["excluded_factors"])

    expected = data.get("expected_verdict")
    if expected is not None and expected not in STATUSES:
        raise KnotFileError("unknown expected_verdict %r" % (expected,))
    return KnotInput(name=name, ranks=ranks, complex=cx,
                     certificates=certificates, expected_verdict=expected)


def load_knot_file(path) -> KnotInput:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise KnotFileError("cannot read %s: %s" % (path, err))
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise KnotFileError("%s is not valid JSON: %s" % (path, err))
    return knot_input_from_data(data)


def knot_input_to_data(k: KnotInput) -> dict:
    data = {
        "name": k.name,
        "ranks": [
            {"alexander": i, "maslov": j, "dim": k.ranks[(i, j)]}
            for i, j in sorted(k.ranks)
        ],
    }
    if k.complex is not None:
        data["complex"] = {
            "generators": [
                {"id": g.id, "maslov": g.maslov, "alexander": g.alexander}
                for g in k.complex.generators
            ],
            "differentials": [
                {"from": src, "to": dst} for src, dst in k.complex.arrows()
            ],
        }
    if k.certificates:
        data["certificates"] = {
            "excluded_factors": sorted(k.certificates)}
    if k.expected_verdict is not None:
        data["expected_verdict"] = k.expected_verdict
    return data


def write_knot_file(k: KnotInput, path) -> None:
    payload = json.dumps(knot_input_to_data(k), indent=2, sort_keys=True)
    Path(path).write_text(payload + "\n", encoding="utf-8")


def connected_sum(k1: KnotInput, k2: KnotInput, name=None) -> KnotInput:
    """Rank table of the sum via polynomial product; complex via tensor
    when both inputs carry one.  Certificates do not transfer."""
    product = build_omega(k1.ranks) * build_omega(k2.ranks)
    cx = None
    if k1.complex is not None and k2.complex is not None:
        cx = tensor(k1.complex, k2.complex)
    return KnotInput(
        name=name or "%s # %s" % (k1.name, k2.name),
        ranks=dict(product.terms),
        complex=cx,
    )


# ---------------------------------------------------------------------------
# batches and the bundled corpus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BatchEntry:
    name: str
    verdict: Verdict
    expected: str | None = None

    def matches_expected(self):
        if self.expected is None:
            return None
        return self.verdict.status == self.expected


@dataclass(frozen=True)
class BatchSummary:
    entries: tuple

    @property
    def status_counts(self) -> dict:
        out = {status: 0 for status in STATUSES}
        for e in self.entries:
            out[e.verdict.status] += 1
        return out

    @property
    def method_counts(self) -> dict:
        out = {m: 0 for m in METHODS}
        for e in self.entries:
            for m in e.verdict.methods_fired:
                out[m] += 1
        return out

    @property
    def percent_prime(self) -> float:
        if not self.entries:
            return 0.0
        prime = sum(1 for e in self.entries if e.verdict.status == PRIME)
        return 100.0 * prime / len(self.entries)

    def lines(self):
        for e in self.entries:
            yield "%s: %s" % (e.name, describe_verdict(e.verdict))
        counted = " ".join(
            "%s=%d" % (s, n) for s, n in self.status_counts.items() if n)
        fired = " ".join(
            "%s=%d" % (m, n) for m, n in self.method_counts.items() if n)
        yield "totals: %s" % (counted or "none")
        yield "methods: %s" % (fired or "none")
        yield "certified prime: %.1f%%" % self.percent_prime


def _analyze_or_record(k: KnotInput) -> Verdict:
    try:
        return analyze(k)
    except Exception as err:  # record the failure, keep the batch alive
        return Verdict(INVALID, messages=("internal failure: %s" % err,))


def batch(inputs) -> BatchSummary:
    """Analyze many knots; entries come back sorted by name, so the
    summary is deterministic however the work is scheduled."""
    ordered = sorted(inputs, key=lambda k: k.name)
    if not ordered:
        return BatchSummary(entries=())
    with ThreadPoolExecutor(max_workers=min(8, len(ordered))) as pool:
        verdicts = list(pool.map(_analyze_or_record, ordered))
    return BatchSummary(entries=tuple(
        BatchEntry(k.name, v, k.expected_verdict)
        for k, v in zip(ordered, verdicts)))


def batch_files(paths) -> BatchSummary:
    inputs = []
    broken = []
    for path in paths:
        path = Path(path)
        try:
            inputs.append(load_knot_file(path))
        except KnotFileError as err:
            name = path.stem
            expected = None
            try:
                raw = json.loads(path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError):
                raw = {}
            if isinstance(raw, dict):
                if isinstance(raw.get("name"), str) and raw["name"]:
                    name = raw["name"]
                if raw.get("expected_verdict") in STATUSES:
                    expected = raw["expected_verdict"]
            broken.append(BatchEntry(
                name=name,
                verdict=Verdict(INVALID, messages=(str(err),)),
                expected=expected))
    entries = list(batch(inputs).entries) + broken
    entries.sort(key=lambda e: e.name)
    return BatchSummary(entries=tuple(entries))


def summary_csv(summary: BatchSummary) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["name", "status", "methods", "delta", "b_even", "b_odd", "tau"])
    for e in summary.entries:
        d = e.verdict.diagnostics

        def cell(value):
            return "" if value is None else value

        writer.writerow([
            e.name,
            e.verdict.status,
            "+".join(e.verdict.methods_fired),
            cell(d.delta),
            cell(d.b_even),
            cell(d.b_odd),
            cell(d.tau),
        ])
    return out.getvalue()


def fixtures_dir() -> Path:
    return Path(str(resources.files("knotprime").joinpath("fixtures")))


def corpus_paths():
    return sorted(fixtures_dir().glob("*.json"))
