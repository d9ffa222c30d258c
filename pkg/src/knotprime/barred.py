"""Filtered chain complexes over the two-element field.

A complex carries a Maslov grading (the differential drops it by one) and an
Alexander filtration (the differential never raises it).  Reduction splits a
valid knot-like complex into one free generator plus two-step bars; the
filtration level of the free generator is the tau invariant.  An independent
barcode computation from homology rank functions is kept alongside as an
oracle, and tensor products implement connected sums at the chain level.

Everything is exact GF(2) linear algebra on bit-packed integer columns.
"""

from __future__ import annotations

from dataclasses import dataclass


class ComplexError(ValueError):
    """Structurally broken or non-knot-like chain complex data."""


@dataclass(frozen=True)
class Generator:
    id: str
    maslov: int
    alexander: int


class FilteredComplex:
    """Immutable generator list plus boundary map.

    Generators are kept sorted by (alexander, maslov, id) so every
    downstream computation is deterministic.  Construction checks ids and
    boundary references only; semantic checks live in validate()."""

    __slots__ = ("generators", "boundary")

    def __init__(self, generators, boundary):
        gens = tuple(sorted(
            generators, key=lambda g: (g.alexander, g.maslov, g.id)))
        ids = [g.id for g in gens]
        if len(set(ids)) != len(ids):
            raise ComplexError("duplicate generator ids")
        known = set(ids)
        clean = {}
        for src, targets in boundary.items():
            if src not in known:
                raise ComplexError("boundary source %r is not a generator" % src)
            targets = frozenset(targets)
            for t in targets:
                if t not in known:
                    raise ComplexError(
                        "boundary target %r of %r is not a generator" % (t, src))
            if targets:
                clean[src] = targets
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "boundary", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FilteredComplex is immutable")

    def __eq__(self, other):
        if not isinstance(other, FilteredComplex):
            return NotImplemented
        return (self.generators == other.generators
                and self.boundary == other.boundary)

    def __len__(self):
        return len(self.generators)

    def arrows(self):
        for src, targets in sorted(self.boundary.items()):
            for t in sorted(targets):
                yield src, t


@dataclass(frozen=True)
class Bar:
    top_filtration: int
    bottom_filtration: int
    bottom_grading: int


@dataclass(frozen=True)
class BarComplex:
    tau_filtration: int
    bars: tuple

    def __post_init__(self):
        ordered = tuple(sorted(
            self.bars,
            key=lambda b: (b.bottom_filtration, b.top_filtration,
                           b.bottom_grading)))
        object.__setattr__(self, "bars", ordered)
        for bar in ordered:
            if bar.bottom_filtration >= bar.top_filtration:
                raise ComplexError(
                    "bar endpoints out of order: %r" % (bar,))


@dataclass(frozen=True)
class BarCounts:
    """Bar census: total dimension plus even/odd bar counts.

    Knot complexes satisfy delta = 1 + 2*(b_even + b_odd); inputs from
    hypothetical-count reasoning may not, so the relation is exposed as
    is_consistent() rather than enforced here."""

    delta: int
    b_even: int
    b_odd: int

    def is_consistent(self) -> bool:
        return (self.delta == 1 + 2 * (self.b_even + self.b_odd)
                and self.delta >= 1 and self.b_even >= 0 and self.b_odd >= 0)


# ---------------------------------------------------------------------------
# GF(2) helpers on bit-packed vectors
# ---------------------------------------------------------------------------

def _rank(vectors):
    basis = []
    rank = 0
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
            rank += 1
    return rank


def _echelon(vectors):
    basis = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def _kernel_basis(vectors):
    """Kernel of the linear map sending basis vector k to vectors[k]."""
    rows = []  # (image part, tracking part)
    for k, v in enumerate(vectors):
        rows.append((v, 1 << k))
    reduced = []
    kernel = []
    for img, track in rows:
        for bimg, btrack in reduced:
            if img == 0:
                break
            top = img.bit_length()
            if bimg.bit_length() == top:
                img ^= bimg
                track ^= btrack
        if img == 0:
            kernel.append(track)
        else:
            reduced.append((img, track))
            reduced.sort(key=lambda r: -r[0])
    return kernel


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate(c: FilteredComplex):
    """All semantic violations, as human-readable strings; empty means ok."""
    violations = _structural_violations(c)
    if not violations:
        idx = {g.id: k for k, g in enumerate(c.generators)}
        violations.extend(_knot_likeness(c, idx))
    return violations


def _homology_dims(c: FilteredComplex, idx):
    """Unfiltered homology dimension per Maslov grading."""
    by_grading = {}
    for g in c.generators:
        by_grading.setdefault(g.maslov, []).append(g)
    dims = {}
    for j, gens in by_grading.items():
        cols = []
        for g in gens:
            v = 0
            for t in c.boundary.get(g.id, ()):
                v |= 1 << idx[t]
            cols.append(v)
        rank_out = _rank(cols)
        above = by_grading.get(j + 1, [])
        cols_in = []
        for g in above:
            v = 0
            for t in c.boundary.get(g.id, ()):
                v |= 1 << idx[t]
            cols_in.append(v)
        rank_in = _rank(cols_in)
        dim = len(gens) - rank_out - rank_in
        if dim:
            dims[j] = dim
    return dims


def _knot_likeness(c, idx):
    dims = _homology_dims(c, idx)
    if dims != {0: 1}:
        return ["homology is %r per grading; a knot complex has dimension 1 "
                "in grading 0" % (dims,)]
    return []


def _structural_violations(c):
    idx = {g.id: k for k, g in enumerate(c.generators)}
    info = {g.id: g for g in c.generators}
    violations = []
    cols = {g.id: 0 for g in c.generators}
    for src, targets in c.boundary.items():
        for t in targets:
            cols[src] |= 1 << idx[t]
            if info[t].maslov != info[src].maslov - 1:
                violations.append(
                    "grading step is not -1 along %s -> %s" % (src, t))
            if info[t].alexander > info[src].alexander:
                violations.append(
                    "filtration increases along %s -> %s" % (src, t))
    for g in c.generators:
        dd = 0
        for t in c.boundary.get(g.id, ()):
            dd ^= cols[t]
        if dd:
            violations.append("boundary squared is nonzero at %s" % g.id)
    return violations


def _require_valid(c):
    violations = validate(c)
    if violations:
        raise ComplexError("; ".join(violations))


# ---------------------------------------------------------------------------
# reduction to the bar normal form
# ---------------------------------------------------------------------------

def split_bars(c: FilteredComplex):
    """Gaussian elimination over GF(2) in filtration order.

    The source is the alive generator of least filtration with nonzero
    boundary, the pivot its highest-filtration target.  A pivot at strictly
    lower filtration records a bar; an equal-filtration pair cancels without
    trace.  Returns (surviving free generators, bars); works on any
    structurally valid complex, knot-like or not."""
    violations = _structural_violations(c)
    if violations:
        raise ComplexError("; ".join(violations))
    gens = c.generators
    idx = {g.id: k for k, g in enumerate(gens)}
    cols = [0] * len(gens)
    for src, targets in c.boundary.items():
        for t in targets:
            cols[idx[src]] |= 1 << idx[t]
    alive = list(range(len(gens)))
    bars = []
    while True:
        x = next((k for k in alive if cols[k]), None)
        if x is None:
            break
        y = cols[x].bit_length() - 1
        if gens[y].alexander < gens[x].alexander:
            bars.append(Bar(
                top_filtration=gens[x].alexander,
                bottom_filtration=gens[y].alexander,
                bottom_grading=gens[y].maslov,
            ))
        mask_y = 1 << y
        strike = ~(mask_y | (1 << x))
        pivot_col = cols[x]
        for z in alive:
            if z != x and cols[z] & mask_y:
                cols[z] ^= pivot_col
            cols[z] &= strike
        cols[x] = 0
        cols[y] = 0
        alive.remove(x)
        alive.remove(y)
    free = tuple(gens[k] for k in alive)
    return free, tuple(bars)


def reduce_to_bars(c: FilteredComplex) -> BarComplex:
    """The bar normal form of a valid knot-like complex."""
    _require_valid(c)
    free, bars = split_bars(c)
    if len(free) != 1:
        raise ComplexError("reduction left %d free generators" % len(free))
    if free[0].maslov != 0:
        raise ComplexError("free generator has grading %d" % free[0].maslov)
    return BarComplex(tau_filtration=free[0].alexander, bars=bars)


def reduce(c: FilteredComplex) -> BarComplex:
    return reduce_to_bars(c)


# ---------------------------------------------------------------------------
# independent barcode from homology rank functions
# ---------------------------------------------------------------------------

def barcode_via_ranks(c: FilteredComplex) -> BarComplex:
    """Same BarComplex as reduce, derived from the ranks of the maps
    induced by sublevel inclusions, by inclusion-exclusion.

    Shares no code path with the elimination; exists as an oracle."""
    _require_valid(c)
    gens = c.generators
    idx = {g.id: k for k, g in enumerate(gens)}
    levels = sorted({g.alexander for g in gens})
    pos = {lvl: p for p, lvl in enumerate(levels)}
    m = len(levels)

    by_grading = {}
    for g in gens:
        by_grading.setdefault(g.maslov, []).append(g)

    def cycles_at(j, p):
        """Echelon basis of cycles of grading j supported in levels <= p."""
        sub = [g for g in by_grading.get(j, []) if pos[g.alexander] <= p]
        cols = []
        for g in sub:
            v = 0
            for t in c.boundary.get(g.id, ()):
                v |= 1 << idx[t]
            cols.append(v)
        kernel_tracks = _kernel_basis(cols)
        out = []
        for track in kernel_tracks:
            v = 0
            k = 0
            while track:
                if track & 1:
                    v |= 1 << idx[sub[k].id]
                track >>= 1
                k += 1
            out.append(v)
        return _echelon(out)

    def boundaries_at(j, p):
        """Echelon basis of grading-j boundaries from sources in levels <= p."""
        sub = [g for g in by_grading.get(j + 1, []) if pos[g.alexander] <= p]
        vecs = []
        for g in sub:
            v = 0
            for t in c.boundary.get(g.id, ()):
                v |= 1 << idx[t]
            vecs.append(v)
        return _echelon(vecs)

    def rank_map(j, p, q):
        """Rank of H_j(levels <= p) -> H_j(levels <= q), p <= q."""
        if p < 0:
            return 0
        z = cycles_at(j, p)
        b = boundaries_at(j, q)
        joint = _rank(z + b)
        meet = len(z) + len(b) - joint
        return len(z) - meet

    bars = []
    tau = None
    for j in sorted(by_grading):
        table = {}

        def r(p, q):
            if (p, q) not in table:
                table[(p, q)] = rank_map(j, p, q)
            return table[(p, q)]

        for q in range(m):
            for p in range(q):
                born = r(p, q - 1) - r(p - 1, q - 1)
                still = r(p, q) - r(p - 1, q)
                for _ in range(born - still):
                    bars.append(Bar(
                        top_filtration=levels[q],
                        bottom_filtration=levels[p],
                        bottom_grading=j,
                    ))
        for p in range(m):
            essential = r(p, m - 1) - r(p - 1, m - 1)
            if essential:
                if j != 0 or essential != 1 or tau is not None:
                    raise ComplexError("rank oracle found unexpected homology")
                tau = levels[p]
    if tau is None:
        raise ComplexError("rank oracle found no essential class")
    return BarComplex(tau_filtration=tau, bars=tuple(bars))


# ---------------------------------------------------------------------------
# tensor products and the graded rank table
# ---------------------------------------------------------------------------

def tensor(c1: FilteredComplex, c2: FilteredComplex) -> FilteredComplex:
    """Chain-level connected sum: gradings and filtrations add, and the
    boundary follows the Leibniz rule over GF(2)."""
    generators = []
    for g1 in c1.generators:
        for g2 in c2.generators:
            generators.append(Generator(
                id=g1.id + "|" + g2.id,
                maslov=g1.maslov + g2.maslov,
                alexander=g1.alexander + g2.alexander,
            ))
    if len({g.id for g in generators}) != len(generators):
        raise ComplexError("tensor id collision; rename generators")
    boundary = {}
    for g1 in c1.generators:
        d1 = c1.boundary.get(g1.id, frozenset())
        for g2 in c2.generators:
            d2 = c2.boundary.get(g2.id, frozenset())
            targets = {t + "|" + g2.id for t in d1}
            targets.update(g1.id + "|" + t for t in d2)
            if targets:
                boundary[g1.id + "|" + g2.id] = targets
    return FilteredComplex(generators, boundary)


def graded_ranks(c: FilteredComplex):
    """Homology dimensions of the associated graded complex, as a map
    (alexander, maslov) -> dimension.

    The graded differential keeps only filtration-preserving arrows."""
    by_level = {}
    for g in c.generators:
        by_level.setdefault(g.alexander, []).append(g)
    out = {}
    for level, gens in by_level.items():
        idx = {g.id: k for k, g in enumerate(gens)}
        by_grading = {}
        for g in gens:
            by_grading.setdefault(g.maslov, []).append(g)

        def level_col(g):
            v = 0
            for t in c.boundary.get(g.id, ()):
                if t in idx:
                    v |= 1 << idx[t]
            return v

        for j, sub in by_grading.items():
            rank_out = _rank([level_col(g) for g in sub])
            rank_in = _rank([level_col(g) for g in by_grading.get(j + 1, [])])
            dim = len(sub) - rank_out - rank_in
            if dim:
                out[(level, j)] = dim
    return out


def mirror(c: FilteredComplex) -> FilteredComplex:
    """Negate gradings and filtrations and reverse every arrow."""
    generators = [
        Generator(id=g.id, maslov=-g.maslov, alexander=-g.alexander)
        for g in c.generators]
    boundary = {}
    for src, targets in c.boundary.items():
        for t in targets:
            boundary.setdefault(t, set()).add(src)
    return FilteredComplex(generators, boundary)


# ---------------------------------------------------------------------------
# counts and the factorization-counting test
# ---------------------------------------------------------------------------

def counts(b: BarComplex) -> BarCounts:
    even = sum(1 for bar in b.bars if bar.bottom_grading % 2 == 0)
    return BarCounts(
        delta=1 + 2 * len(b.bars),
        b_even=even,
        b_odd=len(b.bars) - even,
    )


def predict_sum_counts(a: BarCounts, b: BarCounts) -> BarCounts:
    """Counts of a chain-level connected sum, straight from the closed
    formulas; exact because delta - 1 is always even."""
    for arg in (a, b):
        if not arg.is_consistent():
            raise ComplexError("inconsistent counts: %r" % (arg,))
    cross = (a.delta - 1) * (b.delta - 1) // 4
    return BarCounts(
        delta=a.delta * b.delta,
        b_even=a.b_even + b.b_even + cross,
        b_odd=a.b_odd + b.b_odd + cross,
    )


PRIME = "PRIME"
INCONCLUSIVE = "INCONCLUSIVE"


def corollary_test(b: BarCounts) -> str:
    """PRIME when no factorization delta = d1*d2 (2 <= d1 <= d2) satisfies
    (d1-1)(d2-1) <= 4*min(b_even, b_odd); INCONCLUSIVE otherwise.

    Accepts counts that break the knot-complex relation so hypothetical
    censuses can be tested too."""
    budget = 4 * min(b.b_even, b.b_odd)
    d1 = 2
    while d1 * d1 <= b.delta:
        if b.delta % d1 == 0:
            d2 = b.delta // d1
            if (d1 - 1) * (d2 - 1) <= budget:
                return INCONCLUSIVE
        d1 += 1
    return PRIME
