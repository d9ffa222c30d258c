"""Factorization of rank polynomials, exact over the integers.

Two layers live here.  The lower one splits a canonical two-variable
polynomial into irreducible canonical factors: the input is mapped to one
variable by the substitution t -> x, s -> x^D with D = 2*deg_t + 1, the
image is factored over Z, and sub-multisets of the image factors are
recombined and certified by exact two-variable trial division.  The upper
layer enumerates the ways of grouping those irreducible factors into parts
that each admit a symmetric placement, which is what the composite-knot
obstructions consume.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from . import intpoly
from .laurent import (
    BivariateLaurent,
    CanonicalForm,
    LaurentError,
    MonomialUnit,
    canonicalize,
    symmetric_placement,
)


class InvalidInputError(LaurentError):
    """Raised when a polynomial cannot come from the intended rank data."""


# ---------------------------------------------------------------------------
# exact division of polynomial term dicts (min exponents 0 on both sides)
# ---------------------------------------------------------------------------

def _divide_univariate(num, den):
    """Exact division of s-polynomials given as {exponent: coeff} dicts."""
    num = dict(num)
    den_deg = max(den)
    den_lc = den[den_deg]
    quo = {}
    while num:
        d = max(num)
        if d < den_deg:
            return None
        c = num[d]
        if c % den_lc:
            return None
        q = c // den_lc
        quo[d - den_deg] = q
        for e, dc in den.items():
            k = d - den_deg + e
            v = num.get(k, 0) - q * dc
            if v:
                num[k] = v
            else:
                num.pop(k, None)
    return quo


def _divide_terms(num, den):
    """Exact division of {(i, j): coeff} polynomial dicts, or None.

    Runs as division in t with coefficients in Z[s]; every per-step
    coefficient division must itself be exact."""
    num = dict(num)
    den_i = max(i for i, _ in den)
    den_lead = {j: c for (i, j), c in den.items() if i == den_i}
    quo = {}
    while num:
        top = max(i for i, _ in num)
        if top < den_i:
            return None
        lead = {j: c for (i, j), c in num.items() if i == top}
        q = _divide_univariate(lead, den_lead)
        if q is None:
            return None
        shift = top - den_i
        for jq, cq in q.items():
            quo[(shift, jq)] = cq
            for (i, j), c in den.items():
                key = (i + shift, j + jq)
                v = num.get(key, 0) - cq * c
                if v:
                    num[key] = v
                else:
                    num.pop(key, None)
    return quo


def divide_exact(a: BivariateLaurent, b: BivariateLaurent):
    """Quotient a/b in the Laurent ring when exact, else None."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return BivariateLaurent.zero()
    na = a.shift(-a.i_min, -a.j_min)
    nb = b.shift(-b.i_min, -b.j_min)
    quo = _divide_terms(na.terms, nb.terms)
    if quo is None:
        return None
    q = BivariateLaurent(quo)
    return q.shift(a.i_min - b.i_min, a.j_min - b.j_min)


# ---------------------------------------------------------------------------
# irreducible factorization
# ---------------------------------------------------------------------------

def _factor_key(cf: CanonicalForm):
    poly = cf.poly
    return (poly.i_max + poly.j_max, tuple(sorted(poly.terms.items())))


@dataclass(frozen=True)
class IrreducibleFactorization:
    """unit * prod(factor^multiplicity) over the canonical factors."""

    unit: MonomialUnit
    factors: tuple

    def reconstruct(self) -> BivariateLaurent:
        acc = BivariateLaurent.one()
        for cf, mult in self.factors:
            acc = acc * cf.poly ** mult
        return self.unit.apply(acc)

    def factor_count(self) -> int:
        return sum(m for _, m in self.factors)


def _kronecker_image(terms, width):
    top = max(width * j + i for i, j in terms)
    out = [0] * (top + 1)
    for (i, j), c in terms.items():
        out[width * j + i] = c
    return out


def _decode(coeffs, width):
    return {(e % width, e // width): c for e, c in enumerate(coeffs) if c}


_X_ITEM = (0, 1)


def factor_canonical(canonical: CanonicalForm) -> IrreducibleFactorization:
    """Split a canonical polynomial into irreducible canonical factors.

    The returned unit is always the identity: canonical factors multiply to
    a canonical polynomial, so nothing is left over.  Inputs whose
    coefficients share an integer factor cannot arise from rank data and
    are rejected."""
    poly = canonical.poly
    terms = poly.terms
    shared = 0
    for c in terms.values():
        shared = gcd(shared, c)
    if shared != 1:
        raise InvalidInputError(
            "coefficients share the factor %d; not a rank polynomial" % shared)

    identity = MonomialUnit(1, 0, 0)
    if poly == BivariateLaurent.one():
        return IrreducibleFactorization(identity, ())

    width = 2 * poly.i_max + 1
    image = _kronecker_image(terms, width)
    _, univariate = intpoly.factor_zz(image)
    multiset = []
    for u, mult in univariate:
        multiset.extend([tuple(u)] * mult)
    multiset.sort()

    remainder = terms
    found = {}
    size = 1
    while 2 * size <= len(multiset):
        progressed = False
        seen = set()
        rem_i = max(i for i, _ in remainder)
        rem_j = max(j for _, j in remainder)
        for combo in combinations(range(len(multiset)), size):
            sig = tuple(sorted(multiset[k] for k in combo))
            if sig in seen:
                continue
            seen.add(sig)
            prod = [1]
            for item in sig:
                prod = intpoly.mul(prod, list(item))
            decoded = _decode(prod, width)
            i_lo = min(i for i, _ in decoded)
            i_hi = max(i for i, _ in decoded)
            j_lo = min(j for _, j in decoded)
            j_hi = max(j for _, j in decoded)
            if i_hi - i_lo > rem_i or j_hi - j_lo > rem_j:
                continue
            cand, unit = canonicalize(BivariateLaurent(decoded))
            if cand.poly == BivariateLaurent.one():
                continue
            mult = 0
            cand_terms = cand.poly.terms
            while True:
                quo = _divide_terms(remainder, cand_terms)
                if quo is None:
                    break
                remainder = quo
                mult += 1
            if mult == 0:
                continue
            found[cand] = found.get(cand, 0) + mult
            # the combo's product is sign * x^(borrowed) * image(factor);
            # only image(factor)'s own items leave the pool
            borrowed = unit.i_shift + width * unit.j_shift
            removal = {}
            for item in sig:
                removal[item] = removal.get(item, 0) + mult
            if borrowed:
                removal[_X_ITEM] -= borrowed * mult
            rebuilt = []
            counts = dict(removal)
            for item in multiset:
                if counts.get(item, 0) > 0:
                    counts[item] -= 1
                else:
                    rebuilt.append(item)
            if any(v > 0 for v in counts.values()):
                raise InvalidInputError("factor bookkeeping desynchronized")
            multiset = rebuilt
            progressed = True
            break
        if not progressed:
            size += 1

    if remainder != {(0, 0): 1}:
        last = CanonicalForm(BivariateLaurent(remainder))
        found[last] = found.get(last, 0) + 1
    factors = tuple(sorted(found.items(), key=lambda fm: _factor_key(fm[0])))
    return IrreducibleFactorization(identity, factors)


def factor_laurent(poly: BivariateLaurent) -> IrreducibleFactorization:
    """Factor any nonzero Laurent polynomial; the unit soaks up the
    monomial and sign left over after canonicalizing."""
    canonical, unit = canonicalize(poly)
    base = factor_canonical(canonical)
    return IrreducibleFactorization(unit, base.factors)


# ---------------------------------------------------------------------------
# symmetric factorizations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymmetricPart:
    """One symmetric tensor-style part: canonical shape plus its placement."""

    canonical: CanonicalForm
    placement: int
    constituents: tuple

    def placed(self) -> BivariateLaurent:
        return self.canonical.poly.shift(self.placement, 0)


@dataclass(frozen=True)
class SymmetricFactorization:
    parts: tuple
    residual_unit: MonomialUnit

    def laurent_parts(self) -> tuple:
        placed = [p.placed() for p in self.parts]
        placed[-1] = self.residual_unit.apply(placed[-1])
        return tuple(placed)

    def reconstruct(self) -> BivariateLaurent:
        acc = BivariateLaurent.one()
        for piece in self.laurent_parts():
            acc = acc * piece
        return acc


def _multiset_partitions(items):
    """All partitions of a sorted tuple into unordered groups, no repeats."""
    if not items:
        return {()}
    head, rest = items[0], items[1:]
    out = set()
    for sub in _multiset_partitions(rest):
        for k, group in enumerate(sub):
            merged = sub[:k] + ((head,) + group,) + sub[k + 1 :]
            out.add(tuple(sorted(merged)))
        out.add(tuple(sorted(sub + ((head,),))))
    return out


class _FactorPool:
    """Multiset of irreducible canonical factors, addressed by sort key.

    Keys are the (degree, terms) tuples from _factor_key, so groups of keys
    are hashable and ordered; the resolver maps a key back to its factor."""

    def __init__(self, factorization: IrreducibleFactorization):
        self.resolve = {}
        keys = []
        for cf, mult in factorization.factors:
            key = _factor_key(cf)
            self.resolve[key] = cf
            keys.extend([key] * mult)
        self.keys = tuple(sorted(keys))
        self._placement_cache = {}

    def group_product(self, group) -> BivariateLaurent:
        acc = BivariateLaurent.one()
        for key in group:
            acc = acc * self.resolve[key].poly
        return acc

    def group_placement(self, group):
        if group not in self._placement_cache:
            shape = CanonicalForm(self.group_product(group))
            self._placement_cache[group] = symmetric_placement(shape)
        return self._placement_cache[group]

    def splits_symmetrically(self, group) -> bool:
        if len(group) < 2:
            return False
        for r in range(1, len(group) // 2 + 1):
            tried = set()
            for picked in combinations(range(len(group)), r):
                left = tuple(sorted(group[k] for k in picked))
                if left in tried:
                    continue
                tried.add(left)
                rest = list(group)
                for k in sorted(picked, reverse=True):
                    del rest[k]
                right = tuple(sorted(rest))
                if self.group_placement(left) is not None \
                        and self.group_placement(right) is not None:
                    return True
        return False


def is_symmetrically_irreducible(omega: BivariateLaurent) -> bool:
    """True when no product decomposition into two symmetric pieces exists.

    Requires a symmetric, non-unit input; anything else is a caller bug."""
    if omega.is_zero() or omega.is_unit():
        raise LaurentError("symmetric irreducibility needs a non-unit input")
    if not omega.is_symmetric():
        raise LaurentError("input is not symmetric under the involution")
    canonical, _ = canonicalize(omega)
    pool = _FactorPool(factor_canonical(canonical))
    return not pool.splits_symmetrically(pool.keys)


def maximal_symmetric_factorizations(omega: BivariateLaurent) -> tuple:
    """Every way of writing the input as a product of two or more symmetric
    non-unit pieces, none of which splits symmetrically any further.

    Pieces are reported as canonical shapes with their forced t-placement;
    the residual sign and s-power are carried separately so that
    reconstruct() returns the input exactly."""
    if omega.is_zero():
        raise LaurentError("cannot decompose the zero polynomial")
    if not omega.is_symmetric():
        raise LaurentError("input is not symmetric under the involution")
    canonical, unit = canonicalize(omega)
    if canonical.poly == BivariateLaurent.one():
        return ()
    pool = _FactorPool(factor_canonical(canonical))
    if len(pool.keys) < 2:
        return ()

    results = []
    for partition in sorted(_multiset_partitions(pool.keys)):
        if len(partition) < 2:
            continue
        placements = []
        ok = True
        for group in partition:
            beta = pool.group_placement(group)
            if beta is None or pool.splits_symmetrically(group):
                ok = False
                break
            placements.append(beta)
        if not ok:
            continue
        if sum(placements) != unit.i_shift:
            raise LaurentError("placement bookkeeping desynchronized")
        parts = []
        for group, beta in zip(partition, placements):
            grouped = {}
            for key in group:
                grouped[key] = grouped.get(key, 0) + 1
            parts.append(SymmetricPart(
                canonical=CanonicalForm(pool.group_product(group)),
                placement=beta,
                constituents=tuple(
                    (pool.resolve[key], mult)
                    for key, mult in sorted(grouped.items())),
            ))
        parts.sort(key=lambda p: (_factor_key(p.canonical), p.placement))
        results.append(SymmetricFactorization(
            parts=tuple(parts),
            residual_unit=MonomialUnit(unit.sign, 0, unit.j_shift),
        ))
    results.sort(key=lambda f: (
        len(f.parts), tuple(_factor_key(p.canonical) for p in f.parts)))
    return tuple(results)


# ---------------------------------------------------------------------------
# known low-complexity knots, keyed by (canonical shape, placement)
# ---------------------------------------------------------------------------

def _known(terms, placement, *names):
    return (CanonicalForm(BivariateLaurent(terms)), placement, names)


_KNOWN_CLASSES = (
    _known({(2, 2): 1, (1, 1): 1, (0, 0): 1}, -1, "T(2,3)", "-T(2,3)"),
    _known({(2, 2): 1, (1, 1): 3, (0, 0): 1}, -1, "4_1"),
    _known({(4, 4): 1, (3, 3): 1, (2, 2): 1, (1, 1): 1, (0, 0): 1}, -2,
           "T(2,5)", "-T(2,5)"),
)

KNOWN_KNOT_NAMES = tuple(sorted(
    name for _, _, names in _KNOWN_CLASSES for name in names))


def known_class_names(canonical: CanonicalForm, placement: int) -> tuple:
    """Names of cataloged knots whose rank data has this exact shape.

    Mirror pairs share a shape, so a match can list several knots; an empty
    result means the shape is not in the catalog."""
    for shape, beta, names in _KNOWN_CLASSES:
        if shape == canonical and beta == placement:
            return tuple(sorted(names))
    return ()


def known_knot_matches(factorization: SymmetricFactorization) -> tuple:
    """Catalog lookup for every part: ((part index, names), ...)."""
    return tuple(
        (k, known_class_names(part.canonical, part.placement))
        for k, part in enumerate(factorization.parts))
