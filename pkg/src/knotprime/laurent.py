"""Exact arithmetic for integer Laurent polynomials in two variables.

The variable t tracks the Alexander grading and s the Maslov grading, so a
polynomial is stored as a finite map (i, j) -> coefficient for the monomial
s^j t^i.  The rank polynomial of a knot collects the dimensions of its
bigraded knot Floer groups this way, and all the structure this package
certifies (the symmetry involution, canonical placement, factorization)
happens in this ring.

Values are immutable; every operation returns a fresh object.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class LaurentError(ValueError):
    """Raised for undefined operations, e.g. canonicalizing zero."""


class BivariateLaurent:
    """An element of Z[s, s^-1, t, t^-1] with finite support."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                i, j = key
                if not (isinstance(i, int) and isinstance(j, int)):
                    raise LaurentError(f"exponents must be integers, got {key!r}")
                if not isinstance(coeff, int):
                    raise LaurentError(f"coefficients must be integers, got {coeff!r}")
                if coeff:
                    clean[(i, j)] = coeff
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BivariateLaurent is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i, j, coeff=1):
        """coeff * s^j t^i."""
        return cls({(i, j): coeff})

    # -- inspection --------------------------------------------------

    @property
    def terms(self):
        """A copy of the support map (i, j) -> coefficient."""
        return dict(self._terms)

    def coefficient(self, i, j):
        return self._terms.get((i, j), 0)

    def is_zero(self):
        return not self._terms

    def is_unit(self):
        """True for +/- s^j t^i, the invertible elements of the Laurent ring."""
        if len(self._terms) != 1:
            return False
        (coeff,) = self._terms.values()
        return coeff in (1, -1)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def i_min(self):
        if not self._terms:
            raise LaurentError("zero polynomial has no degree")
        return min(i for i, _ in self._terms)

    @property
    def i_max(self):
        if not self._terms:
            raise LaurentError("zero polynomial has no degree")
        return max(i for i, _ in self._terms)

    @property
    def j_min(self):
        if not self._terms:
            raise LaurentError("zero polynomial has no degree")
        return min(j for _, j in self._terms)

    @property
    def j_max(self):
        if not self._terms:
            raise LaurentError("zero polynomial has no degree")
        return max(j for _, j in self._terms)

    def __eq__(self, other):
        if isinstance(other, BivariateLaurent):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            out[key] = out.get(key, 0) + coeff
        return BivariateLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariateLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return BivariateLaurent({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BivariateLaurent):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariateLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise LaurentError("only non-negative integer powers are defined")
        result = BivariateLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, di, dj):
        """Multiply by s^dj t^di."""
        return BivariateLaurent({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    # -- the grading involution ---------------------------------------

    def sigma(self):
        """Apply the ring involution s -> s, t -> s^-2 t^-1.

        On coefficients this is the index map (i, j) -> (-i, j - 2i); a rank
        polynomial of a genuine knot is a fixed point.
        """
        return BivariateLaurent({(-i, j - 2 * i): c for (i, j), c in self._terms.items()})

    def is_symmetric(self):
        """True when every coefficient satisfies c[i, j] == c[-i, j - 2i]."""
        for (i, j), c in self._terms.items():
            if self._terms.get((-i, j - 2 * i), 0) != c:
                return False
        return True

    # -- specializations ----------------------------------------------

    def eval_units(self, s_sign, t_sign):
        """Evaluate at s, t in {+1, -1} (the only unit evaluations)."""
        if s_sign not in (1, -1) or t_sign not in (1, -1):
            raise LaurentError("unit evaluation needs s, t in {1, -1}")
        total = 0
        for (i, j), c in self._terms.items():
            val = c
            if s_sign == -1 and j % 2:
                val = -val
            if t_sign == -1 and i % 2:
                val = -val
            total += val
        return total

    def specialize_alexander(self):
        """Substitute s = -1, collapsing to a one-variable Laurent map i -> coeff.

        Up to a unit this recovers the Alexander polynomial of the knot the
        ranks came from.
        """
        out = {}
        for (i, j), c in self._terms.items():
            val = -c if j % 2 else c
            acc = out.get(i, 0) + val
            if acc:
                out[i] = acc
            elif i in out:
                del out[i]
        return out

    # -- text form ----------------------------------------------------

    def to_text(self):
        """Render in the stable textual form, e.g. ``t + s^-1 + s^-2*t^-1``.

        Terms are sorted by (i desc, j desc); zero exponents are suppressed.
        """
        if not self._terms:
            return "0"
        chunks = []
        for idx, (i, j) in enumerate(sorted(self._terms, key=lambda ij: (-ij[0], -ij[1]))):
            coeff = self._terms[(i, j)]
            body = []
            if j != 0:
                body.append("s" if j == 1 else f"s^{j}")
            if i != 0:
                body.append("t" if i == 1 else f"t^{i}")
            mag = abs(coeff)
            if mag != 1 or not body:
                body.insert(0, str(mag))
            term = "*".join(body)
            if idx == 0:
                chunks.append(term if coeff > 0 else f"-{term}")
            else:
                chunks.append(f"+ {term}" if coeff > 0 else f"- {term}")
        return " ".join(chunks)

    @classmethod
    def parse(cls, text):
        """Inverse of :meth:`to_text`; accepts any sum of ``c*s^j*t^i`` terms."""
        return _parse(text)

    def __repr__(self):
        return f"BivariateLaurent({self.to_text()})"

    def __str__(self):
        return self.to_text()


def _coerce(value):
    if isinstance(value, BivariateLaurent):
        return value
    if isinstance(value, int):
        return BivariateLaurent({(0, 0): value})
    return None


_TERM_PIECE = re.compile(r"^(?:(\d+)|([st])(?:\^(-?\d+))?)$")


def _parse(text):
    src = text.strip()
    if not src:
        raise LaurentError("empty polynomial text")
    if src == "0":
        return BivariateLaurent.zero()
    # Protect exponent minus signs before splitting the sum.
    guarded = src.replace("^-", "^\x00")
    pieces = re.split(r"([+-])", guarded)
    terms = {}
    sign = 1
    expect_term = True
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            continue
        if piece == "+":
            if expect_term:
                raise LaurentError(f"misplaced '+' in {text!r}")
            expect_term = True
            sign = 1
            continue
        if piece == "-":
            # May be a unary minus on the first term.
            sign = -sign if expect_term else -1
            expect_term = True
            continue
        if not expect_term:
            raise LaurentError(f"missing operator in {text!r}")
        coeff, i, j = 1, 0, 0
        for factor in piece.split("*"):
            factor = factor.strip().replace("\x00", "-")
            m = _TERM_PIECE.match(factor)
            if not m:
                raise LaurentError(f"cannot parse term {factor!r} in {text!r}")
            if m.group(1) is not None:
                coeff *= int(m.group(1))
            else:
                exp = int(m.group(3)) if m.group(3) is not None else 1
                if m.group(2) == "s":
                    j += exp
                else:
                    i += exp
        key = (i, j)
        terms[key] = terms.get(key, 0) + sign * coeff
        sign = 1
        expect_term = False
    if expect_term:
        raise LaurentError(f"dangling operator in {text!r}")
    return BivariateLaurent(terms)


@dataclass(frozen=True)
class MonomialUnit:
    """A unit sign * s^j_shift t^i_shift of the Laurent ring."""

    sign: int
    i_shift: int
    j_shift: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise LaurentError(f"unit sign must be +/-1, got {self.sign}")

    def apply(self, poly):
        return poly.shift(self.i_shift, self.j_shift) * self.sign

    def inverse(self):
        return MonomialUnit(self.sign, -self.i_shift, -self.j_shift)

    def to_text(self):
        return BivariateLaurent.monomial(self.i_shift, self.j_shift, self.sign).to_text()


@dataclass(frozen=True)
class CanonicalForm:
    """A polynomial normalized so min i-exponent and min j-exponent are both 0
    and the lexicographically greatest monomial has a positive coefficient."""

    poly: BivariateLaurent

    def __post_init__(self):
        p = self.poly
        if p.is_zero():
            raise LaurentError("canonical form of zero is undefined")
        if p.i_min != 0 or p.j_min != 0:
            raise LaurentError("canonical form must have minimal exponents 0")
        if p.coefficient(*max(p.terms)) <= 0:
            raise LaurentError("canonical form must have a positive leading coefficient")

    def to_text(self):
        return self.poly.to_text()


def canonicalize(poly):
    """Split ``poly`` as unit * canonical, returning (CanonicalForm, MonomialUnit).

    The unit is the monomial sign * s^j0 t^i0 carrying the minimal exponents
    and the sign of the lexicographically greatest monomial (ordered by
    (i, j)).  The decomposition is exact: unit.apply(canonical.poly) == poly.
    """
    if poly.is_zero():
        raise LaurentError("cannot canonicalize the zero polynomial")
    i0, j0 = poly.i_min, poly.j_min
    shifted = poly.shift(-i0, -j0)
    sign = 1 if shifted.coefficient(*max(shifted.terms)) > 0 else -1
    return CanonicalForm(shifted * sign), MonomialUnit(sign, i0, j0)


def symmetric_placement(canonical):
    """Return the unique t-shift beta making t^beta * canonical symmetric, or None.

    A symmetric Laurent polynomial has its i-support centered at 0, so the
    only candidate is beta = -(i_min + i_max) / 2; for a canonical form that
    is -i_max / 2.  No s-shift is involved: the symmetry condition is
    invariant under multiplication by powers of s.
    """
    poly = canonical.poly
    span = poly.i_max          # i_min == 0 for a canonical form
    if span % 2:
        return None
    beta = -(span // 2)
    return beta if poly.shift(beta, 0).is_symmetric() else None
