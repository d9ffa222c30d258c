"""Shared constants and generators for the test suite."""

from __future__ import annotations

import random

from knotprime.laurent import BivariateLaurent

# Rank polynomials of the small knots used throughout, as (i, j) -> coeff
# with i the Alexander (t) exponent and j the Maslov (s) exponent.
OMEGA_TERMS = {
    "T(2,3)": {(1, 0): 1, (0, -1): 1, (-1, -2): 1},
    "-T(2,3)": {(1, 2): 1, (0, 1): 1, (-1, 0): 1},
    "T(2,5)": {(2, 0): 1, (1, -1): 1, (0, -2): 1, (-1, -3): 1, (-2, -4): 1},
    "-T(2,5)": {(2, 4): 1, (1, 3): 1, (0, 2): 1, (-1, 1): 1, (-2, 0): 1},
    "4_1": {(1, 1): 1, (0, 0): 3, (-1, -1): 1},
}

OMEGA_TEXT = {
    "T(2,3)": "t + s^-1 + s^-2*t^-1",
    "-T(2,3)": "s^2*t + s + t^-1",
    "T(2,5)": "t^2 + s^-1*t + s^-2 + s^-3*t^-1 + s^-4*t^-2",
    "-T(2,5)": "s^4*t^2 + s^3*t + s^2 + s*t^-1 + t^-2",
    "4_1": "s*t + 3 + s^-1*t^-1",
}


def omega(name):
    return BivariateLaurent(OMEGA_TERMS[name])


def random_laurent(rng: random.Random, max_terms=6, exp_bound=6, coeff_bound=5,
                   allow_zero=True):
    """A random Laurent polynomial with exponents in [-exp_bound, exp_bound]."""
    while True:
        n = rng.randint(0 if allow_zero else 1, max_terms)
        terms = {}
        for _ in range(n):
            i = rng.randint(-exp_bound, exp_bound)
            j = rng.randint(-exp_bound, exp_bound)
            c = rng.randint(-coeff_bound, coeff_bound)
            terms[(i, j)] = terms.get((i, j), 0) + c
        poly = BivariateLaurent(terms)
        if poly or allow_zero:
            return poly


def random_symmetric_laurent(rng: random.Random, max_orbits=4, exp_bound=4,
                             coeff_bound=4):
    """A random fixed point of the involution (i, j) -> (-i, j - 2i)."""
    terms = {}
    for _ in range(rng.randint(1, max_orbits)):
        i = rng.randint(0, exp_bound)
        j = rng.randint(-exp_bound, exp_bound)
        c = rng.randint(-coeff_bound, coeff_bound)
        if c == 0:
            continue
        terms[(i, j)] = terms.get((i, j), 0) + c
        if i != 0:
            mirror = (-i, j - 2 * i)
            terms[mirror] = terms.get(mirror, 0) + c
    return BivariateLaurent(terms)


# ---------------------------------------------------------------------------
# chain complex builders
# ---------------------------------------------------------------------------

from knotprime.barred import FilteredComplex, Generator  # noqa: E402


def unknot_complex():
    return FilteredComplex([Generator("u", 0, 0)], {})


def torus_complex(n):
    """Staircase for the (2, n) torus knot, n odd positive."""
    assert n % 2 == 1 and n >= 3
    g = (n - 1) // 2
    gens = [Generator("g%d" % k, -k, g - k) for k in range(n)]
    boundary = {"g%d" % k: {"g%d" % (k + 1)} for k in range(1, n, 2)}
    return FilteredComplex(gens, boundary)


def t23_complex():
    return FilteredComplex(
        [Generator("a", 0, 1), Generator("b", -1, 0), Generator("c", -2, -1)],
        {"b": {"c"}})


def fig8_complex():
    return FilteredComplex(
        [Generator("g1", 0, 0), Generator("g2", 1, 1), Generator("g3", 0, 0),
         Generator("g4", 0, 0), Generator("g5", -1, -1)],
        {"g2": {"g3"}, "g4": {"g5"}})


def bar_complex(top_filt, bottom_filt, bottom_grading, suffix=""):
    """A single two-step bar, not knot-like on its own."""
    top = Generator("T" + suffix, bottom_grading + 1, top_filt)
    bot = Generator("B" + suffix, bottom_grading, bottom_filt)
    return FilteredComplex([top, bot], {top.id: {bot.id}})


def random_knotlike_complex(rng: random.Random, max_pairs=4, max_changes=5,
                            span=3):
    """A knot-like complex built from planted bars and acyclic pairs,
    scrambled by random filtered changes of basis.

    Returns (complex, tau, planted bars) where the bars list keeps only the
    strict-filtration pairs (equal-filtration pairs cancel invisibly)."""
    from knotprime.barred import Bar

    tau = rng.randint(-span, span)
    gens = [Generator("f0", 0, tau)]
    boundary = {}
    planted = []
    n = 0
    for _ in range(rng.randint(0, max_pairs)):
        g = rng.randint(-span, span)
        b = rng.randint(-span, span)
        t = rng.randint(b, span)
        top = Generator("x%d" % n, g + 1, t)
        bot = Generator("y%d" % n, g, b)
        n += 1
        gens.append(top)
        gens.append(bot)
        boundary[top.id] = {bot.id}
        if t > b:
            planted.append(Bar(t, b, g))

    cols = {g.id: set(boundary.get(g.id, ())) for g in gens}
    pairs = [
        (x, z) for x in gens for z in gens
        if x.id != z.id and x.maslov == z.maslov
        and x.alexander <= z.alexander]
    for _ in range(rng.randint(0, max_changes)):
        if not pairs:
            break
        x, z = rng.choice(pairs)
        # basis change e_z -> e_z + e_x: legal since filt(x) <= filt(z)
        cols[z.id] ^= cols[x.id]
        for w in gens:
            if z.id in cols[w.id]:
                cols[w.id] ^= {x.id}
    scrambled = FilteredComplex(
        gens, {k: v for k, v in cols.items() if v})
    return scrambled, tau, planted
