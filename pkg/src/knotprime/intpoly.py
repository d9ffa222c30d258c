"""Exact factorization of univariate integer polynomials.

Polynomials are dense little-endian coefficient lists of Python ints; [] is
zero.  The factoring pipeline is the classical one:

  1. strip content and powers of x,
  2. split off the squarefree radical f / gcd(f, f') (modular gcd + CRT),
  3. factor the radical modulo a small odd prime p chosen so the image
     stays squarefree and the leading coefficient survives,
  4. Hensel-lift the modular factors until the modulus clears the
     coefficient bound for true divisors,
  5. recombine subsets of lifted factors and certify each candidate by
     exact trial division over Z,
  6. read multiplicities back off by repeated division.

Everything is exact integer arithmetic end to end; the prime and the
equal-degree splitting randomness are derived deterministically from the
input, so results are reproducible.
"""

from __future__ import annotations

import random
import zlib
from itertools import combinations
from math import gcd, isqrt

import numpy as np

_SCHOOLBOOK_CUTOFF = 16


class FactorError(ArithmeticError):
    """Internal failure of the factoring machinery (should not escape)."""


# ---------------------------------------------------------------------------
# Z[x] basics
# ---------------------------------------------------------------------------

def trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n] if n != len(a) else a


def deg(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    if c == 0:
        return []
    return [x * c for x in a]


def _mul_schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def _pack(a, width):
    acc = 0
    for c in reversed(a):
        acc = (acc << width) + c
    return acc


def _unpack_signed(value, width, count):
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    full = 1 << width
    out = []
    for _ in range(count):
        d = value & mask
        if d >= half:
            d -= full
        value = (value - d) >> width
        out.append(d)
    if value:
        raise FactorError("packed multiply decode left a remainder")
    return out


def mul(a, b):
    """Product in Z[x].  Large operands go through one big-integer multiply
    (coefficients packed into fixed-width slots in balanced representation)."""
    if not a or not b:
        return []
    if min(len(a), len(b)) < _SCHOOLBOOK_CUTOFF:
        return _mul_schoolbook(a, b)
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    bound = min(len(a), len(b)) * ma * mb
    width = bound.bit_length() + 2
    prod = _pack(a, width) * _pack(b, width)
    return trim(_unpack_signed(prod, width, len(a) + len(b) - 1))


def divmod_exact(a, b):
    """Quotient of a by b when the division is exact over Z, else None."""
    a = trim(list(a))
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    if deg(a) < deg(b):
        return None
    lc = b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        head = a[k + len(b) - 1]
        if head == 0:
            continue
        if head % lc:
            return None
        c = head // lc
        q[k] = c
        for j, bc in enumerate(b):
            a[k + j] -= c * bc
    return q if not any(a[: len(b) - 1]) else None


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive_pair(a):
    """Split a as cont * prim with prim primitive and lc(prim) > 0.

    The sign rides on cont; primitive_pair([]) is (0, [])."""
    a = trim(a)
    if not a:
        return 0, []
    c = content(a)
    if a[-1] < 0:
        c = -c
    return c, [x // c for x in a]


def derivative(a):
    return trim([k * c for k, c in enumerate(a)][1:])


def valuation(a):
    for k, c in enumerate(a):
        if c:
            return k
    raise FactorError("valuation of zero polynomial")


def norm2_sq(a):
    return sum(c * c for c in a)


# ---------------------------------------------------------------------------
# GF(p), numpy int64 coefficient arrays
# ---------------------------------------------------------------------------

def _mp_trim(v):
    nz = np.nonzero(v)[0]
    return v[: nz[-1] + 1] if nz.size else v[:0]


def _mp(a, p):
    return _mp_trim(np.array(a, dtype=np.int64) % p)


def _mp_mul(a, b, p):
    if not a.size or not b.size:
        return a[:0]
    return _mp_trim(np.convolve(a, b) % p)


def _mp_divmod(num, den, p):
    if not den.size:
        raise ZeroDivisionError
    num = num % p
    dn = den.size - 1
    if num.size - 1 < dn:
        return num[:0], _mp_trim(num)
    inv = pow(int(den[-1]), -1, p)
    rem = num.copy()
    q = np.zeros(num.size - dn, dtype=np.int64)
    for k in range(q.size - 1, -1, -1):
        c = int(rem[k + dn])
        if c:
            c = c * inv % p
            q[k] = c
            rem[k : k + dn + 1] = (rem[k : k + dn + 1] - c * den) % p
    return _mp_trim(q), _mp_trim(rem[:dn] if dn else rem[:0])


def _mp_gcd(a, b, p):
    a, b = _mp_trim(a % p), _mp_trim(b % p)
    while b.size:
        a, b = b, _mp_divmod(a, b, p)[1]
    if a.size:
        a = a * pow(int(a[-1]), -1, p) % p
    return a


def _mp_mulmod(a, b, f, p):
    return _mp_divmod(_mp_mul(a, b, p), f, p)[1]


def _mp_powmod(a, e, f, p):
    result = np.array([1], dtype=np.int64)
    a = _mp_divmod(a, f, p)[1]
    while e:
        if e & 1:
            result = _mp_mulmod(result, a, f, p)
        a = _mp_mulmod(a, a, f, p)
        e >>= 1
    return result


def _mp_extgcd(g, h, p):
    """Bezout pair (s, t) with s*g + t*h == 1 mod p, for coprime g, h."""
    r0, r1 = _mp_trim(g % p), _mp_trim(h % p)
    s0, s1 = np.array([1], dtype=np.int64), np.zeros(0, dtype=np.int64)
    t0, t1 = np.zeros(0, dtype=np.int64), np.array([1], dtype=np.int64)
    while r1.size:
        q, r = _mp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _mp_trim((_pad_sub(s0, _mp_mul(q, s1, p))) % p)
        t0, t1 = t1, _mp_trim((_pad_sub(t0, _mp_mul(q, t1, p))) % p)
    if r0.size != 1:
        raise FactorError("extended gcd of non-coprime polynomials")
    inv = pow(int(r0[0]), -1, p)
    return s0 * inv % p, t0 * inv % p


def _pad_sub(a, b):
    n = max(a.size, b.size)
    out = np.zeros(n, dtype=np.int64)
    out[: a.size] = a
    out[: b.size] -= b
    return out


# ---------------------------------------------------------------------------
# gcd over Z via modular images + CRT
# ---------------------------------------------------------------------------

def _primes():
    yield 2
    yield 3
    n = 5
    step = 2
    while True:
        for q in range(3, isqrt(n) + 1, 2):
            if n % q == 0:
                break
        else:
            yield n
        n += step
        step = 6 - step


def gcd_zz(a, b):
    """Polynomial gcd in Z[x] with positive leading coefficient."""
    a, b = trim(list(a)), trim(list(b))
    if not a and not b:
        return []
    if not a or not b:
        c, prim = primitive_pair(a or b)
        return scale(prim, abs(c))
    ca, pa = primitive_pair(a)
    cb, pb = primitive_pair(b)
    cont = gcd(abs(ca), abs(cb))
    if deg(pa) == 0 or deg(pb) == 0:
        return [cont]
    return scale(_gcd_primitive(pa, pb), cont)


def _gcd_primitive(a, b):
    lcg = gcd(a[-1], b[-1])
    images = None
    modulus = None
    best_deg = None
    for count, p in enumerate(_primes()):
        if count > 1000:
            raise FactorError("modular gcd failed to stabilize")
        if p == 2 or a[-1] % p == 0 or b[-1] % p == 0:
            continue
        g = _mp_gcd(_mp(a, p), _mp(b, p), p)
        d = g.size - 1
        if d == 0:
            return [1]
        g = g * (lcg % p) % p
        if best_deg is None or d < best_deg:
            best_deg = d
            images = [int(g[k]) if k < g.size else 0 for k in range(d + 1)]
            modulus = p
        elif d == best_deg:
            inv = pow(modulus, -1, p)
            new = []
            for k in range(best_deg + 1):
                old = images[k] if k < len(images) else 0
                gc = int(g[k]) if k < g.size else 0
                delta = (gc - old) * inv % p
                new.append(old + modulus * delta)
            images = new
            modulus *= p
        else:
            continue
        candidate = [c - modulus if c > modulus // 2 else c for c in images]
        candidate = primitive_pair(candidate)[1]
        if candidate and divmod_exact(a, candidate) is not None \
                and divmod_exact(b, candidate) is not None:
            return candidate
    raise FactorError("unreachable")


# ---------------------------------------------------------------------------
# factorization mod p
# ---------------------------------------------------------------------------

def _choose_prime(f):
    """An odd prime keeping f squarefree mod p, picked to minimize the
    modular factor count over a handful of usable candidates.

    The count drives the subset search during recombination, and inputs
    rich in cyclotomic factors shatter badly at unlucky primes, so a short
    distinct-degree census per candidate pays for itself."""
    best = None
    tried = 0
    for count, p in enumerate(_primes()):
        if count > 500:
            break
        if p == 2 or f[-1] % p == 0:
            continue
        fp = _mp(f, p)
        if _mp_gcd(fp, _mp_trim(derivative_mod(fp, p)), p).size != 1:
            continue
        monic = fp * pow(int(fp[-1]), -1, p) % p
        pieces = sum((g.size - 1) // d for g, d in _ddf(monic, p))
        if best is None or pieces < best[0]:
            best = (pieces, p)
        tried += 1
        # eight factors means at most C(8,4) candidate subsets; not worth
        # censusing further primes below that
        if best[0] <= 8 or tried >= 5:
            break
    if best is None:
        raise FactorError("no usable prime found")
    return best[1]


def derivative_mod(fp, p):
    if fp.size <= 1:
        return fp[:0]
    return (fp[1:] * np.arange(1, fp.size, dtype=np.int64)) % p


def _ddf(f, p):
    """Distinct-degree split of a monic squarefree f mod p.

    Returns [(product_of_irreducibles_of_degree_d, d), ...]."""
    out = []
    x = np.array([0, 1], dtype=np.int64)
    h = x.copy()
    rem = f
    d = 0
    while rem.size - 1 >= 2 * (d + 1):
        d += 1
        h = _mp_powmod(h, p, rem, p)
        g = _mp_gcd(_pad_sub(h, x) % p, rem, p)
        if g.size > 1:
            out.append((g, d))
            rem = _mp_divmod(rem, g, p)[0]
            h = _mp_divmod(h, rem, p)[1] if rem.size > 1 else h[:0]
    if rem.size > 1:
        out.append((rem, rem.size - 1))
    return out


def _edf(f, d, p, rng):
    """Equal-degree split (Cantor-Zassenhaus, p odd) into monic irreducibles."""
    n = f.size - 1
    if n == d:
        return [f]
    e = (p ** d - 1) // 2
    while True:
        a = np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
        a = _mp_trim(a)
        if a.size <= 1:
            continue
        g = _mp_gcd(a, f, p)
        if 1 < g.size < f.size:
            pass
        else:
            b = _mp_powmod(a, e, f, p)
            g = _mp_gcd(_pad_sub(b, np.array([1], dtype=np.int64)) % p, f, p)
            if not 1 < g.size < f.size:
                continue
        rest = _mp_divmod(f, g, p)[0]
        return _edf(g, d, p, rng) + _edf(rest, d, p, rng)


def _factor_mod_p(f, p, seed):
    """Monic irreducible factors mod p of a squarefree f (any unit lc)."""
    fp = _mp(f, p)
    fp = fp * pow(int(fp[-1]), -1, p) % p
    rng = random.Random(seed)
    out = []
    for g, d in _ddf(fp, p):
        out.extend(_edf(g, d, p, rng))
    out.sort(key=lambda v: (v.size, tuple(int(c) for c in v)))
    return out


# ---------------------------------------------------------------------------
# arithmetic mod m for large m (Hensel), plain lists with entries in [0, m)
# ---------------------------------------------------------------------------

def _hm(a, m):
    return trim([c % m for c in a])


def _hm_add(a, b, m):
    return _hm(add(a, b), m)


def _hm_sub(a, b, m):
    return _hm(sub(a, b), m)


def _hm_mul(a, b, m):
    if not a or not b:
        return []
    if min(len(a), len(b)) < _SCHOOLBOOK_CUTOFF:
        return _hm(_mul_schoolbook(a, b), m)
    width = (min(len(a), len(b)) * (m - 1) * (m - 1)).bit_length() + 1
    prod = _pack(a, width) * _pack(b, width)
    mask = (1 << width) - 1
    out = []
    for _ in range(len(a) + len(b) - 1):
        out.append((prod & mask) % m)
        prod >>= width
    if prod:
        raise FactorError("packed modular multiply decode failed")
    return trim(out)


def _hm_divmod_monic(a, b, m):
    """(q, r) with a = q*b + r mod m, for monic b."""
    if not b or b[-1] != 1:
        raise FactorError("modular division needs a monic divisor")
    rem = [c % m for c in a]
    dn = deg(b)
    if deg(rem) < dn:
        return [], trim(rem)
    q = [0] * (len(rem) - dn)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + dn]
        if c:
            q[k] = c
            for j in range(dn + 1):
                rem[k + j] = (rem[k + j] - c * b[j]) % m
    return trim(q), trim(rem[:dn])


def _hm_sym(a, m):
    """Symmetric representative with coefficients in (-m/2, m/2]."""
    half = m // 2
    return trim([c - m if c > half else c for c in a])


# ---------------------------------------------------------------------------
# Hensel lifting
# ---------------------------------------------------------------------------

def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: from f = g*h (mod m) to the same shape mod m*m.

    Requires h monic and s*g + t*h = 1 (mod m); those invariants are
    maintained at the doubled modulus."""
    m2 = m * m
    e = _hm_sub(f, _hm_mul(g, h, m2), m2)
    q, r = _hm_divmod_monic(_hm_mul(s, e, m2), h, m2)
    g1 = _hm_add(g, _hm_add(_hm_mul(t, e, m2), _hm_mul(q, g, m2), m2), m2)
    h1 = _hm_add(h, r, m2)
    b = _hm_sub(_hm_add(_hm_mul(s, g1, m2), _hm_mul(t, h1, m2), m2), [1], m2)
    c, d = _hm_divmod_monic(_hm_mul(s, b, m2), h1, m2)
    s1 = _hm_sub(s, d, m2)
    t1 = _hm_sub(t, _hm_add(_hm_mul(t, b, m2), _hm_mul(c, g1, m2), m2), m2)
    return g1, h1, s1, t1


def _lift_pair(f, gbar, hbar, p, target):
    """Lift f = gbar*hbar (mod p) until the modulus reaches target."""
    s, t = _mp_extgcd(gbar, hbar, p)
    g = [int(c) for c in gbar]
    h = [int(c) for c in hbar]
    s = [int(c) for c in s]
    t = [int(c) for c in t]
    m = p
    while m < target:
        g, h, s, t = _hensel_step(m, _hm(f, m * m), g, h, s, t)
        m *= m
    return g, h, m


def _lift_tree(f, facs, p, target):
    """Hensel-lift all modular factors of f; the lc of f rides leftmost."""
    if len(facs) == 1:
        return [f]
    k = len(facs) // 2
    left, right = facs[:k], facs[k:]
    gbar = np.array([f[-1] % p], dtype=np.int64)
    for v in left:
        gbar = _mp_mul(gbar, v, p)
    hbar = np.array([1], dtype=np.int64)
    for v in right:
        hbar = _mp_mul(hbar, v, p)
    g, h, _ = _lift_pair(f, gbar, hbar, p, target)
    return _lift_tree(g, left, p, target) + _lift_tree(h, right, p, target)


def _hensel_lift(f, modular_factors, p, target):
    """Returns (pl, lifted) with f = lc(f) * prod(lifted) mod pl, lifted monic."""
    pl = p
    while pl < target:
        pl *= pl
    raw = _lift_tree(trim(list(f)), modular_factors, p, target)
    lifted = []
    for leaf in raw:
        leaf = _hm(leaf, pl)
        inv = pow(leaf[-1], -1, pl)
        lifted.append(_hm([c * inv for c in leaf], pl))
    return pl, lifted


# ---------------------------------------------------------------------------
# Zassenhaus recombination and the public entry points
# ---------------------------------------------------------------------------

def _seed_for(f):
    return zlib.crc32(repr(tuple(f)).encode())


def _factor_squarefree(f):
    """Irreducible factors (primitive, lc > 0) of a primitive squarefree f."""
    f = trim(list(f))
    if deg(f) == 1:
        return [f]
    p = _choose_prime(f)
    modular = _factor_mod_p(f, p, _seed_for(f))
    if len(modular) == 1:
        return [f]
    b = abs(f[-1])
    bound = 2 * b * (1 << deg(f)) * (isqrt(norm2_sq(f)) + 1) + 1
    pl, lifted = _hensel_lift(f, modular, p, bound)

    factors = []
    remaining = list(lifted)
    current = f
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        value0 = current[0]
        value1 = sum(current)
        lc = current[-1]
        target0 = lc * value0
        trailing = [g[0] % pl for g in remaining]
        for subset in combinations(range(len(remaining)), size):
            # scalar screen: the candidate's constant term (times the
            # content it will shed) must divide lc * f(0); costs one
            # modular product per member, no polynomial arithmetic
            v0 = lc % pl
            for idx in subset:
                v0 = v0 * trailing[idx] % pl
            if v0 > pl // 2:
                v0 -= pl
            if v0 == 0 or target0 % v0:
                continue
            cand = [lc % pl]
            for idx in subset:
                cand = _hm_mul(cand, remaining[idx], pl)
            cand = primitive_pair(_hm_sym(cand, pl))[1]
            if deg(cand) < 1:
                continue
            # cheap divisibility screens at x=0 and x=1 before the full
            # trial division; value0 is nonzero since powers of x are gone
            if cand[0] == 0 or value0 % cand[0]:
                continue
            c1 = sum(cand)
            if c1 == 0:
                if value1 != 0:
                    continue
            elif value1 % c1:
                continue
            quotient = divmod_exact(current, cand)
            if quotient is not None:
                factors.append(cand)
                current = quotient
                remaining = [v for k, v in enumerate(remaining) if k not in subset]
                hit = True
                break
        if not hit:
            size += 1
    if deg(current) > 0:
        factors.append(primitive_pair(current)[1])
    return factors


def factor_zz(a):
    """Complete factorization over Z.

    Returns (unit, [(factor, multiplicity), ...]) where unit is the signed
    integer content, each factor is primitive irreducible with positive
    leading coefficient, and unit * prod(factor^mult) reconstructs the input
    exactly.  Factors are sorted by (degree, coefficients)."""
    a = trim(list(a))
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    cont, prim = primitive_pair(a)
    pieces = []
    if deg(prim) > 0:
        v = valuation(prim)
        if v:
            pieces.append(([0, 1], v))
            prim = prim[v:]
    if deg(prim) > 0:
        d = gcd_zz(prim, derivative(prim))
        radical = prim if deg(d) == 0 else divmod_exact(prim, d)
        for q in _factor_squarefree(radical):
            mult = 0
            while True:
                quo = divmod_exact(prim, q)
                if quo is None:
                    break
                prim = quo
                mult += 1
            if mult == 0:
                raise FactorError("radical factor does not divide the input")
            pieces.append((q, mult))
        if prim != [1]:
            raise FactorError("factorization left a non-unit residue")
    pieces.sort(key=lambda fm: (deg(fm[0]), fm[0]))
    return cont, pieces
