"""Totally real field records.

Real quadratic fields are constructed from scratch: class numbers by
reduced-form cycle counting, fundamental units by continued fractions,
narrow/wide genus data from prime-discriminant splittings, and zeta(2)
values as exact rationals through generalized Bernoulli numbers.

Fields of degree 3..8 are never synthesized; they are ingested from a TSV
table and revalidated (polynomial discriminant consistency, h+ = h*2^m,
Euler-product agreement for the zeta coefficient).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import mpmath

from .arith import factor_poly_mod_p, factorize, is_prime, kronecker, primes_upto

# ---------------------------------------------------------------------------
# fundamental discriminants


def is_squarefree(n: int) -> bool:
    n = abs(n)
    return all(e == 1 for _, e in factorize(n))


def is_fundamental_discriminant(d: int) -> bool:
    if d <= 1:
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def fundamental_discriminants_upto(x: int) -> list[int]:
    return [d for d in range(5, x + 1) if is_fundamental_discriminant(d)]


# ---------------------------------------------------------------------------
# prime ideals


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime of O_k: residue characteristic, ramification/residue degrees,
    and a tag distinguishing conjugates above the same rational prime."""

    ell: int
    e: int
    f: int
    tag: int = 0

    @property
    def norm(self) -> int:
        return self.ell**self.f

    def __repr__(self) -> str:  # compact, e.g. P2(4) for the norm-4 prime
        extra = f"#{self.tag}" if self.tag else ""
        return f"P{self.ell}({self.norm}){extra}"


# ---------------------------------------------------------------------------
# continued-fraction fundamental unit


def _pell_fundamental(m: int) -> tuple[int, int, int]:
    """Smallest (x, y, s) with x^2 - m*y^2 = s, s = +-1, via the CF of sqrt(m)."""
    sm = math.isqrt(m)
    if sm * sm == m:
        raise ValueError("not a quadratic irrational")
    p_prev, p_cur = 1, sm
    q_prev, q_cur = 0, 1
    P_i, Q_i = sm, m - sm * sm
    while Q_i != 1:
        a = (sm + P_i) // Q_i
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        P_i = a * Q_i - P_i
        Q_i = (m - P_i * P_i) // Q_i
    s = p_cur * p_cur - m * q_cur * q_cur
    assert s in (1, -1)
    return p_cur, q_cur, s


def fundamental_unit(d0: int) -> tuple[int, int, int]:
    """Fundamental unit of O_{Q(sqrt(d0))} for a fundamental discriminant d0.

    Returns (x, y, norm) with eps = (x + y*sqrt(d0))/2 and norm in {-1, +1}.
    """
    D = d0
    if D % 4 == 0:
        x, y, s = _pell_fundamental(D // 4)  # Z[sqrt(D/4)] is the maximal order
        return 2 * x, y, s
    # D = 1 mod 4: the Z[sqrt(D)]-unit u is eps or eps^3; test for a cube root
    x, y, s = _pell_fundamental(D)
    X, Y = 2 * x, 2 * y
    if s == 1:
        # a cube root would have norm +1 as well; also test norm -1 (cube -1)
        candidates = [1, -1]
    else:
        candidates = [-1]
    digits = max(len(str(x)), len(str(y))) // 3 + 30
    with mpmath.workdps(digits):
        eps0 = (mpmath.mpf(X) + mpmath.mpf(Y) * mpmath.sqrt(D)) / 2
        c = mpmath.cbrt(eps0)
        rt = mpmath.sqrt(D)
        for sp in candidates:
            if sp**3 != s:
                continue
            a = int(mpmath.nint(c + sp / c))
            b = int(mpmath.nint((c - sp / c) / rt))
            if (a - b) % 2 or b <= 0:
                continue
            # exact check: ((a + b sqrt(D))/2)^3 == (X + Y sqrt(D))/2
            ax = a * (a * a + 3 * b * b * D)
            bx = b * (3 * a * a + b * b * D)
            if ax == 4 * X and bx == 4 * Y and (a * a - D * b * b) == 4 * sp:
                return a, b, sp
    return X, Y, s


def regulator_from_unit(d0: int, x: int, y: int) -> float:
    digits = max(len(str(abs(x))), len(str(abs(y)))) + 30
    with mpmath.workdps(digits):
        val = mpmath.log((mpmath.mpf(x) + mpmath.mpf(y) * mpmath.sqrt(d0)) / 2)
        return float(val)


# ---------------------------------------------------------------------------
# binary quadratic forms of positive discriminant: narrow class group


def _is_reduced(a: int, b: int, c: int, d: int) -> bool:
    sq = math.isqrt(d)
    return 0 < b <= sq and sq - b < 2 * abs(a) <= sq + b


def _reduce_indefinite(a: int, b: int, c: int, d: int) -> tuple[int, int, int]:
    while not _is_reduced(a, b, c, d):
        a, b, c = _rho(a, b, c, d)
    return (a, b, c)


def _rho(a: int, b: int, c: int, d: int) -> tuple[int, int, int]:
    sq = math.isqrt(d)
    ac = abs(c)
    r = (-b) % (2 * ac)
    if ac > sq:
        if r > ac:
            r -= 2 * ac
    else:
        while r > sq:
            r -= 2 * ac
        while r <= sq - 2 * ac:
            r += 2 * ac
    return c, r, (r * r - d) // (4 * c)


class NarrowClassGroup:
    """Narrow (= form) class group of a real quadratic field, as cycles of
    reduced indefinite binary quadratic forms under the rho operator."""

    def __init__(self, d: int):
        self.d = d
        sq = math.isqrt(d)
        forms = set()
        for b in range(1, sq + 1):
            if (b - d) % 2:
                continue
            prod = (b * b - d) // 4  # = a*c < 0
            for a in _divisors_signed(-prod):
                c = prod // a
                if _is_reduced(a, b, c, d) and math.gcd(math.gcd(a, b), c) == 1:
                    forms.add((a, b, c))
        cycles: list[frozenset] = []
        seen: set[tuple[int, int, int]] = set()
        for f0 in sorted(forms):
            if f0 in seen:
                continue
            cyc = []
            g = f0
            while g not in cyc:
                cyc.append(g)
                g = _rho(*g, d)
                if g not in forms:
                    raise AssertionError(f"rho left the reduced set: {g} disc {d}")
            cycles.append(frozenset(cyc))
            seen.update(cyc)
        self.cycles = cycles
        self._cycle_of = {f: i for i, cyc in enumerate(cycles) for f in cyc}
        self.h_plus = len(cycles)
        self._mul_table: dict[tuple[int, int], int] = {}

    # --- class handles are cycle indices ---

    def class_of_form(self, a: int, b: int, c: int) -> int:
        red = _reduce_indefinite(a, b, c, self.d)
        return self._cycle_of[red]

    @property
    def identity(self) -> int:
        b0 = self.d % 2
        return self.class_of_form(1, b0, (b0 * b0 - self.d) // 4)

    def negative_identity(self) -> int:
        """Class of the principal ideals with mixed-sign generators."""
        b0 = self.d % 2
        return self.class_of_form(-1, b0, (self.d - b0 * b0) // 4)

    def prime_class(self, ell: int) -> int:
        """Narrow class of a prime ideal above ell (split or ramified).

        Either conjugate may be returned; the generated subgroup is the same.
        """
        d = self.d
        for b in range(0, 2 * ell):
            if (b * b - d) % (4 * ell) == 0:
                return self.class_of_form(ell, b, (b * b - d) // (4 * ell))
        raise ValueError(f"{ell} not represented: is it inert in disc {d}?")

    def compose(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key in self._mul_table:
            return self._mul_table[key]
        f1 = min(self.cycles[i])
        f2 = min(self.cycles[j])
        result = self.class_of_form(*_compose_forms(f1, f2, self.d))
        self._mul_table[key] = result
        return result

    def square(self, i: int) -> int:
        return self.compose(i, i)

    def subgroup(self, generators: list[int]) -> set[int]:
        """Closure of the identity under composition with the generators."""
        gens = set(generators) | {self.identity}
        closure = {self.identity}
        frontier = list(gens)
        while frontier:
            g = frontier.pop()
            if g not in closure:
                closure.add(g)
            for h in list(closure):
                prod = self.compose(g, h)
                if prod not in closure:
                    closure.add(prod)
                    frontier.append(prod)
        return closure


def _divisors_signed(n: int) -> list[int]:
    n = abs(n)
    divs = []
    for a in range(1, math.isqrt(n) + 1):
        if n % a == 0:
            divs.extend((a, -a, n // a, -(n // a)))
    return sorted(set(divs))


def _compose_forms(f1, f2, d) -> tuple[int, int, int]:
    """Dirichlet composition; replaces f2 by an equivalent form with leading
    coefficient coprime to a1 first."""
    a1, b1, c1 = f1
    a2, b2, c2 = f2
    # find coprime (x,y) with f2(x,y) nonzero and coprime to 2*a1*d; it becomes
    # the leading coefficient of an equivalent form
    target = 2 * abs(a1) * abs(d)
    found = None
    for x in range(0, 60):
        for y in range(-60, 61):
            if math.gcd(x, y) != 1:
                continue
            val = a2 * x * x + b2 * x * y + c2 * y * y
            if val != 0 and math.gcd(val, target) == 1:
                found = (x, y, val)
                break
        if found:
            break
    if not found:
        raise ArithmeticError("no coprime representation found")
    x, y, a2p = found
    # complete (x, y) to a unimodular matrix [[x, -v], [y, u]], det = xu + vy = 1
    g, u, v = _ext_gcd(x, y)
    assert g == 1 and x * u + y * v == 1
    b2p = 2 * (-(a2 * x * v) + c2 * y * u) + b2 * (x * u - v * y)
    c2p = a2 * v * v - b2 * v * u + c2 * u * u
    assert b2p * b2p - 4 * a2p * c2p == d
    # now gcd(a1, a2p) = 1: CRT for the middle coefficient
    B = _crt(b1, abs(2 * a1), b2p, abs(2 * a2p))
    A = a1 * a2p
    C = (B * B - d) // (4 * A)
    assert B * B - 4 * A * C == d
    return A, B, C


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    g, p, q = _ext_gcd(m1, m2)
    assert (r2 - r1) % g == 0
    lcm = m1 // g * m2
    return (r1 + (r2 - r1) // g * p % (m2 // g) * m1) % lcm


# ---------------------------------------------------------------------------
# genus theory: prime discriminants and the wide 2-elementary quotient


def prime_discriminants(d: int) -> list[int]:
    """Factor a fundamental discriminant into prime discriminants."""
    parts = []
    m = d
    for p, _ in factorize(d):
        if p == 2:
            continue
        pstar = p if p % 4 == 1 else -p
        parts.append(pstar)
    odd = 1
    for q in parts:
        odd *= q
    if d % 2 == 0:
        two_part = d // odd
        assert two_part in (-4, 8, -8), f"bad 2-part {two_part} for {d}"
        parts.append(two_part)
    assert math.prod(parts) == d
    return sorted(parts, key=abs)


def positive_splitting_basis(d: int) -> list[int]:
    """F2-basis d1-values of {d = d1*d2, d1 > 0, d2 > 0} modulo the trivial
    splitting; the length is the 2-rank h2 of the wide class group."""
    parts = prime_discriminants(d)
    t = len(parts)
    subsets = []
    for mask in range(1, (1 << t) - 1):
        d1 = math.prod(parts[i] for i in range(t) if mask >> i & 1)
        if d1 > 0 and d // d1 > 0:
            subsets.append((mask, d1))
    # reduce masks modulo complement and extract an F2-independent set
    full = (1 << t) - 1
    basis_masks: list[int] = []
    basis_vals: list[int] = []
    span = {0, full}
    for mask, d1 in sorted(subsets, key=lambda s: s[1]):
        if mask in span:
            continue
        # extend the span by mask (cosets via xor with existing span)
        span |= {mask ^ s for s in span}
        basis_masks.append(mask)
        basis_vals.append(d1)
    return basis_vals


def genus_vector(d: int, basis: list[int], P: PrimeIdeal) -> tuple[int, ...]:
    """Image of a prime's class in the wide 2-elementary quotient Cl/Cl^2,
    as an F2 bit vector over the positive-splitting character basis."""
    if P.f == 2:
        return tuple(0 for _ in basis)  # inert primes are principal
    q = P.norm
    bits = []
    for d1 in basis:
        if math.gcd(d1, q) == 1:
            val = kronecker(d1, q)
        else:
            val = kronecker(d // d1, q)
        assert val in (1, -1)
        bits.append(0 if val == 1 else 1)
    return tuple(bits)


def f2_rank(vectors: list[tuple[int, ...]]) -> int:
    rows = [int("".join(map(str, v)), 2) if v else 0 for v in vectors if any(v)]
    rank = 0
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
            rank += 1
    return rank


# ---------------------------------------------------------------------------
# zeta(2) as an exact rational multiple of pi^(2n)/sqrt(d)

_SPF_CACHE: dict[int, list[int]] = {}


def _smallest_prime_factors(limit: int) -> list[int]:
    key = limit
    if key in _SPF_CACHE:
        return _SPF_CACHE[key]
    spf = list(range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    _SPF_CACHE.clear()  # keep at most one table
    _SPF_CACHE[key] = spf
    return spf


def chi_values(d: int) -> list[int]:
    """chi_d(a) = kronecker(d, a) for a in 0..d-1, via a multiplicative sieve."""
    spf = _smallest_prime_factors(max(d, 100))
    chi = [0] * d
    chi[1] = 1
    for a in range(2, d):
        p = spf[a]
        if a == p:
            chi[a] = kronecker(d, p)
        else:
            chi[a] = chi[p] * chi[a // p]
    return chi


def bernoulli2_chi(d: int) -> Fraction:
    """Generalized Bernoulli number B_{2,chi_d} for the real character mod d."""
    chi = chi_values(d)
    s = sum(chi[a] * a * a for a in range(1, d))
    return Fraction(s, d)


def zeta2_coeff_quadratic(d: int) -> Fraction:
    """c with zeta_k(2) = c * pi^4 / sqrt(d) for k real quadratic of disc d."""
    return bernoulli2_chi(d) / (6 * d)


def lseries2_numeric(d: int, terms: int = 200_000) -> float:
    """Direct partial sum of L(2, chi_d) with an Abel-summation tail bound of
    d/terms^2; used as an independent oracle."""
    chi = chi_values(d)
    total = 0.0
    for n in range(1, terms):
        c = chi[n % d]
        if c:
            total += c / (n * n)
    return total


# ---------------------------------------------------------------------------
# field records


@dataclass
class FieldRecord:
    n: int
    d: int
    poly: tuple[int, ...]  # constant term first
    h: int
    h_plus: int
    reg: float
    aut_count: int
    h2: int
    zeta2_coeff: Fraction
    m: int = 0
    w: int = 2
    generated: bool = True
    unit_norm: int = 0  # quadratic only: norm of the fundamental unit
    split_overrides: dict = field(default_factory=dict)
    cyclo_orders: tuple[int, ...] = ()  # m >= 2 with k(zeta_2m)/k quadratic
    zeta_verified: bool = False
    unverified: bool = False
    genus_basis: tuple[int, ...] = ()

    def __post_init__(self):
        self.m = self.h_plus.bit_length() - 1 - (self.h.bit_length() - 1)
        if self.h * (1 << self.m) != self.h_plus:
            # h_plus/h must be a power of two
            raise ValueError(f"h+ = {self.h_plus} is not h*2^m for h = {self.h}")

    @property
    def delta(self) -> float:
        return self.d ** (1.0 / self.n)

    # -- splitting ---------------------------------------------------------

    def split_type(self, ell: int) -> list[PrimeIdeal]:
        if str(ell) in self.split_overrides:
            return [
                PrimeIdeal(ell, e, f, tag=i)
                for i, (e, f) in enumerate(self.split_overrides[str(ell)])
            ]
        if self.n == 2:
            k = kronecker(self.d, ell)
            if k == 1:
                return [PrimeIdeal(ell, 1, 1, 0), PrimeIdeal(ell, 1, 1, 1)]
            if k == -1:
                return [PrimeIdeal(ell, 1, 2, 0)]
            return [PrimeIdeal(ell, 2, 1, 0)]
        disc_poly = poly_discriminant(self.poly)
        index_sq = disc_poly // self.d
        index = math.isqrt(abs(index_sq))
        if index * index != abs(index_sq):
            raise ValueError("poly discriminant not a square multiple of d")
        if index % ell == 0:
            raise KeyError(
                f"index-divisor prime {ell} for disc {self.d}: no ingested data"
            )
        fac = factor_poly_mod_p(list(self.poly), ell)
        return [PrimeIdeal(ell, m, deg, tag=i) for i, (deg, m) in enumerate(fac)]

    def primes_of_norm_upto(self, bound: int) -> list[PrimeIdeal]:
        out = []
        for ell in primes_upto(bound):
            for P in self.split_type(ell):
                if P.norm <= bound:
                    out.append(P)
        out.sort(key=lambda P: (P.norm, P.ell, P.tag))
        return out

    # -- quadratic-only lazy helpers ----------------------------------------

    _narrow: NarrowClassGroup | None = None

    def narrow_group(self) -> NarrowClassGroup:
        if self.n != 2:
            raise ValueError("narrow group only constructed for quadratic fields")
        if self._narrow is None:
            self._narrow = NarrowClassGroup(self.d)
        return self._narrow

    def genus_vec(self, P: PrimeIdeal) -> tuple[int, ...]:
        return genus_vector(self.d, list(self.genus_basis), P)


def poly_discriminant(coeffs) -> int:
    """Discriminant of an integer polynomial (constant term first)."""
    import itertools

    # resultant(f, f') via exact subresultant-free expansion through Sylvester
    f = list(coeffs)
    n = len(f) - 1
    fp = [i * c for i, c in enumerate(f)][1:]
    res = _resultant(f, fp)
    lead = f[-1]
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    assert res % lead == 0
    return sign * res // lead


def _resultant(fc: list, gc: list) -> int:
    """Resultant of integer polynomials via the Euclidean recursion."""

    def trim(v):
        v = list(v)
        while v and v[-1] == 0:
            v.pop()
        return v

    def rec(f: list[Fraction], g: list[Fraction]) -> Fraction:
        f, g = trim(f), trim(g)
        if not f or not g:
            return Fraction(0)
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return g[0] ** df
        if df < dg:
            sign = -1 if (df * dg) % 2 else 1
            return sign * rec(g, f)
        # r = f mod g
        r = list(f)
        lead = g[-1]
        for i in range(df, dg - 1, -1):
            c = r[i]
            if c:
                for j in range(dg + 1):
                    r[i - dg + j] -= c / lead * g[j]
        r = trim(r)
        if not r:
            return Fraction(0)
        dr = len(r) - 1
        sign = -1 if (df * dg) % 2 else 1
        return sign * lead ** (df - dr) * rec(g, r)

    out = rec([Fraction(c) for c in fc], [Fraction(c) for c in gc])
    assert out.denominator == 1
    return int(out)


# ---------------------------------------------------------------------------
# quadratic field construction

_QUAD_CACHE: dict[int, FieldRecord] = {}

# m >= 2 with [k(zeta_2m):k] = 2 beyond the universal {2, 3}: only these
# real quadratic fields pick up an extra cyclotomic order.
_EXTRA_CYCLO_QUADRATIC = {8: (4,), 5: (5,), 12: (6,)}


def quadratic_field(d0: int) -> FieldRecord:
    """Exact record for the real quadratic field of fundamental discriminant d0."""
    if d0 in _QUAD_CACHE:
        return _QUAD_CACHE[d0]
    if not is_fundamental_discriminant(d0):
        raise ValueError(f"{d0} is not a fundamental discriminant > 1")
    x, y, unit_norm = fundamental_unit(d0)
    reg = regulator_from_unit(d0, x, y)
    group = NarrowClassGroup(d0)
    h_plus = group.h_plus
    m = 0 if unit_norm == -1 else 1
    # cross-check m against the form class group: the class of (-1, ...) is
    # trivial exactly when a unit of norm -1 exists
    c0_trivial = group.negative_identity() == group.identity
    assert c0_trivial == (unit_norm == -1), f"unit/form mismatch at d = {d0}"
    h = h_plus // (1 << m)
    basis = positive_splitting_basis(d0)
    h2 = len(basis)
    assert h % (1 << h2) == 0, f"2^h2 must divide h at d = {d0}"
    if d0 % 4 == 1:
        poly = (-(d0 - 1) // 4, -1, 1)  # x^2 - x - (d0-1)/4
    else:
        poly = (-d0 // 4, 0, 1)  # x^2 - d0/4
    rec = FieldRecord(
        n=2,
        d=d0,
        poly=poly,
        h=h,
        h_plus=h_plus,
        reg=reg,
        aut_count=2,
        h2=h2,
        zeta2_coeff=zeta2_coeff_quadratic(d0),
        unit_norm=unit_norm,
        cyclo_orders=(2, 3) + _EXTRA_CYCLO_QUADRATIC.get(d0, ()),
        genus_basis=tuple(basis),
    )
    rec._narrow = group
    _QUAD_CACHE[d0] = rec
    return rec


# ---------------------------------------------------------------------------
# zeta verification against Euler products


def euler_product_zeta2(rec: FieldRecord, limit: int = 100_000) -> tuple[float, float]:
    """Truncated Euler product for zeta_k(2) with a certified tail bound.

    Returns (value, tail_bound): |zeta_k(2) - value| <= tail_bound * value.
    """
    log_val = 0.0
    for ell in primes_upto(limit):
        for P in rec.split_type(ell):
            log_val -= math.log1p(-float(P.norm) ** -2.0)
    # tail: each p > limit contributes at most n split factors (1-p^-2)^-1;
    # -log(prod) <= n * sum_{p > limit} -log(1 - p^-2) <= 2n/limit
    tail = 2.0 * rec.n / limit
    return math.exp(log_val), tail


def verify_zeta2(rec: FieldRecord, limit: int = 100_000) -> None:
    """Assert the exact coefficient against the truncated Euler product."""
    value, tail = euler_product_zeta2(rec, limit)
    exact = float(rec.zeta2_coeff) * math.pi ** (2 * rec.n) / math.sqrt(rec.d)
    if not abs(exact - value) <= (tail + 1e-12) * value * 1.2:
        raise ArithmeticError(
            f"zeta2 mismatch at d = {rec.d}: exact {exact}, product {value}, tail {tail}"
        )
    rec.zeta_verified = True


def reconstruct_rational(x: float, max_den: int) -> Fraction | None:
    """Continued-fraction reconstruction of x with bounded denominator."""
    frac = Fraction(x).limit_denominator(max_den)
    return frac


# ---------------------------------------------------------------------------
# ingestion of degree >= 3 fields


class FieldTableError(ValueError):
    pass


def _parse_split_overrides(spec: str) -> dict:
    out: dict[str, list[tuple[int, int]]] = {}
    if not spec or spec == "-":
        return out
    for chunk in spec.split("|"):
        ell, body = chunk.split(":")
        pairs = []
        for ef in body.split(";"):
            e, f = ef.split(",")
            pairs.append((int(e), int(f)))
        out[ell] = pairs
    return out


def ingest_field_table(path: str | Path, verify: bool = True, euler_limit: int = 20000) -> list[FieldRecord]:
    """Parse fields.tsv (see README for the schema) into validated records."""
    records = []
    path = Path(path)
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        try:
            (deg, disc, coeffs, h, h_plus, reg, aut, h2) = parts[:8]
            overrides = parts[8] if len(parts) > 8 else ""
            zeta_num = parts[9] if len(parts) > 9 else ""
            zeta_den = parts[10] if len(parts) > 10 else ""
            cyclo = parts[11] if len(parts) > 11 else ""
            flags = parts[12] if len(parts) > 12 else ""
            n = int(deg)
            d = int(disc)
            poly = tuple(int(c) for c in coeffs.split(","))
            if len(poly) != n + 1:
                raise FieldTableError(f"degree {n} but {len(poly) - 1} poly degree")
            c = (
                Fraction(int(zeta_num), int(zeta_den))
                if zeta_num and zeta_num != "-"
                else None
            )
            rec = FieldRecord(
                n=n,
                d=d,
                poly=poly,
                h=int(h),
                h_plus=int(h_plus),
                reg=float(reg),
                aut_count=int(aut),
                h2=int(h2),
                zeta2_coeff=c if c is not None else Fraction(0),
                generated=False,
                split_overrides=_parse_split_overrides(overrides),
                cyclo_orders=tuple(int(x) for x in cyclo.split(",")) if cyclo and cyclo != "-" else (2, 3),
                unverified="unverified" in flags,
            )
        except FieldTableError:
            raise
        except Exception as exc:  # report with the line number, then abort
            raise FieldTableError(f"{path.name}:{lineno}: malformed row ({exc})") from exc
        # invariant revalidation
        dp = poly_discriminant(rec.poly)
        q, r = divmod(dp, d)
        if r != 0 or math.isqrt(q) ** 2 != q:
            raise FieldTableError(
                f"{path.name}:{lineno}: poly discriminant {dp} inconsistent with d = {d}"
            )
        if c is None:
            raise FieldTableError(f"{path.name}:{lineno}: zeta coefficient required")
        for ell in primes_upto(50):
            total = sum(P.e * P.f for P in rec.split_type(ell))
            if total != rec.n:
                raise FieldTableError(
                    f"{path.name}:{lineno}: splitting at {ell} sums to {total} != {rec.n}"
                )
        if verify:
            verify_zeta2(rec, euler_limit)
        records.append(rec)
    return records
