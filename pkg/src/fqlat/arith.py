"""Number-theoretic and numerical primitives shared by the other modules.

Everything here is pure and deterministic: Kronecker symbols, prime
generation, polynomial factorization over prime fields, small finite-field
arithmetic, and certified numerical quadrature for the slowly-decaying
integrands used by the volume bounds.
"""

from __future__ import annotations

import math
import random
from typing import Callable, Iterable, Sequence

import mpmath
import numpy as np

# ---------------------------------------------------------------------------
# Kronecker symbol and primes


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for n != 0, completely multiplicative in both args."""
    if n == 0:
        raise ValueError("kronecker symbol undefined for n = 0")
    a = int(a)
    n = int(n)
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def primes_upto(x: int) -> list[int]:
    """All primes <= x, ascending."""
    return [int(p) for p in primes_array_upto(x)]


def primes_array_upto(x: int) -> np.ndarray:
    """Primes <= x as an int64 array (bulk numeric work)."""
    if x < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(x + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(x**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the 64-bit range."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization, adequate for the sizes used here."""
    n = abs(int(n))
    out: list[tuple[int, int]] = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += wheel[i]
        i = (i + 1) % 8
    if n > 1:
        out.append((n, 1))
    return out


# ---------------------------------------------------------------------------
# Polynomials over F_p.  Coefficient lists are little-endian (constant first),
# always stored trimmed; the zero polynomial is [].


def poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mod(f: Sequence[int], h: Sequence[int], p: int) -> list[int]:
    """f mod h over F_p (h nonzero)."""
    f = [c % p for c in f]
    poly_trim(f)
    dh = len(h) - 1
    if dh < 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv_lead = pow(h[-1], -1, p)
    while len(f) - 1 >= dh:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dh
        for j in range(dh + 1):
            f[shift + j] = (f[shift + j] - c * h[j]) % p
        poly_trim(f)
        if not f:
            break
    return f


def poly_mul(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    if not f or not g:
        return []
    prod = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                prod[i + j] = (prod[i + j] + fi * gj) % p
    return poly_trim(prod)


def poly_mulmod(f: Sequence[int], g: Sequence[int], h: Sequence[int], p: int) -> list[int]:
    return poly_mod(poly_mul(f, g, p), h, p)


def poly_powmod(f: Sequence[int], n: int, h: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(f, h, p)
    while n:
        if n & 1:
            result = poly_mulmod(result, base, h, p)
        base = poly_mulmod(base, base, h, p)
        n >>= 1
    return result


def poly_gcd(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    a = poly_trim([c % p for c in f])
    b = poly_trim([c % p for c in g])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_divexact(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    """f / g assuming exact divisibility."""
    f = [c % p for c in f]
    poly_trim(f)
    if not f:
        return []
    q = [0] * (len(f) - len(g) + 1)
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        shift = len(f) - len(g)
        q[shift] = c
        for j in range(len(g)):
            f[shift + j] = (f[shift + j] - c * g[j]) % p
        poly_trim(f)
        if not f:
            break
    if f:
        raise ArithmeticError("inexact polynomial division")
    return poly_trim(q)


def _poly_deriv(f: Sequence[int], p: int) -> list[int]:
    return poly_trim([(i * c) % p for i, c in enumerate(f)][1:])


def _poly_sub(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = (a - b) % p
    return poly_trim(out)


def _equal_degree_split(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus split of a squarefree f that is a product of
    irreducibles all of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = poly_trim(a)
        if len(a) <= 0:
            continue
        if p == 2:
            # trace map over F_{2^d}
            t = list(a)
            acc = list(a)
            for _ in range(d - 1):
                t = poly_mulmod(t, t, f, p)
                acc = _poly_sub(acc, [(-c) % p for c in t], p)  # acc += t
            g = poly_gcd(f, acc, p)
        else:
            e = (p**d - 1) // 2
            b = poly_powmod(a, e, f, p)
            b = _poly_sub(b, [1], p)
            g = poly_gcd(f, b, p)
        if 0 < len(g) - 1 < n:
            h = poly_divexact(f, g, p)
            return _equal_degree_split(g, d, p, rng) + _equal_degree_split(h, d, p, rng)


def factor_mod_p(coeffs: Sequence[int], p: int) -> list[tuple[list[int], int]]:
    """Full factorization of f mod p into monic irreducibles with multiplicity.

    Deterministically seeded; rejects p dividing the leading coefficient.
    """
    if coeffs[-1] % p == 0:
        raise ValueError(f"leading coefficient vanishes mod {p}")
    f = poly_trim([c % p for c in coeffs])
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    rng = random.Random(0xF9A7 + p + len(coeffs))
    factors: list[tuple[list[int], int]] = []

    def recurse(g: list[int]) -> None:
        if len(g) <= 1:
            return
        dg = _poly_deriv(g, p)
        if not dg:
            # g = h(x^p); Frobenius fixes F_p so contraction keeps coefficients
            h = [g[i] for i in range(0, len(g), p)]
            sub = factor_mod_p(h, p)
            for fac, m in sub:
                factors.append((fac, m * p))
            return
        sq = poly_gcd(g, dg, p)
        v = poly_divexact(g, sq, p)  # squarefree, contains each p-coprime-mult factor once
        # distinct degree on v
        w = [0, 1]
        rest = list(v)
        d = 1
        while len(rest) - 1 >= 2 * d:
            w = poly_powmod(w, p, rest, p)
            gg = poly_gcd(rest, _poly_sub(w, [0, 1], p), p)
            if len(gg) > 1:
                for irr in _equal_degree_split(gg, d, p, rng):
                    factors.append((irr, 0))
                rest = poly_divexact(rest, gg, p)
                w = poly_mod(w, rest, p)
            d += 1
        if len(rest) > 1:
            factors.append((rest, 0))
        # factors of multiplicity divisible by p hide entirely inside sq
        leftover = sq
        for irr, m in factors:
            if m == 0:
                while True:
                    try:
                        cand = poly_divexact(leftover, irr, p)
                    except ArithmeticError:
                        break
                    leftover = cand
        recurse_leftover(leftover)

    def recurse_leftover(g: list[int]) -> None:
        if len(g) > 1:
            recurse(g)

    recurse(f)
    # collapse duplicates and compute true multiplicities by trial division
    uniq: list[list[int]] = []
    for fac, _ in factors:
        if fac not in uniq:
            uniq.append(fac)
    out: list[tuple[list[int], int]] = []
    for fac in uniq:
        rem = f
        m = 0
        while True:
            try:
                rem = poly_divexact(rem, fac, p)
                m += 1
            except ArithmeticError:
                break
        out.append((fac, m))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def factor_poly_mod_p(coeffs: Sequence[int], p: int) -> list[tuple[int, int]]:
    """Multiset of irreducible-factor (degree, multiplicity) of f mod p."""
    return sorted((len(fac) - 1, m) for fac, m in factor_mod_p(coeffs, p))


# ---------------------------------------------------------------------------
# Small finite fields F_q, q = p^f with f <= 4 (splitting tests only)

_IRRED_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def _find_irreducible(p: int, f: int) -> list[int]:
    key = (p, f)
    if key in _IRRED_CACHE:
        return list(_IRRED_CACHE[key])
    if f == 1:
        _IRRED_CACHE[key] = (0, 1)
        return [0, 1]
    import itertools

    def irreducible(po: list[int]) -> bool:
        w = [0, 1]
        for d in range(1, f // 2 + 1):
            w = poly_powmod(w, p, po, p)
            g = poly_gcd(po, _poly_sub(w, [0, 1], p), p)
            if len(g) > 1:
                return False
        return True

    for tail in itertools.product(range(p), repeat=f):
        cand = list(tail) + [1]
        if cand[0] == 0:
            continue
        if irreducible(cand):
            _IRRED_CACHE[key] = tuple(cand)
            return cand
    raise RuntimeError("no irreducible polynomial found")


class ResidueField:
    """F_q = F_p[x]/(m) with q = p^f, f <= 4; elements are coefficient tuples."""

    def __init__(self, p: int, f: int, modulus: Sequence[int] | None = None):
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = list(modulus) if modulus is not None else _find_irreducible(p, f)
        if len(self.modulus) - 1 != f:
            raise ValueError("modulus degree mismatch")

    def element(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        c = [x % self.p for x in coeffs]
        c = poly_mod(c, self.modulus, self.p)
        c += [0] * (self.f - len(c))
        return tuple(c[: self.f])

    def from_int(self, n: int) -> tuple[int, ...]:
        return self.element([n])

    def elements(self) -> Iterable[tuple[int, ...]]:
        import itertools

        for tup in itertools.product(range(self.p), repeat=self.f):
            yield tuple(tup)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        prod = [0] * (2 * self.f - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % self.p
        red = poly_mod(prod, self.modulus, self.p)
        red += [0] * (self.f - len(red))
        return tuple(red[: self.f])

    def one(self):
        return self.from_int(1)

    def zero(self):
        return tuple([0] * self.f)


def splits_quadratic(t, q_or_field) -> bool:
    """True iff x^2 - t*x + 1 has a root in F_q (uniform in the characteristic)."""
    if isinstance(q_or_field, ResidueField):
        F = q_or_field
        tt = t if isinstance(t, tuple) else F.from_int(int(t))
    else:
        q = int(q_or_field)
        fac = factorize(q)
        if len(fac) != 1:
            raise ValueError("field size must be a prime power")
        p, f = fac[0]
        if f > 4:
            raise ValueError("residue degree > 4 unsupported")
        F = ResidueField(p, f)
        tt = F.from_int(int(t))
    one = F.one()
    for x in F.elements():
        val = F.add(F.sub(F.mul(x, x), F.mul(tt, x)), one)
        if val == F.zero():
            return True
    return False


# ---------------------------------------------------------------------------
# Gamma and certified quadrature


def gamma_fn(x: float) -> float:
    """Euler Gamma to well over 12 significant digits."""
    if x <= 0:
        raise ValueError("gamma_fn requires x > 0")
    with mpmath.workdps(30):
        return float(mpmath.gamma(x))


class QuadratureError(RuntimeError):
    pass


def integrate_decaying(
    integrand: Callable[[float], float],
    tail_bound: Callable[[float], float],
    tol: float = 1e-8,
    cut: float | None = None,
) -> float:
    """Integrate f over (0, infinity) with certified absolute error <= tol.

    `tail_bound(A)` must bound |integral of f over [A, inf)| from above; the
    cut is grown until that bound drops below tol/2, then the finite part is
    evaluated with mpmath's adaptive rule at elevated precision.  Fails loudly
    when the tolerance cannot be certified.
    """
    A = cut if cut is not None else 30.0
    while tail_bound(A) > tol / 2 and A < 1e6:
        A *= 2
    tb = tail_bound(A)
    if tb > tol / 2:
        raise QuadratureError(f"tail bound {tb} exceeds tol/2 at cut {A}")
    with mpmath.workdps(30):
        val, err = mpmath.quad(integrand, [0, 1, A], error=True, maxdegree=10)
        if float(err) > tol / 2:
            val, err = mpmath.quad(integrand, [0, 0.1, 1, A / 4, A], error=True, maxdegree=12)
        if float(err) > tol / 2:
            raise QuadratureError(f"quadrature error estimate {float(err)} exceeds {tol / 2}")
        return float(val)
