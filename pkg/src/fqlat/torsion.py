"""Torsion orders in maximal lattices, the lcm column, the Fuchsian gambit,
and the stability classifier.

Splitting in k(zeta_q)/k is decided by Frobenius on roots of unity: for a
prime away from q it splits iff N(p) = 1 mod q; primes over a divisor of q
split only when zeta_q lies in the completion, which for quadratic fields
reduces to two exact local criteria (i at a ramified 2, sqrt(-3) at a
ramified 3) and is otherwise impossible on degree grounds.  Extension-
ramified primes count as non-split throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .fields import FieldRecord, PrimeIdeal
from .quatdata import AlgebraData


def euler_phi(n: int) -> int:
    from .arith import factorize

    out = 1
    for p, e in factorize(n):
        out *= (p - 1) * p ** (e - 1)
    return out


def _prime_power_base(m: int) -> int | None:
    """ell if m = ell^r for a prime ell, else None."""
    from .arith import factorize

    fac = factorize(m)
    return fac[0][0] if len(fac) == 1 else None


def _two_ell_r(m: int) -> int | None:
    """ell if m = 2*ell^r with ell >= 3 prime, else None."""
    if m % 2 or m == 2:
        return None
    half = m // 2
    if half % 2 == 0:
        return None
    ell = _prime_power_base(half)
    return ell if ell is not None and ell >= 3 else None


def torsion_candidates(rec: FieldRecord) -> tuple[int, ...]:
    """Orders m >= 2 with k(zeta_2m)/k quadratic (per-field cyclotomic data)."""
    return rec.cyclo_orders


def splits_in_cyclotomic(rec: FieldRecord, P: PrimeIdeal, q: int) -> bool:
    """Does P split in k(zeta_q)/k (assumed quadratic)?  Ramified-in-extension
    primes are classified non-split."""
    ell = P.ell
    if q % ell:
        # unramified in the extension; Frobenius sends zeta_q to zeta_q^N(P)
        return P.norm % q == 1
    # P lies over a divisor of q: split iff zeta_q is in the completion
    a = 0
    qq = q
    while qq % ell == 0:
        qq //= ell
        a += 1
    rest = qq
    # prime-to-ell part lifts through the residue field
    if rest > 1 and (ell**P.f - 1) % rest:
        return False
    phi = euler_phi(ell**a)
    if phi == 1:
        return True  # ell^a = 2: -1 is everywhere
    if P.e % phi:
        return False  # Q_ell(zeta_{ell^a})/Q_ell is totally ramified of degree phi
    if rec.n == 2:
        if ell == 2 and a == 2:
            # i in Q_2(sqrt(d/4)) iff d/4 = 7 mod 8
            return (rec.d // 4) % 8 == 7
        if ell == 3 and a == 1:
            # sqrt(-3) in Q_3(sqrt(d)) iff -d/3 is a square unit mod 3
            return (-(rec.d // 3)) % 3 == 1
        return False  # phi = 4 cases are impossible in a quadratic completion
    key = f"zeta{ell**a}@{ell}.{P.tag}"
    return bool(rec.split_overrides.get(key, False))


def embeds_order(alg: AlgebraData, m: int) -> bool:
    """k(zeta_2m) embeds in B: no finite ramified prime splits in it (real
    places never split in a totally imaginary extension)."""
    return all(not splits_in_cyclotomic(alg.field, P, 2 * m) for P in alg.ram_f)


def has_23_torsion(alg: AlgebraData) -> bool:
    if not alg.ram_f:
        return True
    return embeds_order(alg, 2) and embeds_order(alg, 3)


def maximal_torsion(alg: AlgebraData, S: tuple[PrimeIdeal, ...], m: int) -> bool:
    """Presence of an element of order m in the maximal lattice for (B, S).

    (i)  no Ram_f prime splits in k(zeta_2m)/k;
    (ii) for m = 2*ell^r: every prime over ell outside Ram_f and S has
         ramification index divisible by phi(m);
    (iii) each prime of S escapes: it splits in k(zeta_m)/k, or m = ell^r and
         the prime divides ell.  Even orders are only certified at S = {};
         the Appendix records no even torsion for nonempty level.
    """
    rec = alg.field
    if m not in rec.cyclo_orders:
        return False
    if not embeds_order(alg, m):
        return False
    if S and m % 2 == 0:
        return False
    if S:
        ram_set = set(alg.ram_f)
        ell_pp = _prime_power_base(m)
        for P in S:
            if splits_in_cyclotomic(rec, P, m):
                continue
            if ell_pp is not None and P.ell == ell_pp:
                continue
            return False
    ell_two = _two_ell_r(m)
    if ell_two is not None:
        phi = euler_phi(m)
        inside = {(P.ell, P.tag) for P in list(alg.ram_f) + list(S)}
        for Q in rec.split_type(ell_two):
            if (Q.ell, Q.tag) in inside:
                continue
            if Q.e % phi:
                return False
    return True


def torsion_lcm(alg: AlgebraData, S: tuple[PrimeIdeal, ...] = ()) -> int:
    """lcm of the orders of finite-order elements detected in the maximal
    lattice for (B, S); 1 when none of the candidate orders is present."""
    out = 1
    for m in torsion_candidates(alg.field):
        if maximal_torsion(alg, S, m):
            out = math.lcm(out, m)
    return out


# ---------------------------------------------------------------------------
# stability


def certainly_stable(alg: AlgebraData, S: tuple[PrimeIdeal, ...] = ()) -> bool:
    """True when no automorphism of k can swap the two split real places while
    preserving (Ram_f, S); then the lattice equals its stable subgroup.

    Odd automorphism groups (trivial, or cyclic cubic/quintic) contain no
    transposition of places, so those fields are always stable.  For real
    quadratic fields the nontrivial automorphism swaps the places and acts on
    primes by conjugation, so the test is Galois-stability of the two prime
    sets.  Even-automorphism fields of degree >= 4 carry an ingested verdict.
    """
    rec = alg.field
    if rec.aut_count % 2 == 1:
        return True
    if rec.n == 2:
        return not (_conj_invariant(rec, alg.ram_f) and _conj_invariant(rec, S))
    if alg.stable_override is not None:
        return alg.stable_override
    return True


def _conj_invariant(rec: FieldRecord, primes: tuple[PrimeIdeal, ...]) -> bool:
    from collections import Counter

    split_tags: dict[int, set[int]] = {}
    for P in primes:
        if len(rec.split_type(P.ell)) == 2:
            split_tags.setdefault(P.ell, set()).add(P.tag)
    return all(tags == {0, 1} for tags in split_tags.values())


# ---------------------------------------------------------------------------
# the Fuchsian gambit


@dataclass(frozen=True)
class GambitInput:
    v: Fraction  # covol(Gamma)/(16 pi^2)
    m_ratio: Fraction  # [Gamma*:Gamma_st]/[Gamma:Gamma_st], a half-integer
    prime_norm: int
    ramified_case: bool
    epsilon: int  # 2 if the prime is a square in the narrow class group

    def __post_init__(self):
        if self.m_ratio <= 0 or (2 * self.m_ratio).denominator != 1:
            raise ValueError("m must be a positive half-integer")
        if self.epsilon not in (1, 2):
            raise ValueError("epsilon must be 1 or 2")
        if self.prime_norm < 2:
            raise ValueError("prime norm must be at least 2")


def gambit_bound(inp: GambitInput) -> int:
    """The exponent cap c from the Fuchsian gambit: the 2-rank of the
    normalizer quotient satisfies log_2[Gamma^1:Gamma^*] <= c (+1 in the
    ramified case via epsilon)."""
    Np = inp.prime_norm
    if inp.ramified_case:
        val = Fraction(4) * inp.v * inp.epsilon / (inp.m_ratio * (Np - 1))
    else:
        val = Fraction(4) * inp.v * (Np - 1) / (inp.m_ratio * (Np + 1))
    return int(val) + 3  # floor for positive rationals


def gambit_worst_case(v: Fraction, ramified: bool, min_norm: int = 2) -> int:
    """Worst-case cap over m in {1/2, 1, 3/2, ...}, eps in {1, 2}, and prime
    norms >= min_norm.

    Ramified: 4*v*eps/(m*(N-1)) <= 16v/(N-1), maximized at the smallest norm,
    so the cap is attained by direct evaluation.  Unramified: the factor
    (N-1)/(N+1) increases to 1, so the supremum 8v is a limit; the cap is
    floor(8v) + 3 as in the derivation.
    """
    v = Fraction(v)
    if ramified:
        best = 0
        for num in range(1, 5):
            m = Fraction(num, 2)
            for eps in (1, 2):
                for Np in range(min_norm, min_norm + 8):
                    best = max(best, gambit_bound(GambitInput(v, m, Np, ramified, eps)))
        return best
    return int(8 * v) + 3
