"""Borel's covolume formula in exact arithmetic, the level exponent nu, the
minimal-covolume lower bound, admissibility against the 32*pi^2 budget, and
the holomorphic index.

Covolumes are rational multiples of pi^2; all arithmetic stays in Fraction
and pi^2 remains symbolic, so Appendix coefficients like 8/15 reproduce
exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .fields import FieldRecord, PrimeIdeal, f2_rank
from .quatdata import AlgebraData, type_number


@dataclass(frozen=True, order=True)
class PiSquared:
    """A positive rational multiple of pi^2."""

    coeff: Fraction

    def __post_init__(self):
        if self.coeff <= 0:
            raise ValueError("covolume coefficient must be positive")

    def __float__(self) -> float:
        return float(self.coeff) * math.pi**2

    def __str__(self) -> str:
        c = self.coeff
        return f"{c.numerator}/{c.denominator}*pi^2" if c.denominator != 1 else f"{c.numerator}*pi^2"


def covolume(alg: AlgebraData, S: tuple[PrimeIdeal, ...] = (), nu: int | None = None) -> PiSquared:
    """Exact covolume of the maximal lattice for (B, S) as a multiple of pi^2:

        8 d^{3/2} zeta_k(2) / (2^nu (4 pi^2)^n [K(B):k])
          * prod_{Ram_f} (N-1)/2 * prod_S (N+1)

    computed entirely in rationals via the exact zeta coefficient.
    """
    k = alg.field
    ram_set = set(alg.ram_f)
    if any(P in ram_set for P in S):
        raise ValueError("S must be disjoint from Ram_f")
    if nu is None:
        nu = nu_exponent(alg, S)
    if not 0 <= nu <= len(S):
        raise ValueError(f"nu = {nu} out of range 0..{len(S)}")
    coeff = Fraction(8 * k.d) * k.zeta2_coeff / Fraction(4**k.n)
    for P in alg.ram_f:
        coeff *= Fraction(P.norm - 1, 2)
    for P in S:
        coeff *= P.norm + 1
    coeff /= (1 << nu) * type_number(alg)
    return PiSquared(coeff)


def nu_exponent(alg: AlgebraData, S: tuple[PrimeIdeal, ...]) -> int:
    """The exponent nu in Borel's formula: |S| minus the F2-rank of the
    classes of the S-primes in Gal(K(B)/k).

    For real quadratic fields Gal(K(B)/k) is the wide genus quotient by the
    Ram_f classes, computed by genus characters.  For ingested fields with
    type number 1 the group is trivial and nu = |S|; the handful of type
    number 2 algebras carry their S-class data in the fixture.
    """
    k = alg.field
    if not S:
        return 0
    if k.n == 2:
        ram_vecs = [k.genus_vec(P) for P in alg.ram_f]
        both = ram_vecs + [k.genus_vec(P) for P in S]
        return len(S) - (f2_rank(both) - f2_rank(ram_vecs))
    if type_number(alg) == 1:
        return len(S)
    rank = 1 if any((P.ell, P.tag) in alg.sclass_nontrivial for P in S) else 0
    return len(S) - rank


def min_covolume_bound(alg: AlgebraData) -> float:
    """Lower bound for covol(Gamma_O): the covolume formula with [K(B):k]
    replaced by 2^m h(k,2,B)."""
    from .quatdata import h_k2B

    k = alg.field
    coeff = Fraction(8 * k.d) * k.zeta2_coeff / Fraction(4**k.n)
    for P in alg.ram_f:
        coeff *= Fraction(P.norm - 1, 2)
    coeff /= (1 << k.m) * h_k2B(alg)
    return float(coeff) * math.pi**2


def is_admissible_covolume(covol: PiSquared, allow_unstable: bool) -> tuple[bool, int]:
    """Whether target/covol is a positive integer, target = 32 pi^2 when
    unstable groups are allowed and 16 pi^2 otherwise; returns the index."""
    target = Fraction(32 if allow_unstable else 16)
    q = target / covol.coeff
    if q.denominator == 1 and q >= 1:
        return True, int(q)
    return False, 0


def holomorphic_index(alg: AlgebraData, S: tuple[PrimeIdeal, ...] = ()) -> int:
    """Index of the maximal holomorphic stable group inside the maximal
    stable group, in {1, 2, 4}.

    Quadratic path: 4 iff some normalizer element has reduced norm of mixed
    sign at the two real places.  Units provide one when the fundamental unit
    has norm -1; otherwise the narrow classes of the primes dividing the
    discriminant-level product decide: the index is 4 exactly when the class
    of principal-with-mixed-generator ideals lies in the subgroup generated
    by narrow squares and those prime classes.
    """
    if alg.field.n != 2:
        if alg.hind_override is not None:
            return alg.hind_override
        return 4  # ingested default; nearly all Appendix entries are 4
    k = alg.field
    if k.m == 0:
        return 4
    group = k.narrow_group()
    gens = [group.square(i) for i in range(len(group.cycles))]
    for P in list(alg.ram_f) + list(S):
        if P.f == 2:
            continue  # inert primes are principal and totally positive
        gens.append(group.prime_class(P.ell))
    sub = group.subgroup(gens)
    return 4 if group.negative_identity() in sub else 2
