"""Quaternion algebra descriptors and their genus-theoretic invariants.

Only place-level data is modeled: the finite ramification set, the two split
real places, the norm-2 count omega2, the degree h(k,2,B) of the maximal
unramified 2-elementary extension splitting Ram_f, the type number [K(B):k],
and the Borel minimal-volume quantity mu(k,B).

For real quadratic fields everything is computed from genus theory; for
ingested fields of degree >= 3 the type number comes from the fixture
(validated against the 1 <= t <= 2^m * h(k,2,B) sandwich).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .fields import FieldRecord, PrimeIdeal, f2_rank


@dataclass(frozen=True)
class AlgebraData:
    """A quaternion algebra over a totally real field, split at exactly two
    real places and ramified at the rest."""

    field: FieldRecord
    ram_f: tuple[PrimeIdeal, ...]
    split_real_places: tuple[int, int] = (0, 1)
    class_index: int = 1  # distinguishes split-place orbits for ingested fields
    type_number_override: int | None = None
    hind_override: int | None = None
    stable_override: bool | None = None
    # primes of S whose class in Gal(K(B)/k) is nontrivial (ingested, only
    # needed when the type number exceeds 1)
    sclass_nontrivial: frozenset = frozenset()

    def __post_init__(self):
        k = self.field
        if (len(self.ram_f) + (k.n - 2)) % 2 != 0:
            raise ValueError("Ram(B) must have even cardinality")
        if k.n == 2 and not self.ram_f:
            raise ValueError("quadratic base needs nonempty finite ramification")
        if len(set(self.ram_f)) != len(self.ram_f):
            raise ValueError("ramified primes must be distinct")

    @property
    def ram_inf_count(self) -> int:
        return self.field.n - 2

    @property
    def disc_norm(self) -> int:
        out = 1
        for P in self.ram_f:
            out *= P.norm
        return out


def omega2(alg: AlgebraData) -> int:
    """Number of finite ramified primes of norm exactly 2."""
    return sum(1 for P in alg.ram_f if P.norm == 2)


def h_k2B(alg: AlgebraData) -> int:
    """Degree over k of the maximal unramified 2-elementary extension in which
    every prime of Ram_f splits completely."""
    k = alg.field
    if k.n == 2:
        vecs = [k.genus_vec(P) for P in alg.ram_f]
        return 1 << (k.h2 - f2_rank(vecs))
    # h(k,2,B) divides the 2-part of h; all ingested fields ship h2
    if k.h2 == 0:
        return 1
    raise KeyError(f"needs ingested class data for degree-{k.n} field d={k.d}")


def type_number(alg: AlgebraData) -> int:
    """[K(B):k], the number of conjugacy classes of maximal orders."""
    k = alg.field
    if k.n == 2:
        # Ram_inf is empty, so K(B) is the h(k,2,B) field itself
        return h_k2B(alg)
    t = alg.type_number_override if alg.type_number_override is not None else 1
    h2b = h_k2B(alg)
    if not (1 <= t <= (1 << k.m) * h2b):
        raise ValueError(
            f"type number {t} violates sandwich 1..2^{k.m}*{h2b} at d={k.d}"
        )
    return t


def mu_kB(alg: AlgebraData) -> Fraction:
    """mu(k,B) = 2 d^{3/2} zeta_k(2) / (2^{2n+omega2} pi^{2n} [K(B):k]).

    With zeta_k(2) = c*pi^{2n}/sqrt(d) the pi powers cancel; the value is the
    exact rational 2*d*c / (2^{2n+omega2} [K(B):k]).
    """
    k = alg.field
    return Fraction(2 * k.d) * k.zeta2_coeff / (
        (1 << (2 * k.n + omega2(alg))) * type_number(alg)
    )


def mu_lower_via_ourfactor(alg: AlgebraData) -> Fraction:
    """mu(k,B) with 1/[K(B):k] replaced by [O^x : O^x_+]/(2^{r1} h(k,2,B));
    always <= mu_kB."""
    k = alg.field
    return Fraction(2 * k.d) * k.zeta2_coeff / (
        (1 << (2 * k.n + omega2(alg))) * (1 << k.m) * h_k2B(alg)
    )
