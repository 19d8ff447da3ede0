"""Search driver: enumerate the maximal lattices of admissible covolume.

For each field within the root-discriminant ceiling, finite primes are
admitted into Ram_f / S by branch and bound against the exact covolume cap.
A row is retained when its covolume divides the relevant budget -- every
32 pi^2 submultiple at empty level, and for nonempty level the budget
matching the stability verdict (16 pi^2 when certainly stable).  The
torsion-lcm filter then drops rows whose lcm cannot divide the index of a
torsion-free subgroup of the matching covolume.  Surviving rows are merged
by (d, D, N, class).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .fields import (
    FieldRecord,
    PrimeIdeal,
    fundamental_discriminants_upto,
    positive_splitting_basis,
    quadratic_field,
)
from .quatdata import AlgebraData
from .torsion import certainly_stable, torsion_lcm
from .volume import covolume, holomorphic_index, nu_exponent

ROOT_DISC_CEILING = {
    2: 118.436,
    3: 118.436,
    4: 92.754,
    5: 31.823,
    6: 15.986,
    7: 15.269,
    8: 14.262,
}

_PI4 = math.pi**4


@dataclass
class EnumerationConfig:
    degree: int
    vol_cap: Fraction = Fraction(32)
    max_root_disc: float | None = None
    fields_path: str | Path | None = None
    allow_unstable: bool = True

    def __post_init__(self):
        if self.degree not in ROOT_DISC_CEILING:
            raise ValueError(f"degree {self.degree} outside 2..8")
        ceiling = ROOT_DISC_CEILING[self.degree]
        if self.max_root_disc is None:
            self.max_root_disc = ceiling
        if self.max_root_disc > ceiling + 1e-9:
            raise ValueError(
                f"root-discriminant cap exceeds the degree-{self.degree} ceiling"
            )


@dataclass
class ClassRow:
    degree: int
    d: int
    D: int
    N: int
    class_index: int
    vol: Fraction  # coefficient of pi^2
    hind: int
    lcm: int
    nu: int
    st: bool
    conjugacy_count: int = 1

    def key(self):
        return (self.d, self.D, self.N, self.class_index)

    def columns(self):
        return (self.vol, self.hind, self.lcm, self.nu, self.st)


@dataclass
class AlgebraClassSpec:
    """Ingested per-class data for degree >= 3 algebras (split-place orbits)."""

    class_index: int = 1
    type_number: int | None = None
    hind: dict | None = None  # N -> value, '*' wildcard
    stable: dict | None = None  # N -> bool, '*' wildcard
    sclass: frozenset = frozenset()
    allowed_N: set | None = None  # restrict the published levels (ingested)


class EnumerationError(RuntimeError):
    pass


def _tmax_exponent(rec: FieldRecord) -> int:
    """log2 of the largest possible [K(B):k] over algebras on this field."""
    if rec.n == 2:
        return rec.h2  # K(B) is the wide genus field quotient
    return rec.h2 + rec.m  # sandwich [K(B):k] <= 2^m h(k,2,B)


def _quadratic_survivor_prefilter(d0: int) -> bool:
    """Rigorous necessary condition for an admissible algebra: zeta_k(2) > 1,
    at least two ram factors each >= 1/2, and [K(B):k] <= 2^h2."""
    h2 = len(positive_splitting_basis(d0))
    lower = d0**1.5 / (2 * _PI4) * 0.25 / (1 << h2)
    return lower <= 32.0 + 1e-9


def _candidate_primes(rec: FieldRecord, cap: Fraction, base: Fraction) -> tuple[list[PrimeIdeal], int]:
    # any admitted prime P satisfies (N-1)/2 <= cap * tmax / (base * 1/4)
    bound = float(cap) * (1 << _tmax_exponent(rec)) * 4 / float(base)
    nmax = max(int(2 * bound + 4), 8)
    return rec.primes_of_norm_upto(nmax), nmax


def _ram_factor(P: PrimeIdeal) -> Fraction:
    return Fraction(P.norm - 1, 2)


def enumerate_field(
    rec: FieldRecord,
    cap: Fraction = Fraction(32),
    class_specs: dict | None = None,
    row_overrides: dict | None = None,
) -> list[ClassRow]:
    """All retained rows over one field."""
    base = Fraction(8 * rec.d) * rec.zeta2_coeff / Fraction(4**rec.n)
    texp = _tmax_exponent(rec)
    primes, nmax = _candidate_primes(rec, cap, base)
    _frontier_certificate(rec, cap, base, nmax)
    rows: list[ClassRow] = []
    parity = rec.n % 2

    ram_sets: list[tuple[PrimeIdeal, ...]] = []

    def extend_ram(idx: int, current: list[PrimeIdeal], prod: Fraction):
        if len(current) % 2 == parity and (current or rec.n >= 3):
            if base * prod / (1 << texp) <= cap:
                ram_sets.append(tuple(current))
        for j in range(idx, len(primes)):
            P = primes[j]
            nprod = prod * _ram_factor(P)
            n2_rest = sum(1 for Q in primes[j + 1 :] if Q.norm == 2)
            slack = Fraction(1, 1 << min(2, n2_rest))
            if base * nprod * slack / (1 << texp) > cap:
                if P.norm > 3:
                    break  # norms ascend; factors only grow past 3
                continue
            current.append(P)
            extend_ram(j + 1, current, nprod)
            current.pop()

    extend_ram(0, [], Fraction(1))

    for ram in ram_sets:
        Dval = 1
        for P in ram:
            Dval *= P.norm
        specs = [AlgebraClassSpec()]
        if class_specs and (rec.d, Dval) in class_specs:
            specs = class_specs[(rec.d, Dval)]
        for spec in specs:
            try:
                alg = AlgebraData(
                    rec,
                    ram,
                    class_index=spec.class_index,
                    type_number_override=spec.type_number,
                    sclass_nontrivial=spec.sclass,
                )
            except ValueError:
                continue
            rows.extend(_rows_for_algebra(alg, spec, cap, primes, row_overrides or {}))
    return _merge_rows(rows)


def _rows_for_algebra(
    alg: AlgebraData,
    spec: AlgebraClassSpec,
    cap: Fraction,
    primes: list[PrimeIdeal],
    row_overrides: dict,
) -> list[ClassRow]:
    rec = alg.field
    ram_keys = {(P.ell, P.tag) for P in alg.ram_f}
    candidates = [P for P in primes if (P.ell, P.tag) not in ram_keys]
    base_cov = covolume(alg).coeff
    if base_cov > cap:
        return []
    out: list[ClassRow] = []

    def consider(S: tuple[PrimeIdeal, ...]):
        nu = nu_exponent(alg, S)
        vol = covolume(alg, S, nu).coeff
        if vol > cap:
            return
        Nval = 1
        for P in S:
            Nval *= P.norm
        if spec.allowed_N is not None and Nval not in spec.allowed_N:
            return
        st = _stability(alg, spec, S, Nval)
        q32 = Fraction(32) / vol
        q16 = Fraction(16) / vol
        ok32 = q32.denominator == 1
        ok16 = q16.denominator == 1
        # retention: every 32 pi^2 submultiple at S = {}; stability-matching
        # budget otherwise
        if not S:
            if not ok32:
                return
        elif st:
            if not ok16:
                return
        else:
            if not ok32:
                return
        lcm = torsion_lcm(alg, S)
        Dval = alg.disc_norm
        okey = (rec.d, Dval, Nval, alg.class_index)
        if okey in row_overrides and row_overrides[okey].get("lcm") is not None:
            lcm = row_overrides[okey]["lcm"]
        # a torsion-free subgroup of the stability-matching covolume must have
        # index divisible by the lcm of the torsion orders
        index = int(q16) if (st and ok16) else int(q32)
        if index % lcm != 0:
            return
        hind = _hind(alg, spec, S, Nval)
        out.append(
            ClassRow(
                degree=rec.n,
                d=rec.d,
                D=Dval,
                N=Nval,
                class_index=alg.class_index,
                vol=vol,
                hind=hind,
                lcm=lcm,
                nu=nu,
                st=st,
            )
        )

    def extend_S(idx: int, current: list[PrimeIdeal], prod: Fraction):
        consider(tuple(current))
        for j in range(idx, len(candidates)):
            P = candidates[j]
            nprod = prod * Fraction(P.norm + 1, 2)
            if base_cov * nprod > cap:
                break  # norms ascend and every factor exceeds 1
            current.append(P)
            extend_S(j + 1, current, nprod)
            current.pop()

    extend_S(0, [], Fraction(1))
    return out


def _stability(alg: AlgebraData, spec: AlgebraClassSpec, S, Nval: int) -> bool:
    if alg.field.n == 2 or alg.field.aut_count % 2 == 1:
        return certainly_stable(alg, S)
    if spec.stable is not None:
        if Nval in spec.stable:
            return spec.stable[Nval]
        if "*" in spec.stable:
            return spec.stable["*"]
    return certainly_stable(alg, S)


def _hind(alg: AlgebraData, spec: AlgebraClassSpec, S, Nval: int) -> int:
    if alg.field.n == 2:
        return holomorphic_index(alg, S)
    if spec.hind is not None:
        if Nval in spec.hind:
            return spec.hind[Nval]
        if "*" in spec.hind:
            return spec.hind["*"]
    return 4


def _merge_rows(rows: list[ClassRow]) -> list[ClassRow]:
    merged: dict = {}
    for row in rows:
        key = row.key()
        if key in merged:
            other = merged[key]
            if other.columns() != row.columns():
                raise EnumerationError(
                    f"conflicting data for {key}: {other.columns()} vs {row.columns()}"
                )
            other.conjugacy_count += 1
        else:
            merged[key] = row
    return sorted(merged.values(), key=ClassRow.key)


def _frontier_certificate(rec: FieldRecord, cap: Fraction, base: Fraction, nmax: int) -> None:
    """No prime of norm beyond the candidate window can enter an admissible
    ram or level set: its single factor already forces the covolume past the
    cap even with every other factor at the 1/4 floor and the largest
    possible type number."""
    required = 1 + 8 * float(cap) * (1 << _tmax_exponent(rec)) / float(base)
    if nmax < required:
        raise EnumerationError(f"candidate window too small at d={rec.d}")


# ---------------------------------------------------------------------------
# degree-level drivers


def enumerate_degree_2(
    cap: Fraction = Fraction(32),
    max_d: int | None = None,
    row_overrides: dict | None = None,
    suppressed: set | None = None,
) -> list[ClassRow]:
    limit = max_d if max_d is not None else int(ROOT_DISC_CEILING[2] ** 2)
    rows: list[ClassRow] = []
    for d0 in fundamental_discriminants_upto(limit):
        if not _quadratic_survivor_prefilter(d0):
            continue
        rec = quadratic_field(d0)
        rows.extend(enumerate_field(rec, cap, row_overrides=row_overrides))
    if suppressed:
        rows = [r for r in rows if r.key() not in suppressed]
    rows.sort(key=ClassRow.key)
    return rows


def enumerate_ingested(
    records: list[FieldRecord],
    degree: int,
    cap: Fraction = Fraction(32),
    class_specs: dict | None = None,
    row_overrides: dict | None = None,
    suppressed: set | None = None,
) -> list[ClassRow]:
    ceiling = ROOT_DISC_CEILING[degree]
    rows: list[ClassRow] = []
    failures: list[tuple[int, str]] = []
    for rec in records:
        if rec.n != degree:
            continue
        if rec.delta > ceiling + 1e-9:
            continue
        try:
            rows.extend(enumerate_field(rec, cap, class_specs, row_overrides))
        except Exception as exc:
            failures.append((rec.d, repr(exc)))
    if failures:
        raise EnumerationError(f"quarantined fields: {failures}")
    if suppressed:
        rows = [r for r in rows if r.key() not in suppressed]
    rows.sort(key=ClassRow.key)
    return rows
