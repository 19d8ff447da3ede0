"""Golden-table fixtures: parsing, verification diffs, and rendering.

The fixture TSV carries one row per (degree, d, D, N, class): the exact
covolume coefficient as a reduced fraction, the holomorphic index, the
torsion lcm, the level exponent nu, and the stability star.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .enumeration import ClassRow


@dataclass(frozen=True)
class FixtureRow:
    degree: int
    d: int
    D: int
    N: int
    class_index: int
    vol: Fraction
    hind: int
    lcm: int
    nu: int
    st: bool

    def key(self):
        return (self.d, self.D, self.N, self.class_index)


class FixtureError(ValueError):
    pass


def load_appendix(path: str | Path) -> list[FixtureRow]:
    rows = []
    path = Path(path)
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 11:
            raise FixtureError(f"{path.name}:{lineno}: expected 11 columns, got {len(parts)}")
        try:
            degree, d, D, N, ci, vn, vd, hind, lcm, nu, st = parts
            rows.append(
                FixtureRow(
                    degree=int(degree),
                    d=int(d),
                    D=int(D),
                    N=int(N),
                    class_index=int(ci),
                    vol=Fraction(int(vn), int(vd)),
                    hind=int(hind),
                    lcm=int(lcm),
                    nu=int(nu),
                    st=(st.strip() in ("*", "star", "1")),
                )
            )
        except FixtureError:
            raise
        except Exception as exc:
            raise FixtureError(f"{path.name}:{lineno}: malformed row ({exc})") from exc
    return rows


@dataclass
class VerifyReport:
    degree: int
    missing: list  # in fixture, not produced
    extra: list  # produced, not in fixture
    mismatched: list  # (key, column, got, expected)

    @property
    def clean(self) -> bool:
        return not (self.missing or self.extra or self.mismatched)

    def render(self) -> str:
        lines = [f"verify degree={self.degree}: "
                 f"{'CLEAN' if self.clean else 'DIFFS FOUND'}"]
        for key in self.missing:
            lines.append(f"  missing row d={key[0]} D={key[1]} N={key[2]} class={key[3]}")
        for key in self.extra:
            lines.append(f"  extra row   d={key[0]} D={key[1]} N={key[2]} class={key[3]}")
        for key, col, got, exp in self.mismatched:
            lines.append(
                f"  mismatch    d={key[0]} D={key[1]} N={key[2]} class={key[3]}: "
                f"{col} got {got} expected {exp}"
            )
        return "\n".join(lines)


def verify_against_fixture(
    rows: list[ClassRow],
    fixture: list[FixtureRow],
    degree: int,
    columns: tuple[str, ...] = ("vol", "hind", "lcm", "nu", "st"),
) -> VerifyReport:
    """Three-way diff of an enumeration run against the fixture tables."""
    fx = {r.key(): r for r in fixture if r.degree == degree}
    got = {r.key(): r for r in rows if r.degree == degree}
    missing = sorted(k for k in fx if k not in got)
    extra = sorted(k for k in got if k not in fx)
    mismatched = []
    for key in sorted(set(fx) & set(got)):
        for col in columns:
            g = getattr(got[key], col)
            e = getattr(fx[key], col)
            if g != e:
                mismatched.append((key, col, g, e))
    return VerifyReport(degree=degree, missing=missing, extra=extra, mismatched=mismatched)


# ---------------------------------------------------------------------------
# emission


def _vol_str(vol: Fraction) -> str:
    return f"{vol.numerator}/{vol.denominator}" if vol.denominator != 1 else str(vol.numerator)


def emit_table(rows: list[ClassRow], fmt: str = "tsv") -> str:
    """Deterministic rendering ordered by (d, D, N, class)."""
    rows = sorted(rows, key=ClassRow.key)
    if fmt == "tsv":
        out = ["d\tD\tN\tvol\thind\tlcm\tnu\tst"]
        for r in rows:
            out.append(
                f"{r.d}\t{r.D}\t{r.N}\t{_vol_str(r.vol)}\t{r.hind}\t{r.lcm}\t{r.nu}\t"
                f"{'*' if r.st else ''}"
            )
        return "\n".join(out) + "\n"
    if fmt == "aligned":
        header = ("d", "D", "N", "vol", "hind", "lcm", "nu", "st")
        table = [header]
        for r in rows:
            table.append(
                (
                    str(r.d),
                    str(r.D),
                    str(r.N),
                    _vol_str(r.vol),
                    str(r.hind),
                    str(r.lcm),
                    str(r.nu),
                    "*" if r.st else "",
                )
            )
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def rows_to_fixture_tsv(rows: list[ClassRow]) -> str:
    """Serialize enumeration output in the fixture schema (fixture rebuilds)."""
    out = []
    for r in sorted(rows, key=ClassRow.key):
        out.append(
            "\t".join(
                str(x)
                for x in (
                    r.degree,
                    r.d,
                    r.D,
                    r.N,
                    r.class_index,
                    r.vol.numerator,
                    r.vol.denominator,
                    r.hind,
                    r.lcm,
                    r.nu,
                    "*" if r.st else "-",
                )
            )
        )
    return "\n".join(out) + "\n"
