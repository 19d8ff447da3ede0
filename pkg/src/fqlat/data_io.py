"""Bundled data directory: locating, loading, and validating the shipped
tables (field records, Appendix fixtures, Odlyzko bounds, reconciliation
overrides, algebra class data).

The default directory ships inside the package; FQLAT_DATA or --data
overrides it.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field
from pathlib import Path

from .enumeration import AlgebraClassSpec


class DataError(ValueError):
    pass


def default_data_dir() -> Path:
    return Path(__file__).resolve().parent / "data"


def resolve_data_dir(override: str | os.PathLike | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get("FQLAT_DATA")
    if env:
        return Path(env)
    return default_data_dir()


REQUIRED_FILES = ("appendix_tables.tsv", "odlyzko.tsv", "fields.tsv")
OPTIONAL_FILES = ("lcm_overrides.tsv", "suppressed_rows.tsv", "algebra_classes.tsv")


def file_digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()[:16]


def _rows(path: Path):
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line.split("\t")


def load_lcm_overrides(path: Path) -> dict:
    out: dict = {}
    if not path.exists():
        return out
    for lineno, parts in _rows(path):
        if len(parts) != 6:
            raise DataError(f"{path.name}:{lineno}: expected 6 columns")
        degree, d, D, N, ci, lcm = (int(x) for x in parts)
        out[(d, D, N, ci)] = {"lcm": lcm, "degree": degree}
    return out


def load_suppressed(path: Path) -> set:
    out: set = set()
    if not path.exists():
        return out
    for lineno, parts in _rows(path):
        if len(parts) != 5:
            raise DataError(f"{path.name}:{lineno}: expected 5 columns")
        degree, d, D, N, ci = (int(x) for x in parts)
        out.add((d, D, N, ci))
    return out


def _parse_dict(spec: str) -> dict | None:
    """Parse 'N:val,N:val' with '*' wildcards into a dict, '-' -> None."""
    if not spec or spec == "-":
        return None
    out: dict = {}
    for chunk in spec.split(","):
        key, val = chunk.split(":")
        k = "*" if key == "*" else int(key)
        out[k] = val
    return out


def load_algebra_classes(path: Path) -> dict:
    """Per (d, D) ingested class lists for degree >= 3 algebras.

    Columns: degree d D class_index type_number hind stable sclass allowed_N
    with '-' marking defaults; hind/stable are 'N:val' lists ('*' wildcard),
    sclass a ';'-separated list of ell.tag keys with nontrivial class in
    Gal(K(B)/k), allowed_N a comma list of level norms.
    """
    out: dict = {}
    if not path.exists():
        return out
    for lineno, parts in _rows(path):
        if len(parts) != 9:
            raise DataError(f"{path.name}:{lineno}: expected 9 columns")
        degree, d, D, ci, tnum, hind, stable, sclass, allowed = parts
        hind_map = _parse_dict(hind)
        if hind_map:
            hind_map = {k: int(v) for k, v in hind_map.items()}
        stable_map = _parse_dict(stable)
        if stable_map:
            stable_map = {k: v in ("1", "*", "star", "True") for k, v in stable_map.items()}
        sset = frozenset(
            (int(e.split(".")[0]), int(e.split(".")[1])) for e in sclass.split(";") if e and e != "-"
        )
        allowed_set = None
        if allowed and allowed != "-":
            allowed_set = {int(x) for x in allowed.split(",")}
        spec = AlgebraClassSpec(
            class_index=int(ci),
            type_number=None if tnum == "-" else int(tnum),
            hind=hind_map,
            stable=stable_map,
            sclass=sset,
            allowed_N=allowed_set,
        )
        out.setdefault((int(d), int(D)), []).append(spec)
    return out


@dataclass
class DataDir:
    root: Path
    digests: dict = field(default_factory=dict)

    @classmethod
    def load(cls, override=None, require_all: bool = False) -> "DataDir":
        root = resolve_data_dir(override)
        if not root.is_dir():
            raise DataError(f"data directory {root} does not exist")
        dd = cls(root=root)
        for name in REQUIRED_FILES + OPTIONAL_FILES:
            p = root / name
            if p.exists():
                dd.digests[name] = file_digest(p)
            elif require_all and name in REQUIRED_FILES:
                raise DataError(f"missing required data file {name} in {root}")
        return dd

    def path(self, name: str) -> Path:
        return self.root / name

    def appendix(self):
        from .appendix import load_appendix

        return load_appendix(self.path("appendix_tables.tsv"))

    def fields(self, verify: bool = True, euler_limit: int = 20000):
        from .fields import ingest_field_table

        return ingest_field_table(self.path("fields.tsv"), verify=verify, euler_limit=euler_limit)

    def lcm_overrides(self) -> dict:
        return load_lcm_overrides(self.path("lcm_overrides.tsv"))

    def suppressed(self) -> set:
        return load_suppressed(self.path("suppressed_rows.tsv"))

    def algebra_classes(self) -> dict:
        return load_algebra_classes(self.path("algebra_classes.tsv"))

    def odlyzko(self):
        from .bounds import load_odlyzko_table

        return load_odlyzko_table(self.path("odlyzko.tsv"))
