"""Loader for the shipped reference table.

The file is a small sectioned text format (see ``data/reference_cases.txt``).
Every row is checked on load: genera and primitive genera must agree with the
values computed from the weights, so a corrupted table fails loudly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .classify import anticanonical_genus, primitive_genus
from .grading import DomainError, WeightedSpace

SUPPORTED_VERSION = 1


class ReferenceDataError(ValueError):
    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


@dataclass(frozen=True)
class GorensteinRow:
    row: int
    weights: WeightedSpace
    extendable: bool
    maximal_extension: str


@dataclass(frozen=True)
class ReferenceCase:
    case_id: int
    weights: WeightedSpace
    i_s: int
    g: int
    g_c: int
    alpha: int
    sing_s: str
    dim_y: int
    extension_description: str


@dataclass(frozen=True)
class VeroneseRow:
    case_id: int
    n: int
    target: tuple[int, ...]
    names: tuple[str, ...]
    relation: str
    degree: int


@dataclass(frozen=True)
class ModelRow:
    label: str
    case_id: int
    ambient: tuple[int, ...]
    equation_degrees: tuple[int, ...]
    polarization: int
    base_dim: int
    printed_degree: int | None

    @property
    def is_maximal_model(self) -> bool:
        return self.label == str(self.case_id)


@dataclass(frozen=True)
class ReferenceData:
    source: str
    version: int
    gorenstein: tuple[GorensteinRow, ...]
    cases: dict[int, ReferenceCase] = field(hash=False)
    veronese: dict[int, VeroneseRow] = field(hash=False)
    models: tuple[ModelRow, ...]

    def models_for(self, case_id: int) -> list[ModelRow]:
        return [m for m in self.models if m.case_id == case_id]


_COLUMNS = {"gorenstein": 4, "cases": 9, "veronese": 6, "models": 7}


def _ints(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not all(p.isdigit() for p in parts):
        raise ValueError(f"expected comma-separated positive integers, got {text!r}")
    return tuple(int(p) for p in parts)


def _int(text: str) -> int:
    text = text.strip()
    if not text.lstrip("-").isdigit():
        raise ValueError(f"expected an integer, got {text!r}")
    return int(text)


def _parse_row(section: str, f: list[str]):
    if section == "gorenstein":
        if f[2] not in ("yes", "no"):
            raise ValueError(f"extendable must be yes/no, got {f[2]!r}")
        return GorensteinRow(_int(f[0]), WeightedSpace(_ints(f[1])), f[2] == "yes", f[3])
    if section == "cases":
        case = ReferenceCase(
            case_id=_int(f[0]),
            weights=WeightedSpace(_ints(f[1])),
            i_s=_int(f[2]),
            g=_int(f[3]),
            g_c=_int(f[4]),
            alpha=_int(f[5]),
            sing_s=f[6],
            dim_y=_int(f[7]),
            extension_description=f[8],
        )
        _check_case(case)
        return case
    if section == "veronese":
        names = tuple(x.strip() for x in f[3].split(","))
        return VeroneseRow(_int(f[0]), _int(f[1]), _ints(f[2]), names, f[4], _int(f[5]))
    printed = None if f[6] == "-" else _int(f[6])
    return ModelRow(f[0], _int(f[1]), _ints(f[2]), _ints(f[3]), _int(f[4]), _int(f[5]), printed)


def _check_case(case: ReferenceCase) -> None:
    if not 9 <= case.case_id <= 14:
        raise ValueError(f"case id must be in 9..14, got {case.case_id}")
    g = anticanonical_genus(case.weights)
    if case.g != g:
        raise ValueError(f"case {case.case_id}: genus {case.g} disagrees with computed {g}")
    try:
        gc = primitive_genus(g, case.i_s)
    except DomainError as exc:
        raise ValueError(f"case {case.case_id}: {exc}") from None
    if case.g_c != gc:
        raise ValueError(f"case {case.case_id}: primitive genus {case.g_c} disagrees with computed {gc}")


def parse_reference(text: str, source: str = "<string>") -> ReferenceData:
    version = None
    section = None
    rows: dict[str, list] = {k: [] for k in _COLUMNS}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("version:"):
            try:
                version = int(line.split(":", 1)[1])
            except ValueError:
                raise ReferenceDataError(source, lineno, f"bad version line {line!r}") from None
            if version != SUPPORTED_VERSION:
                raise ReferenceDataError(source, lineno, f"unsupported version {version}")
            continue
        if line.startswith("["):
            name = line.strip("[]")
            if name not in _COLUMNS:
                raise ReferenceDataError(source, lineno, f"unknown section {line}")
            section = name
            continue
        if section is None:
            raise ReferenceDataError(source, lineno, "data row outside of any section")
        fields = [x.strip() for x in line.split("|")]
        if len(fields) != _COLUMNS[section]:
            raise ReferenceDataError(
                source, lineno, f"[{section}] rows need {_COLUMNS[section]} fields, got {len(fields)}"
            )
        try:
            rows[section].append(_parse_row(section, fields))
        except ValueError as exc:
            raise ReferenceDataError(source, lineno, str(exc)) from None
    if version is None:
        raise ReferenceDataError(source, 0, "missing version line")
    cases = {c.case_id: c for c in rows["cases"]}
    if len(cases) != len(rows["cases"]):
        raise ReferenceDataError(source, 0, "duplicate case ids")
    return ReferenceData(
        source=source,
        version=version,
        gorenstein=tuple(rows["gorenstein"]),
        cases=cases,
        veronese={v.case_id: v for v in rows["veronese"]},
        models=tuple(rows["models"]),
    )


def load_reference(path: str | Path | None = None) -> ReferenceData:
    if path is None:
        return _default_reference()
    p = Path(path)
    return parse_reference(p.read_text(encoding="utf-8"), str(p))


@lru_cache(maxsize=1)
def _default_reference() -> ReferenceData:
    res = resources.files("wps3") / "data" / "reference_cases.txt"
    return parse_reference(res.read_text(encoding="utf-8"), "reference_cases.txt")
