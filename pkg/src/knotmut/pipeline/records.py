"""Knot records, ingestion and lazily computed invariants."""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from importlib.resources import files
from pathlib import Path
from typing import Any, Callable, Iterable

from .. import __version__
from ..diagram.dt import parse_dt, realize_dt
from ..diagram.goeritz import signature
from ..diagram.pd import DiagramError, PlanarDiagram, mirror, parse_pd
from ..khovanov.homology import khovanov
from ..skein.alexander import alexander
from ..skein.bracket import jones
from ..skein.skeintree import homfly, kauffman_poly

__all__ = [
    "ComputedInvariant",
    "KnotRecord",
    "IngestError",
    "MissingInvariantError",
    "ingest",
    "fixture_records",
    "fixture_names",
    "load_knot",
    "INVARIANTS",
    "ENGINE_VERSION",
]

ENGINE_VERSION = __version__


class IngestError(ValueError):
    """A knot or volume file could not be ingested; the message names file and line."""


class MissingInvariantError(LookupError):
    """A record lacks an invariant needed for classification."""


def _colored3(d):
    from ..coloredjones.colored import colored_jones

    return colored_jones(d, 3)


INVARIANTS: dict[str, Callable[[PlanarDiagram], Any]] = {
    "jones": jones,
    "alexander": alexander,
    "homfly": homfly,
    "kauffman": kauffman_poly,
    "signature": signature,
    "khovanov": khovanov,
    "reduced_khovanov": lambda d: khovanov(d, reduced=True),
    "colored_jones_3": _colored3,
}

# how each invariant changes under mirror image (verified against direct computation in the tests)
_MIRROR: dict[str, Callable[[Any], Any]] = {
    "jones": lambda v: v.substitute(-1),
    "alexander": lambda v: v,
    "homfly": lambda p: p.substitute(-1, 1),
    "kauffman": lambda f: f.substitute(-1, 1),
    "signature": lambda s: -s,
    "colored_jones_3": lambda v: v.substitute(-1),
}


@dataclass(frozen=True)
class ComputedInvariant:
    value: Any
    engine_version: str
    seconds: float


@dataclass
class KnotRecord:
    """A named knot with an ingested volume and a cache of computed invariants."""

    name: str
    diagram: PlanarDiagram
    volume: Decimal | None = None
    volume_digits: int | None = None
    source: str = ""
    invariants: dict[str, ComputedInvariant] = field(default_factory=dict, repr=False)
    mirror_of: KnotRecord | None = field(default=None, repr=False)

    def invariant(self, kind: str):
        """Value of invariant ``kind``, computed on first use and cached."""
        hit = self.invariants.get(kind)
        if hit is not None:
            return hit.value
        if kind not in INVARIANTS:
            raise KeyError(f"unknown invariant {kind!r}")
        t0 = time.perf_counter()
        if self.mirror_of is not None and kind in _MIRROR:
            value = _MIRROR[kind](self.mirror_of.invariant(kind))
        else:
            value = INVARIANTS[kind](self.diagram)
        self.invariants[kind] = ComputedInvariant(value, ENGINE_VERSION, time.perf_counter() - t0)
        return value

    def mirrored(self) -> KnotRecord:
        return KnotRecord(f"mirror({self.name})", mirror(self.diagram), self.volume, self.volume_digits,
                          self.source, mirror_of=self)

    def manifest(self) -> dict:
        return {k: {"engine_version": v.engine_version, "seconds": round(v.seconds, 3)}
                for k, v in self.invariants.items()}


_VOLUME = re.compile(r"^\s*(\S+)\s+(\S+)(?:\s+(\S+))?\s*$")


def _parse_volume(name: str, text: str, digits: str | None, where: str) -> tuple[Decimal, int]:
    try:
        vol = Decimal(text)
    except InvalidOperation:
        raise IngestError(f"{where}: malformed volume {text!r} for {name}") from None
    if not vol.is_finite() or vol < 0:
        raise IngestError(f"{where}: malformed volume {text!r} for {name}")
    if digits is None:
        sig = len(vol.as_tuple().digits)
    else:
        try:
            sig = int(digits)
        except ValueError:
            raise IngestError(f"{where}: malformed significant-digit count {digits!r} for {name}") from None
    return vol, sig


def _read_pd(path: Path) -> tuple[str, PlanarDiagram]:
    text = path.read_text()
    name = path.stem
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("#"):
            head = s[1:].strip()
            if head and ":" not in head and " " not in head:
                name = head
            break
    try:
        return name, parse_pd(text)
    except DiagramError as exc:
        raise IngestError(f"{path}: {exc}") from None


def _read_dt(path: Path) -> list[tuple[str, PlanarDiagram, int]]:
    out = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        s = line.split("#", 1)[0].strip()
        if not s:
            continue
        try:
            code = parse_dt(s)
            out.append((code.name or f"{path.stem}:{lineno}", realize_dt(code), lineno))
        except DiagramError as exc:
            raise IngestError(f"{path}:{lineno}: {exc}") from None
    return out


def _read_volumes(path: Path) -> list[tuple[str, str, str | None, int]]:
    out = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        s = line.split("#", 1)[0].strip()
        if not s:
            continue
        m = _VOLUME.match(s)
        if not m:
            raise IngestError(f"{path}:{lineno}: expected '<name> <volume> <digits>'")
        out.append((m.group(1), m.group(2), m.group(3), lineno))
    return out


def _kind(path: Path) -> str:
    suffix = path.suffix.lower()
    if suffix == ".pd":
        return "pd"
    if suffix == ".dt":
        return "dt"
    if suffix in (".vol", ".volumes") or path.stem.lower().startswith("volume"):
        return "volumes"
    raise IngestError(f"{path}: unknown file type (expected .pd, .dt or a volumes file)")


def ingest(paths: Iterable[str | Path]) -> list[KnotRecord]:
    """Read PD files (one knot each), DT files and volume files into records.

    Volumes attach to records by name; a volume for an unknown knot or a
    repeated name is an error.
    """
    records: dict[str, KnotRecord] = {}
    volumes = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            children = sorted(c for c in path.iterdir() if c.is_file())
            for c in children:
                try:
                    _kind(c)
                except IngestError:
                    continue
                volumes += _ingest_one(c, records)
            continue
        volumes += _ingest_one(path, records)
    for name, text, digits, where in volumes:
        rec = records.get(name)
        if rec is None:
            raise IngestError(f"{where}: volume given for unknown knot {name}")
        if rec.volume is not None:
            raise IngestError(f"{where}: second volume for {name}")
        rec.volume, rec.volume_digits = _parse_volume(name, text, digits, where)
    return list(records.values())


def _ingest_one(path: Path, records: dict[str, KnotRecord]) -> list:
    if not path.exists():
        raise IngestError(f"{path}: no such file")
    kind = _kind(path)
    if kind == "volumes":
        return [(n, v, dg, f"{path}:{ln}") for n, v, dg, ln in _read_volumes(path)]
    if kind == "pd":
        items = [(*_read_pd(path), 0)]
    else:
        items = _read_dt(path)
    for name, d, lineno in items:
        if name in records:
            raise IngestError(f"{path}{':' + str(lineno) if lineno else ''}: duplicate knot name {name}")
        records[name] = KnotRecord(name, d, source=str(path))
    return []


def _data_dir():
    return files("knotmut.data")


def fixture_names() -> list[str]:
    return sorted(p.name[:-3] for p in (_data_dir() / "knots").iterdir() if p.name.endswith(".pd"))


def fixture_records(with_volumes: bool = True) -> list[KnotRecord]:
    """The ten bundled knots, with their published volumes."""
    knots = _data_dir() / "knots"
    paths = [Path(str(knots / f"{n}.pd")) for n in fixture_names()]
    if with_volumes:
        paths.append(Path(str(_data_dir() / "volumes.txt")))
    return ingest(paths)


def load_knot(spec: str) -> tuple[str, PlanarDiagram]:
    """Resolve a CLI knot argument: fixture name, file path, PD text or ``DT ...`` text."""
    s = spec.strip()
    if s in fixture_names():
        return s, parse_pd((_data_dir() / "knots" / f"{s}.pd").read_text())
    path = Path(s)
    if path.suffix.lower() in (".pd", ".dt") and path.exists():
        if path.suffix.lower() == ".pd":
            return _read_pd(path)
        items = _read_dt(path)
        if len(items) != 1:
            raise IngestError(f"{path}: expected exactly one DT code")
        return items[0][0], items[0][1]
    if s.upper().startswith("DT"):
        code = parse_dt(s[2:].strip(" :"))
        return code.name or "knot", realize_dt(code)
    if "X" in s.upper():
        return "knot", parse_pd(s)
    if re.fullmatch(r"[\s\-\d]+", s):
        return "knot", realize_dt(parse_dt(s))
    raise IngestError(f"cannot interpret knot argument {spec!r}")
