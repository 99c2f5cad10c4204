"""Bigraded abelian groups and the ``a_{j}^{i}`` rank/torsion notation.

A term ``a_{j}^{i}`` in a ranks string means a free summand of rank ``a``
in homological degree ``i`` and quantum degree ``j``.  In a torsion
string it means ``a`` copies of ``Z/2``; other orders are written
``a_{j}^{i}[k]`` for ``a`` copies of ``Z/k``.  Negative degrees may be
written with a minus sign or as ``\\underline{n}``.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..skein.laurent import LaurentPoly

__all__ = ["BigradedGroups", "KhDifference", "format_kh", "parse_kh", "kh_diff"]

Bidegree = tuple[int, int]


@dataclass(frozen=True)
class BigradedGroups:
    """``(i, j) -> (free rank, torsion orders)``; zero groups are not stored."""

    groups: Mapping[Bidegree, tuple[int, tuple[int, ...]]] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), (rank, tors) in self.groups.items():
            tors = tuple(sorted(int(t) for t in tors))
            if rank < 0 or any(t < 2 for t in tors):
                raise ValueError(f"invalid group at {(i, j)}: rank {rank}, torsion {tors}")
            if rank or tors:
                clean[(int(i), int(j))] = (int(rank), tors)
        object.__setattr__(self, "groups", dict(sorted(clean.items())))

    @classmethod
    def from_tables(cls, ranks: Mapping[Bidegree, int], torsion: Mapping[Bidegree, Iterable[int]] = ()) -> BigradedGroups:
        torsion = dict(torsion)
        keys = set(ranks) | set(torsion)
        return cls({k: (ranks.get(k, 0), tuple(torsion.get(k, ()))) for k in keys})

    def rank(self, i: int, j: int) -> int:
        return self.groups.get((i, j), (0, ()))[0]

    def torsion(self, i: int, j: int) -> tuple[int, ...]:
        return self.groups.get((i, j), (0, ()))[1]

    @property
    def ranks(self) -> dict[Bidegree, int]:
        return {k: r for k, (r, _) in self.groups.items() if r}

    @property
    def torsion_table(self) -> dict[Bidegree, tuple[int, ...]]:
        return {k: t for k, (_, t) in self.groups.items() if t}

    def euler_characteristic(self) -> LaurentPoly:
        """``sum (-1)^i rank(i, j) q^j``."""
        terms: dict[int, int] = {}
        for (i, j), (r, _) in self.groups.items():
            terms[j] = terms.get(j, 0) + (-1) ** (i % 2) * r
        return LaurentPoly(terms, "q")

    def mirror_ranks(self) -> dict[Bidegree, int]:
        return {(-i, -j): r for (i, j), r in self.ranks.items()}

    def total_rank(self) -> int:
        return sum(r for r, _ in self.groups.values())

    def to_json(self) -> dict:
        return {"groups": [[i, j, r, list(t)] for (i, j), (r, t) in self.groups.items()]}

    @classmethod
    def from_json(cls, data) -> BigradedGroups:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({(i, j): (r, tuple(t)) for i, j, r, t in data["groups"]})

    def __str__(self):
        ranks, tors = format_kh(self)
        return f"ranks: {ranks}\ntorsion: {tors}"


def format_kh(g: BigradedGroups) -> tuple[str, str]:
    """Serialize as ``(ranks string, torsion string)``, terms sorted by ``(i, j)``."""
    ranks = " ".join(f"{r}_{{{j}}}^{{{i}}}" for (i, j), (r, _) in g.groups.items() if r)
    tparts = []
    for (i, j), (_, tors) in g.groups.items():
        for order, mult in sorted(Counter(tors).items()):
            suffix = "" if order == 2 else f"[{order}]"
            tparts.append(f"{mult}_{{{j}}}^{{{i}}}{suffix}")
    return ranks, " ".join(tparts)


_NUM = r"(?:\\underline\{\s*\d+\s*\}|-?\d+)"
_TERM = re.compile(
    r"(\d+)\s*_\s*(\{\s*" + _NUM + r"\s*\}|-?\d)\s*\^\s*(\{\s*" + _NUM + r"\s*\}|-?\d)(?:\[(\d+)\])?"
)


def _num(text: str) -> int:
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1].strip()
    m = re.fullmatch(r"\\underline\{\s*(\d+)\s*\}", text)
    if m:
        return -int(m.group(1))
    return int(text)


def _terms(text: str):
    text = text.replace("$", " ").replace(r"\,", " ")
    pos = 0
    out = []
    for m in _TERM.finditer(text):
        gap = text[pos:m.start()].strip()
        if gap:
            raise ValueError(f"unexpected text {gap!r} in Khovanov string")
        out.append((int(m.group(1)), _num(m.group(2)), _num(m.group(3)), int(m.group(4) or 2)))
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"unexpected text {text[pos:].strip()!r} in Khovanov string")
    return out


def parse_kh(ranks: str, torsion: str = "") -> BigradedGroups:
    """Inverse of :func:`format_kh`; also accepts the LaTeX ``\\underline`` form."""
    rk: dict[Bidegree, int] = {}
    for a, j, i, _ in _terms(ranks):
        rk[(i, j)] = rk.get((i, j), 0) + a
    tor: dict[Bidegree, list[int]] = {}
    for a, j, i, order in _terms(torsion):
        tor.setdefault((i, j), []).extend([order] * a)
    return BigradedGroups.from_tables(rk, tor)


@dataclass(frozen=True)
class KhDifference:
    i: int
    j: int
    rank1: int
    rank2: int
    torsion1: tuple[int, ...]
    torsion2: tuple[int, ...]

    def __str__(self):
        def grp(r, t):
            parts = ([f"Z^{r}" if r > 1 else "Z"] if r else []) + [f"Z_{k}" for k in t]
            return " + ".join(parts) or "0"

        return f"(i={self.i}, j={self.j}): {grp(self.rank1, self.torsion1)} vs {grp(self.rank2, self.torsion2)}"


def kh_diff(g1: BigradedGroups, g2: BigradedGroups) -> list[KhDifference]:
    """Bidegrees where the two groups differ (empty iff equal)."""
    out = []
    for key in sorted(set(g1.groups) | set(g2.groups)):
        a = g1.groups.get(key, (0, ()))
        b = g2.groups.get(key, (0, ()))
        if a != b:
            out.append(KhDifference(key[0], key[1], a[0], b[0], a[1], b[1]))
    return out
