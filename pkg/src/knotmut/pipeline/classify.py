"""Almost-mutant classification and reports."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable, Sequence

from ..khovanov.groups import format_kh, kh_diff
from .records import KnotRecord, MissingInvariantError

__all__ = ["AlmostMutantClass", "classify", "report", "DEFAULT_VOLUME_TOL", "DEFINING"]

DEFAULT_VOLUME_TOL = Decimal("1e-9")
DEFINING = ("homfly", "kauffman", "signature")


@dataclass(frozen=True)
class AlmostMutantClass:
    """Knots sharing HOMFLY-PT, Kauffman, signature and (within tolerance) volume."""

    members: tuple[str, ...]
    homfly: object
    kauffman: object
    signature: int
    volume: Decimal

    @property
    def size(self) -> int:
        return len(self.members)


def _key(rec: KnotRecord) -> tuple:
    if rec.volume is None:
        raise MissingInvariantError(f"{rec.name}: no hyperbolic volume ingested")
    vals = []
    for kind in DEFINING:
        try:
            vals.append(rec.invariant(kind))
        except Exception as exc:  # the record is named in the error, the cause is kept
            raise MissingInvariantError(f"{rec.name}: cannot compute {kind}: {exc}") from exc
    return tuple(vals)


def _canon(value) -> str:
    """Exact, hashable canonical text for a polynomial or integer."""
    terms = getattr(value, "terms", None)
    if terms is None:
        return repr(value)
    return repr(sorted(terms.items()))


def classify(records: Sequence[KnotRecord], volume_tolerance: Decimal | str | float = DEFAULT_VOLUME_TOL,
             mirrors: bool = False) -> list[AlmostMutantClass]:
    """Partition ``records`` into almost-mutant classes.

    Polynomials and signature must agree exactly.  Volumes are compared as
    exact decimals: within a polynomial group, records sorted by volume are
    chained while consecutive gaps are at most the tolerance, which gives a
    partition that does not depend on input order.  With ``mirrors`` each
    record is classified together with its mirror image.
    """
    tol = Decimal(str(volume_tolerance))
    if tol < 0:
        raise ValueError("volume tolerance must be non-negative")
    recs = list(records)
    names = [r.name for r in recs]
    if len(set(names)) != len(names):
        raise ValueError("record names must be unique")
    if mirrors:
        recs = recs + [r.mirrored() for r in recs]
    groups: dict[tuple, list[tuple[Decimal, str, tuple]]] = {}
    for r in recs:
        key = _key(r)
        groups.setdefault(tuple(_canon(v) for v in key), []).append((r.volume, r.name, key))
    out = []
    for items in groups.values():
        items.sort(key=lambda t: (t[0], t[1]))
        chain = [items[0]]
        for prev, cur in zip(items, items[1:]):
            if cur[0] - prev[0] <= tol:
                chain.append(cur)
            else:
                out.append(_make(chain))
                chain = [cur]
        out.append(_make(chain))
    out.sort(key=lambda c: (-c.size, c.members))
    return out


def _make(chain) -> AlmostMutantClass:
    h, k, s = chain[0][2]
    return AlmostMutantClass(tuple(sorted(name for _, name, _ in chain)), h, k, s, chain[0][0])


def _kh_summary(cls: AlmostMutantClass, by_name: dict[str, KnotRecord]) -> dict:
    khs = {m: by_name[m].invariant("khovanov") for m in cls.members}
    first = khs[cls.members[0]]
    differs = any(kh_diff(first, khs[m]) for m in cls.members[1:])
    return {"kh_differs": differs, "khovanov": {m: list(format_kh(v)) for m, v in khs.items()}}


def report(classes: Iterable[AlmostMutantClass], mode: str = "text",
           records: Sequence[KnotRecord] | None = None) -> str:
    """Class-size histogram ("size: count") and, given records, per-class Khovanov comparison."""
    classes = list(classes)
    by_name = {r.name: r for r in records} if records is not None else None
    if by_name is not None:
        # mirrored members are resolved on demand
        for r in list(by_name.values()):
            by_name.setdefault(f"mirror({r.name})", r.mirrored())
    hist = Counter(c.size for c in classes)
    rows = []
    for c in classes:
        row = {"members": list(c.members), "size": c.size, "signature": c.signature, "volume": str(c.volume)}
        if by_name is not None and c.size > 1:
            row.update(_kh_summary(c, by_name))
        rows.append(row)
    if mode == "json":
        return json.dumps({"histogram": {str(k): hist[k] for k in sorted(hist)}, "classes": rows}, indent=2)
    if mode != "text":
        raise ValueError(f"unknown report mode {mode!r}")
    lines = [f"{size}: {hist[size]}" for size in sorted(hist)]
    for row in rows:
        if row["size"] < 2:
            continue
        flag = ""
        if "kh_differs" in row:
            flag = "  Kh differs" if row["kh_differs"] else "  Kh equal"
        lines.append(f"{{{', '.join(row['members'])}}} vol {row['volume']} sig {row['signature']}{flag}")
    return "\n".join(lines) + ("\n" if lines else "")
