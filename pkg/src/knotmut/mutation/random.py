"""Random 2-2 tangles for property suites.

A tangle is drawn as a braid on four upward strands whose two rightmost
strands are capped off at the top and bottom.  The free ends at
positions 1 and 2 become ``NW, NE`` (top) and ``SW, SE`` (bottom).
"""

from __future__ import annotations

import random as _random

from .tangle import Tangle, TangleError

__all__ = ["plat_tangle", "random_tangle", "random_tangles"]


def plat_tangle(word) -> Tangle:
    """Tangle of a 4-strand braid word with strands 3 and 4 capped top and bottom."""
    bottom = [1, 2, 3, 4]
    cur = list(bottom)
    perm = [0, 1, 2, 3]  # perm[k]: bottom strand now at position k
    nxt = 5
    xs = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < 3:
            raise ValueError(f"generator {g} out of range for 4 strands")
        bl, br = cur[i], cur[i + 1]
        al, ar = nxt, nxt + 1
        nxt += 2
        xs.append((br, ar, al, bl) if g > 0 else (bl, br, ar, al))
        cur[i], cur[i + 1] = al, ar
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    if set(perm[2:]) == {2, 3}:
        raise TangleError("capped strands form a closed loop")
    # caps: bottom 3~4 and top 3~4 identify labels
    parent = {v: v for v in range(1, nxt)}

    def r(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for a, b in ((bottom[2], bottom[3]), (cur[2], cur[3])):
        ra, rb = r(a), r(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    xs = [tuple(r(v) for v in x) for x in xs]
    bd = {"NW": r(cur[0]), "NE": r(cur[1]), "SW": r(bottom[0]), "SE": r(bottom[1])}
    return Tangle(tuple(xs), bd, _strings(xs, bd))


def _strings(xs, bd):
    probe = Tangle.__new__(Tangle)
    object.__setattr__(probe, "crossings", tuple(xs))
    object.__setattr__(probe, "boundary", {p: (v,) for p, v in bd.items()})
    (p, _), (q, _) = [e for e in probe.strand_ends() if "NW" in (e[0][0], e[1][0])][0]
    other = q if p == "NW" else p
    rest = tuple(r for r in ("NW", "NE", "SW", "SE") if r not in ("NW", other))
    return (("NW", other), rest)


def random_tangle(rng: _random.Random, n_crossings: int, min_crossings: int | None = None) -> Tangle:
    """A random plat tangle with exactly ``n_crossings`` crossings and no closed loops."""
    for _ in range(1000):
        word = []
        while len(word) < n_crossings:
            g = rng.choice((1, 2, 3)) * rng.choice((1, -1))
            if word and word[-1] == -g:
                continue  # skip immediate cancellations
            word.append(g)
        try:
            return plat_tangle(word)
        except TangleError:
            continue
    raise RuntimeError("could not draw a tangle without closed loops")


def random_tangles(count: int, max_crossings: int = 6, seed: int = 0, min_crossings: int = 2):
    rng = _random.Random(seed)
    return [random_tangle(rng, rng.randint(min_crossings, max_crossings)) for _ in range(count)]
