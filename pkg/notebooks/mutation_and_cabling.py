"""Conway mutation, cabled mutation and the colored Jones polynomial."""

# %%
from __future__ import annotations

import warnings
from importlib.resources import files

from knotmut.coloredjones import colored_jones
from knotmut.diagram import parse_pd
from knotmut.mutation import (
    MultiComponentClosure,
    cable,
    close,
    embed,
    extract_tangle,
    format_tangle,
    mutate,
    planar_closures,
    random_tangles,
    string_preserving_involution,
)
from knotmut.skein import alexander, homfly, jones, kauffman_poly

warnings.simplefilter("ignore", MultiComponentClosure)


def extra(name):
    return parse_pd((files("knotmut.data") / "extra" / f"{name}.pd").read_text())


# %% Crossings 5..10 of the Kinoshita-Terasaka diagram form a 2-string tangle.
kt, conway = extra("K11n42"), extra("K11n34")
t, ctx = extract_tangle(kt, range(5, 11))
print(format_tangle(t))
s = string_preserving_involution(t)
mutant = embed(mutate(t, s), ctx)
print("mutant has the Conway knot's invariants:", homfly(mutant) == homfly(conway), jones(mutant) == jones(conway))
print("Alexander polynomial:", alexander(mutant))

# %% Mutants share J_3 as well.
print("J_3 equal:", colored_jones(kt, 3) == colored_jones(conway, 3))

# %% Cabling one string twice before mutating keeps HOMFLY-PT and Kauffman.
for t in random_tangles(5, 4, seed=11):
    s = string_preserving_involution(t)
    a, b = cable(t, (1, 2)), cable(mutate(t, s), (1, 2))
    for cl in planar_closures(a):
        d = close(a, cl)
        if d.n_components == 1:
            e = close(b, cl)
            print(d.n_crossings, "crossings:", homfly(d) == homfly(e), kauffman_poly(d) == kauffman_poly(e))
