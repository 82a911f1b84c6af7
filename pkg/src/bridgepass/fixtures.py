"""Bundled example diagrams.

``GOERITZ_STYLE`` is a 10-crossing unknot diagram in which every overpass
meets every underpass at most once and never meets an adjacent one, so no
surgery applies even though the diagram is far from minimal.  It was found
by running :func:`bridgepass.reduction.reduce` on randomly scrambled
unknots and keeping a nontrivial fixed point; its certificate (normalised
bracket 1, Rules 1 and 2, fixed point of ``reduce``) is rechecked by the
test-suite.  It stands in for Goeritz's classical example.
"""

from __future__ import annotations

import csv
import random
from functools import lru_cache

from .codecs import parse_diagram
from .diagram import Diagram
from .moves import scramble
from .passes import inflate
from .reduction import find_sites
from .torus import standard_torus_diagram

__all__ = [
    "TREFOIL",
    "FIGURE_EIGHT",
    "R2_POKE",
    "SHAPE_EIGHT",
    "GOERITZ_STYLE",
    "SURGERY_EXAMPLES",
    "fixture",
    "fixture_names",
    "all_fixtures",
    "table_diagrams",
    "reduction_fixtures",
]

TREFOIL = "O1- U2- O3- U1- O2- U3-"
FIGURE_EIGHT = "O1- U2+ O3+ U1- O4- U3+ O2+ U4-"
# one overpass running twice over one underpass; the two crossings cancel
R2_POKE = "O1+ O2- U2- U1+"
SHAPE_EIGHT = "O1+ U1+"
GOERITZ_STYLE = (
    "O1- U2- U3- U4+ O5+ U6+ O7+ O3- O8- U9- O10- U1- O2- U10- O9- U8- O4+ U7+ O6+ U5+"
)

# one small diagram per surgery case, keyed by the case label
SURGERY_EXAMPLES = {
    "multipass/1.(1)": "U1+ O4+ O5+ O6- U2+ O1+ O3+ U5+ U6- U3+ U4+ O2+",
    "multipass/1.(2)": "O2+ U4+ U5- U1+ O3+ U2+ O4+ O5- O1+ U3+",
    "multipass/2.(1)": "O2+ U1+ U5+ O3+ U4- U2+ O1+ O4- O6- O5+ O7+ U7+ U3+ U6-",
    "multipass/2.(2)": "O2+ U1+ O3+ U4+ U5- U2+ O1+ U7+ U6- U3+ O4+ O6- O7+ O5-",
    "adjacent/1": "U3+ O4+ U1+ O3+ O5- U5- U4+ U2+ O2+ O1+",
    # r=3, s=1
    "adjacent/2": "O2+ U1+ O3+ U5- U4+ U2+ O1+ U3+ O6+ O4+ O5- U6+",
}


def _named() -> dict[str, Diagram]:
    out = {
        "trefoil": parse_diagram(TREFOIL),
        "figure-eight": parse_diagram(FIGURE_EIGHT),
        "r2-poke": parse_diagram(R2_POKE),
        "goeritz": parse_diagram(GOERITZ_STYLE),
    }
    for k in range(3, 7):
        out[f"torus-{k}"] = standard_torus_diagram(k, -1)
    for n in (1, 2, 3):
        out[f"trefoil-spiral-{n}"] = inflate(out["trefoil"], n)
    out["figure-eight-spiral-2"] = inflate(out["figure-eight"], 2)
    return out


@lru_cache(maxsize=None)
def _cached():
    return _named()


def fixture_names() -> list[str]:
    return list(_cached())


def fixture(name: str) -> Diagram:
    try:
        return _cached()[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(fixture_names())}") from None


def all_fixtures() -> dict[str, Diagram]:
    return dict(_cached())


@lru_cache(maxsize=None)
def table_diagrams() -> tuple[tuple[str, Diagram], ...]:
    from .corpus import bundled_table

    with open(bundled_table(), newline="") as fh:
        return tuple((row["name"], parse_diagram(row["pd_notation"])) for row in csv.DictReader(fh))


def reduction_fixtures(count: int = 60, seed: int = 20240601, max_crossings: int = 14) -> list[Diagram]:
    """Scrambled table knots that violate Rule 1 or Rule 2, plus the case examples.

    Scrambling mixes R2 pokes, kinks and R3 slides, so many results have no
    Reidemeister simplification left and must be reduced by surgery.
    """
    rng = random.Random(seed)
    bases = [d for _, d in table_diagrams()[:10]]
    out = [parse_diagram(s) for s in SURGERY_EXAMPLES.values()]
    while len(out) < count:
        d = scramble(rng.choice(bases), rng.randint(1, 3), rng.randint(0, 2), rng, slides=rng.randint(0, 6))
        if d.c <= max_crossings and find_sites(d):
            out.append(d)
    return out
