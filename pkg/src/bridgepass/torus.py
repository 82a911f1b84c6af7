"""Standard torus diagrams and the diagrams that meet the crossing bound.

A diagram with ``b`` overpasses satisfying Rules 1-3 has exactly
``b(b - 2)`` crossings, and the only such diagrams are the standard diagrams
of the ``(k - 1, k)`` and ``(k - 1, -k)`` torus knots.  This module builds
those diagrams, recognises them, and re-derives the uniqueness claim for
small ``k`` by exhaustive search.

The standard diagram is the closure of ``(s_1 s_2 ... s_{k-2})^k`` on
``k - 1`` strands, with every crossing signed by the chirality: following a
strand, it goes over while moving outward and under while moving back, so
each overpass has length ``k - 2``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from .diagram import Diagram, canonical_form
from .errors import CapExceeded, InvalidK
from .passes import check_rules, decompose

__all__ = [
    "ENUMERATION_CAP",
    "TorusClass",
    "NotExtremal",
    "standard_torus_diagram",
    "classify_extremal",
    "enumerate_rule_compliant",
]

log = logging.getLogger(__name__)

ENUMERATION_CAP = 5


@dataclass(frozen=True)
class TorusClass:
    k: int
    chirality: int

    @property
    def crossings(self) -> int:
        return self.k * (self.k - 2)

    def diagram(self) -> Diagram:
        return standard_torus_diagram(self.k, self.chirality)


@dataclass(frozen=True)
class NotExtremal:
    reason: str
    detail: str = ""


def _check_chirality(chirality):
    if chirality not in (1, -1):
        raise ValueError("chirality must be +1 or -1")


def standard_torus_diagram(k: int, chirality: int = -1) -> Diagram:
    """The standard ``(k - 1, chirality * k)`` torus diagram; ``k = 3, -1`` is the trefoil ``O1- U2- O3- U1- O2- U3-``."""
    if k < 3:
        raise InvalidK(f"k must be at least 3, got {k}")
    _check_chirality(chirality)
    strands = k - 1
    word = list(range(strands - 1)) * k  # generator indices, 0-based
    walk = []
    pos = 0
    while True:
        for letter, gen in enumerate(word, start=1):
            if pos == gen:
                walk.append((letter, True))
                pos += 1
            elif pos == gen + 1:
                walk.append((letter, False))
                pos -= 1
        if pos == 0:
            break
    return Diagram(walk, {x: chirality for x in range(1, len(word) + 1)})


_CACHE: dict[tuple[int, int], bytes] = {}


def _standard_key(k, chirality) -> bytes:
    key = (k, chirality)
    if key not in _CACHE:
        _CACHE[key] = canonical_form(standard_torus_diagram(k, chirality), "rotation").key
    return _CACHE[key]


def classify_extremal(d: Diagram) -> "TorusClass | NotExtremal":
    """Identify ``d`` as a standard torus diagram, or say which hypothesis fails."""
    if d.c == 0:
        return NotExtremal("empty", "the circle has no passes")
    b = decompose(d).k
    if d.c != b * (b - 2):
        return NotExtremal("crossing-count", f"c={d.c} but b(b-2)={b * (b - 2)}")
    report = check_rules(d)
    for name, ok in (("rule1", report.rule1_ok), ("rule2", report.rule2_ok), ("rule3", report.rule3_ok)):
        if not ok:
            return NotExtremal(name, f"{name} fails")
    if b < 3:
        return NotExtremal("crossing-count", f"b={b} is too small")
    key = canonical_form(d, "rotation").key
    for chirality in (-1, 1):
        if key == _standard_key(b, chirality):
            return TorusClass(b, chirality)
    return NotExtremal("not-standard", "rules hold but the diagram is not a standard torus diagram")


# -- exhaustive search -------------------------------------------------------


def _prefix_planar(walk, signs) -> bool:
    """Genus-zero test for the drawn part of the curve.

    Only crossings already passed twice are vertices; the segments between
    them are edges and the loose ends are dropped, which never changes the
    genus.  Any subgraph of a planar diagram is planar, so a positive genus
    here rules out every completion.
    """
    done = [p for p in walk if p[0] in signs]
    m = len(done)
    if m < 2:
        return True
    rot = {}
    for t, (label, over) in enumerate(done):
        h_in = 2 * (t - 1) + 1 if t > 0 else None
        h_out = 2 * t if t < m - 1 else None
        slot = rot.setdefault(label, [None, None, None, None])
        if over:
            slot[1], slot[3] = h_in, h_out
        else:
            slot[0], slot[2] = h_in, h_out
    succ = {}
    for label, (in_u, in_o, out_u, out_o) in rot.items():
        if signs[label] > 0:
            ring = (in_u, out_o, out_u, in_o)
        else:
            ring = (in_u, in_o, out_u, out_o)
        ring = [h for h in ring if h is not None]
        for a, b in zip(ring, ring[1:] + ring[:1]):
            succ[a] = b
    seen = set()
    faces = 0
    for h in succ:
        if h in seen:
            continue
        faces += 1
        while h not in seen:
            seen.add(h)
            h = succ[h ^ 1]
    v, e = len(rot), m - 1
    return v - e + faces == 2


def _partner_families(k, rule3):
    """For each overpass, the underpasses it meets; Rules 1 and 2 are built in."""
    allowed = [[j for j in range(k) if j not in (i, (i - 1) % k)] for i in range(k)]
    if rule3:
        yield [tuple(a) for a in allowed]
        return
    choices = [
        [s for r in range(1, len(a) + 1) for s in itertools.combinations(a, r)] for a in allowed
    ]
    for family in itertools.product(*choices):
        if all(any(j in s for s in family) for j in range(k)):
            yield list(family)


def _search(k, family, found):
    over_of = family
    under_of = [tuple(i for i in range(k) if j in family[i]) for j in range(k)]
    segments = []
    for i in range(k):
        segments.append((True, i, over_of[i]))
        segments.append((False, i, under_of[i]))
    walk: list[tuple[int, bool]] = []
    signs: dict[int, int] = {}
    seen_once: set[int] = set()

    def label(over_pass, under_pass):
        return over_pass * k + under_pass + 1

    def place(seg, remaining):
        if not remaining:
            extend(seg + 1)
            return
        is_over, idx, _ = segments[seg]
        for partner in remaining:
            lab = label(idx, partner) if is_over else label(partner, idx)
            rest = tuple(p for p in remaining if p != partner)
            walk.append((lab, is_over))
            if lab in seen_once:
                for sign in (1, -1):
                    signs[lab] = sign
                    if _prefix_planar(walk, signs):
                        place(seg, rest)
                del signs[lab]
            else:
                seen_once.add(lab)
                place(seg, rest)
                seen_once.discard(lab)
            walk.pop()

    def extend(seg):
        if seg == len(segments):
            d = Diagram(list(walk), dict(signs), check_planar=False)
            if d.is_planar() and decompose(d).k == k:
                found.setdefault(canonical_form(d, "reversal").key, d)
            return
        place(seg, segments[seg][2])

    extend(0)


def enumerate_rule_compliant(k: int, *, rule3: bool = True, cap: int = ENUMERATION_CAP) -> list[Diagram]:
    """All diagrams with ``k`` overpasses obeying the rules, up to rotation and reversal.

    With ``rule3`` the row and column sums are forced to ``k - 2`` (so
    ``c = k(k - 2)``); without it only Rules 1 and 2 are imposed.  Results are
    sorted by canonical key.
    """
    if k < 3:
        raise InvalidK(f"k must be at least 3, got {k}")
    if k > cap:
        raise CapExceeded(f"k={k} exceeds the enumeration cap {cap}")
    found: dict[bytes, Diagram] = {}
    for family in _partner_families(k, rule3):
        _search(k, family, found)
    log.info("k=%d rule3=%s: %d classes", k, rule3, len(found))
    return [found[key] for key in sorted(found)]
