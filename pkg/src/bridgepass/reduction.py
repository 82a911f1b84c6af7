"""Crossing-reducing surgeries on knot diagrams.

Two kinds of site are rewritten:

* ``multipass``: an overpass meets one underpass at least twice.  The part of
  one of the two strands between its first two meetings is deleted and
  replaced by an arc running alongside the other strand, under everything
  (when ``r <= s``) or over everything (when ``r > s``).
* ``adjacent``: an overpass meets an adjacent underpass exactly once.  The
  loop through the pass boundary is cut off and the gap is closed by an arc
  that hugs the shorter side of the loop.

Both are instances of :func:`_reroute`: a contiguous run of walk passages is
cut out and replaced by an arc that follows a *guide* strand on one side,
crossing each transversal strand of the guide once, right next to the guide.
All replacement arcs lie entirely above or entirely below the rest of the
diagram, so every rewrite is an isotopy.

Geometry is tracked with one bit per guide crossing, ``rl``: +1 when the
transversal strand crosses the guide from the guide's right to its left.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field, replace

from .diagram import Diagram
from .errors import DegenerateSite, NonPlanar, RoutingObstruction, StepLimitExceeded
from .passes import PassDecomposition, decompose, incidence

__all__ = [
    "SurgerySite",
    "ReductionStep",
    "find_sites",
    "apply_surgery",
    "reidemeister_step",
    "reidemeister_cleanup",
    "reduce",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurgerySite:
    kind: str  # "multipass" or "adjacent"
    i: int
    j: int
    anchors: tuple[tuple[str, int], ...]
    r: int
    s: int
    bundle_over: tuple[int, ...] = ()
    bundle_under: tuple[int, ...] = ()
    case_tag: str | None = None  # "same-sign" / "opposite-sign" for multipass
    via_reversal: bool = False

    def anchor(self, name: str) -> int:
        return dict(self.anchors)[name]


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # "multipass", "adjacent", "r1" or "r2"
    crossings_before: int
    crossings_after: int
    formula_delta: int
    site: SurgerySite | None = None
    case: str | None = None
    chosen_branch: str | None = None

    def to_json(self) -> dict:
        site = self.site
        return {
            "kind": self.kind,
            "i": site.i if site else None,
            "j": site.j if site else None,
            "r": site.r if site else None,
            "s": site.s if site else None,
            "case": self.case,
            "c_before": self.crossings_before,
            "c_after": self.crossings_after,
        }


# -- site discovery ----------------------------------------------------------


def _index_in(rng: tuple[int, ...]) -> dict[int, int]:
    return {p: t for t, p in enumerate(rng)}


def _multipass_site(d: Diagram, dec: PassDecomposition, i: int, j: int) -> SurgerySite:
    o, u = dec.overpasses[i], dec.underpasses[j]
    u_set = set(u)
    meets = [d.walk[p].crossing for p in o if d.under_pos[d.walk[p].crossing] in u_set]
    x1, x2 = meets[0], meets[1]
    oi, ui = _index_in(o), _index_in(u)
    y1, y2 = sorted((x1, x2), key=lambda x: ui[d.under_pos[x]])
    r = oi[d.over_pos[x2]] - oi[d.over_pos[x1]] + 1
    s = ui[d.under_pos[y2]] - ui[d.under_pos[y1]] + 1
    bundle_over = tuple(d.walk[p].crossing for p in o[oi[d.over_pos[x1]] : oi[d.over_pos[x2]] + 1])
    bundle_under = tuple(d.walk[p].crossing for p in u[ui[d.under_pos[y1]] : ui[d.under_pos[y2]] + 1])
    tag = "same-sign" if d.signs[x1] == d.signs[x2] else "opposite-sign"
    return SurgerySite(
        "multipass", i, j,
        (("x1", x1), ("x2", x2), ("y1", y1), ("y2", y2)),
        r, s, bundle_over, bundle_under, tag,
    )


def _adjacent_site(d: Diagram, dec: PassDecomposition, i: int) -> SurgerySite:
    """Overpass ``i`` meets the underpass that follows it, exactly once."""
    o, u = dec.overpasses[i], dec.underpasses[i]
    u_set = set(u)
    (x,) = [d.walk[p].crossing for p in o if d.under_pos[d.walk[p].crossing] in u_set]
    y = d.walk[o[-1]].crossing
    z = d.walk[u[0]].crossing
    oi, ui = _index_in(o), _index_in(u)
    bundle_over = tuple(d.walk[p].crossing for p in o[oi[d.over_pos[x]] :])
    bundle_under = tuple(d.walk[p].crossing for p in u[: ui[d.under_pos[x]] + 1])
    return SurgerySite(
        "adjacent", i, i,
        (("x", x), ("y", y), ("z", z)),
        len(bundle_over), len(bundle_under), bundle_over, bundle_under,
    )


def find_sites(d: Diagram) -> list[SurgerySite]:
    """Every Rule 1 and Rule 2 violation, adjacent sites first.

    An adjacent pair meeting more than once is reported as a multipass site
    only: the adjacent rewrite assumes a single meeting.  Overpass ``i``
    meeting the preceding underpass ``i - 1`` is handled on the reversed
    walk, where it becomes an overpass meeting its following underpass.
    """
    if d.c == 0:
        return []
    dec = decompose(d)
    m = incidence(d, dec)
    k = dec.k
    adjacent, multipass = [], []
    for i in range(k):
        for j in sorted({i, (i - 1) % k}):
            if m[i, j] != 1:
                continue
            if j == i:
                adjacent.append(_adjacent_site(d, dec, i))
            else:
                adjacent.append(_reversed_adjacent_site(d, i, j))
    for i in range(k):
        for j in range(k):
            if m[i, j] >= 2:
                multipass.append(_multipass_site(d, dec, i, j))
    return adjacent + multipass


def _reversed_adjacent_site(d: Diagram, i: int, j: int) -> SurgerySite:
    rev = d.reversed()
    rdec = decompose(rev)
    dec = decompose(d)
    o, u = dec.overpasses[i], dec.underpasses[j]
    u_set = set(u)
    (x,) = [d.walk[p].crossing for p in o if d.under_pos[d.walk[p].crossing] in u_set]
    ri = rdec.pass_of[rev.over_pos[x]]
    site = _adjacent_site(rev, rdec, ri)
    assert site.anchor("x") == x
    return replace(site, i=i, j=j, via_reversal=True, anchors=site.anchors + (("reversed_i", ri),))


# -- the rewrite primitive ---------------------------------------------------


def _reroute(
    d: Diagram,
    cut_start: int,
    cut_len: int,
    arc_over: bool,
    transversals: list[tuple[int, bool, int]],
) -> Diagram:
    """Replace ``cut_len`` passages from ``cut_start`` by a new arc.

    ``transversals`` lists, in the order the new arc meets them, the guide
    crossings whose transversal strand it must cross: ``(label, before,
    sign)``.  The transversal strand receives its new passage immediately
    before (or after) its passage at that guide crossing; ``sign`` is the
    sign of the new crossing.
    """
    n = len(d.walk)
    cut = [(cut_start + t) % n for t in range(cut_len)]
    removed = {d.walk[p].crossing for p in cut}
    first = d.next_label()
    before, after = defaultdict(list), defaultdict(list)
    signs = {k: v for k, v in d.signs.items() if k not in removed}
    arc = []
    for idx, (t, is_before, sign) in enumerate(transversals):
        label = first + idx
        # the transversal passage has the level opposite to the guide's
        tp = d.over_pos[t] if arc_over else d.under_pos[t]
        assert d.walk[tp].crossing not in removed
        (before if is_before else after)[tp].append((label, not arc_over))
        arc.append((label, arc_over))
        signs[label] = sign
    walk = []
    start = (cut_start + cut_len) % n
    for q in range(n - cut_len):
        p = (start + q) % n
        walk.extend(before[p])
        if d.walk[p].crossing not in removed:
            walk.append(d.walk[p])
        walk.extend(after[p])
    walk.extend(arc)
    try:
        return Diagram(walk, signs)
    except NonPlanar as exc:
        raise RoutingObstruction(str(exc)) from exc


def _parallel(guide_labels, rl, sigma, delta, arc_over):
    out = []
    for t in guide_labels:
        sign = rl[t] * delta if arc_over else -rl[t] * delta
        out.append((t, rl[t] == sigma, sign))
    return out


def _apply_multipass(d: Diagram, site: SurgerySite):
    x1, x2, y1, y2 = (site.anchor(a) for a in ("x1", "x2", "y1", "y2"))
    r, s = site.r, site.s
    same = site.case_tag == "same-sign"
    c = d.c
    if r <= s:
        # reroute the underpass segment alongside the overpass, under everything
        rl = {t: d.signs[t] for t in site.bundle_over}
        inner = list(site.bundle_over[1:-1])
        delta = 1 if y1 == x1 else -1
        if delta < 0:
            inner.reverse()
        trans = _parallel(inner, rl, rl[y1], delta, arc_over=False)
        cut_len = s - 1 if same else s
        new = _reroute(d, d.under_pos[y1], cut_len, False, trans)
        predicted = c - (s - 1) + (r - 2) if same else c - s + (r - 2)
        case, branch = ("1.(1)" if same else "1.(2)"), "reroute-under"
    else:
        rl = {t: -d.signs[t] for t in site.bundle_under}
        inner = list(site.bundle_under[1:-1])
        delta = 1 if x1 == y1 else -1
        if delta < 0:
            inner.reverse()
        trans = _parallel(inner, rl, rl[x1], delta, arc_over=True)
        cut_len = r - 1 if same else r
        new = _reroute(d, d.over_pos[x1], cut_len, True, trans)
        predicted = c - (r - 1) + (s - 2) if same else c - r + (s - 2)
        case, branch = ("2.(1)" if same else "2.(2)"), "reroute-over"
    return new, predicted, "multipass/" + case, branch


def _apply_adjacent_direct(d: Diagram, site: SurgerySite):
    x = site.anchor("x")
    r, s = site.r, site.s
    c = d.c
    if r <= s:
        rl = {t: d.signs[t] for t in site.bundle_over}
        trans = _parallel(list(reversed(site.bundle_over[1:])), rl, -rl[x], -1, arc_over=False)
        z = site.anchor("z")
        new = _reroute(d, d.under_pos[z], s, False, trans)
        predicted = c - s + (r - 1)
        case, branch = "1", "reroute-under"
    else:
        rl = {t: -d.signs[t] for t in site.bundle_under}
        trans = _parallel(list(reversed(site.bundle_under[:-1])), rl, rl[x], -1, arc_over=True)
        new = _reroute(d, d.over_pos[x], r, True, trans)
        predicted = c - r + (s - 1)
        case, branch = "2", "reroute-over"
    return new, predicted, "adjacent/" + case, branch


def _recompute(d: Diagram, site: SurgerySite) -> SurgerySite:
    for fresh in find_sites(d):
        if (fresh.kind, fresh.i, fresh.j) == (site.kind, site.i, site.j):
            return fresh
    raise DegenerateSite(f"no {site.kind} site at ({site.i}, {site.j}) in this diagram")


def apply_surgery(d: Diagram, site: SurgerySite) -> tuple[Diagram, ReductionStep]:
    """Perform the rewrite for ``site``; the crossing count is checked against its formula."""
    fresh = _recompute(d, site)
    if fresh != site:
        raise DegenerateSite("site data does not match the diagram")
    if site.kind == "multipass":
        new, predicted, case, branch = _apply_multipass(d, site)
    elif site.via_reversal:
        rev = d.reversed()
        rsite = _adjacent_site(rev, decompose(rev), site.anchor("reversed_i"))
        new_rev, predicted, case, branch = _apply_adjacent_direct(rev, rsite)
        new = new_rev.reversed()
    else:
        new, predicted, case, branch = _apply_adjacent_direct(d, site)
    if new.c != predicted:
        raise AssertionError(f"{case}: got {new.c} crossings, formula gives {predicted}")
    if new.c >= d.c:
        raise AssertionError(f"{case}: crossing count did not decrease")
    step = ReductionStep(site.kind, d.c, new.c, predicted - d.c, site, case, branch)
    return new, step


# -- Reidemeister cleanup ----------------------------------------------------


def _remove(d: Diagram, labels) -> Diagram:
    labels = set(labels)
    walk = [p for p in d.walk if p.crossing not in labels]
    signs = {k: v for k, v in d.signs.items() if k not in labels}
    return Diagram(walk, signs)


def reidemeister_step(d: Diagram) -> tuple[Diagram, ReductionStep] | None:
    """One crossing-decreasing R1 or R2 move, or None if there is none."""
    w = d.walk
    n = len(w)
    for p in range(n):
        if w[p].crossing == w[(p + 1) % n].crossing:
            new = _remove(d, [w[p].crossing])
            return new, ReductionStep("r1", d.c, new.c, -1, case="R1")
    for face in d.faces():
        if len(face) != 2:
            continue
        (e1, _), (e2, _) = face
        a1, b1 = w[e1], w[(e1 + 1) % n]
        a2, b2 = w[e2], w[(e2 + 1) % n]
        if a1.crossing == b1.crossing or a2.crossing == b2.crossing:
            continue
        if a1.over == b1.over and a2.over == b2.over and a1.over != a2.over:
            new = _remove(d, [a1.crossing, b1.crossing])
            return new, ReductionStep("r2", d.c, new.c, -2, case="R2")
    return None


def reidemeister_cleanup(d: Diagram) -> Diagram:
    while (res := reidemeister_step(d)) is not None:
        d = res[0]
    return d


# -- greedy reduction --------------------------------------------------------


def reduce(d: Diagram, max_steps: int | None = None) -> tuple[Diagram, list[ReductionStep]]:
    """Alternate Reidemeister cleanup and surgeries until Rules 1 and 2 hold."""
    trace: list[ReductionStep] = []
    limit = d.c if max_steps is None else max_steps
    while True:
        res = reidemeister_step(d)
        if res is None:
            sites = find_sites(d)
            if not sites:
                return d, trace
            res = None
            for site in sites:
                try:
                    res = apply_surgery(d, site)
                    break
                except RoutingObstruction as exc:
                    log.warning("routing failed at %s (%s); trying next site", site, exc)
            if res is None:
                raise RoutingObstruction("no site could be rerouted")
        if len(trace) >= limit:
            raise StepLimitExceeded(f"no fixed point within {limit} steps", d, trace)
        d = res[0]
        trace.append(res[1])
