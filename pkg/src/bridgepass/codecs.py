"""Text codecs: extended Gauss code and planar-diagram (PD) notation.

Extended Gauss tokens look like ``O1-`` / ``U3+``: level, crossing label and
the crossing sign.  Signs may be omitted from every token, in which case a
planar sign assignment is searched for.  PD terms ``X[a,b,c,d]`` list edge
labels counterclockwise from the incoming under-edge; edges are numbered
``1..2c`` along the orientation.
"""

from __future__ import annotations

import re
from pathlib import Path

from .diagram import Diagram
from .errors import CodeSyntaxError, InconsistentCode, NonPlanar, NonRealizable

__all__ = [
    "parse_extended_gauss",
    "emit_extended_gauss",
    "parse_pd",
    "emit_pd",
    "parse_diagram",
    "load_diagrams",
    "realize_gauss",
]

_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-]?)\Z")
_PD_TERM = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_PD_NESTED = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_extended_gauss(text: str) -> Diagram:
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    walk, token_signs = [], {}
    signed = set()
    for tok in tokens:
        m = _GAUSS_TOKEN.match(tok)
        if not m:
            raise CodeSyntaxError(f"malformed Gauss token {tok!r}")
        level, label, sign = m.groups()
        label = int(label)
        if label <= 0:
            raise CodeSyntaxError(f"crossing labels must be positive, got {tok!r}")
        walk.append((label, level == "O"))
        signed.add(bool(sign))
        if sign:
            s = 1 if sign == "+" else -1
            if token_signs.setdefault(label, s) != s:
                raise InconsistentCode(f"crossing {label} carries two different signs")
    if len(signed) > 1:
        raise InconsistentCode("either every token carries a sign or none does")
    counts: dict[int, list[bool]] = {}
    for label, over in walk:
        counts.setdefault(label, []).append(over)
    for label, levels in counts.items():
        if sorted(levels) != [False, True]:
            raise InconsistentCode(f"crossing {label} must appear exactly once as O and once as U")
    if not walk:
        return Diagram()
    if signed == {False}:
        return realize_gauss(walk)
    try:
        return Diagram(walk, token_signs)
    except NonPlanar as exc:
        raise NonRealizable(str(exc)) from exc


def emit_extended_gauss(d: Diagram) -> str:
    return " ".join(
        f"{'O' if p.over else 'U'}{p.crossing}{'+' if d.signs[p.crossing] > 0 else '-'}"
        for p in d.walk
    )


def parse_pd(text: str) -> Diagram:
    body = text.strip()
    if not body:
        return Diagram()
    if body.startswith("[["):
        terms = _PD_NESTED.findall(body)
        rest = _PD_NESTED.sub("", body).replace("[", "").replace("]", "")
        rest = rest.replace(",", "")
    else:
        terms = _PD_TERM.findall(body)
        rest = _PD_TERM.sub("", body).replace(",", "")
    if rest.strip() or not terms:
        raise CodeSyntaxError(f"malformed PD text {text!r}")
    quads = [tuple(int(x) for x in t) for t in terms]
    n = len(quads)
    m = 2 * n
    labels = sorted(x for q in quads for x in q)
    if labels != sorted(list(range(1, m + 1)) * 2):
        raise InconsistentCode("PD edge labels must be 1..2c, each appearing exactly twice")

    def succ(x):
        return x % m + 1

    walk, signs = [None] * m, {}
    for idx, (a, b, c, d) in enumerate(quads, start=1):
        if c != succ(a):
            raise InconsistentCode(f"under-strand of X[{a},{b},{c},{d}] is not oriented a -> a+1")
        options = []
        if d == succ(b):
            options.append((b, -1))
        if b == succ(d):
            options.append((d, 1))
        if len(options) == 2:
            # one crossing: the two edges are distinct, a is already a head
            options = [(x, s) for x, s in options if x != a]
        if len(options) != 1:
            raise InconsistentCode(f"over-strand of X[{a},{b},{c},{d}] has no consistent orientation")
        in_over, sign = options[0]
        for label, over in ((a, False), (in_over, True)):
            pos = label % m
            if walk[pos] is not None:
                raise InconsistentCode(f"edge {label} enters two crossings")
            walk[pos] = (idx, over)
        signs[idx] = sign
    return Diagram(walk, signs)


def emit_pd(d: Diagram) -> str:
    if not d.walk:
        return ""
    m = len(d.walk)
    terms = []
    for quad in d.rotation.values():
        # half-edge h belongs to edge h >> 1, labelled 1..2c from the basepoint
        terms.append(tuple((h >> 1) + 1 for h in quad))
    terms.sort()
    assert all(t[2] == t[0] % m + 1 for t in terms)
    return " ".join(f"X[{a},{b},{c},{e}]" for a, b, c, e in terms)


def parse_diagram(text: str) -> Diagram:
    """Parse one line in either notation."""
    body = text.strip()
    if body.startswith("X[") or body.startswith("[["):
        return parse_pd(body)
    return parse_extended_gauss(body)


def load_diagrams(path) -> list[Diagram]:
    """One diagram per line; ``#`` starts a comment line; blank lines are skipped."""
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip().startswith("#") or not line.strip():
            continue
        out.append(parse_diagram(line))
    return out


# -- realizability of unsigned Gauss codes -----------------------------------


def realize_gauss(walk) -> Diagram:
    """Find crossing signs making an unsigned Gauss walk planar.

    Backtracks over the two possible rotations at each crossing, in order of
    first appearance.  A partial assignment is pruned as soon as the ribbon
    subgraph spanned by the decided crossings has positive genus; deleting
    edges never raises genus, so no planar completion is lost.  The first
    crossing is fixed to +1 (the other choice gives the mirror image).
    """
    walk = [(int(a), bool(b)) for a, b in walk]
    if not walk:
        return Diagram()
    n = len(walk)
    order = []
    for label, _ in walk:
        if label not in order:
            order.append(label)
    over_pos = {lab: i for i, (lab, o) in enumerate(walk) if o}
    under_pos = {lab: i for i, (lab, o) in enumerate(walk) if not o}

    def ends(label):
        po, pu = over_pos[label], under_pos[label]
        return 2 * ((pu - 1) % n) + 1, 2 * pu, 2 * ((po - 1) % n) + 1, 2 * po

    vertex_of = {}
    for label in order:
        for h in ends(label):
            vertex_of[h] = label

    signs: dict[int, int] = {}

    def genus_ok() -> bool:
        # keep half-edges at decided vertices, and only the over-strand ends at
        # undecided ones; keep an edge when both of its ends are kept
        kept_end = set()
        for label in order:
            in_u, out_u, in_o, out_o = ends(label)
            kept_end.update((in_o, out_o))
            if label in signs:
                kept_end.update((in_u, out_u))
        edges = [e for e in range(n) if 2 * e in kept_end and 2 * e + 1 in kept_end]
        live = set()
        for e in edges:
            live.update((2 * e, 2 * e + 1))
        succ = {}
        for label in order:
            in_u, out_u, in_o, out_o = ends(label)
            if label in signs:
                cyc = (in_u, out_o, out_u, in_o) if signs[label] > 0 else (in_u, in_o, out_u, out_o)
            else:
                cyc = (in_o, out_o)
            cyc = [h for h in cyc if h in live]
            for i, h in enumerate(cyc):
                succ[h] = cyc[(i + 1) % len(cyc)]
        parent = {v: v for v in order}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in edges:
            a, b = find(vertex_of[2 * e]), find(vertex_of[2 * e + 1])
            parent[a] = b
        components = len({find(v) for v in order})
        n_faces = 0
        seen = set()
        for h in succ:
            if h in seen:
                continue
            n_faces += 1
            while h not in seen:
                seen.add(h)
                h = succ[h ^ 1]
        isolated = sum(1 for v in order if not any(vertex_of[h] == v for h in live))
        n_faces += isolated
        euler = len(order) - len(edges) + n_faces
        return euler == 2 * components

    def search(i: int) -> bool:
        if i == len(order):
            return True
        choices = (1,) if i == 0 else (1, -1)
        for s in choices:
            signs[order[i]] = s
            if genus_ok() and search(i + 1):
                return True
            del signs[order[i]]
        return False

    if not search(0):
        raise NonRealizable("no planar rotation system exists for this Gauss code")
    return Diagram(walk, signs)
