"""Crossing-increasing Reidemeister moves, used to scramble diagrams."""

from __future__ import annotations

import random

from .diagram import Diagram, Passage
from .errors import NonPlanar

__all__ = ["insert_passages", "add_kink", "poke", "r3_moves", "apply_r3", "random_pokes", "scramble"]


def insert_passages(d: Diagram, inserts: dict[int, list], signs: dict[int, int]) -> Diagram:
    """Insert passages on edges; ``inserts[e]`` goes between positions ``e`` and ``e + 1``."""
    walk = []
    for p, passage in enumerate(d.walk):
        walk.append(passage)
        walk.extend(Passage(x, o) for x, o in inserts.get(p, ()))
    merged = dict(d.signs)
    merged.update(signs)
    return Diagram(walk, merged)


def add_kink(d: Diagram, edge: int, over_first: bool, sign: int) -> Diagram:
    label = d.next_label()
    if d.c == 0:
        return Diagram([(label, over_first), (label, not over_first)], {label: sign})
    return insert_passages(d, {edge: [(label, over_first), (label, not over_first)]}, {label: sign})


def _bigon(d: Diagram, a: int, b: int) -> bool:
    n = len(d.walk)
    for face in d.faces():
        if len(face) == 2:
            ends = {frozenset((d.walk[e].crossing, d.walk[(e + 1) % n].crossing)) for e, _ in face}
            if ends == {frozenset((a, b))}:
                return True
    return False


def poke(d: Diagram, e_over: int, e_under: int, rng: random.Random | None = None) -> Diagram | None:
    """Push edge ``e_over`` across edge ``e_under``, creating a bigon.

    Returns None when the two edges do not share a face.
    """
    if e_over == e_under or d.c == 0:
        return None
    a = d.next_label()
    b = a + 1
    options = [(order, sign) for order in (0, 1) for sign in (1, -1)]
    if rng is not None:
        rng.shuffle(options)
    for order, sign in options:
        unders = [(b, False), (a, False)] if order else [(a, False), (b, False)]
        try:
            out = insert_passages(
                d, {e_over: [(a, True), (b, True)], e_under: unders}, {a: sign, b: -sign}
            )
        except NonPlanar:
            continue
        if _bigon(out, a, b):
            return out
    return None


def r3_moves(d: Diagram) -> list[tuple[int, int, int]]:
    """Triangular faces across which a strand can slide (as edge triples)."""
    n = len(d.walk)
    out = []
    for face in d.faces():
        if len(face) != 3:
            continue
        edges = [e for e, _ in face]
        ends = [(d.walk[e], d.walk[(e + 1) % n]) for e in edges]
        if len({x.crossing for pair in ends for x in pair}) != 3:
            continue
        kinds = sorted((a.over + b.over) for a, b in ends)
        # one strand over both others, one under both
        if kinds == [0, 1, 2]:
            out.append(tuple(sorted(edges)))
    return out


def apply_r3(d: Diagram, edges) -> Diagram:
    """Slide across a triangle: each side's two passages swap order."""
    n = len(d.walk)
    walk = list(d.walk)
    for e in edges:
        walk[e], walk[(e + 1) % n] = walk[(e + 1) % n], walk[e]
    return Diagram(walk, dict(d.signs))


def random_pokes(d: Diagram, count: int, rng: random.Random) -> Diagram:
    """Apply ``count`` pokes between edges sharing a random face."""
    done = 0
    while done < count:
        face = rng.choice(d.faces())
        if len(face) < 2:
            continue
        (e1, _), (e2, _) = rng.sample(face, 2)
        out = poke(d, e1, e2, rng)
        if out is not None:
            d = out
            done += 1
    return d


def scramble(d: Diagram, pokes: int, kinks: int, rng: random.Random, slides: int = 0) -> Diagram:
    """Random pokes and kinks with up to ``slides`` R3 moves mixed in."""
    moves = ["poke"] * pokes + ["kink"] * kinks
    rng.shuffle(moves)
    for _ in range(slides):
        moves.insert(rng.randrange(len(moves) + 1), "slide")
    for move in moves:
        if move == "slide":
            options = r3_moves(d)
            if options:
                d = apply_r3(d, rng.choice(options))
        elif move == "poke" and d.c:
            d = random_pokes(d, 1, rng)
        else:
            edge = rng.randrange(max(1, len(d.walk)))
            d = add_kink(d, edge, rng.random() < 0.5, rng.choice((1, -1)))
    return d
