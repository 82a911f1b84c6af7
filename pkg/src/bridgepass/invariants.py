"""Kauffman bracket, writhe and the writhe-normalised bracket.

``bracket_by_states`` enumerates all ``2^c`` smoothings and is the reference
implementation.  ``kauffman_bracket`` contracts crossings one at a time while
tracking how the smoothed arcs pair up the open edges; it returns the same
polynomial much faster and is what the rest of the package uses.
"""

from __future__ import annotations

import os

from .diagram import Diagram
from .errors import TooLarge
from .polynomial import LaurentPolynomial

__all__ = [
    "DEFAULT_CAP",
    "bracket_cap",
    "kauffman_bracket",
    "bracket_by_states",
    "writhe",
    "normalized_jones",
    "jones_t",
]

DEFAULT_CAP = 18

# -A^2 - A^-2
LOOP = LaurentPolynomial({2: -1, -2: -1})


def bracket_cap() -> int:
    raw = os.environ.get("BRIDGEPASS_BRACKET_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(d: Diagram, cap):
    cap = bracket_cap() if cap is None else cap
    if d.c > cap:
        raise TooLarge(f"{d.c} crossings exceeds bracket cap {cap}")


def _smoothings(quad):
    a, b, c, e = quad
    # A-smoothing joins the regions swept by turning the over-strand counterclockwise
    return ((a, b), (c, e)), ((a, e), (b, c))


def bracket_by_states(d: Diagram, cap: int | None = None) -> LaurentPolynomial:
    _check_cap(d, cap)
    if not d.walk:
        return LaurentPolynomial.one()
    quads = list(d.rotation.values())
    n_half = 2 * len(d.walk)
    total: dict[int, int] = {}
    loop_powers = [LaurentPolynomial.one()]
    for mask in range(1 << len(quads)):
        parent = list(range(n_half))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for h in range(0, n_half, 2):
            union(h, h + 1)
        n_a = 0
        for i, quad in enumerate(quads):
            a_pairs, b_pairs = _smoothings(quad)
            if mask >> i & 1:
                pairs = b_pairs
            else:
                pairs = a_pairs
                n_a += 1
            for x, y in pairs:
                union(x, y)
        loops = len({find(h) for h in range(n_half)})
        while len(loop_powers) < loops:
            loop_powers.append(loop_powers[-1] * LOOP)
        weight = loop_powers[loops - 1]
        shift = n_a - (len(quads) - n_a)
        for e, v in weight.coefficients.items():
            total[e + shift] = total.get(e + shift, 0) + v
    return LaurentPolynomial(total)


def kauffman_bracket(d: Diagram, cap: int | None = None) -> LaurentPolynomial:
    """Bracket polynomial, normalised so the crossingless circle gives 1."""
    _check_cap(d, cap)
    if not d.walk:
        return LaurentPolynomial.one()
    rot = d.rotation
    loop = LOOP.coefficients
    # state: sorted tuple of (edge, partner) pairs over edges with one end processed
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    for n_done, label in enumerate(d.labels, start=1):
        last = n_done == d.c
        quad = [h >> 1 for h in rot[label]]
        a_pairs, b_pairs = _smoothings(quad)
        new_states: dict[tuple, dict[int, int]] = {}
        for state, poly in states.items():
            for pairs, shift in ((a_pairs, 1), (b_pairs, -1)):
                partner = {}
                for x, y in state:
                    partner[x] = y
                    partner[y] = x
                loops = 0
                for x, y in pairs:
                    if x == y:
                        loops += 1
                    elif x in partner and y in partner:
                        px, py = partner.pop(x), partner.pop(y)
                        if px == y:
                            loops += 1
                        else:
                            partner[px] = py
                            partner[py] = px
                    elif x in partner:
                        px = partner.pop(x)
                        partner[px] = y
                        partner[y] = px
                    elif y in partner:
                        py = partner.pop(y)
                        partner[py] = x
                        partner[x] = py
                    else:
                        partner[x] = y
                        partner[y] = x
                key = tuple(sorted((x, y) for x, y in partner.items() if x < y))
                if last and not key:
                    # the final closed loop carries no factor
                    loops -= 1
                term = {e + shift: v for e, v in poly.items()}
                for _ in range(loops):
                    nxt: dict[int, int] = {}
                    for e, v in term.items():
                        for le, lv in loop.items():
                            nxt[e + le] = nxt.get(e + le, 0) + v * lv
                    term = nxt
                acc = new_states.setdefault(key, {})
                for e, v in term.items():
                    acc[e] = acc.get(e, 0) + v
        states = new_states
    assert set(states) == {()}
    return LaurentPolynomial(states[()])


def writhe(d: Diagram) -> int:
    """Sum of crossing signs read off the rotation system."""
    total = 0
    for in_u, second, out_u, fourth in d.rotation.values():
        # the end after the incoming under-strand is an outgoing (tail) end iff positive
        total += 1 if second % 2 == 0 else -1
    return total


def normalized_jones(d: Diagram, cap: int | None = None) -> LaurentPolynomial:
    """``(-A^3)^(-w) <D>``, an invariant of oriented knots."""
    w = writhe(d)
    factor = LaurentPolynomial({-3 * w: (-1) ** (w % 2)})
    return factor * kauffman_bracket(d, cap)


def jones_t(poly: LaurentPolynomial) -> dict[int, int]:
    """Rewrite a normalised bracket of a knot in ``t = A^-4``."""
    out = {}
    for e, v in poly.coefficients.items():
        if e % 4:
            raise ValueError("exponents of a knot's normalised bracket are multiples of 4")
        out[-e // 4] = v
    return out
