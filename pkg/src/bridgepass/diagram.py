"""Combinatorial knot diagrams as signed Gauss walks with a derived rotation system.

A diagram with ``c`` crossings is stored as its walk: the ``2c`` passages met
while travelling once around the knot from the basepoint, each recording the
crossing it belongs to and whether the knot passes over or under there, plus
one sign per crossing.  Walk position ``p`` is the ``p``-th passage; edge ``e``
runs from position ``e`` to position ``e + 1`` (mod ``2c``).

Half-edges are numbered ``2*e`` (tail end of edge ``e``) and ``2*e + 1`` (head
end).  At a crossing the four incident half-edges, listed counterclockwise
from the incoming under-strand, are::

    sign +1:  in_under, out_over, out_under, in_over
    sign -1:  in_under, in_over,  out_under, out_over

which is the usual PD convention, and makes the sign the standard right-hand
sign: +1 when the over-strand crosses the under-strand from left to right as
seen travelling along the under-strand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import InconsistentCode, NonPlanar

__all__ = [
    "Passage",
    "CrossingSite",
    "Diagram",
    "CanonicalForm",
    "canonical_form",
    "faces",
    "SYMMETRIES",
]


class Passage(NamedTuple):
    crossing: int
    over: bool

    @property
    def level(self) -> str:
        return "over" if self.over else "under"


@dataclass(frozen=True)
class CrossingSite:
    id: int
    sign: int
    over_passage: int
    under_passage: int


class Diagram:
    """Immutable knot diagram.

    ``walk`` is a sequence of :class:`Passage` (or ``(label, over)`` pairs),
    ``signs`` maps each crossing label to +1 or -1.  Construction validates the
    Gauss structure and, unless ``check_planar`` is false, that the rotation
    system is planar (``c + 2`` faces).
    """

    __slots__ = ("_walk", "_signs", "__dict__")

    def __init__(
        self,
        walk: Iterable[Sequence] = (),
        signs: Mapping[int, int] | None = None,
        *,
        check_planar: bool = True,
    ):
        walk = tuple(Passage(int(p[0]), bool(p[1])) for p in walk)
        signs = dict(signs or {})
        seen: dict[int, list[bool]] = {}
        for p in walk:
            seen.setdefault(p.crossing, []).append(p.over)
        for label, levels in seen.items():
            if len(levels) != 2 or levels[0] == levels[1]:
                raise InconsistentCode(
                    f"crossing {label} must appear once over and once under, got {levels}"
                )
        if set(signs) != set(seen):
            raise InconsistentCode("signs must be given for exactly the crossings in the walk")
        for label, s in signs.items():
            if s not in (1, -1):
                raise InconsistentCode(f"sign of crossing {label} must be +1 or -1, got {s}")
        self._walk = walk
        self._signs = MappingProxyType({k: int(v) for k, v in signs.items()})
        if check_planar and len(walk):
            n_faces = len(self.faces())
            if n_faces != self.c + 2:
                raise NonPlanar(f"rotation system has {n_faces} faces, expected {self.c + 2}")

    # -- basic accessors -------------------------------------------------

    @property
    def walk(self) -> tuple[Passage, ...]:
        return self._walk

    @property
    def signs(self) -> Mapping[int, int]:
        return self._signs

    @property
    def c(self) -> int:
        return len(self._walk) // 2

    def __len__(self) -> int:
        return len(self._walk)

    @property
    def orientation_marker(self) -> int:
        # the stored walk always starts at the basepoint
        return 0

    @cached_property
    def over_pos(self) -> dict[int, int]:
        return {p.crossing: i for i, p in enumerate(self._walk) if p.over}

    @cached_property
    def under_pos(self) -> dict[int, int]:
        return {p.crossing: i for i, p in enumerate(self._walk) if not p.over}

    @cached_property
    def crossings(self) -> dict[int, CrossingSite]:
        return {
            label: CrossingSite(label, self._signs[label], self.over_pos[label], self.under_pos[label])
            for label in self.labels
        }

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """Crossing labels in order of first appearance along the walk."""
        out, seen = [], set()
        for p in self._walk:
            if p.crossing not in seen:
                seen.add(p.crossing)
                out.append(p.crossing)
        return tuple(out)

    def levels(self) -> str:
        return "".join("O" if p.over else "U" for p in self._walk)

    def next_label(self) -> int:
        return max(self._signs, default=0) + 1

    # -- rotation system and faces --------------------------------------

    @cached_property
    def rotation(self) -> dict[int, tuple[int, int, int, int]]:
        """Counterclockwise half-edges at each crossing, from the incoming under end."""
        n = len(self._walk)
        rot = {}
        for label in self.labels:
            po, pu = self.over_pos[label], self.under_pos[label]
            in_u, out_u = 2 * ((pu - 1) % n) + 1, 2 * pu
            in_o, out_o = 2 * ((po - 1) % n) + 1, 2 * po
            if self._signs[label] > 0:
                rot[label] = (in_u, out_o, out_u, in_o)
            else:
                rot[label] = (in_u, in_o, out_u, out_o)
        return rot

    def faces(self) -> list[tuple[tuple[int, int], ...]]:
        """Face cycles as tuples of darts ``(edge, direction)``.

        A dart ``(e, +1)`` traverses edge ``e`` along the orientation with the
        face on its right; ``(e, -1)`` traverses it backwards.
        """
        if not self._walk:
            return [((0, 1),), ((0, -1),)]
        succ = {}
        for quad in self.rotation.values():
            for i in range(4):
                succ[quad[i]] = quad[(i + 1) % 4]
        return _orbits(succ)

    def is_planar(self) -> bool:
        return len(self.faces()) == self.c + 2

    # -- derived diagrams ------------------------------------------------

    def rebased(self, position: int) -> "Diagram":
        """Same diagram with the basepoint moved to walk ``position``."""
        if not self._walk:
            return self
        position %= len(self._walk)
        return self._derived(self._walk[position:] + self._walk[:position], self._signs)

    def relabeled(self, mapping: Mapping[int, int] | None = None) -> "Diagram":
        """Relabel crossings; by default 1..c in order of first appearance."""
        if mapping is None:
            mapping = {old: i + 1 for i, old in enumerate(self.labels)}
        walk = [(mapping[p.crossing], p.over) for p in self._walk]
        signs = {mapping[k]: v for k, v in self._signs.items()}
        return self._derived(walk, signs)

    def mirror(self) -> "Diagram":
        """Reflection in a line of the projection plane: levels kept, signs negated."""
        return self._derived(self._walk, {k: -v for k, v in self._signs.items()})

    def crossing_changed(self) -> "Diagram":
        """Reflection through the projection plane: every crossing switched."""
        walk = [(p.crossing, not p.over) for p in self._walk]
        return self._derived(walk, {k: -v for k, v in self._signs.items()})

    def reversed(self) -> "Diagram":
        """Opposite orientation, basepoint kept at the same point of the curve."""
        if not self._walk:
            return self
        walk = (self._walk[0],) + tuple(reversed(self._walk[1:]))
        return self._derived(walk, self._signs)

    def dual(self) -> "Diagram":
        """Swap every over/under level and reverse the orientation.

        Overpasses become underpasses, so an underpass crossing its following
        overpass turns into an overpass crossing its following underpass.
        This is an involution.
        """
        return self.crossing_changed().reversed()

    def _derived(self, walk, signs) -> "Diagram":
        # planarity is preserved by every derivation above
        return Diagram(walk, signs, check_planar=False)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self._walk == other._walk and dict(self._signs) == dict(other._signs)

    def __hash__(self):
        return hash((self._walk, tuple(sorted(self._signs.items()))))

    def __repr__(self):
        if not self._walk:
            return "Diagram(<circle>)"
        from .codecs import emit_extended_gauss

        return f"Diagram({emit_extended_gauss(self)!r})"


def _orbits(succ: Mapping[int, int]) -> list[tuple[tuple[int, int], ...]]:
    """Orbits of ``h -> succ[h ^ 1]`` on the half-edges in ``succ``."""
    seen = set()
    out = []
    for start in sorted(succ):
        if start in seen:
            continue
        face = []
        h = start
        while h not in seen:
            seen.add(h)
            face.append((h >> 1, 1 if h % 2 == 0 else -1))
            h = succ[h ^ 1]
        out.append(tuple(face))
    return out


def faces(d: Diagram) -> list[tuple[tuple[int, int], ...]]:
    return d.faces()


# -- canonical forms -------------------------------------------------------

SYMMETRIES = ("rotation", "reversal", "mirror", "full")


@dataclass(frozen=True, order=True)
class CanonicalForm:
    key: bytes
    symmetries: str = "rotation"


def _encode(walk: Sequence[Passage], signs: Mapping[int, int]) -> tuple:
    relabel: dict[int, int] = {}
    out = []
    for p in walk:
        label = relabel.setdefault(p.crossing, len(relabel) + 1)
        out.append((label, 0 if p.over else 1, 0 if signs[p.crossing] > 0 else 1))
    return tuple(out)


def canonical_form(d: Diagram, symmetries: str = "rotation") -> CanonicalForm:
    """Lexicographically least encoding over basepoints and the chosen symmetries.

    ``symmetries`` is one of ``rotation`` (basepoint and relabelling only),
    ``reversal`` (plus orientation reversal), ``mirror`` (plus mirror image)
    or ``full`` (both).
    """
    if symmetries not in SYMMETRIES:
        raise ValueError(f"symmetries must be one of {SYMMETRIES}")
    if not d.walk:
        return CanonicalForm(b"", symmetries)
    variants = [d]
    if symmetries in ("reversal", "full"):
        variants.append(d.reversed())
    if symmetries in ("mirror", "full"):
        variants += [v.mirror() for v in variants]
    best = None
    for v in variants:
        w = v.walk
        for p in range(len(w)):
            enc = _encode(w[p:] + w[:p], v.signs)
            if best is None or enc < best:
                best = enc
    key = " ".join(f"{'OU'[lvl]}{lab}{'+-'[sg]}" for lab, lvl, sg in best).encode("ascii")
    return CanonicalForm(key, symmetries)
