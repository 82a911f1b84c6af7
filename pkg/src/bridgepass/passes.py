"""Overpass/underpass decomposition and the quantities built on it.

Pass boundaries are modelled as positions between consecutive walk passages:
boundary ``p`` sits just before walk position ``p``.  Pass indices are
0-based and taken mod ``k``; overpass ``o[i]`` is followed by underpass
``u[i]``, which is followed by ``o[i + 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram
from .errors import EmptyDiagram

__all__ = [
    "PassDecomposition",
    "IncidenceMatrix",
    "RuleReport",
    "BoundsReport",
    "decompose",
    "bridge_number",
    "is_alternating",
    "certifies_trivial",
    "incidence",
    "check_rules",
    "check_bounds",
    "inflate",
]


@dataclass(frozen=True)
class PassDecomposition:
    k: int
    start: int
    boundaries: tuple[int, ...]
    overpasses: tuple[tuple[int, ...], ...]
    underpasses: tuple[tuple[int, ...], ...]

    @property
    def over_lengths(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.overpasses)

    @property
    def under_lengths(self) -> tuple[int, ...]:
        return tuple(len(u) for u in self.underpasses)

    @property
    def starts(self) -> tuple[int, ...]:
        return self.boundaries[0::2]

    @property
    def finishes(self) -> tuple[int, ...]:
        return self.boundaries[1::2]

    @property
    def pass_of(self) -> dict[int, int]:
        """Walk position -> index of the (over- or under-) pass containing it."""
        out = {}
        for i, rng in enumerate(self.overpasses):
            out.update((p, i) for p in rng)
        for i, rng in enumerate(self.underpasses):
            out.update((p, i) for p in rng)
        return out


def decompose(d: Diagram, start: int = 0) -> PassDecomposition:
    """Split the walk into alternating overpasses and underpasses.

    Starting just before the first under-passage at or after ``start``, walk
    to the first over-passage (this is ``s_1``), then to the next
    under-passage (``f_1``), and so on until the walk closes up.
    """
    n = len(d.walk)
    if n == 0:
        return PassDecomposition(0, 0, (), (), ())
    over = [p.over for p in d.walk]
    star = next((start + t) % n for t in range(n) if not over[(start + t) % n])
    s1 = next((star + t) % n for t in range(n) if over[(star + t) % n])
    boundaries = []
    runs = []
    pos = s1
    run = []
    level = True
    for t in range(n):
        p = (s1 + t) % n
        if over[p] != level:
            runs.append(tuple(run))
            boundaries.append(pos)
            run, level, pos = [], over[p], p
        run.append(p)
    runs.append(tuple(run))
    boundaries.append(pos)
    # boundaries now holds the start position of each run, beginning with s1
    overpasses = tuple(runs[0::2])
    underpasses = tuple(runs[1::2])
    return PassDecomposition(len(overpasses), start, tuple(boundaries), overpasses, underpasses)


def bridge_number(d: Diagram) -> int:
    return decompose(d).k


def certifies_trivial(d: Diagram) -> bool:
    """At most one overpass forces the unknot."""
    return bridge_number(d) <= 1


def is_alternating(d: Diagram) -> bool:
    """Levels strictly alternate along the walk; vacuously true for the circle."""
    w = d.walk
    return all(w[i].over != w[i - 1].over for i in range(len(w)))


@dataclass(frozen=True)
class IncidenceMatrix:
    entries: tuple[tuple[int, ...], ...]
    decomposition: PassDecomposition

    @property
    def k(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        k = self.k
        return self.entries[i % k][j % k]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.entries]

    def col_sums(self) -> list[int]:
        return [sum(col) for col in zip(*self.entries)]

    def total(self) -> int:
        return sum(self.row_sums())


def incidence(d: Diagram, dec: PassDecomposition | None = None) -> IncidenceMatrix:
    """Counts of crossings between overpass ``i`` and underpass ``j``."""
    if d.c == 0:
        raise EmptyDiagram("incidence matrix needs at least one crossing")
    dec = dec or decompose(d)
    pass_of = dec.pass_of
    m = [[0] * dec.k for _ in range(dec.k)]
    for label in d.labels:
        m[pass_of[d.over_pos[label]]][pass_of[d.under_pos[label]]] += 1
    return IncidenceMatrix(tuple(tuple(r) for r in m), dec)


@dataclass(frozen=True)
class RuleReport:
    k: int
    rule1_ok: bool
    rule2_ok: bool
    rule3_ok: bool
    violations: tuple[tuple[int, int, str], ...] = field(default=())
    # no overpass meets every underpass; follows from rule 2
    no_overpass_meets_all: bool = True

    @property
    def all_ok(self) -> bool:
        return self.rule1_ok and self.rule2_ok and self.rule3_ok


def check_rules(d: Diagram) -> RuleReport:
    m = incidence(d)
    k = m.k
    violations = []
    for i in range(k):
        for j in range(k):
            if m[i, j] > 1:
                violations.append((i, j, "rule1"))
    for i in range(k):
        for j in sorted({i, (i - 1) % k}):
            if m[i, j] > 0:
                violations.append((i, j, "rule2"))
    for i, s in enumerate(m.row_sums()):
        if s != k - 2:
            violations.append((i, -1, "rule3_row"))
    for j, s in enumerate(m.col_sums()):
        if s != k - 2:
            violations.append((-1, j, "rule3_col"))
    kinds = {v[2] for v in violations}
    meets_all = all(sum(1 for j in range(k) if m[i, j]) < k for i in range(k))
    return RuleReport(
        k=k,
        rule1_ok="rule1" not in kinds,
        rule2_ok="rule2" not in kinds,
        rule3_ok=not kinds & {"rule3_row", "rule3_col"},
        violations=tuple(violations),
        no_overpass_meets_all=meets_all,
    )


@dataclass(frozen=True)
class BoundsReport:
    b: int
    c: int
    assume_minimal: bool
    b_le_c: bool
    upper_ok: bool | None = None
    lower_ok: bool | None = None
    # b in {1, 2} cannot occur for a minimal diagram of a nontrivial knot
    small_b_contradiction: bool | None = None

    @property
    def holds(self) -> bool:
        return self.b_le_c and self.upper_ok is not False and self.lower_ok is not False


def _lower_bound_holds(b: int, c: int) -> bool:
    # 1 + sqrt(1 + c) <= b, compared exactly in integers
    return b >= 1 and (b - 1) ** 2 >= 1 + c


def check_bounds(d: Diagram, assume_minimal: bool = False) -> BoundsReport:
    b, c = bridge_number(d), d.c
    report = BoundsReport(b=b, c=c, assume_minimal=assume_minimal, b_le_c=b <= c)
    if assume_minimal and c >= 1:
        report = BoundsReport(
            b=b,
            c=c,
            assume_minimal=True,
            b_le_c=b <= c,
            upper_ok=c <= b * (b - 2),
            lower_ok=_lower_bound_holds(b, c),
            small_b_contradiction=b in (1, 2),
        )
    return report


def inflate(d: Diagram, n: int) -> Diagram:
    """Add ``n`` crossings without changing the number of overpasses.

    An ``n``-fold nested kink is inserted at ``s_1``: the walk gains
    ``U(t1) .. U(tn) O(tn) .. O(t1)`` there, so the new under-passages extend
    the last underpass and the new over-passages extend the first overpass.
    Each kink's sign is the first one that keeps the diagram planar.
    """
    if d.c == 0:
        raise EmptyDiagram("inflation needs a crossing to anchor the kinks")
    if n < 1:
        raise ValueError("n must be positive")
    s1 = decompose(d).starts[0]
    base = d.rebased(s1)
    first = base.next_label()
    signs = dict(base.signs)
    labels = []
    for t in range(n):
        label = first + t
        labels.append(label)
        spiral = [(x, False) for x in labels] + [(x, True) for x in reversed(labels)]
        walk = spiral + list(base.walk)
        for s in (1, -1):
            signs[label] = s
            candidate = Diagram(walk, signs, check_planar=False)
            if candidate.is_planar():
                break
        else:  # pragma: no cover - a kink always fits on one side
            raise AssertionError("no planar sign for the spiral kink")
    # put the new under-passages at the end so the basepoint is s_1 again
    return candidate.rebased(n)
