import math

import pytest
from hypothesis import given, settings, strategies as st

from bridgepass.codecs import parse_diagram
from bridgepass.diagram import Diagram
from bridgepass.errors import EmptyDiagram
from bridgepass.invariants import normalized_jones
from bridgepass.passes import (
    bridge_number,
    certifies_trivial,
    check_bounds,
    check_rules,
    decompose,
    incidence,
    inflate,
    is_alternating,
)
from bridgepass.torus import standard_torus_diagram

from conftest import random_inflations


def test_circle_has_no_passes():
    assert decompose(Diagram()).k == 0
    assert is_alternating(Diagram())
    assert certifies_trivial(Diagram())
    with pytest.raises(EmptyDiagram):
        incidence(Diagram())


def test_shape_eight_single_pass():
    d = parse_diagram("O1+ U1+")
    assert bridge_number(d) == 1
    assert certifies_trivial(d)


def test_trefoil_decomposition(trefoil):
    dec = decompose(trefoil)
    assert dec.k == 3
    assert dec.over_lengths == (1, 1, 1) and dec.under_lengths == (1, 1, 1)
    assert is_alternating(trefoil)


def test_decomposition_shape(fixtures):
    for d in fixtures.values():
        dec = decompose(d)
        assert sum(dec.over_lengths) + sum(dec.under_lengths) == 2 * d.c
        for o in dec.overpasses:
            assert o and all(d.walk[p].over for p in o)
        for u in dec.underpasses:
            assert u and not any(d.walk[p].over for p in u)


def test_start_independence(fixtures):
    for d in list(fixtures.values()) + random_inflations(30):
        k = decompose(d).k
        assert all(decompose(d, p).k == k for p in range(len(d.walk)))


def test_figure_eight_and_torus(fixtures):
    assert bridge_number(fixtures["figure-eight"]) == 4
    assert bridge_number(standard_torus_diagram(5)) == 5
    assert not is_alternating(standard_torus_diagram(4))


def test_alternating_iff_b_equals_c(table, fixtures):
    for d in [d for _, d in table] + list(fixtures.values()) + random_inflations(20):
        if d.c:
            assert (bridge_number(d) == d.c) == is_alternating(d)
            assert bridge_number(d) <= d.c


def test_trefoil_incidence(trefoil):
    m = incidence(trefoil)
    for i in range(3):
        for j in range(3):
            adjacent = j in (i, (i - 1) % 3)
            assert m[i, j] == (0 if adjacent else 1)


def test_incidence_sums(fixtures):
    for d in fixtures.values():
        if not d.c:
            continue
        m = incidence(d)
        dec = m.decomposition
        assert m.total() == d.c
        assert m.row_sums() == list(dec.over_lengths)
        assert m.col_sums() == list(dec.under_lengths)


def test_torus_k4_incidence():
    m = incidence(standard_torus_diagram(4, -1))
    assert m.row_sums() == [2] * 4 and m.col_sums() == [2] * 4
    assert all(m[i, i] == 0 and m[i, i - 1] == 0 for i in range(4))


def test_r2_poke_has_double_entry(fixtures):
    m = incidence(fixtures["r2-poke"])
    assert max(max(r) for r in m.entries) == 2
    assert not check_rules(fixtures["r2-poke"]).rule1_ok


def test_rules_on_fixtures(fixtures):
    assert check_rules(standard_torus_diagram(5)).all_ok
    spiral = check_rules(fixtures["trefoil-spiral-2"])
    assert not spiral.rule2_ok
    assert any(kind == "rule2" for _, _, kind in spiral.violations)
    g = check_rules(fixtures["goeritz"])
    assert g.rule1_ok and g.rule2_ok and not g.rule3_ok
    assert g.no_overpass_meets_all


def test_all_rules_force_extremal_count(fixtures, table):
    for d in list(fixtures.values()) + [d for _, d in table]:
        if d.c and check_rules(d).all_ok:
            k = bridge_number(d)
            assert d.c == k * (k - 2)


def test_trefoil_bounds_tight(trefoil):
    r = check_bounds(trefoil, assume_minimal=True)
    assert (r.b, r.c) == (3, 3)
    assert r.b_le_c and r.upper_ok and r.lower_ok
    assert r.c == r.b * (r.b - 2) and 1 + math.isqrt(1 + r.c) == r.b


def test_torus_lower_bound_tight():
    d = standard_torus_diagram(4)
    r = check_bounds(d, assume_minimal=True)
    assert r.lower_ok and (r.b - 1) ** 2 == 1 + r.c


def test_bounds_without_minimality(table):
    # 5_1 is a (2,5) torus knot with bridge number 2, but only the diagram quantity is reported
    d = dict(table)["5_1"]
    r = check_bounds(d)
    assert r.b_le_c and r.upper_ok is None and r.lower_ok is None
    assert r.holds


def test_small_b_flag():
    r = check_bounds(parse_diagram("O1+ U1+"), assume_minimal=True)
    assert r.small_b_contradiction


@pytest.mark.parametrize("n", [1, 5])
def test_inflate_trefoil(trefoil, n):
    d = inflate(trefoil, n)
    assert d.c == 3 + n and bridge_number(d) == 3
    assert normalized_jones(d) == normalized_jones(trefoil)


def test_inflate_torus():
    d = inflate(standard_torus_diagram(4, 1), 3)
    assert d.c == 11 and bridge_number(d) == 4
    assert check_bounds(d).b_le_c


def test_inflate_needs_a_crossing():
    with pytest.raises(EmptyDiagram):
        inflate(Diagram(), 1)
    with pytest.raises(ValueError):
        inflate(parse_diagram("O1+ U1+"), 0)


@given(st.integers(0, 2000))
@settings(max_examples=30, deadline=None)
def test_inflation_property(seed):
    (d,) = random_inflations(1, seed)
    assert bridge_number(d) <= d.c
    assert len(d.faces()) == d.c + 2
