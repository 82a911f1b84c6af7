import random

import pytest
from hypothesis import given, settings, strategies as st

from bridgepass.codecs import (
    emit_extended_gauss,
    emit_pd,
    load_diagrams,
    parse_diagram,
    parse_extended_gauss,
    parse_pd,
)
from bridgepass.diagram import Diagram, canonical_form
from bridgepass.errors import CodeSyntaxError, InconsistentCode, NonPlanar, NonRealizable
from bridgepass.passes import decompose, inflate
from bridgepass.torus import standard_torus_diagram

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def same(a, b, symmetries="rotation"):
    return canonical_form(a, symmetries) == canonical_form(b, symmetries)


def test_empty_code_is_circle():
    d = parse_extended_gauss("")
    assert d.c == 0 and d.walk == () and decompose(d).k == 0
    assert len(d.faces()) == 2
    assert emit_extended_gauss(d) == ""
    assert emit_pd(d) == ""


def test_trefoil_gauss(trefoil):
    assert trefoil.c == 3
    assert set(trefoil.signs.values()) == {-1}
    assert len(trefoil.faces()) == 5


def test_shape_eight():
    d = parse_extended_gauss("O1- U1-")
    assert d.c == 1 and decompose(d).k == 1


def test_trefoil_pd_matches_gauss(trefoil):
    d = parse_pd(TREFOIL_PD)
    assert d.c == 3
    assert same(d, trefoil)


def test_pd_repeated_label_inconsistent():
    with pytest.raises(InconsistentCode):
        parse_pd("X[1,1,1,1]")


def test_pd_knotinfo_brackets(trefoil):
    assert same(parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]"), parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"))


def test_figure_eight_from_table(table):
    name, d = table[1]
    assert name == "4_1"
    assert d.c == 4 and decompose(d).k == 4


@pytest.mark.parametrize(
    "text, error",
    [
        ("O1- X2-", CodeSyntaxError),
        ("O1- U1+", InconsistentCode),
        ("O1- O1-", InconsistentCode),
        ("O1- U2- O3-", InconsistentCode),
        ("O1- U2 O2- U1-", InconsistentCode),
        ("O1 O2 U1 U2", NonRealizable),
    ],
)
def test_bad_gauss(text, error):
    with pytest.raises(error):
        parse_extended_gauss(text)


def test_signed_nonplanar_rejected():
    with pytest.raises(NonPlanar):
        Diagram([(1, True), (2, True), (1, False), (2, False)], {1: 1, 2: 1})


def test_unsigned_realization_recovers_trefoil(trefoil):
    d = parse_extended_gauss("O1 U2 O3 U1 O2 U3")
    assert same(d, trefoil, "mirror")


def test_realized_signs_planar_for_table(table):
    for _, d in table[:15]:
        unsigned = " ".join(f"{'OU'[not p.over]}{p.crossing}" for p in d.walk)
        r = parse_extended_gauss(unsigned)
        assert len(r.faces()) == r.c + 2


def test_round_trip_fixtures(fixtures):
    for d in fixtures.values():
        assert same(parse_extended_gauss(emit_extended_gauss(d)), d)
        assert same(parse_pd(emit_pd(d)), d)


def test_torus_k4_round_trip():
    d = standard_torus_diagram(4, 1)
    text = emit_extended_gauss(d)
    assert len(text.split()) == 16
    assert same(parse_diagram(text), d)
    assert len(d.faces()) == 10


@given(st.integers(0, 10_000), st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_round_trip_random_inflations(seed, n):
    rng = random.Random(seed)
    d = inflate(standard_torus_diagram(rng.randint(3, 5), rng.choice((1, -1))), n)
    assert same(parse_pd(emit_pd(d)), d)
    assert same(parse_extended_gauss(emit_extended_gauss(d)), d)


def test_canonical_relabel_and_mirror(trefoil):
    relabeled = trefoil.relabeled({1: 7, 2: 3, 3: 9})
    assert same(relabeled, trefoil)
    assert not same(trefoil.mirror(), trefoil)
    assert same(trefoil.mirror(), trefoil, "mirror")
    assert same(trefoil.mirror(), trefoil, "full")


def test_canonical_constant_over_basepoints(fixtures):
    for d in fixtures.values():
        key = canonical_form(d)
        for p in range(len(d.walk)):
            assert canonical_form(d.rebased(p)) == key


def test_canonical_form_rejects_unknown_group(trefoil):
    with pytest.raises(ValueError):
        canonical_form(trefoil, "weird")


def test_every_crossing_has_one_over_one_under(fixtures):
    for d in fixtures.values():
        for label in d.labels:
            assert d.walk[d.over_pos[label]].over
            assert not d.walk[d.under_pos[label]].over
        assert len(d.faces()) == d.c + 2


def test_dual_is_involution(fixtures):
    for d in fixtures.values():
        assert d.dual().dual() == d


def test_load_diagrams_skips_comments(tmp_path, trefoil):
    f = tmp_path / "d.txt"
    f.write_text("# a comment\n\nO1- U2- O3- U1- O2- U3-\n" + TREFOIL_PD + "\n")
    ds = load_diagrams(f)
    assert len(ds) == 2 and all(same(d, trefoil) for d in ds)


def test_emit_is_deterministic(trefoil):
    assert emit_pd(trefoil) == emit_pd(parse_pd(emit_pd(trefoil)))
    assert emit_pd(trefoil) == TREFOIL_PD
