import pytest

from diagrams import (Arc, arc_positions, arcs_from_partition, crossing, eta,
                      eta_bruteforce, is_non_nesting, layout, nesting,
                      root_eta, value_pair)
from error_handler import DomainError
from rootsys import Root, build_root_system, eta_by_roots
from shimin import parking_functions
from weyl import SignedPermutation, act, identity, inverse, is_positive


def R(*coords):
    return Root(tuple(coords))


def test_layouts(a2, b2, d3):
    assert layout(a2.kind).slots == (1, 2, 3)
    assert layout(b2.kind).slots == (1, 2, 0, -2, -1)
    lay = layout(d3.kind)
    assert lay.slots == (1, 2, 3, -3, -2, -1)
    assert lay.fork == (3, -3)
    assert lay.coordinate(3) == lay.coordinate(-3) == 3
    assert lay.coordinate(-2) == 4
    with pytest.raises(DomainError):
        lay.coordinate(0)


def test_arc_positions_table(b2, c2):
    assert arc_positions(b2, R(1, 0)) == [(1, 0), (0, -1)]
    assert arc_positions(b2, R(1, -1)) == [(1, 2), (-2, -1)]
    assert arc_positions(c2, R(2, 0)) == [(1, -1)]
    assert arc_positions(c2, R(1, 1)) == [(1, -2), (2, -1)]
    assert value_pair(c2, R(1, 1)) == (1, -2)
    assert value_pair(c2, R(2, 0)) == (1, -1)
    assert value_pair(b2, R(1, 0)) == (1, 0)


def test_a2_chain_diagram(a2):
    a12, a13, a23 = a2.positive_roots
    d = arcs_from_partition(a2, identity(a2.kind), [a12, a23])
    assert [arc.endpoints for arc in d.arcs] == [(1, 2), (2, 3)]
    assert is_non_nesting(d)
    assert not crossing(d, *d.arcs)
    assert eta(d, 1, 3) == 2
    assert eta(d, 1, 2) == 1
    assert eta(d, 3, 2) == 1


def test_a3_chain_partition_has_two_arcs():
    rs = build_root_system(('A', 3))
    d = arcs_from_partition(rs, identity(rs.kind), [R(1, -1, 0, 0), R(0, 1, -1, 0)])
    assert len(d.arcs) == 2
    assert len(d.layout.slots) == 4


def test_crossing_arcs_are_not_nested():
    rs = build_root_system(('A', 3))
    d = arcs_from_partition(rs, identity(rs.kind), [R(1, 0, -1, 0), R(0, 1, 0, -1)])
    first, second = d.arcs
    assert crossing(d, first, second)
    assert not nesting(d, first, second)
    assert is_non_nesting(d)
    # 两条交叉的弧不能同时计入 η
    assert eta(d, 1, 4) == 1


def test_nesting_and_shared_endpoints():
    rs = build_root_system(('A', 3))
    d = arcs_from_partition(rs, identity(rs.kind), [])
    outer, inner = Arc((1, 4), (1, 4)), Arc((2, 3), (2, 3))
    assert nesting(d, outer, inner)
    assert nesting(d, inner, outer)
    assert not crossing(d, outer, inner)
    left, right = Arc((1, 2), (1, 2)), Arc((2, 3), (2, 3))
    assert not crossing(d, left, right)
    assert not nesting(d, left, right)


def test_fork_arcs_from_same_slot(d3):
    d = arcs_from_partition(d3, identity(d3.kind), [])
    top, bottom = Arc((2, 3), (2, 3)), Arc((2, -3), (2, -3))
    assert not crossing(d, top, bottom)
    assert not nesting(d, top, bottom)


def test_arcs_require_parking_function(a2):
    w = SignedPermutation(a2.kind, (2, 1, 3))
    with pytest.raises(DomainError):
        arcs_from_partition(a2, w, [R(1, -1, 0)])
    with pytest.raises(DomainError):
        arcs_from_partition(a2, identity(a2.kind), [R(1, -1, 0), R(1, 0, -1)])


def test_eta_needs_distinct_values(a2):
    d = arcs_from_partition(a2, identity(a2.kind), [])
    with pytest.raises(DomainError):
        eta(d, 2, 2)
    with pytest.raises(DomainError):
        eta(d, 1, -1)


def test_b2_short_root_arcs(b2):
    d = arcs_from_partition(b2, identity(b2.kind), [R(0, 1)])
    assert [arc.endpoints for arc in d.arcs] == [(2, 0), (0, -2)]
    assert eta(d, 1, -2) == 2
    assert eta(d, 2, 0) == 1
    assert eta(d, 1, 2) == 0


def test_eta_matches_bruteforce_on_all_small_parking_functions():
    for family, rank in (('A', 3), ('B', 2), ('C', 3), ('D', 4)):
        rs = build_root_system((family, rank))
        for pf in parking_functions(rs)[::7]:
            d = arcs_from_partition(rs, pf.w, pf.P)
            for alpha in rs.positive_roots:
                i, j = value_pair(rs, alpha)
                assert eta(d, i, j) == eta_bruteforce(d, i, j)


@pytest.mark.parametrize("family, rank", [
    ('A', 2), ('A', 3), ('B', 2), ('B', 3), ('C', 2), ('C', 3), ('D', 3),
])
def test_arc_eta_matches_root_eta(family, rank):
    rs = build_root_system((family, rank))
    for pf in parking_functions(rs):
        d = arcs_from_partition(rs, pf.w, pf.P)
        w_inv = inverse(pf.w)
        for alpha in rs.positive_roots:
            beta = act(w_inv, alpha)
            if not is_positive(rs, beta):
                beta = -beta
            assert root_eta(rs, d, alpha) == eta_by_roots(rs, pf.P, beta), (pf, alpha)


@pytest.mark.parametrize("family, rank", [
    ('A', 1), ('A', 2), ('A', 3), ('B', 2), ('B', 3), ('C', 2), ('C', 3), ('D', 3), ('D', 4),
])
def test_parking_function_diagrams_are_non_nesting(family, rank):
    rs = build_root_system((family, rank))
    for pf in parking_functions(rs):
        assert is_non_nesting(arcs_from_partition(rs, pf.w, pf.P)), pf


@pytest.mark.parametrize("family, rank", [('B', 2), ('B', 3), ('C', 2), ('C', 3)])
def test_eta_central_symmetry(family, rank):
    rs = build_root_system((family, rank))
    for pf in parking_functions(rs):
        d = arcs_from_partition(rs, pf.w, pf.P)
        for alpha in rs.positive_roots:
            i, j = value_pair(rs, alpha)
            assert eta(d, i, j) == eta(d, -j, -i), (pf, alpha)


@pytest.mark.parametrize("family, rank", [('B', 2), ('B', 3), ('C', 2), ('C', 3), ('D', 3), ('D', 4)])
def test_eta_of_plus_roots_is_symmetric(family, rank):
    rs = build_root_system((family, rank))
    n = rs.rank
    plus_pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for pf in parking_functions(rs):
        d = arcs_from_partition(rs, pf.w, pf.P)
        for i, j in plus_pairs:
            assert eta(d, i, -j) == eta(d, j, -i), (pf, i, j)
