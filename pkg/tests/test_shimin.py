from fractions import Fraction

import pytest

from error_handler import DomainError, InadmissibleError, ParseError
from rootsys import Root, build_root_system, make_partition
from shimin import (ParkingFunction, ShiVector, SignType, al_forward,
                    arr_forward, check_shi_relations, floors, is_admissible,
                    local_improvement, minimal_element, minimal_from_sign,
                    parking_function_from_json, parking_function_to_json,
                    parking_functions, pattern, region_contains,
                    shi_epsilons, sign_of, sign_type_from_json,
                    sign_type_of_pf, sign_type_to_json)
from utils import parse_sign_csv
from weyl import (SignedPermutation, act, identity, inverse, inversion_set,
                  is_positive, longest_element)


def R(*coords):
    return Root(tuple(coords))


def vec(rs, *entries):
    return ShiVector(rs.kind, tuple(entries))


def test_check_shi_relations(a2):
    a12, a13, a23 = a2.positive_roots
    assert check_shi_relations(a2, vec(a2, 0, 0, 0)) == []
    assert check_shi_relations(a2, vec(a2, 1, 2, 1)) == []
    violations = check_shi_relations(a2, vec(a2, 0, 2, 0))
    assert len(violations) == 1
    assert violations[0].triple == (a12, a23, a13)
    assert violations[0].residual == 2


def test_shi_epsilons(a2):
    a12, a13, a23 = a2.positive_roots
    assert shi_epsilons(a2, vec(a2, 1, 2, 1)) == {(a12, a23, a13): 0}
    assert shi_epsilons(a2, vec(a2, 1, 3, 1)) == {(a12, a23, a13): 1}
    with pytest.raises(DomainError):
        shi_epsilons(a2, vec(a2, 0, 2, 0))


def test_sign_of(a2):
    assert sign_of(vec(a2, 0, 0, 0)).signs == ('0', '0', '0')
    assert sign_of(vec(a2, 1, 2, 1)).signs == ('+', '+', '+')
    assert sign_of(vec(a2, -1, 0, 1)).signs == ('-', '0', '+')


def test_sign_type_validation(a2):
    with pytest.raises(ParseError):
        SignType(a2.kind, ('+', '+'))
    with pytest.raises(ParseError):
        SignType(a2.kind, ('+', '?', '-'))


def test_parking_function_validation(a2):
    w = SignedPermutation(a2.kind, (2, 1, 3))
    with pytest.raises(DomainError):
        ParkingFunction(w, make_partition(a2, [R(1, -1, 0)]))


@pytest.mark.parametrize("family, rank", [('A', 2), ('B', 2), ('D', 3)])
def test_identity_without_arcs_is_zero(family, rank):
    rs = build_root_system((family, rank))
    m = minimal_element(rs, ParkingFunction(identity(rs.kind), make_partition(rs, [])))
    assert m.entries == (0,) * len(rs)


def test_minimal_element_cases(a2):
    a12, a13, a23 = a2.positive_roots
    chain = ParkingFunction(identity(a2.kind), make_partition(a2, [a12, a23]))
    assert minimal_element(a2, chain).entries == (1, 2, 1)
    assert sign_type_of_pf(a2, chain).signs == ('+', '+', '+')

    longest = ParkingFunction(longest_element(a2), make_partition(a2, []))
    assert minimal_element(a2, longest).entries == (-1, -1, -1)

    rotated = ParkingFunction(SignedPermutation(a2.kind, (2, 3, 1)), make_partition(a2, [a12]))
    assert minimal_element(a2, rotated).entries == (-2, -1, 1)
    assert floors(rotated) == (a23,)


def test_al_forward(a2):
    a12, a13, a23 = a2.positive_roots
    zero = al_forward(parse_sign_csv(a2, "0,0,0"))
    assert zero.w == identity(a2.kind)
    assert len(zero.P) == 0

    chain = al_forward(parse_sign_csv(a2, "+,+,+"))
    assert chain.w.images == (1, 2, 3)
    assert chain.P.roots == (a12, a23)

    swapped = al_forward(parse_sign_csv(a2, "+,+,-"))
    assert swapped.w.images == (1, 3, 2)
    assert swapped.P.roots == (a12,)


def test_al_forward_rejects(a2, b2):
    with pytest.raises(InadmissibleError):
        al_forward(parse_sign_csv(a2, "0,0,+"))
    with pytest.raises(DomainError):
        al_forward(parse_sign_csv(b2, "0,0,0,0"))


def test_al_round_trip_a2(a2):
    found = parking_functions(a2)
    assert len(found) == 16
    for pf in found:
        assert al_forward(sign_type_of_pf(a2, pf)) == pf


def test_minimal_from_sign_table(a2, a2_minima):
    for text, expected in a2_minima.items():
        v = parse_sign_csv(a2, text)
        m = minimal_from_sign(a2, v)
        assert m.entries == expected, text
        assert sign_of(m) == v


def test_is_admissible(a2):
    assert not is_admissible(a2, parse_sign_csv(a2, "0,0,+"))
    assert is_admissible(a2, parse_sign_csv(a2, "0,0,-"))
    assert is_admissible(a2, parse_sign_csv(a2, "0,0,0"))
    with pytest.raises(InadmissibleError):
        minimal_from_sign(a2, parse_sign_csv(a2, "0,0,+"))


def test_arr_forward_zero_sign_type():
    for family, rank in (('A', 2), ('B', 2), ('C', 3), ('D', 3)):
        rs = build_root_system((family, rank))
        pf = arr_forward(rs, SignType(rs.kind, ('0',) * len(rs)))
        assert pf.w == identity(rs.kind)
        assert len(pf.P) == 0


@pytest.mark.parametrize("rank", [2, 3])
def test_arr_forward_agrees_with_al_forward(rank):
    rs = build_root_system(('A', rank))
    for pf in parking_functions(rs):
        v = sign_type_of_pf(rs, pf)
        assert arr_forward(rs, v) == al_forward(v) == pf


@pytest.mark.parametrize("family, rank, count", [
    ('A', 1, 3), ('A', 2, 16), ('A', 3, 125), ('B', 2, 25), ('B', 3, 343),
    ('C', 2, 25), ('C', 3, 343), ('D', 3, 125),
])
def test_parking_functions_give_distinct_sign_types(family, rank, count):
    rs = build_root_system((family, rank))
    found = parking_functions(rs)
    assert len(found) == count
    assert len({sign_type_of_pf(rs, pf) for pf in found}) == count


@pytest.mark.parametrize("family, rank", [
    ('A', 3), ('B', 2), ('B', 3), ('C', 2), ('C', 3), ('D', 3),
])
def test_minimal_elements_are_shi_vectors(family, rank):
    rs = build_root_system((family, rank))
    for pf in parking_functions(rs):
        m = minimal_element(rs, pf)
        assert check_shi_relations(rs, m) == []
        negative = {a for a, x in zip(rs.positive_roots, m.entries) if x < 0}
        assert negative == set(inversion_set(rs, pf.w))
        w_inv = inverse(pf.w)
        assert negative == {a for a in rs.positive_roots if not is_positive(rs, act(w_inv, a))}


def test_b2_arr_forward_recovers_every_parking_function(b2):
    for pf in parking_functions(b2):
        assert arr_forward(b2, sign_type_of_pf(b2, pf)) == pf


def test_pattern():
    assert pattern(('+', '+', '+')) == (1, 2, 3)
    assert pattern(('+', '+', '-')) == (1, 3, 2)
    assert pattern(('-', '+', '+')) == (2, 1, 3)
    assert pattern(('-', '-', '+')) == (2, 3, 1)
    assert pattern(('+', '-', '-')) == (3, 1, 2)
    assert pattern(('-', '-', '-')) == (3, 2, 1)
    assert pattern(('0', '0', '-')) == pattern(('+', '+', '-'))
    assert pattern(('-', '0', '0')) == pattern(('-', '+', '+'))


def test_region_contains(a2):
    point = (Fraction(1, 4), Fraction(0), Fraction(-1, 4))
    assert region_contains(a2, parse_sign_csv(a2, "0,0,0"), point)
    assert not region_contains(a2, parse_sign_csv(a2, "+,+,+"), point)
    far = (Fraction(3), Fraction(0), Fraction(-3))
    assert region_contains(a2, parse_sign_csv(a2, "+,+,+"), far)
    with pytest.raises(DomainError):
        region_contains(a2, parse_sign_csv(a2, "0,0,0"), point[:2])


@pytest.mark.parametrize("family, rank", [('A', 2), ('B', 2), ('C', 2), ('D', 3)])
def test_local_improvement_never_finds_smaller_vector(family, rank):
    rs = build_root_system((family, rank))
    for pf in parking_functions(rs):
        assert local_improvement(rs, minimal_element(rs, pf)) is None


def test_local_improvement_finds_smaller_vector(a2):
    # (1,3,1) 与 (1,2,1) 同号，且 (1,2,1) 仍满足 Shi 关系
    assert local_improvement(a2, vec(a2, 1, 3, 1)).entries == (1, 2, 1)


def test_json_round_trip(a2):
    a12, a13, a23 = a2.positive_roots
    pf = ParkingFunction(identity(a2.kind), make_partition(a2, [a12, a23]))
    data = parking_function_to_json(pf)
    assert data == {'w': [1, 2, 3], 'P': [[1, -1, 0], [0, 1, -1]]}
    assert parking_function_from_json(a2, data) == pf

    v = parse_sign_csv(a2, "-,0,+")
    assert sign_type_to_json(v) == {'family': 'A', 'rank': 2, 'signs': ['-', '0', '+']}
    assert sign_type_from_json(sign_type_to_json(v)) == v
    with pytest.raises(ParseError):
        sign_type_from_json({'family': 'A'})
