import re

import pytest
from hypothesis import assume, given

import oracles
from conftest import artinian_ideals, ring
from teter import build_divisor_poset, ideal_view, is_symmetric, parse_ideal, socle_monomials, to_dot
from teter.poset import empty_view, enumerate_poset_ideals, poset_to_json, view_from_members


def count_edges(dot):
    return len(re.findall(r"->", dot))


class TestBuild:
    def test_covers_three_generator_ring(self):
        P = ring("x^3, y^4, x*y^2")
        assert set(P.upper_covers((1, 1))) == {(1, 0), (0, 1)}
        assert set(P.lower_covers((1, 1))) == {(2, 1)}

    def test_gorenstein_square(self):
        P = ring("x^2, y^2")
        assert set(P.lower_covers((0, 0))) == {(1, 0), (0, 1)}
        assert P.lower_covers((1, 0)) == ((1, 1),)
        assert P.socle == ((1, 1),)
        assert P.is_gorenstein()

    def test_thirteen_element_ring(self):
        P = ring("x^5, y^4, x^2*y^2, x^4*y")
        assert len(P) == 13
        assert set(P.socle) == {(4, 0), (3, 1), (1, 3)}

    def test_non_artinian(self):
        from teter import MonomialIdeal
        with pytest.raises(ValueError):
            build_divisor_poset(MonomialIdeal(2, [(2, 0), (1, 1)]))

    def test_json_export(self):
        data = poset_to_json(ring("x^2, y^2"))
        assert data["elements"] == [[0, 0], [1, 0], [0, 1], [1, 1]]
        assert data["upper_covers"] == [[], [0], [0], [2, 1]]


class TestViews:
    def test_homomorphism_example(self):
        P = ring("x^3, y^4, x*y^2")
        V = ideal_view(P, [(1, 0)])
        assert V.members == {(1, 0), (2, 0), (1, 1), (2, 1)}
        assert V.gen == ((1, 0),)
        assert V.soc == ((2, 1),)
        W = ideal_view(P, [(0, 2)])
        assert W.members == {(0, 2), (0, 3)}
        assert W.soc == ((0, 3),)

    def test_unit_generator(self):
        P = ring("x^3, y^4, x*y^2")
        assert ideal_view(P, [(0, 0)]).members == set(P.elements)

    def test_generator_outside(self):
        P = ring("x^3, y^4, x*y^2")
        with pytest.raises(ValueError):
            ideal_view(P, [(3, 0)])

    def test_members_must_be_closed(self):
        P = ring("x^2, y^2")
        with pytest.raises(ValueError):
            view_from_members(P, [(1, 0)])

    def test_union_intersection(self):
        P = ring("x^3, y^4, x*y^2")
        A, B = ideal_view(P, [(1, 0)]), ideal_view(P, [(0, 2)])
        assert A.union(B).gen == ((1, 0), (0, 2))
        assert A.intersection(B).members == frozenset()
        with pytest.raises(ValueError):
            A.union(ideal_view(ring("x^3, y^4, x*y^2"), [(1, 0)]))


class TestDot:
    def test_square(self):
        dot = to_dot(ring("x^2, y^2"))
        assert dot.count("label=") == 4
        assert count_edges(dot) == 4

    def test_three_generator_ring_edges(self):
        # every cover of the 8 standard monomials; see decisions ledger on the count
        dot = to_dot(ring("x^3, y^4, x*y^2"))
        assert dot.count("label=") == 8
        assert count_edges(dot) == 9

    def test_highlight(self):
        P = ring("x^3, y^4, x*y^2")
        assert "filled" not in to_dot(P)
        assert "filled" not in to_dot(P, empty_view(P))
        dot = to_dot(P, ideal_view(P, [(1, 0)]))
        assert dot.count("filled") == 4

    def test_foreign_highlight(self):
        P, Q = ring("x^2, y^2"), ring("x^2, y^2")
        with pytest.raises(ValueError):
            to_dot(P, ideal_view(Q, [(1, 0)]))

    def test_ranks(self):
        dot = to_dot(ring("x^2, y^2"))
        assert dot.count("rank=same") == 3


# properties


@given(artinian_ideals())
def test_cover_lists_are_inverse(I):
    P = build_divisor_poset(I)
    for u in P:
        for v in P.upper_covers(u):
            assert u in P.lower_covers(v)
            assert sum(u) == sum(v) + 1 and all(a >= b for a, b in zip(u, v))
    total = sum(len(P.upper_covers(u)) for u in P)
    assert total == sum(len(P.lower_covers(u)) for u in P) == count_edges(to_dot(P))


@given(artinian_ideals())
def test_socle_of_whole_poset(I):
    P = build_divisor_poset(I)
    assert len(ideal_view(P, [(0,) * I.n]).soc) == len(socle_monomials(I))


@given(artinian_ideals(max_exp=3))
def test_closure_idempotent_and_enumeration_complete(I):
    P = build_divisor_poset(I)
    assume(len(P) <= 12)
    views = enumerate_poset_ideals(P)
    assert {V.members for V in views} == set(oracles.down_closed_subsets(list(P.elements), P.n))
    for V in views:
        assert ideal_view(P, V.gen).members == V.members
        gen, soc = oracles.gen_soc(V.members, list(P.elements), P.n)
        assert set(V.gen) == gen and set(V.soc) == soc


@given(artinian_ideals(max_exp=3))
def test_symmetric_views_have_balanced_antichains(I):
    P = build_divisor_poset(I)
    assume(len(P) <= 12)
    for V in enumerate_poset_ideals(P):
        if is_symmetric(P, V) is not None:
            assert len(V.gen) == len(V.soc)


def test_enumeration_guard():
    with pytest.raises(ValueError):
        enumerate_poset_ideals(build_divisor_poset(parse_ideal("x^5, y^5")), limit=10)
