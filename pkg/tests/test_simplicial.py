from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from teter import build_divisor_poset, teter_type_multigraded
from teter import simplicial as sc
from teter.homs import trace_members
from teter.monomial import minimalize


def engine_trace(delta):
    P = build_divisor_poset(sc.kdelta_ideal(delta))
    return {tuple(sorted(sc.monomial_face(u))) for u in minimalize(trace_members(P))}, P


def faces_of(gens):
    return {tuple(sorted(sc.monomial_face(u))) for u in gens}


def brute_max_independent(n, edges):
    E = {frozenset(e) for e in edges}
    indep = [set(S) for r in range(n + 1) for S in combinations(range(1, n + 1), r)
             if not any(frozenset(p) in E for p in combinations(S, 2))]
    return {frozenset(S) for S in indep if not any(S < T for T in indep)}


# example complexes: (n, facets, trace generators as faces, Teter type)
EXAMPLES = {
    "a": (4, [[1, 2, 3], [3, 4]], {(1,), (2,), (4,)}, False),
    "b": (4, [[1, 2, 3], [1, 2, 4]], {(3,), (4,)}, True),
    "c": (5, [[1, 2, 3], [1, 2, 4], [1, 2, 5]], {(3,), (4,), (5,)}, False),
    "d": (6, [[1, 4, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]], {(1,), (2,), (3,), (4, 5, 6)}, False),
    "e": (6, [[1, 4], [2, 5], [3, 6], [4, 5, 6]], {(1,), (2,), (3,), (4, 5), (5, 6), (4, 6)}, False),
    "f": (4, [[1, 2], [3, 4]], {(1,), (2,), (3,), (4,)}, False),
}

RP2 = [[1, 2, 4], [1, 3, 4], [2, 4, 5], [4, 5, 6], [3, 4, 6], [2, 3, 5], [1, 3, 5], [1, 5, 6], [1, 2, 6], [2, 3, 6]]


def polygon(n):
    return sc.complex_from_facets(n, [[i, i % n + 1] for i in range(1, n + 1)])


class TestComplexes:
    def test_construction(self):
        assert len(sc.complex_from_facets(4, [[1, 2, 3], [3, 4]]).facets) == 2
        d = sc.complex_from_facets(4, [[1, 2, 3], [1, 2], [3, 4]])
        assert set(d.facets) == {frozenset({1, 2, 3}), frozenset({3, 4})}
        assert {1, 2} in d and {2, 4} not in d

    def test_errors(self):
        with pytest.raises(ValueError):
            sc.complex_from_facets(3, [[1, 4]])
        with pytest.raises(ValueError):
            sc.complex_from_facets(3, [[1, 2]])

    def test_dict_round_trip(self):
        d = sc.complex_from_facets(4, [[1, 2, 3], [3, 4]])
        assert sc.complex_from_dict(d.to_dict()) == d
        with pytest.raises(ValueError):
            sc.complex_from_dict({"facets": [[1]]})

    def test_nonfaces_and_flag(self):
        tri = polygon(3)
        assert sc.minimal_nonfaces(tri) == [frozenset({1, 2, 3})] and not sc.is_flag(tri)
        pent = polygon(5)
        assert sc.is_flag(pent)
        assert {tuple(sorted(F)) for F in sc.minimal_nonfaces(pent)} == {(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)}
        b = sc.complex_from_facets(4, [[1, 2, 3], [1, 2, 4]])
        assert sc.minimal_nonfaces(b) == [frozenset({3, 4})] and sc.is_flag(b)

    def test_kdelta(self):
        b = sc.complex_from_facets(4, [[1, 2, 3], [1, 2, 4]])
        squares = {tuple(2 if j == i else 0 for j in range(4)) for i in range(4)}
        assert set(sc.kdelta_ideal(b).generators) == squares | {(0, 0, 1, 1)}
        assert set(sc.kdelta_ideal(sc.complex_from_facets(3, [[1, 2, 3]])).generators) == {(2, 0, 0), (0, 2, 0), (0, 0, 2)}
        assert (1, 1, 1) in set(sc.kdelta_ideal(polygon(3)).generators)

    def test_free_faces(self):
        tri = polygon(3)
        assert set(sc.minimal_free_faces(tri)) == {frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3})}
        b = sc.complex_from_facets(4, [[1, 2, 3], [1, 2, 4]])
        assert set(sc.minimal_free_faces(b)) == {frozenset({3}), frozenset({4})}
        simplex = sc.complex_from_facets(3, [[1, 2, 3]])
        assert frozenset() in sc.free_faces(simplex)
        assert frozenset() not in sc.free_faces(b)


class TestTraces:
    @pytest.mark.parametrize("key", sorted(EXAMPLES))
    def test_examples(self, key):
        n, facets, expected, teter = EXAMPLES[key]
        delta = sc.complex_from_facets(n, facets)
        got, P = engine_trace(delta)
        assert got == expected
        assert (teter_type_multigraded(P)[0] == "yes") is teter
        if sc.is_flag(delta):
            assert faces_of(sc.flag_trace_gens(delta)) == expected

    def test_polygons(self):
        got, P = engine_trace(polygon(3))
        assert got == {(1,), (2,), (3,)} and teter_type_multigraded(P)[0] == "yes"
        with pytest.raises(ValueError):
            sc.flag_trace_gens(polygon(3))
        for n, teter in ((4, True), (5, False), (6, False)):
            edges = {tuple(sorted((i, i % n + 1))) for i in range(1, n + 1)}
            got, P = engine_trace(polygon(n))
            assert got == edges
            assert faces_of(sc.flag_trace_gens(polygon(n))) == edges
            assert (teter_type_multigraded(P)[0] == "yes") is teter

    def test_projective_plane(self):
        rp2 = sc.complex_from_facets(6, RP2)
        assert not sc.is_flag(rp2)
        got, _ = engine_trace(rp2)
        assert got == set(combinations(range(1, 7), 2))


class TestGraphs:
    def test_independence(self):
        assert set(sc.independence_complex(sc.path_graph(2), 2).facets) == {frozenset({1}), frozenset({2})}
        assert set(sc.independence_complex(sc.cycle_graph(4), 4).facets) == {frozenset({1, 3}), frozenset({2, 4})}

    @pytest.mark.parametrize("edges", [[(1, 1)], [(1, 2), (2, 1)], [(1, 5)]])
    def test_bad_graphs(self, edges):
        with pytest.raises(ValueError):
            sc.independence_complex(edges, 3)

    @given(st.integers(1, 7).flatmap(lambda n: st.tuples(
        st.just(n), st.sets(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] < e[1])))))
    def test_independence_matches_brute_force(self, case):
        n, edges = case
        assert set(sc.independence_complex(sorted(edges), n).facets) == brute_max_independent(n, edges)

    def test_path_seven(self):
        perm, tau = sc.path_sequences(7)
        assert perm == [(1, 3, 5, 7), (1, 3, 6), (1, 4, 6), (1, 4, 7), (2, 4, 6), (2, 4, 7), (2, 5, 7)]
        expected = [(1, 5), (3, 5), (3, 7), (3, 6), (1, 4, 6), (1, 4, 7), (2, 6), (2, 4, 7), (2, 5)]
        assert sorted(tau) == sorted(expected) and len(tau) == 9

    def test_small_cases(self):
        assert sc.path_sequences(2) == ([(1,), (2,)], [(1,), (2,)])
        with pytest.raises(ValueError):
            sc.path_sequences(1)
        with pytest.raises(ValueError):
            sc.cycle_sequences(2)

    def test_cycles(self):
        soc, tr = sc.cycle_sequences(5)
        rotations = {tuple(sorted(((1 + r - 1) % 5 + 1, (3 + r - 1) % 5 + 1))) for r in range(5)}
        assert set(soc) == rotations == set(tr)
        assert sc.cycle_sequences(4)[1] == [(1,), (2,), (3,), (4,)]
        assert (1, 5, 7) in sc.cycle_sequences(9)[1]

    @pytest.mark.parametrize("n", range(2, 8))
    def test_path_trace_formula(self, n):
        perm, tau = sc.path_sequences(n)
        delta = sc.independence_complex(sc.path_graph(n), n)
        assert {tuple(sorted(F)) for F in delta.facets} == set(perm)
        got, _ = engine_trace(delta)
        assert got == set(tau)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_cycle_trace_formula(self, n):
        soc, tr = sc.cycle_sequences(n)
        delta = sc.independence_complex(sc.cycle_graph(n), n)
        got, P = engine_trace(delta)
        assert faces_of(P.socle) == set(soc)
        assert got == set(tr)


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] < e[1])))))
def test_flag_trace_formula_on_random_graphs(case):
    n, edges = case
    delta = sc.independence_complex(sorted(edges), n)
    assert sc.is_flag(delta)
    got, _ = engine_trace(delta)
    assert faces_of(sc.flag_trace_gens(delta)) == got


class TestLattices:
    def test_posetll(self):
        L = sc.lattice_of_ideals(sc.POSETLL)
        assert len(L) == 8
        exts = ["".join(a[1] for a in pi) for pi in sc.linear_extensions(sc.POSETLL)]
        assert exts == ["1234", "1243", "2134", "2143", "2413"]
        sharp = [sc.c_sharp(sc.POSETLL, pi) for pi in sc.linear_extensions(sc.POSETLL)]
        assert sharp == [
            [("a1",), ("a1", "a2", "a3")],
            [("a1",), ("a1", "a2", "a4")],
            [("a2",), ("a1", "a2", "a3")],
            [("a2",), ("a1", "a2"), ("a1", "a2", "a4")],
            [("a2", "a4")],
        ]

    def test_small_lattices(self):
        chain = sc.FinitePoset("abc", [("a", "b"), ("b", "c")])
        L = sc.lattice_of_ideals(chain)
        assert len(L) == 4 and len(L.covers()) == 3
        assert sc.c_sharp(chain, "abc") == []
        assert sc.distributive_trace_gens(chain) == [(0, 0, 0, 0)]
        anti = sc.FinitePoset("ab")
        assert len(sc.lattice_of_ideals(anti)) == 4
        assert len(sc.linear_extensions(anti)) == 2
        assert len(sc.distributive_trace_gens(anti)) == 2

    def test_poset_errors(self):
        with pytest.raises(ValueError):
            sc.FinitePoset("ab", [("a", "b"), ("b", "a")])
        with pytest.raises(ValueError):
            sc.FinitePoset("ab", [("a", "c")])
        with pytest.raises(ValueError):
            sc.c_sharp(sc.POSETLL, ("a3", "a1", "a2", "a4"))
        with pytest.raises(ValueError):
            sc.poset_from_dict({"relations": []})

    def test_poset_round_trip(self):
        assert sc.poset_from_dict(sc.POSETLL.to_dict()).relations() == sc.POSETLL.relations()

    def test_poset_classes(self):
        assert [len(sc.all_posets(k)) for k in range(1, 5)] == [1, 2, 5, 16]

    @pytest.mark.parametrize("P0", sc.all_posets(3) + sc.all_posets(4))
    def test_extension_chain_uniqueness(self, P0):
        # C_pi is the unique maximal chain containing C_pi^sharp
        L = sc.lattice_of_ideals(P0)
        chains = [sc.chain_of_extension(P0, pi) for pi in sc.linear_extensions(P0)]
        for pi, C in zip(sc.linear_extensions(P0), chains):
            sharp = set(sc.c_sharp(P0, pi))
            assert [D for D in chains if sharp <= set(D)] == [C]
        # any chain lying in exactly one maximal chain contains some C_pi^sharp
        sharps = [set(sc.c_sharp(P0, pi)) for pi in sc.linear_extensions(P0)]
        for C in chains:
            for r in range(len(C) + 1):
                for sub in combinations(C, r):
                    sub = set(sub)
                    if sum(1 for D in chains if sub <= set(D)) == 1:
                        assert any(s <= sub for s in sharps)
        assert len(L.elements) == len(set(L.elements))

    @pytest.mark.parametrize("P0", sc.all_posets(3) + sc.all_posets(4))
    def test_distributive_trace_and_intervals(self, P0):
        from teter import ideal_view, is_symmetric

        data = sc.distributive_data(P0)
        P = build_divisor_poset(data.ideal())
        assert set(sc.distributive_trace_gens(P0)) == set(minimalize(trace_members(P)))
        views = [ideal_view(P, [low]) for low, _ in sc.interval_decomposition(P0)]
        for k, V in enumerate(views):
            assert is_symmetric(P, V) is not None
            assert all(not (V.members & W.members) for W in views[k + 1:])
