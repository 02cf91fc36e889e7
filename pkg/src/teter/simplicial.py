"""Simplicial complexes, K{Delta}, free faces, graphs and distributive lattices.

Vertices are 1-based throughout, matching the usual [n] = {1, ..., n}.
The squarefree monomial u_F of a face F has exponent 1 at position i-1 for
each i in F.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

import networkx as nx

from .monomial import MonomialIdeal, minimalize

# complexes


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple  # tuple of frozensets, sorted
    names: Optional[tuple] = None

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= F for F in self.facets)

    def faces(self) -> list:
        """All faces including the empty one, sorted by size then entries."""
        seen = set()
        for F in self.facets:
            items = sorted(F)
            for r in range(len(items) + 1):
                for sub in itertools.combinations(items, r):
                    seen.add(frozenset(sub))
        return sorted(seen, key=_face_key)

    def vertex_names(self) -> tuple:
        return self.names or tuple(f"x{i}" for i in range(1, self.n + 1))

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [sorted(F) for F in self.facets]}


def _face_key(F):
    return (len(F), sorted(F))


def complex_from_facets(n: int, facets: Iterable, names=None) -> SimplicialComplex:
    sets = []
    for F in facets:
        F = frozenset(int(v) for v in F)
        if any(v < 1 or v > n for v in F):
            raise ValueError(f"vertex out of range in {sorted(F)} (n = {n})")
        sets.append(F)
    covered = set().union(*sets) if sets else set()
    missing = [v for v in range(1, n + 1) if v not in covered]
    if missing:
        raise ValueError(f"vertices {missing} lie in no facet; list them as singleton facets")
    maximal = {F for F in sets if not any(F < G for G in sets)}
    return SimplicialComplex(n, tuple(sorted(maximal, key=_face_key)), tuple(names) if names else None)


def complex_from_dict(data: dict) -> SimplicialComplex:
    try:
        return complex_from_facets(int(data["n"]), data["facets"], data.get("names"))
    except KeyError as exc:
        raise ValueError(f"complex record is missing {exc}") from None


def face_monomial(n: int, F) -> tuple:
    return tuple(1 if i + 1 in F else 0 for i in range(n))


def monomial_face(u) -> frozenset:
    return frozenset(i + 1 for i, e in enumerate(u) if e)


def minimal_nonfaces(delta: SimplicialComplex) -> list:
    """Inclusion-minimal non-faces: F not a face with every F - {v} a face."""
    faces = set(delta.faces())
    found = set()
    for G in faces:
        for v in range(1, delta.n + 1):
            if v in G:
                continue
            F = G | {v}
            if F in faces or F in found:
                continue
            if all(F - {w} in faces for w in F):
                found.add(F)
    return sorted(found, key=_face_key)


def is_flag(delta: SimplicialComplex) -> bool:
    return all(len(F) == 2 for F in minimal_nonfaces(delta))


def kdelta_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Defining ideal of K{Delta}: squares plus the Stanley-Reisner generators."""
    n = delta.n
    gens = [tuple(2 if j == i else 0 for j in range(n)) for i in range(n)]
    gens += [face_monomial(n, F) for F in minimal_nonfaces(delta)]
    return MonomialIdeal(n, gens, delta.vertex_names())


def free_faces(delta: SimplicialComplex) -> list:
    """Faces lying in exactly one facet."""
    return [F for F in delta.faces() if sum(1 for G in delta.facets if F <= G) == 1]


def minimal_free_faces(delta: SimplicialComplex) -> list:
    free = free_faces(delta)
    return [F for F in free if not any(G < F for G in free)]


def flag_trace_gens(delta: SimplicialComplex) -> list:
    """u_F over minimal free faces F; only meaningful for flag complexes."""
    if not is_flag(delta):
        raise ValueError("the free-face description of the trace needs a flag complex")
    return sorted((face_monomial(delta.n, F) for F in minimal_free_faces(delta)), key=lambda u: _face_key(monomial_face(u)))


# graphs


def independence_complex(edges, n: int) -> SimplicialComplex:
    G = nx.Graph()
    G.add_nodes_from(range(1, n + 1))
    for e in edges:
        i, j = e
        if i == j:
            raise ValueError(f"loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"edge {e} leaves [1, {n}]")
        if G.has_edge(i, j):
            raise ValueError(f"repeated edge {e}")
        G.add_edge(i, j)
    facets = list(nx.find_cliques(nx.complement(G)))
    return complex_from_facets(n, facets)


def path_graph(n: int) -> list:
    return [(i, i + 1) for i in range(1, n)]


def cycle_graph(n: int) -> list:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return path_graph(n) + [(1, n)]


def _independent_subsets(n: int, cyclic: bool):
    for r in range(1, n + 1):
        for F in itertools.combinations(range(1, n + 1), r):
            gaps = [b - a for a, b in zip(F, F[1:])]
            if cyclic and r > 1:
                gaps.append(F[0] + n - F[-1])
            if all(g >= 2 for g in gaps):
                yield F


def _path_padded_gaps(F, n):
    seq = (-1,) + tuple(F) + (n + 2,)
    return seq, [b - a for a, b in zip(seq, seq[1:])]


def path_sequences(n: int):
    """(permissible, tau_permissible) sequences for the path on [n].

    Both use the padding a_0 = -1, a_{s+1} = n + 2 and apply the gap window
    to every consecutive pair including the padded ends.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    permissible, tau = [], []
    for F in _independent_subsets(n, cyclic=False):
        seq, gaps = _path_padded_gaps(F, n)
        if all(g in (2, 3) for g in gaps):
            permissible.append(F)
        if all(g in (2, 3, 4) for g in gaps) and not any(
            seq[i - 1] == seq[i] - 2 and seq[i + 1] == seq[i] + 2 for i in range(1, len(seq) - 1)
        ):
            tau.append(F)
    return sorted(permissible), sorted(tau)


def _cyclic_gaps(F, n):
    if len(F) == 1:
        return [n]
    return [b - a for a, b in zip(F, F[1:])] + [F[0] + n - F[-1]]


def cycle_sequences(n: int):
    """(socle_sets, trace_gen_sets) for the cycle on [n].

    Read through the cyclic gaps between consecutive chosen vertices (a
    single vertex has one gap of length n): socle sets have every gap in
    {2, 3}; trace generators have every gap in {2, 3, 4} and no vertex with
    both neighbouring gaps equal to 2.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    socle, trace = [], []
    for F in _independent_subsets(n, cyclic=True):
        gaps = _cyclic_gaps(F, n)
        if all(g in (2, 3) for g in gaps):
            socle.append(F)
        if all(g in (2, 3, 4) for g in gaps):
            # gap k sits between F[k] and F[k+1]; vertex k sees gaps k-1 and k
            if not any(gaps[k - 1] == 2 and gaps[k] == 2 for k in range(len(gaps))):
                trace.append(F)
    key = lambda F: (len(F), F)
    return sorted(socle, key=key), sorted(trace, key=key)


# finite posets and distributive lattices


class FinitePoset:
    """Labels plus a strict order, closed transitively on construction."""

    def __init__(self, elements, relations=()):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate poset elements")
        self.position = {a: i for i, a in enumerate(self.elements)}
        N = len(self.elements)
        below = [0] * N  # below[j] has bit i iff a_i < a_j
        for a, b in relations:
            if a not in self.position or b not in self.position:
                raise ValueError(f"relation ({a}, {b}) uses an unknown element")
            if a == b:
                raise ValueError(f"reflexive relation on {a}")
            below[self.position[b]] |= 1 << self.position[a]
        changed = True
        while changed:
            changed = False
            for j in range(N):
                acc = below[j]
                for i in range(N):
                    if acc >> i & 1:
                        acc |= below[i]
                if acc != below[j]:
                    below[j] = acc
                    changed = True
        for j in range(N):
            if below[j] >> j & 1:
                raise ValueError("relations contain a cycle")
        self.below = below

    def __len__(self):
        return len(self.elements)

    def less(self, a, b) -> bool:
        return bool(self.below[self.position[b]] >> self.position[a] & 1)

    def relations(self) -> list:
        return [(a, b) for a in self.elements for b in self.elements if self.less(a, b)]

    def covers(self) -> list:
        out = []
        for a, b in self.relations():
            if not any(self.less(a, c) and self.less(c, b) for c in self.elements):
                out.append((a, b))
        return out

    def is_downward_closed(self, subset) -> bool:
        subset = set(subset)
        return all(c in subset for b in subset for c in self.elements if self.less(c, b))

    def to_dict(self) -> dict:
        return {"elements": list(self.elements), "relations": [list(r) for r in self.covers()]}


def poset_from_dict(data: dict) -> FinitePoset:
    try:
        return FinitePoset(data["elements"], [tuple(r) for r in data.get("relations", [])])
    except KeyError as exc:
        raise ValueError(f"poset record is missing {exc}") from None


def lattice_of_ideals(P0: FinitePoset) -> FinitePoset:
    """J(P0): poset ideals as sorted label tuples, ordered by inclusion."""
    N = len(P0)
    ideals = []
    for mask in range(1 << N):
        members = [P0.elements[i] for i in range(N) if mask >> i & 1]
        if P0.is_downward_closed(members):
            ideals.append(tuple(members))
    ideals.sort(key=lambda t: (len(t), [P0.position[a] for a in t]))
    relations = [(a, b) for a in ideals for b in ideals if a != b and set(a) <= set(b)]
    return FinitePoset(ideals, relations)


def lattice_label(element: tuple) -> str:
    return "L_" + ("_".join(map(str, element)) if element else "empty")


def linear_extensions(P0: FinitePoset) -> list:
    """All linear extensions, as label tuples, in lexicographic order of positions."""
    N = len(P0)
    out = []

    def extend(prefix, placed):
        if len(prefix) == N:
            out.append(tuple(P0.elements[i] for i in prefix))
            return
        for i in range(N):
            if placed >> i & 1:
                continue
            if P0.below[i] & ~placed:
                continue
            prefix.append(i)
            extend(prefix, placed | 1 << i)
            prefix.pop()

    extend([], 0)
    return out


def _check_extension(P0: FinitePoset, pi):
    pi = tuple(pi)
    if sorted(pi, key=str) != sorted(P0.elements, key=str) or len(pi) != len(P0):
        raise ValueError("not a permutation of the poset elements")
    for j, a in enumerate(pi):
        for b in pi[:j]:
            if P0.less(a, b):
                raise ValueError(f"{pi} is not a linear extension ({a} < {b})")
    return pi


def chain_of_extension(P0: FinitePoset, pi) -> list:
    """C_pi: all prefixes of pi, from the empty ideal to P0, as lattice elements."""
    pi = _check_extension(P0, pi)
    return [_as_lattice_element(P0, pi[:j]) for j in range(len(pi) + 1)]


def _as_lattice_element(P0: FinitePoset, members) -> tuple:
    return tuple(sorted(members, key=lambda a: P0.position[a]))


def c_sharp(P0: FinitePoset, pi) -> list:
    """C_pi^sharp: prefixes of pi ending where a maximal ascending run ends.

    A run continues while each entry is strictly below the next one in P0.
    The last run always ends at the full poset, which is left out.
    """
    pi = _check_extension(P0, pi)
    cuts = []
    for j in range(len(pi) - 1):
        if not P0.less(pi[j], pi[j + 1]):
            cuts.append(j + 1)
    return [_as_lattice_element(P0, pi[:j]) for j in cuts]


def order_complex(L: FinitePoset) -> SimplicialComplex:
    """Complex on the elements of L (vertex i+1 = L.elements[i]) whose faces are chains."""
    N = len(L)
    up = [[j for j in range(N) if L.less(L.elements[i], L.elements[j])] for i in range(N)]
    cover_up = [[j for j in up[i] if not any(j in up[k] for k in up[i])] for i in range(N)]
    minimal = [i for i in range(N) if not any(i in up[k] for k in range(N))]
    facets = []

    def walk(path):
        nxt = cover_up[path[-1]]
        if not nxt:
            facets.append([i + 1 for i in path])
            return
        for j in nxt:
            walk(path + [j])

    for i in minimal:
        walk([i])
    names = tuple(lattice_label(e) if isinstance(e, tuple) else str(e) for e in L.elements)
    return complex_from_facets(N, facets, names)


@dataclass
class DistributiveData:
    poset: FinitePoset
    lattice: FinitePoset
    complex: SimplicialComplex
    extensions: list
    sharp_chains: list
    trace_gens: list  # one monomial per extension, in extension order

    def ideal(self) -> MonomialIdeal:
        return kdelta_ideal(self.complex)


def distributive_data(P0: FinitePoset) -> DistributiveData:
    L = lattice_of_ideals(P0)
    delta = order_complex(L)
    pos = {e: i for i, e in enumerate(L.elements)}
    exts = linear_extensions(P0)
    chains = [c_sharp(P0, pi) for pi in exts]
    gens = [tuple(1 if any(pos[e] == i for e in chain) else 0 for i in range(len(L))) for chain in chains]
    return DistributiveData(P0, L, delta, exts, chains, gens)


def distributive_trace_gens(P0: FinitePoset) -> list:
    return list(minimalize(distributive_data(P0).trace_gens))


def interval_decomposition(P0: FinitePoset) -> list:
    """(u_{C_pi^sharp}, u_{C_pi}) for each linear extension pi."""
    data = distributive_data(P0)
    pos = {e: i for i, e in enumerate(data.lattice.elements)}
    N = len(data.lattice)
    out = []
    for pi, low in zip(data.extensions, data.trace_gens):
        chain = chain_of_extension(P0, pi)
        top = tuple(1 if any(pos[e] == i for e in chain) else 0 for i in range(N))
        out.append((low, top))
    return out


def all_posets(size: int) -> list:
    """One FinitePoset per isomorphism class on ``size`` elements labelled 1..size.

    Brute force over naturally labelled relation sets; fine for size <= 5.
    """
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if bits >> k & 1}
        if any((i, j) in rel and (j, k) in rel and (i, k) not in rel for i, j in rel for k in range(size)):
            continue
        canon = min(
            tuple(sorted((perm[i], perm[j]) for i, j in rel))
            for perm in itertools.permutations(range(size))
        )
        if canon in seen:
            continue
        seen.add(canon)
        out.append(FinitePoset(tuple(range(1, size + 1)), [(i + 1, j + 1) for i, j in rel]))
    return out


POSETLL = FinitePoset(("a1", "a2", "a3", "a4"), [("a1", "a3"), ("a2", "a3"), ("a2", "a4")])
