"""The divisor poset of an Artinian monomial algebra and its poset ideals.

Order convention: ``u <= v`` iff ``v`` divides ``u``.  So the unit monomial
is the top element, the socle monomials are the minimal elements, and for a
poset ideal the generators (Gen) are its divisibility-minimal members and
the socle (Soc) its divisibility-maximal members.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .monomial import (
    MonomialIdeal,
    divides,
    format_monomial,
    minimalize,
    sort_key,
    standard_monomials,
)


class DivisorPoset:
    """Standard monomials of ``S/I`` with index tables for single-variable steps.

    ``mul_table[k][i]`` is the index of ``elements[k] * x_i`` (or -1 if that
    product lies in I); ``div_table[k][i]`` likewise for division by x_i.
    """

    def __init__(self, ideal: MonomialIdeal):
        self.ideal = ideal
        self.n = ideal.n
        self.elements = standard_monomials(ideal)
        self.index = {u: k for k, u in enumerate(self.elements)}
        n = self.n
        self.mul_table = []
        self.div_table = []
        self.grow_mask = []  # bit i set iff u * x_i is in P
        self.support_mask = []  # bit i set iff x_i divides u
        for u in self.elements:
            up, down = [], []
            grow = supp = 0
            for i in range(n):
                bigger = u[:i] + (u[i] + 1,) + u[i + 1:]
                j = self.index.get(bigger, -1)
                up.append(j)
                if j >= 0:
                    grow |= 1 << i
                if u[i] > 0:
                    supp |= 1 << i
                    down.append(self.index[u[:i] + (u[i] - 1,) + u[i + 1:]])
                else:
                    down.append(-1)
            self.mul_table.append(tuple(up))
            self.div_table.append(tuple(down))
            self.grow_mask.append(grow)
            self.support_mask.append(supp)
        self.socle = tuple(u for k, u in enumerate(self.elements) if self.grow_mask[k] == 0)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, u) -> bool:
        return tuple(u) in self.index

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"DivisorPoset({self.ideal}, size={len(self)})"

    @property
    def names(self):
        return self.ideal.variable_names()

    def fmt(self, u) -> str:
        return format_monomial(u, self.names)

    def upper_covers(self, u) -> tuple:
        """Elements covering u in the poset order, i.e. u / x_i."""
        k = self.index[tuple(u)]
        return tuple(self.elements[j] for j in self.div_table[k] if j >= 0)

    def lower_covers(self, u) -> tuple:
        """Elements covered by u, i.e. u * x_i inside P."""
        k = self.index[tuple(u)]
        return tuple(self.elements[j] for j in self.mul_table[k] if j >= 0)

    def cover_pairs(self):
        """(lower, upper) index pairs, one per cover relation."""
        for k in range(len(self.elements)):
            for j in self.div_table[k]:
                if j >= 0:
                    yield k, j

    def multiples(self, u) -> frozenset:
        return frozenset(v for v in self.elements if divides(u, v))

    def is_gorenstein(self) -> bool:
        return len(self.socle) == 1


def build_divisor_poset(ideal: MonomialIdeal) -> DivisorPoset:
    return DivisorPoset(ideal)


@dataclass(frozen=True)
class PosetIdealView:
    """A downward closed subset of P together with its Gen and Soc antichains."""

    poset: DivisorPoset
    members: frozenset
    gen: tuple
    soc: tuple

    def __len__(self):
        return len(self.members)

    def __contains__(self, u):
        return tuple(u) in self.members

    def __eq__(self, other):
        if not isinstance(other, PosetIdealView):
            return NotImplemented
        return self.poset is other.poset and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def union(self, other: "PosetIdealView") -> "PosetIdealView":
        _same_poset(self, other)
        return view_from_members(self.poset, self.members | other.members)

    def intersection(self, other: "PosetIdealView") -> "PosetIdealView":
        _same_poset(self, other)
        return view_from_members(self.poset, self.members & other.members)

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.poset.n, self.gen, self.poset.ideal.names)


def _same_poset(a: PosetIdealView, b: PosetIdealView):
    if a.poset is not b.poset:
        raise ValueError("poset ideal views belong to different posets")


def _soc_of(P: DivisorPoset, members: frozenset) -> tuple:
    soc = []
    for u in members:
        k = P.index[u]
        if all(j < 0 or P.elements[j] not in members for j in P.mul_table[k]):
            soc.append(u)
    return tuple(sorted(soc, key=sort_key))


def ideal_view(P: DivisorPoset, gens: Iterable) -> PosetIdealView:
    """View of the ideal of R generated by ``gens`` (all of which must lie in P)."""
    gens = [tuple(g) for g in gens]
    for g in gens:
        if g not in P.index:
            raise ValueError(f"generator {P.fmt(g) if len(g) == P.n else g} is not a standard monomial")
    gen = minimalize(gens)
    members = frozenset(v for v in P.elements if any(divides(g, v) for g in gen))
    return PosetIdealView(P, members, gen, _soc_of(P, members))


def view_from_members(P: DivisorPoset, members: Iterable) -> PosetIdealView:
    members = frozenset(tuple(u) for u in members)
    for u in members:
        if u not in P.index:
            raise ValueError(f"{u} is not in the poset")
        for j in P.mul_table[P.index[u]]:
            if j >= 0 and P.elements[j] not in members:
                raise ValueError("member set is not downward closed")
    return PosetIdealView(P, members, minimalize(members), _soc_of(P, members))


def empty_view(P: DivisorPoset) -> PosetIdealView:
    return PosetIdealView(P, frozenset(), (), ())


def enumerate_poset_ideals(P: DivisorPoset, limit: int = 22):
    """Every nonempty poset ideal of P, one per antichain of generators.

    Exponential in the width of P, hence the size guard.
    """
    N = len(P)
    if N > limit:
        raise ValueError(f"poset has {N} elements; exhaustive enumeration is capped at {limit}")
    elems = P.elements
    up = []  # up[k]: bitmask of multiples of elems[k] (its poset ideal)
    comparable = []
    for a in elems:
        mask = 0
        for j, b in enumerate(elems):
            if divides(a, b):
                mask |= 1 << j
        up.append(mask)
    for k, a in enumerate(elems):
        mask = up[k]
        for j, b in enumerate(elems):
            if divides(b, a):
                mask |= 1 << j
        comparable.append(mask)

    out = []

    def extend(start, blocked, closure):
        for k in range(start, N):
            if blocked >> k & 1:
                continue
            members = closure | up[k]
            out.append(members)
            extend(k + 1, blocked | comparable[k], members)

    extend(0, 0, 0)
    views = []
    for mask in out:
        members = frozenset(elems[j] for j in range(N) if mask >> j & 1)
        views.append(view_from_members(P, members))
    return views


def to_dot(P: DivisorPoset, highlight: Optional[PosetIdealView] = None, name: str = "P") -> str:
    """Hasse diagram in DOT; edges run from each element to its upper covers."""
    if highlight is not None and highlight.poset is not P:
        raise ValueError("highlight view belongs to a different poset")
    marked = highlight.members if highlight is not None else frozenset()
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for k, u in enumerate(P.elements):
        style = ' style=filled fillcolor="lightblue"' if u in marked else ""
        lines.append(f'  n{k} [label="{P.fmt(u)}"{style}];')
    by_degree = {}
    for k, u in enumerate(P.elements):
        by_degree.setdefault(sum(u), []).append(f"n{k}")
    for deg in sorted(by_degree):
        lines.append("  { rank=same; " + "; ".join(by_degree[deg]) + "; }")
    for k, j in P.cover_pairs():
        lines.append(f"  n{k} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_json(P: DivisorPoset) -> dict:
    return {
        "elements": [list(u) for u in P.elements],
        "upper_covers": [[j for j in P.div_table[k] if j >= 0] for k in range(len(P))],
    }
