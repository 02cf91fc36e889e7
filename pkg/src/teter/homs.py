"""Multigraded homomorphisms omega_R -> R by component propagation.

A homomorphism of degree m sends v* to c_v * (m/v).  Writing w = m/v, the
unknowns are the pairs (u, w) with u*w = m and u, w both in P.  Linearity
against x_i * v* = (v/x_i)* gives exactly three kinds of constraints:

* edge:   c at (u, w) equals c at (u*x_i, w/x_i) whenever both pairs exist;
* rule A: c(u, w) = 0 if u*x_i is in P but x_i does not divide w;
* rule B: c(u, w) = 0 if x_i does not divide u but w*x_i is in P.

So the degree-m slice is free on the connected components of the pair graph
that contain no A/B violation.  Everything below is built on that fact; the
prime-field solver in ``linalg`` checks it independently.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Optional

from .monomial import MonomialIdeal, colon, minimalize, mul, quotient, sort_key, var
from .poset import DivisorPoset, PosetIdealView, build_divisor_poset, ideal_view, view_from_members
from .setcover import min_set_cover

TETER_NUMBER_CAP = 24


@dataclass(frozen=True)
class HomComponentSet:
    degree: tuple
    live_support: tuple
    components: tuple  # tuples of u, each sorted
    zero_flags: tuple

    def nonzero_components(self):
        return [c for c, flag in zip(self.components, self.zero_flags) if not flag]

    @property
    def dimension(self) -> int:
        return sum(1 for flag in self.zero_flags if not flag)


def candidate_degrees(P: DivisorPoset) -> list:
    """All u*w with u, w in P, sorted."""
    elems = P.elements
    degrees = {mul(u, w) for u in elems for w in elems}
    return sorted(degrees, key=sort_key)


def hom_components(P: DivisorPoset, m) -> HomComponentSet:
    m = tuple(m)
    n = P.n
    live = []
    for u in P.elements:
        w = quotient(m, u)
        if w is not None and w in P.index:
            live.append(u)
    live_set = set(live)

    parent = {u: u for u in live}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for u in live:
        k = P.index[u]
        for i in range(n):
            j = P.mul_table[k][i]
            if j >= 0 and P.elements[j] in live_set:
                ra, rb = find(u), find(P.elements[j])
                if ra != rb:
                    parent[ra] = rb

    groups = defaultdict(list)
    for u in live:
        groups[find(u)].append(u)
    comps = sorted((tuple(sorted(g, key=sort_key)) for g in groups.values()), key=lambda c: sort_key(c[0]))
    flags = tuple(any(_violates(P, u, quotient(m, u)) for u in c) for c in comps)
    return HomComponentSet(m, tuple(sorted(live, key=sort_key)), tuple(comps), flags)


def _violates(P: DivisorPoset, u, w) -> bool:
    ku, kw = P.index[u], P.index[w]
    return bool(P.grow_mask[ku] & ~P.support_mask[kw]) or bool(P.grow_mask[kw] & ~P.support_mask[ku])


def degree_image(P: DivisorPoset, m) -> MonomialIdeal:
    comps = hom_components(P, m)
    gens = [quotient(tuple(m), u) for c in comps.nonzero_components() for u in c]
    return MonomialIdeal(P.n, gens, P.ideal.names)


def nonzero_degree_images(P: DivisorPoset) -> dict:
    """Map m -> set of image members for every degree whose slice is nonzero.

    Every unflagged component contains a pair (s, g) with s in Soc(P): walk
    u upward (u -> u*x_i) inside the component; at a non-socle u rule A would
    fire unless x_i | w, in which case the step stays in the component.  So
    seeding the search at socle pairs finds every unflagged component once.
    """
    elems = P.elements
    mul_t, div_t = P.mul_table, P.div_table
    grow, supp = P.grow_mask, P.support_mask
    n = P.n
    seen = set()
    images = defaultdict(set)
    socle_idx = [P.index[s] for s in P.socle]
    for s in socle_idx:
        for g in range(len(elems)):
            if grow[g] & ~supp[s]:
                continue  # rule B at the seed
            if (s, g) in seen:
                continue
            seen.add((s, g))
            queue = deque([(s, g)])
            comp_w = []
            flagged = False
            while queue:
                u, w = queue.popleft()
                comp_w.append(w)
                if (grow[u] & ~supp[w]) or (grow[w] & ~supp[u]):
                    flagged = True
                for i in range(n):
                    a, b = mul_t[u][i], div_t[w][i]
                    if a >= 0 and b >= 0 and (a, b) not in seen:
                        seen.add((a, b))
                        queue.append((a, b))
                    a, b = div_t[u][i], mul_t[w][i]
                    if a >= 0 and b >= 0 and (a, b) not in seen:
                        seen.add((a, b))
                        queue.append((a, b))
            if not flagged:
                m = mul(elems[s], elems[g])
                images[m].update(elems[w] for w in comp_w)
    return dict(images)


def _image_ideal(P: DivisorPoset, members) -> MonomialIdeal:
    return MonomialIdeal(P.n, minimalize(members), P.ideal.names)


@dataclass
class TraceReport:
    trace: MonomialIdeal
    degree_images: list  # (m, MonomialIdeal) sorted by m
    gorenstein: bool
    nearly_gorenstein: bool
    teter_type_multigraded: str  # "yes" | "no" | "gorenstein"
    witness_degree: Optional[tuple] = None
    teter_number_multigraded: Optional[int] = None
    teter_number_witnesses: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "trace_generators": [list(g) for g in self.trace.generators],
            "degree_images": [
                {"degree": list(m), "generators": [list(g) for g in img.generators]}
                for m, img in self.degree_images
            ],
            "gorenstein": self.gorenstein,
            "nearly_gorenstein": self.nearly_gorenstein,
            "teter_type_multigraded": self.teter_type_multigraded,
            "witness_degree": list(self.witness_degree) if self.witness_degree is not None else None,
            "teter_number_multigraded": self.teter_number_multigraded,
        }


class _TraceData:
    """Images per degree plus the trace member set, computed once per poset."""

    def __init__(self, P: DivisorPoset):
        self.images = nonzero_degree_images(P)
        members = set()
        for img in self.images.values():
            members |= img
        self.members = frozenset(members)
        self.degrees = sorted(self.images, key=sort_key)


_cache_attr = "_trace_data"


def _trace_data(P: DivisorPoset) -> _TraceData:
    data = getattr(P, _cache_attr, None)
    if data is None:
        data = _TraceData(P)
        setattr(P, _cache_attr, data)
    return data


def trace_members(P: DivisorPoset) -> frozenset:
    return _trace_data(P).members


def trace_ideal(P: DivisorPoset) -> MonomialIdeal:
    return _image_ideal(P, trace_members(P))


def trace_view(P: DivisorPoset) -> PosetIdealView:
    return view_from_members(P, trace_members(P))


def is_nearly_gorenstein(P: DivisorPoset) -> bool:
    members = trace_members(P)
    n = P.n
    return all(var(n, i) in members or var(n, i) not in P.index for i in range(n))


def trace_multigraded(P: DivisorPoset, with_number: bool = True) -> TraceReport:
    data = _trace_data(P)
    verdict, witness = teter_type_multigraded(P)
    number, cover = None, []
    if verdict == "yes":
        number, cover = 1, [witness]
    elif verdict == "no" and with_number:
        result = teter_number_multigraded(P)
        if result is not None:
            number, cover = result
    return TraceReport(
        trace=trace_ideal(P),
        degree_images=[(m, _image_ideal(P, data.images[m])) for m in data.degrees],
        gorenstein=P.is_gorenstein(),
        nearly_gorenstein=is_nearly_gorenstein(P),
        teter_type_multigraded=verdict,
        witness_degree=witness,
        teter_number_multigraded=number,
        teter_number_witnesses=cover,
    )


# symmetric ideals, companions, tau-ideals


def _bijects(m, sources, targets) -> bool:
    """Is s -> m/s a bijection from ``sources`` onto ``targets``?"""
    if len(sources) != len(targets):
        return False
    image = set()
    for s in sources:
        q = quotient(m, s)
        if q is None:
            return False
        image.add(q)
    return image == set(targets)


def is_symmetric(P: DivisorPoset, V: PosetIdealView) -> Optional[tuple]:
    """The degree m making a -> m/a a bijection Gen(V) -> Soc(V), or None."""
    if not V.members:
        raise ValueError("empty poset ideal")
    if len(V.gen) != len(V.soc):
        return None
    a = V.gen[0]
    for b in V.soc:
        m = mul(a, b)
        if _bijects(m, V.gen, V.soc):
            return m
    return None


def are_companions(P: DivisorPoset, V1: PosetIdealView, V2: PosetIdealView) -> Optional[tuple]:
    """The degree m with Soc(V2) -> Gen(V1) and Gen(V2) -> Soc(V1) both given by d -> m/d."""
    if not V1.members or not V2.members:
        raise ValueError("empty poset ideal")
    if len(V1.gen) != len(V2.soc) or len(V1.soc) != len(V2.gen):
        return None
    a = V1.gen[0]
    for d in V2.soc:
        m = mul(a, d)
        if _bijects(m, V2.soc, V1.gen) and _bijects(m, V2.gen, V1.soc):
            return m
    return None


def is_tau_ideal(P: DivisorPoset, V: PosetIdealView) -> Optional[tuple]:
    """A companion of V and its degree, or None if V has no companion."""
    if not V.members:
        raise ValueError("empty poset ideal")
    m = is_symmetric(P, V)
    if m is not None:
        return V, m
    a0 = V.gen[0]
    for d in P.elements:
        m = mul(a0, d)
        soc_j = [quotient(m, a) for a in V.gen]
        gen_j = [quotient(m, b) for b in V.soc]
        if any(x is None or x not in P.index for x in soc_j + gen_j):
            continue
        J = ideal_view(P, gen_j)
        if are_companions(P, V, J) == m:
            return J, m
    return None


# Teter type and Teter number


def teter_type_multigraded(P: DivisorPoset):
    """("gorenstein", None) | ("yes", m) | ("no", None).

    The primary decision is whether one degree already has the whole trace as
    its image.  It is cross-checked against symmetry of the trace view.
    """
    if P.is_gorenstein():
        return "gorenstein", None
    data = _trace_data(P)
    witness = None
    for m in data.degrees:
        if len(data.images[m]) == len(data.members):
            witness = m
            break
    symmetric = is_symmetric(P, trace_view(P))
    if (witness is None) != (symmetric is None):
        raise RuntimeError(
            f"inconsistent Teter decision for {P.ideal}: witness {witness}, symmetric degree {symmetric}"
        )
    if witness is None:
        return "no", None
    return "yes", witness


def teter_number_multigraded(P: DivisorPoset, cap: int = TETER_NUMBER_CAP):
    """(s, degrees): fewest degrees whose images generate the trace.

    Returns None when more than ``cap`` degrees survive dominance reduction.
    """
    if P.is_gorenstein():
        raise ValueError("Teter number is only defined for non-Gorenstein rings")
    data = _trace_data(P)
    trace_gens = minimalize(data.members)
    bit = {g: k for k, g in enumerate(trace_gens)}
    masks = {}
    for m in data.degrees:
        mask = 0
        for u in data.images[m]:
            k = bit.get(u)
            if k is not None:
                mask |= 1 << k
        if mask:
            masks[m] = mask
    result = min_set_cover(masks, (1 << len(trace_gens)) - 1, cap=cap)
    if result is None:
        return None
    chosen = sorted(result, key=sort_key)
    return len(chosen), chosen


# natural tau-ideals


def _pure_powers(c, n) -> MonomialIdeal:
    return MonomialIdeal(n, [tuple(e if j == i else 0 for j in range(n)) for i, e in enumerate(c)])


def natural_tau_ring(c, J: MonomialIdeal) -> MonomialIdeal:
    c = tuple(c)
    if any(e < 1 for e in c):
        raise ValueError("Gorenstein cover needs pure powers with exponents >= 1")
    if len(c) != J.n:
        raise ValueError("arity mismatch between c and J")
    if J.is_zero or J.is_unit:
        raise ValueError("J must be a nonzero proper ideal")
    G = _pure_powers(c, J.n)
    if J.issubset(G):
        raise ValueError("J is zero in the Gorenstein ring")
    return (G + J).with_names(J.names)


def natural_tau_ideal(c, J: MonomialIdeal):
    """Image of ((x^c) : J) in R = S/((x^c) + J), and whether symmetry is claimed.

    Symmetry is claimed when J*J lies in (x^c) (so J is inside 0 :_G J) and
    the image is nonzero; a zero ideal has no symmetric structure to claim.
    """
    R = natural_tau_ring(c, J)
    G = _pure_powers(c, J.n)
    quot = colon(G, J)
    gens = [g for g in quot.generators if g not in R]
    image = MonomialIdeal(J.n, gens, J.names)
    claimed = (J * J).issubset(G) and not image.is_zero
    return image, claimed


def ring_poset(ideal: MonomialIdeal) -> DivisorPoset:
    return build_divisor_poset(ideal)
