"""Hom spaces omega_R -> R as kernels of a linear system over GF(p).

This is the independent oracle for ``homs``: no component propagation, just
the relations phi(x_i * v*) = x_i * phi(v*) written out coefficient by
coefficient and row-reduced.  It also hosts the randomized graded and local
Teter-type tests, which have no combinatorial shortcut.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .monomial import MonomialIdeal, minimalize, quotient, sort_key
from .poset import DivisorPoset

DEFAULT_PRIME = 2147483647
DEFAULT_TRIALS = 8


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin for p < 3.3e24."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


class RowReducer:
    """Incremental reduced row echelon form over GF(p) with sparse dict rows.

    ``rows[c]`` is the row whose pivot is column c (pivot coefficient 1);
    no other stored row has a nonzero entry in a pivot column.
    """

    def __init__(self, p: int):
        self.p = p
        self.rows = {}
        self.occurs = {}  # column -> set of pivots whose row touches it

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        p = self.p
        row = {c: v % p for c, v in row.items() if v % p}
        for c in [c for c in row if c in self.rows]:
            coef = row.get(c)
            if not coef:
                continue
            for cc, vv in self.rows[c].items():
                nv = (row.get(cc, 0) - coef * vv) % p
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        p = self.p
        pivot = min(row)
        inv = pow(row[pivot], p - 2, p)
        row = {c: v * inv % p for c, v in row.items()}
        # clear the new pivot column from the existing rows
        for other in list(self.occurs.get(pivot, ())):
            orow = self.rows[other]
            coef = orow[pivot]
            for c, v in row.items():
                nv = (orow.get(c, 0) - coef * v) % p
                if nv:
                    if c not in orow:
                        self.occurs.setdefault(c, set()).add(other)
                    orow[c] = nv
                elif c in orow:
                    del orow[c]
                    self.occurs[c].discard(other)
        self.rows[pivot] = row
        for c in row:
            if c != pivot:
                self.occurs.setdefault(c, set()).add(pivot)
        return True

    def kernel(self, ncols: int) -> list:
        """Basis of the null space, one vector per free column, as dicts."""
        basis = []
        for f in range(ncols):
            if f in self.rows:
                continue
            vec = {f: 1}
            for piv in self.occurs.get(f, ()):
                vec[piv] = (-self.rows[piv][f]) % self.p
            basis.append(vec)
        return basis


def _sense_filter(sense: str, degree):
    if sense == "full":
        return lambda v, w: True
    if sense == "graded":
        if degree is None:
            raise ValueError("graded sense needs a total degree")
        d = int(degree)
        return lambda v, w: sum(v) + sum(w) == d
    if sense == "multigraded":
        if degree is None:
            raise ValueError("multigraded sense needs a multidegree")
        m = tuple(degree)
        return lambda v, w: all(a + b == c for a, b, c in zip(v, w, m))
    raise ValueError(f"unknown sense {sense!r}")


@dataclass
class HomSolutionSpace:
    """Basis of Hom(omega_R, R) restricted by ``sense``.

    Unknown k is the coefficient of ``unknowns[k][1]`` in phi(``unknowns[k][0]``*).
    """

    sense: str
    degree: object
    prime: int
    unknowns: list
    basis: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def as_map(self, vec: dict) -> dict:
        """v -> {w: coefficient} for one solution vector."""
        phi = {}
        for k, c in vec.items():
            v, w = self.unknowns[k]
            phi.setdefault(v, {})[w] = c
        return phi

    def maps(self) -> list:
        return [self.as_map(vec) for vec in self.basis]

    def combine(self, coefficients) -> dict:
        total = {}
        for a, vec in zip(coefficients, self.basis):
            for k, c in vec.items():
                total[k] = (total.get(k, 0) + a * c) % self.prime
        return self.as_map({k: c for k, c in total.items() if c})


def hom_basis(P: DivisorPoset, sense: str = "full", degree=None, p: int = DEFAULT_PRIME) -> HomSolutionSpace:
    _require_prime(p)
    allowed = _sense_filter(sense, degree)
    elems = P.elements
    unknowns = [(v, w) for v in elems for w in elems if allowed(v, w)]
    col = {key: k for k, key in enumerate(unknowns)}
    n = P.n
    # Equation (v, i, z): [x_i | v] X[v/x_i, z] - [x_i | z] X[v, z/x_i] = 0.
    # Only equations touching an allowed unknown matter.
    equations = set()
    for v, w in unknowns:
        kv, kw = P.index[v], P.index[w]
        for i in range(n):
            up_v = P.mul_table[kv][i]
            if up_v >= 0:
                equations.add((up_v, i, kw))  # X[v, w] appears as X[v'/x_i, z]
            up_w = P.mul_table[kw][i]
            if up_w >= 0:
                equations.add((kv, i, up_w))  # X[v, w] appears as X[v, z/x_i]
    reducer = RowReducer(p)
    for kv, i, kz in sorted(equations):
        row = {}
        dv = P.div_table[kv][i]
        if dv >= 0:
            c = col.get((elems[dv], elems[kz]))
            if c is not None:
                row[c] = 1
        dz = P.div_table[kz][i]
        if dz >= 0:
            c = col.get((elems[kv], elems[dz]))
            if c is not None:
                row[c] = (row.get(c, 0) - 1) % p
        if row:
            reducer.add(row)
    space = HomSolutionSpace(sense, degree, p, unknowns)
    space.basis = reducer.kernel(len(unknowns))
    return space


def _times_var(P: DivisorPoset, poly: dict, i: int) -> dict:
    out = {}
    for w, c in poly.items():
        j = P.mul_table[P.index[w]][i]
        if j >= 0:
            out[P.elements[j]] = c
    return out


def check_relations(P: DivisorPoset, phi: dict, p: int = DEFAULT_PRIME) -> bool:
    """Recompute phi(x_i v*) == x_i phi(v*) for all v, i straight from the definitions."""
    for v in P.elements:
        image_v = {w: c % p for w, c in phi.get(v, {}).items() if c % p}
        for i in range(P.n):
            if v[i] > 0:
                lhs = phi.get(v[:i] + (v[i] - 1,) + v[i + 1:], {})
            else:
                lhs = {}
            lhs = {w: c % p for w, c in lhs.items() if c % p}
            rhs = _times_var(P, image_v, i)
            if lhs != rhs:
                return False
    return True


def _image_reducer(P: DivisorPoset, phis, p: int) -> RowReducer:
    reducer = RowReducer(p)
    for phi in phis:
        for poly in phi.values():
            row = {P.index[w]: c for w, c in poly.items()}
            reducer.add(row)
    return reducer


def trace_oracle(P: DivisorPoset, p: int = DEFAULT_PRIME) -> MonomialIdeal:
    """Span of all phi(v*) over a basis of the full hom space, as a monomial ideal."""
    _require_prime(p)
    space = hom_basis(P, "full", p=p)
    reducer = _image_reducer(P, space.maps(), p)
    support = set()
    for row in reducer.rows.values():
        support.update(row)
    if len(support) != reducer.rank:
        raise RuntimeError("trace span is not spanned by monomials")
    members = [P.elements[k] for k in support]
    return MonomialIdeal(P.n, minimalize(members), P.ideal.names)


def trace_dimension(P: DivisorPoset, p: int = DEFAULT_PRIME) -> int:
    space = hom_basis(P, "full", p=p)
    return _image_reducer(P, space.maps(), p).rank


@dataclass
class RandomizedVerdict:
    sense: str
    verdict: str  # "yes" | "probably_no" | "gorenstein"
    witness_total_degree: Optional[int]
    prime: int
    trials: int
    seed: int
    witness: Optional[dict] = None  # v -> {w: c}, the sampled homomorphism

    def to_dict(self) -> dict:
        return {
            "sense": self.sense,
            "verdict": self.verdict,
            "witness_total_degree": self.witness_total_degree,
            "prime": self.prime,
            "trials": self.trials,
            "seed": self.seed,
        }


def teter_type_randomized(P: DivisorPoset, sense: str, p: int = DEFAULT_PRIME,
                          trials: int = DEFAULT_TRIALS, seed: int = 0) -> RandomizedVerdict:
    """Sample random homomorphisms and look for one whose image is the trace.

    ``yes`` is certified by the sampled map; ``probably_no`` only means no
    sample succeeded.
    """
    _require_prime(p)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if sense not in ("graded", "local"):
        raise ValueError(f"randomized sense must be 'graded' or 'local', not {sense!r}")
    if P.is_gorenstein():
        return RandomizedVerdict(sense, "gorenstein", None, p, trials, seed)
    rng = random.Random(seed)
    target = trace_dimension(P, p)
    if sense == "local":
        spaces = [(None, hom_basis(P, "full", p=p))]
    else:
        top = 2 * max(sum(u) for u in P.elements)
        spaces = [(d, hom_basis(P, "graded", d, p=p)) for d in range(top + 1)]
    for d, space in spaces:
        if not space.basis:
            continue
        for _ in range(trials):
            coefficients = [rng.randrange(p) for _ in space.basis]
            phi = space.combine(coefficients)
            if _image_reducer(P, [phi], p).rank == target:
                return RandomizedVerdict(sense, "yes", d, p, trials, seed, witness=phi)
    return RandomizedVerdict(sense, "probably_no", None, p, trials, seed)
