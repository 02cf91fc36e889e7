"""Closed-form traces for named families, each with an opt-in engine check.

The formulas never call the engine.  ``verify=True`` builds the ring,
runs ``homs.trace_multigraded`` and records whether the two agree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .homs import teter_type_multigraded, trace_members
from .monomial import (
    MonomialIdeal,
    colon,
    compositions,
    minimalize,
    power_of_maximal_ideal,
    quotient,
    sort_key,
)
from .poset import build_divisor_poset


def pure_powers(a) -> MonomialIdeal:
    n = len(a)
    return MonomialIdeal(n, [tuple(e if j == i else 0 for j in range(n)) for i, e in enumerate(a)])


@dataclass(frozen=True)
class AciSpec:
    """S/(x_1^a_1, ..., x_n^a_n, x^b): an almost complete intersection."""

    a: tuple
    b: tuple

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b):
            raise ValueError("a and b must have the same length")
        if any(ai < 1 for ai in a):
            raise ValueError("pure-power exponents must be >= 1")
        if any(bi < 0 or bi >= ai for ai, bi in zip(a, b)):
            raise ValueError("need 0 <= b_i < a_i")
        if sum(1 for bi in b if bi > 0) < 2:
            raise ValueError("need at least two positive b_i")

    @property
    def n(self):
        return len(self.a)

    def ideal(self) -> MonomialIdeal:
        return pure_powers(self.a) + MonomialIdeal(self.n, [self.b])


@dataclass(frozen=True)
class PowerQuotientSpec:
    """R/(0 : n^k) for R = S/(x_1^(a_1+1), ..., x_n^(a_n+1)).

    ``a`` is kept in the given variable order; ``order`` records the
    permutation sorting it ascending, and ``a_min`` is the smallest entry.
    """

    a: tuple
    k: int
    order: tuple = field(init=False)

    def __post_init__(self):
        a = tuple(self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise ValueError("need at least one variable")
        if any(ai < 1 for ai in a):
            raise ValueError("need a_i >= 1")
        if self.k < 1:
            raise ValueError("need k >= 1")
        object.__setattr__(self, "order", tuple(sorted(range(len(a)), key=lambda i: (a[i], i))))

    @property
    def n(self):
        return len(self.a)

    @property
    def a_sorted(self):
        return tuple(self.a[i] for i in self.order)

    @property
    def a_min(self):
        return min(self.a)


def power_quotient_ideal(spec: PowerQuotientSpec) -> MonomialIdeal:
    """Defining ideal (x^(a+1)) : m^k of R/(0 : n^k)."""
    if spec.k > sum(spec.a):
        raise ValueError(f"n^{spec.k} is zero: k exceeds the socle degree {sum(spec.a)}")
    G = pure_powers(tuple(ai + 1 for ai in spec.a))
    return colon(G, power_of_maximal_ideal(spec.n, spec.k))


def bounded_level(a, j) -> tuple:
    """Exponent vectors b with 0 <= b_i <= a_i and |b| = j."""
    return tuple(sorted(compositions(j, len(a), a), key=sort_key))


@dataclass
class FamilyReport:
    family: str
    params: dict
    trace_generators: list
    teter_type: Optional[bool]
    verified: Optional[bool] = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "family": self.family,
            "params": self.params,
            "trace_generators": [list(g) for g in self.trace_generators],
            "teter_type": self.teter_type,
            "verified": self.verified,
        }
        out.update(self.extra)
        return out


def engine_agrees(ideal: MonomialIdeal, trace_gens, teter: Optional[bool]) -> bool:
    """Engine trace has exactly these minimal generators and the expected verdict.

    ``teter=None`` means the ring is expected to be Gorenstein.
    """
    P = build_divisor_poset(ideal)
    got = minimalize(trace_members(P))
    if set(got) != set(map(tuple, trace_gens)):
        return False
    verdict, _ = teter_type_multigraded(P)
    expected = "gorenstein" if teter is None else ("yes" if teter else "no")
    return verdict == expected


# almost complete intersections


def aci_trace_and_type(spec: AciSpec):
    n = spec.n
    gens = []
    for i, (ai, bi) in enumerate(zip(spec.a, spec.b)):
        if bi > 0:
            gens.append(tuple(ai - bi if j == i else 0 for j in range(n)))
            gens.append(tuple(0 if j == i else spec.b[j] for j in range(n)))
    trace = MonomialIdeal(n, gens)
    halves = [i for i in range(n) if spec.b[i] > 0 and 2 * spec.b[i] >= spec.a[i]]
    return trace, len(halves) >= 2


def aci_report(a, b, verify: bool = False) -> FamilyReport:
    spec = AciSpec(tuple(a), tuple(b))
    trace, teter = aci_trace_and_type(spec)
    report = FamilyReport("aci", {"a": list(spec.a), "b": list(spec.b)}, list(trace.generators), teter)
    if verify:
        report.verified = engine_agrees(spec.ideal(), trace.generators, teter)
    return report


# powers of the maximal ideal in a pure-power Gorenstein ring


def chopin_trace(spec: PowerQuotientSpec) -> tuple:
    if spec.n < 2:
        raise ValueError("one variable gives a Gorenstein quotient; need n >= 2")
    if spec.k > spec.a_min:
        raise ValueError(f"need k <= min(a) = {spec.a_min}")
    return bounded_level(spec.a, spec.k)


def chopin_report(a, k, verify: bool = False) -> FamilyReport:
    spec = PowerQuotientSpec(tuple(a), k)
    gens = chopin_trace(spec)
    report = FamilyReport("chopin", {"a": list(spec.a), "k": k}, list(gens), True)
    if verify:
        report.verified = engine_agrees(power_quotient_ideal(spec), gens, True)
    return report


def power_quotient_report(a, k, verify: bool = False) -> FamilyReport:
    """No closed form in general: reports the engine trace of R/(0 : n^k)."""
    spec = PowerQuotientSpec(tuple(a), k)
    ideal = power_quotient_ideal(spec)
    P = build_divisor_poset(ideal)
    verdict, witness = teter_type_multigraded(P)
    report = FamilyReport(
        "power-quotient",
        {"a": list(spec.a), "k": k},
        list(minimalize(trace_members(P))),
        None if verdict == "gorenstein" else verdict == "yes",
        extra={"ideal": ideal.to_dict(), "witness_degree": list(witness) if witness else None},
    )
    if verify:
        try:
            report.verified = set(chopin_trace(spec)) == set(report.trace_generators) and verdict == "yes"
        except ValueError:
            report.verified = None
    return report


def mozart(n: int, k: int):
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n - 1")
    k0 = min(k, n - k)
    gens = tuple(sorted(bounded_level((1,) * n, k0), key=sort_key))
    return gens, k <= n - k


def mozart_ideal(n: int, k: int) -> MonomialIdeal:
    return power_quotient_ideal(PowerQuotientSpec((1,) * n, k))


def mozart_report(n, k, verify: bool = False) -> FamilyReport:
    gens, teter = mozart(n, k)
    report = FamilyReport("mozart", {"n": n, "k": k}, list(gens), teter, extra={"k0": min(k, n - k)})
    if verify:
        report.verified = engine_agrees(mozart_ideal(n, k), gens, teter)
    return report


# two variables: G = K[x,y]/(x^a, y^b), R = G / n^k


def _check_ci2(a: int, b: int, k: int):
    if not 2 <= a <= b:
        raise ValueError("need 2 <= a <= b")
    if not 1 <= k <= a + b - 2:
        raise ValueError(f"need 1 <= k <= a + b - 2 = {a + b - 2}")


def ci2_trace(a: int, b: int, k: int) -> int:
    """Exponent e with tr(omega_R) = m_R^e."""
    _check_ci2(a, b, k)
    if k <= a:
        return k - 1
    if k <= b:
        return a - 1
    return a + b - 1 - k


def ci2_ideal(a: int, b: int, k: int) -> MonomialIdeal:
    _check_ci2(a, b, k)
    return MonomialIdeal(2, [(a, 0), (0, b)]) + power_of_maximal_ideal(2, k)


def ci2_trace_gens(a: int, b: int, k: int) -> tuple:
    """Minimal generators of m_R^e inside R (degree-e standard monomials)."""
    e = ci2_trace(a, b, k)
    ideal = ci2_ideal(a, b, k)
    return tuple(u for u in compositions(e, 2) if u not in ideal)


def ci2_report(a, b, k, verify: bool = False) -> FamilyReport:
    e = ci2_trace(a, b, k)
    gens = ci2_trace_gens(a, b, k)
    gorenstein = e == 0
    report = FamilyReport(
        "ci2", {"a": a, "b": b, "k": k}, list(gens), None if gorenstein else True,
        extra={"exponent": e, "gorenstein": gorenstein},
    )
    if verify:
        report.verified = engine_agrees(ci2_ideal(a, b, k), gens, report.teter_type)
    return report


# squarefree: K{simplex} modulo one more squarefree monomial


def _check_squarefree(n: int, w0):
    w0 = tuple(w0)
    if len(w0) != n:
        raise ValueError("w0 has the wrong arity")
    if any(e not in (0, 1) for e in w0):
        raise ValueError("w0 must be squarefree")
    if sum(w0) < 2:
        raise ValueError("w0 must have degree >= 2")
    return w0


def beethoven_trace(n: int, w0) -> tuple:
    """1-based indices of the variables dividing w0."""
    w0 = _check_squarefree(n, w0)
    return tuple(i + 1 for i, e in enumerate(w0) if e)


def beethoven_ideal(n: int, w0) -> MonomialIdeal:
    w0 = _check_squarefree(n, w0)
    return pure_powers((2,) * n) + MonomialIdeal(n, [w0])


def beethoven_report(n, w0, verify: bool = False) -> FamilyReport:
    support = beethoven_trace(n, w0)
    gens = [tuple(1 if j + 1 == i else 0 for j in range(n)) for i in support]
    report = FamilyReport("beethoven", {"n": n, "w0": list(w0)}, gens, True, extra={"variables": list(support)})
    if verify:
        report.verified = engine_agrees(beethoven_ideal(n, w0), gens, True)
    return report


# experimental probe; never trusted as a formula


@dataclass
class ConjectureProbe:
    a: tuple
    k: int
    level_sizes: list  # |Gen(I_j)| for j = 1..k
    hypothesis: bool  # sizes strictly increasing
    trace_is_level: bool
    teter_type: str
    outcome: str  # "agree" | "disagree"

    @property
    def counterexample(self) -> bool:
        return self.hypothesis and self.outcome == "disagree"

    def to_dict(self) -> dict:
        return {
            "a": list(self.a),
            "k": self.k,
            "level_sizes": self.level_sizes,
            "hypothesis": self.hypothesis,
            "trace_is_level": self.trace_is_level,
            "teter_type": self.teter_type,
            "outcome": self.outcome,
            "counterexample": self.counterexample,
        }


def conjecture_probe(spec: PowerQuotientSpec) -> ConjectureProbe:
    """Compare the engine trace of R/(0 : n^k) with the level ideal I_k.

    ``outcome`` is "agree" when the trace is I_k and the ring is of Teter
    type, which is what the conjectured statement would predict.
    """
    sizes = [len(bounded_level(spec.a, j)) for j in range(1, spec.k + 1)]
    hypothesis = all(x < y for x, y in zip(sizes, sizes[1:]))
    ideal = power_quotient_ideal(spec)
    P = build_divisor_poset(ideal)
    level = [b for b in bounded_level(spec.a, spec.k) if b in P.index]
    level_members = frozenset(u for u in P.elements if any(quotient(u, b) is not None for b in level))
    trace_is_level = level_members == trace_members(P)
    verdict, _ = teter_type_multigraded(P)
    outcome = "agree" if trace_is_level and verdict == "yes" else "disagree"
    return ConjectureProbe(spec.a, spec.k, sizes, hypothesis, trace_is_level, verdict, outcome)


def probe_grid(n_max: int = 3, a_max: int = 3, k_max: Optional[int] = None):
    """Probe every sorted a with entries <= a_max in up to n_max variables."""
    for n in range(2, n_max + 1):
        for a in itertools.combinations_with_replacement(range(1, a_max + 1), n):
            top = sum(a) if k_max is None else min(sum(a), k_max)
            for k in range(1, top + 1):
                yield conjecture_probe(PowerQuotientSpec(a, k))
