"""Random corpus and differential checks between the engine and the oracles."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .homs import (
    are_companions,
    candidate_degrees,
    hom_components,
    is_symmetric,
    is_tau_ideal,
    teter_number_multigraded,
    teter_type_multigraded,
    trace_ideal,
    trace_members,
    trace_view,
)
from .linalg import DEFAULT_PRIME, check_relations, hom_basis, trace_oracle
from .monomial import MonomialIdeal, quotient
from .poset import build_divisor_poset, enumerate_poset_ideals, view_from_members

UNION_LAW_LIMIT = 12
TAU_SEARCH_LIMIT = 10


def random_artinian_ideal(rng: random.Random, max_vars: int = 3, max_exp: int = 4, max_extra: int = 3) -> MonomialIdeal:
    while True:
        n = rng.randint(1, max_vars)
        gens = [tuple(rng.randint(1, max_exp) if j == i else 0 for j in range(n)) for i in range(n)]
        for _ in range(rng.randint(0, max_extra)):
            gens.append(tuple(rng.randint(0, max_exp) for _ in range(n)))
        ideal = MonomialIdeal(n, gens)
        if not ideal.is_unit:
            return ideal


def random_corpus(samples: int, max_vars: int = 3, max_exp: int = 4, seed: int = 0) -> list:
    rng = random.Random(seed)
    return [random_artinian_ideal(rng, max_vars, max_exp) for _ in range(samples)]


def companion_pairs(P):
    """(image view, support view, m) for every unflagged component of every degree."""
    for m in candidate_degrees(P):
        comps = hom_components(P, m)
        for comp in comps.nonzero_components():
            images = [quotient(m, u) for u in comp]
            yield view_from_members(P, images), view_from_members(P, comp), m


def symmetric_union(P, ideals=None) -> frozenset:
    members = set()
    for V in ideals if ideals is not None else enumerate_poset_ideals(P):
        if is_symmetric(P, V) is not None:
            members |= V.members
    return frozenset(members)


@dataclass
class CheckResult:
    ideal: MonomialIdeal
    problems: list = field(default_factory=list)
    companion_pairs: int = 0

    @property
    def ok(self) -> bool:
        return not self.problems


def check_ideal(ideal: MonomialIdeal, p: int = DEFAULT_PRIME) -> CheckResult:
    result = CheckResult(ideal)
    problems = result.problems
    P = build_divisor_poset(ideal)

    engine = trace_ideal(P)
    oracle = trace_oracle(P, p)
    if engine != oracle:
        problems.append(f"trace: engine {engine} vs oracle {oracle}")

    full = hom_basis(P, "full", p=p)
    for phi in full.maps():
        if not check_relations(P, phi, p):
            problems.append("a basis homomorphism violates linearity")
            break
    total = 0
    for m in candidate_degrees(P):
        slice_dim = hom_basis(P, "multigraded", m, p=p).dimension
        comp_dim = hom_components(P, m).dimension
        total += slice_dim
        if slice_dim != comp_dim:
            problems.append(f"degree {m}: slice dimension {slice_dim} vs {comp_dim} components")
    if total != full.dimension:
        problems.append(f"slices sum to {total}, full space has dimension {full.dimension}")

    for V1, V2, m in companion_pairs(P):
        result.companion_pairs += 1
        got = are_companions(P, V1, V2)
        if got != m:
            problems.append(f"component of degree {m} is not a companion pair (got {got})")
            continue
        union = is_symmetric(P, V1.union(V2))
        if union != m:
            problems.append(f"companions of degree {m}: union symmetric degree {union}")

    if P.is_gorenstein():
        return result
    verdict, _ = teter_type_multigraded(P)
    symmetric = is_symmetric(P, trace_view(P)) is not None
    number = teter_number_multigraded(P)
    one = number is not None and number[0] == 1
    if (verdict == "yes") != symmetric or (number is not None and symmetric != one):
        problems.append(f"Teter decisions disagree: {verdict}, symmetric={symmetric}, number={number}")
    if number is not None and number[0] > len(engine.generators):
        problems.append("Teter number exceeds the number of trace generators")

    if len(P) <= UNION_LAW_LIMIT:
        ideals = enumerate_poset_ideals(P)
        if symmetric_union(P, ideals) != trace_members(P):
            problems.append("union of symmetric poset ideals differs from the trace")
        if len(P) <= TAU_SEARCH_LIMIT:
            for V in ideals:
                found = is_tau_ideal(P, V)
                if found is None:
                    continue
                J, m = found
                result.companion_pairs += 1
                if is_symmetric(P, V.union(J)) != m:
                    problems.append(f"tau-ideal {V.gen} with companion {J.gen}: union not symmetric of degree {m}")
                if not V.members <= trace_members(P):
                    problems.append(f"tau-ideal {V.gen} escapes the trace")
    return result


@dataclass
class SelfcheckReport:
    samples: int
    max_vars: int
    max_exp: int
    seed: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "max_vars": self.max_vars,
            "max_exp": self.max_exp,
            "seed": self.seed,
            "disagreements": [
                {"ideal": r.ideal.to_dict(), "problems": r.problems} for r in self.failures
            ],
            "ok": self.ok,
        }


def run_selfcheck(samples: int = 50, max_vars: int = 3, max_exp: int = 4, seed: int = 0,
                  p: int = DEFAULT_PRIME) -> SelfcheckReport:
    if samples < 1 or max_vars < 1 or max_exp < 1:
        raise ValueError("samples, max_vars and max_exp must be positive")
    failures = []
    for ideal in random_corpus(samples, max_vars, max_exp, seed):
        res = check_ideal(ideal, p)
        if not res.ok:
            failures.append(res)
    return SelfcheckReport(samples, max_vars, max_exp, seed, failures)


