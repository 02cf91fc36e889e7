"""Monomials as exponent tuples and monomial ideals of K[x_1, ..., x_n].

A monomial is a plain ``tuple[int, ...]`` of fixed length ``n``.  All
arithmetic here is characteristic free: nothing depends on the field.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

Monomial = tuple  # tuple[int, ...]


def unit(n: int) -> Monomial:
    return (0,) * n


def var(n: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(n))


def degree(u: Monomial) -> int:
    return sum(u)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        return None
    return q


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def sort_key(u: Monomial):
    """Total degree first, then x_1 before x_2 before ..."""
    return (sum(u), tuple(-e for e in u))


def minimalize(gens: Iterable[Monomial]) -> tuple:
    """Drop every generator divisible by another one; sorted by ``sort_key``."""
    gens = sorted(set(map(tuple, gens)), key=sort_key)
    kept = []
    for g in gens:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


def default_names(n: int) -> tuple:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def format_monomial(u: Monomial, names: Optional[Sequence[str]] = None) -> str:
    names = names or default_names(len(u))
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    An empty generator tuple is the zero ideal; the generator ``(0,...,0)``
    is the unit ideal.  Both are legal values here (images of
    homomorphisms can be zero) but ``parse_ideal`` refuses them.
    """

    n: int
    generators: tuple
    names: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in g) for g in self.generators)
        for g in gens:
            if len(g) != self.n:
                raise ValueError(f"generator {g} has arity {len(g)}, expected {self.n}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in generator {g}")
        object.__setattr__(self, "generators", minimalize(gens))
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.n:
                raise ValueError("number of variable names does not match arity")
            object.__setattr__(self, "names", names)

    def __contains__(self, u: Monomial) -> bool:
        return any(divides(g, u) for g in self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return unit(self.n) in self.generators

    def variable_names(self) -> tuple:
        return self.names or default_names(self.n)

    def with_names(self, names) -> "MonomialIdeal":
        return MonomialIdeal(self.n, self.generators, tuple(names) if names else None)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _check_arity(self, other)
        return MonomialIdeal(self.n, self.generators + other.generators, self.names or other.names)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _check_arity(self, other)
        gens = [mul(a, b) for a in self.generators for b in other.generators]
        return MonomialIdeal(self.n, gens, self.names or other.names)

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _check_arity(self, other)
        gens = [lcm(a, b) for a in self.generators for b in other.generators]
        return MonomialIdeal(self.n, gens, self.names or other.names)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(g in other for g in self.generators)

    def pure_power_bounds(self) -> Optional[tuple]:
        """Smallest e_i with x_i^e_i in the ideal, or None if some variable has none."""
        bounds = []
        for i in range(self.n):
            powers = [g[i] for g in self.generators if all(e == 0 for j, e in enumerate(g) if j != i)]
            if not powers:
                return None
            bounds.append(min(powers))
        return tuple(bounds)

    # serialization

    def to_dict(self) -> dict:
        return {"vars": list(self.variable_names()), "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialIdeal":
        return parse_ideal(data)

    def to_string(self) -> str:
        names = self.variable_names()
        if self.is_zero:
            return "0"
        return ", ".join(format_monomial(g, names) for g in self.generators)

    def __str__(self):
        return f"({self.to_string()})"


def _check_arity(a: MonomialIdeal, b: MonomialIdeal):
    if a.n != b.n:
        raise ValueError(f"arity mismatch: {a.n} vs {b.n}")


_NAME = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(-?\d+))?$")


def _natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def parse_ideal(source, names: Optional[Sequence[str]] = None) -> MonomialIdeal:
    """Build a MonomialIdeal from ``{"vars": [...], "generators": [[...]]}``
    or from a string such as ``"x^3, y^3, x*y"``.

    Variable names for the string form come from ``names``; when omitted
    they are the names appearing in the text in natural sort order.
    The unit ideal and an ideal with no nonzero generator are rejected.
    """
    if isinstance(source, dict):
        ideal = _from_structured(source)
    elif isinstance(source, str):
        ideal = _from_text(source, names)
    else:
        raise ValueError(f"cannot parse an ideal from {type(source).__name__}")
    if ideal.is_zero:
        raise ValueError("ideal has no nonzero generators")
    if ideal.is_unit:
        raise ValueError("unit ideal: the quotient ring is zero")
    return ideal


def _from_structured(data: dict) -> MonomialIdeal:
    try:
        rows = data["generators"]
    except KeyError:
        raise ValueError("structured ideal needs a 'generators' field") from None
    names = data.get("vars")
    if names is None:
        if not rows:
            raise ValueError("cannot infer arity from an empty generator list")
        n = len(rows[0])
    else:
        names = [str(v) for v in names]
        for v in names:
            if not _NAME.match(v):
                raise ValueError(f"malformed variable name {v!r}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        n = len(names)
    gens = []
    for row in rows:
        if not isinstance(row, (list, tuple)) or not all(isinstance(e, int) for e in row):
            raise ValueError(f"malformed exponent row {row!r}")
        gens.append(tuple(row))
    return MonomialIdeal(n, gens, tuple(names) if names else None)


def _from_text(text: str, names: Optional[Sequence[str]]) -> MonomialIdeal:
    terms = [t.strip() for t in text.strip().split(",")]
    if any(not t for t in terms):
        raise ValueError(f"malformed ideal text {text!r}: empty term")
    parsed = []
    seen = []
    for term in terms:
        if term == "0":
            continue
        powers = {}
        for factor in term.split("*"):
            factor = factor.strip()
            if factor == "1":
                continue
            match = _FACTOR.match(factor)
            if not match:
                raise ValueError(f"malformed token {factor!r}")
            name, exp = match.group(1), match.group(2)
            e = int(exp) if exp is not None else 1
            if e < 0:
                raise ValueError(f"negative exponent in {factor!r}")
            powers[name] = powers.get(name, 0) + e
            if name not in seen:
                seen.append(name)
        parsed.append(powers)
    if names is None:
        names = sorted(seen, key=_natural_key)
    names = tuple(names)
    unknown = [v for v in seen if v not in names]
    if unknown:
        raise ValueError(f"undeclared variables: {', '.join(unknown)}")
    position = {v: i for i, v in enumerate(names)}
    gens = []
    for powers in parsed:
        g = [0] * len(names)
        for v, e in powers.items():
            g[position[v]] += e
        gens.append(tuple(g))
    return MonomialIdeal(len(names), gens, names or None)


def is_artinian(ideal: MonomialIdeal) -> bool:
    return ideal.pure_power_bounds() is not None


def _require_artinian(ideal: MonomialIdeal) -> tuple:
    bounds = ideal.pure_power_bounds()
    if bounds is None:
        raise ValueError(f"{ideal} is not Artinian: some variable has no pure power")
    return bounds


def standard_monomials(ideal: MonomialIdeal) -> tuple:
    """Monomials outside the ideal, ordered by ``sort_key``.

    Grown one degree at a time inside the box given by the pure powers.
    Since the complement of I is closed under division, v = u*x_i is
    standard iff every v/x_j is standard and v is not a minimal generator,
    so no divisibility scan against the generators is needed.
    """
    _require_artinian(ideal)
    n = ideal.n
    gens = set(ideal.generators)
    found = {unit(n)}
    level = [unit(n)]
    while level:
        nxt = set()
        for u in level:
            for i in range(n):
                v = u[:i] + (u[i] + 1,) + u[i + 1:]
                if v in nxt or v in gens:
                    continue
                if all(v[j] == 0 or v[:j] + (v[j] - 1,) + v[j + 1:] in found for j in range(n)):
                    nxt.add(v)
        found |= nxt
        level = nxt
    return tuple(sorted(found, key=sort_key))


def colon(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    """(I : J) as the intersection of the quotients (I : g) over generators g of J."""
    _check_arity(ideal, other)
    result = MonomialIdeal(ideal.n, [unit(ideal.n)], ideal.names)
    for g in other.generators:
        quot = MonomialIdeal(ideal.n, [tuple(max(f_i - g_i, 0) for f_i, g_i in zip(f, g)) for f in ideal.generators])
        result = result.intersection(quot)
    return result


def socle_monomials(ideal: MonomialIdeal) -> tuple:
    n = ideal.n
    return tuple(
        u for u in standard_monomials(ideal)
        if all(mul(u, var(n, i)) in ideal for i in range(n))
    )


def compositions(total: int, parts: int, caps: Optional[Sequence[int]] = None):
    """Exponent vectors of length ``parts`` summing to ``total`` (entrywise <= caps)."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    top = total if caps is None else min(total, caps[0])
    for first in range(top, -1, -1):
        rest = None if caps is None else caps[1:]
        for tail in compositions(total - first, parts - 1, rest):
            yield (first,) + tail


def power_of_maximal_ideal(n: int, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("power of the maximal ideal needs k >= 1")
    return MonomialIdeal(n, list(compositions(k, n)))
