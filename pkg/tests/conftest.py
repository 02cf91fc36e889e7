import os
import sys

from hypothesis import HealthCheck, assume, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from teter import MonomialIdeal, build_divisor_poset, parse_ideal  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def artinian_ideals(draw, max_vars=3, max_exp=4, max_extra=3, min_vars=1, min_extra=0):
    n = draw(st.integers(min_vars, max_vars))
    gens = [tuple(draw(st.integers(1, max_exp)) if j == i else 0 for j in range(n)) for i in range(n)]
    extra = []
    if n >= 2:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for _ in range(draw(st.integers(min_extra, max_extra))):
            i, j = draw(st.sampled_from(pairs))
            g = [draw(st.integers(1 if k in (i, j) else 0, max_exp)) for k in range(n)]
            extra.append(tuple(g))
    return MonomialIdeal(n, gens + extra)


def ring(text):
    return build_divisor_poset(parse_ideal(text))


@st.composite
def non_gorenstein_ideals(draw, max_size=12):
    """A mixed generator strictly inside the pure-power box gives two socle monomials."""
    n = draw(st.integers(2, 3))
    top = 4 if n == 2 else 2
    a = [draw(st.integers(2, top)) for _ in range(n)]
    gens = [tuple(a[i] if j == i else 0 for j in range(n)) for i in range(n)]
    i, j = draw(st.sampled_from([(0, 1), (0, 2), (1, 2)][: 1 if n == 2 else 3]))
    gens.append(tuple(draw(st.integers(1, a[k] - 1)) if k in (i, j) else 0 for k in range(n)))
    for _ in range(draw(st.integers(0, 1))):
        gens.append(tuple(draw(st.integers(0, a[k])) for k in range(n)))
    ideal = MonomialIdeal(n, [g for g in gens if any(g)])
    P = build_divisor_poset(ideal)
    assume(len(P) <= max_size and not P.is_gorenstein())
    return ideal
