"""Property tests over randomly generated planar diagrams."""

import random

from hypothesis import given, settings, strategies as st

from nullwrithe import (
    build_seifert_graph,
    chirality_verdict,
    is_alternating,
    mirror,
    nullification_number,
    sign_violations,
    spanning_forest,
    verify_forest_independence,
    verify_mirror_antisymmetry,
    verify_parity_law,
    writhe_split,
)
from nullwrithe.diagram import parse_gauss, parse_pd
from nullwrithe.generate import random_diagram

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def alt(seed):
    return random_diagram(random.Random(seed))


def any_diagram(seed):
    return random_diagram(random.Random(seed), alternating=seed % 2 == 0)


@given(seeds, st.integers(0, 1000))
def test_writhe_identity_any_forest(seed, forest_seed):
    d = any_diagram(seed)
    g = build_seifert_graph(d)
    f = spanning_forest(g, forest_seed)
    split = writhe_split(g, f)
    assert split.w == split.w_x + split.w_y == sum(d.signs)
    assert len(f) == g.s - g.k
    assert g.n - len(f) == nullification_number(g) == d.n - g.s + g.k


@given(seeds)
def test_alternating_generator(seed):
    d = alt(seed)
    assert is_alternating(d) and is_alternating(mirror(d))
    assert 1 <= d.n <= 12


@given(seeds)
def test_sign_monochromatic(seed):
    assert sign_violations(build_seifert_graph(alt(seed)), seed) == []


@settings(max_examples=60)
@given(seeds)
def test_forest_independence(seed):
    assert verify_forest_independence(build_seifert_graph(alt(seed)), trials=20)


@given(seeds)
def test_mirror(seed):
    d = alt(seed)
    m = mirror(d)
    assert m.signs == [-s for s in d.signs]
    assert verify_mirror_antisymmetry(d, seed)
    a, b = chirality_verdict(d), chirality_verdict(m)
    assert (b.w_x, b.w_y, b.o) == (-a.w_x, -a.w_y, a.o)
    assert chirality_verdict(mirror(m)) == a


@given(seeds)
def test_parity(seed):
    d = any_diagram(seed)
    if build_seifert_graph(d).k == 1:
        assert verify_parity_law(d)
        r = chirality_verdict(d)
        if r.alternating and r.reduced and r.c % 2 == 0:
            assert r.o % 2 == 1 and r.w_x % 2 != 0 and r.verdict.chiral


@given(seeds)
def test_one_sided_verdict(seed):
    r = chirality_verdict(any_diagram(seed))
    text = str(r.verdict)
    assert text == "Undetermined" or text.startswith("Chiral(")
    if r.verdict.chiral:
        assert r.alternating and r.reduced


@given(seeds)
def test_code_round_trips(seed):
    d = any_diagram(seed)
    assert parse_gauss(d.to_gauss()) == d
    assert parse_pd(d.to_pd()) == d
