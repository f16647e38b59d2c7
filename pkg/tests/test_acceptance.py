"""Exit criteria.  Each test carries a ``criterion`` marker; the conftest
prints one PASS/FAIL line per criterion at the end of the run."""

import random
import time

import pytest

from nullwrithe import (
    build_seifert_graph,
    chirality_verdict,
    count_spanning_forests,
    enumerate_spanning_forests,
    forest_independence,
    load_catalog,
    mirror,
    nullification_number,
    parse_diagram,
    reproduce_table,
    sign_violations,
    spanning_forest,
    verify_parity_law,
    writhe_split,
)
from nullwrithe.catalog import bundled_table
from nullwrithe.generate import random_diagram

from _codes import FIG8, HOPF, TREFOIL
from oracles import sequential_nullification

TABLE1_ABS_WX = [2, 2, 2, 0, 0, 0, 2, 2, 0, 0, 2, 0, 0, 2]
TABLE2_ABS_WX = [1, 1, 1, 1, 1, 2, 0, 1, 1]
RANDOM_COUNT = 500
FOREST_BOUND = 10_000
TRIALS = 100


@pytest.fixture(scope="module")
def catalog():
    return load_catalog(bundled_table("table1")) + load_catalog(bundled_table("table2"))


@pytest.fixture(scope="module")
def random_alternating():
    rng = random.Random(20240601)
    out = [random_diagram(rng, max_crossings=12) for _ in range(RANDOM_COUNT)]
    assert all(1 <= d.n <= 12 for d in out)
    return out


@pytest.fixture(scope="module")
def random_fuzz():
    rng = random.Random(77)
    return [random_diagram(rng, max_crossings=12, alternating=False) for _ in range(RANDOM_COUNT)]


def _table(name, expected_abs, record_property):
    start = time.perf_counter()
    table = reproduce_table(load_catalog(bundled_table(name)))
    elapsed = time.perf_counter() - start
    record_property("seconds", f"{elapsed:.3f}")
    assert len(table.rows) == len(expected_abs)
    for row, want in zip(table.rows, expected_abs):
        r = row.report
        assert r.w == 0, row.name
        assert r.w_y == -r.w_x, row.name
        assert abs(r.w_x) == want, row.name
        assert row.status in ("exact", "mirror"), row.name
    record_property("statuses", dict((k, v) for k, v in table.summary.items() if v))
    assert not table.mismatches
    assert elapsed < 1.0


@pytest.mark.criterion(1, "Table 1: 14 knots, w = 0, |w_x| exact, w_y = -w_x, < 1 s")
def test_ac1_table1(record_property):
    _table("table1", TABLE1_ABS_WX, record_property)


@pytest.mark.criterion(2, "Table 2: 9 links, w = 0, |w_x| exact, w_y = -w_x, < 1 s")
def test_ac2_table2(record_property):
    _table("table2", TABLE2_ABS_WX, record_property)


@pytest.mark.criterion(3, "o = n - s + k and |forest| = s - k on catalog + 500 random alternating diagrams")
def test_ac3_nullification_law(catalog, random_alternating, record_property):
    diagrams = [e.diagram for e in catalog] + random_alternating
    for i, d in enumerate(diagrams):
        g = build_seifert_graph(d)
        o = nullification_number(g)
        assert o == d.n - g.s + g.k
        # independent check: nullify crossings one at a time on the diagram
        done, _ = sequential_nullification(d, random.Random(i))
        assert len(done) == o
        for seed in range(3):
            assert len(spanning_forest(g, seed)) == g.s - g.k
    record_property("diagrams", len(diagrams))


@pytest.mark.criterion(4, "forest independence on the catalog (exhaustive up to 10,000 forests)")
def test_ac4_forest_independence(catalog, record_property):
    exhaustive = 0
    for entry in catalog:
        g = build_seifert_graph(entry.diagram)
        chk = forest_independence(g, trials=TRIALS, bound=FOREST_BOUND)
        assert chk.passed, (entry.name, chk.splits)
        exhaustive += chk.exhaustive
    record_property("exhaustive", f"{exhaustive}/{len(catalog)}")


@pytest.mark.criterion(5, "parallel classes and fundamental cycles are sign-monochromatic")
def test_ac5_sign_structure(catalog, random_alternating, record_property):
    diagrams = [e.diagram for e in catalog] + random_alternating
    violations = 0
    for d in diagrams:
        g = build_seifert_graph(d)
        assert g.alternating
        for seed in range(3):
            violations += len(sign_violations(g, seed))
    record_property("violations", violations)
    assert violations == 0


@pytest.mark.criterion(6, "mirror antisymmetry of w_x, w_y and equal o on the catalog")
def test_ac6_mirror(catalog):
    for entry in catalog:
        a = chirality_verdict(entry.diagram)
        b = chirality_verdict(mirror(entry.diagram))
        assert (b.w_x, b.w_y, b.o) == (-a.w_x, -a.w_y, a.o), entry.name


@pytest.mark.criterion(7, "parity law o = c - 1 (mod 2); every even-c catalog link is Chiral")
def test_ac7_parity(catalog, record_property):
    even = 0
    for entry in catalog:
        r = chirality_verdict(entry.diagram)
        assert r.alternating and r.reduced and not r.split, entry.name
        assert verify_parity_law(entry.diagram), entry.name
        assert r.o % 2 == (r.c - 1) % 2
        if r.c % 2 == 0:
            even += 1
            assert r.verdict.chiral and "even_components" in r.verdict.reasons, entry.name
    record_property("even_c_entries", even)
    assert even == 7


@pytest.mark.criterion(8, "w = w_x + w_y on every input, including non-alternating fuzz")
def test_ac8_writhe_identity(catalog, random_alternating, random_fuzz, record_property):
    diagrams = [e.diagram for e in catalog] + random_alternating + random_fuzz
    forests = 0
    for d in diagrams:
        g = build_seifert_graph(d)
        total = sum(d.signs)
        if count_spanning_forests(g) <= 200:
            fs = list(enumerate_spanning_forests(g))
        else:
            fs = [spanning_forest(g, s) for s in range(20)]
        for f in fs:
            split = writhe_split(g, f)
            assert split.w == split.w_x + split.w_y == total
        forests += len(fs)
    record_property("diagrams", len(diagrams))
    record_property("forests", forests)


@pytest.mark.criterion(9, "trefoil / figure-eight / positive Hopf desk values")
@pytest.mark.parametrize(
    "code, expected",
    [
        (TREFOIL, (3, 2, 2, 3, 2, 1)),
        (FIG8, (4, 3, 2, 0, 0, 0)),
        (HOPF, (2, 2, 1, 2, 1, 1)),
    ],
)
def test_ac9_desk_values(code, expected):
    r = chirality_verdict(parse_diagram(code))
    assert (r.n, r.s, r.o, r.w, r.w_x, r.w_y) == expected
