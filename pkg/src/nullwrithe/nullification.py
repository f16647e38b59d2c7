"""Nullification number, the writhe split (w_x, w_y) and chirality verdicts.

Nullifying crossings without disconnecting the diagram corresponds, in the
Seifert graph, to deleting edges while keeping every connected component
connected.  What survives is a spanning forest; the deleted edges form the
nullification set.  So::

    o   = n - s + k                 (size of the nullification set)
    w_x = sum of signs off the forest
    w_y = sum of signs on the forest
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Iterator, NamedTuple

from .diagram import Diagram, mirror
from .errors import NotAlternatingError, NotApplicableError
from .seifert import (
    SeifertGraph,
    UnionFind,
    build_seifert_graph,
    forest_path,
    is_reduced,
)

__all__ = [
    "SpanningForest",
    "WritheSplit",
    "Verdict",
    "InvariantReport",
    "IndependenceCheck",
    "spanning_forest",
    "count_spanning_forests",
    "enumerate_spanning_forests",
    "nullification_number",
    "writhe_split",
    "forest_independence",
    "verify_forest_independence",
    "sign_violations",
    "chirality_verdict",
    "verify_parity_law",
    "verify_mirror_antisymmetry",
    "DEFAULT_FOREST_BOUND",
]

DEFAULT_FOREST_BOUND = 10_000


@dataclass(frozen=True)
class SpanningForest:
    edges: frozenset[int]  # crossing indices of the kept edges

    def __len__(self) -> int:
        return len(self.edges)


class WritheSplit(NamedTuple):
    w: int
    w_x: int
    w_y: int


def spanning_forest(g: SeifertGraph, seed: int = 0) -> SpanningForest:
    """Greedy union-find forest over a seeded shuffle of the edges."""
    order = list(g.edges)
    random.Random(seed).shuffle(order)
    uf = UnionFind(g.vertices)
    return SpanningForest(frozenset(e.crossing for e in order if uf.union(e.u, e.v)))


def nullification_number(g: SeifertGraph) -> int:
    return g.n - g.s + g.k


def writhe_split(g: SeifertGraph, f: SpanningForest) -> WritheSplit:
    w_y = sum(e.sign for e in g.edges if e.crossing in f.edges)
    w = sum(e.sign for e in g.edges)
    return WritheSplit(w, w - w_y, w_y)


def _det(rows: list[list[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    m = [r[:] for r in rows]
    size = len(m)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for p in range(size - 1):
        if m[p][p] == 0:
            swap = next((r for r in range(p + 1, size) if m[r][p] != 0), None)
            if swap is None:
                return 0
            m[p], m[swap] = m[swap], m[p]
            sign = -sign
        for i in range(p + 1, size):
            for j in range(p + 1, size):
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) // prev
        prev = m[p][p]
    return sign * m[-1][-1]


def count_spanning_forests(g: SeifertGraph) -> int:
    """Number of spanning forests, by the matrix-tree theorem per component."""
    uf = UnionFind(g.vertices)
    for e in g.edges:
        uf.union(e.u, e.v)
    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(uf.find(v), []).append(v)
    total = 1
    for verts in groups.values():
        index = {v: i for i, v in enumerate(verts)}
        lap = [[0] * len(verts) for _ in verts]
        for e in g.edges:
            if e.u in index:
                a, b = index[e.u], index[e.v]
                lap[a][a] += 1
                lap[b][b] += 1
                lap[a][b] -= 1
                lap[b][a] -= 1
        total *= _det([row[1:] for row in lap[1:]])
    return total


def enumerate_spanning_forests(g: SeifertGraph) -> Iterator[SpanningForest]:
    """Every spanning forest, by deletion-contraction without dead ends.

    An edge is either contracted into the forest, or deleted when that keeps
    its endpoints connected through the remaining edges.  Loops created by
    contraction are always deleted.
    """

    def connected(edges: list[tuple[int, int, int]], a: int, b: int) -> bool:
        uf = UnionFind()
        uf.add(a)
        uf.add(b)
        for _, u, v in edges:
            uf.add(u)
            uf.add(v)
            uf.union(u, v)
        return uf.find(a) == uf.find(b)

    def rec(edges: list[tuple[int, int, int]]) -> Iterator[list[int]]:
        if not edges:
            yield []
            return
        (cid, u, v), rest = edges[0], edges[1:]
        if u == v:
            yield from rec(rest)
            return
        contracted = [(c, u if a == v else a, u if b == v else b) for c, a, b in rest]
        for tail in rec(contracted):
            yield [cid, *tail]
        if connected(rest, u, v):
            yield from rec(rest)

    for kept in rec([(e.crossing, e.u, e.v) for e in g.edges]):
        yield SpanningForest(frozenset(kept))


@dataclass(frozen=True)
class IndependenceCheck:
    passed: bool
    splits: frozenset[WritheSplit]
    forests_checked: int
    exhaustive: bool
    forest_count: int

    def __bool__(self) -> bool:
        return self.passed


def forest_independence(
    g: SeifertGraph, trials: int = 100, bound: int = DEFAULT_FOREST_BOUND
) -> IndependenceCheck:
    """Evaluate (w, w_x, w_y) over many spanning forests.

    All forests are enumerated when there are at most ``bound`` of them; the
    ``trials`` seeded forests are always evaluated as well.
    """
    if not g.alternating:
        raise NotAlternatingError(
            "forest independence is only guaranteed for alternating diagrams"
        )
    if trials < 1:
        raise ValueError("trials must be positive")
    count = count_spanning_forests(g)
    splits = set()
    checked = 0
    for seed in range(trials):
        splits.add(writhe_split(g, spanning_forest(g, seed)))
        checked += 1
    exhaustive = count <= bound
    if exhaustive:
        for f in enumerate_spanning_forests(g):
            splits.add(writhe_split(g, f))
            checked += 1
    return IndependenceCheck(len(splits) == 1, frozenset(splits), checked, exhaustive, count)


def verify_forest_independence(
    g: SeifertGraph, trials: int = 100, bound: int = DEFAULT_FOREST_BOUND
) -> bool:
    return forest_independence(g, trials, bound).passed


def sign_violations(g: SeifertGraph, seed: int = 0) -> list[str]:
    """Parallel classes and fundamental cycles that mix edge signs.

    For alternating diagrams this list is empty.
    """
    problems = []
    for ends, cls in sorted(g.parallel_classes().items()):
        if len({e.sign for e in cls}) > 1:
            problems.append(
                f"parallel class {ends} mixes signs at crossings {[e.crossing + 1 for e in cls]}"
            )
    forest = spanning_forest(g, seed)
    tree = [e for e in g.edges if e.crossing in forest.edges]
    for e in g.edges:
        if e.crossing in forest.edges:
            continue
        cycle = forest_path(g.s, tree, e.u, e.v) + [e]
        if len({c.sign for c in cycle}) > 1:
            problems.append(
                f"fundamental cycle of crossing {e.crossing + 1} mixes signs "
                f"({[c.crossing + 1 for c in cycle]})"
            )
    return problems


@dataclass(frozen=True)
class Verdict:
    chiral: bool
    reasons: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"Chiral({', '.join(self.reasons)})" if self.chiral else "Undetermined"


@dataclass(frozen=True)
class InvariantReport:
    n: int
    s: int
    k: int
    c: int
    o: int
    w: int
    w_x: int
    w_y: int
    alternating: bool
    reduced: bool
    split: bool
    verdict: Verdict
    warnings: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        out = asdict(self)
        out["verdict"] = str(self.verdict)
        out["warnings"] = list(self.warnings)
        return out


def chirality_verdict(d: Diagram, seed: int = 0) -> InvariantReport:
    """Compute every invariant of ``d`` and a one-sided chirality verdict.

    The verdict is ``Chiral`` only for alternating reduced diagrams with a
    nonzero w_x or w_y, or with an even number of components when the diagram
    is not split.  It never asserts achirality.
    """
    g = build_seifert_graph(d)
    split_ = writhe_split(g, spanning_forest(g, seed))
    alternating = g.alternating
    reduced = is_reduced(g)
    split = g.k > 1
    warnings = []
    if not alternating:
        warnings.append("not_alternating")
    if not reduced:
        warnings.append("not_reduced")
    if warnings:
        warnings.append("not_invariant")
    reasons = []
    if alternating and reduced:
        if split_.w_x != 0 or split_.w_y != 0:
            reasons.append("nonzero_wx_wy")
        if not split and d.c % 2 == 0:
            reasons.append("even_components")
    return InvariantReport(
        n=d.n,
        s=g.s,
        k=g.k,
        c=d.c,
        o=nullification_number(g),
        w=split_.w,
        w_x=split_.w_x,
        w_y=split_.w_y,
        alternating=alternating,
        reduced=reduced,
        split=split,
        verdict=Verdict(bool(reasons), tuple(reasons)),
        warnings=tuple(warnings),
    )


def verify_parity_law(d: Diagram) -> bool:
    """Check o = c - 1 (mod 2) for a non-split diagram."""
    g = build_seifert_graph(d)
    if g.k > 1:
        raise NotApplicableError("the parity law needs a non-split diagram")
    return (nullification_number(g) - (d.c - 1)) % 2 == 0


def verify_mirror_antisymmetry(d: Diagram, seed: int = 0) -> bool:
    """Compare d with its mirror using the same crossings as forest."""
    g = build_seifert_graph(d)
    gm = build_seifert_graph(mirror(d))
    f = spanning_forest(g, seed)
    a, b = writhe_split(g, f), writhe_split(gm, f)
    return (
        b.w_x == -a.w_x
        and b.w_y == -a.w_y
        and nullification_number(gm) == nullification_number(g)
        and _is_forest_of(gm, f)
    )


def _is_forest_of(g: SeifertGraph, f: SpanningForest) -> bool:
    uf = UnionFind(g.vertices)
    kept = [e for e in g.edges if e.crossing in f.edges]
    return all(uf.union(e.u, e.v) for e in kept) and len(kept) == g.s - g.k

