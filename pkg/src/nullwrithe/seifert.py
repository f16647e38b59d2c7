"""Seifert circles and the signed Seifert multigraph of a diagram."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, _cycles, is_alternating
from .errors import LoopEdgeError

__all__ = [
    "SeifertCircle",
    "Edge",
    "SeifertGraph",
    "UnionFind",
    "seifert_circles",
    "build_seifert_graph",
    "is_reduced",
    "bridges",
    "split_components",
]


class UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        """Merge the classes of ``a`` and ``b``; False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass(frozen=True)
class SeifertCircle:
    id: int
    arcs: tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    crossing: int
    u: int
    v: int
    sign: int

    @property
    def ends(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


@dataclass(frozen=True)
class SeifertGraph:
    """Vertices are Seifert circle ids ``0..s-1``; edge ``i`` is crossing ``i``.

    ``alternating`` is carried over from the diagram because the verifiers
    only make claims about alternating inputs.
    """

    circles: tuple[SeifertCircle, ...]
    edges: tuple[Edge, ...]
    k: int
    alternating: bool

    @property
    def s(self) -> int:
        return len(self.circles)

    @property
    def n(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(len(self.circles))

    def parallel_classes(self) -> dict[tuple[int, int], list[Edge]]:
        classes: dict[tuple[int, int], list[Edge]] = {}
        for e in self.edges:
            classes.setdefault(e.ends, []).append(e)
        return classes

    def adjacency_text(self) -> str:
        return "".join(f"{e.u} {e.v} {e.sign:+d}\n" for e in self.edges)


def seifert_circles(d: Diagram) -> list[SeifertCircle]:
    """Smooth every crossing along the orientation.

    At each crossing the incoming under arc continues into the outgoing over
    arc and the incoming over arc into the outgoing under arc.  Each
    crossing-free component is a circle of its own, with no arcs.
    """
    succ = {}
    for x in d.crossings:
        succ[x.under_in] = x.over_out
        succ[x.over_in] = x.under_out
    cycles = _cycles(succ)
    circles = [SeifertCircle(i, tuple(c)) for i, c in enumerate(cycles)]
    circles.extend(SeifertCircle(len(circles) + j, ()) for j in range(d.free_loops))
    return circles


def build_seifert_graph(d: Diagram) -> SeifertGraph:
    circles = seifert_circles(d)
    where = {a: c.id for c in circles for a in c.arcs}
    edges = []
    for i, x in enumerate(d.crossings):
        u, v = where[x.under_in], where[x.over_in]
        if u == v:
            raise LoopEdgeError(
                f"crossing {i + 1} joins Seifert circle {u} to itself; the code is not a planar diagram"
            )
        edges.append(Edge(i, u, v, x.sign))
    uf = UnionFind(range(len(circles)))
    k = len(circles)
    for e in edges:
        if uf.union(e.u, e.v):
            k -= 1
    return SeifertGraph(tuple(circles), tuple(edges), k, is_alternating(d))


def bridges(g: SeifertGraph) -> list[Edge]:
    """Edges whose removal increases the number of connected components.

    A spanning forest is grown first; every non-forest edge marks the forest
    path between its ends as lying on a cycle.  Forest edges left unmarked are
    the bridges.
    """
    uf = UnionFind(g.vertices)
    tree: list[Edge] = []
    extra: list[Edge] = []
    for e in g.edges:
        (tree if uf.union(e.u, e.v) else extra).append(e)
    on_cycle = set()
    for e in extra:
        on_cycle.update(t.crossing for t in forest_path(g.s, tree, e.u, e.v))
    return [e for e in tree if e.crossing not in on_cycle]


def forest_path(s: int, forest: list[Edge], a: int, b: int) -> list[Edge]:
    """The unique path of forest edges from ``a`` to ``b`` (empty if a == b)."""
    adj: dict[int, list[tuple[int, Edge]]] = {v: [] for v in range(s)}
    for e in forest:
        adj[e.u].append((e.v, e))
        adj[e.v].append((e.u, e))
    back: dict[int, tuple[int, Edge] | None] = {a: None}
    stack = [a]
    while stack:
        v = stack.pop()
        if v == b:
            break
        for w, e in adj[v]:
            if w not in back:
                back[w] = (v, e)
                stack.append(w)
    if b not in back:
        raise ValueError(f"vertices {a} and {b} are not joined by the forest")
    path = []
    v = b
    while back[v] is not None:
        v, e = back[v]
        path.append(e)
    return path[::-1]


def is_reduced(g: SeifertGraph) -> bool:
    return not bridges(g)


def split_components(g: SeifertGraph) -> int:
    return g.k
