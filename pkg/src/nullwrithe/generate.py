"""Random planar link diagrams for property tests and fuzzing.

Closed random polygons are dropped in the unit square and projected as they
are; their transverse self- and mutual intersections become crossings.  Over
and under are then chosen by two-colouring the passages so that every strand
alternates (possible for any planar shadow), or at random for fuzz inputs.
The result is emitted as a gauss-signed code and parsed back, so it always
goes through the public parser.
"""

from __future__ import annotations

import random
from collections import deque

from .diagram import Diagram, parse_gauss

__all__ = ["random_shadow", "shadow_to_gauss", "random_diagram", "random_alternating_diagram"]

Point = tuple[float, float]


def random_shadow(rng: random.Random, components: int, vertices: tuple[int, int] = (3, 8)) -> list[list[Point]]:
    polys = []
    for _ in range(components):
        cx, cy = rng.uniform(0.3, 0.7), rng.uniform(0.3, 0.7)
        r = rng.uniform(0.15, 0.45)
        m = rng.randint(*vertices)
        polys.append([(cx + rng.uniform(-r, r), cy + rng.uniform(-r, r)) for _ in range(m)])
    return polys


def _cross(a: Point, b: Point) -> float:
    return a[0] * b[1] - a[1] * b[0]


def _intersections(polys: list[list[Point]]):
    segs = []
    for ci, poly in enumerate(polys):
        m = len(poly)
        for j in range(m):
            p, q = poly[j], poly[(j + 1) % m]
            segs.append((ci, j, m, p, (q[0] - p[0], q[1] - p[1])))
    found = []
    for x in range(len(segs)):
        c1, j1, m1, p1, d1 = segs[x]
        for y in range(x + 1, len(segs)):
            c2, j2, m2, p2, d2 = segs[y]
            if c1 == c2 and (j2 - j1) % m1 in (1, m1 - 1):
                continue
            den = _cross(d1, d2)
            if den == 0:
                continue
            diff = (p2[0] - p1[0], p2[1] - p1[1])
            t = _cross(diff, d2) / den
            u = _cross(diff, d1) / den
            if 0 < t < 1 and 0 < u < 1:
                found.append(((c1, j1 + t, d1), (c2, j2 + u, d2)))
    return found


def shadow_to_gauss(polys: list[list[Point]], rng: random.Random, alternating: bool = True) -> str:
    hits = _intersections(polys)
    # passage (crossing, strand) -> position along its component
    along: list[list[tuple[float, int, int]]] = [[] for _ in polys]
    for cid, (a, b) in enumerate(hits):
        along[a[0]].append((a[1], cid, 0))
        along[b[0]].append((b[1], cid, 1))
    for seq in along:
        seq.sort()

    over: dict[tuple[int, int], bool] = {}
    if alternating:
        nbrs: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for cid in range(len(hits)):
            nbrs.setdefault((cid, 0), []).append((cid, 1))
            nbrs.setdefault((cid, 1), []).append((cid, 0))
        for seq in along:
            for j in range(len(seq)):
                a, b = seq[j - 1][1:], seq[j][1:]
                nbrs[a].append(b)
                nbrs[b].append(a)
        for start in sorted(nbrs):
            if start in over:
                continue
            over[start] = rng.random() < 0.5
            queue = deque([start])
            while queue:
                p = queue.popleft()
                for q in nbrs[p]:
                    if q not in over:
                        over[q] = not over[p]
                        queue.append(q)
                    elif over[q] == over[p]:
                        raise RuntimeError("shadow admits no alternating choice")
    else:
        for cid in range(len(hits)):
            top = rng.random() < 0.5
            over[cid, 0], over[cid, 1] = top, not top

    signs = []
    for cid, (a, b) in enumerate(hits):
        d_over, d_under = (a[2], b[2]) if over[cid, 0] else (b[2], a[2])
        signs.append("+" if _cross(d_over, d_under) > 0 else "-")

    groups = []
    for seq in along:
        toks = [f"{'O' if over[cid, s] else 'U'}{cid + 1}{signs[cid]}" for _, cid, s in seq]
        groups.append("(" + " ".join(toks) + ")")
    return " ".join(groups)


def random_diagram(
    rng: random.Random,
    max_crossings: int = 12,
    max_components: int = 3,
    alternating: bool = True,
    min_crossings: int = 1,
) -> Diagram:
    while True:
        comps = rng.randint(1, max_components)
        polys = random_shadow(rng, comps)
        if min_crossings <= len(_intersections(polys)) <= max_crossings:
            return parse_gauss(shadow_to_gauss(polys, rng, alternating))


def random_alternating_diagram(rng: random.Random, max_crossings: int = 12, max_components: int = 3) -> Diagram:
    return random_diagram(rng, max_crossings, max_components, alternating=True)
