"""Oriented link diagrams: parsing, validation and the elementary operations.

Two textual encodings are understood.

``pd-signed``
    ``;``-separated statements ``X+ a b c d`` / ``X- a b c d``.  ``a`` is the
    incoming under arc, ``c`` the outgoing under arc, and ``b``/``d`` the two
    ends of the over strand, listed cyclically around the crossing.  The sign
    token is authoritative.  The direction of the over strand is recovered from
    arc usage (every arc must enter exactly one crossing and leave exactly one)
    and the declared signs must agree with a single cyclic handedness within
    each connected piece of the projection: counterclockwise (``X+`` has its over strand running ``d -> b``)
    or clockwise (``X+`` runs ``b -> d``).  Knot Atlas style PD codes are
    counterclockwise.  The literals ``unknot`` and ``unlink k`` add
    crossing-free split components.

``gauss-signed``
    One parenthesised group per component, e.g. ``(O1+ U2+ O3+ U1+ O2+ U3+)``.
    Every crossing index occurs once as ``O`` and once as ``U`` with the same
    sign.  An empty group ``()`` is a crossing-free component.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ArcConsistencyError, CodeSyntaxError, DegenerateError, TruncatedCrossingError

__all__ = [
    "Crossing",
    "Diagram",
    "parse_diagram",
    "parse_pd",
    "parse_gauss",
    "crossing_signs",
    "mirror",
    "is_alternating",
    "component_count",
    "reverse_components",
]

_SIGNS = {"+": 1, "-": -1, "−": -1}
_X_RE = re.compile(r"X\s*([+\-−])\s*(\d+)[\s,]+(\d+)[\s,]+(\d+)[\s,]+(\d+)")
_X_SHORT_RE = re.compile(r"X\s*[+\-−]\s*\d+(?:[\s,]+\d+){0,2}")
_UNLINK_RE = re.compile(r"unlink\s+(\d+)")
_GAUSS_TOKEN = re.compile(r"([OU])(\d+)\s*([+\-−])")


@dataclass(frozen=True)
class Crossing:
    under_in: int
    under_out: int
    over_in: int
    over_out: int
    sign: int

    def strands(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.under_in, self.under_out), (self.over_in, self.over_out)


@dataclass(frozen=True)
class Diagram:
    """A validated oriented link diagram.

    Arc labels are normalised to ``1..2n`` so that consecutive labels follow
    the orientation of each component.  ``components`` lists the arcs of every
    component in traversal order; ``free_loops`` counts crossing-free split
    unknotted components (from the ``unknot`` / ``unlink`` literals).
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...] = field(repr=False)
    free_loops: int = 0

    @classmethod
    def build(cls, crossings: Iterable[Crossing], free_loops: int = 0) -> "Diagram":
        crossings = tuple(crossings)
        if not crossings and free_loops <= 0:
            raise DegenerateError(
                "diagram has no crossings; use the 'unknot' or 'unlink k' literal"
            )
        _check_arc_usage(crossings)
        successor = _strand_successor(crossings)
        cycles = _cycles(successor)
        cycles.sort(key=min)
        relabel: dict[int, int] = {}
        components = []
        for cyc in cycles:
            start = cyc.index(min(cyc))
            cyc = cyc[start:] + cyc[:start]
            components.append(tuple(relabel.setdefault(a, len(relabel) + 1) for a in cyc))
        crossings = tuple(
            Crossing(
                relabel[x.under_in], relabel[x.under_out],
                relabel[x.over_in], relabel[x.over_out], x.sign,
            )
            for x in crossings
        )
        return cls(crossings, tuple(components), free_loops)

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def c(self) -> int:
        return len(self.components) + self.free_loops

    @property
    def signs(self) -> list[int]:
        return [x.sign for x in self.crossings]

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def passages(self) -> list[list[tuple[int, str]]]:
        """Per component, the (crossing index, 'O'|'U') passages in order."""
        ends: dict[int, tuple[int, str]] = {}
        for i, x in enumerate(self.crossings):
            ends[x.under_in] = (i, "U")
            ends[x.over_in] = (i, "O")
        return [[ends[a] for a in comp] for comp in self.components]

    def to_pd(self) -> str:
        """Serialise as a counterclockwise pd-signed code."""
        parts = []
        for x in self.crossings:
            if x.sign > 0:
                quad = (x.under_in, x.over_out, x.under_out, x.over_in)
            else:
                quad = (x.under_in, x.over_in, x.under_out, x.over_out)
            parts.append(("X+ " if x.sign > 0 else "X- ") + " ".join(map(str, quad)))
        parts.extend(["unknot"] * self.free_loops)
        return " ; ".join(parts)

    def to_gauss(self) -> str:
        groups = []
        for seq in self.passages():
            # start with the passage that opens the component's first arc
            seq = seq[-1:] + seq[:-1]
            toks = [f"{role}{i + 1}{'+' if self.crossings[i].sign > 0 else '-'}" for i, role in seq]
            groups.append("(" + " ".join(toks) + ")")
        groups.extend(["()"] * self.free_loops)
        return " ".join(groups)


def _check_arc_usage(crossings: tuple[Crossing, ...]) -> None:
    ins: dict[int, int] = defaultdict(int)
    outs: dict[int, int] = defaultdict(int)
    for x in crossings:
        ins[x.under_in] += 1
        ins[x.over_in] += 1
        outs[x.under_out] += 1
        outs[x.over_out] += 1
    for arc in sorted(set(ins) | set(outs)):
        if ins[arc] != 1 or outs[arc] != 1:
            raise ArcConsistencyError(
                f"arc {arc} enters {ins[arc]} and leaves {outs[arc]} crossings; expected 1 and 1"
            )
    for x in crossings:
        if x.sign not in (1, -1):
            raise ArcConsistencyError(f"crossing sign must be +1 or -1, got {x.sign}")


def _strand_successor(crossings: Iterable[Crossing]) -> dict[int, int]:
    succ = {}
    for x in crossings:
        succ[x.under_in] = x.under_out
        succ[x.over_in] = x.over_out
    return succ


def _cycles(perm: dict[int, int]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc = []
        a = start
        while a not in seen:
            seen.add(a)
            cyc.append(a)
            a = perm[a]
        out.append(cyc)
    return out


# --------------------------------------------------------------------------
# parsing

def _split_literals(statements: list[str]) -> tuple[list[str], int]:
    rest, loops = [], 0
    for st in statements:
        if st == "unknot":
            loops += 1
            continue
        m = _UNLINK_RE.fullmatch(st)
        if m:
            k = int(m.group(1))
            if k < 1:
                raise CodeSyntaxError(f"'unlink' needs a positive component count: {st!r}")
            loops += k
            continue
        rest.append(st)
    return rest, loops


def parse_pd(text: str) -> Diagram:
    statements = [s.strip() for s in text.strip().split(";")]
    statements = [s for s in statements if s]
    statements, loops = _split_literals(statements)
    raw = []
    for st in statements:
        m = _X_RE.fullmatch(st)
        if not m:
            short = _X_SHORT_RE.fullmatch(st)
            if short:
                raise TruncatedCrossingError(
                    f"crossing statement {st!r} has fewer than 4 arc labels, "
                    "so some arc is used only once"
                )
            raise CodeSyntaxError(f"malformed crossing statement {st!r}; expected 'X+ a b c d'")
        quad = tuple(int(g) for g in m.groups()[1:])
        if min(quad) < 1:
            raise CodeSyntaxError(f"arc labels must be positive integers: {st!r}")
        raw.append((*quad, _SIGNS[m.group(1)]))
    return Diagram.build(_orient_over_strands(raw), loops)


def _orient_over_strands(raw: list[tuple[int, int, int, int, int]]) -> list[Crossing]:
    """Decide, per crossing, whether the over strand runs d->b or b->d."""
    n = len(raw)
    uses: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, quad in enumerate(raw):
        for slot in range(4):
            uses[quad[slot]].append((i, slot))
    for arc in sorted(uses):
        if len(uses[arc]) != 2:
            raise ArcConsistencyError(f"arc {arc} appears {len(uses[arc])} time(s); expected 2")

    # forward[i] is True when the over strand runs d -> b (slot 3 -> slot 1).
    forward: list[bool | None] = [None] * n

    def role(i: int, slot: int) -> str | None:
        if slot == 0:
            return "in"
        if slot == 2:
            return "out"
        if forward[i] is None:
            return None
        return "in" if (slot == 3) == forward[i] else "out"

    def propagate(queue: list[int]) -> None:
        while queue:
            i = queue.pop()
            for slot in range(4):
                r = role(i, slot)
                if r is None:
                    continue
                for j, other in uses[raw[i][slot]]:
                    if (j, other) == (i, slot) or other in (0, 2) or forward[j] is not None:
                        continue
                    want_in = r == "out"
                    forward[j] = (other == 3) == want_in
                    queue.append(j)

    propagate(list(range(n)))

    # handedness is per connected piece of the projection, so split unions
    # of codes written in different conventions are accepted
    piece = list(range(n))

    def root(i: int) -> int:
        while piece[i] != i:
            piece[i] = piece[piece[i]]
            i = piece[i]
        return i

    for arc_uses in uses.values():
        (i, _), (j, _) = arc_uses
        piece[root(i)] = root(j)
    handedness: dict[int, int] = {}
    for i in range(n):
        if forward[i] is None:
            continue
        h = raw[i][4] * (1 if forward[i] else -1)
        if handedness.setdefault(root(i), h) != h:
            raise ArcConsistencyError(
                f"sign of crossing {i + 1} contradicts the cyclic order used by the other crossings"
            )
    for i in range(n):
        if forward[i] is None:
            # over-only strand: orientation is fixed by the declared sign
            forward[i] = raw[i][4] * handedness.get(root(i), 1) > 0
            propagate([i])

    crossings = []
    for i, (a, b, c, d, sign) in enumerate(raw):
        over_in, over_out = (d, b) if forward[i] else (b, d)
        crossings.append(Crossing(a, c, over_in, over_out, sign))
    return crossings


def parse_gauss(text: str) -> Diagram:
    text = text.strip()
    if text == "unknot" or _UNLINK_RE.fullmatch(text):
        return Diagram.build((), _split_literals([text])[1])
    if re.sub(r"\([^()]*\)", "", text).strip(" \t\r\n,;"):
        raise CodeSyntaxError("gauss-signed code must be a sequence of parenthesised components")
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups:
        raise DegenerateError("empty gauss code; use the 'unknot' literal")
    passages: dict[int, dict[str, tuple[int, int, int]]] = defaultdict(dict)
    loops = 0
    next_arc = 1
    for group in groups:
        tokens = [t for t in re.split(r"[\s,]+", group.strip()) if t]
        if not tokens:
            loops += 1
            continue
        m = len(tokens)
        for j, tok in enumerate(tokens):
            mt = _GAUSS_TOKEN.fullmatch(tok)
            if not mt:
                raise CodeSyntaxError(f"malformed gauss token {tok!r}")
            role, idx, sign = mt.group(1), int(mt.group(2)), _SIGNS[mt.group(3)]
            if role in passages[idx]:
                raise CodeSyntaxError(f"crossing {idx} has two {role} passages")
            arc_in = next_arc + (j - 1) % m
            arc_out = next_arc + j
            passages[idx][role] = (arc_in, arc_out, sign)
        next_arc += m
    crossings = []
    for idx in sorted(passages):
        p = passages[idx]
        if set(p) != {"O", "U"}:
            raise CodeSyntaxError(f"crossing {idx} needs exactly one O and one U passage")
        if p["O"][2] != p["U"][2]:
            raise CodeSyntaxError(f"crossing {idx} has mismatched signs")
        crossings.append(Crossing(p["U"][0], p["U"][1], p["O"][0], p["O"][1], p["U"][2]))
    return Diagram.build(crossings, loops)


def parse_diagram(text: str, format: str = "pd-signed") -> Diagram:
    """Parse ``text`` in the given format (``pd-signed``/``pd`` or ``gauss-signed``/``gauss``)."""
    fmt = format.lower()
    if fmt in ("pd", "pd-signed"):
        return parse_pd(text)
    if fmt in ("gauss", "gauss-signed"):
        return parse_gauss(text)
    raise ValueError(f"unknown diagram format {format!r}")


# --------------------------------------------------------------------------
# elementary operations

def crossing_signs(d: Diagram) -> list[int]:
    return d.signs


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing; every sign is negated."""
    return Diagram.build(
        (Crossing(x.over_in, x.over_out, x.under_in, x.under_out, -x.sign) for x in d.crossings),
        d.free_loops,
    )


def is_alternating(d: Diagram) -> bool:
    for seq in d.passages():
        roles = [r for _, r in seq]
        if any(roles[j] == roles[j - 1] for j in range(len(roles))):
            return False
    return True


def component_count(d: Diagram) -> int:
    return d.c


def reverse_components(d: Diagram, which: Iterable[int]) -> Diagram:
    """Reverse the orientation of the components with the given indices.

    A crossing changes sign exactly when one of its two strands is reversed.
    """
    flipped = {a for i in set(which) for a in d.components[i]}
    out = []
    for x in d.crossings:
        ui, uo, oi, oo = x.under_in, x.under_out, x.over_in, x.over_out
        # an arc belongs to one component, so testing the incoming arc suffices
        rev_u, rev_o = ui in flipped, oi in flipped
        if rev_u:
            ui, uo = uo, ui
        if rev_o:
            oi, oo = oo, oi
        out.append(Crossing(ui, uo, oi, oo, -x.sign if rev_u != rev_o else x.sign))
    return Diagram.build(out, d.free_loops)
