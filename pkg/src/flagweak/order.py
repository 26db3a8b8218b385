"""The flag weak order: covers, the pairwise comparison criterion, diagrams.

The order is generated by right multiplication by the a_i/b_i generators
whenever that raises finv; it is ranked by finv, with the identity at the
bottom and mu0 on top. `leq` decides comparability in O(n^2) straight from
the two windows, `leq_oracle` re-decides it by reachability over an
explicitly built diagram.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .core import (
    ColoredPermutation,
    GeneratorLabel,
    GroupContext,
    a,
    b,
    enumerate_group,
    format_element,
    identity,
    right_multiply,
)
from .errors import ContextMismatchError, NotComparableError


def m_set(pairs: Iterable[tuple[int, int]]) -> frozenset[int]:
    """Second components of a set of ordered pairs."""
    return frozenset(j for _, j in pairs)


@lru_cache(maxsize=None)
def value_inversions(u: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    """Pairs of values (p, q), p < q, with p standing to the right of q in u.

    These are exactly the inversions of the inverse permutation.
    """
    pos = [0] * len(u)
    for i, v in enumerate(u):
        pos[v - 1] = i
    return frozenset(
        (p, q)
        for p in range(1, len(u) + 1)
        for q in range(p + 1, len(u) + 1)
        if pos[p - 1] > pos[q - 1]
    )


def m_between(u: tuple[int, ...], v: tuple[int, ...]) -> frozenset[int]:
    """Values that newly become the larger member of an inverted pair from u to v."""
    return m_set(value_inversions(v) - value_inversions(u))


def up_covers(
    g: ColoredPermutation,
) -> tuple[tuple[GeneratorLabel, ColoredPermutation], ...]:
    """All (label, g*label) with finv going up by exactly one."""
    r, n = g.context.r, g.context.n
    w = g.window
    out = []
    for i in range(1, n):
        if w[i][1] == r - 1 and w[i - 1][0] < w[i][0]:
            out.append((a(i), right_multiply(g, a(i))))
    for i in range(1, n + 1):
        if w[i - 1][1] != r - 1:
            out.append((b(i), right_multiply(g, b(i))))
    return tuple(out)


def down_covers(
    g: ColoredPermutation,
) -> tuple[tuple[GeneratorLabel, ColoredPermutation], ...]:
    """All (label, h) with h*label = g covering h; inverts up_covers."""
    r, n = g.context.r, g.context.n
    w = g.window
    out = []
    for i in range(1, n):
        (v1, c1), (v2, c2) = w[i - 1], w[i]
        if c1 == 0 and v1 > v2:
            lower = list(w)
            lower[i - 1] = (v2, c2)
            lower[i] = (v1, (c1 - 1) % r)
            out.append((a(i), ColoredPermutation(g.context, tuple(lower))))
    for i in range(1, n + 1):
        v, c = w[i - 1]
        if c != 0:
            lower = list(w)
            lower[i - 1] = (v, c - 1)
            out.append((b(i), ColoredPermutation(g.context, tuple(lower))))
    return tuple(out)


def wdes(g: ColoredPermutation) -> int:
    """Number of elements covered by g."""
    return len(down_covers(g))


def leq(g: ColoredPermutation, h: ColoredPermutation) -> bool:
    """Comparison criterion evaluated directly on the two windows.

    g precedes h iff the value inversions of g are contained in those of h
    and every value whose color drops from g to h (colors compared in
    0 < 1 < ... < r-1) is the larger member of some newly inverted pair.
    """
    if g.context != h.context:
        raise ContextMismatchError("cannot compare elements of different groups")
    gi = value_inversions(g.abs_seq)
    hi = value_inversions(h.abs_seq)
    if not gi <= hi:
        return False
    slack = m_set(hi - gi)
    for v in range(1, g.context.n + 1):
        if g.color_of_value(v) > h.color_of_value(v) and v not in slack:
            return False
    return True


@dataclass(frozen=True)
class CoverEdge:
    """A labeled cover edge between element ids of one diagram."""

    src: int
    dst: int
    label: GeneratorLabel


@dataclass
class HasseDiagram:
    """Rank-layered cover diagram; immutable once built."""

    context: GroupContext
    elements: tuple[ColoredPermutation, ...]
    layers: tuple[tuple[int, ...], ...]
    edges: tuple[CoverEdge, ...]
    bottom: int
    top: int

    @cached_property
    def _index(self) -> dict[tuple[tuple[int, int], ...], int]:
        return {g.window: i for i, g in enumerate(self.elements)}

    def id_of(self, g: ColoredPermutation) -> int:
        try:
            return self._index[g.window]
        except KeyError:
            raise ValueError(f"{g} is not an element of this diagram") from None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def bottom_element(self) -> ColoredPermutation:
        return self.elements[self.bottom]

    @property
    def top_element(self) -> ColoredPermutation:
        return self.elements[self.top]

    def rank_sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    @cached_property
    def up_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.elements]
        for e in self.edges:
            adj[e.src].append(e.dst)
        return tuple(tuple(row) for row in adj)

    @cached_property
    def down_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.elements]
        for e in self.edges:
            adj[e.dst].append(e.src)
        return tuple(tuple(row) for row in adj)

    @cached_property
    def upset_bits(self) -> tuple[int, ...]:
        """Bitmask per id of everything reachable upward, self included."""
        bits = [0] * len(self.elements)
        for layer in reversed(self.layers):
            for i in layer:
                acc = 1 << i
                for j in self.up_adjacency[i]:
                    acc |= bits[j]
                bits[i] = acc
        return tuple(bits)

    @cached_property
    def downset_bits(self) -> tuple[int, ...]:
        bits = [0] * len(self.elements)
        for layer in self.layers:
            for i in layer:
                acc = 1 << i
                for j in self.down_adjacency[i]:
                    acc |= bits[j]
                bits[i] = acc
        return tuple(bits)


@dataclass
class Interval(HasseDiagram):
    """A closed interval [bottom, top], laid out like a full diagram."""


def _layered(
    ctx: GroupContext,
    members: Iterable[ColoredPermutation],
    cls,
) -> HasseDiagram:
    by_rank: dict[int, list[ColoredPermutation]] = {}
    for g in members:
        by_rank.setdefault(g.finv, []).append(g)
    elements: list[ColoredPermutation] = []
    layers: list[tuple[int, ...]] = []
    index: dict[tuple[tuple[int, int], ...], int] = {}
    for rank in sorted(by_rank):
        layer = []
        for g in sorted(by_rank[rank], key=lambda x: x.sort_key):
            index[g.window] = len(elements)
            layer.append(len(elements))
            elements.append(g)
        layers.append(tuple(layer))
    edges = []
    for i, g in enumerate(elements):
        for label, h in up_covers(g):
            j = index.get(h.window)
            if j is not None:
                edges.append(CoverEdge(i, j, label))
    return cls(
        context=ctx,
        elements=tuple(elements),
        layers=tuple(layers),
        edges=tuple(edges),
        bottom=layers[0][0],
        top=layers[-1][0],
    )


def build_hasse(ctx: GroupContext) -> HasseDiagram:
    """Cover diagram of the whole group, grown rank by rank from the identity."""
    seen: dict[tuple[tuple[int, int], ...], ColoredPermutation] = {}
    frontier = [identity(ctx)]
    while frontier:
        nxt: dict[tuple[tuple[int, int], ...], ColoredPermutation] = {}
        for g in frontier:
            seen[g.window] = g
            for _, h in up_covers(g):
                if h.window not in seen:
                    nxt[h.window] = h
        frontier = list(nxt.values())
    diagram = _layered(ctx, seen.values(), HasseDiagram)
    if len(diagram.layers[0]) != 1 or len(diagram.layers[-1]) != 1:
        raise AssertionError("diagram must have a unique bottom and top")
    return diagram


def build_interval(
    g: ColoredPermutation,
    h: ColoredPermutation,
    hasse: HasseDiagram | None = None,
) -> Interval:
    """The interval [g, h]; filtered enumeration, or two reachability passes
    over a prebuilt diagram when one is supplied."""
    if g.context != h.context:
        raise ContextMismatchError("interval endpoints from different groups")
    if not leq(g, h):
        raise NotComparableError(f"{g} does not precede {h}")
    if hasse is None:
        members = [
            x for x in enumerate_group(g.context) if leq(g, x) and leq(x, h)
        ]
    else:
        bits = hasse.upset_bits[hasse.id_of(g)] & hasse.downset_bits[hasse.id_of(h)]
        members = [hasse.elements[i] for i in _bit_indices(bits)]
    return _layered(g.context, members, Interval)


def _bit_indices(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def leq_oracle(
    g: ColoredPermutation, h: ColoredPermutation, hasse: HasseDiagram
) -> bool:
    """Reachability along cover edges; the brute-force side of `leq`."""
    return bool(hasse.upset_bits[hasse.id_of(g)] >> hasse.id_of(h) & 1)


def rank_genfun(hasse: HasseDiagram):
    """Rank generating function: coefficient of q^k counts elements of finv k."""
    from .genfun import UniPoly

    top_rank = max(g.finv for g in hasse.elements)
    counts = [0] * (top_rank + 1)
    for g in hasse.elements:
        counts[g.finv] += 1
    return UniPoly.from_coeffs("q", counts)


# --- exports ---------------------------------------------------------------

def to_json_obj(diag: HasseDiagram, signed: bool = False) -> dict:
    return {
        "r": diag.context.r,
        "n": diag.context.n,
        "nodes": [
            {"id": i, "window": format_element(g, signed), "finv": g.finv}
            for i, g in enumerate(diag.elements)
        ],
        "edges": [
            {"from": e.src, "to": e.dst, "gen": str(e.label)} for e in diag.edges
        ],
    }


def to_json(diag: HasseDiagram, signed: bool = False) -> str:
    return json.dumps(to_json_obj(diag, signed), indent=2)


def to_dot(diag: HasseDiagram, signed: bool = False) -> str:
    """DOT digraph, bottom-up; b edges black, a edges red."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for g in diag.elements:
        name = format_element(g, signed)
        lines.append(f'  "{name}" [label="{name}\\nfinv={g.finv}"];')
    for e in diag.edges:
        src = format_element(diag.elements[e.src], signed)
        dst = format_element(diag.elements[e.dst], signed)
        color = "red" if e.label.kind == "a" else "black"
        lines.append(f'  "{src}" -> "{dst}" [color={color}, label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines)


def diagram_signature(
    diag: HasseDiagram,
) -> tuple[frozenset[tuple[str, int]], frozenset[tuple[str, str, str]]]:
    """Layout-free structure: node (window, finv) set and edge (from, to, kind) set."""
    nodes = frozenset((format_element(g), g.finv) for g in diag.elements)
    edges = frozenset(
        (
            format_element(diag.elements[e.src]),
            format_element(diag.elements[e.dst]),
            e.label.kind,
        )
        for e in diag.edges
    )
    return nodes, edges
