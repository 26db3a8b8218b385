"""Maximal chains as generator words, local rewiring moves, and chain graphs.

A maximal chain of an interval is encoded by the word of edge labels read
bottom to top. For two colors, any two chains of one interval are connected
by the moves T1-T5; for more colors a generic two-atom reroute plays the
same role, and connectivity results it produces are flagged as empirical.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

import numpy as np

from .core import ColoredPermutation, GeneratorLabel, a, b, right_multiply
from .errors import CapExceededError
from .lattice import join
from .order import Interval, leq, up_covers
from ._kernel import bfs_eccentricities

DEFAULT_CHAIN_CAP = 10**5
EXACT_DIAMETER_LIMIT = 10**5


@dataclass(frozen=True)
class GeneratorWord:
    """A word of generator labels anchored at a base element."""

    base: ColoredPermutation
    letters: tuple[GeneratorLabel, ...]

    def elements(self) -> tuple[ColoredPermutation, ...]:
        out = [self.base]
        for s in self.letters:
            out.append(right_multiply(out[-1], s))
        return tuple(out)

    @property
    def end(self) -> ColoredPermutation:
        g = self.base
        for s in self.letters:
            g = right_multiply(g, s)
        return g

    def is_valid(self) -> bool:
        """Every prefix must raise finv by exactly one."""
        elems = self.elements()
        return all(
            elems[i + 1].finv == elems[i].finv + 1 for i in range(len(self.letters))
        )

    def replaced(self, start: int, length: int, letters) -> "GeneratorWord":
        return GeneratorWord(
            self.base,
            self.letters[:start] + tuple(letters) + self.letters[start + length :],
        )

    def __str__(self) -> str:
        return ".".join(str(s) for s in self.letters) if self.letters else "(empty)"


class Move(NamedTuple):
    position: int  # 1-based start of the rewritten factor
    kind: str
    word: GeneratorWord


def _chain_words(
    base: ColoredPermutation,
    top: ColoredPermutation,
    member,
    cap: Optional[int] = None,
) -> list[tuple[GeneratorLabel, ...]]:
    """All label paths from base to top through elements accepted by `member`."""
    out: list[tuple[GeneratorLabel, ...]] = []
    stack: list[tuple[ColoredPermutation, tuple[GeneratorLabel, ...]]] = [(base, ())]
    while stack:
        g, word = stack.pop()
        if g == top:
            out.append(word)
            if cap is not None and len(out) > cap:
                raise CapExceededError(
                    f"more than {cap} maximal chains; raise the chain cap"
                )
            continue
        # reversed so the stack pops label-ascending branches first
        for label, h in reversed(up_covers(g)):
            if member(h):
                stack.append((h, word + (label,)))
    out.sort(key=lambda w: tuple((s.kind, s.index) for s in w))
    return out


def maximal_chains(
    interval: Interval, cap: int = DEFAULT_CHAIN_CAP
) -> tuple[GeneratorWord, ...]:
    """Every maximal chain of the interval, in label-lexicographic order."""
    bottom = interval.bottom_element
    top = interval.top_element
    windows = {g.window for g in interval.elements}
    words = _chain_words(bottom, top, lambda h: h.window in windows, cap)
    return tuple(GeneratorWord(bottom, w) for w in words)


def chains_between(
    x: ColoredPermutation, top: ColoredPermutation
) -> list[tuple[GeneratorLabel, ...]]:
    """Chain words of [x, top] with membership decided by the pairwise
    criterion; meant for short intervals, no diagram required."""
    cache: dict[tuple, bool] = {}

    def member(h: ColoredPermutation) -> bool:
        key = h.window
        if key not in cache:
            cache[key] = leq(h, top)
        return cache[key]

    return _chain_words(x, top, member)


_ALPHA_IMPOSSIBLE = "two-atom interval does not exist for this pair"


def _alpha_letters(
    s: GeneratorLabel, s2: GeneratorLabel
) -> Optional[tuple[GeneratorLabel, ...]]:
    if s.kind == "a" and s2.kind == "b" and s2.index == s.index + 1:
        return None
    if s.kind == "b" and s2.kind == "a" and s.index == s2.index + 1:
        return None
    if s.kind == "a" and s2.kind == "b" and s2.index == s.index:
        return (s, b(s.index + 1))
    if s.kind == "a" and s2.kind == "a" and s2.index == s.index + 1:
        return (s, s2, b(s.index + 1), s)
    if s.kind == "a" and s2.kind == "a" and s2.index == s.index - 1:
        return (s, b(s.index), s2, s)
    return (s, s2)


def alpha(
    s: GeneratorLabel, s2: GeneratorLabel, g: ColoredPermutation
) -> Optional[GeneratorWord]:
    """Word of the chain through g*s in [g, g*s v g*s2]; None when no such
    interval exists (an a_i with its b_{i+1} can never both cover)."""
    if g.context.r != 2:
        raise ValueError("the fixed word table assumes two colors")
    if s == s2:
        raise ValueError("need two distinct generators")
    letters = _alpha_letters(s, s2)
    if letters is None:
        return None
    covers = {label for label, _ in up_covers(g)}
    if s not in covers or s2 not in covers:
        raise ValueError(f"{s} and {s2} must both cover {g}")
    return GeneratorWord(g, letters)


def _rewrite(word: GeneratorWord, p: int, length: int, repl, kind: str) -> Move:
    new = word.replaced(p, length, repl)
    assert new.is_valid() and new.end == word.end, "move broke the chain"
    return Move(p + 1, kind, new)


def tits_moves(word: GeneratorWord) -> tuple[Move, ...]:
    """All single-factor rewrites T1-T5 of a valid chain word (two colors)."""
    if word.base.context.r != 2:
        return generic_moves(word)
    L = word.letters
    moves = []
    for p in range(len(L) - 1):
        x, y = L[p], L[p + 1]
        if x.kind == "b" and y.kind == "b" and x.index != y.index:
            moves.append(_rewrite(word, p, 2, (y, x), "T1"))
        elif x.kind == "a" and y.kind == "b":
            if y.index not in (x.index, x.index + 1):
                moves.append(_rewrite(word, p, 2, (y, x), "T2"))
            elif y.index == x.index + 1:
                moves.append(_rewrite(word, p, 2, (b(x.index), x), "T3"))
        elif x.kind == "b" and y.kind == "a":
            if x.index not in (y.index, y.index + 1):
                moves.append(_rewrite(word, p, 2, (y, x), "T2"))
            elif x.index == y.index:
                moves.append(_rewrite(word, p, 2, (y, b(y.index + 1)), "T3"))
        elif x.kind == "a" and y.kind == "a" and abs(x.index - y.index) > 1:
            moves.append(_rewrite(word, p, 2, (y, x), "T4"))
    for p in range(len(L) - 3):
        w, x, y, z = L[p : p + 4]
        if (w.kind, x.kind, y.kind, z.kind) != ("a", "a", "b", "a"):
            if (w.kind, x.kind, y.kind, z.kind) == ("a", "b", "a", "a") and (
                x.index == w.index == z.index == y.index + 1
            ):
                i = y.index
                moves.append(
                    _rewrite(word, p, 4, (a(i), a(i + 1), b(i + 1), a(i)), "T5")
                )
            continue
        if x.index == w.index + 1 and y.index == x.index and z.index == w.index:
            i = w.index
            moves.append(
                _rewrite(word, p, 4, (a(i + 1), b(i + 1), a(i), a(i + 1)), "T5")
            )
    return tuple(moves)


def generic_moves(word: GeneratorWord) -> tuple[Move, ...]:
    """Two-atom reroutes for any number of colors: wherever the chain runs
    from some prefix element x through the join of x*s with another cover
    x*s', swap in an alternative maximal chain of that sub-interval."""
    elems = word.elements()
    top = elems[-1]
    found: dict[tuple[int, tuple[GeneratorLabel, ...]], Move] = {}
    for p, s in enumerate(word.letters):
        x = elems[p]
        first = elems[p + 1]
        for s2, y in up_covers(x):
            if s2 == s or not leq(y, top):
                continue
            j = join(first, y)
            d = j.finv - x.finv
            if p + d > len(word.letters) or elems[p + d] != j:
                continue
            segment = word.letters[p : p + d]
            for alt in chains_between(x, j):
                if alt == segment:
                    continue
                key = (p, alt)
                if key not in found:
                    found[key] = _rewrite(word, p, d, alt, "G")
    return tuple(found[k] for k in sorted(found, key=lambda k: (k[0], str(k[1]))))


@dataclass
class ChainGraph:
    """Graph on the maximal chains of one interval, edges given by moves."""

    interval: Interval
    words: tuple[GeneratorWord, ...]
    edges: tuple[tuple[int, int, str], ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.words]
        for i, j, _ in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(row)) for row in adj)

    def move_kinds(self) -> tuple[str, ...]:
        return tuple(sorted({kind for _, _, kind in self.edges}))


def gamma_graph(interval: Interval, cap: int = DEFAULT_CHAIN_CAP) -> ChainGraph:
    """Build the chain graph; T1-T5 moves for two colors, generic otherwise."""
    words = maximal_chains(interval, cap=cap)
    index = {w.letters: i for i, w in enumerate(words)}
    move_fn = tits_moves if interval.context.r == 2 else generic_moves
    edges: dict[tuple[int, int], str] = {}
    for i, w in enumerate(words):
        for move in move_fn(w):
            j = index.get(move.word.letters)
            if j is None:
                raise AssertionError("move produced a chain outside the interval")
            key = (min(i, j), max(i, j))
            edges.setdefault(key, move.kind)
    return ChainGraph(
        interval,
        words,
        tuple((i, j, edges[(i, j)]) for i, j in sorted(edges)),
    )


def is_connected(graph: ChainGraph) -> bool:
    if len(graph.words) <= 1:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in graph.adjacency[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(graph.words)


@dataclass(frozen=True)
class DiameterResult:
    value: int
    exact: bool

    def __str__(self) -> str:
        return f"{self.value} ({'exact' if self.exact else 'lower bound'})"


def _csr(graph: ChainGraph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(len(graph.words) + 1, dtype=np.int32)
    for i, row in enumerate(graph.adjacency):
        indptr[i + 1] = indptr[i] + len(row)
    indices = np.fromiter(
        (j for row in graph.adjacency for j in row), dtype=np.int32, count=indptr[-1]
    )
    return indptr, indices


def _bfs_farthest(graph: ChainGraph, src: int) -> tuple[int, int]:
    dist = {src: 0}
    frontier = [src]
    far, fard = src, 0
    while frontier:
        nxt = []
        for v in frontier:
            for w in graph.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    if dist[w] > fard:
                        far, fard = w, dist[w]
                    nxt.append(w)
        frontier = nxt
    return far, fard


def diameter(
    graph: ChainGraph, exact_limit: int = EXACT_DIAMETER_LIMIT
) -> DiameterResult:
    """Exact diameter by all-sources BFS up to `exact_limit` vertices; a
    double-sweep lower bound beyond that."""
    if not is_connected(graph):
        raise ValueError("chain graph is disconnected")
    if len(graph.words) == 1:
        return DiameterResult(0, True)
    if len(graph.words) <= exact_limit:
        indptr, indices = _csr(graph)
        ecc = bfs_eccentricities(indptr, indices)
        return DiameterResult(int(max(ecc)), True)
    far, _ = _bfs_farthest(graph, 0)
    _, d = _bfs_farthest(graph, far)
    return DiameterResult(d, False)


def to_dot(graph: ChainGraph) -> str:
    """DOT rendering with move kinds as edge labels."""
    lines = ["graph chains {"]
    for i, w in enumerate(graph.words):
        lines.append(f'  {i} [label="{w}"];')
    for i, j, kind in graph.edges:
        lines.append(f'  {i} -- {j} [label="{kind}"];')
    lines.append("}")
    return "\n".join(lines)
