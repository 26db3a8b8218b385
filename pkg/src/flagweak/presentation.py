"""Numeric checks of the defining relations and generated-subgroup orders.

The relation families are instantiated over all admissible indices and
evaluated in the concrete group; reports carry instance counts and any
failing witnesses. Completeness of the presentations is not re-proved here;
order equality of the generated subgroup is the checkable counterpart.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    ColoredPermutation,
    GeneratorLabel,
    GroupContext,
    a,
    b,
    compose,
    generator,
    identity,
)
from .errors import CapExceededError

DEFAULT_CLOSURE_CAP = 10**6

Word = Sequence[GeneratorLabel]


def evaluate_word(ctx: GroupContext, word: Word) -> ColoredPermutation:
    acc = identity(ctx)
    for label in word:
        acc = compose(acc, generator(ctx, label))
    return acc


@dataclass(frozen=True)
class RelationCheck:
    """One relation family: how many instances ran and which failed."""

    relation: str
    checked: int
    failures: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class RelationReport:
    r: int
    n: int
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def total_checked(self) -> int:
        return sum(c.checked for c in self.checks)


def _run_family(
    ctx: GroupContext,
    relation: str,
    instances: Iterable[tuple[tuple[int, ...], Word, Word]],
) -> RelationCheck:
    checked = 0
    failures = []
    for indices, lhs, rhs in instances:
        checked += 1
        if evaluate_word(ctx, lhs) != evaluate_word(ctx, rhs):
            failures.append((relation, indices))
    return RelationCheck(relation, checked, tuple(failures))


def verify_relations_B(ctx: GroupContext) -> RelationReport:
    """The full generating set: color order, commutations, braid and mixed moves."""
    n, r = ctx.n, ctx.r
    b1_name = "B1" if r == 2 else "B1_r"
    families = [
        (b1_name, [((i,), (b(i),) * r, ()) for i in range(1, n + 1)]),
        (
            "B2",
            [
                ((i, j), (b(i), b(j)), (b(j), b(i)))
                for i, j in itertools.combinations(range(1, n + 1), 2)
            ],
        ),
        (
            "B3",
            [((i,), (a(i), a(i)), (b(i), b(i + 1))) for i in range(1, n)],
        ),
        (
            "B4",
            [
                ((i, j), (a(i), a(j)), (a(j), a(i)))
                for i, j in itertools.combinations(range(1, n), 2)
                if j - i > 1
            ],
        ),
        (
            "B5",
            [
                ((i,), (a(i), a(i + 1), a(i)), (a(i + 1), a(i), a(i + 1)))
                for i in range(1, n - 1)
            ],
        ),
        (
            "B6",
            [
                ((i, j), (a(i), b(j)), (b(j), a(i)))
                for i in range(1, n)
                for j in range(1, n + 1)
                if j not in (i, i + 1)
            ],
        ),
        (
            "B7",
            [((i,), (a(i), b(i)), (b(i + 1), a(i))) for i in range(1, n)],
        ),
        (
            "B8",
            [((i,), (a(i), b(i + 1)), (b(i), a(i))) for i in range(1, n)],
        ),
    ]
    return RelationReport(
        r, n, tuple(_run_family(ctx, name, inst) for name, inst in families)
    )


def verify_relations_A(n: int) -> RelationReport:
    """The colored-swap generators alone (two colors): fourth powers,
    commutations, braids, and cubes of adjacent products."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    ctx = GroupContext(2, n)
    families = [
        ("A1", [((i,), (a(i),) * 4, ()) for i in range(1, n)]),
        (
            "A2",
            [
                ((i, j), (a(i), a(j)), (a(j), a(i)))
                for i, j in itertools.combinations(range(1, n), 2)
                if j - i > 1
            ],
        ),
        (
            "A3",
            [
                ((i,), (a(i), a(i + 1), a(i)), (a(i + 1), a(i), a(i + 1)))
                for i in range(1, n - 1)
            ],
        ),
        ("A4", [((i,), (a(i), a(i + 1)) * 3, ()) for i in range(1, n - 1)]),
    ]
    return RelationReport(
        2, n, tuple(_run_family(ctx, name, inst) for name, inst in families)
    )


def _derivation_words(i: int) -> list[Word]:
    # the rewriting chain that turns (a_i a_{i+1})^3 into the empty word
    ai, aj = a(i), a(i + 1)
    bi, bj, bk = b(i), b(i + 1), b(i + 2)
    return [
        (ai, aj) * 3,
        (ai, aj, ai, aj, ai, aj),
        (ai, aj, ai, ai, aj, ai),
        (ai, aj, bi, bj, aj, ai),
        (bj, ai, aj, aj, ai, bk),
        (bj, ai, bj, bk, ai, bk),
        (bj, bi, ai, ai, bk, bk),
        (bj, bi, bi, bj, bk, bk),
        (),
    ]


def verify_remark_derivation(n: int) -> bool:
    """Replay, step by step, the rewriting chain that derives the cube
    relation of adjacent colored swaps from the mixed relations."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    ctx = GroupContext(2, n)
    for i in range(1, n - 1):
        values = [evaluate_word(ctx, w) for w in _derivation_words(i)]
        if any(v != values[0] for v in values):
            return False
        if values[0] != identity(ctx):
            return False
    return True


def closure_order(
    ctx: GroupContext,
    gens: Iterable[ColoredPermutation],
    cap: int = DEFAULT_CLOSURE_CAP,
) -> int:
    """Order of the subgroup generated by `gens`, by breadth-first closure."""
    gens = list(gens)
    start = identity(ctx)
    seen = {start.window}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y.window not in seen:
                    seen.add(y.window)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceededError(
                            f"closure exceeded cap {cap} elements"
                        )
        frontier = nxt
    return len(seen)


def expected_full_order(ctx: GroupContext) -> int:
    return ctx.r**ctx.n * math.factorial(ctx.n)


def expected_alternating_order(n: int) -> int:
    return 2 ** (n - 1) * math.factorial(n)
