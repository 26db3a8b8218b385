"""Colored permutations: the wreath product of a cyclic color group with S_n.

An element is a window of n pairs (value, color): position i holds
(|g(i)|, c_i), with colors attached before the permutation is applied.
For two colors the window is ordinary signed one-line notation, entry i
reading as -value when its color is 1.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .errors import CapExceededError, ContextMismatchError, ParseError

DEFAULT_ELEMENT_CAP = 10**7


@dataclass(frozen=True)
class GroupContext:
    """Number of colors r and letters n; group order r^n * n! is capped."""

    r: int
    n: int
    cap: int = field(default=DEFAULT_ELEMENT_CAP, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"number of colors must be positive, got {self.r}")
        if self.n < 1:
            raise ValueError(f"number of letters must be positive, got {self.n}")
        if self.order > self.cap:
            raise CapExceededError(
                f"group order r^n*n! = {self.order} exceeds cap {self.cap}"
            )

    @property
    def order(self) -> int:
        return self.r**self.n * math.factorial(self.n)


@dataclass(frozen=True, order=True)
class GeneratorLabel:
    """A label a_i (colored adjacent swap) or b_i (color bump at position i)."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("a", "b"):
            raise ValueError(f"generator kind must be 'a' or 'b', got {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"generator index must be positive, got {self.index}")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def a(i: int) -> GeneratorLabel:
    return GeneratorLabel("a", i)


def b(i: int) -> GeneratorLabel:
    return GeneratorLabel("b", i)


def parse_label(text: str) -> GeneratorLabel:
    m = re.fullmatch(r"([ab])(\d+)", text.strip())
    if m is None:
        raise ParseError(f"bad generator label {text!r}")
    return GeneratorLabel(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class ColoredPermutation:
    """A group element, stored as its window of (value, color) pairs."""

    context: GroupContext
    window: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n, r = self.context.n, self.context.r
        if len(self.window) != n:
            raise ValueError(f"window has {len(self.window)} entries, expected {n}")
        if sorted(v for v, _ in self.window) != list(range(1, n + 1)):
            raise ValueError("window values must be a permutation of 1..n")
        for v, c in self.window:
            if not 0 <= c < r:
                raise ValueError(f"color {c} of value {v} out of range 0..{r - 1}")

    @property
    def abs_seq(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.window)

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.window)

    @cached_property
    def finv(self) -> int:
        """Flag inversion number: r * inv(values) + sum of colors."""
        seq = self.abs_seq
        inv = sum(
            1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j]
        )
        return self.context.r * inv + sum(self.colors)

    @cached_property
    def _pos_of_value(self) -> tuple[int, ...]:
        pos = [0] * self.context.n
        for i, (v, _) in enumerate(self.window):
            pos[v - 1] = i
        return tuple(pos)

    def position_of_value(self, value: int) -> int:
        """0-based window position holding `value`."""
        return self._pos_of_value[value - 1]

    def color_of_value(self, value: int) -> int:
        """Color attached to the entry whose value is `value`."""
        return self.window[self._pos_of_value[value - 1]][1]

    @property
    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.abs_seq, self.colors)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"<ColoredPermutation r={self.context.r} {format_element(self)}>"


@dataclass(frozen=True)
class PermStats:
    """Inversion and color statistics of one element."""

    inv_set: frozenset[tuple[int, int]]
    inv: int
    descent_set: frozenset[int]
    color_sum: int
    finv: int


def _same_context(g: ColoredPermutation, h: ColoredPermutation) -> None:
    if g.context != h.context:
        raise ContextMismatchError(
            f"elements of G({g.context.r},{g.context.n}) and "
            f"G({h.context.r},{h.context.n}) cannot be combined"
        )


def identity(ctx: GroupContext) -> ColoredPermutation:
    return ColoredPermutation(ctx, tuple((i, 0) for i in range(1, ctx.n + 1)))


def compose(g: ColoredPermutation, h: ColoredPermutation) -> ColoredPermutation:
    """Group product g*h; for two colors this is composition of signed maps."""
    _same_context(g, h)
    r = g.context.r
    gw = g.window
    # position i of the product holds (|g(|h(i)|)|, c_{|h(i)|}(g) + c_i(h))
    out = tuple(
        (gw[tv - 1][0], (gw[tv - 1][1] + dc) % r) for tv, dc in h.window
    )
    return ColoredPermutation(g.context, out)


def inverse(g: ColoredPermutation) -> ColoredPermutation:
    """Group inverse: values invert, each color negates and moves to its value."""
    r, n = g.context.r, g.context.n
    out: list[tuple[int, int]] = [(0, 0)] * n
    for i, (v, c) in enumerate(g.window):
        out[v - 1] = (i + 1, (-c) % r)
    return ColoredPermutation(g.context, tuple(out))


def stats(g: ColoredPermutation) -> PermStats:
    seq = g.abs_seq
    n = g.context.n
    inv_set = frozenset(
        (i + 1, j + 1)
        for i, j in itertools.combinations(range(n), 2)
        if seq[i] > seq[j]
    )
    descent_set = frozenset(i + 1 for i in range(n - 1) if seq[i] > seq[i + 1])
    color_sum = sum(g.colors)
    return PermStats(
        inv_set=inv_set,
        inv=len(inv_set),
        descent_set=descent_set,
        color_sum=color_sum,
        finv=g.context.r * len(inv_set) + color_sum,
    )


def generator(ctx: GroupContext, label: GeneratorLabel) -> ColoredPermutation:
    """The element b_i (color 1 at i) or a_i (swap i, i+1 and color the new entry i)."""
    n = ctx.n
    one = 1 % ctx.r
    w = [(i, 0) for i in range(1, n + 1)]
    if label.kind == "b":
        if not 1 <= label.index <= n:
            raise ValueError(f"b index {label.index} out of range 1..{n}")
        w[label.index - 1] = (label.index, one)
    else:
        if not 1 <= label.index <= n - 1:
            raise ValueError(f"a index {label.index} out of range 1..{n - 1}")
        i = label.index
        w[i - 1] = (i + 1, one)
        w[i] = (i, 0)
    return ColoredPermutation(ctx, tuple(w))


def generators(ctx: GroupContext) -> tuple[tuple[GeneratorLabel, ColoredPermutation], ...]:
    """The full generating set a_1..a_{n-1}, b_1..b_n in label order."""
    labels = [a(i) for i in range(1, ctx.n)] + [b(i) for i in range(1, ctx.n + 1)]
    return tuple((lab, generator(ctx, lab)) for lab in labels)


def right_multiply(g: ColoredPermutation, label: GeneratorLabel) -> ColoredPermutation:
    """g * generator(label), computed in place of a full product."""
    r, n = g.context.r, g.context.n
    w = list(g.window)
    i = label.index - 1
    if label.kind == "b":
        if not 1 <= label.index <= n:
            raise ValueError(f"b index {label.index} out of range 1..{n}")
        v, c = w[i]
        w[i] = (v, (c + 1) % r)
    else:
        if not 1 <= label.index <= n - 1:
            raise ValueError(f"a index {label.index} out of range 1..{n - 1}")
        (v1, c1), (v2, c2) = w[i], w[i + 1]
        w[i] = (v2, (c2 + 1) % r)
        w[i + 1] = (v1, c1)
    return ColoredPermutation(g.context, tuple(w))


def mu0(ctx: GroupContext) -> ColoredPermutation:
    """The top element: values reversed, every color maximal."""
    return ColoredPermutation(
        ctx, tuple((ctx.n + 1 - i, ctx.r - 1) for i in range(1, ctx.n + 1))
    )


def bar(g: ColoredPermutation) -> ColoredPermutation:
    """Negate every color (mod r); the identity map when r = 2."""
    r = g.context.r
    return ColoredPermutation(g.context, tuple((v, (-c) % r) for v, c in g.window))


def dual(g: ColoredPermutation) -> ColoredPermutation:
    """Order-reversing bijection bar(g) * mu0; finv(dual(g)) = finv(mu0) - finv(g)."""
    return compose(bar(g), mu0(g.context))


def enumerate_group(ctx: GroupContext) -> Iterator[ColoredPermutation]:
    """All elements, ordered lexicographically by (value sequence, color sequence)."""
    for perm in itertools.permutations(range(1, ctx.n + 1)):
        for cols in itertools.product(range(ctx.r), repeat=ctx.n):
            yield ColoredPermutation(ctx, tuple(zip(perm, cols)))


# --- element string grammar ---------------------------------------------

_CARET_ENTRY = re.compile(r"(\d+)\^(\d+)")
_SIGNED_ENTRY = re.compile(r"(-?)(\d+)")
_MACRON = "̄"


def format_element(g: ColoredPermutation, signed: bool = False) -> str:
    """Canonical string `v^c,...`; with signed=True the `-v,...` form (r = 2 only)."""
    if signed:
        if g.context.r != 2:
            raise ValueError("signed form requires exactly two colors")
        return ",".join(("-" if c else "") + str(v) for v, c in g.window)
    return ",".join(f"{v}^{c}" for v, c in g.window)


def _parse_entries(text: str) -> list[tuple[int, int]]:
    entries = []
    for part in text.split(","):
        part = part.strip()
        m = _CARET_ENTRY.fullmatch(part)
        if m is not None:
            entries.append((int(m.group(1)), int(m.group(2))))
            continue
        m = _SIGNED_ENTRY.fullmatch(part)
        if m is None:
            raise ParseError(f"bad window entry {part!r}")
        entries.append((int(m.group(2)), 1 if m.group(1) else 0))
    return entries


def _parse_compact(text: str) -> list[tuple[int, int]]:
    # digit runs without separators; `-` before or a combining macron after
    # a digit marks color 1
    entries: list[tuple[int, int]] = []
    neg = False
    for ch in text:
        if ch == "-":
            if neg:
                raise ParseError(f"dangling sign in {text!r}")
            neg = True
        elif ch == _MACRON:
            if not entries:
                raise ParseError(f"dangling macron in {text!r}")
            v, _ = entries[-1]
            entries[-1] = (v, 1)
        elif ch.isdigit():
            entries.append((int(ch), 1 if neg else 0))
            neg = False
        else:
            raise ParseError(f"bad character {ch!r} in compact element {text!r}")
    if neg:
        raise ParseError(f"dangling sign in {text!r}")
    return entries


def parse_element(ctx: GroupContext, text: str) -> ColoredPermutation:
    """Parse `v^c,...`, the signed form `-2,1,...`, or compact digits like `21̄`."""
    s = text.strip()
    if not s:
        raise ParseError("empty element string")
    if "," in s or "^" in s:
        entries = _parse_entries(s)
    else:
        entries = _parse_compact(s)
    try:
        return ColoredPermutation(ctx, tuple(entries))
    except ValueError as exc:
        raise ParseError(f"{text!r}: {exc}") from exc


# --- plain S_n helpers ----------------------------------------------------

def perm_inverse(u: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(u)
    for i, v in enumerate(u):
        out[v - 1] = i + 1
    return tuple(out)


def perm_compose(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """(u o v)(i) = u(v(i))."""
    return tuple(u[x - 1] for x in v)


def perm_inversion_count(u: tuple[int, ...]) -> int:
    return sum(
        1 for i, j in itertools.combinations(range(len(u)), 2) if u[i] > u[j]
    )


def perm_descent_set(u: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(u) - 1) if u[i] > u[i + 1])
