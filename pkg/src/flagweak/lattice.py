"""Meets, joins, the Möbius function, and interval homotopy tags.

Closed forms: the value part of a meet is the weak-order meet of the value
parts in S_n; the color a value carries is the minimum color it carries in
the arguments, skipping arguments where the value is absorbed by a newly
inverted pair (empty minimum reads r-1). Joins use the maximum with empty
maximum 0. Each closed form has a reachability-based oracle counterpart.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .core import (
    ColoredPermutation,
    GroupContext,
    identity,
    mu0,
    perm_compose,
)
from .errors import ContextMismatchError, NotComparableError
from .order import (
    HasseDiagram,
    Interval,
    _bit_indices,
    leq,
    leq_oracle,
    m_between,
    up_covers,
    value_inversions,
)


# --- weak order on plain permutations --------------------------------------

def sn_weak_leq(u: tuple[int, ...], v: tuple[int, ...]) -> bool:
    return value_inversions(u) <= value_inversions(v)


def _sn_downset(u: tuple[int, ...]) -> set[tuple[int, ...]]:
    seen = {u}
    frontier = [u]
    while frontier:
        w = frontier.pop()
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                x = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                if x not in seen:
                    seen.add(x)
                    frontier.append(x)
    return seen


@lru_cache(maxsize=None)
def sn_weak_meet(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Greatest lower bound in the right weak order on S_n, by brute force."""
    target = value_inversions(u) & value_inversions(v)
    candidates = [w for w in _sn_downset(u) if value_inversions(w) <= target]
    best_len = max(len(value_inversions(w)) for w in candidates)
    best = [w for w in candidates if len(value_inversions(w)) == best_len]
    if len(best) != 1:
        raise AssertionError(f"weak-order meet of {u} and {v} is not unique")
    return best[0]


@lru_cache(maxsize=None)
def sn_weak_join(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Least upper bound, via the order-reversing map w -> w * (n ... 1)."""
    w0 = tuple(range(len(u), 0, -1))
    rev = sn_weak_meet(perm_compose(u, w0), perm_compose(v, w0))
    return perm_compose(rev, w0)


# --- meet and join in the flag weak order -----------------------------------

def _check_family(ctx: GroupContext, elems: Iterable[ColoredPermutation]) -> None:
    for g in elems:
        if g.context != ctx:
            raise ContextMismatchError("mixed groups in meet/join")


def meet_set(
    ctx: GroupContext, elems: Iterable[ColoredPermutation]
) -> ColoredPermutation:
    """Greatest lower bound of a family; the empty family meets to the top."""
    elems = list(elems)
    _check_family(ctx, elems)
    if not elems:
        return mu0(ctx)
    tau = elems[0].abs_seq
    for g in elems[1:]:
        tau = sn_weak_meet(tau, g.abs_seq)
    color_at_value = []
    for v in range(1, ctx.n + 1):
        options = [
            g.color_of_value(v) for g in elems if v not in m_between(tau, g.abs_seq)
        ]
        color_at_value.append(min(options) if options else ctx.r - 1)
    window = tuple((tau[i], color_at_value[tau[i] - 1]) for i in range(ctx.n))
    return ColoredPermutation(ctx, window)


def join_set(
    ctx: GroupContext, elems: Iterable[ColoredPermutation]
) -> ColoredPermutation:
    """Least upper bound of a family; the empty family joins to the identity."""
    elems = list(elems)
    _check_family(ctx, elems)
    if not elems:
        return identity(ctx)
    tau = elems[0].abs_seq
    for g in elems[1:]:
        tau = sn_weak_join(tau, g.abs_seq)
    color_at_value = []
    for v in range(1, ctx.n + 1):
        options = [
            g.color_of_value(v) for g in elems if v not in m_between(g.abs_seq, tau)
        ]
        color_at_value.append(max(options) if options else 0)
    window = tuple((tau[i], color_at_value[tau[i] - 1]) for i in range(ctx.n))
    return ColoredPermutation(ctx, window)


def meet(g: ColoredPermutation, h: ColoredPermutation) -> ColoredPermutation:
    return meet_set(g.context, (g, h))


def join(g: ColoredPermutation, h: ColoredPermutation) -> ColoredPermutation:
    return join_set(g.context, (g, h))


# --- oracles over an explicit diagram ---------------------------------------

def _unique_extreme(
    hasse: HasseDiagram, candidate_bits: int, want_max: bool
) -> Optional[ColoredPermutation]:
    layers = reversed(hasse.layers) if want_max else hasse.layers
    for layer in layers:
        hits = [i for i in layer if candidate_bits >> i & 1]
        if not hits:
            continue
        if len(hits) != 1:
            return None
        m = hits[0]
        cover = hasse.downset_bits[m] if want_max else hasse.upset_bits[m]
        if candidate_bits & ~cover:
            return None
        return hasse.elements[m]
    return None


def meet_oracle(
    g: ColoredPermutation, h: ColoredPermutation, hasse: HasseDiagram
) -> Optional[ColoredPermutation]:
    """Unique maximum of the common lower bounds, or None if there is none."""
    bits = hasse.downset_bits[hasse.id_of(g)] & hasse.downset_bits[hasse.id_of(h)]
    return _unique_extreme(hasse, bits, want_max=True)


def join_oracle(
    g: ColoredPermutation, h: ColoredPermutation, hasse: HasseDiagram
) -> Optional[ColoredPermutation]:
    """Unique minimum of the common upper bounds, or None if there is none."""
    bits = hasse.upset_bits[hasse.id_of(g)] & hasse.upset_bits[hasse.id_of(h)]
    return _unique_extreme(hasse, bits, want_max=False)


# --- atoms, Möbius function, homotopy type ----------------------------------

def atoms(interval: Interval) -> tuple[ColoredPermutation, ...]:
    """Elements of the interval covering its bottom."""
    if len(interval.layers) < 2:
        return ()
    return tuple(interval.elements[i] for i in interval.layers[1])


def _atoms_below(
    g: ColoredPermutation, h: ColoredPermutation
) -> list[ColoredPermutation]:
    # atoms of [g, mu0] are exactly the covers of g
    return [x for _, x in up_covers(g) if leq(x, h)]


def mobius(g: ColoredPermutation, h: ColoredPermutation) -> int:
    """(-1)^k when h is the join of k atoms above g, else 0."""
    if not leq(g, h):
        raise NotComparableError(f"{g} does not precede {h}")
    below = _atoms_below(g, h)
    target = join_set(g.context, below) if below else g
    return (-1) ** len(below) if target == h else 0


def mobius_oracle(
    g: ColoredPermutation, h: ColoredPermutation, hasse: HasseDiagram
) -> int:
    """Möbius value from the standard recursion over the interval [g, h]."""
    if not leq_oracle(g, h, hasse):
        raise NotComparableError(f"{g} does not precede {h}")
    return mobius_oracle_all(hasse, hasse.id_of(g))[hasse.id_of(h)]


def mobius_oracle_all(hasse: HasseDiagram, gid: int) -> dict[int, int]:
    """mu(g, x) for every x above g, by one rank-ascending sweep."""
    member_bits = hasse.upset_bits[gid]
    mu: dict[int, int] = {}
    for layer in hasse.layers:
        for x in layer:
            if not member_bits >> x & 1:
                continue
            if x == gid:
                mu[x] = 1
                continue
            below = hasse.downset_bits[x] & member_bits & ~(1 << x)
            mu[x] = -sum(mu[y] for y in _bit_indices(below))
    return mu


@dataclass(frozen=True)
class HomotopyClass:
    """Homotopy tag of an open interval: a sphere, contractible, or too short."""

    kind: str
    sphere_dim: Optional[int] = None

    SPHERE = "sphere"
    CONTRACTIBLE = "contractible"
    NOT_APPLICABLE = "not_applicable"

    @staticmethod
    def sphere(dim: int) -> "HomotopyClass":
        return HomotopyClass(HomotopyClass.SPHERE, dim)

    @staticmethod
    def contractible() -> "HomotopyClass":
        return HomotopyClass(HomotopyClass.CONTRACTIBLE)

    @staticmethod
    def not_applicable() -> "HomotopyClass":
        return HomotopyClass(HomotopyClass.NOT_APPLICABLE)

    def __str__(self) -> str:
        if self.kind == self.SPHERE:
            return f"sphere({self.sphere_dim})"
        return "contractible" if self.kind == self.CONTRACTIBLE else "na"


def classify_homotopy(
    g: ColoredPermutation, h: ColoredPermutation
) -> HomotopyClass:
    """Sphere of dimension k-2 when h is the join of k atoms above g."""
    if not leq(g, h):
        raise NotComparableError(f"{g} does not precede {h}")
    if h.finv - g.finv < 2:
        return HomotopyClass.not_applicable()
    below = _atoms_below(g, h)
    if below and join_set(g.context, below) == h:
        return HomotopyClass.sphere(len(below) - 2)
    return HomotopyClass.contractible()


def mobius_rows(
    hasse: HasseDiagram, signed: bool = False
) -> list[tuple[str, str, int, str]]:
    """CSV-ready (from, to, mobius, class) rows over all comparable pairs."""
    from .core import format_element

    rows = []
    for g in hasse.elements:
        above = hasse.upset_bits[hasse.id_of(g)]
        for i in _bit_indices(above):
            h = hasse.elements[i]
            rows.append(
                (
                    format_element(g, signed),
                    format_element(h, signed),
                    mobius(g, h),
                    str(classify_homotopy(g, h)),
                )
            )
    return rows
