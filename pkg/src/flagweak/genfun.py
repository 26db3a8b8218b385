"""Exact polynomial arithmetic in q and t, and the distribution identities.

All sums over groups and over S_n are brute force; the closed products and
substitution identities they are compared against are expanded
denominator-free, so every comparison is exact integer polynomial equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import (
    GroupContext,
    enumerate_group,
    perm_descent_set,
    perm_inversion_count,
)


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial with exact integer coefficients."""

    var: str
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient")

    @staticmethod
    def from_coeffs(var: str, coeffs) -> "UniPoly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return UniPoly(var, tuple(cs))

    @staticmethod
    def zero(var: str) -> "UniPoly":
        return UniPoly(var, ())

    @staticmethod
    def one(var: str) -> "UniPoly":
        return UniPoly(var, (1,))

    @staticmethod
    def monomial(var: str, degree: int, coeff: int = 1) -> "UniPoly":
        return UniPoly.from_coeffs(var, [0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check_var(self, other: "UniPoly") -> None:
        if self.var != other.var:
            raise ValueError(f"mixed variables {self.var!r} and {other.var!r}")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_var(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly.from_coeffs(
            self.var, [self.coeff(k) + other.coeff(k) for k in range(size)]
        )

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._check_var(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero(self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return UniPoly.from_coeffs(self.var, out)

    def scale(self, k: int) -> "UniPoly":
        return UniPoly.from_coeffs(self.var, [k * c for c in self.coeffs])

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        acc = UniPoly.one(self.var)
        for _ in range(e):
            acc = acc * self
        return acc

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                term = str(abs(c))
            else:
                base = self.var if d == 1 else f"{self.var}^{d}"
                term = base if abs(c) == 1 else f"{abs(c)}*{base}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        out = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


@dataclass(frozen=True)
class BiPoly:
    """Bivariate polynomial in q and t, sparse over (deg_q, deg_t)."""

    terms: tuple[tuple[tuple[int, int], int], ...]

    @staticmethod
    def from_dict(d: dict[tuple[int, int], int]) -> "BiPoly":
        return BiPoly(tuple(sorted((k, c) for k, c in d.items() if c != 0)))

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly(())

    @staticmethod
    def one() -> "BiPoly":
        return BiPoly((((0, 0), 1),))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = self.as_dict()
        for k, c in other.terms:
            out[k] = out.get(k, 0) + c
        return BiPoly.from_dict(out)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict[tuple[int, int], int] = {}
        for (dq1, dt1), c1 in self.terms:
            for (dq2, dt2), c2 in other.terms:
                k = (dq1 + dq2, dt1 + dt2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly.from_dict(out)

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError("negative exponent")
        acc = BiPoly.one()
        for _ in range(e):
            acc = acc * self
        return acc

    def substitute_q(self, q: int) -> UniPoly:
        """Evaluate q, leaving a polynomial in t."""
        out: dict[int, int] = {}
        for (dq, dt), c in self.terms:
            out[dt] = out.get(dt, 0) + c * q**dq
        size = max(out) + 1 if out else 0
        return UniPoly.from_coeffs("t", [out.get(k, 0) for k in range(size)])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (dq, dt), c in self.terms:
            factors = []
            if dq:
                factors.append("q" if dq == 1 else f"q^{dq}")
            if dt:
                factors.append("t" if dt == 1 else f"t^{dt}")
            if not factors or abs(c) != 1:
                factors.insert(0, str(abs(c)))
            term = "*".join(factors)
            parts.append(("-" if c < 0 else "+", term))
        first_sign, first_term = parts[0]
        out = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def q_int(m: int) -> UniPoly:
    """The q-integer [m]_q = 1 + q + ... + q^(m-1)."""
    if m < 1:
        raise ValueError(f"q-integer needs m >= 1, got {m}")
    return UniPoly("q", (1,) * m)


def prod_q_int(r: int, n: int) -> UniPoly:
    """[r]_q [2r]_q ... [nr]_q, expanded."""
    acc = UniPoly.one("q")
    for i in range(1, n + 1):
        acc = acc * q_int(r * i)
    return acc


def finv_genfun(ctx: GroupContext) -> UniPoly:
    """Sum of q^finv over the whole group, by enumeration."""
    counts = [0] * (ctx.r * math.comb(ctx.n, 2) + (ctx.r - 1) * ctx.n + 1)
    for g in enumerate_group(ctx):
        counts[g.finv] += 1
    return UniPoly.from_coeffs("q", counts)


def eulerian(n: int) -> UniPoly:
    """Descent-number distribution over S_n."""
    counts = [0] * max(n, 1)
    for u in itertools.permutations(range(1, n + 1)):
        counts[len(perm_descent_set(u))] += 1
    return UniPoly.from_coeffs("t", counts)


def sn_qt(n: int) -> BiPoly:
    """Joint (inversions, descents) distribution over S_n."""
    out: dict[tuple[int, int], int] = {}
    for u in itertools.permutations(range(1, n + 1)):
        k = (perm_inversion_count(u), len(perm_descent_set(u)))
        out[k] = out.get(k, 0) + 1
    return BiPoly.from_dict(out)


def wdes_genfun(ctx: GroupContext) -> UniPoly:
    """Sum of t^wdes over the whole group, wdes counted from down-covers."""
    from .order import wdes

    counts = [0] * (ctx.n + 1)
    for g in enumerate_group(ctx):
        counts[wdes(g)] += 1
    return UniPoly.from_coeffs("t", counts)


def wdes_rhs(r: int, n: int) -> UniPoly:
    """(1+(r-1)t)^n E_n(rt / (1+(r-1)t)), cleared of denominators."""
    base = UniPoly.from_coeffs("t", [1, r - 1])
    rt = UniPoly.from_coeffs("t", [0, r])
    acc = UniPoly.zero("t")
    for u in itertools.permutations(range(1, n + 1)):
        d = len(perm_descent_set(u))
        acc = acc + rt**d * base ** (n - d)
    return acc


def check_wdes_identity(ctx: GroupContext) -> bool:
    return wdes_genfun(ctx) == wdes_rhs(ctx.r, ctx.n)


def bivariate_genfun(ctx: GroupContext) -> BiPoly:
    """Joint (finv, wdes) distribution over the whole group."""
    from .order import wdes

    out: dict[tuple[int, int], int] = {}
    for g in enumerate_group(ctx):
        k = (g.finv, wdes(g))
        out[k] = out.get(k, 0) + 1
    return BiPoly.from_dict(out)


def _bi(poly_q: UniPoly, dt: int) -> BiPoly:
    return BiPoly.from_dict({(dq, dt): c for dq, c in enumerate(poly_q.coeffs)})


def bivariate_rhs(r: int, n: int) -> BiPoly:
    """(1+[r-1]_q qt)^n S_n(q^r, [r]_q t / (1+[r-1]_q qt)), cleared of denominators."""
    qr1 = q_int(r - 1) if r > 1 else UniPoly.zero("q")
    # 1 + [r-1]_q q t  and  [r]_q t  as bivariate factors
    base = BiPoly.one() + _bi(UniPoly.monomial("q", 1) * qr1, 1)
    step = _bi(q_int(r), 1)
    acc = BiPoly.zero()
    for u in itertools.permutations(range(1, n + 1)):
        d = len(perm_descent_set(u))
        inv = perm_inversion_count(u)
        term = _bi(UniPoly.monomial("q", r * inv), 0) * step**d * base ** (n - d)
        acc = acc + term
    return acc


def check_bivariate_identity(ctx: GroupContext) -> bool:
    return bivariate_genfun(ctx) == bivariate_rhs(ctx.r, ctx.n)
