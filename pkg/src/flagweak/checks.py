"""Exhaustive cross-validation suites shared by the CLI and the test bench.

Every suite pits a closed form against an independent brute-force oracle
over a whole group at the given size and reports counts plus a minimal
witness on the first disagreement.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import genfun, lattice, presentation
from ._kernel import leq_matrix, pack_order_keys
from .chains import (
    DEFAULT_CHAIN_CAP,
    alpha,
    chains_between,
    gamma_graph,
    generic_moves,
    is_connected,
    maximal_chains,
    tits_moves,
)
from .core import GroupContext, dual, enumerate_group, generators, mu0
from .order import _bit_indices, build_hasse, build_interval, up_covers


@dataclass(frozen=True)
class CheckResult:
    suite: str
    r: int
    n: int
    ok: bool
    detail: str
    witness: Optional[str] = None

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        msg = f"{self.suite} r={self.r} n={self.n}: {status} ({self.detail})"
        if self.witness:
            msg += f"\n  witness: {self.witness}"
        return msg


def _context(r: int, n: int, cap: Optional[int]) -> GroupContext:
    return GroupContext(r, n) if cap is None else GroupContext(r, n, cap)


def check_order(r: int, n: int, cap: Optional[int] = None) -> CheckResult:
    """Pairwise criterion against cover-edge reachability, every ordered pair."""
    ctx = _context(r, n, cap)
    elems = list(enumerate_group(ctx))
    crit = leq_matrix(*pack_order_keys(elems))
    hasse = build_hasse(ctx)
    ids = [hasse.id_of(g) for g in elems]
    up = hasse.upset_bits
    for i, g in enumerate(elems):
        bits = up[ids[i]]
        row = crit[i]
        for j, h in enumerate(elems):
            if bool(row[j]) != bool(bits >> ids[j] & 1):
                return CheckResult(
                    "order", r, n, False, f"pairs={len(elems) ** 2}",
                    f"criterion and reachability disagree on ({g}, {h})",
                )
    return CheckResult("order", r, n, True, f"pairs={len(elems) ** 2}")


def check_lattice(r: int, n: int, cap: Optional[int] = None) -> CheckResult:
    """Closed-form meet/join against unique extreme bounds, every pair."""
    ctx = _context(r, n, cap)
    hasse = build_hasse(ctx)
    elems = hasse.elements
    pairs = 0
    for i, g in enumerate(elems):
        for h in elems[i:]:
            pairs += 1
            om = lattice.meet_oracle(g, h, hasse)
            oj = lattice.join_oracle(g, h, hasse)
            if om is None or oj is None:
                which = "meet" if om is None else "join"
                return CheckResult(
                    "lattice", r, n, False, f"pairs={pairs}",
                    f"no {which} exists for ({g}, {h})",
                )
            cm = lattice.meet(g, h)
            if cm != om:
                return CheckResult(
                    "lattice", r, n, False, f"pairs={pairs}",
                    f"meet mismatch on ({g}, {h}): closed {cm}, oracle {om}",
                )
            cj = lattice.join(g, h)
            if cj != oj:
                return CheckResult(
                    "lattice", r, n, False, f"pairs={pairs}",
                    f"join mismatch on ({g}, {h}): closed {cj}, oracle {oj}",
                )
    return CheckResult("lattice", r, n, True, f"pairs={pairs}")


def check_mobius(r: int, n: int, cap: Optional[int] = None) -> CheckResult:
    """Closed-form Möbius against the zeta recursion, plus homotopy consistency."""
    ctx = _context(r, n, cap)
    hasse = build_hasse(ctx)
    pairs = 0
    for gid, g in enumerate(hasse.elements):
        table = lattice.mobius_oracle_all(hasse, gid)
        for hid, expected in table.items():
            pairs += 1
            h = hasse.elements[hid]
            got = lattice.mobius(g, h)
            if got != expected:
                return CheckResult(
                    "mobius", r, n, False, f"pairs={pairs}",
                    f"mu({g}, {h}) closed {got} != recursive {expected}",
                )
            tag = lattice.classify_homotopy(g, h)
            if h.finv - g.finv < 2:
                consistent = tag.kind == lattice.HomotopyClass.NOT_APPLICABLE
            elif tag.kind == lattice.HomotopyClass.SPHERE:
                consistent = got == (-1) ** (tag.sphere_dim + 2)
            else:
                consistent = got == 0
            if not consistent:
                return CheckResult(
                    "mobius", r, n, False, f"pairs={pairs}",
                    f"homotopy tag {tag} inconsistent with mu={got} on ({g}, {h})",
                )
    return CheckResult("mobius", r, n, True, f"pairs={pairs}")


def check_tits(
    r: int, n: int, cap: Optional[int] = None, chain_cap: int = DEFAULT_CHAIN_CAP
) -> CheckResult:
    """Chain-graph connectivity on every interval; with two colors the fixed
    two-atom words are also re-derived by enumeration."""
    ctx = _context(r, n, cap)
    hasse = build_hasse(ctx)
    intervals = 0
    total_chains = 0
    for gid, g in enumerate(hasse.elements):
        for hid in _bit_indices(hasse.upset_bits[gid]):
            h = hasse.elements[hid]
            interval = build_interval(g, h, hasse)
            graph = gamma_graph(interval, cap=chain_cap)
            intervals += 1
            total_chains += len(graph.words)
            if not is_connected(graph):
                return CheckResult(
                    "tits", r, n, False, f"intervals={intervals}",
                    f"chain graph of [{g}, {h}] is disconnected",
                )
    if r == 2:
        bad = alpha_table_mismatch(ctx)
        if bad is not None:
            return CheckResult("tits", r, n, False, f"intervals={intervals}", bad)
        detail = f"intervals={intervals} chains={total_chains} moves=T1-T5"
    else:
        detail = (
            f"intervals={intervals} chains={total_chains} "
            "moves=generic (empirical)"
        )
    return CheckResult("tits", r, n, True, detail)


def alpha_table_mismatch(ctx: GroupContext) -> Optional[str]:
    """Every eligible (g, s, s'): the interval up to the join of the two
    covers has exactly the two tabled words. Returns the first failure."""
    for g in enumerate_group(ctx):
        covers = up_covers(g)
        for s, gs in covers:
            for s2, gs2 in covers:
                if s2 == s:
                    continue
                word = alpha(s, s2, g)
                if word is None:
                    return f"{s},{s2} both cover {g} but are tabled impossible"
                top = lattice.join(gs, gs2)
                chains = chains_between(g, top)
                if len(chains) != 2:
                    return (
                        f"[{g}, {g}*{s} v {g}*{s2}] has {len(chains)} "
                        "maximal chains, expected 2"
                    )
                expected = {word.letters, alpha(s2, s, g).letters}
                if set(chains) != expected:
                    return f"two-atom words of [{g}, {top}] differ from the table"
    return None


def check_moves_equivalence(r: int, n: int) -> CheckResult:
    """T1-T5 and the generic reroute induce the same edges on every interval."""
    if r != 2:
        raise ValueError("move-set comparison is defined for two colors")
    ctx = GroupContext(r, n)
    hasse = build_hasse(ctx)
    intervals = 0
    for gid, g in enumerate(hasse.elements):
        for hid in _bit_indices(hasse.upset_bits[gid]):
            h = hasse.elements[hid]
            interval = build_interval(g, h, hasse)
            intervals += 1
            for word in maximal_chains(interval):
                t_edges = {m.word.letters for m in tits_moves(word)}
                g_edges = {m.word.letters for m in generic_moves(word)}
                if t_edges != g_edges:
                    return CheckResult(
                        "moves", r, n, False, f"intervals={intervals}",
                        f"edge sets differ at chain {word} of [{g}, {h}]",
                    )
    return CheckResult("moves", r, n, True, f"intervals={intervals}")


def check_genfun(r: int, n: int, cap: Optional[int] = None) -> CheckResult:
    """Rank product formula and both distribution identities, exactly."""
    ctx = _context(r, n, cap)
    fg = genfun.finv_genfun(ctx)
    if fg != genfun.prod_q_int(r, n):
        return CheckResult(
            "genfun", r, n, False, "finv",
            f"finv distribution {fg} != q-integer product {genfun.prod_q_int(r, n)}",
        )
    if not genfun.check_wdes_identity(ctx):
        return CheckResult(
            "genfun", r, n, False, "wdes",
            f"wdes distribution {genfun.wdes_genfun(ctx)} mismatch",
        )
    if not genfun.check_bivariate_identity(ctx):
        return CheckResult(
            "genfun", r, n, False, "bivariate",
            "joint (finv, wdes) distribution mismatch",
        )
    return CheckResult("genfun", r, n, True, f"elements={ctx.order} identities=3")


def check_present(r: int, n: int, cap: Optional[int] = None) -> CheckResult:
    """Relation families hold and the generators close to the whole group."""
    ctx = _context(r, n, cap)
    report = presentation.verify_relations_B(ctx)
    if not report.ok:
        failed = [c.relation for c in report.checks if not c.ok]
        return CheckResult(
            "present", r, n, False, "relations",
            f"failing families: {', '.join(failed)}",
        )
    order = presentation.closure_order(ctx, [g for _, g in generators(ctx)])
    if order != ctx.order:
        return CheckResult(
            "present", r, n, False, "closure",
            f"generated subgroup has order {order}, expected {ctx.order}",
        )
    extra = ""
    if r == 2 and n >= 2:
        report_a = presentation.verify_relations_A(n)
        if not report_a.ok:
            failed = [c.relation for c in report_a.checks if not c.ok]
            return CheckResult(
                "present", r, n, False, "relations",
                f"failing swap-only families: {', '.join(failed)}",
            )
        if n >= 3 and not presentation.verify_remark_derivation(n):
            return CheckResult(
                "present", r, n, False, "derivation",
                "rewriting chain for the cube relation does not replay",
            )
        extra = f" swap_only={report_a.total_checked()}"
    return CheckResult(
        "present", r, n, True,
        f"relations={report.total_checked()}{extra} closure={order}",
    )


def check_duality(r: int, n: int, cap: Optional[int] = None) -> CheckResult:
    """dual is an order-reversing involution-like bijection with
    complementary ranks."""
    ctx = _context(r, n, cap)
    elems = list(enumerate_group(ctx))
    index = {g.window: i for i, g in enumerate(elems)}
    top_rank = mu0(ctx).finv
    dual_of = []
    for g in elems:
        d = dual(g)
        dual_of.append(index[d.window])
        if g.finv + d.finv != top_rank:
            return CheckResult(
                "duality", r, n, False, f"elements={len(elems)}",
                f"finv({g}) + finv(dual) = {g.finv + d.finv} != {top_rank}",
            )
        if dual(d) != g:
            return CheckResult(
                "duality", r, n, False, f"elements={len(elems)}",
                f"dual(dual({g})) != {g}",
            )
    if len(set(dual_of)) != len(elems):
        return CheckResult(
            "duality", r, n, False, f"elements={len(elems)}",
            "dual is not injective",
        )
    crit = leq_matrix(*pack_order_keys(elems))
    for i in range(len(elems)):
        for j in range(len(elems)):
            if bool(crit[i, j]) != bool(crit[dual_of[j], dual_of[i]]):
                return CheckResult(
                    "duality", r, n, False, f"elements={len(elems)}",
                    f"order not reversed on ({elems[i]}, {elems[j]})",
                )
    return CheckResult("duality", r, n, True, f"elements={len(elems)}")


SUITES = {
    "order": check_order,
    "lattice": check_lattice,
    "mobius": check_mobius,
    "tits": check_tits,
    "genfun": check_genfun,
    "present": check_present,
}


def _run_one(args: tuple[str, int, int, Optional[int]]) -> CheckResult:
    name, r, n, cap = args
    return SUITES[name](r, n, cap)


def run_suites(
    names: list[str],
    r: int,
    n: int,
    jobs: int = 1,
    cap: Optional[int] = None,
) -> list[CheckResult]:
    tasks = [(name, r, n, cap) for name in names]
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks))
