"""Colored permutations under the flag weak order.

The group of r-colored permutations of n letters, generated by color bumps
b_i and colored adjacent swaps a_i; the partial order those generators
induce through the flag inversion number; its lattice operations, Möbius
function, maximal-chain move graphs, and distribution identities. Closed
forms are cross-checked against brute-force oracles at desk scale.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .core import (
    ColoredPermutation,
    GeneratorLabel,
    GroupContext,
    PermStats,
    bar,
    compose,
    dual,
    enumerate_group,
    format_element,
    generator,
    generators,
    identity,
    inverse,
    mu0,
    parse_element,
    right_multiply,
    stats,
)
from .errors import (
    CapExceededError,
    ContextMismatchError,
    FlagWeakError,
    NotComparableError,
    ParseError,
)
from .order import (
    CoverEdge,
    HasseDiagram,
    Interval,
    build_hasse,
    build_interval,
    down_covers,
    leq,
    leq_oracle,
    m_between,
    m_set,
    rank_genfun,
    up_covers,
    wdes,
)
from .lattice import (
    HomotopyClass,
    atoms,
    classify_homotopy,
    join,
    join_oracle,
    join_set,
    meet,
    meet_oracle,
    meet_set,
    mobius,
    mobius_oracle,
    sn_weak_join,
    sn_weak_meet,
)
from .chains import (
    ChainGraph,
    GeneratorWord,
    alpha,
    diameter,
    gamma_graph,
    generic_moves,
    is_connected,
    maximal_chains,
    tits_moves,
)
from .genfun import (
    BiPoly,
    UniPoly,
    bivariate_genfun,
    check_bivariate_identity,
    check_wdes_identity,
    eulerian,
    finv_genfun,
    prod_q_int,
    q_int,
    sn_qt,
    wdes_genfun,
)
from .presentation import (
    RelationReport,
    closure_order,
    verify_relations_A,
    verify_relations_B,
    verify_remark_derivation,
)

__version__ = "0.1.0"
