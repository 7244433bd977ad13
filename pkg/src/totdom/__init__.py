"""Greedy total dominating sets in bipartite graphs and the bound they meet."""

from .bounds import (
    BoundValue,
    RecursionTrace,
    alon_bound,
    closed_bound,
    g_exact,
    g_real,
    good_f,
    henning_bound,
    improvement_report,
    nice_f,
)
from .exact import ExactResult, Status, exact_gamma_t, exhaustive_gamma_t
from .graph import (
    BipartiteGraph,
    Side,
    VertexRef,
    build,
    double_graph,
    gen_k_regular,
    gen_min_degree,
    is_k_regular,
    min_degree,
    parse,
    serialize,
)
from .greedy import (
    CoverTrace,
    TotalDominatingSet,
    cover_side,
    greedy_tds,
    is_total_dominating,
    verify_bound,
)

__version__ = "0.1.0"
