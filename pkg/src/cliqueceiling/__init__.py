"""Upper bounds on the clique number from clique ceiling numbers."""

from .bounds import (
    BoundReport,
    GuardError,
    SplitCheck,
    bound_report,
    brute_force_omega,
    hammer_simeone,
    ub1,
    ub2,
    ub3,
)
from .ceilings import (
    AccnResult,
    AccnTrace,
    CeilingTable,
    accn,
    accn_trace,
    ceiling_of_graph,
    ceilings_under,
    clique_ceiling,
    h_threshold,
    phase2,
    phase3,
    revised_ceilings_under,
    revised_clique_ceiling,
)
from .graph import (
    DimacsError,
    Graph,
    JoinedInstance,
    closed_neighborhood,
    from_edges,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_gnp,
    gen_split,
    induced_degree,
    join_universal,
    parse_dimacs,
    relabel,
    write_dimacs,
)

__version__ = "0.1.0"
