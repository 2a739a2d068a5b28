"""gencut: connectivity-preserving and threshold generalizations of minimum cut.

The package is organized as a small numerical library:

- :mod:`gencut.graph` — weighted graphs, exact min s-t cuts, shrinking
- :mod:`gencut.cpmc` — connectivity-preserving cuts and their exact oracle
- :mod:`gencut.planar` — embeddings, weight perturbation, planar transformers
- :mod:`gencut.lp` — dense simplex solver
- :mod:`gencut.tmc` — threshold cuts: exact oracle and LP rounding
- :mod:`gencut.bisection` — minimum bisection and the clique-gadget solver
- :mod:`gencut.reductions` — instance transformers with certificates
- :mod:`gencut.io` / :mod:`gencut.generate` / :mod:`gencut.cli`
"""

from .errors import (
    ArithmeticBoundExceeded,
    BoundsError,
    DisconnectedComponent,
    GencutError,
    Infeasible,
    InstanceTooLarge,
    InvalidParams,
    IterationLimit,
    LpInfeasible,
    LpUnbounded,
    NoFiniteCut,
    NotPlanar,
    OddOrder,
    ParseError,
    ScaleTooSmall,
    SchemaError,
    SizeBoundExceeded,
)
from .graph import (
    INF,
    CutSolution,
    ShrinkResult,
    WeightedGraph,
    max_flow_value,
    min_st_edge_cut,
    min_st_node_cut,
    shrink_components,
)
from .cpmc import (
    CpmcInstance,
    PartnerClassification,
    classify_partner,
    cpmc_feasible,
    solve_cpmc_exact,
    solve_generalized_cpmc_exact,
)
from .tmc import TmcInstance, solve_tmc_exact, solve_tmnc_lp
from .bisection import min_bisection, solve_tmec_via_bisection

__all__ = [
    "INF",
    "WeightedGraph",
    "CutSolution",
    "ShrinkResult",
    "max_flow_value",
    "min_st_edge_cut",
    "min_st_node_cut",
    "shrink_components",
    "CpmcInstance",
    "PartnerClassification",
    "classify_partner",
    "cpmc_feasible",
    "solve_cpmc_exact",
    "solve_generalized_cpmc_exact",
    "TmcInstance",
    "solve_tmc_exact",
    "solve_tmnc_lp",
    "min_bisection",
    "solve_tmec_via_bisection",
    "GencutError",
    "BoundsError",
    "NoFiniteCut",
    "DisconnectedComponent",
    "InstanceTooLarge",
    "Infeasible",
    "NotPlanar",
    "ArithmeticBoundExceeded",
    "ScaleTooSmall",
    "OddOrder",
    "SizeBoundExceeded",
    "LpInfeasible",
    "LpUnbounded",
    "IterationLimit",
    "InvalidParams",
    "ParseError",
    "SchemaError",
]

__version__ = "0.1.0"
