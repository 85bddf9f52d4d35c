"""t-spread strongly stable monomial ideals.

Monomials are lists of strictly increasing variable indices, so ``[2, 5, 14]``
stands for x2*x5*x14.
"""

from ._tspread import (
    Inapplicable,
    NotStronglyStable,
    TSpreadError,
    betti_diagram,
    borel_closure,
    borel_ideal,
    brute_force_max_corners,
    construct,
    corners,
    enumerate,
    graded_betti,
    is_strongly_stable,
    is_t_spread,
    max_corners,
    run_cli,
    spread_count,
)

__all__ = [
    "Inapplicable",
    "NotStronglyStable",
    "TSpreadError",
    "betti_diagram",
    "borel_closure",
    "borel_ideal",
    "brute_force_max_corners",
    "construct",
    "corners",
    "enumerate",
    "graded_betti",
    "is_strongly_stable",
    "is_t_spread",
    "max_corners",
    "run_cli",
    "spread_count",
]
