"""Hybrid ant colony system for the generalized traveling salesman problem.

Node and cluster ids are 0-based here; files and the command line use 1-based ids.
"""

from ._core import (
    AcsParams,
    BudgetExceededError,
    DomainError,
    FeasibilityError,
    GtspInstance,
    HacsError,
    LocalSearchMode,
    LocalUpdateDenominator,
    ParseError,
    RunResult,
    Tour,
    UsageError,
    ValidationError,
    brute_force_optimum,
    cluster_tsplib,
    co_optimize,
    format_tour,
    improve,
    load_gtsp,
    make_tour,
    nearest_neighbor,
    parse_gtsp,
    solve,
    three_opt,
    tour_weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]
