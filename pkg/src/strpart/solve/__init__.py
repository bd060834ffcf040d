"""Exact search, the exhaustive oracle and CNF export."""
from .cnf import CNF, count_models, export_cnf, parse_dimacs
from .index import CollisionIndex, CountingTrie
from .search import (
    BudgetExhausted,
    PieceOrder,
    SolveConfig,
    SolveResult,
    SolveStats,
    Status,
    Strategy,
    compositions,
    count_valid,
    iter_valid,
    solve,
    solve_backtracking,
    solve_exhaustive,
)

__all__ = [
    "CNF", "count_models", "export_cnf", "parse_dimacs",
    "CollisionIndex", "CountingTrie",
    "BudgetExhausted", "PieceOrder", "SolveConfig", "SolveResult", "SolveStats",
    "Status", "Strategy", "compositions", "count_valid", "iter_valid", "solve",
    "solve_backtracking", "solve_exhaustive",
]
