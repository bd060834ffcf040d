"""scikit-learn style front end to the exact solver.

Partitioning is a per-input decision problem, so there is nothing to learn:
``fit`` solves the given instance and keeps the result, ``transform`` solves
whatever it is handed.  The class exists so the solver drops into pipelines
and parameter grids like any other transformer.
"""
from __future__ import annotations

from typing import Sequence

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .solve import PieceOrder, SolveConfig, SolveResult, Strategy, solve
from .strcore import CollisionKind, Instance


class StringPartitioner(TransformerMixin, BaseEstimator):
    """Find an X-free K-partition of a list of strings.

    ``X`` is either an :class:`Instance` (its own kind and K win) or a
    sequence of plain strings, one character per symbol.
    """

    def __init__(self, kind="factor", K=2, strategy="backtracking",
                 node_budget=50_000_000, time_budget=60.0, piece_order="longest"):
        self.kind = kind
        self.K = K
        self.strategy = strategy
        self.node_budget = node_budget
        self.time_budget = time_budget
        self.piece_order = piece_order

    def _instance(self, X) -> Instance:
        if isinstance(X, Instance):
            return X
        if isinstance(X, str):
            X = [X]
        strings: Sequence[str] = list(X)
        if not strings or not all(isinstance(s, str) for s in strings):
            raise ValueError("X must be an Instance or a non-empty list of strings")
        return Instance.from_text(CollisionKind.parse(self.kind), int(self.K), strings)

    def _config(self) -> SolveConfig:
        return SolveConfig(Strategy(self.strategy), self.node_budget, self.time_budget,
                           PieceOrder(self.piece_order))

    def _solve(self, X) -> tuple[Instance, SolveResult]:
        inst = self._instance(X)
        return inst, solve(inst, self._config())

    def fit(self, X, y=None):
        inst, res = self._solve(X)
        self.instance_ = inst
        self.result_ = res
        self.status_ = res.status.value
        self.partition_ = res.partition
        self.pieces_ = None if res.partition is None else res.partition.pieces(inst)
        return self

    def _check_fitted(self):
        if not hasattr(self, "result_"):
            raise NotFittedError("call fit before using this StringPartitioner")

    def transform(self, X):
        """Pieces per string, or ``None`` when no valid partition exists."""
        self._check_fitted()
        inst, res = self._solve(X)
        return None if res.partition is None else res.partition.pieces(inst)

    def predict(self, X) -> bool:
        """Whether ``X`` admits a valid partition (raises if the budget runs out)."""
        self._check_fitted()
        _, res = self._solve(X)
        if res.status.value == "BUDGET":
            raise RuntimeError("solver budget exhausted")
        return res.sat
