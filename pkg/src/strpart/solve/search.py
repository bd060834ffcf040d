"""Exact decision procedures for X-free K-partitions."""
from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator

from ..strcore import CollisionKind, Instance, Partition, collides
from .index import CollisionIndex

DEFAULT_NODE_BUDGET = 50_000_000
DEFAULT_TIME_BUDGET = 60.0


class Strategy(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    BACKTRACKING = "backtracking"


class PieceOrder(enum.Enum):
    LONGEST_FIRST = "longest"
    SHORTEST_FIRST = "shortest"


class Status(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    BUDGET = "BUDGET"


@dataclass(frozen=True)
class SolveConfig:
    strategy: Strategy = Strategy.BACKTRACKING
    node_budget: int | None = DEFAULT_NODE_BUDGET
    time_budget: float | None = DEFAULT_TIME_BUDGET
    piece_order: PieceOrder = PieceOrder.LONGEST_FIRST
    count_all: bool = False

    def __post_init__(self):
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        object.__setattr__(self, "piece_order", PieceOrder(self.piece_order))
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")


@dataclass
class SolveStats:
    nodes: int = 0
    max_depth: int = 0
    elapsed: float = 0.0


@dataclass
class SolveResult:
    status: Status
    partition: Partition | None = None
    stats: SolveStats = field(default_factory=SolveStats)
    count: int | None = None

    @property
    def sat(self) -> bool:
        return self.status is Status.SAT


class BudgetExhausted(Exception):
    pass


class _Budget:
    __slots__ = ("stats", "node_limit", "deadline", "t0")

    def __init__(self, cfg: SolveConfig, stats: SolveStats):
        self.stats = stats
        self.node_limit = cfg.node_budget
        self.t0 = time.perf_counter()
        self.deadline = None if cfg.time_budget is None else self.t0 + cfg.time_budget

    def tick(self, depth: int) -> None:
        st = self.stats
        st.nodes += 1
        if depth > st.max_depth:
            st.max_depth = depth
        if self.node_limit is not None and st.nodes > self.node_limit:
            raise BudgetExhausted
        if self.deadline is not None and not st.nodes & 0x3FF \
                and time.perf_counter() > self.deadline:
            raise BudgetExhausted

    def finish(self) -> None:
        self.stats.elapsed = time.perf_counter() - self.t0


def solve(inst: Instance, cfg: SolveConfig | None = None) -> SolveResult:
    cfg = cfg or SolveConfig()
    if cfg.strategy is Strategy.EXHAUSTIVE:
        return solve_exhaustive(inst, cfg)
    return solve_backtracking(inst, cfg)


# -- exhaustive oracle -------------------------------------------------------

def compositions(n: int, K: int) -> Iterator[tuple[int, ...]]:
    """Interior cut tuples of every split of length ``n`` into parts of size 1..K."""
    if n == 0:
        yield ()
        return

    def rec(pos: int, acc: list[int]):
        for step in range(1, min(K, n - pos) + 1):
            nxt = pos + step
            if nxt == n:
                yield tuple(acc)
            else:
                acc.append(nxt)
                yield from rec(nxt, acc)
                acc.pop()

    yield from rec(0, [])


def _pairwise_free(kind: CollisionKind, pieces: list[str]) -> bool:
    for i in range(1, len(pieces)):
        a = pieces[i]
        for j in range(i):
            if collides(kind, a, pieces[j]):
                return False
    return True


def solve_exhaustive(inst: Instance, cfg: SolveConfig | None = None) -> SolveResult:
    """Enumerate the full product of per-string compositions.

    Each candidate is checked with the plain pairwise predicate, so this
    path shares no code with the backtracking search or its index.
    """
    cfg = cfg or SolveConfig(strategy=Strategy.EXHAUSTIVE)
    stats = SolveStats()
    budget = _Budget(cfg, stats)
    per_string = [list(compositions(len(w), inst.K)) for w in inst.strings]
    first: Partition | None = None
    count = 0
    try:
        for combo in itertools.product(*per_string):
            budget.tick(len(inst.strings))
            pieces: list[str] = []
            bounds_ok = True
            for w, cuts in zip(inst.strings, combo):
                bounds = (0, *cuts, len(w))
                for a, b in zip(bounds, bounds[1:]):
                    if b - a > inst.K:
                        bounds_ok = False
                    pieces.append(w[a:b])
            if not bounds_ok or not _pairwise_free(inst.kind, pieces):
                continue
            count += 1
            if first is None:
                first = Partition(combo)
                if not cfg.count_all:
                    break
    except BudgetExhausted:
        budget.finish()
        return SolveResult(Status.BUDGET, None, stats, None)
    budget.finish()
    status = Status.SAT if first is not None else Status.UNSAT
    return SolveResult(status, first, stats, count if cfg.count_all else None)


# -- backtracking ------------------------------------------------------------

def iter_valid(inst: Instance, cfg: SolveConfig | None = None,
               stats: SolveStats | None = None) -> Iterator[Partition]:
    """Depth-first enumeration of every valid partition.

    Strings are processed in instance order, each extended left to right by
    one piece at a time; a candidate piece is pruned as soon as the
    collision index reports a conflict with the pieces already chosen.
    Raises :class:`BudgetExhausted` when the configured budget runs out.
    """
    cfg = cfg or SolveConfig()
    stats = stats if stats is not None else SolveStats()
    budget = _Budget(cfg, stats)
    strings = inst.strings
    K = inst.K
    index = CollisionIndex(inst.kind)
    longest = cfg.piece_order is PieceOrder.LONGEST_FIRST
    n_strings = len(strings)

    # frame: [string index, position, remaining lengths, chosen piece, cut added]
    cuts: list[list[int]] = [[] for _ in strings]

    def lengths(si: int, pos: int) -> list[int]:
        # popped from the end
        top = min(K, len(strings[si]) - pos)
        return list(range(1, top + 1)) if longest else list(range(top, 0, -1))

    frames = [[0, 0, lengths(0, 0), None, False]]
    try:
        while frames:
            f = frames[-1]
            si, pos, cand = f[0], f[1], f[2]
            if f[3] is not None:
                index.remove(f[3])
                if f[4]:
                    cuts[si].pop()
                f[3] = None
            if not cand:
                frames.pop()
                continue
            length = cand.pop()
            budget.tick(len(frames))
            w = strings[si]
            piece = w[pos:pos + length]
            if index.would_collide(piece):
                continue
            index.add(piece)
            f[3] = piece
            end = pos + length
            if end < len(w):
                cuts[si].append(end)
                f[4] = True
                frames.append([si, end, lengths(si, end), None, False])
            else:
                f[4] = False
                if si + 1 < n_strings:
                    frames.append([si + 1, 0, lengths(si + 1, 0), None, False])
                else:
                    yield Partition(tuple(tuple(c) for c in cuts))
    finally:
        budget.finish()


def solve_backtracking(inst: Instance, cfg: SolveConfig | None = None) -> SolveResult:
    cfg = cfg or SolveConfig()
    stats = SolveStats()
    first: Partition | None = None
    count = 0
    try:
        for p in iter_valid(inst, cfg, stats):
            count += 1
            if first is None:
                first = p
            if not cfg.count_all:
                break
    except BudgetExhausted:
        return SolveResult(Status.BUDGET, None, stats, None)
    status = Status.SAT if first is not None else Status.UNSAT
    return SolveResult(status, first, stats, count if cfg.count_all else None)


def count_valid(inst: Instance, cfg: SolveConfig | None = None) -> int:
    """Exact number of valid K-partitions, by exhaustive enumeration."""
    base = cfg or SolveConfig()
    cfg = SolveConfig(Strategy.EXHAUSTIVE, base.node_budget, base.time_budget,
                      base.piece_order, count_all=True)
    res = solve_exhaustive(inst, cfg)
    if res.status is Status.BUDGET:
        raise BudgetExhausted(f"count_valid exceeded budget after {res.stats.nodes} nodes")
    return res.count
