"""DIMACS export of a partition instance, and a small exact model counter.

Variable ``s(w, i, l)`` is true when a piece of length ``l`` starts at
offset ``i`` of string ``w``.  The clauses force exactly one chain of
pieces from offset 0 to the end of each string and forbid every pair of
colliding piece occurrences.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, TextIO

from ..strcore import CollisionKind, Instance, Partition, collides


@dataclass
class CNF:
    n_vars: int
    clauses: list[tuple[int, ...]]
    # variable number -> (string index, offset, length); variable k at index k-1
    var_map: list[tuple[int, int, int]]

    def to_dimacs(self) -> str:
        buf = io.StringIO()
        self.write(buf)
        return buf.getvalue()

    def write(self, fh: TextIO) -> None:
        fh.write("c strpart partition CNF\n")
        fh.write("c var string offset length\n")
        for v, (w, i, l) in enumerate(self.var_map, start=1):
            fh.write(f"c {v} {w} {i} {l}\n")
        fh.write(f"p cnf {self.n_vars} {len(self.clauses)}\n")
        for cl in self.clauses:
            fh.write(" ".join(map(str, cl)) + " 0\n")

    def decode(self, model: Iterable[int]) -> Partition:
        """Partition from a satisfying assignment (positive literals)."""
        true = {v for v in model if v > 0}
        n_strings = 1 + max((w for w, _, _ in self.var_map), default=-1)
        cuts: list[list[int]] = [[] for _ in range(n_strings)]
        for v in sorted(true, key=lambda v: self.var_map[v - 1]):
            w, i, _ = self.var_map[v - 1]
            if i > 0:
                cuts[w].append(i)
        return Partition(tuple(tuple(c) for c in cuts))


def export_cnf(inst: Instance) -> CNF:
    K = inst.K
    var_map: list[tuple[int, int, int]] = []
    var: dict[tuple[int, int, int], int] = {}
    for w_idx, w in enumerate(inst.strings):
        for i in range(len(w)):
            for l in range(1, min(K, len(w) - i) + 1):
                var_map.append((w_idx, i, l))
                var[w_idx, i, l] = len(var_map)

    clauses: list[tuple[int, ...]] = []
    for w_idx, w in enumerate(inst.strings):
        n = len(w)
        starts = [[var[w_idx, i, l] for l in range(1, min(K, n - i) + 1)] for i in range(n)]
        clauses.append(tuple(starts[0]))
        for i in range(n):
            for a, b in combinations(starts[i], 2):
                clauses.append((-a, -b))
            for l in range(1, min(K, n - i) + 1):
                v = var[w_idx, i, l]
                if i + l < n:
                    clauses.append((-v, *starts[i + l]))
            if i > 0:
                preds = [var[w_idx, i - l, l] for l in range(1, min(K, i) + 1)]
                for v in starts[i]:
                    clauses.append((-v, *preds))

    occurrences = [(var[w_idx, i, l], inst.strings[w_idx][i:i + l])
                   for (w_idx, i, l) in var_map]
    if inst.kind is CollisionKind.EQUALITY:
        groups: dict[str, list[int]] = {}
        for v, text in occurrences:
            groups.setdefault(text, []).append(v)
        for vs in groups.values():
            for a, b in combinations(vs, 2):
                clauses.append((-a, -b))
    else:
        for (a, ta), (b, tb) in combinations(occurrences, 2):
            if collides(inst.kind, ta, tb):
                clauses.append((-a, -b))
    return CNF(len(var_map), clauses, var_map)


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]]]:
    n_vars = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line: {line!r}")
            n_vars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if n_vars is None:
        raise ValueError("missing 'p cnf' line")
    return n_vars, clauses


def count_models(n_vars: int, clauses: list[tuple[int, ...]]) -> int:
    """Exact model count by DPLL with unit propagation and free-variable credit."""
    return _count(frozenset(range(1, n_vars + 1)), [frozenset(c) for c in clauses])


def _count(free: frozenset, clauses: list[frozenset]) -> int:
    clauses, free, ok = _propagate(clauses, free)
    if not ok:
        return 0
    if not clauses:
        return 1 << len(free)
    # branch on the most frequent variable
    tally: dict[int, int] = {}
    for c in clauses:
        for lit in c:
            tally[abs(lit)] = tally.get(abs(lit), 0) + 1
    v = max(tally, key=tally.get)
    rest = free - {v}
    return (_count(rest, _assign(clauses, v)) + _count(rest, _assign(clauses, -v)))


def _assign(clauses: list[frozenset], lit: int) -> list[frozenset]:
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = c - {-lit}
        out.append(c)
    return out


def _propagate(clauses, free):
    while True:
        if any(not c for c in clauses):
            return clauses, free, False
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is None:
            return clauses, free, True
        (lit,) = unit
        clauses = _assign(clauses, lit)
        free = free - {abs(lit)}
