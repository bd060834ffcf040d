"""Partitions from satisfying assignments and assignments from partitions."""
from __future__ import annotations

from typing import Sequence

from ..strcore import Partition, verify_partition
from . import ef, ff, pf
from .model import Family, ReductionError, ReductionOutput


class ExtractionError(ReductionError):
    """Selected literals contradict each other or fail to satisfy the formula."""


def selected_literals(f, a: Sequence[bool]) -> dict[int, int]:
    """First true literal position of every clause."""
    out = {}
    for i, c in enumerate(f.clauses, 1):
        out[i] = next(j for j, (v, p) in enumerate(c, 1) if a[v - 1] == p)
    return out


def _token_cuts(r: ReductionOutput, role: tuple, a, selected) -> list[int]:
    f = r.source
    if r.family is Family.EF:
        return ef.ef_token_cuts(role, f, a, selected)
    if r.family is Family.FF:
        return ff.ff_token_cuts(role, f, a, selected, r.stage.binary)
    return pf.pf_token_cuts(role, f, a, selected)


def witness_from_assignment(r: ReductionOutput, a: Sequence[bool]) -> Partition:
    a = tuple(bool(x) for x in a)
    bad = r.source.first_falsified(a)
    if bad is not None:
        raise ReductionError(f"assignment falsifies clause {bad}")
    return _witness(r, a, selected_literals(r.source, a))


def _witness(r: ReductionOutput, a, selected) -> Partition:
    if r.stage.single:
        inner = _witness(r.parent, a, selected)
        cuts = set(r.joiner_cuts)
        for s, (start, _) in r.layout.items():
            cuts.update(start + c for c in inner.cuts[s])
        return Partition((tuple(sorted(cuts)),))
    out = []
    for s, role in enumerate(r.roles):
        toks = r.tokens[s]
        if toks is None:
            out.append(())
            continue
        tc = _token_cuts(r, role, a, selected)
        off = r.token_offsets(s)
        out.append(tuple(off[c] for c in tc))
    return Partition(tuple(out))


def selected_markers(r: ReductionOutput, p: Partition) -> list[tuple[int, int]]:
    """Literals (clause, position) whose marker span is super-selected by ``p``."""
    inst = r.instance
    return sorted(key for key, (s, a, b) in r.literal_markers.items()
                  if p.super_selected(inst, s, a, b))


def assignment_from_partition(r: ReductionOutput, p: Partition) -> tuple[bool, ...]:
    report = verify_partition(r.instance, p)
    if not report.valid:
        v = report.violations[0]
        raise ReductionError(f"partition is not valid: {v.describe(r.instance.alphabet)}")
    f = r.source
    values: dict[int, bool] = {}
    for i, j in selected_markers(r, p):
        var, pol = f.clauses[i - 1][j - 1]
        if values.setdefault(var, pol) != pol:
            raise ExtractionError(f"variable x{var} selected both positive and negated")
    a = tuple(values.get(v, False) for v in range(1, f.n_vars + 1))
    bad = f.first_falsified(a)
    if bad is not None:
        raise ExtractionError(f"extracted assignment falsifies clause {bad}")
    return a
