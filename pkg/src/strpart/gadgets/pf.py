"""Prefix-free reductions; suffix-free instances follow by mirroring."""
from __future__ import annotations

from ..satkit import Formula3SAT3
from ..strcore import CollisionKind
from .common import binary_output, interleave, join_single, msp_output, require
from .ff import _connect, _table
from .model import (Family, ReductionOutput, Stage, checked_formula, occurrence_triple,
                    require_stage)


def _clause_tokens(f, table, i: int) -> list[str]:
    toks: list[str] = []
    for j in range(1, len(f.clauses[i - 1]) + 1):
        if j > 1:
            toks.append("$")
        toks.append(table.literals[i, j])
    return toks


def _enforcers(f, table, v: int) -> list:
    p, q, k = occurrence_triple(f, v)
    cp, cq, ck = table.literals[p], table.literals[q], table.literals[k]
    x = [table.variables[v, s] for s in (1, 2, 3, 4)]
    return [(("enforcer", v, 1), [x[0], cp, ck, x[1]]),
            (("enforcer", v, 2), [x[2], cq, ck, x[3]])]


def pf_msp_from_3sat3(f: Formula3SAT3) -> ReductionOutput:
    checked_formula(f)
    table = _table(f, 4, dollar="$")
    strings = [(("clause", i), _clause_tokens(f, table, i)) for i in range(1, f.m + 1)]
    for v in range(1, f.n_vars + 1):
        strings += _enforcers(f, table, v)
    strings.append((("forbidden", 1), ["$", "$"]))
    return msp_output(f, Family.PF, CollisionKind.PREFIX, 2, table, strings, 1)


def pf_sp_from_msp(r: ReductionOutput, joiner_budget: int | None = None) -> ReductionOutput:
    require_stage(r, Family.PF, Stage.MSP)
    return _connect(r, joiner_budget)


def pf_codeword(i: int, t: int) -> str:
    return "00" + "1" * i + "0" + "1" * (t - 4 - i) + "0"


def pf_min_t(f: Formula3SAT3) -> int:
    return 3 * f.m + 4 * f.n_vars + 7


PF_FORBIDDEN = ("11", "01", "101", "0001", "10001")


def pf_msp_binary_from_3sat3(f: Formula3SAT3, t: int | None = None) -> ReductionOutput:
    checked_formula(f)
    lo = pf_min_t(f)
    t = lo if t is None else t
    require(t >= lo, f"t = {t} violates t >= 3m+4n+7 = {lo}")
    table = _table(f, 4, dollar="$")
    order = [*table.literals.values(), *table.variables.values()]
    book = {s: pf_codeword(i, t) for i, s in enumerate(order, 2)}
    assert len(book) <= t - 7
    book["$"] = "1"
    strings = [(("clause", i), _clause_tokens(f, table, i), None) for i in range(1, f.m + 1)]
    for v in range(1, f.n_vars + 1):
        strings += [(role, toks, None) for role, toks in _enforcers(f, table, v)]
    strings += [(("forbidden", k), None, s) for k, s in enumerate(PF_FORBIDDEN, 1)]
    return binary_output(f, Family.PF, CollisionKind.PREFIX, 2 * t, table, book,
                         strings, 1, {"t": t})


def pf_delimiter(i: int, K: int) -> str:
    return "00" + "1" * i + "0" + "1" * (K - 4 - i) + "0"


def forcing_pieces(K: int) -> list[list[str]]:
    """Pieces of ``F4``, ``F3``, ``F2``, ``F1`` in that order.

    Together they select exactly the forbidden set ``11, 01, 101, 0001, 10001``.
    """
    require(K >= 6, f"K = {K} too small for the forbidden-forcing string (need K >= 6)")
    f4 = ["00" + "1" * (K - 4) + "01", "0001"]
    f3 = ["00" + "1" * (K - 3) + "0", "10001"]
    f2 = ["001" + "0" * (K - 3), "0" * (K - 2) + "11", "101", "00" + "1" * (K - 2), "01"]
    f1 = ["1" + "0" * (K - 1), "0" * K, "0" * (K - 1) + "1", "11"]
    return [f4, f3, f2, f1]


def pf_sp_binary(r: ReductionOutput) -> ReductionOutput:
    """Non-forbidden strings joined by distinct delimiters, then ``F = F4 F3 F2 F1``."""
    require_stage(r, Family.PF, Stage.MSP_BINARY)
    K = r.K
    keep = [s for s, role in enumerate(r.roles) if role[0] != "forbidden"]
    need = len(keep) - 1
    require(need <= K - 7, f"{need} delimiters needed but only K-7 = {K - 7} exist (i = 2..K-6)")
    t = r.params["t"]
    segs: list = [keep[0]]
    for n, s in enumerate(keep[1:], 2):
        d = pf_delimiter(n, K)
        assert len(d) != t
        segs += [[list(d)], s]
    for part in forcing_pieces(K):
        segs.append([list(p) for p in part])
    return join_single(r, Stage.SP_BINARY, segs, {})


# -- witness rules -----------------------------------------------------------

def clause_cuts(size: int, sel: int) -> list[int]:
    if size == 2:
        return [1] if sel == 1 else [2]
    return {1: [1, 3], 2: [2, 3], 3: [2, 4]}[sel]


def pf_token_cuts(role: tuple, f: Formula3SAT3, a, selected) -> list[int]:
    if role[0] == "clause":
        i = role[1]
        return clause_cuts(len(f.clauses[i - 1]), selected[i])
    if role[0] == "enforcer":
        # x1 cp ck x2:  false [x1][cp ck][x2]   true [x1 cp][ck x2]
        return [2] if a[role[1] - 1] else [1, 3]
    return []
