"""Factor-free reductions."""
from __future__ import annotations

from ..satkit import Formula3SAT3
from ..strcore import CollisionKind, mirror
from .common import (binary_output, connector_blocks, interleave, join_single, msp_output,
                     require)
from .model import (Family, ReductionOutput, Stage, SymbolTable, checked_formula, lit_name,
                    occurrence_triple, require_stage, var_name)


def _table(f: Formula3SAT3, sups: int, **specials) -> SymbolTable:
    lits = {(i, j): lit_name(i, j) for i, c in enumerate(f.clauses, 1) for j in range(1, len(c) + 1)}
    variables = {(v, k): var_name(v, k) for v in range(1, f.n_vars + 1) for k in range(1, sups + 1)}
    return SymbolTable(lits, variables, specials)


def _clause_tokens(f: Formula3SAT3, table: SymbolTable, i: int) -> list[str]:
    toks: list[str] = []
    for j in range(1, len(f.clauses[i - 1]) + 1):
        if j > 1:
            toks.append("0")
        c = table.literals[i, j]
        toks += [c, c]
    return toks


def ff_msp_from_3sat3(f: Formula3SAT3) -> ReductionOutput:
    checked_formula(f)
    table = _table(f, 3, zero="0", one="1")
    strings = [(("clause", i), _clause_tokens(f, table, i)) for i in range(1, f.m + 1)]
    for v in range(1, f.n_vars + 1):
        p, q, k = occurrence_triple(f, v)
        cp, cq, ck = table.literals[p], table.literals[q], table.literals[k]
        x1, x2, x3 = (table.variables[v, s] for s in (1, 2, 3))
        strings += [
            (("enforcer", v, 1), [x1, x2, "1", ck, ck, "1"]),
            (("enforcer", v, 2), ["1", cp, cp, "1", x3, x3, "0", x3, x3, "1", x1, x2, "0"]),
            (("enforcer", v, 3), ["0", x1, x2, "1", x3, x3, "0", x3, x3, "1", cq, cq, "1"]),
        ]
    for v in range(1, f.n_vars + 1):
        x3 = table.variables[v, 3]
        strings.append((("forbidden", v), [x3, "0", x3]))
    return msp_output(f, Family.FF, CollisionKind.FACTOR, 3, table, strings, 2)


def ff_sp_from_msp(r: ReductionOutput, joiner_budget: int | None = None) -> ReductionOutput:
    """Join the strings with ``alpha gamma_i^(3K-2) alpha`` connectors.

    ``joiner_budget`` caps the number of fresh connector symbols.
    """
    require_stage(r, Family.FF, Stage.MSP)
    return _connect(r, joiner_budget)


def _connect(r: ReductionOutput, joiner_budget: int | None) -> ReductionOutput:
    n = len(r.instance)
    if joiner_budget is not None:
        require(n - 1 <= joiner_budget,
                f"{n - 1} connectors needed but joiner budget is {joiner_budget}")
    blocks, specials = connector_blocks(n, r.K)
    return join_single(r, Stage.SP, interleave(n, blocks), specials)


def ff_codeword(i: int, t: int) -> str:
    return "0" + "1" * i + "0" + "1" * (t - 3 - i) + "0"


def ff_min_t(f: Formula3SAT3) -> int:
    return 3 * f.m + 2 * f.n_vars + 6


def ff_msp_binary_from_3sat3(f: Formula3SAT3, t: int | None = None) -> ReductionOutput:
    checked_formula(f)
    lo = ff_min_t(f)
    t = lo if t is None else t
    require(t >= lo, f"t = {t} violates t >= 3m+2n+6 = {lo}")
    table = _table(f, 2, zero="0", one="1")
    order = [*table.literals.values(), *table.variables.values()]
    book = {s: ff_codeword(i, t) for i, s in enumerate(order, 2)}
    assert len(book) <= t - 6
    strings = [(("clause", i), _clause_tokens(f, table, i), None) for i in range(1, f.m + 1)]
    for v in range(1, f.n_vars + 1):
        p, q, k = occurrence_triple(f, v)
        cp, cq, ck = table.literals[p], table.literals[q], table.literals[k]
        x1, x2 = table.variables[v, 1], table.variables[v, 2]
        strings += [
            (("enforcer", v, 1), [x1, x2, "1", ck, ck, "1"], None),
            (("enforcer", v, 2), ["1", cp, cp, "1", x1, x2, "0"], None),
            (("enforcer", v, 3), ["0", x1, x2, "1", cq, cq, "1"], None),
        ]
    strings += [(("forbidden", 1), None, "000"), (("forbidden", 2), None, "010")]
    return binary_output(f, Family.FF, CollisionKind.FACTOR, 2 * t + 1, table, book,
                         strings, 2, {"t": t})


def ff_delimiter(i: int, K: int) -> str:
    return "1" * i + "0" + "1" * (K - 1 - i)


def ff_sp_binary(r: ReductionOutput) -> ReductionOutput:
    """``u1 d0 1^K d0^R u2 d1 d1^R u3 ... u_N``."""
    require_stage(r, Family.FF, Stage.MSP_BINARY)
    K = r.K
    N = len(r.instance)
    require(2 * N <= K, f"string count N = {N} violates N <= K/2 = {K / 2}")
    blocks = []
    for i in range(N - 1):
        d = ff_delimiter(i, K)
        block = [d, "1" * K, mirror(d)] if i == 0 else [d, mirror(d)]
        blocks.append([list(p) for p in block])
    return join_single(r, Stage.SP_BINARY, interleave(N, blocks), {})


# -- witness rules -----------------------------------------------------------

def clause_cuts(size: int, sel: int) -> list[int]:
    """Cuts of ``cc 0 cc [0 cc]`` isolating the doubled literal ``sel``."""
    if size == 2:
        return [2] if sel == 1 else [3]
    return {1: [2, 5], 2: [3, 5], 3: [3, 6]}[sel]


_ENFORCER = {
    # x1 x2 1 ck ck 1
    1: {False: [2, 4], True: [3]},
    # 1 cp cp 1 x3 x3 0 x3 x3 1 x1 x2 0
    2: {False: [3, 6, 9, 11], True: [2, 4, 7, 10]},
    # 0 x1 x2 1 x3 x3 0 x3 x3 1 cq cq 1
    3: {False: [2, 4, 7, 10], True: [3, 6, 9, 11]},
}

_ENFORCER_BIN = {
    # x1 x2 1 ck ck 1
    1: {False: [2, 4], True: [3]},
    # 1 cp cp 1 x1 x2 0
    2: {False: [3, 5], True: [2, 4]},
    # 0 x1 x2 1 cq cq 1
    3: {False: [2, 4], True: [3, 5]},
}


def ff_token_cuts(role: tuple, f: Formula3SAT3, a, selected, binary: bool) -> list[int]:
    if role[0] == "clause":
        i = role[1]
        return clause_cuts(len(f.clauses[i - 1]), selected[i])
    if role[0] == "enforcer":
        rules = _ENFORCER_BIN if binary else _ENFORCER
        return rules[role[2]][a[role[1] - 1]]
    return []
