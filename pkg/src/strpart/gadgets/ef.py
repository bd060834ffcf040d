"""Equality-free reductions: multiple strings, one string, binary alphabet."""
from __future__ import annotations

import math

from ..satkit import Formula3SAT3
from ..strcore import CollisionKind
from .common import binary_output, interleave, join_single, msp_output, require
from .model import (Family, ReductionOutput, Stage, SymbolTable,
                    checked_formula, lit_name, occurrence_triple, require_stage, var_name)
from .words import bin_, delimiter_pieces


def ef_msp_from_3sat3(f: Formula3SAT3) -> ReductionOutput:
    """Clause strings ``c1 - c2 [- c3]``, one enforcer per variable, forbidden ``-`` and ``+``."""
    checked_formula(f)
    lits = {(i, j): lit_name(i, j) for i, c in enumerate(f.clauses, 1) for j in range(1, len(c) + 1)}
    variables = {(v, 0): var_name(v) for v in range(1, f.n_vars + 1)}
    table = SymbolTable(lits, variables, {"bminus": "bminus", "bplus": "bplus"})
    strings = []
    for i, c in enumerate(f.clauses, 1):
        toks = [lits[i, 1]]
        for j in range(2, len(c) + 1):
            toks += ["bminus", lits[i, j]]
        strings.append((("clause", i), toks))
    for v in range(1, f.n_vars + 1):
        p, q, k = occurrence_triple(f, v)
        cp, cq, ck, x = lits[p], lits[q], lits[k], variables[v, 0]
        strings.append((("enforcer", v, 1), [cp, "bplus", ck, x, ck, x, ck, "bplus", cq]))
    strings.append((("forbidden", 1), ["bminus"]))
    strings.append((("forbidden", 2), ["bplus"]))
    return msp_output(f, Family.EF, CollisionKind.EQUALITY, 2, table, strings, 1)


def ef_sp_from_msp(r: ReductionOutput) -> ReductionOutput:
    """``bdot^4 bminus w1 d1 bdot bdot d1 w2 ...`` over a fresh joiner per gap."""
    require_stage(r, Family.EF, Stage.MSP)
    n = len(r.instance)
    specials = {"bdot": "bdot"}
    blocks = []
    for i in range(1, n):
        d = f"d_{i}"
        specials[f"joiner_{i}"] = d
        blocks.append([[d, "bdot"], ["bdot", d]])
    prefix = [["bdot", "bdot"], ["bdot"], ["bdot", "bminus"]]
    return join_single(r, Stage.SP, [prefix, *interleave(n, blocks)], specials)


def chain_delta(n_symbols: int) -> int:
    """Smallest codeword length allowed when the binary stage is chained into one string."""
    return max(9, math.ceil(3 * math.log2(n_symbols + 1)))


def _min_delta(n_symbols: int) -> int:
    return max(1, math.ceil(math.log2(n_symbols)))


def ef_binary_encode(r: ReductionOutput, delta: int | None = None,
                     chainable: bool = False) -> ReductionOutput:
    """Map every symbol to a length-``delta`` codeword and add the prefix set.

    With ``chainable`` the codewords all start with 0 and ``delta`` defaults
    to (and must reach) the bound needed by :func:`ef_sp_binary`.
    """
    require_stage(r, Family.EF, Stage.MSP)
    table = r.table
    order = [*table.literals.values(), *table.variables.values(), *table.specials.values()]
    n = len(order)
    if chainable:
        lo = chain_delta(n)
        delta = lo if delta is None else delta
        require(delta >= lo, f"delta = {delta} violates delta >= max(9, ceil(3 log2(n+1))) = {lo}")
        require(n <= 2 ** (delta - 1), f"{n} symbols exceed 2^(delta-1) = {2 ** (delta - 1)}")
        book = {s: "0" + format(k, f"0{delta - 1}b") for k, s in enumerate(order)}
    else:
        lo = _min_delta(n)
        delta = lo if delta is None else delta
        require(delta >= lo, f"delta = {delta} violates delta >= ceil(log2 |alphabet|) = {lo}")
        book = {s: format(k, f"0{delta}b") for k, s in enumerate(order)}
    codes = list(book.values())

    short = {c[:i] for c in codes for i in range(1, delta)}
    hat = short | {c + p for c in codes for p in short}
    hat = sorted(hat, key=lambda s: (len(s), s))
    bound = (3 * n * n + n) * (delta - 1) * delta // 2
    hat_len = sum(map(len, hat))
    require(hat_len <= bound, f"||W^|| = {hat_len} exceeds (3n^2+n)(delta-1)delta/2 = {bound}")

    strings = [(role, toks, None) for role, toks in zip(r.roles, r.tokens)]
    strings += [(("prefix-closure", k), None, s) for k, s in enumerate(hat, 1)]
    n_strings = len(strings)
    params = {"delta": delta, "chainable": chainable, "n_symbols": n}
    if chainable:
        cap = (n * n + n) * (delta - 1)
        require(n_strings <= cap, f"string count {n_strings} exceeds (n^2+n)(delta-1) = {cap}")
    return binary_output(r.source, Family.EF, CollisionKind.EQUALITY, 2 * delta, table,
                         book, strings, 1, params)


def ef_sp_binary(r: ReductionOutput) -> ReductionOutput:
    """``w1 d1 w2 d2 ... w_l`` with the padded-string delimiters ``d_j``."""
    require_stage(r, Family.EF, Stage.MSP_BINARY)
    delta = r.params["delta"]
    n = r.params["n_symbols"]
    require(bool(r.params.get("chainable")),
            "binary stage was not encoded with chainable codewords (leading 0, delta >= max(9, ceil(3 log2(n+1))))")
    lo = chain_delta(n)
    require(delta >= lo, f"delta = {delta} violates delta >= {lo}")
    ell = len(r.instance)
    cap = (n * n + n) * (delta - 1)
    require(ell <= cap, f"string count {ell} exceeds (n^2+n)(delta-1) = {cap}")
    K = r.K
    require(len(bin_(max(ell - 1, 1))) <= delta - 1,
            f"delimiter index {ell - 1} needs more than delta-1 = {delta - 1} bits")
    blocks = [[list(p) for p in delimiter_pieces(j, K)] for j in range(1, ell)]
    return join_single(r, Stage.SP_BINARY, interleave(ell, blocks), {})


# -- witness rules -----------------------------------------------------------

def clause_cuts(size: int, sel: int) -> list[int]:
    """Token cuts of ``c1 s c2 [s c3]`` leaving literal ``sel`` alone."""
    if size == 2:
        return [1] if sel == 1 else [2]
    return {1: [1, 3], 2: [2, 3], 3: [2, 4]}[sel]


def enforcer_cuts(value: bool) -> list[int]:
    # cp + ck x ck x ck + cq
    # false: [cp][+ck][x ck][x][ck+][cq]   true: [cp+][ck x][ck][x ck][+cq]
    return [2, 4, 5, 7] if value else [1, 3, 5, 6, 8]


def ef_token_cuts(role: tuple, f: Formula3SAT3, a, selected) -> list[int]:
    if role[0] == "clause":
        i = role[1]
        return clause_cuts(len(f.clauses[i - 1]), selected[i])
    if role[0] == "enforcer":
        return enforcer_cuts(a[role[1] - 1])
    return []
