"""Construction helpers shared by the three gadget families."""
from __future__ import annotations

from typing import Mapping, Sequence

from ..strcore import Alphabet, CollisionKind, Instance
from .model import (Family, ReductionError, ReductionOutput, Stage, SymbolTable,
                    shift_markers, token_markers)

Tokens = Sequence[str]


def msp_output(f, family: Family, kind: CollisionKind, K: int, table: SymbolTable,
               strings: Sequence[tuple[tuple, Tokens]], marker_width: int,
               params: Mapping | None = None) -> ReductionOutput:
    """Unbounded-alphabet multi-string stage from (role, token list) pairs."""
    roles = tuple(role for role, _ in strings)
    tokens = tuple(tuple(t) for _, t in strings)
    alphabet = Alphabet(table.symbols())
    inst = Instance.from_tokens(kind, K, tokens, alphabet)
    markers = token_markers(tokens, table, marker_width)
    return ReductionOutput(inst, table, f, family, Stage.MSP, markers,
                           {"K": K, **(params or {})}, roles=roles, tokens=tokens)


def binary_output(f, family: Family, kind: CollisionKind, K: int, table: SymbolTable,
                  codebook: Mapping[str, str], strings: Sequence[tuple[tuple, Tokens | None, str | None]],
                  marker_width: int, params: Mapping) -> ReductionOutput:
    """Binary multi-string stage.

    ``strings`` holds (role, tokens, raw) triples: structured strings give
    tokens mapped through ``codebook`` (tokens missing from it map to
    themselves), raw bitstrings give ``tokens=None``.
    """
    roles, toks, bits = [], [], []
    for role, t, raw in strings:
        roles.append(role)
        if t is None:
            toks.append(None)
            bits.append(raw)
        else:
            toks.append(tuple(t))
            bits.append("".join(codebook.get(x, x) for x in t))
    inst = Instance(kind, K, Alphabet.binary(), tuple(bits))
    out = ReductionOutput(inst, table, f, family, Stage.MSP_BINARY, {},
                          {"K": K, **params}, codebook=dict(codebook),
                          roles=tuple(roles), tokens=tuple(toks))
    markers = {}
    for key, (s, a, b) in token_markers(out.tokens, table, marker_width).items():
        off = out.token_offsets(s)
        markers[key] = (s, off[a], off[b])
    object.__setattr__(out, "literal_markers", markers)
    return out


def join_single(parent: ReductionOutput, stage: Stage, segments: Sequence,
                new_specials: Mapping[str, str], params: Mapping | None = None,
                K: int | None = None) -> ReductionOutput:
    """Concatenate parent strings and joiner blocks into one string.

    ``segments`` lists either a parent string index or a joiner block given
    as a list of pieces (each a token list).  Joiner piece boundaries become
    fixed witness cuts.
    """
    palpha = parent.instance.alphabet
    binary = palpha.is_binary and stage is Stage.SP_BINARY
    if binary:
        alphabet = palpha
    else:
        alphabet = Alphabet([*palpha.symbols, *new_specials.values()])
    tokens: list[str] = []
    layout: dict[int, tuple[int, int]] = {}
    cuts: list[int] = []
    joiners: list[tuple[int, int]] = []
    for seg in segments:
        start = len(tokens)
        if isinstance(seg, int):
            tokens += palpha.decode(parent.instance.strings[seg])
            layout[seg] = (start, len(tokens))
        else:
            for piece in seg:
                cuts.append(len(tokens))
                tokens += list(piece)
            cuts.append(len(tokens))
            joiners.append((start, len(tokens)))
    total = len(tokens)
    # parent boundaries are cuts too
    for a, b in layout.values():
        cuts += [a, b]
    joiner_cuts = tuple(sorted({c for c in cuts if 0 < c < total}))
    inst = Instance(parent.instance.kind, parent.K if K is None else K, alphabet,
                    (alphabet.encode(tokens),))
    table = parent.table.extended(**new_specials)
    return ReductionOutput(
        inst, table, parent.source, parent.family, stage,
        shift_markers(parent.literal_markers, layout),
        {**parent.params, **(params or {})}, codebook=parent.codebook,
        parent=parent, layout=layout, joiner_cuts=joiner_cuts, joiners=tuple(joiners))


def connector_blocks(n_strings: int, K: int) -> tuple[list[list[list[str]]], dict[str, str]]:
    """``alpha gamma_i^(3K-2) alpha`` connectors split as the forced pieces."""
    specials = {"connector": "alpha"}
    blocks = []
    for i in range(1, n_strings):
        g = f"gamma_{i}"
        specials[f"connector_{i}"] = g
        blocks.append([["alpha", *[g] * (K - 1)], [g] * K, [*[g] * (K - 1), "alpha"]])
    return blocks, specials


def interleave(n: int, blocks: Sequence) -> list:
    segs: list = [0]
    for i in range(1, n):
        segs += [blocks[i - 1], i]
    return segs


def require(cond: bool, message: str) -> None:
    if not cond:
        raise ReductionError(message)
