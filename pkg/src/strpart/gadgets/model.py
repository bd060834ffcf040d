from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Mapping, Sequence

from ..satkit import Formula3SAT3, require_3sat3
from ..strcore import Instance


class ReductionError(ValueError):
    """Invalid input to a reduction or a violated size precondition."""


class Family(enum.Enum):
    EF = "ef"
    FF = "ff"
    PF = "pf"


class Stage(enum.Enum):
    MSP = "msp"
    SP = "sp"
    MSP_BINARY = "msp-bin"
    SP_BINARY = "sp-bin"

    @property
    def binary(self) -> bool:
        return self in (Stage.MSP_BINARY, Stage.SP_BINARY)

    @property
    def single(self) -> bool:
        return self in (Stage.SP, Stage.SP_BINARY)


def lit_name(i: int, j: int) -> str:
    return f"c_{i}^{j}"


def var_name(v: int, sup: int | None = None) -> str:
    return f"x_{v}" if sup is None else f"x_{v}^{sup}"


@dataclass(frozen=True)
class SymbolTable:
    """Gadget roles to symbol names.

    ``literals`` maps 1-based (clause, position) to the literal symbol,
    ``variables`` maps (variable, superscript) to the variable symbol
    (superscript 0 when a family uses one symbol per variable), and
    ``specials`` maps role names such as ``bminus`` or ``connector`` to
    symbols.
    """

    literals: Mapping[tuple[int, int], str]
    variables: Mapping[tuple[int, int], str]
    specials: Mapping[str, str] = field(default_factory=dict)

    def symbols(self) -> list[str]:
        return [*self.literals.values(), *self.variables.values(), *self.specials.values()]

    def extended(self, **specials: str) -> SymbolTable:
        return SymbolTable(self.literals, self.variables, {**self.specials, **specials})

    def to_json(self) -> dict:
        return {
            "literals": {f"{i},{j}": s for (i, j), s in self.literals.items()},
            "variables": {f"{v},{k}": s for (v, k), s in self.variables.items()},
            "specials": dict(self.specials),
        }


# Where a piece of the output lives: (string index, start, end).
Span = tuple[int, int, int]


@dataclass(frozen=True)
class ReductionOutput:
    instance: Instance
    table: SymbolTable
    source: Formula3SAT3
    family: Family
    stage: Stage
    # literal (clause, position) -> span whose super-selection means "literal selected"
    literal_markers: Mapping[tuple[int, int], Span]
    params: Mapping[str, object]
    codebook: Mapping[str, str] | None = None
    # multi-string stages: gadget role of every string, e.g. ("clause", 3),
    # ("enforcer", v, k), ("forbidden", k), ("prefix-closure", k)
    roles: tuple[tuple, ...] | None = None
    # multi-string stages: source-symbol sequence of each string (None = no structure)
    tokens: tuple[tuple[str, ...] | None, ...] | None = None
    # single-string stages: the multi-string stage that was joined
    parent: ReductionOutput | None = None
    # single-string stages: parent string index -> (start, end) in the joined string
    layout: Mapping[int, tuple[int, int]] | None = None
    # single-string stages: cut points contributed by joiners, absolute offsets
    joiner_cuts: tuple[int, ...] = ()
    # single-string stages: (start, end) of every joiner, for audits
    joiners: tuple[tuple[int, int], ...] = ()

    @property
    def K(self) -> int:
        return self.instance.K

    def token_offsets(self, s: int) -> list[int]:
        """Offsets of each token boundary of string ``s`` in the output string."""
        toks = self.tokens[s]
        if self.codebook is None:
            return list(range(len(toks) + 1))
        book = self.codebook
        return [0, *accumulate(len(book.get(t, t)) for t in toks)]


def checked_formula(f: Formula3SAT3) -> Formula3SAT3:
    try:
        require_3sat3(f)
    except ValueError as exc:
        raise ReductionError(f"not a 3SAT(3) formula: {exc}") from None
    return f


def occurrence_triple(f: Formula3SAT3, v: int):
    """(first positive, second positive, negated) occurrence of variable ``v``."""
    pos, neg = f.occurrences(v)
    return pos[0], pos[1], neg[0]


def require_stage(r: ReductionOutput, family: Family, stage: Stage) -> None:
    if r.family is not family or r.stage is not stage:
        raise ReductionError(
            f"expected a {family.value}/{stage.value} reduction, got "
            f"{r.family.value}/{r.stage.value}")


def token_markers(tokens: Sequence[Sequence[str] | None], table: SymbolTable,
                  width: int) -> dict[tuple[int, int], Span]:
    """Markers at the first clause-string occurrence of each literal symbol.

    ``width`` is the number of consecutive literal tokens forming the marker
    (1 for a lone literal letter, 2 for a doubled one).
    """
    markers = {}
    for (i, j), name in table.literals.items():
        for s, toks in enumerate(tokens):
            if toks is None:
                continue
            try:
                k = list(toks).index(name)
            except ValueError:
                continue
            markers[i, j] = (s, k, k + width)
            break
    return markers


def shift_markers(markers: Mapping[tuple[int, int], Span],
                  layout: Mapping[int, tuple[int, int]]) -> dict[tuple[int, int], Span]:
    out = {}
    for key, (s, a, b) in markers.items():
        start = layout[s][0]
        out[key] = (0, start + a, start + b)
    return out


def map_markers(markers: Mapping[tuple[int, int], Span],
                r_offsets) -> dict[tuple[int, int], Span]:
    """Token-level markers to output-level offsets."""
    out = {}
    for key, (s, a, b) in markers.items():
        off = r_offsets(s)
        out[key] = (s, off[a], off[b])
    return out
