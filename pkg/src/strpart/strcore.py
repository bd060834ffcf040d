"""Strings, partitions and collision predicates.

Strings are stored as plain Python ``str`` objects with one character per
symbol.  An :class:`Alphabet` owns the translation between symbol names
(arbitrary whitespace-free tokens such as ``c_1^2`` or ``bminus``) and
those characters.  When every symbol name is a single character the name
*is* the code, so binary and DNA instances are readable as-is.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    """Base class for malformed strings, alphabets, cut lists."""


class MalformedCutsError(PartitionError):
    pass


class AlphabetError(PartitionError):
    pass


# Private-use planes; enough room for any desk-scale gadget alphabet.
_PUA_BASES = (0xF0000, 0x100000)
_PUA_SPAN = 0xFFFE


def _code_for(index: int) -> str:
    plane, offset = divmod(index, _PUA_SPAN)
    if plane >= len(_PUA_BASES):
        raise AlphabetError(f"alphabet too large ({index + 1} symbols)")
    return chr(_PUA_BASES[plane] + offset)


class CollisionKind(enum.Enum):
    EQUALITY = "equality"
    PREFIX = "prefix"
    SUFFIX = "suffix"
    FACTOR = "factor"

    @classmethod
    def parse(cls, text: str | CollisionKind) -> CollisionKind:
        if isinstance(text, CollisionKind):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise PartitionError(f"unknown collision kind {text!r}") from None

    def mirrored(self) -> CollisionKind:
        if self is CollisionKind.PREFIX:
            return CollisionKind.SUFFIX
        if self is CollisionKind.SUFFIX:
            return CollisionKind.PREFIX
        return self


class Alphabet:
    """Ordered set of symbol names with a fixed character encoding."""

    __slots__ = ("symbols", "_encode", "_decode", "compact")

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        if not symbols:
            raise AlphabetError("alphabet must contain at least one symbol")
        for s in symbols:
            if not s or any(c.isspace() for c in s) or not s.isprintable():
                raise AlphabetError(f"invalid symbol name {s!r}")
        if len(set(symbols)) != len(symbols):
            raise AlphabetError("symbol names must be pairwise distinct")
        self.symbols = symbols
        self.compact = all(len(s) == 1 for s in symbols)
        if self.compact:
            codes = symbols
        else:
            codes = tuple(_code_for(i) for i in range(len(symbols)))
        self._encode = dict(zip(symbols, codes))
        self._decode = dict(zip(codes, symbols))

    @classmethod
    def binary(cls) -> Alphabet:
        return cls(("0", "1"))

    @classmethod
    def from_tokens(cls, *token_seqs: Iterable[str]) -> Alphabet:
        """Alphabet of the distinct tokens in order of first appearance."""
        seen: dict[str, None] = {}
        for seq in token_seqs:
            for tok in seq:
                seen.setdefault(tok, None)
        return cls(seen)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, name: object) -> bool:
        return name in self._encode

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.symbols)!r})"

    @property
    def is_binary(self) -> bool:
        return set(self.symbols) == {"0", "1"}

    def code(self, name: str) -> str:
        try:
            return self._encode[name]
        except KeyError:
            raise AlphabetError(f"symbol {name!r} not in alphabet") from None

    def encode(self, tokens: Iterable[str]) -> str:
        enc = self._encode
        try:
            return "".join(enc[t] for t in tokens)
        except KeyError as exc:
            raise AlphabetError(f"symbol {exc.args[0]!r} not in alphabet") from None

    def decode(self, s: str) -> list[str]:
        dec = self._decode
        try:
            return [dec[c] for c in s]
        except KeyError as exc:
            raise AlphabetError(f"code {exc.args[0]!r} not in alphabet") from None

    def render(self, s: str) -> str:
        """Human readable form: bare for compact alphabets, space separated otherwise."""
        if self.compact:
            return s
        return " ".join(self.decode(s))

    def check(self, s: str) -> None:
        dec = self._decode
        for c in s:
            if c not in dec:
                raise AlphabetError(f"code {c!r} not in alphabet")


def mirror(s: str) -> str:
    return s[::-1]


def pieces_of(w: str, cuts: Sequence[int]) -> list[str]:
    """Split ``w`` at the interior cut points ``cuts``.

    >>> pieces_of("mississippi", [1, 3, 5, 7, 9])
    ['m', 'is', 'si', 'ss', 'ip', 'pi']
    """
    _check_cuts(len(w), cuts)
    bounds = [0, *cuts, len(w)]
    return [w[a:b] for a, b in zip(bounds, bounds[1:])]


def _check_cuts(n: int, cuts: Sequence[int]) -> None:
    prev = 0
    for c in cuts:
        if not isinstance(c, int) or isinstance(c, bool):
            raise MalformedCutsError(f"cut point {c!r} is not an integer")
        if c <= prev or c >= n:
            raise MalformedCutsError(
                f"cut points must be strictly increasing within (0, {n}); got {list(cuts)}")
        prev = c


def collides(kind: CollisionKind, a: str, b: str) -> bool:
    """Symmetric collision predicate between two non-empty pieces."""
    if kind is CollisionKind.EQUALITY:
        return a == b
    if kind is CollisionKind.PREFIX:
        return a.startswith(b) or b.startswith(a)
    if kind is CollisionKind.SUFFIX:
        return a.endswith(b) or b.endswith(a)
    if kind is CollisionKind.FACTOR:
        return a in b or b in a
    raise TypeError(f"not a CollisionKind: {kind!r}")


def substr_closure(p: str) -> Counter:
    """All non-empty contiguous substrings of ``p``, with multiplicity."""
    n = len(p)
    return Counter(p[i:j] for i in range(n) for j in range(i + 1, n + 1))


@dataclass(frozen=True)
class Instance:
    """An X-free K-partition question over one or more strings."""

    kind: CollisionKind
    K: int
    alphabet: Alphabet
    strings: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", CollisionKind.parse(self.kind))
        object.__setattr__(self, "strings", tuple(self.strings))
        if not isinstance(self.K, int) or self.K < 1:
            raise PartitionError(f"K must be a positive integer, got {self.K!r}")
        if not self.strings:
            raise PartitionError("instance has no strings")
        for i, w in enumerate(self.strings):
            if not w:
                raise PartitionError(f"string {i} is empty")
            self.alphabet.check(w)

    @classmethod
    def from_tokens(cls, kind, K: int, token_strings: Sequence[Sequence[str]],
                    alphabet: Alphabet | None = None) -> Instance:
        if alphabet is None:
            alphabet = Alphabet.from_tokens(*token_strings)
        return cls(CollisionKind.parse(kind), K, alphabet,
                   tuple(alphabet.encode(t) for t in token_strings))

    @classmethod
    def from_text(cls, kind, K: int, strings: Sequence[str] | str) -> Instance:
        """Instance over single-character symbols, e.g. ``from_text("factor", 2, "mississippi")``."""
        if isinstance(strings, str):
            strings = [strings]
        alphabet = Alphabet(sorted(set("".join(strings))))
        return cls(CollisionKind.parse(kind), K, alphabet, tuple(strings))

    @property
    def total_length(self) -> int:
        return sum(map(len, self.strings))

    def __len__(self) -> int:
        return len(self.strings)

    def render(self, i: int) -> str:
        return self.alphabet.render(self.strings[i])


@dataclass(frozen=True)
class Partition:
    """Interior cut points for each string of an instance."""

    cuts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cuts", tuple(tuple(c) for c in self.cuts))

    @classmethod
    def trivial(cls, n_strings: int) -> Partition:
        return cls(((),) * n_strings)

    @classmethod
    def from_pieces(cls, pieces: Sequence[Sequence[str]]) -> Partition:
        out = []
        for plist in pieces:
            pos, cuts = 0, []
            for p in plist[:-1]:
                pos += len(p)
                cuts.append(pos)
            out.append(tuple(cuts))
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.cuts)

    def pieces(self, inst: Instance) -> list[list[str]]:
        self._check_shape(inst)
        return [pieces_of(w, c) for w, c in zip(inst.strings, self.cuts)]

    def spans(self, inst: Instance) -> Iterator[tuple[int, int, int]]:
        """Yield ``(string_index, start, end)`` for every piece, in scan order."""
        self._check_shape(inst)
        for si, (w, cuts) in enumerate(zip(inst.strings, self.cuts)):
            _check_cuts(len(w), cuts)
            bounds = (0, *cuts, len(w))
            for a, b in zip(bounds, bounds[1:]):
                yield si, a, b

    def boundaries(self, i: int, length: int) -> frozenset[int]:
        return frozenset((0, *self.cuts[i], length))

    def super_selected(self, inst: Instance, i: int, start: int, end: int) -> bool:
        """True iff ``w_i[start:end]`` is a concatenation of consecutive pieces."""
        b = self.boundaries(i, len(inst.strings[i]))
        return start in b and end in b

    def mirrored(self, inst: Instance) -> Partition:
        out = []
        for w, cuts in zip(inst.strings, self.cuts):
            n = len(w)
            out.append(tuple(sorted(n - c for c in cuts)))
        return Partition(tuple(out))

    def _check_shape(self, inst: Instance) -> None:
        if len(self.cuts) != len(inst.strings):
            raise MalformedCutsError(
                f"partition has {len(self.cuts)} cut lists for {len(inst.strings)} strings")


class ViolationType(enum.Enum):
    LENGTH = "length"
    COLLISION = "collision"


@dataclass(frozen=True)
class Violation:
    type: ViolationType
    # (string index, start, end) of the offending piece, and of its partner for collisions
    location: tuple[int, int, int]
    partner: tuple[int, int, int] | None = None
    piece: str = ""
    partner_piece: str = ""

    def describe(self, alphabet: Alphabet | None = None) -> str:
        r = alphabet.render if alphabet is not None else (lambda s: s)
        si, a, b = self.location
        if self.type is ViolationType.LENGTH:
            return f"piece {r(self.piece)!r} at string {si} [{a}:{b}] longer than K"
        pj, pa, pb = self.partner
        return (f"piece {r(self.piece)!r} at string {si} [{a}:{b}] collides with "
                f"{r(self.partner_piece)!r} at string {pj} [{pa}:{pb}]")


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def first_collision(self) -> Violation | None:
        for v in self.violations:
            if v.type is ViolationType.COLLISION:
                return v
        return None

    def __bool__(self) -> bool:
        return self.valid


def verify_partition(inst: Instance, p: Partition) -> VerifyReport:
    """Check lengths and pairwise collision-freeness of all selected pieces.

    Pieces are scanned string by string, left to right; each piece is
    checked against every earlier piece and a collision is reported against
    the earliest partner.
    """
    from .solve.index import CollisionIndex

    index = CollisionIndex(inst.kind)
    seen: list[tuple[str, tuple[int, int, int]]] = []
    violations = []
    for loc in p.spans(inst):
        si, a, b = loc
        piece = inst.strings[si][a:b]
        if b - a > inst.K:
            violations.append(Violation(ViolationType.LENGTH, loc, piece=piece))
        if index.would_collide(piece):
            for other, oloc in seen:
                if collides(inst.kind, piece, other):
                    violations.append(Violation(ViolationType.COLLISION, loc, oloc,
                                                piece, other))
                    break
        index.add(piece)
        seen.append((piece, loc))
    return VerifyReport(not violations, tuple(violations))


def mirror_instance(inst: Instance) -> Instance:
    """Reverse every string; prefix and suffix kinds swap."""
    return Instance(inst.kind.mirrored(), inst.K, inst.alphabet,
                    tuple(mirror(w) for w in inst.strings))
