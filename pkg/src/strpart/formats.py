"""Line-based text formats for instances and partitions, plus single-record FASTA.

Instance::

    # comment
    kind: factor
    K: 2
    alphabet: a b c          (optional)
    string: a b a c
    string01: 0110           (binary shorthand)

Partition: one ``cuts: c1 c2 ...`` line per string, possibly empty.
"""
from __future__ import annotations

from .strcore import Alphabet, AlphabetError, CollisionKind, Instance, Partition, PartitionError


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _fields(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise FormatError(f"expected 'key: value', got {line!r}", lineno)
        yield lineno, key.strip(), value.strip()


def parse_instance(text: str) -> Instance:
    kind = K = alphabet = None
    strings: list[tuple[int, list[str]]] = []
    for lineno, key, value in _fields(text):
        if key == "kind":
            try:
                kind = CollisionKind.parse(value)
            except ValueError:
                raise FormatError(f"unknown kind {value!r}", lineno) from None
        elif key == "K":
            try:
                K = int(value)
            except ValueError:
                raise FormatError(f"K must be an integer, got {value!r}", lineno) from None
            if K < 1:
                raise FormatError("K must be positive", lineno)
        elif key == "alphabet":
            try:
                alphabet = Alphabet(value.split())
            except AlphabetError as exc:
                raise FormatError(str(exc), lineno) from None
        elif key == "string":
            if not value:
                raise FormatError("empty string", lineno)
            strings.append((lineno, value.split()))
        elif key == "string01":
            if not value or set(value) - {"0", "1"}:
                raise FormatError("string01 must be a non-empty 0/1 word", lineno)
            strings.append((lineno, list(value)))
        else:
            raise FormatError(f"unknown key {key!r}", lineno)
    if kind is None:
        raise FormatError("missing 'kind:' line")
    if K is None:
        raise FormatError("missing 'K:' line")
    if not strings:
        raise FormatError("no 'string:' lines")
    if alphabet is None:
        try:
            alphabet = Alphabet.from_tokens(*(toks for _, toks in strings))
        except AlphabetError as exc:
            raise FormatError(str(exc)) from None
    encoded = []
    for lineno, toks in strings:
        try:
            encoded.append(alphabet.encode(toks))
        except AlphabetError as exc:
            raise FormatError(str(exc), lineno) from None
    return Instance(kind, K, alphabet, tuple(encoded))


def render_instance(inst: Instance, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines += [f"kind: {inst.kind.value}", f"K: {inst.K}"]
    if inst.alphabet.is_binary:
        lines += [f"string01: {w}" for w in inst.strings]
    else:
        lines.append("alphabet: " + " ".join(inst.alphabet.symbols))
        lines += ["string: " + " ".join(inst.alphabet.decode(w)) for w in inst.strings]
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> Partition:
    cuts = []
    for lineno, key, value in _fields(text):
        if key != "cuts":
            raise FormatError(f"unknown key {key!r}", lineno)
        try:
            cuts.append(tuple(int(x) for x in value.split()))
        except ValueError:
            raise FormatError("cut points must be integers", lineno) from None
    if not cuts:
        raise FormatError("no 'cuts:' lines")
    return Partition(tuple(cuts))


def render_partition(p: Partition) -> str:
    return "".join(("cuts: " + " ".join(map(str, c))).rstrip() + "\n" for c in p.cuts)


def parse_fasta(text: str, alphabet: str = "ACGT") -> tuple[str, str]:
    """(header, sequence) of a single-record FASTA text, upper-cased."""
    header = None
    seq: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(";"):
            continue
        if line.startswith(">"):
            if header is not None:
                raise FormatError("more than one FASTA record", lineno)
            header = line[1:].strip()
            continue
        if header is None:
            raise FormatError("sequence data before '>' header", lineno)
        chunk = line.upper()
        bad = set(chunk) - set(alphabet)
        if bad:
            raise FormatError(f"symbols {''.join(sorted(bad))!r} outside {alphabet}", lineno)
        seq.append(chunk)
    if header is None:
        raise FormatError("missing '>' header")
    if not seq:
        raise FormatError("empty sequence")
    return header, "".join(seq)


__all__ = ["FormatError", "parse_instance", "render_instance", "parse_partition",
           "render_partition", "parse_fasta", "PartitionError"]
