import pytest

from strpart import CollisionKind, Instance, Partition
from strpart.formats import (FormatError, parse_fasta, parse_instance, parse_partition,
                             render_instance, render_partition)


def test_instance_round_trip_named_symbols():
    text = "# demo\nkind: prefix\nK: 3\nalphabet: c_1^1 bminus x_1\nstring: c_1^1 bminus x_1\nstring: x_1\n"
    inst = parse_instance(text)
    assert inst.kind is CollisionKind.PREFIX and inst.K == 3 and len(inst) == 2
    assert parse_instance(render_instance(inst, comment="again")) == inst


def test_binary_shorthand():
    inst = parse_instance("kind: factor\nK: 2\nstring01: 0110\nstring01: 1\n")
    assert inst.strings == ("0110", "1")
    out = render_instance(inst)
    assert "string01: 0110" in out and parse_instance(out) == inst


@pytest.mark.parametrize("text,msg", [
    ("K: 2\nstring: a\n", "kind"),
    ("kind: factor\nstring: a\n", "K"),
    ("kind: factor\nK: 2\n", "string"),
    ("kind: factor\nK: zero\nstring: a\n", "integer"),
    ("kind: factor\nK: 0\nstring: a\n", "positive"),
    ("kind: factor\nK: 2\nstring01: 012\n", "0/1"),
    ("kind: factor\nK: 2\nalphabet: a\nstring: a b\n", "not in alphabet"),
    ("kind: factor\nK: 2\ncolour: red\n", "unknown key"),
    ("kind: factor\nK 2\n", "key: value"),
])
def test_instance_errors(text, msg):
    with pytest.raises(FormatError, match=msg):
        parse_instance(text)


def test_error_carries_line():
    with pytest.raises(FormatError) as exc:
        parse_instance("kind: factor\n\nK: x\n")
    assert exc.value.line == 3


def test_partition_round_trip():
    p = Partition(((1, 3), (), (2,)))
    text = render_partition(p)
    assert text == "cuts: 1 3\ncuts:\ncuts: 2\n"
    assert parse_partition(text) == p
    with pytest.raises(FormatError):
        parse_partition("cuts: 1 b\n")
    with pytest.raises(FormatError):
        parse_partition("# nothing\n")


def test_fasta():
    assert parse_fasta(">seq one\nacg\nTT\n") == ("seq one", "ACGTT")
    for bad in ("ACGT\n", ">a\n", ">a\nAC\n>b\nGT\n", ">a\nACXN\n"):
        with pytest.raises(FormatError):
            parse_fasta(bad)


def test_instance_from_text_matches_parser():
    assert parse_instance("kind: equality\nK: 2\nstring: a b a\n").strings == \
        Instance.from_text("equality", 2, ["aba"]).strings
