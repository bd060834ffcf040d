import pytest
from hypothesis import given, strategies as st

from strpart import (Alphabet, CollisionKind, Instance, Partition, collides, mirror_instance,
                     pieces_of, substr_closure, verify_partition)
from strpart.strcore import AlphabetError, MalformedCutsError, PartitionError, ViolationType, mirror

words = st.text(alphabet="ab", min_size=1, max_size=6)
kinds = st.sampled_from(list(CollisionKind))


def test_pieces_of_examples():
    assert pieces_of("mississippi", [1, 3, 5, 7, 9]) == ["m", "is", "si", "ss", "ip", "pi"]
    assert pieces_of("abc", []) == ["abc"]
    assert pieces_of("ab", [1]) == ["a", "b"]


@pytest.mark.parametrize("cuts", [[0], [3], [2, 1], [1, 1], [-1]])
def test_pieces_of_rejects_malformed_cuts(cuts):
    with pytest.raises(MalformedCutsError):
        pieces_of("abc", cuts)


@given(st.text(alphabet="abc", min_size=1, max_size=12), st.data())
def test_pieces_round_trip(w, data):
    cuts = sorted(data.draw(st.sets(st.integers(1, len(w) - 1))) if len(w) > 1 else [])
    ps = pieces_of(w, cuts)
    assert "".join(ps) == w and len(ps) == len(cuts) + 1


@pytest.mark.parametrize("kind,a,b,expected", [
    ("factor", "is", "si", False),
    ("prefix", "a", "ab", True),
    ("equality", "ab", "ab", True),
    ("factor", "i", "mi", True),
    ("suffix", "b", "ab", True),
    ("suffix", "a", "ab", False),
    ("prefix", "b", "ab", False),
])
def test_collides_examples(kind, a, b, expected):
    assert collides(CollisionKind.parse(kind), a, b) is expected


@given(kinds, words, words)
def test_collides_symmetric(kind, a, b):
    assert collides(kind, a, b) == collides(kind, b, a)


@given(words, words)
def test_collision_hierarchy(a, b):
    eq, pre, suf, fac = (collides(k, a, b) for k in CollisionKind)
    if eq:
        assert pre and suf
    if pre or suf:
        assert fac


@given(words, words)
def test_suffix_is_mirrored_prefix(a, b):
    assert collides(CollisionKind.SUFFIX, a, b) == collides(CollisionKind.PREFIX, mirror(a), mirror(b))


def test_substr_closure():
    assert substr_closure("ab") == {"a": 1, "b": 1, "ab": 1}
    assert substr_closure("aa") == {"a": 2, "aa": 1}
    assert set(substr_closure("abc")) == {"a", "b", "c", "ab", "bc", "abc"}


def test_mississippi_fixture():
    inst = Instance.from_text("factor", 2, "mississippi")
    assert verify_partition(inst, Partition(((1, 3, 5, 7, 9),))).valid
    rep = verify_partition(inst, Partition(((2, 4, 6, 8, 10),)))
    assert not rep.valid
    v = rep.first_collision
    assert v.type is ViolationType.COLLISION
    assert (v.piece, v.partner_piece) == ("i", "mi")
    assert "collides" in v.describe()


@given(kinds, st.text(alphabet="ab", min_size=1, max_size=3))
def test_single_short_piece_always_valid(kind, w):
    assert verify_partition(Instance.from_text(kind, 3, w), Partition(((),))).valid


def test_length_violation_reported_separately():
    inst = Instance.from_text("equality", 2, "abc")
    rep = verify_partition(inst, Partition(((),)))
    assert not rep.valid and rep.violations[0].type is ViolationType.LENGTH
    assert rep.first_collision is None


def test_identical_pieces_collide_under_every_kind():
    for kind in CollisionKind:
        inst = Instance.from_text(kind, 1, ["a", "a"])
        assert not verify_partition(inst, Partition(((), ()))).valid


def test_pieces_of_same_string_collide():
    inst = Instance.from_text("equality", 1, "aa")
    assert not verify_partition(inst, Partition(((1,),))).valid


@given(st.lists(st.text(alphabet="ab", min_size=1, max_size=5), min_size=1, max_size=3), st.data())
def test_factor_valid_implies_weaker_kinds_valid(strings, data):
    cuts = []
    for w in strings:
        cuts.append(sorted(data.draw(st.sets(st.integers(1, len(w) - 1)))) if len(w) > 1 else [])
    p = Partition(tuple(tuple(c) for c in cuts))
    if verify_partition(Instance.from_text("factor", 5, strings), p).valid:
        for kind in ("prefix", "suffix", "equality"):
            assert verify_partition(Instance.from_text(kind, 5, strings), p).valid


@given(st.lists(st.text(alphabet="abc", min_size=1, max_size=5), min_size=1, max_size=3),
       kinds, st.data())
def test_mirror_duality(strings, kind, data):
    inst = Instance.from_text(kind, 3, strings)
    cuts = tuple(tuple(sorted(data.draw(st.sets(st.integers(1, len(w) - 1))))) if len(w) > 1 else ()
                 for w in strings)
    p = Partition(cuts)
    m = mirror_instance(inst)
    assert verify_partition(inst, p).valid == verify_partition(m, p.mirrored(inst)).valid
    assert mirror_instance(m) == inst


def test_mirror_instance_swaps_prefix_suffix():
    m = mirror_instance(Instance.from_text("prefix", 2, "abc"))
    assert m.kind is CollisionKind.SUFFIX and m.strings == ("cba",)
    assert mirror_instance(Instance.from_text("factor", 2, "ab")).kind is CollisionKind.FACTOR


def test_super_selected():
    inst = Instance.from_text("factor", 2, "mississippi")
    p = Partition(((1, 3, 5, 7, 9),))
    assert p.super_selected(inst, 0, 1, 5)
    assert not p.super_selected(inst, 0, 2, 5)


def test_partition_shape_mismatch():
    inst = Instance.from_text("factor", 2, ["ab", "cd"])
    with pytest.raises(PartitionError):
        verify_partition(inst, Partition(((),)))


def test_alphabet_named_tokens():
    al = Alphabet(["c_1^1", "bminus", "x_1"])
    s = al.encode(["c_1^1", "bminus", "x_1", "bminus"])
    assert len(s) == 4
    assert al.decode(s) == ["c_1^1", "bminus", "x_1", "bminus"]
    assert al.render(s) == "c_1^1 bminus x_1 bminus"


@pytest.mark.parametrize("symbols", [[], ["a", "a"], ["a b"], [""]])
def test_alphabet_rejects_bad_symbols(symbols):
    with pytest.raises(AlphabetError):
        Alphabet(symbols)


def test_instance_invariants():
    with pytest.raises(PartitionError):
        Instance.from_text("factor", 0, "ab")
    with pytest.raises(PartitionError):
        Instance(CollisionKind.FACTOR, 2, Alphabet("ab"), ("",))
    with pytest.raises(AlphabetError):
        Instance(CollisionKind.FACTOR, 2, Alphabet("ab"), ("abc",))
    assert Alphabet.binary().is_binary
