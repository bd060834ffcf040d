import pytest

from strpart.gadgets import bin_, chain, chain_pieces, delimiter, delimiter_pieces, pad


def test_bin():
    assert bin_(1) == "" and bin_(2) == "0" and bin_(10) == "010"
    with pytest.raises(ValueError):
        bin_(0)


def test_pad():
    assert pad(3, "01") == "11001"
    assert pad(1, "") == "0"
    with pytest.raises(ValueError):
        pad(0, "1")


@pytest.mark.parametrize("K", [6, 9, 12])
def test_listed_delimiters(K):
    one = "1" * (K - 2)
    three = "1" * (K - 3)
    assert delimiter(2, K) == "00" + one + one + "00" + one + one + "00"
    assert delimiter(3, K) == "10" + one + one + "01"
    assert delimiter(4, K) == "000" + three + three + "00" + three + three + "0000" + three + three + "000"
    assert delimiter(5, K) == "100" + three + three + "001"


@pytest.mark.parametrize("K", [4, 10, 18])
def test_first_delimiter(K):
    d1 = delimiter(1, K)
    assert d1 == "0" + "1" * (K - 1) + "1" * (K * (K - 1) // 2) + "1" * (K - 1) + "0"
    assert len(d1) == K * (K + 3) // 2
    ps = delimiter_pieces(1, K)
    assert "".join(ps) == d1 and len(set(ps)) == len(ps)


@pytest.mark.parametrize("K", [18, 24])
def test_delimiter_pieces_distinct_and_bounded(K):
    delta = K // 2
    seen = set()
    for j in range(2, 2 ** (delta - 1)):
        ps = delimiter_pieces(j, K)
        assert "".join(ps) == chain(bin_(j), K)
        assert all(len(p) <= K for p in ps)
        assert len(delimiter(j, K)) <= K * K
        for p in ps:
            assert p not in seen
            seen.add(p)
        if j > 600:
            break


def test_chain_structure():
    ps = chain_pieces("100", 8)
    # pad^R(s), pad(1), pad^R(1), pad(10), pad^R(10), pad(s)
    assert ps == ["00101111", "111101", "101111", "1111010", "0101111", "11110100"]
    with pytest.raises(ValueError):
        chain("1" * 7, 8)
