import pytest
from hypothesis import given, settings, strategies as st

from strpart import CollisionKind, Instance, verify_partition
from strpart.solve import (PieceOrder, SolveConfig, Status, Strategy, compositions, count_valid,
                           iter_valid, solve, solve_backtracking, solve_exhaustive)
from strpart.solve.search import BudgetExhausted


def test_compositions_counts():
    # parts of size <= 2: Fibonacci numbers
    assert [len(list(compositions(n, 2))) for n in range(1, 8)] == [1, 2, 3, 5, 8, 13, 21]
    assert len(list(compositions(5, 5))) == 2 ** 4
    assert list(compositions(3, 1)) == [(1, 2)]


def test_examples():
    assert solve(Instance.from_text("equality", 1, "aa")).status is Status.UNSAT
    res = solve(Instance.from_text("factor", 2, "mississippi"))
    assert res.sat and res.partition.cuts == ((1, 3, 5, 7, 9),)
    assert count_valid(Instance.from_text("factor", 2, "mississippi")) == 1
    # distinct run lengths
    res = solve(Instance.from_text("equality", 3, "AAAAAA"))
    assert res.sat


instances = st.builds(
    lambda kind, K, strings: Instance.from_text(kind, K, strings),
    st.sampled_from(list(CollisionKind)), st.integers(1, 3),
    st.lists(st.text(alphabet="abc", min_size=1, max_size=6), min_size=1, max_size=3))


@settings(max_examples=150, deadline=None)
@given(instances, st.sampled_from(list(PieceOrder)))
def test_backtracking_matches_exhaustive(inst, order):
    a = solve_backtracking(inst, SolveConfig(piece_order=order, count_all=True))
    b = solve_exhaustive(inst, SolveConfig(Strategy.EXHAUSTIVE, count_all=True))
    assert a.status == b.status and a.count == b.count
    if a.sat:
        assert verify_partition(inst, a.partition).valid


@settings(max_examples=60, deadline=None)
@given(instances)
def test_iter_valid_yields_distinct_valid_partitions(inst):
    parts = list(iter_valid(inst))
    assert len(set(parts)) == len(parts) == count_valid(inst)
    assert all(verify_partition(inst, p).valid for p in parts)


def test_piece_order_changes_first_solution():
    inst = Instance.from_text("equality", 2, "abcd")
    longest = solve(inst, SolveConfig(piece_order="longest")).partition
    shortest = solve(inst, SolveConfig(piece_order="shortest")).partition
    assert longest.cuts == ((2,),) and shortest.cuts == ((1, 2, 3),)


def test_node_budget():
    inst = Instance.from_text("factor", 2, "mississippi" * 3)
    for strategy in Strategy:
        res = solve(inst, SolveConfig(strategy, node_budget=5))
        assert res.status is Status.BUDGET and res.partition is None
    with pytest.raises(BudgetExhausted):
        list(iter_valid(inst, SolveConfig(node_budget=3)))
    with pytest.raises(BudgetExhausted):
        count_valid(inst, SolveConfig(node_budget=3))


def test_config_validation():
    with pytest.raises(ValueError):
        SolveConfig(node_budget=0)
    with pytest.raises(ValueError):
        SolveConfig(time_budget=-1)
    with pytest.raises(ValueError):
        SolveConfig(strategy="guess")


def test_all_equal_strings_count():
    # equality-free 1-partitions of a word with distinct letters: exactly one
    inst = Instance.from_text("equality", 1, "abcdef")
    assert count_valid(inst) == 1
    # K = |w| on distinct letters: every composition works
    assert count_valid(Instance.from_text("equality", 6, "abcdef")) == 2 ** 5
