from hypothesis import given, settings, strategies as st

from strpart import CollisionKind, Instance, verify_partition
from strpart.solve import count_models, count_valid, export_cnf, parse_dimacs


def test_dimacs_round_trip_and_header():
    inst = Instance.from_text("factor", 2, "abab")
    cnf = export_cnf(inst)
    text = cnf.to_dimacs()
    assert "c var string offset length" in text
    n, clauses = parse_dimacs(text)
    assert n == cnf.n_vars and clauses == cnf.clauses
    assert cnf.var_map[0] == (0, 0, 1)


def test_count_models_small():
    assert count_models(2, []) == 4
    assert count_models(2, [(1, 2)]) == 3
    assert count_models(1, [(1,), (-1,)]) == 0
    assert count_models(3, [(1, -2), (2, -3), (3, -1)]) == 2


def _models(cnf):
    """Every model by brute force, for decoding checks on tiny formulas."""
    for bits in range(1 << cnf.n_vars):
        lits = [v if bits >> (v - 1) & 1 else -v for v in range(1, cnf.n_vars + 1)]
        val = set(lits)
        if all(any(l in val for l in cl) for cl in cnf.clauses):
            yield lits


def test_models_decode_to_valid_partitions():
    inst = Instance.from_text("prefix", 2, ["aba", "ba"])
    cnf = export_cnf(inst)
    decoded = {cnf.decode(m) for m in _models(cnf)}
    assert len(decoded) == count_valid(inst)
    assert all(verify_partition(inst, p).valid for p in decoded)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(list(CollisionKind)), st.integers(1, 3),
       st.lists(st.text(alphabet="ab", min_size=1, max_size=6), min_size=1, max_size=2))
def test_model_count_equals_partition_count(kind, K, strings):
    inst = Instance.from_text(kind, K, strings)
    cnf = export_cnf(inst)
    assert count_models(cnf.n_vars, cnf.clauses) == count_valid(inst)
