import pytest

from strpart.satkit import gen_3sat3, solve_sat_bruteforce

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Record the outcome of an acceptance criterion for the end-of-run table."""
    def _record(number: int, ok: bool, detail: str) -> None:
        _ACCEPTANCE[number] = (ok, detail)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def formulas():
    """(n_vars, seed) -> (formula, lexicographically first model or None), memoised."""
    cache = {}

    def get(n, seed):
        if (n, seed) not in cache:
            f = gen_3sat3(n, seed)
            cache[n, seed] = (f, solve_sat_bruteforce(f))
        return cache[n, seed]
    return get
