"""3SAT(3) formulas: model, validation, seeded generation, brute-force solving.

A 3SAT(3) formula has clauses of two or three literals, and every variable
occurs in exactly three clauses: twice positive and once negated.

Text format (round-trips exactly)::

    p sat3 <n_vars> <n_clauses>
    1 2 0
    1 2 0
    -1 -2 0
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

# (variable index, 1-based; polarity True = positive)
Literal = tuple[int, bool]


class FormulaError(ValueError):
    pass


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Formula3SAT3:
    n_vars: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple((int(v), bool(p)) for v, p in c)
                                                  for c in self.clauses))

    @classmethod
    def from_ints(cls, n_vars: int, clauses: Sequence[Sequence[int]]) -> Formula3SAT3:
        """Build from DIMACS-style signed integers, e.g. ``[[1, 2], [-1, -2]]``."""
        out = []
        for c in clauses:
            if any(x == 0 for x in c):
                raise FormulaError("literal 0 is not allowed")
            out.append(tuple((abs(x), x > 0) for x in c))
        return cls(n_vars, tuple(out))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def to_ints(self) -> list[list[int]]:
        return [[v if p else -v for v, p in c] for c in self.clauses]

    def occurrences(self, v: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
        """(positive, negative) occurrences of variable ``v`` as 1-based (clause, position)."""
        pos, neg = [], []
        for i, c in enumerate(self.clauses, start=1):
            for j, (var, pol) in enumerate(c, start=1):
                if var == v:
                    (pos if pol else neg).append((i, j))
        return pos, neg

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return self.first_falsified(assignment) is None

    def first_falsified(self, assignment: Sequence[bool]) -> int | None:
        """1-based index of the first clause the assignment falsifies, or None."""
        if len(assignment) != self.n_vars:
            raise FormulaError(
                f"assignment has {len(assignment)} values for {self.n_vars} variables")
        for i, c in enumerate(self.clauses, start=1):
            if not any(assignment[v - 1] == p for v, p in c):
                return i
        return None

    def relabel(self, perm: Sequence[int]) -> Formula3SAT3:
        """Rename variable ``v`` to ``perm[v - 1]`` (a permutation of 1..n)."""
        return Formula3SAT3(self.n_vars,
                            tuple(tuple((perm[v - 1], p) for v, p in c) for c in self.clauses))

    def render(self) -> str:
        lines = [f"p sat3 {self.n_vars} {self.m}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.to_ints()]
        return "\n".join(lines) + "\n"


def parse_formula(text: str) -> Formula3SAT3:
    header = None
    clauses: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("c "):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "sat3":
                raise FormulaError(f"line {lineno}: expected 'p sat3 <n> <m>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormulaError(f"line {lineno}: non-integer header field") from None
            continue
        if header is None:
            raise FormulaError(f"line {lineno}: clause before 'p sat3' header")
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormulaError(f"line {lineno}: non-integer literal") from None
        if not lits or lits[-1] != 0 or 0 in lits[:-1]:
            raise FormulaError(f"line {lineno}: clause must end with a single 0")
        clauses.append(lits[:-1])
    if header is None:
        raise FormulaError("missing 'p sat3' header")
    n, m = header
    if m != len(clauses):
        raise FormulaError(f"header announces {m} clauses, found {len(clauses)}")
    for c in clauses:
        for x in c:
            if abs(x) > n:
                raise FormulaError(f"literal {x} out of range for {n} variables")
    return Formula3SAT3.from_ints(n, clauses)


def validate_3sat3(f: Formula3SAT3) -> list[str]:
    """All violations of the 3SAT(3) conditions; an empty list means valid."""
    problems = []
    if f.n_vars < 1:
        problems.append("formula must have at least one variable")
    pos = [0] * (f.n_vars + 1)
    neg = [0] * (f.n_vars + 1)
    for i, c in enumerate(f.clauses, start=1):
        if len(c) not in (2, 3):
            problems.append(f"clause {i} has {len(c)} literals (need 2 or 3)")
        seen = set()
        for v, p in c:
            if not 1 <= v <= f.n_vars:
                problems.append(f"clause {i}: variable {v} out of range")
                continue
            if v in seen:
                problems.append(f"clause {i}: variable x{v} occurs twice")
            seen.add(v)
            if p:
                pos[v] += 1
            else:
                neg[v] += 1
    for v in range(1, f.n_vars + 1):
        if (pos[v], neg[v]) != (2, 1):
            problems.append(
                f"variable x{v} occurs {pos[v]} times positive and {neg[v]} times negated "
                "(need 2 and 1)")
    return problems


def require_3sat3(f: Formula3SAT3) -> None:
    problems = validate_3sat3(f)
    if problems:
        raise FormulaError("; ".join(problems))


def _clause_sizes(total: int, rng: random.Random) -> list[int]:
    sizes = []
    left = total
    while left:
        if left in (2, 3):
            s = left
        elif left == 4:
            s = 2
        else:
            s = rng.choice((2, 3))
        sizes.append(s)
        left -= s
    return sizes


def gen_3sat3(n_vars: int, seed: int, max_tries: int = 1000) -> Formula3SAT3:
    """Random valid 3SAT(3) formula; identical for identical ``(n_vars, seed)``."""
    if n_vars < 2:
        raise ValueError("n_vars must be at least 2")
    rng = random.Random(seed)
    slots = [(v, p) for v in range(1, n_vars + 1) for p in (True, True, False)]
    for _ in range(max_tries):
        sizes = _clause_sizes(len(slots), rng)
        if max(sizes) > n_vars:
            continue
        pool = slots[:]
        rng.shuffle(pool)
        clauses, k, ok = [], 0, True
        for s in sizes:
            c = pool[k:k + s]
            k += s
            if len({v for v, _ in c}) != s:
                ok = False
                break
            clauses.append(tuple(c))
        if ok:
            f = Formula3SAT3(n_vars, tuple(clauses))
            assert not validate_3sat3(f)
            return f
    raise GenerationError(f"no valid formula for n_vars={n_vars}, seed={seed} "
                          f"after {max_tries} tries")


def solve_sat_bruteforce(f: Formula3SAT3, max_vars: int = 24) -> tuple[bool, ...] | None:
    """Lexicographically first satisfying assignment (False < True), or None."""
    if f.n_vars > max_vars:
        raise ValueError(f"{f.n_vars} variables exceeds brute-force limit {max_vars}")
    for bits in itertools.product((False, True), repeat=f.n_vars):
        if f.satisfied_by(bits):
            return bits
    return None


def parse_assignment(text: str, n_vars: int) -> tuple[bool, ...]:
    """Assignment as signed integers (``1 -2 3``) or a 0/1 string (``101``)."""
    toks = text.split()
    if len(toks) == 1 and set(toks[0]) <= {"0", "1"} and len(toks[0]) == n_vars:
        return tuple(ch == "1" for ch in toks[0])
    vals: dict[int, bool] = {}
    for tok in toks:
        x = int(tok)
        if x == 0:
            continue
        vals[abs(x)] = x > 0
    missing = [v for v in range(1, n_vars + 1) if v not in vals]
    if missing:
        raise FormulaError(f"assignment misses variables {missing}")
    return tuple(vals[v] for v in range(1, n_vars + 1))


def render_assignment(a: Sequence[bool]) -> str:
    return " ".join(str(v if val else -v) for v, val in enumerate(a, start=1))
