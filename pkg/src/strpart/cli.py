"""``strpart`` command line.

Exit codes: 0 SAT / valid / success, 1 UNSAT / invalid, 2 budget exhausted,
3 audit disagreement, 64 unreadable or malformed input, 65 semantic error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .formats import (FormatError, parse_fasta, parse_instance, parse_partition,
                      render_instance, render_partition)
from .gadgets import (Family, ReductionError, Stage, assignment_from_partition, dump_sidecar,
                      length_audit, load_sidecar, reduce_formula, witness_from_assignment)
from .satkit import (FormulaError, GenerationError, gen_3sat3, parse_assignment, parse_formula,
                     render_assignment, solve_sat_bruteforce)
from .solve import (PieceOrder, SolveConfig, Status, Strategy, export_cnf, solve)
from .strcore import Instance, PartitionError, verify_partition

EXIT_OK, EXIT_UNSAT, EXIT_BUDGET, EXIT_DISAGREE = 0, 1, 2, 3
EXIT_PARSE, EXIT_SEMANTIC = 64, 65


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _config(args) -> SolveConfig:
    return SolveConfig(Strategy(args.strategy),
                       node_budget=args.budget_nodes, time_budget=args.budget_secs,
                       piece_order=PieceOrder(args.order), count_all=args.count)


def _solve_report(args, inst: Instance) -> int:
    res = solve(inst, _config(args))
    payload = {"status": res.status.value, "nodes": res.stats.nodes,
               "elapsed": round(res.stats.elapsed, 6)}
    lines = [res.status.value]
    if res.count is not None:
        payload["count"] = res.count
        lines.append(f"count: {res.count}")
    if res.partition is not None:
        pieces = [[inst.alphabet.render(p) for p in row] for row in res.partition.pieces(inst)]
        payload["cuts"] = [list(c) for c in res.partition.cuts]
        payload["pieces"] = pieces
        for cuts, row in zip(res.partition.cuts, pieces):
            lines.append("cuts: " + " ".join(map(str, cuts)) + "   | " + " | ".join(row))
        if getattr(args, "output", None):
            _write(args.output, render_partition(res.partition))
    _emit(args, payload, lines)
    return {Status.SAT: EXIT_OK, Status.UNSAT: EXIT_UNSAT, Status.BUDGET: EXIT_BUDGET}[res.status]


# -- commands ----------------------------------------------------------------

def cmd_solve(args) -> int:
    return _solve_report(args, parse_instance(_read(args.instance)))


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.instance))
    p = parse_partition(_read(args.partition))
    if len(p) != len(inst):
        raise CliError(f"partition has {len(p)} cut lines for {len(inst)} strings", EXIT_SEMANTIC)
    rep = verify_partition(inst, p)
    descr = [v.describe(inst.alphabet) for v in rep.violations]
    _emit(args, {"valid": rep.valid, "violations": descr},
          ["valid" if rep.valid else "invalid", *descr])
    return EXIT_OK if rep.valid else EXIT_UNSAT


def cmd_reduce(args) -> int:
    f = parse_formula(_read(args.formula))
    r = reduce_formula(f, args.family, args.stage, t=args.t, delta=args.delta,
                       chainable=args.chainable or None)
    audit = length_audit(r)
    prefix = args.output
    inst_text = render_instance(r.instance, comment=f"{r.family.value} {r.stage.value} reduction")
    meta_text = dump_sidecar(r)
    if prefix:
        _write(prefix + ".inst", inst_text)
        _write(prefix + ".meta.json", meta_text)
    payload = {"family": r.family.value, "stage": r.stage.value, "K": r.K,
               "strings": len(r.instance), "total_length": r.instance.total_length,
               "params": dict(r.params),
               "audit": [{"name": a.name, "value": a.value, "relation": a.relation,
                          "bound": a.bound, "ok": a.ok} for a in audit]}
    lines = [f"{r.family.value}/{r.stage.value}: {len(r.instance)} strings, "
             f"total length {r.instance.total_length}, K = {r.K}"]
    lines += [f"  {k} = {v}" for k, v in r.params.items() if k != "K"]
    lines += [f"  {a}" for a in audit]
    if prefix:
        lines.append(f"wrote {prefix}.inst and {prefix}.meta.json")
    _emit(args, payload, lines)
    if not prefix and not args.json:
        sys.stdout.write(inst_text)
    return EXIT_OK if all(a.ok for a in audit) else EXIT_SEMANTIC


def _assignment(args, n_vars: int):
    if args.assignment is not None:
        text = args.assignment
    elif args.assignment_file is not None:
        text = _read(args.assignment_file)
    else:
        raise CliError("give --assignment or --assignment-file", EXIT_PARSE)
    try:
        return parse_assignment(text, n_vars)
    except ValueError as exc:
        raise CliError(f"bad assignment: {exc}", EXIT_PARSE) from None


def cmd_witness(args) -> int:
    r = load_sidecar(_read(args.meta))
    a = _assignment(args, r.source.n_vars)
    p = witness_from_assignment(r, a)
    rep = verify_partition(r.instance, p)
    if not rep.valid:
        raise CliError("internal error: witness does not verify: "
                       + rep.violations[0].describe(r.instance.alphabet), EXIT_SEMANTIC)
    _write(args.output, render_partition(p))
    if args.output not in (None, "-"):
        _emit(args, {"valid": True, "output": args.output}, [f"wrote {args.output} (verified)"])
    return EXIT_OK


def cmd_extract(args) -> int:
    r = load_sidecar(_read(args.meta))
    p = parse_partition(_read(args.partition))
    a = assignment_from_partition(r, p)
    _emit(args, {"assignment": [v if x else -v for v, x in enumerate(a, 1)]},
          [render_assignment(a)])
    return EXIT_OK


def cmd_gen3sat3(args) -> int:
    f = gen_3sat3(args.nvars, args.seed)
    _write(args.output, f.render())
    return EXIT_OK


def cmd_cnf(args) -> int:
    inst = parse_instance(_read(args.instance))
    _write(args.output, export_cnf(inst).to_dimacs())
    return EXIT_OK


def cmd_audit(args) -> int:
    cfg = SolveConfig(Strategy.BACKTRACKING, node_budget=args.budget_nodes,
                      time_budget=args.budget_secs)
    rows, disagree, budget = [], [], []
    for seed in range(args.seed_start, args.seed_start + args.seeds):
        f = gen_3sat3(args.nvars, seed)
        truth = solve_sat_bruteforce(f) is not None
        r = reduce_formula(f, args.family, args.stage)
        res = solve(r.instance, cfg)
        if res.status is Status.BUDGET:
            budget.append(seed)
            verdict = "budget"
        else:
            agree = res.sat == truth
            verdict = "agree" if agree else "DISAGREE"
            if not agree:
                disagree.append(seed)
        rows.append({"seed": seed, "formula_sat": truth, "solver": res.status.value,
                     "verdict": verdict, "nodes": res.stats.nodes})
    decided = len(rows) - len(budget)
    agreed = decided - len(disagree)
    summary = f"{args.family}/{args.stage} nvars={args.nvars}: {agreed}/{decided} agreement"
    if budget:
        summary += f", {len(budget)} over budget (seeds {budget})"
    lines = [f"seed {row['seed']:>5}  formula {'SAT' if row['formula_sat'] else 'UNSAT':5}  "
             f"solver {row['solver']:6} {row['verdict']}" for row in rows]
    lines.append(summary)
    if disagree:
        lines.append(f"counterexample seeds: {disagree}")
    _emit(args, {"rows": rows, "agreed": agreed, "decided": decided,
                 "disagreements": disagree, "budget": budget}, lines)
    if disagree:
        return EXIT_DISAGREE
    return EXIT_BUDGET if budget else EXIT_OK


def cmd_oligo(args) -> int:
    header, seq = parse_fasta(_read(args.fasta))
    inst = Instance.from_text(args.kind, args.K, seq)
    if not args.json:
        print(f"> {header}: {len(seq)} nt, K = {args.K}, {args.kind}-free")
    return _solve_report(args, inst)


# -- parser ------------------------------------------------------------------

def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="backtracking")
    p.add_argument("--budget-nodes", type=int, default=50_000_000, metavar="N")
    p.add_argument("--budget-secs", type=float, default=60.0, metavar="S")
    p.add_argument("--order", choices=[o.value for o in PieceOrder], default="longest",
                   help="piece length tried first by backtracking")
    p.add_argument("--count", action="store_true", help="count all valid partitions")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strpart", description=(
        "Exact solver and 3SAT(3) reduction toolkit for equality-, prefix-, suffix- "
        "and factor-free string partitions."))
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("solve", parents=[common], help="decide an instance file")
    p.add_argument("instance")
    p.add_argument("-o", "--output", help="write the partition found here")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="check a partition against an instance")
    p.add_argument("instance")
    p.add_argument("partition")
    p.set_defaults(func=cmd_verify)

    families = [f.value for f in Family]
    stages = [s.value for s in Stage]
    p = sub.add_parser("reduce", parents=[common], help="reduce a 3SAT(3) formula")
    p.add_argument("formula")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--stage", choices=stages, default="msp")
    p.add_argument("--t", type=int, help="codeword length for ff/pf binary stages")
    p.add_argument("--delta", type=int, help="codeword length for the ef binary stages")
    p.add_argument("--chainable", action="store_true",
                   help="ef msp-bin: use codewords fit for single-string chaining")
    p.add_argument("-o", "--output", metavar="PREFIX",
                   help="write PREFIX.inst and PREFIX.meta.json")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("witness", parents=[common], help="partition from a satisfying assignment")
    p.add_argument("meta", help="sidecar written by reduce")
    g = p.add_mutually_exclusive_group()
    g.add_argument("-a", "--assignment", help="e.g. '1 -2 3' or '101'")
    g.add_argument("--assignment-file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("extract", parents=[common], help="assignment from a valid partition")
    p.add_argument("meta")
    p.add_argument("partition")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("gen3sat3", parents=[common], help="random 3SAT(3) formula")
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen3sat3)

    p = sub.add_parser("cnf", parents=[common], help="DIMACS encoding of an instance")
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cnf)

    p = sub.add_parser("audit", parents=[common], help="batch SAT-equivalence check")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--stage", choices=["msp", "sp"], default="msp")
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--seed-start", type=int, default=0)
    p.add_argument("--budget-nodes", type=int, default=50_000_000)
    p.add_argument("--budget-secs", type=float, default=120.0)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("oligo", parents=[common], help="split a DNA sequence into oligos")
    p.add_argument("fasta")
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--kind", choices=["equality", "factor"], default="equality")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_oligo)
    return parser


def _validate(args) -> None:
    for name in ("budget_nodes", "nvars", "seeds", "K"):
        val = getattr(args, name, None)
        if val is not None and val < 1:
            raise CliError(f"--{name.replace('_', '-')} must be positive", EXIT_PARSE)
    secs = getattr(args, "budget_secs", None)
    if secs is not None and secs <= 0:
        raise CliError("--budget-secs must be positive", EXIT_PARSE)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        _validate(args)
        return args.func(args)
    except CliError as exc:
        print(f"strpart: {exc}", file=sys.stderr)
        return exc.code
    except (FormatError, FormulaError) as exc:
        print(f"strpart: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ReductionError, PartitionError, GenerationError, ValueError) as exc:
        print(f"strpart: error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
