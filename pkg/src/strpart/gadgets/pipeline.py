"""Stage dispatch, length audits, forced-piece checks and sidecar metadata."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from ..satkit import Formula3SAT3, parse_formula
from ..strcore import Partition
from .ef import ef_binary_encode, ef_msp_from_3sat3, ef_sp_binary, ef_sp_from_msp
from .ff import ff_msp_binary_from_3sat3, ff_msp_from_3sat3, ff_sp_binary, ff_sp_from_msp
from .model import Family, ReductionError, ReductionOutput, Stage
from .pf import forcing_pieces, pf_msp_binary_from_3sat3, pf_msp_from_3sat3, pf_sp_binary, pf_sp_from_msp
from .words import delimiter


def reduce_formula(f: Formula3SAT3, family: Family | str, stage: Stage | str,
                   t: int | None = None, delta: int | None = None,
                   chainable: bool | None = None) -> ReductionOutput:
    """Run the reduction chain up to ``stage``.

    ``chainable`` selects the EF codeword policy of the binary stage; it is
    forced on for the single-string binary stage and defaults off otherwise.
    """
    family, stage = Family(family), Stage(stage)
    if family is Family.EF:
        r = ef_msp_from_3sat3(f)
        if stage is Stage.SP:
            return ef_sp_from_msp(r)
        if stage.binary:
            chain = stage is Stage.SP_BINARY or bool(chainable)
            r = ef_binary_encode(r, delta, chainable=chain)
            return ef_sp_binary(r) if stage is Stage.SP_BINARY else r
        return r
    if delta is not None:
        raise ReductionError("delta applies to the ef family only; use t")
    msp, sp, msp_bin, sp_bin = {
        Family.FF: (ff_msp_from_3sat3, ff_sp_from_msp, ff_msp_binary_from_3sat3, ff_sp_binary),
        Family.PF: (pf_msp_from_3sat3, pf_sp_from_msp, pf_msp_binary_from_3sat3, pf_sp_binary),
    }[family]
    if stage.binary:
        r = msp_bin(f, t)
        return sp_bin(r) if stage is Stage.SP_BINARY else r
    if t is not None:
        raise ReductionError("t applies to binary stages only")
    r = msp(f)
    return sp(r) if stage is Stage.SP else r


# -- audits ------------------------------------------------------------------

@dataclass(frozen=True)
class AuditLine:
    name: str
    value: int
    relation: str  # "<=", "==" or ">="
    bound: int

    @property
    def ok(self) -> bool:
        return {"<=": self.value <= self.bound, "==": self.value == self.bound,
                ">=": self.value >= self.bound}[self.relation]

    def __str__(self) -> str:
        mark = "ok" if self.ok else "VIOLATED"
        return f"{self.name}: {self.value} {self.relation} {self.bound}  [{mark}]"


def length_audit(r: ReductionOutput) -> list[AuditLine]:
    f = r.source
    m, n = f.m, f.n_vars
    total = r.instance.total_length
    fam, st = r.family, r.stage
    out = [AuditLine("K", r.K, "==", _expected_K(r))]
    if st is Stage.MSP:
        bound, label = {Family.EF: (5 * m + 9 * n + 2, "5m+9n+2"),
                        Family.FF: (8 * m + 35 * n, "8m+35n"),
                        Family.PF: (5 * m + 8 * n + 2, "5m+8n+2")}[fam]
        out.append(AuditLine(f"total length vs {label}", total, "<=", bound))
    elif st is Stage.SP:
        W = r.parent.instance
        if fam is Family.EF:
            out.append(AuditLine("|w| vs ||W||+4l+1", total, "==", W.total_length + 4 * len(W) + 1))
        else:
            out.append(AuditLine("|w| vs ||W||+3K(N-1)", total, "==",
                                 W.total_length + 3 * r.K * (len(W) - 1)))
    elif st is Stage.MSP_BINARY:
        if fam is Family.EF:
            d, ns = r.params["delta"], r.params["n_symbols"]
            hat = sum(len(w) for w, role in zip(r.instance.strings, r.roles)
                      if role[0] == "prefix-closure")
            out.append(AuditLine("||W^|| vs (3n^2+n)(delta-1)delta/2", hat, "<=",
                                 (3 * ns * ns + ns) * (d - 1) * d // 2))
        elif fam is Family.FF:
            out.append(AuditLine("t vs 3m+2n+6", r.params["t"], ">=", 3 * m + 2 * n + 6))
        else:
            out.append(AuditLine("t vs 3m+4n+7", r.params["t"], ">=", 3 * m + 4 * n + 7))
    else:
        W = r.parent.instance
        K = r.K
        if fam is Family.EF:
            out.append(AuditLine("|w| vs ||W||+lK^2", total, "<=", W.total_length + len(W) * K * K))
            out.append(AuditLine("|d_1| vs K(K+3)/2", len(delimiter(1, K)), "==", K * (K + 3) // 2))
            longest = max((len(delimiter(j, K)) for j in range(2, len(W))), default=0)
            out.append(AuditLine("max |d_j| (j>1) vs K^2", longest, "<=", K * K))
        elif fam is Family.FF:
            out.append(AuditLine("2N vs K", 2 * len(W), "<=", K))
        else:
            f1 = "".join(forcing_pieces(K)[3])
            out.append(AuditLine("|F1| vs 3K+2", len(f1), "==", 3 * K + 2))
            used = sum(1 for role in r.parent.roles if role[0] != "forbidden") - 1
            out.append(AuditLine("delimiters used vs K-7", used, "<=", K - 7))
    return out


def _expected_K(r: ReductionOutput) -> int:
    if not r.stage.binary:
        return 3 if r.family is Family.FF else 2
    if r.family is Family.EF:
        return 2 * r.params["delta"]
    t = r.params["t"]
    return 2 * t + 1 if r.family is Family.FF else 2 * t


def connector_pieces_forced(r: ReductionOutput, p: Partition) -> bool:
    """Every joiner of a connector-bearing single string is cut into its own pieces.

    Holds for every valid partition of the factor and prefix single-string
    stages and of the factor binary chain.
    """
    if not r.stage.single:
        raise ReductionError("only single-string stages have joiners")
    cuts = set(p.cuts[0])
    return all(c in cuts for c in r.joiner_cuts)


# -- sidecar -----------------------------------------------------------------

SIDECAR_VERSION = 1


def instance_digest(r: ReductionOutput) -> str:
    from ..formats import render_instance
    return hashlib.sha256(render_instance(r.instance).encode()).hexdigest()


def sidecar(r: ReductionOutput) -> dict:
    chain = []
    node = r
    while node is not None:
        chain.append(node.stage.value)
        node = node.parent
    return {
        "version": SIDECAR_VERSION,
        "family": r.family.value,
        "stage": r.stage.value,
        "params": dict(r.params),
        "formula": r.source.render(),
        "table": r.table.to_json(),
        "codebook": dict(r.codebook) if r.codebook else None,
        "literal_markers": {f"{i},{j}": list(span) for (i, j), span in sorted(r.literal_markers.items())},
        "stages": chain,
        "instance_sha256": instance_digest(r),
    }


def dump_sidecar(r: ReductionOutput) -> str:
    return json.dumps(sidecar(r), indent=2, sort_keys=True) + "\n"


def load_sidecar(text: str) -> ReductionOutput:
    """Rebuild the reduction described by a sidecar and check it is unchanged."""
    try:
        meta = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"sidecar is not valid JSON: {exc}") from None
    for key in ("family", "stage", "params", "formula"):
        if key not in meta:
            raise ValueError(f"sidecar lacks {key!r}")
    f = parse_formula(meta["formula"])
    params = meta["params"]
    r = reduce_formula(f, meta["family"], meta["stage"],
                       t=params.get("t") if Stage(meta["stage"]).binary else None,
                       delta=params.get("delta"), chainable=params.get("chainable"))
    digest = meta.get("instance_sha256")
    if digest is not None and digest != instance_digest(r):
        raise ValueError("sidecar does not reproduce the recorded instance (digest mismatch)")
    return r
