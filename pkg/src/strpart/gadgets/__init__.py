"""3SAT(3) reductions to string partition problems, with witnesses and extraction."""
from .ef import (ef_binary_encode, ef_msp_from_3sat3, ef_sp_binary, ef_sp_from_msp,
                 chain_delta)
from .ff import (ff_codeword, ff_delimiter, ff_msp_binary_from_3sat3, ff_msp_from_3sat3,
                 ff_sp_binary, ff_sp_from_msp)
from .model import (Family, ReductionError, ReductionOutput, Stage, SymbolTable)
from .pf import (PF_FORBIDDEN, forcing_pieces, pf_codeword, pf_delimiter,
                 pf_msp_binary_from_3sat3, pf_msp_from_3sat3, pf_sp_binary, pf_sp_from_msp)
from .pipeline import (AuditLine, connector_pieces_forced, dump_sidecar, length_audit,
                       load_sidecar, reduce_formula, sidecar)
from .witness import (ExtractionError, assignment_from_partition, selected_markers,
                      witness_from_assignment)
from .words import bin_, chain, chain_pieces, delimiter, delimiter_pieces, pad

__all__ = [name for name in dir() if not name.startswith("_")]
