"""Nil-clean companion matrices over prime fields and the rationals.

Exact arithmetic, a decision procedure for companion matrices, explicit
idempotent-plus-nilpotent certificates, and an exhaustive brute-force oracle
for small prime fields.
"""

__version__ = "0.1.0"

from .classifier import (
    Certificate,
    Classification,
    Census,
    TraceReport,
    classify,
    decompose,
    enumerate_companions,
    trace_conditions,
)
from .companion import (
    BorderedCompanion,
    CompanionSpec,
    companion,
    complete_fixed_leading,
    complete_with_charpoly,
    nil_clean_decompose_with_target,
)
from .fields import RATIONALS, FieldElem, FieldSpec, characteristic, from_integer, trace_index
from .matrix import (
    Mat,
    block_diag,
    charpoly,
    is_idempotent,
    is_nilpotent,
    is_unipotent,
    minpoly,
    rank,
)
from .oracle import SearchBudget, brute_force_nil_clean, idempotents, oracle_search
from .poly import Poly, power_of_linear

__all__ = [
    "BorderedCompanion",
    "Census",
    "Certificate",
    "Classification",
    "CompanionSpec",
    "FieldElem",
    "FieldSpec",
    "Mat",
    "Poly",
    "RATIONALS",
    "SearchBudget",
    "TraceReport",
    "block_diag",
    "brute_force_nil_clean",
    "characteristic",
    "charpoly",
    "classify",
    "companion",
    "complete_fixed_leading",
    "complete_with_charpoly",
    "decompose",
    "enumerate_companions",
    "from_integer",
    "idempotents",
    "is_idempotent",
    "is_nilpotent",
    "is_unipotent",
    "minpoly",
    "nil_clean_decompose_with_target",
    "oracle_search",
    "power_of_linear",
    "rank",
    "trace_conditions",
    "trace_index",
]
