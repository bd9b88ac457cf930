"""Ternary-tree fermion encodings and their Clifford maps to Jordan-Wigner.

The pieces fit together like this: pauli holds the string algebra, tree
turns trees into anticommuting generator sets, clifford conjugates strings
through gates, straighten synthesizes the tree-to-chain circuits, oracle
re-checks everything with exact dense matrices, and cli fronts the lot.
"""

__version__ = "0.1.0"

from .clifford import (
    Circuit,
    Gate,
    circuit_format,
    circuit_parse,
    conjugate_circuit,
    conjugate_gate,
    gate,
    invert_circuit,
    peephole_cancel,
)
from .oracle import (
    ExactMatrix,
    OracleError,
    OracleReport,
    dense_gate,
    dense_pauli,
    oracle_check,
    oracle_conjugate,
)
from .pauli import (
    PauliString,
    pauli_commutes,
    pauli_format,
    pauli_identity,
    pauli_mul,
    pauli_parse,
    pauli_single,
    pauli_weight,
)
from .straighten import (
    Certificate,
    MapResult,
    StraightenResult,
    TransformReport,
    certificate_format,
    certificate_parse,
    fix_signs,
    fork_move,
    map_between,
    relabel,
    straighten,
    straighten_fork,
    verify_transform,
)
from .tree import (
    TERMINAL,
    GeneratorSet,
    TernaryTree,
    ValidationReport,
    check_generator_set,
    full_ternary,
    jw_chain,
    jw_generator,
    jw_match,
    path_product,
    random_tree,
    tree_augment,
    tree_format,
    tree_generators,
    tree_leaves,
    tree_parse,
)

__all__ = [
    "Certificate",
    "Circuit",
    "ExactMatrix",
    "Gate",
    "GeneratorSet",
    "MapResult",
    "OracleError",
    "OracleReport",
    "PauliString",
    "StraightenResult",
    "TERMINAL",
    "TernaryTree",
    "TransformReport",
    "ValidationReport",
    "certificate_format",
    "certificate_parse",
    "check_generator_set",
    "circuit_format",
    "circuit_parse",
    "conjugate_circuit",
    "conjugate_gate",
    "dense_gate",
    "dense_pauli",
    "fix_signs",
    "fork_move",
    "full_ternary",
    "gate",
    "invert_circuit",
    "jw_chain",
    "jw_generator",
    "jw_match",
    "map_between",
    "oracle_check",
    "oracle_conjugate",
    "path_product",
    "pauli_commutes",
    "pauli_format",
    "pauli_identity",
    "pauli_mul",
    "pauli_parse",
    "pauli_single",
    "pauli_weight",
    "peephole_cancel",
    "random_tree",
    "relabel",
    "straighten",
    "straighten_fork",
    "tree_augment",
    "tree_format",
    "tree_generators",
    "tree_leaves",
    "tree_parse",
    "verify_transform",
]
