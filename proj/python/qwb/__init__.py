"""Exact computations in the quantized walled Brauer algebra B_{r,s}.

Cell labels are ``(f, (lambda1, lambda2))`` tuples with the partitions given
as tuples of row lengths. Field elements and Gram entries come back as
strings in the field's canonical printed form.
"""

from ._core import (
    CellularBasis,
    Engine,
    Field,
    branching_check,
    cell_dim,
    cell_labels,
    central_scalar,
    classify_simples,
    delta_zero_gram_checks,
    onearc_zero_locus,
    schur_truncation_check,
    semisimplicity,
    submodule_witness,
)

__all__ = [
    "CellularBasis",
    "Engine",
    "Field",
    "branching_check",
    "cell_dim",
    "cell_labels",
    "central_scalar",
    "classify_simples",
    "delta_zero_gram_checks",
    "onearc_zero_locus",
    "schur_truncation_check",
    "semisimplicity",
    "submodule_witness",
]
