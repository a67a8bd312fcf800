"""Fuchsian connection systems for hypergeometric integrals."""

try:
    from ._hypergm import (
        HypergmError,
        cycle_integral,
        derive,
        hyp2f1,
        kummer_local,
        normalize_matrix,
        relation_check,
        verify,
        weyl_reduce,
    )
except ImportError:  # in-tree builds put the module next to the package
    from _hypergm import (
        HypergmError,
        cycle_integral,
        derive,
        hyp2f1,
        kummer_local,
        normalize_matrix,
        relation_check,
        verify,
        weyl_reduce,
    )

__all__ = [
    "HypergmError",
    "cycle_integral",
    "derive",
    "hyp2f1",
    "kummer_local",
    "normalize_matrix",
    "relation_check",
    "verify",
    "weyl_reduce",
]
