"""High-precision Mahler measure / modular function / regulator engine.

Thin Python layer over the C++ core. All heavy computation runs at the
requested MPFR precision inside the extension; results cross the boundary
as native floats/complex (use the *_str variants when full precision is
needed on the Python side).
"""

from mmtheory._core import (
    MMError,
    algdep,
    class_number_one_discs,
    class_number_two_discs,
    cm_table,
    identity_count,
    j_invariant,
    lambda2,
    lambda2_str,
    mahler_jensen,
    mahler_lattice,
    recognize,
    regulator,
    regulator_case_ids,
    search_cm_points,
    verify_identity,
    weber_f,
    weber_f1,
    weber_f2,
)

__all__ = [
    "MMError",
    "algdep",
    "class_number_one_discs",
    "class_number_two_discs",
    "cm_table",
    "identity_count",
    "j_invariant",
    "lambda2",
    "lambda2_str",
    "mahler_jensen",
    "mahler_lattice",
    "recognize",
    "regulator",
    "regulator_case_ids",
    "search_cm_points",
    "verify_identity",
    "weber_f",
    "weber_f1",
    "weber_f2",
]
