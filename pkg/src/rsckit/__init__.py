"""Linear shifts of cubics onto Ramanujan simple cubics.

The Ramanujan simple cubic family p_B(x) = x^3 - ((3+B)/2)x^2
- ((3-B)/2)x + 1 has roots permuted by x -> 1/(1-x), trigonometric closed
forms, and a cube-root-sum identity.  Almost every monic cubic with
distinct roots is a linear shift x -> (a - x)/c away from a member of the
family; this package computes the shift exactly over real quadratic
fields, solves by the trigonometric formulas, builds and verifies the
cube-root identities, and runs the whole chain starting from minimal
polynomials of 2cos(2pi/n).
"""

from .coslattice import (CosMinPoly, CosineRelation, MineEntry,
                         PipelineResult, QuadCubicFactor, cos_min_poly,
                         cos_pipeline, mine, primitive_ks, quad_cubic_factor)
from .cubic import (Cubic, SerretData, discriminant, rsc_detect, rsc_from_B,
                    rsc_from_b, serret_invariants)
from .errors import (DivisionByZero, FieldMismatch, FieldTooLarge,
                     NoBranchFound, NonConvergence, NonRealShift,
                     NotAPermutation, ParseError, PoleEvaluation,
                     PrecisionTooLow, RepeatedRoots, RsckitError,
                     SqrtNotRepresentable, TranslationCase,
                     UnsupportedDegree, VerificationFailed)
from .field import (FieldElement, as_field, field_sqrt, height_cap,
                    rational_sqrt, recognize, squarefree_kernel,
                    squarefree_split)
from .fixtures import (FIXTURES, Check, Fixture, FixtureResult, run_all,
                       run_fixture)
from .identity import (BranchChoice, CosForm, IdentityRecord, Radicand,
                       build_identity, from_json, render, to_json_dict,
                       verify_value_is_root)
from .mobius import (INFINITY, MobiusMap, mobius_apply, mobius_compose,
                     mobius_order, rsc_cycle)
from .parsing import parse_coeff
from .precision import (PrecisionContext, cube_roots, is_complex_scalar,
                        is_numeric_scalar, is_real_scalar, principal_sqrt,
                        real_cbrt)
from .roots import (TrigRoot, cubic_trig_roots, format_cycles,
                    permutation_under, rsc_trig_roots, solve_numeric)
from .shift import (RamanujanShift, ShiftResult, Translation,
                    classify_and_shift, from_rsc_root, to_rsc_root,
                    verify_shift)

__version__ = "0.1.0"

__all__ = [
    "BranchChoice", "Check", "CosForm", "CosMinPoly", "CosineRelation",
    "Cubic", "DivisionByZero", "FIXTURES", "FieldElement", "FieldMismatch",
    "FieldTooLarge", "Fixture", "FixtureResult", "IdentityRecord",
    "INFINITY", "MineEntry", "MobiusMap", "NoBranchFound", "NonConvergence",
    "NonRealShift", "NotAPermutation", "ParseError", "PipelineResult",
    "PoleEvaluation", "PrecisionContext", "PrecisionTooLow",
    "QuadCubicFactor", "Radicand", "RamanujanShift", "RepeatedRoots",
    "RsckitError", "SerretData", "ShiftResult", "SqrtNotRepresentable",
    "Translation", "TranslationCase", "TrigRoot", "UnsupportedDegree",
    "VerificationFailed", "as_field", "build_identity",
    "classify_and_shift", "cos_min_poly", "cos_pipeline", "cube_roots",
    "cubic_trig_roots", "discriminant", "field_sqrt", "format_cycles",
    "from_json", "from_rsc_root", "height_cap", "is_complex_scalar",
    "is_numeric_scalar", "is_real_scalar", "mine", "mobius_apply",
    "mobius_compose", "mobius_order", "parse_coeff", "permutation_under",
    "primitive_ks", "principal_sqrt", "quad_cubic_factor", "rational_sqrt",
    "real_cbrt", "recognize", "render", "rsc_cycle", "rsc_detect",
    "rsc_from_B", "rsc_from_b", "rsc_trig_roots", "run_all", "run_fixture",
    "serret_invariants", "solve_numeric", "squarefree_kernel",
    "squarefree_split", "to_json_dict", "to_rsc_root",
    "verify_shift", "verify_value_is_root",
]
