"""Exact-arithmetic engine for the generalized Heisenberg-Virasoro Lie algebra.

Everything runs over arbitrary-precision rationals: the graded bracket and
its axiom verifier, tensor squares/cubes under the diagonal adjoint action,
coboundary cobrackets with their Yang-Baxter defects and bialgebra axiom
suite, and a window-scale derivation/cohomology laboratory with exact
sparse linear solvers.
"""

__version__ = "0.1.0"

from .algebra import (
    AlgebraConfig,
    AlgebraElement,
    bracket,
    grade_decompose,
    quotient_centerless,
    verify_algebra_axioms,
    window_symbols,
)
from .bialgebra import (
    CobracketTable,
    bialgebra_axiom_check,
    cobracket_decompose,
    cybe_defect,
    delta_r,
    drinfeld_identity_check,
    mybe_check,
    sigma_cobracket,
    triangular_pair,
)
from .derivations import (
    DerivationTable,
    common_kernel,
    derivation_check,
    h1_probe,
    homogeneous_inner_representative,
    homogeneous_split,
    inner_derivation,
    lambda_outer_derivation,
    solve_inner,
)
from .gamma import GroupSpec, member, window
from .kernel import backend_name
from .parser import format_value, parse_element, parse_tensor, parse_value
from .rationals import Rational, as_rational, format_rational, parse_rational
from .tensors import (
    Tensor2,
    Tensor3,
    cyclic,
    diag_act2,
    diag_act3,
    is_antisymmetric,
    tensor_product,
    twist,
    wedge,
)

__all__ = [
    "AlgebraConfig",
    "AlgebraElement",
    "CobracketTable",
    "DerivationTable",
    "GroupSpec",
    "Rational",
    "Tensor2",
    "Tensor3",
    "__version__",
    "as_rational",
    "backend_name",
    "bialgebra_axiom_check",
    "bracket",
    "cobracket_decompose",
    "common_kernel",
    "cybe_defect",
    "cyclic",
    "delta_r",
    "derivation_check",
    "diag_act2",
    "diag_act3",
    "drinfeld_identity_check",
    "format_rational",
    "format_value",
    "grade_decompose",
    "h1_probe",
    "homogeneous_inner_representative",
    "homogeneous_split",
    "inner_derivation",
    "is_antisymmetric",
    "lambda_outer_derivation",
    "member",
    "mybe_check",
    "parse_element",
    "parse_rational",
    "parse_tensor",
    "parse_value",
    "quotient_centerless",
    "sigma_cobracket",
    "solve_inner",
    "tensor_product",
    "triangular_pair",
    "twist",
    "verify_algebra_axioms",
    "wedge",
    "window",
    "window_symbols",
]
