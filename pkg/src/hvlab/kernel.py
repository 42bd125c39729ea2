"""Kernel selection: compiled extension if available, pure Python otherwise.

Set ``HVLAB_PURE_PYTHON=1`` in the environment to force the fallback even
when the extension is installed (useful for parity testing and benchmarks).
"""

import os

from . import _kernel_py

if os.environ.get("HVLAB_PURE_PYTHON"):
    impl = _kernel_py
else:
    try:
        from . import _kernel_c as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _kernel_py

BACKEND = "c" if impl is not _kernel_py else "python"

KIND_L = _kernel_py.KIND_L
KIND_I = _kernel_py.KIND_I
KIND_CL = _kernel_py.KIND_CL
KIND_CI = _kernel_py.KIND_CI
KIND_CLI = _kernel_py.KIND_CLI
SYM_CL = _kernel_py.SYM_CL
SYM_CI = _kernel_py.SYM_CI
SYM_CLI = _kernel_py.SYM_CLI
MIXED_QUADRATIC_CL = _kernel_py.MIXED_QUADRATIC_CL
MIXED_QUADRATIC_CLI = _kernel_py.MIXED_QUADRATIC_CLI
MIXED_CUBIC_CL = _kernel_py.MIXED_CUBIC_CL
ZERO = _kernel_py.ZERO
ONE = _kernel_py.ONE

rq = impl.rq
rq_neg = impl.rq_neg
rq_add = impl.rq_add
rq_sub = impl.rq_sub
rq_mul = impl.rq_mul
rq_inv = impl.rq_inv
rq_div = impl.rq_div
sym_grade = impl.sym_grade
bracket_basis = impl.bracket_basis
scale_terms = impl.scale_terms
add_scaled_into = impl.add_scaled_into
add_terms = impl.add_terms
bracket_terms = impl.bracket_terms
diag_act = impl.diag_act
rref = impl.rref


def backend_name():
    """Name of the active kernel backend: 'c' or 'python'."""
    return BACKEND


def available_backends():
    """Mapping of backend name to kernel module, for parity tests/benchmarks."""
    backends = {"python": _kernel_py}
    try:
        from . import _kernel_c  # noqa: PLC0415

        backends["c"] = _kernel_c
    except ImportError:
        pass
    return backends
