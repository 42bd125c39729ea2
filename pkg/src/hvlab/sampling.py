"""Seeded random values for property suites: elements and tensors.

Sampling is driven by a caller-supplied ``random.Random`` so identical
seeds give identical objects; nothing here touches global state.
"""

from fractions import Fraction

from .algebra import sym_grade, window_symbols
from .tensors import Tensor2, element_of, tensor_product, wedge


def _nonzero_int(rng, bound):
    c = rng.randint(-bound, bound)
    return c if c else 1


def random_element(rng, config, radius=3, coeff_bound=5, max_terms=3):
    syms = window_symbols(config, radius, order="canonical")
    out = config.zero()
    for _ in range(rng.randint(1, max_terms)):
        out = out + element_of(config, rng.choice(syms)) * _nonzero_int(rng, coeff_bound)
    return out


def random_antisymmetric_tensor(rng, config, support_radius=3, coeff_bound=5, max_terms=4):
    """Random combination of wedges of window basis symbols; may be zero."""
    syms = window_symbols(config, support_radius, order="canonical")
    out = Tensor2.zero(config)
    for _ in range(rng.randint(1, max_terms)):
        p = rng.choice(syms)
        q = rng.choice(syms)
        if p == q:
            continue
        w = wedge(element_of(config, p), element_of(config, q))
        out = out + w * _nonzero_int(rng, coeff_bound)
    return out


def random_homogeneous_tensor(rng, config, grade, support_radius=3, coeff_bound=5, max_terms=4):
    """Random rank-2 tensor all of whose terms have the given grade."""
    grade = Fraction(grade)
    syms = window_symbols(config, support_radius, order="canonical")
    by_grade = {}
    for p in syms:
        for q in syms:
            by_grade.setdefault(sym_grade(p) + sym_grade(q), []).append((p, q))
    pairs = by_grade.get(grade, [])
    if not pairs:
        return Tensor2.zero(config)
    out = Tensor2.zero(config)
    for _ in range(rng.randint(1, max_terms)):
        p, q = rng.choice(pairs)
        t = tensor_product(element_of(config, p), element_of(config, q))
        out = out + t * _nonzero_int(rng, coeff_bound)
    return out
