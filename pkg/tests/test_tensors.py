import random
from fractions import Fraction

import pytest

from hvlab.algebra import bracket
from hvlab.errors import UsageError
from hvlab.sampling import random_antisymmetric_tensor, random_element
from hvlab.tensors import (
    Tensor2,
    cyclic,
    diag_act2,
    diag_act3,
    is_antisymmetric,
    is_fully_central,
    strip_fully_central,
    tensor_product,
    twist,
    wedge,
)


def test_twist_examples(cfg):
    t = cfg.L(1) @ cfg.I(2)
    assert twist(t) == cfg.I(2) @ cfg.L(1)
    sym = cfg.L(0) @ cfg.L(0)
    assert twist(sym) == sym
    w = wedge(cfg.L(0), cfg.I(1))
    assert twist(w) == -w
    assert twist(twist(t)) == t


def test_cyclic_examples(cfg):
    t = cfg.L(1) @ cfg.L(2) @ cfg.L(3)
    assert cyclic(t) == cfg.L(2) @ cfg.L(3) @ cfg.L(1)
    assert cyclic(cyclic(cyclic(t))) == t
    from hvlab.tensors import Tensor3

    zero = Tensor3.zero(cfg)
    assert cyclic(zero) == zero


def test_wedge_examples(cfg):
    w = wedge(cfg.L(0), cfg.I(1))
    assert w == cfg.L(0) @ cfg.I(1) - cfg.I(1) @ cfg.L(0)
    assert not wedge(cfg.L(1), cfg.L(1))
    assert wedge(cfg.L(1), 2 * cfg.L(2)) == 2 * wedge(cfg.L(1), cfg.L(2))


def test_is_antisymmetric(cfg):
    assert is_antisymmetric(wedge(cfg.L(0), cfg.L(1)))
    assert not is_antisymmetric(cfg.L(1) @ cfg.L(1))
    assert is_antisymmetric(Tensor2.zero(cfg))


def test_diag_act_examples(cfg):
    # L(1) . (L(0) (x) C_L) = -L(1) (x) C_L
    assert diag_act2(cfg.L(1), cfg.L(0) @ cfg.C_L()) == -(cfg.L(1) @ cfg.C_L())
    # the center acts as zero
    t = cfg.L(2) @ cfg.I(-1)
    assert not diag_act2(cfg.C_L(), t)
    assert not diag_act2(cfg.I(0), t)
    # [L_0, L_2] = 2 L_2 and [L_0, L_-1] = -L_-1, so coefficients 2 - 1 = 1
    assert diag_act2(cfg.L(0), cfg.L(2) @ cfg.L(-1)) == cfg.L(2) @ cfg.L(-1)


def test_rank_discipline(cfg):
    t2 = cfg.L(0) @ cfg.L(1)
    t3 = t2 @ cfg.L(2)
    assert t3.rank == 3
    with pytest.raises(UsageError):
        t3 @ cfg.L(0)  # rank 4 does not exist
    with pytest.raises(UsageError):
        twist(t3)
    with pytest.raises(UsageError):
        cyclic(t2)


def test_module_law_and_equivariance(cfg):
    rng = random.Random(5)
    for _ in range(25):
        x = random_element(rng, cfg, 2, max_terms=2)
        y = random_element(rng, cfg, 2, max_terms=2)
        t = random_antisymmetric_tensor(rng, cfg, 2, max_terms=2)
        lhs = diag_act2(bracket(x, y), t)
        rhs = diag_act2(x, diag_act2(y, t)) - diag_act2(y, diag_act2(x, t))
        assert lhs == rhs
        assert twist(diag_act2(x, t)) == diag_act2(x, twist(t))
        t3 = tensor_product(t, cfg.L(1))
        lhs3 = diag_act3(bracket(x, y), t3)
        rhs3 = diag_act3(x, diag_act3(y, t3)) - diag_act3(y, diag_act3(x, t3))
        assert lhs3 == rhs3


def test_action_preserves_antisymmetry(cfg):
    rng = random.Random(6)
    for _ in range(20):
        x = random_element(rng, cfg, 2, max_terms=2)
        t = random_antisymmetric_tensor(rng, cfg, 2)
        assert is_antisymmetric(diag_act2(x, t))


def test_grading_of_action(cfg):
    x = cfg.L(2)
    t = cfg.L(1) @ cfg.I(-1)  # grade 0
    acted = diag_act2(x, t)
    assert acted.grade() == Fraction(2)


def test_fully_central_helpers(cfg):
    cc = cfg.C_L() @ cfg.C_I()
    assert is_fully_central(cc)
    mixed = cc + cfg.L(1) @ cfg.C_L()
    assert not is_fully_central(mixed)
    assert strip_fully_central(mixed) == cfg.L(1) @ cfg.C_L()
    assert is_fully_central(cfg.I(0) @ cfg.C_L())
