import dataclasses
import random
from fractions import Fraction

import pytest

from hvlab.algebra import (
    bracket,
    grade_decompose,
    quotient_centerless,
    verify_algebra_axioms,
    window_symbols,
)
from hvlab.errors import ConfigMismatchError, IndexNotInGroupError, VariantError
from hvlab.parser import format_value
from hvlab.sampling import random_element


def test_defining_relations(cfg):
    assert bracket(cfg.L(-1), cfg.L(1)) == 2 * cfg.L(0)
    assert bracket(cfg.I(2), cfg.I(-2)) == -2 * cfg.C_I()
    # (1/12)(27 - 3) = 2
    assert bracket(cfg.L(3), cfg.L(-3)) == -6 * cfg.L(0) + 2 * cfg.C_L()
    for nu in (2, 3, -1):
        assert bracket(cfg.L(nu - 1), cfg.I(1)) == cfg.I(nu)


def test_defining_relations_pin_the_quadratic_normalization(cfg):
    """[L(-2), L(2)] = 4 L(0) - (1/2) C_L under the defining relations.

    A companion derivation circulating with these relations rescales the
    same bracket to L(0) + (1/2) C_L; this suite pins the defining
    relations' value.  See README, section "Normalization note".
    """
    assert bracket(cfg.L(-2), cfg.L(2)) == 4 * cfg.L(0) - Fraction(1, 2) * cfg.C_L()
    assert bracket(cfg.L(-2), cfg.L(2)) != cfg.L(0) + Fraction(1, 2) * cfg.C_L()


def test_center_brackets_to_zero(cfg):
    for c in (cfg.C_L(), cfg.C_I(), cfg.C_LI(), cfg.I(0)):
        for s in window_symbols(cfg, 3):
            other = cfg.basis_element(s)
            assert not bracket(c, other)
            assert not bracket(other, c)


def test_standard_cocycle_lands_on_CLI(cfg):
    std = dataclasses.replace(cfg, mixed_cocycle="standard")
    # x = 2: x^2 + x = 6 on C_LI
    assert bracket(std.L(2), std.I(-2)) == -2 * std.I(0) + 6 * std.C_LI()
    assert bracket(cfg.L(2), cfg.I(-2)) == -2 * cfg.I(0) + 2 * cfg.C_L()


def test_mixed_index_groups(cfg_half):
    assert bracket(cfg_half.L(Fraction(1, 2)), cfg_half.L(1)) == Fraction(1, 2) * cfg_half.L(
        Fraction(3, 2)
    )


def test_index_validation(cfg):
    with pytest.raises(IndexNotInGroupError):
        cfg.L(Fraction(1, 3))


def test_centerless_constructors(cfg_centerless):
    with pytest.raises(VariantError):
        cfg_centerless.C_L()
    with pytest.raises(VariantError):
        cfg_centerless.I(0)
    assert cfg_centerless.I(1)


def test_centerless_brackets_drop_center(cfg_centerless):
    assert bracket(cfg_centerless.L(-2), cfg_centerless.L(2)) == 4 * cfg_centerless.L(0)
    assert not bracket(cfg_centerless.I(1), cfg_centerless.I(-1))
    assert not bracket(cfg_centerless.L(1), cfg_centerless.I(-1))


def test_config_mismatch(cfg, cfg_centerless):
    with pytest.raises(ConfigMismatchError):
        bracket(cfg.L(0), cfg_centerless.L(0))


def test_grade_decompose(cfg):
    a = cfg.L(2) + 3 * cfg.C_L()
    parts = grade_decompose(a)
    assert parts == [(Fraction(0), 3 * cfg.C_L()), (Fraction(2), cfg.L(2))]
    assert grade_decompose(cfg.zero()) == []
    mixed = Fraction(1, 2) * cfg.L(1) + cfg.I(1)
    assert grade_decompose(mixed) == [(Fraction(1), mixed)]
    total = cfg.zero()
    for _, part in grade_decompose(a):
        total = total + part
    assert total == a


def test_quotient_centerless(cfg):
    assert quotient_centerless(2 * cfg.L(1) + 3 * cfg.C_L()) == 2 * cfg.centerless_version().L(1)
    assert not quotient_centerless(cfg.I(0))
    assert quotient_centerless(cfg.L(5)) == cfg.centerless_version().L(5)


def test_quotient_is_a_bracket_homomorphism(cfg):
    rng = random.Random(11)
    for _ in range(40):
        a = random_element(rng, cfg, 3)
        b = random_element(rng, cfg, 3)
        assert quotient_centerless(bracket(a, b)) == bracket(
            quotient_centerless(a), quotient_centerless(b)
        )


def test_bracket_is_graded(cfg):
    rng = random.Random(12)
    for _ in range(40):
        a = random_element(rng, cfg, 3, max_terms=1)
        b = random_element(rng, cfg, 3, max_terms=1)
        c = bracket(a, b)
        if c and a.grade() is not None and b.grade() is not None:
            assert c.grade() == a.grade() + b.grade()


def test_axioms_pass_on_windows(cfg, cfg_centerless, cfg_half):
    for config in (cfg, cfg_centerless, cfg_half):
        report = verify_algebra_axioms(config, 3)
        assert report.status == "pass"
    assert verify_algebra_axioms(cfg, 0).status == "pass"


def test_axioms_pass_standard_cocycle(cfg):
    std = dataclasses.replace(cfg, mixed_cocycle="standard")
    assert verify_algebra_axioms(std, 3).status == "pass"


def test_cubic_cocycle_fails_with_witness(cfg):
    bad = dataclasses.replace(cfg, mixed_cocycle="cubic")
    report = verify_algebra_axioms(bad, 2)
    assert report.status == "fail"
    assert report.failed_axiom == "jacobi"
    assert report.witness is not None and len(report.witness["triple"]) == 3
    assert report.lhs not in (None, "0")


def test_element_formatting(cfg):
    assert format_value(-2 * cfg.C_I()) == "-2*C_I"
    assert format_value(cfg.zero()) == "0"
