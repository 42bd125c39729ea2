import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvlab.algebra import AlgebraConfig
from hvlab.errors import IndexNotInGroupError, ParseError, VariantError
from hvlab.gamma import GroupSpec
from hvlab.parser import (
    format_value,
    parse_element,
    parse_symbol_label,
    parse_tensor,
    parse_value,
)
from hvlab.sampling import random_antisymmetric_tensor, random_element
from hvlab.tensors import Tensor2, wedge


def test_grammar_examples(cfg):
    w = parse_value("wedge(L(0), I(1))", cfg)
    assert w == cfg.L(0) @ cfg.I(1) - cfg.I(1) @ cfg.L(0)
    e = parse_element("3/2*L(-1) + C_L", cfg)
    assert e == Fraction(3, 2) * cfg.L(-1) + cfg.C_L()
    assert len(e.items()) == 2
    assert parse_element("0", cfg) == cfg.zero()
    assert parse_tensor("0", cfg, 2) == Tensor2.zero(cfg)


def test_format_examples(cfg):
    assert format_value(wedge(cfg.L(0), cfg.I(1))) == "L(0)@I(1) - I(1)@L(0)"
    assert format_value(cfg.zero()) == "0"
    assert format_value(-2 * cfg.C_I()) == "-2*C_I"
    assert format_value(Fraction(-3, 2) * cfg.L(1)) == "-3/2*L(1)"


def test_index_validation(cfg):
    with pytest.raises(IndexNotInGroupError):
        parse_element("L(1/3)", cfg)


def test_halfinteger_indices(cfg_half):
    e = parse_element("L(-1/2)", cfg_half)
    assert e == cfg_half.L(Fraction(-1, 2))
    assert format_value(e) == "L(-1/2)"


def test_centerless_rejections(cfg_centerless):
    with pytest.raises(VariantError):
        parse_element("C_L", cfg_centerless)
    with pytest.raises(VariantError):
        parse_element("I(0)", cfg_centerless)


def test_parse_errors_carry_offsets(cfg):
    with pytest.raises(ParseError) as err:
        parse_element("L(1) + % L(2)", cfg)
    assert err.value.position == 7
    with pytest.raises(ParseError):
        parse_element("L(1", cfg)
    with pytest.raises(ParseError):
        parse_element("3", cfg)  # bare nonzero scalar
    with pytest.raises(ParseError):
        parse_element("L(1) + wedge(L(0), L(1))", cfg)  # mixed ranks
    with pytest.raises(ParseError):
        parse_value("L(0)@L(1)@L(2)@L(3)", cfg)  # rank 4


def test_parens_and_products(cfg):
    v = parse_value("2*(L(1) + I(1))@L(0)", cfg)
    assert v == 2 * (cfg.L(1) @ cfg.L(0)) + 2 * (cfg.I(1) @ cfg.L(0))
    v3 = parse_value("wedge(L(0), L(1))@C_L", cfg)
    assert v3.rank == 3


def test_symbol_labels(cfg):
    assert parse_symbol_label("L(-2)", cfg) == (0, -2, 1)
    assert parse_symbol_label("C_LI", cfg) == (4, 0, 1)
    with pytest.raises(ParseError):
        parse_symbol_label("2*L(1)", cfg)


def test_roundtrip_random_values(cfg):
    rng = random.Random(2024)
    for _ in range(40):
        e = random_element(rng, cfg, 3)
        assert parse_element(format_value(e), cfg) == e
        t = random_antisymmetric_tensor(rng, cfg, 2)
        assert parse_tensor(format_value(t), cfg, 2) == t


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.sampled_from(["L", "I"]),
            st.integers(-4, 4),
            st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(lambda q: q != 0),
        ),
        min_size=1,
        max_size=4,
    )
)
def test_roundtrip_is_a_fixed_point(terms):
    cfg = AlgebraConfig(GroupSpec((Fraction(1),)))
    e = cfg.zero()
    for kind, idx, coeff in terms:
        e = e + coeff * (cfg.L(idx) if kind == "L" else cfg.I(idx))
    text = format_value(e)
    assert parse_element(text, cfg) == e
    assert format_value(parse_element(text, cfg)) == text
