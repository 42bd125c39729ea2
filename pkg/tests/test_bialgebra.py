import random
from fractions import Fraction

import pytest

from hvlab.bialgebra import (
    CobracketTable,
    bialgebra_axiom_check,
    cobracket_decompose,
    cybe_defect,
    delta_r,
    drinfeld_identity_check,
    drinfeld_sides,
    mybe_check,
    sigma_cobracket,
    sigma_nilpotence_defect,
    triangular_pair,
)
from hvlab.algebra import window_symbols
from hvlab.errors import CoverageError, PreconditionError, VariantError
from hvlab.sampling import random_antisymmetric_tensor
from hvlab.tensors import Tensor2, diag_act3, strip_fully_central, wedge


def test_delta_r_examples(cfg):
    r = wedge(cfg.L(0), cfg.L(1))
    assert delta_r(r, cfg.L(0)) == r
    assert not delta_r(r, cfg.C_L())
    # the L(0)(x)L(0) cross terms cancel
    assert delta_r(r, cfg.L(-1)) == cfg.L(-1) @ cfg.L(1) - cfg.L(1) @ cfg.L(-1)


def test_cybe_defect_frozen_values(cfg):
    assert not cybe_defect(Tensor2.zero(cfg))
    assert not cybe_defect(wedge(cfg.L(0), cfg.L(1)))
    # hand expansion of the three commutator sums for r = L1 ^ L2, [L1,L2] = L3
    expected = (
        -(cfg.L(3) @ cfg.L(2) @ cfg.L(1))
        + cfg.L(3) @ cfg.L(1) @ cfg.L(2)
        - cfg.L(1) @ cfg.L(3) @ cfg.L(2)
        + cfg.L(2) @ cfg.L(3) @ cfg.L(1)
        + cfg.L(1) @ cfg.L(2) @ cfg.L(3)
        - cfg.L(2) @ cfg.L(1) @ cfg.L(3)
    )
    assert cybe_defect(wedge(cfg.L(1), cfg.L(2))) == expected


def test_mybe_check(cfg):
    assert mybe_check(wedge(cfg.L(0), cfg.L(1)), 3).status == "pass"
    assert mybe_check(Tensor2.zero(cfg), 2).status == "pass"
    report = mybe_check(wedge(cfg.L(1), cfg.L(2)), 1)
    assert report.status == "fail"
    assert report.witness == {"symbol": "L(0)"}
    # the defect is homogeneous of grade 6, so L(0) acts as the scalar 6
    c = cybe_defect(wedge(cfg.L(1), cfg.L(2)))
    assert c.grade() == Fraction(6)
    assert diag_act3(cfg.L(0), c) == 6 * c


def test_mybe_requires_antisymmetric(cfg):
    with pytest.raises(PreconditionError):
        mybe_check(cfg.L(1) @ cfg.L(1), 2)


def test_drinfeld_identity_examples(cfg):
    assert drinfeld_identity_check(wedge(cfg.L(0), cfg.L(1)), cfg.L(-1))
    lhs, rhs = drinfeld_sides(wedge(cfg.L(1), cfg.L(2)), cfg.L(0))
    assert lhs == rhs == 6 * cybe_defect(wedge(cfg.L(1), cfg.L(2)))
    assert drinfeld_identity_check(Tensor2.zero(cfg), cfg.L(3))


def test_drinfeld_identity_random(cfg, cfg_centerless):
    rng = random.Random(77)
    for config in (cfg, cfg_centerless):
        for _ in range(10):
            r = random_antisymmetric_tensor(rng, config, 2, max_terms=3)
            for s in window_symbols(config, 1):
                from hvlab.tensors import element_of

                assert drinfeld_identity_check(r, element_of(config, s))


def test_triangular_pair(cfg):
    r = triangular_pair(cfg.L(0), cfg.L(1))
    assert r == wedge(cfg.L(0), cfg.L(1))
    r2 = triangular_pair(Fraction(1, 2) * cfg.L(0), cfg.I(2))
    assert not cybe_defect(r2)
    with pytest.raises(PreconditionError) as err:
        triangular_pair(cfg.L(0), cfg.L(2))
    assert "2*L(2)" in str(err.value)


def test_sigma_cobracket_values(cfg):
    sig = sigma_cobracket(1, cfg.C_I())
    assert sig.value((0, 2, 1)) == wedge_like(cfg, 2)
    assert not sig.value((0, 0, 1))  # L(0) -> 0
    assert not sig.value((1, 2, 1))  # I(a) -> 0
    assert not sig.value((2, 0, 1))  # centrals -> 0


def wedge_like(cfg, a):
    return cfg.I(a) @ cfg.C_I() - cfg.C_I() @ cfg.I(a)


def test_sigma_requires_central_and_center(cfg, cfg_centerless):
    with pytest.raises(PreconditionError):
        sigma_cobracket(1, cfg.L(1))
    with pytest.raises(VariantError):
        sigma_cobracket(1, cfg_centerless.L(1))


def test_sigma_nilpotence_exact(cfg):
    sig = sigma_cobracket(Fraction(3, 2), cfg.C_I() + 2 * cfg.C_L())
    for s in window_symbols(cfg, 4):
        assert not sigma_nilpotence_defect(sig, s)


def test_bialgebra_axioms_for_triangular_r(cfg, cfg_centerless):
    for config in (cfg, cfg_centerless):
        r = triangular_pair(config.L(0), config.I(1))
        report = bialgebra_axiom_check(CobracketTable.from_r(r), 4)
        assert report.passed, report.to_dict()


def test_bialgebra_axioms_for_sigma(cfg):
    report = bialgebra_axiom_check(sigma_cobracket(1, cfg.C_I()), 3)
    assert report.passed


def test_bialgebra_cojacobi_fails_for_non_cybe_r(cfg):
    report = bialgebra_axiom_check(CobracketTable.from_r(wedge(cfg.L(1), cfg.L(2))), 2)
    assert report.cojacobi.status == "fail"
    assert report.antisymmetry.status == "pass"


def test_explicit_table_coverage_error(cfg):
    table = CobracketTable.explicit(cfg, {}, 0)
    with pytest.raises(CoverageError):
        bialgebra_axiom_check(table, 1)


def test_from_r_requires_antisymmetric(cfg):
    with pytest.raises(PreconditionError):
        CobracketTable.from_r(cfg.L(1) @ cfg.L(1))


def test_table_json_roundtrip(cfg):
    table = CobracketTable.from_r(wedge(cfg.L(1), cfg.L(-1)), window_radius=2)
    data = table.to_json()
    back = CobracketTable.from_json(data)
    for s in table.symbols():
        assert back.value(s) == table.value(s)


def test_decompose_roundtrip_from_r(cfg):
    r = wedge(cfg.L(1), cfg.L(-1))
    res = cobracket_decompose(CobracketTable.from_r(r, 3), 2, probe_radius=3)
    assert res.feasible
    assert strip_fully_central(res.r) == strip_fully_central(r)
    assert not res.sigma["lambda"] and not res.sigma["eta"]


def test_decompose_roundtrip_from_sigma(cfg):
    res = cobracket_decompose(sigma_cobracket(2, cfg.C_I(), window_radius=3), 2, probe_radius=3)
    assert res.feasible
    assert not res.r
    assert res.sigma_coefficient("lambda", "C_I") == 2
    assert res.sigma_coefficient("eta", "C_I") == 2


def test_decompose_perturbed_table_is_infeasible(cfg):
    base = CobracketTable.from_r(wedge(cfg.L(1), cfg.L(-1)), 3)
    expl = {s: base.value(s) for s in base.symbols()}
    l2 = (0, 2, 1)
    expl[l2] = expl[l2] + wedge(cfg.L(0), cfg.L(2))
    res = cobracket_decompose(CobracketTable.explicit(cfg, expl, 3), 2, probe_radius=3)
    assert not res.feasible
    assert res.certificate is not None


def test_decompose_centerless_has_no_sigma(cfg_centerless):
    r = wedge(cfg_centerless.L(1), cfg_centerless.L(-1))
    res = cobracket_decompose(CobracketTable.from_r(r, 3), 2, probe_radius=3)
    assert res.feasible
    assert res.r == r
    assert res.sigma == {"lambda": {}, "eta": {}}
