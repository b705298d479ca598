from fractions import Fraction

import pytest

from weylchar.characters import global_weyl_character, local_weyl_character
from weylchar.linalg import EchelonBasis, integral, rank
from weylchar.oracle import (
    Generator, OracleBoundsError, PolyVector, TensorVector, act, bracket_check, invariant_basis,
    local_weyl_oracle, m_module_expected, m_module_hilbert, monomial_symmetric, p_of_r, symmetrize,
    tensor_character, theta_module_check, weight_hilbert, wedge,
)
from weylchar.rootdata import Weight
from weylchar.series import Series, hilbert_A

XP, XM, H = "x+", "x-", "h"


def test_linalg():
    assert integral({"a": Fraction(1, 2), "b": Fraction(-1, 3)}) == {"a": 3, "b": -2}
    assert rank([{0: 1, 1: 1}, {0: 2, 1: 2}, {1: 1}]) == 2
    e = EchelonBasis([{0: 1, 1: 2}])
    assert e.contains({0: 3, 1: 6}) and not e.contains({1: 1})


def test_action_on_wedge():
    out = act(Generator(XP, 1), wedge())
    expected = TensorVector(2, {((1, 1), (0, 1)): 1, ((1, 1), (1, 0)): -1})
    assert out == expected


def test_action_trivial_cases():
    top = TensorVector.highest(3)
    assert act(Generator(H, 0), top) == top.scale(3)
    f = PolyVector.variable(1, 3, 2)
    assert not act(Generator(XP, 0), top.times_poly(f))
    assert act(Generator(XM, 2), TensorVector.pure((1,))) == TensorVector(1, {((-1,), (2,)): 1})


def test_bracket_examples():
    sample = [TensorVector(3, {((1, -1, -1), (1, 0, 2)): 1, ((-1, 1, 1), (0, 0, 0)): 2})]
    assert bracket_check(Generator(XP, 1), Generator(XM, 1), sample)
    assert bracket_check(Generator(H, 1), Generator(XP, 0), sample)
    assert bracket_check(Generator(H, 2), Generator(H, 2), sample)
    assert bracket_check(Generator(H, 1), Generator(XP, 0), sample).checked == 1


def test_symmetrize():
    v = TensorVector(2, {((1, 1), (1, 0)): 1})
    assert symmetrize(v) == TensorVector(2, {((1, 1), (1, 0)): Fraction(1, 2), ((1, 1), (0, 1)): Fraction(1, 2)})


def test_invariant_basis_examples():
    assert invariant_basis(1, 1, 3).dim == 1
    assert invariant_basis(1, -1, 0).dim == 1
    b = invariant_basis(2, 2, 1)
    assert b.dim == 1
    assert b.contains(TensorVector(2, {((1, 1), (1, 0)): 1, ((1, 1), (0, 1)): 1}))
    assert [invariant_basis(2, 2, d).dim for d in range(5)] == [1, 1, 2, 2, 3]
    assert invariant_basis(3, 2, 2).dim == 0


def test_bounds():
    with pytest.raises(OracleBoundsError):
        invariant_basis(7, 1, 0)
    with pytest.raises(OracleBoundsError):
        tensor_character(2, 9)
    with pytest.raises(OracleBoundsError):
        theta_module_check(9)
    assert invariant_basis(7, 7, 0, force=True).dim == 1


def test_tensor_character_small():
    one = tensor_character(1, 4)
    assert one[Weight((1,))] == Series([1] * 5, trunc=4)
    two = tensor_character(2, 5)
    expected = local_weyl_character(Weight((2,))).scale_series(hilbert_A((2,), 5)).truncate(5)
    assert two == expected


def test_tensor_character_frozen_ell3():
    c = tensor_character(3, 6)
    assert c[Weight((3,))].coeffs == (1, 1, 2, 3, 4, 5, 7)
    assert c[Weight((1,))].coeffs == (1, 2, 4, 6, 9, 12, 16)
    assert c == global_weyl_character(Weight((3,)), 0, 6)


@pytest.mark.parametrize("ell", range(5))
def test_highest_weight_space_is_free(ell):
    assert weight_hilbert(ell, ell, 6) == hilbert_A((ell,), 6)


def test_local_weyl_oracle():
    assert local_weyl_oracle(1) == local_weyl_character(Weight((1,)))
    two = local_weyl_oracle(2)
    assert two[Weight((0,))] == Series([1, 1])
    assert two.dimension_series().coeffs == (3, 1)
    assert local_weyl_oracle(3).dimension_series().at_one() == 8


def test_monomial_symmetric():
    m = monomial_symmetric((2, 1), 3)
    assert len(m.terms) == 6
    assert not monomial_symmetric((1, 1, 1, 1), 3)


def test_p_of_r():
    p = p_of_r((2,), 2)
    assert p == PolyVector(2, {(2, 0): 1, (0, 2): -1})
    # variables t_{m+1}.. with m = 1
    q = p_of_r((1,), 3)
    assert q == PolyVector(3, {(0, 1, 0): 1, (0, 0, 1): -1})
    assert not p_of_r((0, 1), 4)
    with pytest.raises(ValueError):
        p_of_r((1, 1), 3)


def test_m_module_examples():
    assert m_module_hilbert(0, 3, 5) == hilbert_A((3,), 5)
    assert m_module_hilbert(1, 2, 4).coeffs == (1, 1, 2, 2)
    assert m_module_hilbert(1, 2, 4).min_deg == 1
    assert m_module_hilbert(2, 4, 6) == m_module_expected(2, 4, 6)


def test_theta_module():
    r = theta_module_check(4)
    assert r.passed
    assert r.checks == {**r.checks, "brackets": True, "character": True, "cyclicity": True}
    dims = r.checks["character_value"]
    assert dims["trunc"] == 4
