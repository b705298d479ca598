import pytest

from weylchar.characters import (
    GradedCharacter, NonCharacter, decompose, global_weyl_character, local_weyl_character,
    projective_character, reciprocity_multiplicity, shift, symmetric_algebra_character,
    verify_projective_expansion, verify_reciprocity, verify_theorem2,
)
from weylchar.rootdata import Weight, highest_root, irr_character
from weylchar.series import Series, hilbert_A, sl2_kostka


def W(*c):
    return Weight(c)


def test_local_weyl_sl2():
    m = decompose(local_weyl_character(W(4)))
    assert m == {W(4): Series([1]), W(2): Series([1, 1, 1], 1), W(0): Series([1, 0, 1], 2)}


def test_local_weyl_theta_sl3():
    c = local_weyl_character(highest_root(2))
    assert c[W(0, 0)] == Series([2, 1])
    assert decompose(c) == {W(1, 1): Series([1]), W(0, 0): Series([1], 1)}


def test_local_weyl_shift():
    c = local_weyl_character(W(1), 3)
    assert c[W(1)] == Series([1], 3)


def test_fundamental_local_weyl_is_irreducible():
    for i in (1, 2, 3):
        lam = Weight.fundamental(i, 3)
        assert decompose(local_weyl_character(lam)) == {lam: Series([1])}


def test_global_weyl():
    g = global_weyl_character(W(1), 0, 4)
    assert g[W(1)] == Series([1] * 5, trunc=4)
    g2 = global_weyl_character(W(2), 0, 3)
    assert decompose(g2)[W(0)] == Series([1, 1, 2], 1, trunc=3)
    with pytest.raises(ValueError):
        global_weyl_character(W(1), 3, 2)
    with pytest.raises(ValueError):
        global_weyl_character(W(-1), 0, 2)


def test_global_weyl_shifted_keeps_requested_range():
    g = global_weyl_character(W(2), 2, 6)
    assert g.trunc == 6
    assert g[W(2)] == (Series([1], 2) * hilbert_A((2,), 6)).truncate(6)


def test_symmetric_algebra_dimensions():
    assert symmetric_algebra_character(1, 6).dimension_series().coeffs == (1, 3, 9, 22, 51, 108, 221)
    sl3 = symmetric_algebra_character(2, 2).dimension_series()
    assert sl3.coeffs == (1, 8, 44)


def test_projective_character():
    p = projective_character(W(1), 0, 2)
    assert p.slice(0) == irr_character(W(1))
    assert p.slice(1) == irr_character(W(1)) * irr_character(W(2))
    assert projective_character(W(0), 5, 3).entries == {}


def test_decompose_rejects_non_characters():
    bad = GradedCharacter({W(-1): Series([1])}, 1)
    with pytest.raises(NonCharacter):
        decompose(bad)
    neg = GradedCharacter({W(0): Series([-1])}, 1)
    with pytest.raises(NonCharacter):
        decompose(neg)


def test_graded_character_json_round_trip():
    for c in (local_weyl_character(W(1, 1)), global_weyl_character(W(3), 0, 5)):
        assert GradedCharacter.from_dict(c.to_dict()) == c


def test_shift():
    c = shift(global_weyl_character(W(1), 0, 3), 2)
    assert c.trunc == 5 and c[W(1)].min_deg == 2


def test_reciprocity_multiplicity():
    assert reciprocity_multiplicity(0, 2) == sl2_kostka(4, 2)
    assert reciprocity_multiplicity(1, 1) == sl2_kostka(3, 1)


def test_verify_reports():
    r = verify_reciprocity(2, 6)
    assert r.passed and r.label == "PROVED"
    t = verify_theorem2(6)
    assert t.passed and t.checks["character_identity"] and t.checks["dimension_identity"]
    assert t.summary() == "theorem2 [PROVED] up to u^6: pass, cutoff m <= 6"
    assert t.to_dict()["pass"] is True


def test_projective_expansion_sl2_is_proved_label():
    r = verify_projective_expansion(W(2), 6)
    assert r.passed and r.label == "PROVED"


def test_projective_expansion_rank2_is_evidence():
    r = verify_projective_expansion(W(0, 0), 3)
    assert r.label == "CONJECTURAL-EVIDENCE"
    assert r.passed
