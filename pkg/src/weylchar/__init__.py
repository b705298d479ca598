"""Exact graded characters of Weyl modules for type A current algebras."""
from .series import Series, hilbert_A, q_binomial, sl2_kostka
from .rootdata import Character, Partition, Weight, irr_character
from .kostka import Tableau, charge, enum_ssyt, kostka_poly, paper_kostka
from .characters import (
    GradedCharacter,
    VerificationReport,
    decompose,
    global_weyl_character,
    local_weyl_character,
    projective_character,
    symmetric_algebra_character,
    verify_projective_expansion,
    verify_reciprocity,
    verify_theorem2,
)

__version__ = "0.1.0"
