"""Exact computation with right LCM semigroups and their monomial *-algebras.

Semigroup families, the monomial rewriting algebra with its expectations
and diagonal norms, budgeted condition checkers, and a truncated regular
representation used as an independent oracle.
"""

from .algebra import AlgebraElement, NormResult, StarAlgebra
from .automata import MealyElement, SelfSimilarGroup, ZappaSzep
from .coeffs import Gaussian
from .config import ConfigError, SemigroupConfig, load, load_text
from .core import (BudgetExhausted, FamilyMismatch, NotAUnit, SearchBudget, Semigroup, Status,
                   UnsupportedFamily, Unitisation, Verdict, monoid_of, residual_nonempty, shortlex_ball)
from .expressions import ExpressionError, parse_expression
from .monoids import FreeAbelianMonoid, FreeMonoid, GeneratedSubmonoid, Naturals, NaturalsNoOne
from .semidirect import (DiagonalScaling, PolynomialMultiplication, PowerEndomorphisms,
                         SemidirectProduct, ShiftAction)

__all__ = [
    "AlgebraElement", "NormResult", "StarAlgebra", "MealyElement", "SelfSimilarGroup", "ZappaSzep",
    "Gaussian", "ConfigError", "SemigroupConfig", "load", "load_text", "BudgetExhausted",
    "FamilyMismatch", "NotAUnit", "SearchBudget", "Semigroup", "Status", "UnsupportedFamily",
    "Unitisation", "Verdict", "monoid_of", "residual_nonempty", "shortlex_ball", "ExpressionError",
    "parse_expression", "FreeAbelianMonoid", "FreeMonoid", "GeneratedSubmonoid", "Naturals",
    "NaturalsNoOne", "DiagonalScaling", "PolynomialMultiplication", "PowerEndomorphisms",
    "SemidirectProduct", "ShiftAction",
]
