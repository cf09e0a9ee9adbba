"""Domination polynomials of king and wazir boards."""

from kingdom.board import BoardSpec, Boundary, Family, parse_board
from kingdom.engine import evaluate, polynomial
from kingdom.poly import DominationPolynomial

__all__ = [
    "BoardSpec",
    "Boundary",
    "DominationPolynomial",
    "Family",
    "evaluate",
    "parse_board",
    "polynomial",
]
