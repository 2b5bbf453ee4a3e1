"""Exact multi-symmetric functions with classical and quantum (star) products.

The heavy lifting happens in the C++ extension ``multisym._multisym``; this
package re-exports it and adds a dict-returning ``evaluate`` built on the JSON
renderer.
"""

import json as _json
from fractions import Fraction

from multisym._multisym import (
    ESum,
    HbarSeries,
    Polynomial,
    bracket_esum,
    classical_product,
    commutator,
    count_L,
    decompose,
    enumerate_L,
    enumerate_Q,
    evaluate_json,
    evaluate_text,
    expand_elementary,
    expand_homogeneous,
    expand_vaccarino,
    parse_poly,
    poisson_bracket,
    power_sum,
    quantum_product,
    star,
    symmetrize,
    verify_generation,
)

__all__ = [
    "ESum",
    "HbarSeries",
    "Polynomial",
    "bracket_esum",
    "classical_product",
    "commutator",
    "count_L",
    "decompose",
    "enumerate_L",
    "enumerate_Q",
    "evaluate",
    "evaluate_json",
    "evaluate_text",
    "expand_elementary",
    "expand_homogeneous",
    "expand_vaccarino",
    "fraction",
    "parse_poly",
    "poisson_bracket",
    "power_sum",
    "quantum_product",
    "star",
    "symmetrize",
    "verify_generation",
]

__version__ = "0.1.0"


def evaluate(expr, n=2, d=None, order=None, sign=1, verify=False):
    """Evaluate an expression and return the result document as a dict.

    Products of e-symbols are computed along two routes: the symbolic one
    (``esum``) and the direct polynomial expansion; ``verify=True`` compares
    them and sets ``oracle_match``.
    """
    return _json.loads(evaluate_json(expr, n, d, order, sign, verify))


def fraction(value):
    """Rational coefficient (as emitted in result documents) -> Fraction."""
    if isinstance(value, dict):
        return Fraction(int(value["num"]), int(value["den"]))
    return Fraction(value)
