"""Büchi register automata over bar strings.

Words use the text syntax ``a`` / ``|a`` for plain and bar letters and
``u ; v`` for the lasso u v v v ...; ``_`` stands for an empty spine.
"""

from ._rnna import (
    Automaton,
    Error,
    Verdict,
    alpha_equiv,
    alpha_equiv_lasso,
    bar_equivalence,
    bar_inclusion,
    cleanify,
    data_inclusion,
    free_names,
    is_clean,
    ub,
)

__all__ = [
    "Automaton",
    "Error",
    "Verdict",
    "alpha_equiv",
    "alpha_equiv_lasso",
    "bar_equivalence",
    "bar_inclusion",
    "cleanify",
    "data_inclusion",
    "free_names",
    "is_clean",
    "ub",
]
