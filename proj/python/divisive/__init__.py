"""Divisiveness and polarisation measures over profiles of strict rankings."""

from ._core import (
    ParseError,
    Profile,
    Rule,
    UndefinedScoreError,
    UndefinedTauError,
    deplete,
    divisiveness,
    generate,
    generate_urn,
    inject,
    kendall_tau,
    max_split,
    rank_variances,
    scores,
)

__all__ = [
    "ParseError",
    "Profile",
    "Rule",
    "UndefinedScoreError",
    "UndefinedTauError",
    "deplete",
    "divisiveness",
    "generate",
    "generate_urn",
    "inject",
    "kendall_tau",
    "max_split",
    "rank_variances",
    "scores",
]
