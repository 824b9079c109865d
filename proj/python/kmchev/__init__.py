"""Chevalley coefficients for Kac-Moody flag manifolds (LS paths, alcove walks, nilHecke ring)."""

from ._kmchev import (
    LayerCapExceeded,
    chevalley,
    crystal,
    demazure_character,
    lift_down,
    lift_up,
    selftest,
    selftest_scenarios,
    tree_dot,
)

MODELS = ("ls", "alcove", "nilhecke")


def models_agree(cartan, weight, w, sign="dominant"):
    """True when the three models return the same fixed-w row."""
    rows = [chevalley(cartan, weight, w=w, sign=sign, model=m)["rows"] for m in MODELS]
    return rows[0] == rows[1] == rows[2]


__all__ = [
    "LayerCapExceeded",
    "MODELS",
    "chevalley",
    "crystal",
    "demazure_character",
    "lift_down",
    "lift_up",
    "models_agree",
    "selftest",
    "selftest_scenarios",
    "tree_dot",
]
