"""Quasipolarities, dichotomies, counterpoint symmetries and closure operators
on finite carriers.

Worlds, morphisms and elements use the same text syntax as the command line
tool: ``affine:12``, ``e2.5``, ``"0,3,4,7,8,9"``.
"""

import json
from fractions import Fraction

from ._contrapunctus import (
    ContrapunctusError,
    NonStrongDichotomy,
    ParseError,
    is_quasipolarity,
    normalize_morphism,
    quasipolarities,
    run_cli,
    worlds,
)
from . import _contrapunctus as _core

__all__ = [
    "ContrapunctusError",
    "NonStrongDichotomy",
    "ParseError",
    "classify_dichotomies",
    "closure",
    "is_dichotomy",
    "is_quasipolarity",
    "is_strong",
    "normalize_morphism",
    "pseudocomplement",
    "quasipolarities",
    "quasipolarities_for",
    "run_cli",
    "successors",
    "symmetries",
    "verify_kuratowski",
    "worlds",
]


def _elements(value):
    if isinstance(value, str):
        return value
    return ",".join(str(v) for v in value)


def is_dichotomy(world, polarity, kappa):
    return _core.is_dichotomy(world, polarity, _elements(kappa))


def quasipolarities_for(world, kappa):
    return _core.quasipolarities_for(world, _elements(kappa))


def is_strong(world, kappa):
    return _core.is_strong(world, _elements(kappa))


def classify_dichotomies(world):
    return json.loads(_core.classify_json(world))


def symmetries(world, kappa, interval, cantus=0, restricted_family=False, polarity=None):
    """Symmetry report for the consonance cantus + e interval."""
    return json.loads(
        _core.symmetries_json(
            world, _elements(kappa), str(interval), str(cantus), restricted_family, polarity
        )
    )


def successors(world, kappa, restricted_family=False, polarity=None):
    """One symmetry report per consonant interval, cantus firmus 0."""
    return json.loads(_core.successors_json(world, _elements(kappa), restricted_family, polarity))


def closure(world, map, set, mode="iterated"):
    """Closure of ``set`` under M -> M v map(M); returns element strings."""
    return _core.closure(world, map, _elements(set), mode)


def verify_kuratowski(world, map, mode="iterated", trials=1000):
    return json.loads(_core.verify_kuratowski_json(world, map, mode, trials))


def pseudocomplement(grades):
    """Pointwise: positive grade -> 0, zero grade -> 1. Grades may be
    Fractions, ints or strings; the result is a list of Fractions."""
    return [Fraction(g) for g in _core.pseudocomplement([str(Fraction(g)) for g in grades])]
