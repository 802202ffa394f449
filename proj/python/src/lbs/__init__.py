"""Trees, forests and their Hopf-algebraic operations with exact rational coefficients."""

from fractions import Fraction

from . import _core
from ._core import (
    InputError,
    ParseError,
    canonical,
    enumerate,
    laws,
    parse_forest,
    run_cli,
    symmetry_factor,
    tree_factorial,
)

__all__ = [
    "InputError",
    "ParseError",
    "canonical",
    "enumerate",
    "laws",
    "parse_forest",
    "run_cli",
    "run_law",
    "symmetry_factor",
    "tree_factorial",
    "left_graft",
    "gl_product",
    "shuffle",
    "graft",
    "delta_ck",
    "delta_h",
    "delta_n",
    "delta_shuffle",
    "delta_w",
    "rho",
]


def _comb(terms):
    return {k: Fraction(c) for c, k in terms}


def _tensor(terms):
    return {(l, r): Fraction(c) for c, l, r in terms}


def left_graft(a, b):
    return _comb(_core.left_graft(a, b))


def gl_product(a, b):
    return _comb(_core.gl_product(a, b))


def shuffle(a, b):
    return _comb(_core.shuffle(a, b))


def graft(a, b):
    """Pre-Lie grafting of non-planar trees."""
    return _comb(_core.graft(a, b))


def delta_ck(forest):
    return _tensor(_core.delta_ck(forest))


def delta_h(forest):
    return _tensor(_core.delta_h(forest))


def delta_n(forest):
    return _tensor(_core.delta_n(forest))


def delta_shuffle(forest):
    return _tensor(_core.delta_shuffle(forest))


def delta_w(forest, rule="lie"):
    return _tensor(_core.delta_w(forest, rule))


def rho(forest, rule="lie"):
    return _tensor(_core.rho(forest, rule))


def run_law(name, order=None):
    """Returns (ok, cases, counterexample)."""
    return _core.run_law(name, order)
