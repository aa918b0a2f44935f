"""Exact computations with the equitable basis x, y, z of sl2.

Modules: ``core`` (the Lie algebra), ``psl2`` (the group G as PSL2(Z)),
``roots`` (real roots and descent), ``isometry`` (the isometry group of the
lattice), ``isotropic`` (isotropic roots and Pythagorean triples), ``rep``
(the modules V(d)), ``disk`` (the Poincare disk picture) and ``cli``.
"""

__version__ = "0.1.0"

from .core import BASIS, DUAL_BASIS, GRAM, EquiVec, bracket, exp_ad, from_matrix, to_matrix, trace_form
from .linalg import Matrix
from .psl2 import ProjMat, hat, normalize, word_hat
from .roots import classify, descent, enumerate_real, norm

__all__ = [
    "BASIS",
    "DUAL_BASIS",
    "GRAM",
    "EquiVec",
    "Matrix",
    "ProjMat",
    "bracket",
    "classify",
    "descent",
    "enumerate_real",
    "exp_ad",
    "from_matrix",
    "hat",
    "norm",
    "normalize",
    "to_matrix",
    "trace_form",
    "word_hat",
]
