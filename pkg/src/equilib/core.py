"""sl2 in equitable coordinates.

An element ``alpha*x + beta*y + gamma*z`` is stored as an :class:`EquiVec`
of exact rationals.  The 2x2 realization is

    x = h = [[1, 0], [0, -1]]
    y = 2e - h = [[-1, 2], [0, 1]]
    z = -2f - h = [[-1, 0], [-2, 1]]

and everything else (brackets, trace form, exp ad) is computed from it.
3x3 matrices acting on equitable coordinates use the column convention:
column j is the image of the j-th basis vector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, clean, qstr


@dataclass(frozen=True)
class EquiVec:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def of(cls, coords) -> "EquiVec":
        a, b, g = coords
        return cls(a, b, g)

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))

    def coords(self) -> tuple:
        return (clean(self.alpha), clean(self.beta), clean(self.gamma))

    def __add__(self, other: "EquiVec") -> "EquiVec":
        return EquiVec(self.alpha + other.alpha, self.beta + other.beta, self.gamma + other.gamma)

    def __sub__(self, other: "EquiVec") -> "EquiVec":
        return EquiVec(self.alpha - other.alpha, self.beta - other.beta, self.gamma - other.gamma)

    def __neg__(self) -> "EquiVec":
        return EquiVec(-self.alpha, -self.beta, -self.gamma)

    def __mul__(self, k) -> "EquiVec":
        return EquiVec(k * self.alpha, k * self.beta, k * self.gamma)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not (self.alpha or self.beta or self.gamma)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self)

    def to_json(self) -> dict:
        return {"alpha": qstr(self.alpha), "beta": qstr(self.beta), "gamma": qstr(self.gamma)}

    @classmethod
    def from_json(cls, obj) -> "EquiVec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(Fraction(obj["alpha"]), Fraction(obj["beta"]), Fraction(obj["gamma"]))

    def __str__(self) -> str:
        return "(%s, %s, %s)" % tuple(qstr(c) for c in self)


ZERO = EquiVec(0, 0, 0)
X = EquiVec(1, 0, 0)
Y = EquiVec(0, 1, 0)
Z = EquiVec(0, 0, 1)
_h = Fraction(1, 2)
XS = EquiVec(0, -_h, -_h)
YS = EquiVec(-_h, 0, -_h)
ZS = EquiVec(-_h, -_h, 0)

BASIS = (X, Y, Z)
DUAL_BASIS = (XS, YS, ZS)

# Gram matrix of the trace form on x, y, z (a hyperbolic Cartan matrix).
GRAM = Matrix([[2, -2, -2], [-2, 2, -2], [-2, -2, 2]])
# Gram matrix on x*, y*, z*; equals 4 * GRAM^-1.
DUAL_GRAM = Matrix([[0, -1, -1], [-1, 0, -1], [-1, -1, 0]])
# Columns are x*, y*, z* in equitable coordinates.
DUAL_TO_EQUITABLE = Matrix.from_columns([v.coords() for v in DUAL_BASIS])


def to_matrix(u: EquiVec) -> Matrix:
    a, b, g = u
    return Matrix([[a - b - g, 2 * b], [-2 * g, -a + b + g]])


def from_matrix(m: Matrix) -> EquiVec:
    (p, q), (r, s) = m.rows
    if p + s != 0:
        raise ValueError("matrix is not traceless: trace %s" % qstr(p + s))
    beta = Fraction(q) / 2
    gamma = -Fraction(r) / 2
    return EquiVec(p + beta + gamma, beta, gamma)


E = from_matrix(Matrix([[0, 1], [0, 0]]))
F = from_matrix(Matrix([[0, 0], [1, 0]]))
H = from_matrix(Matrix([[1, 0], [0, -1]]))

NAMED = {
    "e": E, "f": F, "h": H,
    "x": X, "y": Y, "z": Z,
    "x*": XS, "y*": YS, "z*": ZS,
}


def element(name: str) -> EquiVec:
    try:
        return NAMED[name]
    except KeyError:
        raise ValueError("unknown element %r; expected one of %s" % (name, ", ".join(NAMED))) from None


def bracket(u: EquiVec, v: EquiVec) -> EquiVec:
    a, b = to_matrix(u), to_matrix(v)
    return from_matrix(a @ b - b @ a)


def trace_form(u: EquiVec, v: EquiVec):
    """(u, v) = tr(uv), evaluated through the Gram matrix."""
    w = GRAM @ tuple(v)
    return clean(sum(a * b for a, b in zip(u, w)))


def killing_form(u: EquiVec, v: EquiVec):
    return 4 * trace_form(u, v)


def to_dual_coords(u: EquiVec) -> tuple:
    """Coefficients of u over x*, y*, z*: the coefficient of v* is (u, v)/2."""
    return tuple(clean(Fraction(c) / 2) for c in GRAM @ tuple(u))


def from_dual_coords(coords) -> EquiVec:
    return EquiVec.of(DUAL_TO_EQUITABLE @ tuple(coords))


def ad_matrix(u: EquiVec) -> Matrix:
    return Matrix.from_columns([bracket(u, b).coords() for b in BASIS])


def is_nilpotent(u: EquiVec) -> bool:
    m = to_matrix(u)
    return (m @ m).is_zero()


def exp_ad(u: EquiVec) -> Matrix:
    """Matrix of exp(ad u) on equitable coordinates, for u with u^2 = 0."""
    if not is_nilpotent(u):
        raise ValueError("exp_ad needs a nilpotent element, got %s" % u)
    a = ad_matrix(u)
    return Matrix.identity(3) + a + (a @ a) * Fraction(1, 2)


def apply(m: Matrix, u: EquiVec) -> EquiVec:
    return EquiVec.of(m @ tuple(u))


def preserves_gram(m: Matrix) -> bool:
    return m.T @ GRAM @ m == GRAM
