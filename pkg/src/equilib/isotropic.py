"""Isotropic roots, the orbit G(z*), and Pythagorean triples.

Every element of G(z*) is ``orbit_point(m, n) = -1/2((m-n)^2 x + m^2 y + n^2 z)``
for coprime m, n; as a 2x2 matrix it is [[mn, -m^2], [n^2, -mn]].  The
nonzero norm-0 lattice vectors are exactly the multiples 2k * orbit_point(m, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .core import ZS, EquiVec, apply, to_dual_coords
from .linalg import Matrix
from .psl2 import ProjMat, hat
from .roots import norm

Vec = tuple


def _check_pair(m: int, n: int) -> None:
    if m == 0 and n == 0:
        raise ValueError("(m, n) must not be (0, 0)")
    if gcd(m, n) != 1:
        raise ValueError("m=%d and n=%d are not coprime" % (m, n))


def orbit_point(m: int, n: int) -> EquiVec:
    _check_pair(m, n)
    h = Fraction(-1, 2)
    return EquiVec(h * (m - n) ** 2, h * m * m, h * n * n)


def orbit_matrix(m: int, n: int) -> Matrix:
    """The 2x2 matrix g z* g^-1 for g with first column (m, n)."""
    return Matrix([[m * n, -m * m], [n * n, -m * n]])


def orbit_element(m: int, n: int) -> ProjMat:
    """Some theta in SL2(Z) with first column (m, n); then hat(theta) z* = orbit_point(m, n)."""
    _check_pair(m, n)
    # extended Euclid: m*q - n*p = 1
    old_r, r, old_s, s, old_t, t = m, n, 1, 0, 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    # old_s*m + old_t*n = old_r = +-1
    q, p = old_s * old_r, -old_t * old_r
    return ProjMat(m, p, n, q)


def canonical_pair(m: int, n: int) -> tuple[int, int]:
    """Representative of {(m, n), (-m, -n)} with m > 0, or (0, 1)."""
    if m < 0 or (m == 0 and n < 0):
        return (-m, -n)
    return (m, n)


@dataclass(frozen=True)
class IsotropicDecomp:
    k: int
    m: int
    n: int

    @property
    def abc(self) -> tuple[int, int, int]:
        return (abs(self.m - self.n), abs(self.m), abs(self.n))

    def vector(self) -> Vec:
        k, m, n = self.k, self.m, self.n
        return (-k * (m - n) ** 2, -k * m * m, -k * n * n)


def _content(u: Vec) -> int:
    return gcd(gcd(u[0], u[1]), u[2])


def decompose_isotropic(u: Vec) -> IsotropicDecomp:
    """Write a nonzero norm-0 lattice vector as 2k * orbit_point(m, n)."""
    u = tuple(u)
    if u == (0, 0, 0) or norm(u) != 0:
        raise ValueError("%r is not a nonzero isotropic vector" % (u,))
    g = _content(u)
    # entries of an isotropic vector share a sign (all are -k times squares)
    k = -g if sum(u) > 0 else g
    sq_a, sq_m, sq_n = (-c // k for c in u)
    m, n = isqrt(sq_m), isqrt(sq_n)
    if m * m != sq_m or n * n != sq_n:
        raise AssertionError("coordinates of %r are not -k times squares" % (u,))
    if (m - n) ** 2 != sq_a:
        n = -n
    if (m - n) ** 2 != sq_a:
        raise AssertionError("no sign choice fits %r" % (u,))
    m, n = canonical_pair(m, n)
    return IsotropicDecomp(k, m, n)


def canonical_pairs(bound: int):
    """Canonical coprime pairs with |m|, |n| <= bound."""
    for m in range(0, bound + 1):
        for n in range(-bound, bound + 1):
            if (m, n) == (0, 0) or gcd(m, n) != 1:
                continue
            if canonical_pair(m, n) == (m, n):
                yield (m, n)


def enumerate_isotropic(box: int) -> list[Vec]:
    """All 2k * orbit_point(m, n) with coordinates in [-box, box]."""
    if box < 0:
        raise ValueError("box must be >= 0")
    out = set()
    for m, n in canonical_pairs(isqrt(box)):
        base = ((m - n) ** 2, m * m, n * n)
        top = max(base)
        for k in range(1, box // top + 1):
            for s in (k, -k):
                out.add(tuple(-s * c for c in base))
    return sorted(out)


def brute_force_isotropic(box: int) -> list[Vec]:
    if box < 0:
        raise ValueError("box must be >= 0")
    rng = range(-box, box + 1)
    return [
        (a, b, g)
        for a in rng
        for b in rng
        for g in rng
        if (a, b, g) != (0, 0, 0) and a * a + b * b + g * g == 2 * (a * b + b * g + g * a)
    ]


# -- Pythagorean triples -------------------------------------------------------

RELATIONS = ("c=a+b", "a=b+c", "b=c+a")

# (alpha, beta, gamma)^t = M (a^2, b^2, c^2)^t when c = a + b
PYTH_M = Matrix([[-1, 1, 1], [0, -1, 1], [0, 1, 1]])


def _holds(rel: str, a: int, b: int, c: int) -> bool:
    return {"c=a+b": c == a + b, "a=b+c": a == b + c, "b=c+a": b == c + a}[rel]


@dataclass(frozen=True)
class TripleABC:
    a: int
    b: int
    c: int
    relation: str

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) < 0 or (a, b, c) == (0, 0, 0):
            raise ValueError("a, b, c must be nonnegative and not all zero")
        if gcd(gcd(a, b), c) != 1:
            raise ValueError("a, b, c must be relatively prime")
        if self.relation not in RELATIONS or not _holds(self.relation, a, b, c):
            raise ValueError("relation %r does not hold for %r" % (self.relation, (a, b, c)))

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "TripleABC":
        """Tag with the first relation that holds, trying c=a+b, a=b+c, b=c+a."""
        for rel in RELATIONS:
            if _holds(rel, a, b, c):
                return cls(a, b, c, rel)
        raise ValueError("no relation a=b+c, b=c+a, c=a+b holds for %r" % ((a, b, c),))

    @property
    def degenerate(self) -> bool:
        return 0 in (self.a, self.b, self.c)

    @property
    def squares(self) -> tuple[int, int, int]:
        return (self.a ** 2, self.b ** 2, self.c ** 2)

    def omega_element(self) -> EquiVec:
        a2, b2, c2 = self.squares
        return EquiVec(Fraction(-a2, 2), Fraction(-b2, 2), Fraction(-c2, 2))


@dataclass(frozen=True)
class PythTriple:
    alpha: int
    beta: int
    gamma: int
    hypotenuse: str  # "alpha", "beta" or "gamma"

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    def holds(self) -> bool:
        a2, b2, g2 = self.alpha ** 2, self.beta ** 2, self.gamma ** 2
        return {"alpha": a2 == b2 + g2, "beta": b2 == g2 + a2, "gamma": g2 == a2 + b2}[self.hypotenuse]


def pythagorean(t: TripleABC) -> PythTriple:
    a2, b2, c2 = t.squares
    if t.relation == "c=a+b":
        al, be, ga = PYTH_M @ (a2, b2, c2)
        return PythTriple(al, be, ga, "gamma")
    if t.relation == "a=b+c":
        be, ga, al = PYTH_M @ (b2, c2, a2)
        return PythTriple(al, be, ga, "alpha")
    ga, al, be = PYTH_M @ (c2, a2, b2)
    return PythTriple(al, be, ga, "beta")


def triples(max_c: int) -> list[TripleABC]:
    """Every valid (a, b, c) whose largest entry is at most max_c."""
    out = []
    for a in range(max_c + 1):
        for b in range(max_c + 1):
            for c in (a + b, abs(a - b)):
                if c > max_c or (a, b, c) == (0, 0, 0) or gcd(gcd(a, b), c) != 1:
                    continue
                out.append((a, b, c))
    return [TripleABC.of(*abc) for abc in sorted(set(out))]


def omega(max_c: int) -> list[tuple[EquiVec, TripleABC]]:
    """Elements -1/2(a^2 x + b^2 y + c^2 z) of the Weyl orbit of x*, y*, z*."""
    if max_c < 1:
        raise ValueError("max_c must be >= 1")
    return [(t.omega_element(), t) for t in triples(max_c)]


def dual_label(u: EquiVec, minus: str = "−") -> str:
    """Render u over x*, y*, z*, e.g. ``6x*+3y*−2z*``."""
    terms = []
    for coef, name in zip(to_dual_coords(u), ("x*", "y*", "z*")):
        if coef == 0:
            continue
        mag = abs(coef)
        body = ("" if mag == 1 else str(mag)) + name
        if not terms:
            terms.append((minus if coef < 0 else "") + body)
        else:
            terms.append(("+" if coef > 0 else minus) + body)
    return "".join(terms) or "0"


def isotropic_record(u: Vec) -> dict:
    dec = decompose_isotropic(u)
    rec = {"k": dec.k, "m": dec.m, "n": dec.n, "vector": list(u), "abc": list(dec.abc)}
    try:
        rec["pythagorean"] = list(pythagorean(TripleABC.of(*dec.abc)).as_tuple())
    except ValueError:
        rec["pythagorean"] = None
    return rec


def triple_record(t: TripleABC) -> dict:
    vec = tuple(-s for s in t.squares)
    dec = decompose_isotropic(vec)
    p = pythagorean(t)
    return {
        "k": dec.k,
        "m": dec.m,
        "n": dec.n,
        "vector": list(vec),
        "abc": [t.a, t.b, t.c],
        "pythagorean": list(p.as_tuple()),
        "relation": t.relation,
        "hypotenuse": p.hypotenuse,
        "degenerate": t.degenerate,
    }


def sz_power(g: ProjMat) -> Optional[int]:
    """k with g = sz^k if g fixes z*, else None."""
    if apply(hat(g), ZS) != ZS:
        return None
    # g z* g^-1 = z* forces g = +-[[1, -k], [0, 1]]
    if g.c != 0 or g.a != 1 or g.d != 1:
        raise AssertionError("element fixes z* but is not unipotent: %r" % (g,))
    return -g.b
