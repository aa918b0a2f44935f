"""The group G generated by exp(ad x*), exp(ad y*), exp(ad z*), realized as PSL2(Z).

Elements are :class:`ProjMat` values (an SL2(Z) matrix modulo sign) or words
over the generator tokens

    sx sy sz sx' sy' sz' tx ty tz r r2

composed right to left: the word ``[g1, g2]`` is the product g1*g2, so g2
acts first.  ``sx`` is exp(ad x*), ``tx`` the involution sy*sz*sy and ``r``
the 3-cycle x -> y -> z -> x.

Normal forms live in the free product Z2 * Z3 with letters ``b`` (= tx) and
``c``, ``c2`` (= r, r^2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .core import BASIS, XS, YS, ZS, EquiVec, to_matrix
from .linalg import Matrix

GEN_TOKENS = ("sx", "sy", "sz", "sx'", "sy'", "sz'", "tx", "ty", "tz", "r", "r2")
LETTERS = ("b", "c", "c2")

GroupWord = tuple  # of GEN_TOKENS
NormalWord = tuple  # of LETTERS


@dataclass(frozen=True)
class ProjMat:
    """An element of PSL2(Z): the matrix [[a, b], [c, d]] up to sign.

    The stored representative has its first nonzero entry (reading
    a, b, c, d) positive, so equality is plain field comparison.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant of %r is not 1" % ((self.a, self.b, self.c, self.d),))
        lead = next(v for v in (self.a, self.b, self.c, self.d) if v)
        if lead < 0:
            for name in "abcd":
                object.__setattr__(self, name, -getattr(self, name))

    @classmethod
    def from_matrix(cls, m: Matrix) -> "ProjMat":
        (a, b), (c, d) = m.rows
        return cls(a, b, c, d)

    def as_matrix(self) -> Matrix:
        return Matrix([[self.a, self.b], [self.c, self.d]])

    def __matmul__(self, other: "ProjMat") -> "ProjMat":
        return compose(self, other)

    def inverse(self) -> "ProjMat":
        return ProjMat(self.d, -self.b, -self.c, self.a)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


IDENTITY = ProjMat(1, 0, 0, 1)
# Matrices used to identify G with PSL2(Z): B gives tx, C gives r.
A_MAT = ProjMat(0, -1, 1, 1)
B_MAT = ProjMat(0, -1, 1, 0)
C_MAT = ProjMat(1, -1, 1, 0)


def compose(g: ProjMat, h: ProjMat) -> ProjMat:
    return ProjMat(
        g.a * h.a + g.b * h.c,
        g.a * h.b + g.b * h.d,
        g.c * h.a + g.d * h.c,
        g.c * h.b + g.d * h.d,
    )


def inverse(g: ProjMat) -> ProjMat:
    return g.inverse()


def equals(g: ProjMat, h: ProjMat) -> bool:
    return g == h


def _unipotent(u: EquiVec, sign: int) -> ProjMat:
    # exp(+-u) = I +- u since u^2 = 0
    return ProjMat.from_matrix(Matrix.identity(2) + to_matrix(u) * sign)


_GEN = {
    "sx": _unipotent(XS, 1),
    "sy": _unipotent(YS, 1),
    "sz": _unipotent(ZS, 1),
    "sx'": _unipotent(XS, -1),
    "sy'": _unipotent(YS, -1),
    "sz'": _unipotent(ZS, -1),
    "tx": B_MAT,
    "r": C_MAT,
    "r2": C_MAT @ C_MAT,
    "ty": C_MAT @ B_MAT @ C_MAT.inverse(),
    "tz": C_MAT @ C_MAT @ B_MAT @ C_MAT,
}
_LETTER = {"b": B_MAT, "c": C_MAT, "c2": C_MAT @ C_MAT}

# Rewriting of each generator over {b, c, c2}:
#   sz = tx r^-1, sy = r^-1 tx, sx = r sz r^-1, ty = r tx r^-1, tz = r^2 tx r.
EXPANSION = {
    "tx": ("b",),
    "r": ("c",),
    "r2": ("c2",),
    "ty": ("c", "b", "c2"),
    "tz": ("c2", "b", "c"),
    "sx": ("c", "b", "c"),
    "sy": ("c2", "b"),
    "sz": ("b", "c2"),
    "sx'": ("c2", "b", "c2"),
    "sy'": ("b", "c"),
    "sz'": ("c", "b"),
}

INVERSE_TOKEN = {
    "sx": "sx'", "sy": "sy'", "sz": "sz'",
    "sx'": "sx", "sy'": "sy", "sz'": "sz",
    "tx": "tx", "ty": "ty", "tz": "tz",
    "r": "r2", "r2": "r",
}


def generator_matrix(token: str) -> ProjMat:
    try:
        return _GEN[token]
    except KeyError:
        raise ValueError("unknown generator token %r" % (token,)) from None


def letter_matrix(letter: str) -> ProjMat:
    try:
        return _LETTER[letter]
    except KeyError:
        raise ValueError("unknown normal-form letter %r" % (letter,)) from None


def parse_word(text: str) -> GroupWord:
    tokens = tuple(text.split())
    for t in tokens:
        if t not in _GEN:
            raise ValueError("unknown generator token %r" % (t,))
    return tokens


def format_word(word: Sequence[str]) -> str:
    return " ".join(word)


def invert_word(word: Sequence[str]) -> GroupWord:
    return tuple(INVERSE_TOKEN[t] for t in reversed(word))


def word_to_matrix(word: Sequence[str]) -> ProjMat:
    g = IDENTITY
    for t in word:
        g = g @ generator_matrix(t)
    return g


def normal_to_matrix(word: Sequence[str]) -> ProjMat:
    g = IDENTITY
    for t in word:
        g = g @ letter_matrix(t)
    return g


def reduce_letters(letters: Sequence[str]) -> NormalWord:
    """Free-product reduction: merge c-powers mod 3, cancel b*b."""
    out: list = []  # entries are "b" or an int exponent in {1, 2}
    for letter in letters:
        if letter == "b":
            if out and out[-1] == "b":
                out.pop()
            else:
                out.append("b")
            continue
        k = 1 if letter == "c" else 2
        if out and out[-1] != "b":
            k = (out.pop() + k) % 3
            if k == 0:
                continue
        out.append(k)
    return tuple("b" if v == "b" else ("c" if v == 1 else "c2") for v in out)


def normalize(word: Sequence[str]) -> NormalWord:
    letters = []
    for t in word:
        try:
            letters.extend(EXPANSION[t])
        except KeyError:
            raise ValueError("unknown generator token %r" % (t,)) from None
    return reduce_letters(letters)


def normal_to_word(nw: Sequence[str]) -> GroupWord:
    """Spell a normal form with generator tokens (b -> tx, c -> r, c2 -> r2)."""
    return tuple({"b": "tx", "c": "r", "c2": "r2"}[t] for t in nw)


def enumerate_normal_forms(max_len: int) -> Iterator[NormalWord]:
    """All reduced words over b, c, c2 of length <= max_len, shortest first."""
    yield ()
    for n in range(1, max_len + 1):
        for start_b in (True, False):
            n_c = n // 2 if start_b else (n + 1) // 2
            for cs in itertools.product(("c", "c2"), repeat=n_c):
                it = iter(cs)
                yield tuple("b" if (i % 2 == 0) == start_b else next(it) for i in range(n))


def _conj(g: ProjMat, m: Matrix) -> Matrix:
    # the SL2 inverse of this representative; ProjMat.inverse() may flip its sign
    ginv = Matrix([[g.d, -g.b], [-g.c, g.a]])
    return g.as_matrix() @ m @ ginv


_BASIS_2x2 = tuple(to_matrix(b) for b in BASIS)


@lru_cache(maxsize=65536)
def hat(g: ProjMat) -> Matrix:
    """Equitable-coordinate matrix of the automorphism u -> g u g^-1."""
    cols = []
    for m in _BASIS_2x2:
        (p, q), (r, _s) = _conj(g, m).rows
        # images of L stay in L: off-diagonal entries are even
        beta, gamma = q // 2, -(r // 2)
        cols.append((p + beta + gamma, beta, gamma))
    return Matrix.from_columns(cols)


def word_hat(word: Sequence[str]) -> Matrix:
    return hat(word_to_matrix(word))
