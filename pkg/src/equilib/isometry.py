"""Isometries of L: reflections, the S3 and sign actions, and the split
Isom(L) = <(y z), -1> x| G.

Membership in G is decided by descent on the image of x (G acts simply
transitively on real roots); membership in the even Weyl group W+ adds the
requirement that the image in G/W+ = S3 is trivial.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import BASIS, GRAM, XS, YS, ZS, EquiVec, bracket, preserves_gram, to_matrix
from .linalg import Matrix
from .psl2 import EXPANSION, GroupWord, word_hat
from .roots import descent, norm

Perm3 = tuple  # images of (x, y, z) as indices 0, 1, 2

PERM_ID = (0, 1, 2)
PERM_XY = (1, 0, 2)
PERM_YZ = (0, 2, 1)
PERM_ZX = (2, 1, 0)
PERM_XYZ = (1, 2, 0)  # x -> y -> z -> x, i.e. r
PERM_XZY = (2, 0, 1)

PERM_NAMES = {
    PERM_ID: "id",
    PERM_XY: "(x y)",
    PERM_YZ: "(y z)",
    PERM_ZX: "(z x)",
    PERM_XYZ: "(x y z)",
    PERM_XZY: "(x z y)",
}
PERM_BY_NAME = {v: k for k, v in PERM_NAMES.items()}


def perm_compose(p: Perm3, q: Perm3) -> Perm3:
    """p after q."""
    return tuple(p[q[i]] for i in range(3))


def perm_inverse(p: Perm3) -> Perm3:
    out = [0, 0, 0]
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_sign(p: Perm3) -> int:
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def perm_matrix(p: Perm3) -> Matrix:
    return Matrix.from_columns([[1 if i == p[j] else 0 for i in range(3)] for j in range(3)])


I3 = Matrix.identity(3)
MINUS = -I3
SWAP_YZ = perm_matrix(PERM_YZ)
TX = word_hat(("tx",))
TY = word_hat(("ty",))
TZ = word_hat(("tz",))
RHO = word_hat(("r",))
RHO2 = word_hat(("r2",))


def simple_reflection(s: str) -> Matrix:
    """r_s(v) = v - (s, v) s for s in {"x", "y", "z"} (the simple roots have norm 2)."""
    i = "xyz".index(s)
    cols = []
    for j in range(3):
        col = [1 if k == j else 0 for k in range(3)]
        col[i] -= GRAM[i, j]
        cols.append(col)
    return Matrix.from_columns(cols)


RX, RY, RZ = (simple_reflection(s) for s in "xyz")
REFLECTIONS = {"rx": RX, "ry": RY, "rz": RZ}


def weyl_matrix(word: Sequence[str]) -> Matrix:
    m = I3
    for t in word:
        m = m @ REFLECTIONS[t]
    return m


def is_isometry_of_L(m: Matrix) -> bool:
    """M^t A M = A with M and M^-1 integral."""
    if m.shape != (3, 3) or not m.is_integral():
        return False
    return preserves_gram(m) and abs(m.det()) == 1


def preserves_dual_lattice(m: Matrix) -> bool:
    """Whether M maps L* = sl2(Z) onto itself (checked in the 2x2 picture)."""
    try:
        inv = m.inverse()
    except ZeroDivisionError:
        return False
    for mm in (m, inv):
        for u in (XS, YS, ZS):
            img = to_matrix(_apply(mm, u))
            if not img.is_integral():
                return False
    return True


def is_isometry_of_dual(m: Matrix) -> bool:
    return m.shape == (3, 3) and preserves_gram(m) and preserves_dual_lattice(m)


def _apply(m: Matrix, u: EquiVec) -> EquiVec:
    return EquiVec.of(m @ tuple(u))


def membership_g(m: Matrix) -> Optional[GroupWord]:
    """A word for M if M lies in G, else None."""
    v = m.column(0)
    if not all(isinstance(c, int) for c in v) or norm(v) != 2:
        return None
    w = descent(v)
    return w if word_hat(w) == m else None


# G -> S3 with kernel W+: tx, ty, tz go to the transpositions, r to the 3-cycle.
_LETTER_PERM = {"b": PERM_YZ, "c": PERM_XYZ, "c2": PERM_XZY}


def s3_quotient(word: Sequence[str]) -> Perm3:
    p = PERM_ID
    for t in word:
        for letter in EXPANSION[t]:
            p = perm_compose(p, _LETTER_PERM[letter])
    return p


def in_w_plus(m: Matrix) -> bool:
    w = membership_g(m)
    return w is not None and s3_quotient(w) == PERM_ID


def is_automorphism(m: Matrix) -> bool:
    """True for Lie automorphisms, False for antiautomorphisms (checked on the basis)."""
    sign = None
    for u, v in ((0, 1), (1, 2), (2, 0)):
        bu, bv = BASIS[u], BASIS[v]
        lhs = _apply(m, bracket(bu, bv))
        rhs = bracket(_apply(m, bu), _apply(m, bv))
        s = 1 if lhs == rhs else (-1 if lhs == -rhs else 0)
        if s == 0 or (sign is not None and s != sign):
            raise ValueError("matrix is neither an automorphism nor an antiautomorphism")
        sign = s
    return sign == 1


@dataclass(frozen=True)
class IsoDecomp:
    sign: int  # +1 or -1
    swap: Perm3  # PERM_ID or PERM_YZ
    word: GroupWord

    def matrix(self) -> Matrix:
        return (perm_matrix(self.swap) @ word_hat(self.word)) * self.sign

    @property
    def automorphism(self) -> bool:
        return self.sign * perm_sign(self.swap) == 1

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "swap": PERM_NAMES[self.swap],
            "word": " ".join(self.word),
            "automorphism": self.automorphism,
        }


# Stabilizer of x in Isom(L): 1, (y z), -tx, -(y z) tx, tagged by (sign, swap).
STABILIZER = (
    (I3, 1, PERM_ID),
    (SWAP_YZ, 1, PERM_YZ),
    (-TX, -1, PERM_ID),
    (-(SWAP_YZ @ TX), -1, PERM_YZ),
)


class DecompositionError(ValueError):
    pass


def decompose(m: Matrix) -> IsoDecomp:
    """Write M = sign * swap * hat(word) with swap in {1, (y z)}."""
    v = m.column(0)
    if not all(isinstance(c, int) for c in v) or norm(v) != 2:
        raise DecompositionError("image of x is not a real root: %r" % (v,))
    g = word_hat(descent(v))
    h = g.inverse() @ m
    for stab, sign, swap in STABILIZER:
        if h == stab:
            # M = g h; pull the sign and swap to the left and read the G part off
            rest = (perm_matrix(swap) @ m) * sign
            word = membership_g(rest)
            if word is None:
                break
            return IsoDecomp(sign, swap, word)
    raise DecompositionError("no stabilizer element matches; input is not an isometry of L")


# -- structure report ---------------------------------------------------------


def _check(name: str, ok: bool, witness=None) -> dict:
    return {"check": name, "status": "pass" if ok else "fail", "witness": witness}


COSET_REPS = (
    ("1", I3),
    ("tx", TX),
    ("ty", TY),
    ("tz", TZ),
    ("r", RHO),
    ("r2", RHO2),
)


def verify_structure() -> list[dict]:
    report = []
    sw_xy, sw_zx = perm_matrix(PERM_XY), perm_matrix(PERM_ZX)

    # (a) r_x = (y z) tx and cyclic versions
    pairs = [("rx=(y z)tx", RX, SWAP_YZ @ TX), ("ry=(z x)ty", RY, sw_zx @ TY), ("rz=(x y)tz", RZ, sw_xy @ TZ)]
    for name, lhs, rhs in pairs:
        report.append(_check("reflections:" + name, lhs == rhs))

    # (b) products of two reflections lie in G
    pairs = [
        ("rx ry=r tz ty", RX @ RY, RHO @ TZ @ TY),
        ("ry rz=r tx tz", RY @ RZ, RHO @ TX @ TZ),
        ("rz rx=r ty tx", RZ @ RX, RHO @ TY @ TX),
    ]
    for name, lhs, rhs in pairs:
        report.append(_check("even:" + name, lhs == rhs and in_w_plus(lhs)))

    # (c) the six cosets of W+ in G are distinct
    bad = [
        (a, b)
        for (a, ga), (b, gb) in itertools.combinations(COSET_REPS, 2)
        if in_w_plus(ga.inverse() @ gb)
    ]
    report.append(_check("cosets:six distinct", not bad, bad or None))
    s3_ok = all(
        s3_quotient(membership_g(g)) == p
        for (_, g), p in zip(COSET_REPS, (PERM_ID, PERM_YZ, PERM_ZX, PERM_XY, PERM_XYZ, PERM_XZY))
    )
    report.append(_check("cosets:G/W+ = S3", s3_ok))

    # (d) dihedral relations in Isom(L)/W+
    eta = SWAP_YZ
    theta = SWAP_YZ @ TY
    report.append(_check("dihedral:eta^2 in W+", in_w_plus(eta @ eta)))
    orders = [k for k in range(1, 7) if in_w_plus(theta ** k)]
    report.append(_check("dihedral:theta has order 6", orders == [6], {"powers_in_W+": orders}))
    report.append(_check("dihedral:eta theta eta theta in W+", in_w_plus(eta @ theta @ eta @ theta)))
    report.append(_check("dihedral:theta = tz (y z)", theta == TZ @ SWAP_YZ))

    # (e) 24 classes of Isom(L) mod W+
    reps = [
        (f"{s:+d}{'(y z)' if sw else ''}{name}", (SWAP_YZ @ g if sw else g) * s)
        for s in (1, -1)
        for sw in (False, True)
        for name, g in COSET_REPS
    ]
    bad = [(a, b) for (a, ga), (b, gb) in itertools.combinations(reps, 2) if in_w_plus(ga.inverse() @ gb)]
    report.append(_check("index:24 classes mod W+", len(reps) == 24 and not bad, bad or None))

    # normalizing relations for the semidirect product
    report.append(_check("normalizer:(y z) tx = tx (y z)", SWAP_YZ @ TX == TX @ SWAP_YZ))
    report.append(_check("normalizer:(y z) r = r^2 (y z)", SWAP_YZ @ RHO == RHO2 @ SWAP_YZ))

    # stabilizer of x in Isom(L), and its intersection with G
    stab_ok = all(is_isometry_of_L(s) and s.column(0) == (1, 0, 0) for s, _, _ in STABILIZER)
    stab_g = [membership_g(s) for s, _, _ in STABILIZER]
    report.append(_check("stabilizer:fixes x", stab_ok))
    report.append(_check("stabilizer:meets G trivially", stab_g[0] == () and stab_g[1:] == [None] * 3))

    # reflections are antiautomorphisms; G and -(y z) are automorphisms
    anti = [not is_automorphism(r) for r in (RX, RY, RZ, MINUS, SWAP_YZ)]
    auto = [is_automorphism(g) for g in (TX, RHO, -SWAP_YZ)]
    report.append(_check("aaut:reflections, -1, (y z) are antiautomorphisms", all(anti)))
    report.append(_check("aaut:tx, r, -(y z) are automorphisms", all(auto)))

    # L and L* have the same isometry group
    gens = [RX, RY, RZ, MINUS, SWAP_YZ, TX, RHO, word_hat(("sx",))]
    non = [Matrix.diagonal([1, 1, 2]), Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])]
    same = all(is_isometry_of_L(m) == is_isometry_of_dual(m) for m in gens + non)
    report.append(_check("dual lattice:Isom(L*) = Isom(L) on generators", same and all(map(is_isometry_of_L, gens))))
    return report


def report_json(report: list[dict]) -> str:
    return json.dumps(report, indent=2)
