"""The lattice L = Zx + Zy + Zz, its real roots, and height descent.

Lattice vectors are plain integer triples ``(alpha, beta, gamma)``.  A real
root is a vector of square norm 2; every one of them is g(x) for a unique
g in G, and :func:`descent` finds that g as a word by repeatedly applying
whichever of tx, ty, tz lowers the height alpha+beta+gamma.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .psl2 import GroupWord, word_hat

Vec = tuple  # (int, int, int)

X_ROOT = (1, 0, 0)
Y_ROOT = (0, 1, 0)
Z_ROOT = (0, 0, 1)


def norm(u: Vec) -> int:
    """Square norm (u, u) under the trace form."""
    a, b, g = u
    return 2 * (a * a + b * b + g * g - 2 * (a * b + b * g + g * a))


def norm_five_ways(u: Vec) -> tuple[int, int, int, int, int]:
    """Five closed forms of (u, u)/2; all must agree."""
    a, b, g = u
    return (
        a * a + b * b + g * g - 2 * (a * b + b * g + g * a),
        2 * (a * a + b * b + g * g) - (a + b + g) ** 2,
        (a + b - g) ** 2 - 4 * a * b,
        (b + g - a) ** 2 - 4 * b * g,
        (g + a - b) ** 2 - 4 * g * a,
    )


def height(u: Vec) -> int:
    return sum(u)


def neg(u: Vec) -> Vec:
    return (-u[0], -u[1], -u[2])


# Coordinate forms of tx, ty, tz and r (each is the hat of a group element).
def tau_x(u: Vec) -> Vec:
    a, b, g = u
    return (2 * b + 2 * g - a, g, b)


def tau_y(u: Vec) -> Vec:
    a, b, g = u
    return (g, 2 * a + 2 * g - b, a)


def tau_z(u: Vec) -> Vec:
    a, b, g = u
    return (b, a, 2 * a + 2 * b - g)


def rho(u: Vec) -> Vec:
    a, b, g = u
    return (g, a, b)


TAU = (("tx", tau_x), ("ty", tau_y), ("tz", tau_z))


# Simple reflections r_u(v) = v - (u, v) u.
def reflect_x(u: Vec) -> Vec:
    a, b, g = u
    return (2 * b + 2 * g - a, b, g)


def reflect_y(u: Vec) -> Vec:
    a, b, g = u
    return (a, 2 * a + 2 * g - b, g)


def reflect_z(u: Vec) -> Vec:
    a, b, g = u
    return (a, b, 2 * a + 2 * b - g)


REFLECT = {"rx": reflect_x, "ry": reflect_y, "rz": reflect_z}


@dataclass(frozen=True)
class RootInfo:
    norm: int
    height: int
    kind: str  # "real", "isotropic", "negativeNorm", "nonRoot-positiveNorm"
    parity: Optional[str] = None  # "Wx", "Wy", "Wz" for real roots
    zero: bool = False


def parity_class(u: Vec) -> Optional[str]:
    odd = [c % 2 for c in u]
    if sum(odd) != 1:
        return None
    return ("Wx", "Wy", "Wz")[odd.index(1)]


def classify(u: Vec) -> RootInfo:
    n = norm(u)
    h = height(u)
    if u == (0, 0, 0):
        return RootInfo(n, h, "nonRoot-positiveNorm", zero=True)
    if n == 2:
        return RootInfo(n, h, "real", parity_class(u))
    if n == 0:
        return RootInfo(n, h, "isotropic")
    if n < 0:
        return RootInfo(n, h, "negativeNorm")
    return RootInfo(n, h, "nonRoot-positiveNorm")


_SIMPLE_WORD = {X_ROOT: (), Y_ROOT: ("r",), Z_ROOT: ("r2",)}


def descent(u: Sequence[int]) -> GroupWord:
    """Word w over {tx, ty, tz, r, r2} with hat(w)(x) = u, for a real root u."""
    u = tuple(u)
    if norm(u) != 2:
        raise ValueError("descent needs a real root (norm 2); %r has norm %d" % (u, norm(u)))
    suffix: tuple = ()
    if height(u) < 0:
        # w(-x) = -w(x) and tx(x) = -x
        u, suffix = neg(u), ("tx",)
    prefix = []
    while u not in _SIMPLE_WORD:
        h = height(u)
        best = None
        for name, f in TAU:
            v = f(u)
            if best is None or height(v) < height(best[1]):
                best = (name, v)
        if height(best[1]) >= h:
            raise AssertionError("no height-decreasing step from %r" % (u,))
        prefix.append(best[0])
        u = best[1]
    return tuple(prefix) + _SIMPLE_WORD[u] + suffix


def replay(word: Sequence[str]) -> Vec:
    """Image of x under the group element spelled by ``word``."""
    return word_hat(word).column(0)


def enumerate_real(max_height: int) -> list[Vec]:
    """Real roots with |height| <= max_height, by closure of x, y, z under tx, ty, tz.

    Positive roots climb from a simple root through strictly increasing
    heights, so pruning at the bound loses nothing.
    """
    if max_height < 0:
        raise ValueError("max_height must be >= 0")
    if max_height == 0:
        return []
    seen = {X_ROOT, Y_ROOT, Z_ROOT}
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for _, f in TAU:
            v = f(u)
            if 0 < height(v) <= max_height and v not in seen:
                seen.add(v)
                queue.append(v)
    return sorted(seen | {neg(u) for u in seen})


def brute_force_real(box: int) -> list[Vec]:
    """All norm-2 vectors with every coordinate in [-box, box]."""
    if box < 0:
        raise ValueError("box must be >= 0")
    rng = range(-box, box + 1)
    out = []
    for a in rng:
        for b in rng:
            for g in rng:
                # (u, u)/2 == 1, second closed form
                if 2 * (a * a + b * b + g * g) - (a + b + g) ** 2 == 1:
                    out.append((a, b, g))
    return out


def in_box(u: Vec, box: int) -> bool:
    return max(abs(c) for c in u) <= box


def root_record(u: Vec, with_word: bool = True) -> dict:
    info = classify(u)
    rec = {"vector": list(u), "norm": info.norm, "height": info.height, "class": info.kind}
    if info.kind == "real":
        rec["parity"] = info.parity
        if with_word:
            rec["word"] = " ".join(descent(u))
    return rec
