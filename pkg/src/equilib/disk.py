"""The Poincare disk picture of the Weyl group action on L.

Lattice vectors are embedded in signature (2, 1) coordinates

    X = alpha - beta,   Yp = alpha + beta - 2 gamma,   t = alpha + beta + gamma

where 3 X^2 + Yp^2 - t^2 = 3 (u, u) / 2.  Isotropic vectors land on the
cone, so (sqrt(3) X / t, Yp / t) is a point of the unit circle.  The central
ideal triangle has cusps x*, y*, z* and sides the walls of x, y, z; every
other chamber is a Weyl image of it.  Only the final SVG uses floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence, Union

from .core import DUAL_BASIS, EquiVec, apply
from .isometry import REFLECTIONS, I3
from .isotropic import TripleABC, decompose_isotropic, dual_label, pythagorean
from .linalg import Matrix
from .psl2 import word_hat
from .roots import descent, norm

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class MinkVec:
    X: Fraction
    Yp: Fraction
    t: Fraction

    def quadratic(self):
        """3 X^2 + Yp^2 - t^2."""
        return 3 * self.X ** 2 + self.Yp ** 2 - self.t ** 2


def _coords(u) -> tuple:
    return tuple(u) if not isinstance(u, EquiVec) else u.coords()


def embed(u: Union[EquiVec, Sequence]) -> MinkVec:
    a, b, g = (Fraction(c) for c in _coords(u))
    return MinkVec(a - b, a + b - 2 * g, a + b + g)


def _integral(u) -> tuple[int, int, int]:
    """Positive rescaling of u to a primitive integer vector."""
    coords = [Fraction(c) for c in _coords(u)]
    den = lcm(*(c.denominator for c in coords))
    ints = [int(c * den) for c in coords]
    g = gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(c // g for c in ints)


@dataclass(frozen=True)
class BoundaryPoint:
    """A cusp: exact (X, Yp, t) with 3 X^2 + Yp^2 = t^2, t > 0, primitive."""

    X: int
    Yp: int
    t: int

    def klein(self) -> tuple[float, float]:
        return (SQRT3 * self.X / self.t, self.Yp / self.t)

    # on the boundary the Klein and Poincare models agree
    poincare = klein

    def on_circle(self) -> bool:
        return 3 * self.X ** 2 + self.Yp ** 2 == self.t ** 2


def boundary_point(u) -> BoundaryPoint:
    ints = _integral(u)
    if norm(ints) != 0:
        raise ValueError("%r is not isotropic" % (_coords(u),))
    m = embed(ints)
    X, Yp, t = int(m.X), int(m.Yp), int(m.t)
    if t < 0:
        X, Yp, t = -X, -Yp, -t
    g = gcd(X, Yp, t)
    return BoundaryPoint(X // g, Yp // g, t // g)


def klein_to_poincare(k: tuple[float, float]) -> tuple[float, float]:
    r2 = k[0] ** 2 + k[1] ** 2
    s = 1.0 / (1.0 + math.sqrt(max(0.0, 1.0 - r2)))
    return (k[0] * s, k[1] * s)


@dataclass(frozen=True)
class Geodesic:
    root: tuple[int, int, int]
    ends: tuple[EquiVec, EquiVec]  # exact isotropic directions
    p: BoundaryPoint
    q: BoundaryPoint

    def arc(self) -> Optional[tuple[tuple[float, float], float]]:
        """(centre, radius) of the orthogonal circle, or None for a diameter."""
        (px, py), (qx, qy) = self.p.poincare(), self.q.poincare()
        dot = px * qx + py * qy
        if self.p.X * self.q.X * 3 + self.p.Yp * self.q.Yp == -self.p.t * self.q.t:
            return None  # antipodal
        centre = ((px + qx) / (1 + dot), (py + qy) / (1 + dot))
        theta = math.acos(max(-1.0, min(1.0, dot)))
        return centre, math.tan(theta / 2)


def wall_endpoints(u: Sequence[int]) -> tuple[EquiVec, EquiVec]:
    """The two isotropic directions orthogonal to the real root u, exactly.

    With u = g(x) for g in G, they are g(y*) and g(z*), since y*, z* span x^perp.
    """
    u = tuple(u)
    if norm(u) != 2:
        raise ValueError("walls belong to real roots; %r has norm %d" % (u, norm(u)))
    g = word_hat(descent(u))
    return apply(g, DUAL_BASIS[1]), apply(g, DUAL_BASIS[2])


def wall_geodesic(u: Sequence[int]) -> Geodesic:
    a, b = wall_endpoints(u)
    return Geodesic(tuple(u), (a, b), boundary_point(a), boundary_point(b))


def numeric_wall_endpoints(u: Sequence[int]) -> list[tuple[float, float, float]]:
    """Solve (u, v) = 0, (v, v) = 0 in floating point, as an independent oracle.

    Returns the two solutions normalised to t = 1 in (X, Yp, t) coordinates.
    """
    m = embed(u)
    # (u, v) in Minkowski coordinates: (2/3)(3 X X' + Yp Yp' - t t')
    a, b, c = 3 * float(m.X), float(m.Yp), float(m.t)
    # points (cos s / sqrt3, sin s, 1) with a cos s / sqrt3 + b sin s = c
    A, B = a / SQRT3, b
    R = math.hypot(A, B)
    phi = math.atan2(B, A)
    delta = math.acos(max(-1.0, min(1.0, c / R)))
    out = []
    for s in (phi - delta, phi + delta):
        out.append((math.cos(s) / SQRT3, math.sin(s), 1.0))
    return out


# -- tessellation ------------------------------------------------------------


def _fmt_coef(c, name: str, first: bool, minus: str) -> str:
    mag = abs(c)
    body = ("" if mag == 1 else str(mag)) + name
    if first:
        return (minus if c < 0 else "") + body
    return ("+" if c > 0 else minus) + body


def root_label(u: Sequence[int], minus: str = "−") -> str:
    terms = [(c, n) for c, n in zip(u, "xyz") if c]
    return "".join(_fmt_coef(c, n, i == 0, minus) for i, (c, n) in enumerate(terms)) or "0"


def _positive(u: tuple) -> tuple:
    return u if sum(u) > 0 else tuple(-c for c in u)


@dataclass(frozen=True)
class Chamber:
    word: tuple  # over rx, ry, rz
    matrix: Matrix

    def sort_key(self):
        return tuple(v for r in self.matrix.rows for v in r)


@dataclass(frozen=True)
class Wall:
    root: tuple[int, int, int]  # positive representative of +-root
    geodesic: Geodesic

    @property
    def labels(self) -> tuple[str, str]:
        return (root_label(self.root), root_label(tuple(-c for c in self.root)))


@dataclass(frozen=True)
class Vertex:
    vec: EquiVec  # an element of the Weyl orbit of x*, y* or z*
    point: BoundaryPoint
    k: int
    m: int
    n: int
    abc: tuple[int, int, int]
    relation: str
    pythagorean: tuple[int, int, int]
    dual: str

    @property
    def squares_label(self) -> str:
        return " ".join("%d²" % c for c in self.abc)

    @property
    def degenerate(self) -> bool:
        return 0 in self.abc


@dataclass
class Scene:
    depth: int
    chambers: list = field(default_factory=list)
    walls: list = field(default_factory=list)
    vertices: list = field(default_factory=list)


def _vertex(v: EquiVec) -> Vertex:
    twice = (2 * v).coords()
    dec = decompose_isotropic(twice)
    t = TripleABC.of(*dec.abc)
    return Vertex(
        vec=v,
        point=boundary_point(twice),
        k=dec.k,
        m=dec.m,
        n=dec.n,
        abc=dec.abc,
        relation=t.relation,
        pythagorean=pythagorean(t).as_tuple(),
        dual=dual_label(v),
    )


def weyl_chambers(depth: int) -> list[Chamber]:
    """Distinct Weyl elements of length <= depth, each with a shortlex-first word."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    seen = {I3: ()}
    frontier = [I3]
    for _ in range(depth):
        nxt = []
        for m in frontier:
            word = seen[m]
            for name in ("rx", "ry", "rz"):
                w = m @ REFLECTIONS[name]
                if w not in seen:
                    seen[w] = word + (name,)
                    nxt.append(w)
        frontier = nxt
    chambers = [Chamber(word, m) for m, word in seen.items()]
    chambers.sort(key=Chamber.sort_key)
    return chambers


def tessellate(depth: int) -> Scene:
    chambers = weyl_chambers(depth)
    roots = set()
    verts = set()
    simple = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for ch in chambers:
        for s in simple:
            roots.add(_positive(ch.matrix @ s))
        for v in DUAL_BASIS:
            verts.add(apply(ch.matrix, v))
    walls = [Wall(u, wall_geodesic(u)) for u in sorted(roots)]
    vertices = sorted((_vertex(v) for v in verts), key=lambda x: (x.abc, x.vec.coords()))
    return Scene(depth, chambers, walls, vertices)


# -- SVG ---------------------------------------------------------------------------

LABEL_MODES = ("all", "squares", "dual", "walls", "none")


@dataclass(frozen=True)
class RenderOptions:
    size: int = 800
    labels: str = "all"
    orientation: str = "figure"  # x* at the top; "standard" leaves Klein coordinates as they are
    label_max: int = 4  # label cusps whose largest of a, b, c is at most this
    stroke: float = 1.0

    def __post_init__(self):
        if self.labels not in LABEL_MODES:
            raise ValueError("labels must be one of %s" % ", ".join(LABEL_MODES))
        if self.orientation not in ("figure", "standard"):
            raise ValueError("orientation must be 'figure' or 'standard'")
        if self.size <= 0:
            raise ValueError("size must be positive")


def _orient(p: tuple[float, float], orientation: str) -> tuple[float, float]:
    if orientation == "standard":
        return p
    # rotate by -120 degrees, then mirror left-right: x* up, y* lower right, z* lower left
    c, s = -0.5, -SQRT3 / 2
    x, y = p
    return (-(c * x - s * y), s * x + c * y)


class _Canvas:
    def __init__(self, opts: RenderOptions):
        self.opts = opts
        self.half = opts.size / 2
        self.radius = opts.size * 0.36

    def xy(self, p: tuple[float, float]) -> tuple[float, float]:
        x, y = _orient(p, self.opts.orientation)
        return (self.half + self.radius * x, self.half - self.radius * y)


def _f(v: float) -> str:
    s = "%.3f" % v
    return "0.000" if s == "-0.000" else s


def _wall_path(canvas: _Canvas, g: Geodesic) -> str:
    x1, y1 = canvas.xy(g.p.poincare())
    x2, y2 = canvas.xy(g.q.poincare())
    arc = g.arc()
    if arc is None:
        return "M %s %s L %s %s" % (_f(x1), _f(y1), _f(x2), _f(y2))
    (cx, cy), r = arc
    # the geodesic is the minor arc; it passes through the point of the circle nearest the origin
    d = math.hypot(cx, cy)
    mx, my = canvas.xy((cx - r * cx / d, cy - r * cy / d))
    cross = (x2 - x1) * (my - y1) - (y2 - y1) * (mx - x1)
    sweep = 1 if cross < 0 else 0
    rr = r * canvas.radius
    return "M %s %s A %s %s 0 0 %d %s %s" % (_f(x1), _f(y1), _f(rr), _f(rr), sweep, _f(x2), _f(y2))


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(scene: Scene, opts: Optional[RenderOptions] = None) -> str:
    opts = opts or RenderOptions()
    cv = _Canvas(opts)
    size = opts.size
    font = max(6.0, size / 90)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%d" height="%d" viewBox="0 0 %d %d">'
        % (size, size, size, size),
        '<rect width="100%" height="100%" fill="white"/>',
        '<circle class="boundary" cx="%s" cy="%s" r="%s" fill="none" stroke="black" stroke-width="%s"/>'
        % (_f(cv.half), _f(cv.half), _f(cv.radius), _f(opts.stroke * 1.5)),
        '<g class="walls" fill="none" stroke="black" stroke-width="%s">' % _f(opts.stroke),
    ]
    for w in scene.walls:
        out.append('<path class="wall" data-root="%s" d="%s"/>' % (_esc(w.labels[0]), _wall_path(cv, w.geodesic)))
    out.append("</g>")

    out.append('<g class="cusps" fill="black">')
    for v in scene.vertices:
        x, y = cv.xy(v.point.poincare())
        out.append('<circle class="cusp" cx="%s" cy="%s" r="%s"/>' % (_f(x), _f(y), _f(font / 4)))
    out.append("</g>")

    if opts.labels != "none":
        out.append('<g class="labels" font-family="serif" font-size="%s" text-anchor="middle">' % _f(font))
        if opts.labels in ("all", "walls"):
            for w in scene.walls:
                if sum(w.root) != 1:
                    continue  # only the three simple walls are named
                # place the name just inside the arc midpoint, toward the origin
                arc = w.geodesic.arc()
                if arc is None:
                    mx, my = 0.0, 0.0
                else:
                    (cx, cy), r = arc
                    d = math.hypot(cx, cy)
                    mx, my = cx - r * cx / d, cy - r * cy / d
                x, y = cv.xy((mx * 0.8, my * 0.8))
                out.append('<text class="wall-label" x="%s" y="%s">%s</text>' % (_f(x), _f(y), _esc(w.labels[0])))
        for v in scene.vertices:
            if max(v.abc) > opts.label_max:
                continue
            lines = []
            if opts.labels in ("all", "squares"):
                lines.append(("squares", v.squares_label))
            if opts.labels in ("all", "dual"):
                lines.append(("dual", v.dual))
            if not lines:
                continue
            px, py = v.point.poincare()
            x, y = cv.xy((px * 1.05, py * 1.05))
            ux = (x - cv.half) / cv.radius
            anchor = "start" if ux > 0.3 else ("end" if ux < -0.3 else "middle")
            top = y - font * 1.1 * (len(lines) - 1) / 2 + font / 3
            for i, (cls, text) in enumerate(lines):
                out.append(
                    '<text class="%s" x="%s" y="%s" text-anchor="%s">%s</text>'
                    % (cls, _f(x), _f(top + i * font * 1.1), anchor, _esc(text))
                )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def scene_json(scene: Scene) -> dict:
    return {
        "depth": scene.depth,
        "chambers": [" ".join(c.word) for c in scene.chambers],
        "walls": [
            {"root": list(w.root), "labels": list(w.labels), "ends": [e.to_json() for e in w.geodesic.ends]}
            for w in scene.walls
        ],
        "vertices": [
            {
                "vector": v.vec.to_json(),
                "abc": list(v.abc),
                "squares": [c * c for c in v.abc],
                "pythagorean": list(v.pythagorean),
                "dual": v.dual,
                "boundary": [v.point.X, v.point.Yp, v.point.t],
            }
            for v in scene.vertices
        ],
    }
