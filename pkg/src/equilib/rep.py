"""The irreducible module V(d) in a standard basis v_0..v_d.

    h.v_i = (d-2i) v_i,   f.v_i = (i+1) v_{i+1},   e.v_i = (d-i+1) v_{i-1}

Matrices use the column convention (column i is the image of v_i).  Any
element of sl2 acts through its 2x2 matrix [[p, q], [r, -p]] as
p*h + q*e + r*f, so the nine named elements need no separate tables.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Union

from .core import NAMED, EquiVec, ad_matrix, bracket, element, to_matrix
from .isometry import RHO, TX, TY, TZ
from .linalg import Matrix, binomial, column_space

Elem = Union[str, EquiVec]
ELEMENT_NAMES = ("e", "f", "h", "x", "y", "z", "x*", "y*", "z*")
NILPOTENT = ("e", "f", "x*", "y*", "z*")


def _as_vec(elem: Elem) -> EquiVec:
    return element(elem) if isinstance(elem, str) else elem


@lru_cache(maxsize=None)
def _efh(d: int) -> tuple[Matrix, Matrix, Matrix]:
    n = d + 1
    e = [[0] * n for _ in range(n)]
    f = [[0] * n for _ in range(n)]
    h = [[0] * n for _ in range(n)]
    for i in range(n):
        h[i][i] = d - 2 * i
        if i + 1 <= d:
            f[i + 1][i] = i + 1
        if i >= 1:
            e[i - 1][i] = d - i + 1
    return Matrix(e), Matrix(f), Matrix(h)


def _check_dim(d: int) -> None:
    if not isinstance(d, int) or d < 0:
        raise ValueError("dimension parameter d must be a nonnegative integer, got %r" % (d,))


@lru_cache(maxsize=None)
def _action(d: int, u: EquiVec) -> Matrix:
    e, f, h = _efh(d)
    (p, q), (r, _) = to_matrix(u).rows
    return h * p + e * q + f * r


def action(d: int, elem: Elem) -> Matrix:
    _check_dim(d)
    return _action(d, _as_vec(elem))


def is_nilpotent_on(d: int, elem: Elem) -> bool:
    return (action(d, elem) ** (d + 1)).is_zero()


@lru_cache(maxsize=None)
def _exp(d: int, u: EquiVec) -> Matrix:
    a = _action(d, u)
    if not (a ** (d + 1)).is_zero():
        raise ValueError("exp is only taken of nilpotent elements; %s is not" % u)
    total = Matrix.identity(d + 1)
    power = total
    for k in range(1, d + 1):
        power = power @ a
        if power.is_zero():
            break
        total = total + power * Fraction(1, factorial(k))
    return total


def exp_action(d: int, elem: Elem, sign: int = 1) -> Matrix:
    """exp(sign * phi_d(elem)) for nilpotent elem."""
    _check_dim(d)
    u = _as_vec(elem)
    return _exp(d, u if sign > 0 else -u)


def p_map(d: int) -> Matrix:
    return exp_action(d, "x*") @ exp_action(d, "y*")


def p_inverse(d: int) -> Matrix:
    return exp_action(d, "y*", -1) @ exp_action(d, "x*", -1)


# The defining factorization of each T, followed by the alternative one.
T_FACTORS = {
    "x": (("y*", "z*", "y*"), ("z*", "y*", "z*")),
    "y": (("z*", "x*", "z*"), ("x*", "z*", "x*")),
    "z": (("x*", "y*", "x*"), ("y*", "x*", "y*")),
}
P_FACTORS = (("x*", "y*"), ("y*", "z*"), ("z*", "x*"))


def _product(d: int, names, sign: int = 1) -> Matrix:
    m = Matrix.identity(d + 1)
    for name in names:
        m = m @ exp_action(d, name, sign)
    return m


def t_map(d: int, axis: str) -> Matrix:
    if axis not in T_FACTORS:
        raise ValueError("axis must be one of x, y, z")
    return _product(d, T_FACTORS[axis][0])


def t_inverse(d: int, axis: str) -> Matrix:
    return _product(d, reversed(T_FACTORS[axis][0]), -1)


# -- polynomial model ----------------------------------------------------------
#
# V(d) sits inside F[s, t] as degree-d forms, with t = v_0, s = v_1 and
# r = -s - t.  Each element acts by a derivation; its values on r, s, t are
# linear forms, recorded as coefficients over (r, s, t).

VARIABLE_ACTION = {
    "x": {"r": (0, 1, -1), "s": (0, -1, 0), "t": (0, 0, 1)},
    "y": {"s": (-1, 0, 1), "t": (0, 0, -1), "r": (1, 0, 0)},
    "z": {"t": (1, -1, 0), "r": (-1, 0, 0), "s": (0, 1, 0)},
    "x*": {"r": (0, 0, 0), "s": (1, 0, 0), "t": (-1, 0, 0)},
    "y*": {"s": (0, 0, 0), "t": (0, 1, 0), "r": (0, -1, 0)},
    "z*": {"t": (0, 0, 0), "r": (0, 0, 1), "s": (0, 0, -1)},
}


def _in_st(form) -> tuple[int, int]:
    """Coefficients over (s, t) of a linear form over (r, s, t)."""
    r, s, t = form
    return (s - r, t - r)


def variable_table_consistent(name: str) -> bool:
    """The listed image of r must equal minus the images of s and t."""
    tab = VARIABLE_ACTION[name]
    rs, rt = _in_st(tab["r"])
    ss, st = _in_st(tab["s"])
    ts, tt = _in_st(tab["t"])
    return (rs, rt) == (-ss - ts, -st - tt)


def _st_action(elem: Elem) -> tuple[tuple[int, int], tuple[int, int]]:
    """Images of s and t in V(1) as (s-coef, t-coef) pairs."""
    # V(1): t = v_0, s = v_1
    m = action(1, elem)
    s_img = (m[1, 1], m[0, 1])
    t_img = (m[1, 0], m[0, 0])
    return s_img, t_img


def polynomial_action(d: int, elem: Elem) -> Matrix:
    """Derivation action on the monomials s^i t^(d-i), i = 0..d (column convention)."""
    _check_dim(d)
    if isinstance(elem, str) and elem in VARIABLE_ACTION:
        tab = VARIABLE_ACTION[elem]
        (a, b), (c, e) = _in_st(tab["s"]), _in_st(tab["t"])
    else:
        (a, b), (c, e) = _st_action(elem)
    # s -> a s + b t, t -> c s + e t
    n = d + 1
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        j = d - i
        # d(s^i t^j) = i s^(i-1) t^j (a s + b t) + j s^i t^(j-1) (c s + e t)
        out[i][i] += i * a + j * e
        if i >= 1:
            out[i - 1][i] += i * b
        if i + 1 <= d:
            out[i + 1][i] += j * c
    return Matrix(out)


def intertwiner(d: int) -> Matrix:
    """D with D_ii = binom(d, i), sending v_i to binom(d, i) s^i t^(d-i)."""
    _check_dim(d)
    return Matrix.diagonal([binomial(d, i) for i in range(d + 1)])


def _power_coeffs(lin: tuple[int, int], k: int) -> list[int]:
    """(p s + q t)^k as coefficients of s^i t^(k-i)."""
    p, q = lin
    return [binomial(k, i) * p ** i * q ** (k - i) for i in range(k + 1)]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


MONOMIAL_BASES = {
    "st": ("s", "t"),  # s^i t^(d-i)
    "tr": ("t", "r"),  # t^i r^(d-i)
    "rs": ("r", "s"),  # r^i s^(d-i)
}
_LIN = {"s": (1, 0), "t": (0, 1), "r": (-1, -1)}


def monomial_basis(d: int, which: str) -> Matrix:
    """Columns are the monomials u^i w^(d-i) of ``which`` = "st", "tr" or "rs" in s^i t^(d-i) coordinates."""
    _check_dim(d)
    u, w = MONOMIAL_BASES[which]
    cols = []
    for i in range(d + 1):
        poly = _poly_mul(_power_coeffs(_LIN[u], i), _power_coeffs(_LIN[w], d - i))
        cols.append(poly)
    return Matrix.from_columns(cols)


# -- identity report -------------------------------------------------------------


def _unit(d: int, i: int) -> tuple:
    return tuple(1 if k == i else 0 for k in range(d + 1))


def _col(m: Matrix, i: int) -> tuple:
    return m.column(i)


def _vsum(vectors) -> tuple:
    return tuple(sum(c) for c in zip(*vectors))


def _scale(k, v) -> tuple:
    return tuple(k * c for c in v)


def identity_checks(d: int) -> list[dict]:
    _check_dim(d)
    report: list[dict] = []

    def check(name: str, ok: bool, detail=None):
        report.append({"check": name, "d": d, "status": "pass" if ok else "fail", "detail": detail})

    n = d + 1
    I = Matrix.identity(n)
    phi = {name: action(d, name) for name in ELEMENT_NAMES}
    ex = {name: exp_action(d, name) for name in ("x*", "y*", "z*")}
    exm = {name: exp_action(d, name, -1) for name in ("x*", "y*", "z*")}
    P, Pinv = p_map(d), p_inverse(d)
    P2 = P @ P
    T = {a: t_map(d, a) for a in "xyz"}
    Tinv = {a: t_inverse(d, a) for a in "xyz"}

    # integrality of the action matrices
    check("integral action matrices", all(phi[k].is_integral() for k in ELEMENT_NAMES))

    # representation property
    bad = []
    for a in ELEMENT_NAMES:
        for b in ELEMENT_NAMES:
            lhs = phi[a] @ phi[b] - phi[b] @ phi[a]
            if lhs != action(d, bracket(element(a), element(b))):
                bad.append([a, b])
    check("bracket homomorphism (81 pairs)", not bad, bad or None)

    # conjugation by P and T_x
    cyc = (("x", "y"), ("y", "z"), ("z", "x"))
    check("P phi(x) P^-1 cycles x -> y -> z", all(P @ phi[a] @ Pinv == phi[b] for a, b in cyc))
    check(
        "P phi(x*) P^-1 cycles x* -> y* -> z*",
        all(P @ phi[a + "*"] @ Pinv == phi[b + "*"] for a, b in cyc),
    )
    check(
        "P exp(x*) P^-1 cycles the exponentials",
        all(P @ ex[a + "*"] @ Pinv == ex[b + "*"] for a, b in cyc),
    )
    check("P T_x P^-1 cycles T_x -> T_y -> T_z", all(P @ T[a] @ Pinv == T[b] for a, b in cyc))
    tx_conj = (
        T["x"] @ phi["x"] @ Tinv["x"] == -phi["x"]
        and T["x"] @ phi["y"] @ Tinv["x"] == phi["x"] * 2 + phi["z"]
        and T["x"] @ phi["z"] @ Tinv["x"] == phi["x"] * 2 + phi["y"]
    )
    check("T_x conjugation: x -> -x, y -> 2x+z, z -> 2x+y", tx_conj)

    # alternative factorizations and the central element
    check("P has three factorizations", all(_product(d, f) == P for f in P_FACTORS))
    for a in "xyz":
        check("T_%s has two factorizations" % a, _product(d, T_FACTORS[a][1]) == T[a])
    C = P @ P2
    check("P^3 = T_x^2 = T_y^2 = T_z^2", all(T[a] @ T[a] == C for a in "xyz"))
    check("P^3 commutes with phi(u)", all(C @ phi[k] == phi[k] @ C for k in ELEMENT_NAMES))
    sign = (-1) ** d
    check("P^3 = (-1)^d I", C == I * sign)

    # closed forms of the triangular exponentials
    closed = {
        "exp(y*)": (ex["y*"], lambda i, j: binomial(i, j) if j <= i else 0),
        "exp(-y*)": (exm["y*"], lambda i, j: (-1) ** (i - j) * binomial(i, j) if j <= i else 0),
        "exp(z*)": (ex["z*"], lambda i, j: (-1) ** (j - i) * binomial(d - i, j - i) if i <= j else 0),
        "exp(-z*)": (exm["z*"], lambda i, j: binomial(d - i, j - i) if i <= j else 0),
    }
    for name, (m, entry) in closed.items():
        bad = [[i, j] for i in range(n) for j in range(n) if m[i, j] != entry(i, j)]
        check("binomial entries of " + name, not bad, bad or None)
    check("exp(u) exp(-u) = I", all(ex[k] @ exm[k] == I for k in ex))

    # T_x reverses the standard basis with alternating signs
    bad = [i for i in range(n) if _col(T["x"], i) != _scale((-1) ** i, _unit(d, d - i))]
    check("T_x v_i = (-1)^i v_(d-i)", not bad, bad or None)

    # the three bases v_i, P v_i, P^2 v_i
    bad = [i for i in range(n) if _col(ex["y*"], i) != _scale((-1) ** (d - i), _col(P2, d - i))]
    check("exp(y*) v_i = (-1)^(d-i) P^2 v_(d-i)", not bad, bad or None)
    bad = [i for i in range(n) if _col(exm["z*"], i) != _scale((-1) ** (d - i), _col(P, d - i))]
    check("exp(-z*) v_i = (-1)^(d-i) P v_(d-i)", not bad, bad or None)
    check("P v_0 = sum of v_i", _col(P, 0) == _vsum(_unit(d, i) for i in range(n)))
    check("P^2 v_0 = sum of P v_i", _col(P2, 0) == _vsum(_col(P, i) for i in range(n)))
    check("(-1)^d v_0 = sum of P^2 v_i", _scale(sign, _unit(d, 0)) == _vsum(_col(P2, i) for i in range(n)))

    eig = []
    for basis, axis in ((I, "x"), (P, "y"), (P2, "z")):
        for i in range(n):
            v = _col(basis, i)
            if phi[axis] @ v != _scale(d - 2 * i, v):
                eig.append([axis, i])
    check("v_i, P v_i, P^2 v_i are eigenvectors of x, y, z for d-2i", not eig, eig or None)

    # flags cut out by powers of the dual elements
    flags = (
        ("z*", I, P),
        ("x*", P, P2),
        ("y*", P2, I),
    )
    for name, low, high in flags:
        bad = []
        for i in range(n):
            image = column_space((phi[name] ** (d - i)).columns())
            first = column_space([_col(low, k) for k in range(i + 1)])
            last = column_space([_col(high, k) for k in range(d - i, d + 1)])
            if not (image == first == last):
                bad.append(i)
        check("image of %s^(d-i) is a flag of both bases" % name, not bad, bad or None)

    # braid relation for s1 = exp(x*), s2 = exp(y*)
    s1, s2 = ex["x*"], ex["y*"]
    check("braid relation s1 s2 s1 = s2 s1 s2", s1 @ s2 @ s1 == s2 @ s1 @ s2)
    check("(s1 s2)^3 = P^3", (s1 @ s2) ** 3 == C)

    # polynomial realization
    D = intertwiner(d)
    bad = [k for k in ELEMENT_NAMES if D @ phi[k] != polynomial_action(d, k) @ D]
    check("D phi(u) = (derivation action) D", not bad, bad or None)
    bad = [k for k in VARIABLE_ACTION if not variable_table_consistent(k)]
    check("variable table consistent with r = -s - t", not bad, bad or None)
    bad = [k for k in VARIABLE_ACTION if _st_action(k) != tuple(_in_st(VARIABLE_ACTION[k][v]) for v in "st")]
    check("variable table matches V(1)", not bad, bad or None)
    eig = []
    for which, axis in (("st", "x"), ("tr", "y"), ("rs", "z")):
        B = monomial_basis(d, which)
        if B.rank() != n:
            eig.append([which, "not a basis"])
            continue
        pa = polynomial_action(d, axis)
        for i in range(n):
            v = B.column(i)
            if pa @ v != _scale(d - 2 * i, v):
                eig.append([which, i])
    check("monomial bases are eigenbases of x, y, z", not eig, eig or None)

    if d == 2:
        # standard basis (z*, x, y*) of the adjoint module
        Q = Matrix.from_columns([element("z*").coords(), element("x").coords(), element("y*").coords()])
        Qinv = Q.inverse()
        same = all(Q @ phi[k] @ Qinv == ad_matrix(NAMED[k]) for k in ELEMENT_NAMES)
        maps = Q @ P @ Qinv == RHO and all(
            Q @ T[a] @ Qinv == t for a, t in (("x", TX), ("y", TY), ("z", TZ))
        )
        check("V(2) is the adjoint module; P, T_x, T_y, T_z are r, tx, ty, tz", same and maps)
        sums = (
            element("z*") + element("x") + element("y*") == element("x*")
            and element("x*") + element("y") + element("z*") == element("y*")
            and element("y*") + element("z") + element("x*") == element("z*")
        )
        check("z*+x+y* = x*, x*+y+z* = y*, y*+z+x* = z*", sums)

    return report


def all_pass(report: list[dict]) -> bool:
    return all(r["status"] == "pass" for r in report)


def matrix_json(m: Matrix) -> list[list[str]]:
    return [[str(Fraction(v)) for v in r] for r in m.rows]
