"""Desk-scale verification suites, one per module, used by ``equilib verify``.

Each suite returns a list of ``{"check", "status", "witness"}`` records.
The sizes here are kept small so the whole run takes a few seconds; the
test suite repeats the same checks at full scale.
"""

from __future__ import annotations

from typing import Callable

from . import core, disk, isometry, isotropic, psl2, rep, roots
from .linalg import Matrix

EXP_AD_DUAL = {
    "x*": Matrix([[1, 0, 0], [2, 2, -1], [0, 1, 0]]),
    "y*": Matrix([[0, 0, 1], [0, 1, 0], [-1, 2, 2]]),
    "z*": Matrix([[2, -1, 2], [1, 0, 0], [0, 0, 1]]),
}


def _check(name: str, ok: bool, witness=None) -> dict:
    return {"check": name, "status": "pass" if ok else "fail", "witness": witness}


def core_suite() -> list[dict]:
    x, y, z = core.BASIS
    out = [
        _check("[x,y] = 2x+2y", core.bracket(x, y) == 2 * x + 2 * y),
        _check("[y,z] = 2y+2z", core.bracket(y, z) == 2 * y + 2 * z),
        _check("[z,x] = 2z+2x", core.bracket(z, x) == 2 * z + 2 * x),
    ]
    gram = Matrix([[core.trace_form(u, v) for v in core.BASIS] for u in core.BASIS])
    out.append(_check("trace form Gram matrix", gram == core.GRAM))
    pairing = Matrix([[core.trace_form(u, v) for v in core.DUAL_BASIS] for u in core.BASIS])
    out.append(_check("(u, v*) = 2 delta", pairing == Matrix.identity(3) * 2))
    out.append(_check("dual Gram = 4 Gram^-1", core.DUAL_GRAM == core.GRAM.inverse() * 4))
    out.append(_check("x*, y*, z* are nilpotent", all(map(core.is_nilpotent, core.DUAL_BASIS))))
    out.append(
        _check(
            "round trip through 2x2 matrices",
            all(core.from_matrix(core.to_matrix(u)) == u for u in core.NAMED.values()),
        )
    )
    return out


def psl2_suite(max_len: int = 8) -> list[dict]:
    out = []
    for name, expected in EXP_AD_DUAL.items():
        u = core.element(name)
        e = core.exp_ad(u)
        tok = "s" + name[0]
        out.append(_check("exp ad %s matches the reference matrix" % name, e == expected))
        out.append(_check("hat(s%s) = exp ad %s" % (name[0], name), psl2.word_hat((tok,)) == e))
    out.append(_check("hat(B) = tx", psl2.hat(psl2.B_MAT) == isometry.TX))
    out.append(_check("hat(C) = r", psl2.hat(psl2.C_MAT) == isometry.RHO))
    sx, sy, sz = (psl2.word_hat((t,)) for t in ("sx", "sy", "sz"))
    rho = isometry.RHO
    out.append(_check("r = sx sy = sy sz = sz sx", rho == sx @ sy == sy @ sz == sz @ sx))
    out.append(_check("r sx r^-1 = sy", rho @ sx @ rho.inverse() == sy))
    out.append(_check("(sy sz)^3 = 1", (sy @ sz) ** 3 == isometry.I3))
    out.append(_check("sy sz sy = sz sy sz", sy @ sz @ sy == sz @ sy @ sz))
    out.append(_check("(sy sz sy)^2 = 1", (sy @ sz @ sy) ** 2 == isometry.I3))
    for tok, exp in psl2.EXPANSION.items():
        ok = psl2.normal_to_matrix(exp) == psl2.generator_matrix(tok)
        out.append(_check("letters of %s" % tok, ok))
    mats, images = set(), set()
    count = 0
    for nw in psl2.enumerate_normal_forms(max_len):
        g = psl2.normal_to_matrix(nw)
        mats.add(g)
        images.add(psl2.hat(g).column(0))
        count += 1
    out.append(_check("normal forms of length <= %d are distinct" % max_len, len(mats) == count, count))
    out.append(_check("... and move x to distinct roots", len(images) == count))
    return out


def roots_suite(box: int = 10) -> list[dict]:
    found = roots.brute_force_real(box)
    bad = [u for u in found if roots.replay(roots.descent(u)) != u]
    out = [_check("descent replays every real root in box %d" % box, not bad, bad[:5] or None)]
    bound = 3 * box
    gen = [u for u in roots.enumerate_real(bound) if roots.in_box(u, box)]
    out.append(_check("brute force = generated set in box %d" % box, gen == found, len(found)))
    five = [u for u in found if set(roots.norm_five_ways(u)) != {1}]
    out.append(_check("(u,u)/2 = 1 five ways", not five))
    par = [u for u in found if roots.parity_class(u) is None]
    out.append(_check("exactly one odd coordinate", not par))
    return out


def isometry_suite() -> list[dict]:
    return isometry.verify_structure()


def isotropic_suite(box: int = 12) -> list[dict]:
    a = isotropic.enumerate_isotropic(box)
    b = isotropic.brute_force_isotropic(box)
    out = [_check("generated = brute force isotropic, box %d" % box, a == b, len(a))]
    bad = [u for u in a if isotropic.decompose_isotropic(u).vector() != u]
    out.append(_check("every isotropic vector is 2k orbit_point(m, n)", not bad, bad[:5] or None))
    expected = {(1, 1, 2): (4, 3, 5), (1, 2, 3): (12, 5, 13), (1, 3, 4): (24, 7, 25)}
    got = {abc: isotropic.pythagorean(isotropic.TripleABC.of(*abc)).as_tuple() for abc in expected}
    out.append(_check("Pythagorean examples", got == expected, {str(k): v for k, v in got.items()}))
    orbit = {isotropic.orbit_point(m, n) for m, n in isotropic.canonical_pairs(6)}
    out.append(_check("G(z*) and -G(z*) are disjoint", not (orbit & {-v for v in orbit})))
    return out


def rep_suite(max_dim: int = 12) -> list[dict]:
    out = []
    for d in range(max_dim + 1):
        out.extend(rep.identity_checks(d))
    return out


def disk_suite(depth: int = 3) -> list[dict]:
    scene = disk.tessellate(depth)
    out = [_check("cusps lie on the circle", all(v.point.on_circle() for v in scene.vertices))]
    out.append(_check("central triangle has three walls", len(disk.tessellate(0).walls) == 3))
    ok = all(
        disk.embed(u).quadratic() * 2 == 3 * roots.norm(u) for u in ((1, 0, 0), (1, 1, 0), (2, -3, 5), (7, 1, -4))
    )
    out.append(_check("3(u,u)/2 = 3X^2 + Yp^2 - t^2", ok))
    return out


SUITES: dict[str, Callable[[], list[dict]]] = {
    "core": core_suite,
    "psl2": psl2_suite,
    "roots": roots_suite,
    "isometry": isometry_suite,
    "isotropic": isotropic_suite,
    "rep": rep_suite,
    "disk": disk_suite,
}


def run(names=None) -> dict:
    names = list(SUITES) if names is None else names
    summary = {"ok": True, "suites": {}}
    for name in names:
        report = SUITES[name]()
        failed = [r for r in report if r["status"] != "pass"]
        summary["suites"][name] = {
            "passed": len(report) - len(failed),
            "failed": len(failed),
            "failures": failed,
        }
        if failed:
            summary["ok"] = False
    return summary
