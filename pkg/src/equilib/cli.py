"""Command-line interface.

    equilib verify --all
    equilib descent 1 2 0
    equilib roots --height 6
    equilib isotropic --box 4
    equilib pythagorean --max-c 5
    equilib rep --dim 3 --elem 'x*'
    equilib disk --depth 4 -o disk.svg

Exit status: 0 on success, 1 when a verification fails, 2 on bad usage.
Rationals are printed as "p/q" strings.  Enumerations print one JSON object
per line in lexicographic order.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _cmd_verify(args, out) -> int:
    from . import verify

    if args.all and args.suite:
        raise UsageError("use either --all or --suite, not both")
    if not args.all and not args.suite:
        raise UsageError("verify needs --all or at least one --suite")
    names = None if args.all else args.suite
    summary = verify.run(names)
    out.write(json.dumps(summary, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK if summary["ok"] else EXIT_FAIL


def _cmd_descent(args, out) -> int:
    from .psl2 import format_word, normalize
    from .roots import descent, norm, replay

    u = (args.alpha, args.beta, args.gamma)
    if norm(u) != 2:
        raise UsageError("%r is not a real root: its norm is %d, not 2" % (u, norm(u)))
    word = descent(u)
    image = replay(word)
    _emit(
        {
            "vector": list(u),
            "word": format_word(word),
            "normal_form": format_word(normalize(word)),
            "replay": list(image),
            "ok": image == u,
        },
        out,
    )
    return EXIT_OK if image == u else EXIT_FAIL


def _cmd_roots(args, out) -> int:
    from .roots import enumerate_real, in_box, root_record

    if args.height is not None:
        if args.height < 0:
            raise UsageError("--height must be >= 0")
        found = enumerate_real(args.height)
    else:
        if args.box < 0:
            raise UsageError("--box must be >= 0")
        # a root in the box has |height| <= 3 * box
        found = [u for u in enumerate_real(3 * args.box) if in_box(u, args.box)]
    for u in found:
        _emit(root_record(u, with_word=not args.no_word), out)
    return EXIT_OK


def _cmd_isotropic(args, out) -> int:
    from .isotropic import enumerate_isotropic, isotropic_record

    if args.box < 0:
        raise UsageError("--box must be >= 0")
    for u in enumerate_isotropic(args.box):
        _emit(isotropic_record(u), out)
    return EXIT_OK


def _cmd_pythagorean(args, out) -> int:
    from .isotropic import triple_record, triples

    if args.max_c < 1:
        raise UsageError("--max-c must be >= 1")
    for t in triples(args.max_c):
        _emit(triple_record(t), out)
    return EXIT_OK


def _cmd_rep(args, out) -> int:
    from . import rep

    if args.dim < 0:
        raise UsageError("--dim must be >= 0")
    if args.check:
        report = rep.identity_checks(args.dim)
        out.write(json.dumps(report, indent=2) + "\n")
        return EXIT_OK if rep.all_pass(report) else EXIT_FAIL
    if args.elem is None:
        raise UsageError("rep needs --elem or --check")
    if args.exp:
        if args.elem not in rep.NILPOTENT:
            raise UsageError("--exp needs a nilpotent element: %s" % ", ".join(rep.NILPOTENT))
        m = rep.exp_action(args.dim, args.elem)
    else:
        m = rep.action(args.dim, args.elem)
    _emit({"d": args.dim, "elem": args.elem, "exp": args.exp, "matrix": rep.matrix_json(m)}, out)
    return EXIT_OK


def _cmd_disk(args, out) -> int:
    from .disk import RenderOptions, render_svg, scene_json, tessellate

    if args.depth < 0:
        raise UsageError("--depth must be >= 0")
    try:
        opts = RenderOptions(size=args.size, labels=args.labels, orientation=args.orientation)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    scene = tessellate(args.depth)
    if args.json:
        text = json.dumps(scene_json(scene), indent=2, ensure_ascii=False) + "\n"
    else:
        text = render_svg(scene, opts)
    if args.output in (None, "-"):
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="equilib", description="Exact computations with the equitable basis of sl2.")
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--all", action="store_true", help="run every suite")
    v.add_argument(
        "--suite",
        action="append",
        choices=("core", "psl2", "roots", "isometry", "isotropic", "rep", "disk"),
        help="run one suite (repeatable)",
    )
    v.set_defaults(func=_cmd_verify)

    d = sub.add_parser("descent", help="word g with g(x) = (alpha, beta, gamma)")
    d.add_argument("alpha", type=int)
    d.add_argument("beta", type=int)
    d.add_argument("gamma", type=int)
    d.set_defaults(func=_cmd_descent)

    r = sub.add_parser("roots", help="list real roots")
    g = r.add_mutually_exclusive_group(required=True)
    g.add_argument("--height", type=int, help="all real roots with |height| <= H")
    g.add_argument("--box", type=int, help="all real roots with coordinates in [-B, B]")
    r.add_argument("--no-word", action="store_true", help="omit the descent word")
    r.set_defaults(func=_cmd_roots)

    i = sub.add_parser("isotropic", help="list isotropic roots in a box")
    i.add_argument("--box", type=int, required=True)
    i.set_defaults(func=_cmd_isotropic)

    py = sub.add_parser("pythagorean", help="triples (a, b, c) and their Pythagorean triples")
    py.add_argument("--max-c", type=int, required=True, help="bound on the largest of a, b, c")
    py.set_defaults(func=_cmd_pythagorean)

    rp = sub.add_parser("rep", help="matrices of the irreducible module V(d)")
    rp.add_argument("--dim", type=int, required=True, help="d, so the module has dimension d+1")
    g = rp.add_mutually_exclusive_group()
    g.add_argument("--elem", choices=("e", "f", "h", "x", "y", "z", "x*", "y*", "z*"))
    g.add_argument("--check", action="store_true", help="print the identity report")
    rp.add_argument("--exp", action="store_true", help="print exp of the element instead")
    rp.set_defaults(func=_cmd_rep)

    dk = sub.add_parser("disk", help="render the Poincare disk tessellation as SVG")
    dk.add_argument("--depth", type=int, default=3)
    dk.add_argument("--size", type=int, default=800)
    dk.add_argument("--labels", default="all", choices=("all", "squares", "dual", "walls", "none"))
    dk.add_argument("--orientation", default="figure", choices=("figure", "standard"))
    dk.add_argument("--json", action="store_true", help="dump the scene as JSON instead of SVG")
    dk.add_argument("-o", "--output", help="output file (default stdout)")
    dk.set_defaults(func=_cmd_disk)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write("equilib %s: error: %s\n" % (args.command, exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
