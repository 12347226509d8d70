"""Command-line interface: ``xalg census|homs|xmod|cat1|convert|check``.

Exit codes: 0 success, 1 usage error, 2 axiom or validation failure,
3 enumeration bound exceeded, 4 malformed JSON input, 5 unknown catalog id.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import io as xio
from .algebra import (
    MAX_ELEMENTS,
    AlgebraError,
    EnumerationBoundError,
    Subspace,
    augmentation_ideal,
    group_algebra,
    multiplication_action,
    span_closure,
)
from .census import census_table, default_rows, render
from .cat1alg import Cat1Alg, Cat1Error, cat1_by_endomorphisms
from .equiv import EquivalenceError, cat1_of_xmod, roundtrip_iso_cat1, roundtrip_iso_xmod, xmod_of_cat1
from .ffield import FieldError, parse_field
from .groups import GroupError, UnknownGroupError, parse_group
from .homs import AlgHom, HomError, all_homs, hom_from_generator_images, identity_hom
from .xmodalg import (
    XModAlg,
    XModError,
    xmod_by_central_extension,
    xmod_by_ideal,
    xmod_by_module,
    xmod_by_multiplier,
)

EXIT_OK, EXIT_USAGE, EXIT_AXIOM, EXIT_BOUND, EXIT_JSON, EXIT_UNKNOWN = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vectors(text: str, dim: int) -> list[np.ndarray]:
    """Parse ``"1,0,2;0,1,1"`` into coordinate vectors of length ``dim``."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        v = np.array([int(c) for c in chunk.split(",")], dtype=np.int64)
        if v.shape != (dim,):
            raise UsageError(f"vector {chunk!r} must have {dim} coordinates")
        out.append(v)
    return out


def _algebra(args):
    return group_algebra(parse_field(args.field), parse_group(args.group))


def _ideal(a, kind: str, gens: str | None) -> Subspace:
    if kind == "augmentation":
        return augmentation_ideal(a)
    if kind == "zero":
        return a.zero_subspace
    if kind == "whole":
        return a.whole
    if kind == "gens":
        if not gens:
            raise UsageError("--ideal gens needs --gens")
        return span_closure(a, _vectors(gens, a.dim), kind="ideal")
    raise UsageError(f"unknown ideal {kind!r}")


def _write(obj, path):
    text = xio.dumps(obj)
    if path == "-":
        sys.stdout.write(text)
    elif path:
        with open(path, "w") as fh:
            fh.write(text)


def _summary(obj) -> str:
    if isinstance(obj, XModAlg):
        return "\n".join([
            f"Name: {obj.name}",
            f"Size: [{obj.size[0]}, {obj.size[1]}]",
            f"IsPreXModAlg: {str(obj.is_pre_xmod).lower()}",
            f"IsXModAlg: {str(obj.is_xmod).lower()}",
        ])
    if isinstance(obj, Cat1Alg):
        return "\n".join([
            f"Name: {obj.name}",
            f"Size: [{obj.size[0]}, {obj.size[1]}]",
            f"IsPreCat1Alg: {str(obj.is_pre_cat1).lower()}",
            f"IsCat1Alg: {str(obj.is_cat1).lower()}",
        ])
    if isinstance(obj, AlgHom):
        preds = obj.predicates()
        return "\n".join([f"Hom: {obj}"] + [f"{k}: {str(v).lower()}" for k, v in preds.items()])
    return repr(obj)


# --- verbs ------------------------------------------------------------------------

def cmd_census(args) -> int:
    fields = [parse_field(f) for f in args.fields.split(",")] if args.fields else None
    if args.rows:
        gids = [parse_group(r).small_group_id for r in args.rows]
        fl = fields or [parse_field(f"GF({q})") for q in (2, 3, 4)]
        rows = [(F, gid) for F in fl for gid in gids if gid[0] <= args.max_order]
    else:
        rows = default_rows(fields, args.max_order)
    table = census_table(rows, jobs=args.jobs, max_elements=args.max_elements)
    sys.stdout.write(render(table, args.format))
    return EXIT_BOUND if any("SKIPPED" in r.flags for r in table) else EXIT_OK


def cmd_homs(args) -> int:
    src = _algebra(args)
    tgt = group_algebra(src.field, parse_group(args.target_group)) if args.target_group else src
    homs = all_homs(src, tgt, args.max_elements)
    print(f"{len(homs)} homomorphisms {src.name} -> {tgt.name}")
    if args.list:
        for i, h in enumerate(homs, 1):
            gens = src.group.generators
            imgs = h.images_of([src.basis_vector(g) for g in gens])
            srcs = [src.labels[g] for g in gens]
            print(f"{i}: [ {', '.join(srcs)} ] -> [ {', '.join(imgs)} ]")
    return EXIT_OK


def cmd_xmod(args) -> int:
    if args.how == "by-ideal":
        a = _algebra(args)
        x = xmod_by_ideal(a, _ideal(a, args.ideal, args.gens))
    elif args.how == "by-module":
        r = _algebra(args)
        m = _ideal(r, args.module, args.gens)
        act = multiplication_action(r, m)
        x = xmod_by_module(act)
    elif args.how == "by-central-extension":
        if args.hom:
            d = _load(args.hom)
            if not isinstance(d, AlgHom):
                raise UsageError("--hom must contain a homomorphism")
        else:
            d = identity_hom(_algebra(args))
        x = xmod_by_central_extension(d)
    else:
        a = _algebra(args)
        s = a if args.ideal == "whole" else _ideal(a, args.ideal, args.gens).as_algebra()
        x = xmod_by_multiplier(s)
    print(_summary(x))
    _write(x, args.output)
    return EXIT_OK


def cmd_cat1(args) -> int:
    a = _algebra(args)
    if args.how == "identity":
        c = cat1_by_endomorphisms(identity_hom(a), identity_hom(a))
    elif args.how == "by-endomorphisms":
        gens = [a.basis_vector(g) for g in a.group.generators]
        s = hom_from_generator_images(a, a, gens, _vectors(args.tail, a.dim))
        t = hom_from_generator_images(a, a, gens, _vectors(args.head, a.dim)) if args.head else s
        c = cat1_by_endomorphisms(s, t)
    else:
        from .census import enumerate_cat1_structures

        n, structures = enumerate_cat1_structures(a, args.max_elements)
        print(f"{n} cat1-structures on {a.name}")
        if args.list:
            for i, c in enumerate(structures, 1):
                print(f"{i}: {c.name} size [{c.size[0]}, {c.size[1]}]")
        return EXIT_OK
    print(_summary(c))
    _write(c, args.output)
    return EXIT_OK


def _load(path, check=True):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    return xio.loads(text, check=check)


def cmd_convert(args) -> int:
    obj = _load(args.input)
    if args.to == "cat1":
        if not isinstance(obj, XModAlg):
            raise UsageError("--to cat1 needs a crossed module as input")
        out = cat1_of_xmod(obj)
        iso = roundtrip_iso_xmod(obj)
    else:
        if not isinstance(obj, Cat1Alg):
            raise UsageError("--to xmod needs a cat1-algebra as input")
        out = xmod_of_cat1(obj)
        iso = roundtrip_iso_cat1(obj)
    _write(out, args.output or "-")
    ok = iso.is_bijective
    sys.stderr.write(
        f"roundtrip: {'OK' if ok else 'FAILED'} "
        f"(canonical isomorphism bijective: {str(ok).lower()}, "
        f"structurally equal: {str(iso.structurally_equal).lower()})\n"
    )
    return EXIT_OK if ok else EXIT_AXIOM


def cmd_check(args) -> int:
    if args.sessions:
        from .sessions import replay_sessions, report

        checks = replay_sessions()
        print(report(checks))
        return EXIT_OK if all(c.passed for c in checks) else EXIT_AXIOM
    if not args.input:
        raise UsageError("check needs an input file or --sessions")
    obj = _load(args.input, check=False)
    print(_summary(obj))
    if isinstance(obj, XModAlg):
        w = obj.xmod_witness()
    elif isinstance(obj, Cat1Alg):
        w = obj.cat1_witness()
    else:
        w = None
    if w is not None:
        print(f"violation: {w[0]} at basis indices {w[1]}")
        return EXIT_AXIOM
    return EXIT_OK


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="xalg", description="Crossed modules and cat1-algebras over group algebras.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, group=True):
        if group:
            sp.add_argument("--field", default="GF(2)", help='field such as "GF(4)" or "GF(2^2)"')
            sp.add_argument("--group", default="2,1", help='group id "order,index" or a catalog name')
        sp.add_argument("--max-elements", type=int, default=MAX_ELEMENTS, help="enumeration bound")

    c = sub.add_parser("census", help="endomorphism / idempotent / cat1 counts per (field, group)")
    c.add_argument("--fields", default=None, help="comma-separated fields, default GF(2),GF(3),GF(4)")
    c.add_argument("--max-order", type=int, default=12)
    c.add_argument("--rows", nargs="+", default=None, help="group ids such as 2,1 4,2")
    c.add_argument("--format", choices=["md", "csv", "json"], default="md")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--low-mem", action="store_true", help="accepted for compatibility; the census always streams")
    common(c, group=False)
    c.set_defaults(func=cmd_census)

    h = sub.add_parser("homs", help="all algebra homomorphisms between group algebras")
    common(h)
    h.add_argument("--target-group", default=None)
    h.add_argument("--list", action="store_true")
    h.set_defaults(func=cmd_homs)

    x = sub.add_parser("xmod", help="construct a crossed module")
    x.add_argument("how", choices=["by-ideal", "by-module", "by-central-extension", "by-multiplier"])
    common(x)
    x.add_argument("--ideal", default="augmentation", choices=["augmentation", "zero", "whole", "gens"])
    x.add_argument("--module", default="augmentation", choices=["augmentation", "zero", "gens"])
    x.add_argument("--gens", default=None, help='generator vectors "c0,c1,...;..." for --ideal/--module gens')
    x.add_argument("--hom", default=None, help="JSON file with a surjective homomorphism")
    x.add_argument("--output", default=None, help="write the object as JSON ('-' for stdout)")
    x.set_defaults(func=cmd_xmod)

    k = sub.add_parser("cat1", help="construct or enumerate cat1-algebras")
    k.add_argument("how", choices=["identity", "by-endomorphisms", "enumerate"])
    common(k)
    k.add_argument("--tail", default=None, help="images of the group generators under the tail")
    k.add_argument("--head", default=None, help="images under the head (default: the tail)")
    k.add_argument("--list", action="store_true")
    k.add_argument("--output", default=None)
    k.set_defaults(func=cmd_cat1)

    v = sub.add_parser("convert", help="crossed module <-> cat1-algebra")
    v.add_argument("--to", choices=["cat1", "xmod"], required=True)
    v.add_argument("input")
    v.add_argument("--output", default=None)
    v.set_defaults(func=cmd_convert)

    ch = sub.add_parser("check", help="validate a JSON object or replay the example sessions")
    ch.add_argument("input", nargs="?")
    ch.add_argument("--sessions", action="store_true")
    ch.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "how", None) == "by-endomorphisms" and not args.tail:
        parser.error("by-endomorphisms needs --tail")
    try:
        return args.func(args)
    except UnknownGroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except xio.JSONFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_JSON
    except EnumerationBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (XModError, Cat1Error, HomError, AlgebraError, EquivalenceError) as exc:
        print(f"axiom failure: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except (UsageError, FieldError, GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
