"""Command-line front end.

Exit codes: 0 the property holds, 1 it fails (witnesses are printed),
2 usage or parse error.  Targets are catalog names or ``.lba`` files.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from . import catalog, lba
from .algebra import (
    Algebra,
    AlgebraError,
    Defect,
    check_morphism,
    fingerprint,
    is_lie,
    quotient_algebra,
    right_annihilator,
    squares_ideal,
)
from .cohomology import Cochain2, CohomologyError, cocycle_defects, hl2
from .deformation import DeformationError, deform, obstruction_report
from .linalg import LinalgError, Matrix
from .modules import (
    MatrixEmbedding,
    ModuleError,
    RightModule,
    action_from_embedding,
    embedding_defects,
    right_module_defects,
    semidirect,
)
from .scalar import GaussianRational, ScalarError, as_scalar, format_scalar

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Reporter:
    """Text mode prints sentences; machine mode prints ``key=value`` lines."""

    def __init__(self, machine: bool, out) -> None:
        self.machine = machine
        self.out = out

    def kv(self, key: str, value, text: Optional[str] = None) -> None:
        if self.machine:
            self.out.write(f"{key}={_plain(value)}\n")
        else:
            self.out.write((text if text is not None else f"{key}: {_plain(value)}") + "\n")

    def note(self, text: str) -> None:
        if not self.machine:
            self.out.write(text + "\n")

    def block(self, text: str) -> None:
        self.out.write(text if text.endswith("\n") else text + "\n")


def _plain(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (tuple, list)):
        return ",".join(_plain(x) for x in v)
    if v is None:
        return "none"
    if isinstance(v, (GaussianRational, int, Fraction)):
        return format_scalar(v)
    return str(v)


# target resolution ------------------------------------------------------------


def _catalog_resolver(name: str) -> Optional[Algebra]:
    try:
        obj = catalog.build(name)
    except catalog.CatalogError:
        return None
    return obj if isinstance(obj, Algebra) else None


def _load_doc(path: str) -> lba.LbaDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return lba.parse(text, _catalog_resolver)


def _resolve(target: str, params: Sequence[str], kinds: Tuple[type, ...], name: Optional[str] = None):
    """A catalog object, or the first (or ``name``d) block of a suitable kind in a file."""
    if os.path.isfile(target):
        doc = _load_doc(target)
        for _, nm, obj in doc.sections:
            if isinstance(obj, kinds) and (name is None or nm == name):
                return obj
        want = "/".join(k.__name__ for k in kinds)
        raise UsageError(f"{target} has no {want} block" + (f" named {name!r}" if name else ""))
    obj = catalog.build(target, **catalog.parse_params(params))
    if not isinstance(obj, kinds):
        raise UsageError(f"{target} is a {type(obj).__name__}, expected {'/'.join(k.__name__ for k in kinds)}")
    return obj


def _defect_text(labels_a: Sequence[str], labels_b: Sequence[str], labels_out: Sequence[str], d: Defect) -> str:
    vec = {k: c for k, c in enumerate(d.value) if c}
    return f"({labels_a[d.i]},{labels_b[d.j]},{labels_b[d.k]}) -> {lba.format_combination(vec, labels_out)}"


def _report_defects(rep: Reporter, key: str, items: List[str], limit: int = 20) -> None:
    rep.kv(f"{key}_count", len(items), f"{key.replace('_', ' ')}: {len(items)}")
    for w in items[:limit]:
        rep.kv("witness", w, f"  witness {w}")
    if len(items) > limit:
        rep.note(f"  ... {len(items) - limit} more")


# subcommands ------------------------------------------------------------------


def cmd_check(args, rep: Reporter) -> int:
    obj = _resolve(args.target, args.param, (Algebra, RightModule, MatrixEmbedding), args.name)
    defects = catalog.check_entry(obj)
    if isinstance(obj, Algebra):
        rep.kv("algebra", obj.name, f"algebra {obj.name} (dim {obj.dim})")
        ws = [_defect_text(obj.labels, obj.labels, obj.labels, d) for d in defects]
        _report_defects(rep, "leibniz_defects", ws)
        rep.kv("is_lie", is_lie(obj).is_lie)
    elif isinstance(obj, RightModule):
        rep.kv("module", obj.name, f"module {obj.name} over {obj.base.name} (dim {obj.mdim})")
        ws = [_defect_text(obj.labels, obj.base.labels, obj.labels, d) for d in defects]
        _report_defects(rep, "module_defects", ws)
    else:
        return _embedding_report(obj, defects, rep)
    ok = not defects
    rep.kv("holds", ok)
    return EXIT_OK if ok else EXIT_FAIL


def _embedding_report(e: MatrixEmbedding, defects, rep: Reporter) -> int:
    lbl = e.domain.labels
    rep.kv("embedding", e.name, f"embedding {e.name}: {e.domain.name} -> gl({e.size})")
    ws = [f"({lbl[i]},{lbl[j]})" for i, j, _ in defects]
    _report_defects(rep, "embedding_defects", ws)
    ok = not defects
    rep.kv("holds", ok)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_catalog(args, rep: Reporter) -> int:
    if args.action == "list":
        for e in catalog.list_entries():
            sig = e.signature()
            if rep.machine:
                rep.block(f"entry={e.name};kind={e.kind};params={sig};provenance={e.provenance}")
            else:
                shown = f"{e.name}({sig})" if sig else e.name
                rep.block(f"{shown:<28} {e.kind:<10} {e.provenance}")
        return EXIT_OK
    if not args.entry:
        raise UsageError("catalog emit needs an entry name")
    obj = catalog.build(args.entry, **catalog.parse_params(args.param))
    rep.block(_emit(obj))
    return EXIT_OK


def _emit(obj) -> str:
    if isinstance(obj, Algebra):
        return lba.format_algebra(obj)
    if isinstance(obj, RightModule):
        return lba.format_algebra(obj.base) + "\n" + lba.format_module(obj)
    parts = [lba.format_algebra(obj.domain)]
    for lbl, M in zip(obj.domain.labels, obj.images):
        parts.append(lba.format_matrix(lbl, M))
    return "\n".join(parts)


def cmd_cohomology(args, rep: Reporter) -> int:
    a = _resolve(args.target, args.param, (Algebra,), args.name)
    sp = hl2(a)
    bl, zl, hl = sp.dims
    dims = {"bl2": ("BL2", bl), "zl2": ("ZL2", zl), "hl2": ("HL2", hl)}
    chosen = [args.space] if args.space else ["bl2", "zl2", "hl2"]
    for s in chosen:
        tag, d = dims[s]
        rep.kv(f"dim_{tag}", d, f"dim {tag} = {d}")
    if args.show_basis:
        for s in chosen:
            if s == "hl2":
                basis = sp.hl2_reps
            else:
                sub = sp.bl2 if s == "bl2" else sp.zl2
                basis = [Cochain2.from_flat(a, v, name=f"{s}_{m + 1}") for m, v in enumerate(sub.basis)]
            for f in basis:
                rep.block(lba.format_cochain(f))
    return EXIT_OK


def _cocycles_for(a: Algebra, args) -> List[Cochain2]:
    if args.cocycles:
        doc = _load_doc(args.cocycles)
        cs = [obj for obj in doc.of_kind("cochain") if obj.base.same_table(a)]
        if not cs:
            raise UsageError(f"{args.cocycles} has no cochains over {a.name}")
        return cs
    if args.basis == "listed":
        key = _listed_key(args.target)
        if key is None:
            raise UsageError(f"no listed cocycles for {args.target}; use --basis hl2 or --cocycles")
        return catalog.listed_cocycles(key, a)
    if args.basis == "hl2" or _listed_key(args.target) is None:
        return hl2(a).hl2_reps
    return catalog.listed_cocycles(_listed_key(args.target), a)


def _listed_key(target: str) -> Optional[str]:
    for key, alg in catalog.LISTED_COCYCLES.items():
        if target in (key, alg):
            return key
    return None


def cmd_obstruction(args, rep: Reporter) -> int:
    a = _resolve(args.target, args.param, (Algebra,), args.name)
    cs = _cocycles_for(a, args)
    bad = [f.name for f in cs if cocycle_defects(a, f)]
    for f in cs:
        ok = f.name not in bad
        rep.kv(f"cocycle.{f.name}", ok, f"{f.name}: {'cocycle' if ok else 'NOT a cocycle'}")
    report = obstruction_report(cs, check=False)
    mons = report.monomials()
    rep.kv("support", mons, "obstruction support: " + (" ".join(mons) if mons else "(empty)"))
    for (i, j), cnt in report.nonzero_counts().items():
        rep.kv(f"nonzero.{cs[i].name}.{cs[j].name}", cnt, f"  T_sym({cs[i].name},{cs[j].name}) nonzero entries: {cnt}")
    ok = not mons and not bad
    rep.kv("vanishes", ok)
    return EXIT_OK if ok else EXIT_FAIL


def _parse_coeffs(text: str) -> list:
    try:
        return [as_scalar(t.strip()) for t in text.split(",")]
    except ScalarError as e:
        raise UsageError(f"bad --coeffs: {e}") from None


def cmd_deform(args, rep: Reporter) -> int:
    a = _resolve(args.target, args.param, (Algebra,), args.name)
    cs = _cocycles_for(a, args)
    coeffs = _parse_coeffs(args.coeffs)
    if len(coeffs) != len(cs):
        raise UsageError(f"--coeffs needs {len(cs)} values ({', '.join(f.name for f in cs)})")
    res = deform(a, cs, coeffs)
    rep.kv("coeffs", coeffs, "mu + " + " + ".join(f"({format_scalar(c)})*{f.name}" for c, f in zip(coeffs, cs)))
    lbl = a.labels
    ws = [_defect_text(lbl, lbl, lbl, d) for d in res.defects]
    _report_defects(rep, "leibniz_defects", ws)
    rep.kv("integrable", res.integrable)
    return EXIT_OK if res.integrable else EXIT_FAIL


def cmd_quotient(args, rep: Reporter) -> int:
    a = _resolve(args.target, args.param, (Algebra,), args.name)
    ideal = squares_ideal(a)
    q = quotient_algebra(a, ideal, name=f"{a.name}/I")
    rep.kv("dim_I", ideal.dim, f"squares ideal I: dim {ideal.dim}")
    rep.kv("I_in_right_annihilator", ideal <= right_annihilator(a))
    lie = is_lie(q).is_lie
    rep.kv("quotient_is_lie", lie)
    rep.block(lba.format_algebra(q))
    return EXIT_OK if lie else EXIT_FAIL


def cmd_invariants(args, rep: Reporter) -> int:
    a = _resolve(args.target, args.param, (Algebra,), args.name)
    fp = fingerprint(a, with_cohomology=args.cohomology)
    for k, v in fp.items():
        if v is None:
            continue
        rep.kv(k, v)
    return EXIT_OK


def cmd_isocheck(args, rep: Reporter) -> int:
    a = _resolve(args.target, args.param, (Algebra,), args.name)
    b = _resolve(args.other, args.param_other, (Algebra,))
    doc = _load_doc(args.matrix)
    mats = doc.of_kind("matrix")
    if not mats:
        raise UsageError(f"{args.matrix} has no matrix block")
    P = mats[0]
    res = check_morphism(a, b, P)
    for i, j, v in res.defects[:20]:
        vec = {k: c for k, c in enumerate(v) if c}
        rep.kv("witness", f"({a.labels[i]},{a.labels[j]})", f"  P[{a.labels[i]},{a.labels[j]}] - [P{a.labels[i]},P{a.labels[j]}] = {lba.format_combination(vec, b.labels)}")
    rep.kv("morphism", res.holds)
    rep.kv("isomorphism", res.is_isomorphism)
    return EXIT_OK if res.is_isomorphism else EXIT_FAIL


def cmd_semidirect(args, rep: Reporter) -> int:
    m = _resolve(args.target, args.param, (RightModule,), args.name)
    q = semidirect(m.base, m)
    rep.block(lba.format_algebra(q))
    if args.compare:
        other = _resolve(args.compare, [], (Algebra,))
        same = q.labels == other.labels and q.same_table(other)
        rep.kv("equals", same, f"equals {other.name}: {'yes' if same else 'no'}")
        return EXIT_OK if same else EXIT_FAIL
    return EXIT_OK


def cmd_embed_check(args, rep: Reporter) -> int:
    if os.path.isfile(args.target):
        doc = _load_doc(args.target)
        algs = doc.of_kind("algebra")
        if not algs:
            raise UsageError(f"{args.target} has no algebra block")
        dom = algs[0]
        try:
            images = tuple(doc.get(lbl) for lbl in dom.labels)
        except KeyError as e:
            raise UsageError(f"missing matrix for basis element {e.args[0]}") from None
        e = MatrixEmbedding(os.path.basename(args.target), dom, images)
    else:
        e = _resolve(args.target, args.param, (MatrixEmbedding,))
    code = _embedding_report(e, embedding_defects(e), rep)
    if code == EXIT_OK and args.module:
        mod = action_from_embedding(e, args.convention)
        bad = right_module_defects(e.domain, mod)
        ws = [_defect_text(mod.labels, e.domain.labels, mod.labels, d) for d in bad]
        _report_defects(rep, "module_defects", ws)
        rep.block(lba.format_module(mod))
        if bad:
            code = EXIT_FAIL
    return code


def cmd_fock(args, rep: Reporter) -> int:
    N = args.degree
    if N < 2:
        raise UsageError("--degree must be >= 2")
    obj = catalog.fock_algebra(N) if args.algebra else catalog.build("fock-module", N=N)
    defects = catalog.check_entry(obj)
    rep.kv("degree", N)
    if isinstance(obj, Algebra):
        ws = [_defect_text(obj.labels, obj.labels, obj.labels, d) for d in defects]
        _report_defects(rep, "scoped_leibniz_defects", ws)
    else:
        ws = [_defect_text(obj.labels, obj.base.labels, obj.labels, d) for d in defects]
        _report_defects(rep, "scoped_module_defects", ws)
    if args.emit:
        rep.block(_emit(obj))
    ok = not defects
    rep.kv("holds", ok)
    return EXIT_OK if ok else EXIT_FAIL


# argument parsing -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="leibniz", description="Exact Leibniz algebra computations over Q(i).")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def target(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("target", help="catalog name or .lba file")
        sp.add_argument("--param", action="append", default=[], metavar="K=V")
        sp.add_argument("--name", help="block name inside an .lba file")
        sp.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)

    def cocycle_opts(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--cocycles", help=".lba file with cochain blocks")
        sp.add_argument("--basis", choices=("auto", "listed", "hl2"), default="auto")

    s = sub.add_parser("check", help="Leibniz / module / embedding axioms")
    target(s)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("catalog", help="list or emit catalog entries")
    s.add_argument("action", choices=("list", "emit"))
    s.add_argument("entry", nargs="?")
    s.add_argument("--param", action="append", default=[], metavar="K=V")
    s.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("cohomology", help="BL2, ZL2, HL2 of an algebra with coefficients in itself")
    target(s)
    s.add_argument("--space", choices=("bl2", "zl2", "hl2"))
    s.add_argument("--show-basis", action="store_true")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("obstruction", help="quadratic obstruction of a family of cocycles")
    target(s)
    cocycle_opts(s)
    s.set_defaults(func=cmd_obstruction)

    s = sub.add_parser("deform", help="check mu + sum c_m phi_m")
    target(s)
    cocycle_opts(s)
    s.add_argument("--coeffs", required=True, metavar="a,b,...")
    s.set_defaults(func=cmd_deform)

    s = sub.add_parser("quotient", help="quotient by the squares ideal")
    target(s)
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("invariants", help="isomorphism fingerprint")
    target(s)
    s.add_argument("--cohomology", action="store_true", help="include dim HL2 and obstruction signature")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("isocheck", help="check that a matrix is an isomorphism between two algebras")
    target(s)
    s.add_argument("other")
    s.add_argument("--param-other", action="append", default=[], metavar="K=V")
    s.add_argument("--matrix", required=True, help=".lba file with a matrix block (dim other x dim target)")
    s.set_defaults(func=cmd_isocheck)

    s = sub.add_parser("semidirect", help="semidirect sum of a Lie algebra and a right module")
    target(s)
    s.add_argument("--compare", help="algebra to compare the result with")
    s.set_defaults(func=cmd_semidirect)

    s = sub.add_parser("embed-check", help="check a matrix embedding")
    s.add_argument("target")
    s.add_argument("--param", action="append", default=[], metavar="K=V")
    s.add_argument("--module", action="store_true", help="also print the induced right module")
    s.add_argument("--convention", choices=("row", "column"), default="row")
    s.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_embed_check)

    s = sub.add_parser("fock", help="truncated Fock module or algebra")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--algebra", action="store_true", help="the Leibniz algebra instead of the module")
    s.add_argument("--emit", action="store_true")
    s.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_fock)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE
    rep = Reporter(args.format == "machine", out)
    try:
        return args.func(args, rep)
    except lba.LbaError as e:
        err.write(f"parse error: {e}\n")
    except (UsageError, catalog.CatalogError, ScalarError) as e:
        err.write(f"error: {e}\n")
    except (AlgebraError, ModuleError, CohomologyError, DeformationError, LinalgError) as e:
        err.write(f"error: {e}\n")
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
