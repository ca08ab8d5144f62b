"""Command-line front end.

Exit codes: 0 success or verified, 1 verification failed, 2 usage error
(bad flags, unreadable or malformed documents), 3 unsupported parameters
(irrational radicals, off-locus parameters, unsupported scalar rings).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .linalg import Subspace, UnsupportedRingError
from .scalars import UnsupportedParameterError, format_scalar, parse_rational

OK, FAILED, USAGE, UNSUPPORTED = 0, 1, 2, 3


class UsageError(Exception):
    """Bad command-line input detected after argument parsing."""


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _fmt(x) -> str:
    return format_scalar(Fraction(x)) if isinstance(x, (int, Fraction)) else format_scalar(x)


# --- build ---------------------------------------------------------------

def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} needs " + " ".join(f"--{n}" for n in missing))


def _build(args):
    """ModelAlgebra or LieAlgebra for ``build <family>``."""
    from . import free
    from .catalog import classical, families, g2, tables
    from .model import ModelAlgebra

    fam = args.family
    if fam == "c33":
        _require(args, "a1", "a2")
        return families.c33_iso(args.a1, args.a2)
    if fam == "a33":
        _require(args, "kappa")
        return families.a33_iso(args.kappa)
    if fam == "f33":
        return families.f33_iso()
    if fam in ("f33_carnot", "a33_carnot", "c33_carnot"):
        return free.carnot_quotients()["f33" if fam == "f33_carnot" else fam]
    if fam == "free":
        _require(args, "n", "r")
        return free.free_model(args.n, args.r)
    if fam == "cn3":
        _require(args, "n")
        return free.cn3_carnot(args.n)
    if fam == "quaternionic":
        return free.quaternionic_step2()
    if fam in ("table1", "table2", "table3"):
        _require(args, "case")
        params = None
        if args.a1 is not None or args.a2 is not None:
            _require(args, "a1", "a2")
            params = {"a1": args.a1, "a2": args.a2}
        return tables.build_table(int(fam[-1]), args.case, params, args.n or 3)
    if fam in ("g2_split", "g2_compact"):
        h = g2.g2_horizontal(fam[3:])
        return ModelAlgebra(h.algebra, h.p, Subspace.zero(h.algebra.dim), fam)
    if fam == "so":
        return classical.so_pq(args.p if args.p is not None else 3, args.q or 0).algebra
    if fam == "so_block":
        return classical.so_block(args.n or 3, args.sign).algebra
    if fam == "so_complex":
        return classical.so_complex(args.n or 3)
    if fam == "b":
        _require(args, "kappa")
        return classical.b_algebra(args.kappa)
    if fam == "su3":
        return classical.su3().algebra
    raise UsageError(f"unknown family {fam!r}")


FAMILIES = ("c33", "a33", "f33", "f33_carnot", "a33_carnot", "c33_carnot", "free", "cn3",
            "quaternionic", "table1", "table2", "table3", "g2_split", "g2_compact",
            "so", "so_block", "so_complex", "b", "su3")


def _write(text: str, path: str | None, what: str, out):
    if path is None or path == "-":
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"wrote {what} to {path}", file=out)


def cmd_build(args, out) -> int:
    from .serialize import export_algebra

    obj = _build(args)
    name = obj.algebra.name if hasattr(obj, "algebra") else obj.name
    _write(export_algebra(obj), args.output, name, out)
    return OK


# --- documents -----------------------------------------------------------

def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    from .serialize import loads
    return loads(_read(path))


def cmd_verify(args, out) -> int:
    from .lie import check_map, jacobi_defect
    from .serialize import load_map

    if args.what == "jacobi":
        if not args.file:
            raise UsageError("verify jacobi needs FILE")
        g, _, _ = _load(args.file)
        report = jacobi_defect(g)
        if report.is_zero:
            print(f"jacobi ok: {g.name} (dim {g.dim})", file=out)
            return OK
        i, j, k = report.first
        L = g.labels
        res = ", ".join(f"{_fmt(c)}*{L[n]}" for n, c in enumerate(report.residuals[(i, j, k)]) if c)
        print(f"jacobi FAILED: {g.name}, {len(report.residuals)} bad triples; "
              f"first ({L[i]}, {L[j]}, {L[k]}) -> {res}", file=out)
        return FAILED
    if not (args.map and args.source and args.target):
        raise UsageError("verify iso needs --map, --from and --to")
    g, _, _ = _load(args.source)
    h, _, _ = _load(args.target)
    phi = load_map(_read(args.map), g, h)
    res = check_map(phi, "isomorphism")
    if res:
        print(f"isomorphism ok: {g.name} -> {h.name}", file=out)
        return OK
    print(f"isomorphism FAILED: {res.reason}", file=out)
    return FAILED


def cmd_iso(args, out) -> int:
    from .catalog.isomorphisms import build_isomorphism
    from .serialize import export_algebra, export_map

    params = {k: getattr(args, k) for k in ("a1", "a2", "kappa", "lam") if getattr(args, k) is not None}
    phi = build_isomorphism(args.kind, params)
    _write(export_map(phi), args.output, f"{phi.source.name} -> {phi.target.name}", out)
    if args.source_out:
        _write(export_algebra(phi.source), args.source_out, phi.source.name, out)
    if args.target_out:
        _write(export_algebra(phi.target), args.target_out, phi.target.name, out)
    return OK


# --- queries -------------------------------------------------------------

def cmd_holonomy(args, out) -> int:
    from .catalog.holonomy import holonomy_analysis

    rep = holonomy_analysis(args.a1, args.a2)
    print(f"C33({_fmt(rep.a1)},{_fmt(rep.a2)}): discriminant {_fmt(rep.discriminant)}", file=out)
    if rep.roots:
        status = ", ".join(f"{_fmt(t)} {rep.root_status[t]}" for t in rep.roots)
        print(f"roots c^2: {status}", file=out)
    elif rep.irrational:
        print("roots c^2: irrational (not certified)", file=out)
    else:
        print("roots c^2: none real", file=out)
    print("trivial c: " + (", ".join(_fmt(c) for c in rep.trivial_c) or "none"), file=out)
    for t in rep.roots:
        if rep.root_status[t] == "accepted" and not any(c * c == t for c in rep.trivial_c):
            print(f"  c = +-sqrt({_fmt(t)}): irrational, not certified", file=out)
    bad = 0
    for c, cert in rep.certificates.items():
        print(f"  c = {_fmt(c)}: closure dim {cert.closure_dim}, meets k in dim {cert.meet_dim}",
              file=out)
        bad += not cert.trivial
    return FAILED if bad else OK


def cmd_equivariant(args, out) -> int:
    from .equivariance import equivariant_bilinear_basis, predicted_dimension, standard_rep

    reps = [standard_rep(r) for r in (args.v1, args.v2, args.w)]
    basis = equivariant_bilinear_basis(*reps, group=args.group)
    doc = {
        "v1": args.v1, "v2": args.v2, "w": args.w, "group": args.group,
        "dimension": len(basis),
        "predicted": predicted_dimension(*reps, group=args.group),
        "basis": [[[[_fmt(x) for x in row] for row in mat] for mat in L.tensor] for L in basis],
    }
    out.write(json.dumps(doc, indent=2) + "\n")
    return OK if doc["dimension"] == doc["predicted"] else FAILED


def cmd_classify(args, out) -> int:
    from .equivariance import invariant_ideals_f33
    from .free import f33_model
    from .lie import growth_vector, quotient

    if (args.n, args.r) != (3, 3):
        raise UnsupportedParameterError("classify only covers n = 3, r = 3")
    search = invariant_ideals_f33()
    f = f33_model()
    names = {0: "0", 3: "a", 5: "b"}
    for I in search.ideals:
        q, proj = quotient(f, I, f"f33/{names.get(I.dim, I.dim)}")
        p = Subspace(q.dim, [proj(f.unit(i)) for i in range(3)])
        growth = growth_vector(q, p)
        print(f"ideal {names.get(I.dim, '?')} (dim {I.dim}): quotient dim {q.dim}, "
              f"growth {_vec(growth)}", file=out)
    print(f"graph family certificate: {'ok' if search.graph_certificate else 'FAILED'}", file=out)
    return OK if len(search.ideals) == 3 and search.graph_certificate else FAILED


def cmd_growth(args, out) -> int:
    from .lie import growth_vector

    g, subs, _ = _load(args.file)
    if args.p not in subs:
        raise UsageError(f"{args.file} has no subspace {args.p!r}")
    if args.k in subs:
        k = subs[args.k]
    elif args.k == "k":       # the default name may be absent: no isotropy
        k = Subspace.zero(g.dim)
    else:
        raise UsageError(f"{args.file} has no subspace {args.k!r}")
    growth = growth_vector(g, subs[args.p], k)
    full = growth[-1] == g.dim - k.dim
    print(f"{_vec(growth)}" + ("" if full else f" (does not generate; dim {g.dim - k.dim})"), file=out)
    return OK


def cmd_killing(args, out) -> int:
    from .lie import killing_signature

    g, _, _ = _load(args.file)
    print(f"{g.name}: Killing signature {_vec(killing_signature(g))}", file=out)
    return OK


def cmd_witt(args, out) -> int:
    from .free import layer_dims, witt_dim

    if args.n < 1 or args.r < 1:
        raise UsageError("witt needs n >= 1 and r >= 1")
    dims = [witt_dim(args.n, k) for k in range(1, args.r + 1)]
    print(" ".join(map(str, dims)), file=out)
    if args.hall:
        hall = layer_dims(args.n, args.r)
        agree = tuple(dims) == hall
        print(f"hall basis {' '.join(map(str, hall))}: {'agrees' if agree else 'DISAGREES'}", file=out)
        return OK if agree else FAILED
    return OK


def cmd_rigidity(args, out) -> int:
    from .catalog import ansatz

    if args.kind == "a33":
        modes = ansatz.recover_a33_equations()
        for name, mode in modes.items():
            print(f"{name}: {mode or 'NOT RECOVERED'}", file=out)
        sol = ansatz.verify_solution("a33")
        samples = ", ".join(_fmt(k) for k in sol.samples)
        print(f"solution: symbolic {'ok' if sol.symbolic else 'FAILED'}; "
              f"samples kappa = {samples}: {'ok' if all(sol.samples.values()) else 'FAILED'}", file=out)
        return OK if sol.ok and all(modes.values()) else FAILED
    rep = ansatz.verify_rigidity()
    for name, mode in rep.membership.items():
        print(f"{name}: {mode or 'NOT IN SPAN'}", file=out)
    for step in rep.steps:
        print(f"{step.statement} [{', '.join(step.equations)}] => {step.result}", file=out)
    print("all coefficients zero" if rep.all_zero else "coefficients NOT forced to zero", file=out)
    print(f"result: dim {rep.dim}, growth {_vec(rep.growth)}", file=out)
    return OK if rep.ok else FAILED


def cmd_list(args, out) -> int:
    from .catalog.isomorphisms import KINDS
    from .catalog.tables import CASES

    print("families: " + " ".join(FAMILIES), file=out)
    for (t, case), (desc, inst) in sorted(CASES.items()):
        print(f"table{t} --case {case}: {desc} (default a1={inst[0]}, a2={inst[1]})", file=out)
    print("isomorphisms: " + " ".join(KINDS), file=out)
    return OK


# --- parser --------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liemodels", description="Exact Lie algebra model spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a catalog algebra and write its JSON document")
    b.add_argument("family", choices=FAMILIES)
    b.add_argument("--a1", type=_rational)
    b.add_argument("--a2", type=_rational)
    b.add_argument("--kappa", type=_rational)
    b.add_argument("--n", type=int)
    b.add_argument("--r", type=int)
    b.add_argument("--p", type=int)
    b.add_argument("--q", type=int)
    b.add_argument("--sign", type=int, choices=(1, -1), default=1)
    b.add_argument("--case")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="verify a document or a map")
    v.add_argument("what", choices=("jacobi", "iso"))
    v.add_argument("file", nargs="?")
    v.add_argument("--map")
    v.add_argument("--from", dest="source")
    v.add_argument("--to", dest="target")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("iso", help="export a certified isomorphism as a map document")
    i.add_argument("kind")
    for name in ("a1", "a2", "kappa", "lam"):
        i.add_argument(f"--{name}", type=_rational)
    i.add_argument("-o", "--output")
    i.add_argument("--source-out")
    i.add_argument("--target-out")
    i.set_defaults(func=cmd_iso)

    h = sub.add_parser("holonomy", help="holonomy-trivial connections on C33(a1, a2)")
    h.add_argument("--a1", type=_rational, required=True)
    h.add_argument("--a2", type=_rational, required=True)
    h.set_defaults(func=cmd_holonomy)

    e = sub.add_parser("equivariant", help="equivariant bilinear maps V1 x V2 -> W")
    reps = ("R3", "R3bar", "s", "sbar")
    e.add_argument("--v1", choices=reps, required=True)
    e.add_argument("--v2", choices=reps, required=True)
    e.add_argument("--w", choices=reps, required=True)
    e.add_argument("--group", choices=("O3", "SO3"), default="O3")
    e.set_defaults(func=cmd_equivariant)

    c = sub.add_parser("classify", help="invariant ideals of f[3,3] and the Carnot quotients")
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--r", type=int, default=3)
    c.set_defaults(func=cmd_classify)

    g = sub.add_parser("growth", help="growth vector of a document's horizontal subspace")
    g.add_argument("file")
    g.add_argument("--p", default="p")
    g.add_argument("--k", default="k")
    g.set_defaults(func=cmd_growth)

    k = sub.add_parser("killing", help="Killing form signature (positive, negative, zero)")
    k.add_argument("file")
    k.set_defaults(func=cmd_killing)

    w = sub.add_parser("witt", help="layer dimensions of f[n, r]")
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--r", type=int, required=True)
    w.add_argument("--hall", action="store_true", help="also count Hall basis words")
    w.set_defaults(func=cmd_witt)

    r = sub.add_parser("rigidity", help="replay the ansatz elimination")
    r.add_argument("--kind", choices=("a33", "f33"), required=True)
    r.set_defaults(func=cmd_rigidity)

    ls = sub.add_parser("list", help="list families, table cases and isomorphism kinds")
    ls.set_defaults(func=cmd_list)
    return p


_NEG_FRACTION = re.compile(r"-\d+/\d+")


def _glue_negative_fractions(argv: list) -> list:
    """argparse only recognizes -3 or -0.5 as numbers; attach -p/q to its flag."""
    out = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEG_FRACTION.fullmatch(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv=None, out=None) -> int:
    from .catalog.isomorphisms import IsomorphismError
    from .serialize import DocumentError

    out = out or sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(_glue_negative_fractions(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exc:      # argparse reports usage errors this way
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except (UnsupportedParameterError, UnsupportedRingError) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return UNSUPPORTED
    except IsomorphismError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return FAILED
    except (UsageError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
