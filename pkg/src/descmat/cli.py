"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or a non-empty --diff),
2 usage error, including exceeded caps.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import combinatorics as cb
from . import fine_sets as fs
from . import symgroup as sg
from . import verify
from .exact_linalg import charpoly, det, inverse
from .families import (
    CapExceeded,
    Family,
    build,
    build_explicit,
    det_closed,
    diag_seq,
    eigen_multiset,
    mx_matrix,
)
from .formats import FORMATS, render_matrix, render_table

CHARACTER_CAP = 8
SOURCES = ("mn", "knuth", "length", "involutions")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _label(parts) -> str:
    return ",".join(map(str, parts))


# -- matrix -------------------------------------------------------------------


def cmd_matrix(args) -> int:
    if args.x is not None:
        if args.family.upper() != "M":
            raise UsageError("--x applies to family M only (M_n(x) = x AM_n + (1-x) BM_n)")
        mat = mx_matrix(args.n, Fraction(args.x))
    else:
        tag = Family.parse(args.family)
        mat = build_explicit(tag, args.n) if args.explicit else build(tag, args.n)
    if args.inverse:
        mat = inverse(mat)
    _emit(render_matrix(mat, args.format), args.out)
    return 0


# -- closed forms -----------------------------------------------------------------


def cmd_det(args) -> int:
    tag = Family.parse(args.family)
    computed = det(build(tag, args.n))
    closed = det_closed(tag, args.n)
    rows = [[tag.value, args.n, computed, closed, computed == closed]]
    _emit(render_table(["family", "n", "bareiss", "closed", "equal"], rows, args.format), args.out)
    return 0 if computed == closed else 1


def cmd_eigen(args) -> int:
    tag = Family.parse(args.family)
    pairs = eigen_multiset(tag, args.n)
    rows = [[_label(p.composition), p.value] for p in pairs]
    text = render_table(["composition", "pi"], rows, args.format)
    if args.charpoly:
        text += f"charpoly: {charpoly(build(tag, args.n))}\n"
    _emit(text, args.out)
    return 0


def cmd_diag_seq(args) -> int:
    rows = [[m, diag_seq(m)] for m in range(args.count)]
    _emit(render_table(["m", "a_m"], rows, args.format), args.out)
    return 0


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    n_max = args.n_max if args.n_max_flag is None else args.n_max_flag
    if n_max is None:
        raise UsageError("verify needs N_MAX")
    report = verify.run(args.suite, n_max)
    _emit(json.dumps(report, indent=1) + "\n", args.out)
    return 0 if report["passed"] else 1


# -- characters ---------------------------------------------------------------


def _columns(n: int) -> list[cb.Partition]:
    """Cycle types ordered by the anti-lex position of I(mu)."""
    return sorted(cb.partitions(n), key=cb.composition_to_mask)


def _character_rows(source: str, n: int) -> list[tuple[str, list[int]]]:
    cols = _columns(n)
    parts = cb.partitions(n)
    if source == "mn":
        return [(_label(lam), [sg.mn_character(lam, mu) for mu in cols]) for lam in parts]
    if source == "knuth":
        return [(_label(lam), [fs.fine_character(fs.knuth_class(lam), mu) for mu in cols]) for lam in parts]
    if source == "length":
        return [
            (f"k={k}", [fs.fine_character(fs.length(k), mu) for mu in cols]) for k in range(n * (n - 1) // 2 + 1)
        ]
    if source == "involutions":
        return [("involutions", [fs.fine_character(fs.involutions(), mu) for mu in cols])]
    raise UsageError(f"unknown source {source!r}")


def _oracle_rows(source: str, n: int) -> list[tuple[str, list[int]]]:
    """The MN-derived values expected for the rows of ``source``."""
    cols = _columns(n)
    parts = cb.partitions(n)
    if source in ("mn", "knuth"):
        return _character_rows("mn", n)
    if source == "length":
        mults = fs.syt_maj_multiplicities(n)
        return [
            (f"k={k}", [sum(m * sg.mn_character(lam, mu) for lam, m in mults.get(k, {}).items()) for mu in cols])
            for k in range(n * (n - 1) // 2 + 1)
        ]
    return [("involutions", [sum(sg.mn_character(lam, mu) for lam in parts) for mu in cols])]


def cmd_character(args) -> int:
    n = args.n
    if not 1 <= n <= CHARACTER_CAP:
        raise UsageError(f"character tables are capped at 1 <= n <= {CHARACTER_CAP}")
    rows = _character_rows(args.source, n)
    header = ["row"] + [_label(mu) for mu in _columns(n)]
    if args.diff is None:
        _emit(render_table(header, [[label] + vals for label, vals in rows], args.format), args.out)
        return 0
    if args.diff != "mn":
        raise UsageError("--diff compares against the mn oracle only")
    expected = dict(_oracle_rows(args.source, n))
    diffs = []
    for label, vals in rows:
        for mu, got, want in zip(_columns(n), vals, expected[label]):
            if got != want:
                diffs.append([label, _label(mu), got, want])
    _emit(render_table(["row", "mu", args.source, "mn"], diffs, args.format), args.out)
    return 1 if diffs else 0


# -- descent distributions ----------------------------------------------------


def _family_from_args(args) -> tuple[fs.FineFamily, int]:
    kind = args.family
    n = args.n
    if kind in ("knuth", "syt", "conj"):
        if not args.shape:
            raise UsageError(f"{kind} needs --shape")
        fam = {"knuth": fs.knuth_class, "syt": fs.syt, "conj": fs.conj_class}[kind](cb.parse_parts(args.shape))
    elif kind == "length":
        if args.length is None:
            raise UsageError("length needs --length")
        fam = fs.length(args.length)
    elif kind == "involutions":
        fam = fs.involutions()
    elif kind == "arc":
        fam = fs.arc()
    elif kind == "explicit":
        perms = [] if args.empty else [cb.parse_parts(p) for p in args.perm or []]
        if not perms and not args.empty:
            raise UsageError("explicit needs --perm (repeatable) or --empty")
        fam = fs.explicit(perms)
    else:
        raise UsageError(f"unknown family {kind!r}")
    fixed = fam.fixed_n()
    if n is None:
        n = fixed if fixed is not None else 1
    if n > sg.EXHAUSTIVE_CAP:
        raise CapExceeded(f"descent distributions are capped at n <= {sg.EXHAUSTIVE_CAP}")
    return fam, n


def cmd_descent_dist(args) -> int:
    fam, n = _family_from_args(args)
    v = fs.descent_vector(fam, n)
    rows = []
    mismatch = False
    if args.mode == "direct":
        header = ["ord", "subset", "direct"]
        rows = [[j, cb.format_subset(j), v[j]] for j in cb.subsets(n - 1)]
    else:
        recovered = fs.recover_distribution(fs.lift(v))
        if args.mode == "inverted":
            header = ["ord", "subset", "inverted"]
            rows = [[j, cb.format_subset(j), recovered[j]] for j in cb.subsets(n - 1)]
        else:
            header = ["ord", "subset", "direct", "inverted", "diff"]
            for j in cb.subsets(n - 1):
                diff = recovered[j] - v[j]
                mismatch |= diff != 0
                rows.append([j, cb.format_subset(j), v[j], recovered[j], diff])
    _emit(render_table(header, rows, args.format), args.out)
    return 1 if mismatch else 0


def cmd_fineness(args) -> int:
    fam, n = _family_from_args(args)
    report = fs.fineness(fam, n)
    _emit(json.dumps(report.to_json(), indent=1) + "\n", args.out)
    return 0


# -- parser -------------------------------------------------------------------


def _add_output(p: argparse.ArgumentParser, default: str = "pretty") -> None:
    p.add_argument("--format", choices=FORMATS, default=default)
    p.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", choices=fs.FAMILY_KINDS)
    p.add_argument("n", type=int, nargs="?", help="defaults to the size fixed by --shape/--perm")
    p.add_argument("--shape", help="partition for knuth/syt/conj, e.g. 3,2,1")
    p.add_argument("--length", type=int, help="Coxeter length for the length family")
    p.add_argument("--perm", action="append", help="one-line permutation for explicit, e.g. 2,1,3")
    p.add_argument("--empty", action="store_true", help="explicit family with no members")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="descmat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="print a matrix of one of the families")
    p.add_argument("family", help="A, B, H, Z, M, AM, BM or HM")
    p.add_argument("n", type=int)
    p.add_argument("--explicit", action="store_true", help="assemble from entry formulas")
    p.add_argument("--inverse", action="store_true", help="print the exact inverse")
    p.add_argument("--x", help="with family M: print M_n(x) for rational x")
    _add_output(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("det", help="Bareiss determinant against the closed form")
    p.add_argument("family", choices=["A", "B", "H"])
    p.add_argument("n", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("eigen", help="eigenvalue squares by composition")
    p.add_argument("family", choices=["A", "B"])
    p.add_argument("n", type=int)
    p.add_argument("--charpoly", action="store_true", help="also print the computed charpoly")
    _add_output(p)
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("diag-seq", help="absolute diagonal of AM, by ordinal")
    p.add_argument("count", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_diag_seq)

    p = sub.add_parser("verify", help="run identity checks; JSON report")
    p.add_argument("suite", choices=verify.SUITES + ("all",))
    p.add_argument("n_max", type=int, nargs="?")
    p.add_argument("--n-max", dest="n_max_flag", type=int)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("character", help="character table from a fine-set source")
    p.add_argument("n", type=int)
    p.add_argument("--source", choices=SOURCES, default="mn")
    p.add_argument("--diff", metavar="SOURCE", help="print discrepancies against SOURCE (mn)")
    _add_output(p)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("descent-dist", help="descent-set distribution of a family")
    _add_family_args(p)
    p.add_argument("--mode", choices=["direct", "inverted", "both"], default="direct")
    _add_output(p)
    p.set_defaults(func=cmd_descent_dist)

    p = sub.add_parser("fineness", help="fineness report of a family (JSON)")
    _add_family_args(p)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_fineness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CapExceeded, ValueError) as exc:
        print(f"descmat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
