"""Identity checks behind ``descmat verify``.

Each suite walks n = 0 (or 1) .. n_max and yields :class:`Check` records.
Per-suite caps bound the runtime; n_max above a cap is clipped and the
clip is reported in the check detail.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from . import combinatorics as cb
from . import fine_sets as fs
from . import symgroup as sg
from .exact_linalg import (
    ExactMatrix,
    IntPolynomial,
    charpoly,
    det,
    inverse,
    is_lower_triangular,
    is_upper_triangular,
    squarefree_part_degree,
)
from .families import (
    Family,
    am_inverse_entry,
    build,
    build_explicit,
    col_abs_sum_closed,
    det_closed,
    det_from_exponents,
    diag_seq,
    diag_seq_binomial,
    eigen_multiset,
    entry,
    entry_by_compositions,
    mx_inverse_entry,
    mx_matrix,
    row_sum_closed,
)

SUITES = ("matrices", "inverses", "eigen", "characters", "inversion", "fineness")
CAPS = {"matrices": 8, "inverses": 6, "eigen": 5, "characters": 8, "inversion": 7, "fineness": 7}
MX_POINTS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


@dataclass
class Check:
    suite: str
    name: str
    n: int
    passed: bool
    detail: str = ""


def diag_of_product(a: ExactMatrix, b: ExactMatrix) -> list:
    n = a.order
    return [sum(a.rows[j][k] * b.rows[k][j] for k in range(n)) for j in range(n)]


def eigen_charpoly(tag, n: int) -> IntPolynomial:
    """prod over compositions of (x^2 - pi); x - 1 for n = 0."""
    if n == 0:
        return IntPolynomial([-1, 1])
    out = IntPolynomial([1])
    for pair in eigen_multiset(tag, n):
        out = out * IntPolynomial([-pair.value, 0, 1])
    return out


# -- matrices -----------------------------------------------------------------


def _matrix_checks(n: int) -> Iterator[tuple[str, bool, str]]:
    fams = {tag: build(tag, n) for tag in Family}
    bad = [tag.value for tag in Family if build_explicit(tag, n) != fams[tag]]
    yield "explicit entries = recursion", not bad, ",".join(bad)

    m = fams[Family.M]
    yield "AM = A M, BM = B M, HM = H M", (
        fams[Family.A] @ m == fams[Family.AM]
        and fams[Family.B] @ m == fams[Family.BM]
        and fams[Family.H] @ m == fams[Family.HM]
    ), ""
    yield "Z M = I", fams[Family.Z] @ m == ExactMatrix.identity(1 << n), ""
    yield "LU: AM lower, Z upper, AM Z = A", (
        is_lower_triangular(fams[Family.AM])
        and is_lower_triangular(fams[Family.BM])
        and is_upper_triangular(fams[Family.Z])
        and fams[Family.AM] @ fams[Family.Z] == fams[Family.A]
        and fams[Family.BM] @ fams[Family.Z] == fams[Family.B]
    ), ""

    dets = {t: (det(fams[Family(t)]), det_closed(t, n)) for t in "ABH"}
    yield "determinants", all(a == b for a, b in dets.values()), "; ".join(
        f"det {t}_{n} = {a}" for t, (a, _) in dets.items()
    )
    if n >= 2:
        yield "det(A_n) exponent form", det_from_exponents(n) == dets["A"][1], ""

    if n >= 1 and n <= 8:
        comps = cb.compositions(n + 1)
        ok = all(
            entry_by_compositions(tag, lam, mu) == entry(tag, cb.composition_to_mask(lam), cb.composition_to_mask(mu), n)
            for tag in (Family.AM, Family.BM)
            for lam in comps
            for mu in comps
        )
        yield "composition-form entries", ok, ""

    ok = True
    for tag in (Family.AM, Family.BM, Family.HM):
        mat = fams[tag]
        for i in cb.subsets(n):
            row = mat.rows[i]
            if (sum(row), sum(abs(x) for x in row)) != row_sum_closed(tag, i, n):
                ok = False
    yield "row sums", ok, ""

    squares = {
        Family.AM: diag_of_product(fams[Family.A], fams[Family.A]),
        Family.BM: diag_of_product(fams[Family.B], fams[Family.B]),
        Family.HM: diag_of_product(fams[Family.H], fams[Family.H]),
    }
    ok = True
    for tag, diag in squares.items():
        mat = fams[tag]
        for j in cb.subsets(n):
            col = mat.column(j)
            closed = col_abs_sum_closed(tag, j, n)
            if not (sum(abs(x) for x in col) == closed == diag[j]):
                ok = False
            if tag is not Family.HM and abs(sum(col)) != closed:
                ok = False
    yield "column sums = diag of squares", ok, ""

    am = fams[Family.AM]
    yield "diagonal sequence", all(abs(am.rows[j][j]) == diag_seq(j) for j in cb.subsets(n)), ""

    ok = True
    hm, bm = fams[Family.HM], fams[Family.BM]
    full = cb.full(n)
    for i in cb.subsets(n):
        for j in cb.subsets_of(i):
            a_val, h_val, b_val = abs(am.rows[i][j]), abs(hm.rows[i][j]), abs(bm.rows[i][j])
            runs = cb.runs(j)
            # equality needs singleton runs whose predecessor m_k lies outside I
            eq_h = all(r.length == 1 and not (r.start >= 1 and i >> (r.start - 1) & 1) for r in runs)
            ok &= a_val <= h_val == 1 << cb.size(j)
            ok &= (a_val == h_val) == eq_h
            ok &= b_val <= a_val
            if b_val:
                at_n = n >= 1 and i >> (n - 1) & 1
                last_start_in_i = bool(runs and runs[-1].start >= 1 and i >> (runs[-1].start - 1) & 1)
                ok &= (b_val == a_val) == (not at_n or last_start_in_i)
            ok &= am.rows[j][j] % am.rows[i][j] == 0
            ok &= am.rows[i][j] % am.rows[full][j] == 0
    yield "domination and divisibility", bool(ok), ""

    if 1 <= n <= 6:
        a1, b1 = build(Family.A, n - 1), build(Family.B, n - 1)
        a2, b2 = a1 @ a1, b1 @ b1
        zero = ExactMatrix.zeros(a1.order)
        a_sq = ExactMatrix.from_blocks(a2.scale(2), a1 @ (a1 - b1), (a1 - b1) @ a1, a2 + b2)
        b_sq = ExactMatrix.from_blocks(a2, a1 @ (a1 - b1), zero, b2)
        a, b = fams[Family.A], fams[Family.B]
        yield "square recursions", a @ a == a_sq and b @ b == b_sq, ""


def suite_matrices(n_max: int) -> Iterator[Check]:
    for n in range(0, min(n_max, CAPS["matrices"]) + 1):
        for name, passed, detail in _matrix_checks(n):
            yield Check("matrices", name, n, passed, detail)
    if n_max >= 0:
        top = 1 << max(n_max, 0)
        top = min(top, 1 << 12)
        ok = all(diag_seq(m) == diag_seq_binomial(m) for m in range(top))
        yield Check("matrices", "diag_seq = binomial mod 2 formula", n_max, ok, f"m < {top}")


# -- inverses -------------------------------------------------------------


def _inverse_row_properties(inv: ExactMatrix, n: int) -> bool:
    for i in cb.subsets(n):
        row = [Fraction(x) for x in inv.rows[i]]
        nonzero = [x for x in row if x]
        if any(x.numerator not in (1, -1) for x in nonzero):
            return False
        if sum(abs(x) for x in row) != 1:
            return False
        first, diagonal = row[0], row[i]
        if any((x / first).denominator != 1 for x in nonzero):
            return False
        if any((diagonal / x).denominator != 1 for x in nonzero):
            return False
    return True


def suite_inverses(n_max: int) -> Iterator[Check]:
    for n in range(0, min(n_max, CAPS["inverses"]) + 1):
        inv = inverse(build(Family.AM, n))
        ok = all(inv.rows[i][j] == am_inverse_entry(i, j, n) for i in cb.subsets(n) for j in cb.subsets(n))
        yield Check("inverses", "AM inverse entries", n, ok)
        yield Check("inverses", "AM inverse row properties", n, _inverse_row_properties(inv, n))
        if n <= 5:
            for x in MX_POINTS:
                inv_x = inverse(mx_matrix(n, x))
                ok = all(
                    inv_x.rows[i][j] == mx_inverse_entry(i, j, n, x) for i in cb.subsets(n) for j in cb.subsets(n)
                )
                yield Check("inverses", f"M(x) inverse entries, x = {x}", n, ok)


# -- eigenvalues --------------------------------------------------------------


def suite_eigen(n_max: int) -> Iterator[Check]:
    for n in range(0, min(n_max, CAPS["eigen"]) + 1):
        for tag in (Family.A, Family.B):
            mat = build(tag, n)
            expected = eigen_charpoly(tag, n)
            got = charpoly(mat)
            factors = " * ".join(f"(x^2 - {p.value})" for p in eigen_multiset(tag, n)) if n else "(x - 1)"
            yield Check("eigen", f"charpoly {tag.value}_{n}", n, got == expected, factors)
            square = mat @ mat
            sq_poly = charpoly(square)
            diag_poly = IntPolynomial([1])
            for d in square.diagonal():
                diag_poly = diag_poly * IntPolynomial([-d, 1])
            distinct = squarefree_part_degree(sq_poly)
            yield Check(
                "eigen",
                f"eigenvalues of {tag.value}_{n}^2 = its diagonal",
                n,
                sq_poly == diag_poly,
                f"{distinct} distinct eigenvalues of {tag.value}_{n}^2",
            )
        pis = Counter(p.value for p in eigen_multiset(Family.A, n))
        a = build(Family.A, n)
        diag = Counter((a @ a).diagonal())
        doubled = Counter({k: 2 * v for k, v in pis.items()}) if n else Counter({1: 1})
        yield Check("eigen", "eigenvalue multiset = diag(A_n^2) multiset", n, diag == doubled)


# -- characters -----------------------------------------------------------


def suite_characters(n_max: int) -> Iterator[Check]:
    for n in range(1, min(n_max, CAPS["characters"]) + 1):
        parts = cb.partitions(n)
        comps = cb.compositions(n)
        ok = all(
            fs.fine_character(fs.knuth_class(lam), mu) == sg.mn_character(lam, cb.underlying_partition(mu))
            and fs.fine_character(fs.syt(lam), mu) == sg.mn_character(lam, cb.underlying_partition(mu))
            for lam in parts
            for mu in comps
        )
        yield Check("characters", "Knuth classes and SYT give irreducible characters", n, ok)
        mults = fs.syt_maj_multiplicities(n)
        ok = all(
            fs.fine_character(fs.length(k), mu)
            == sum(m * sg.mn_character(lam, cb.underlying_partition(mu)) for lam, m in mults.get(k, {}).items())
            for k in range(n * (n - 1) // 2 + 1)
            for mu in comps
        )
        yield Check("characters", "fixed length gives coinvariant characters", n, ok)
        ok = all(
            fs.fine_character(fs.involutions(), mu)
            == sum(sg.mn_character(lam, cb.underlying_partition(mu)) for lam in parts)
            for mu in comps
        )
        yield Check("characters", "involutions give the Gelfand model", n, ok)
        ok = all(
            sum(sg.class_size(mu) * sg.mn_character(a, mu) * sg.mn_character(b, mu) for mu in parts)
            == (factorial(n) if a == b else 0)
            for a in parts
            for b in parts
        )
        yield Check("characters", "orthogonality", n, ok)
        report = fs.equidistribution_fs_ls(n)
        yield Check("characters", "Foata-Schuetzenberger / Lusztig-Stanley", n, report.passed)


# -- inversion --------------------------------------------------------------


def standard_families(n: int) -> list[fs.FineFamily]:
    out = [fs.knuth_class(lam) for lam in cb.partitions(n)]
    out += [fs.syt(lam) for lam in cb.partitions(n)]
    out += [fs.length(k) for k in range(n * (n - 1) // 2 + 1)]
    out += [fs.conj_class(nu) for nu in cb.partitions(n)]
    out += [fs.involutions(), fs.arc()]
    return out


def suite_inversion(n_max: int) -> Iterator[Check]:
    for n in range(1, min(n_max, CAPS["inversion"]) + 1):
        am_inv = inverse(build(Family.AM, n - 1))
        ok_exact = ok_super = ok_route = True
        for fam in standard_families(n):
            v = fs.descent_vector(fam, n)
            x = fs.lift(v)
            if fs.recover_distribution(x) != list(v.counts):
                ok_exact = False
            routed = am_inv.apply(x.values)
            for i in cb.subsets(n - 1):
                direct = sum(v.counts[d] for d in cb.supersets_in(i, n - 1))
                closed = fs.count_superset(x, i)
                ok_super &= closed == direct
                ok_route &= closed == routed[i]
        yield Check("inversion", "count_exact recovers descent counts", n, ok_exact)
        yield Check("inversion", "count_superset = direct superset counts", n, bool(ok_super))
        yield Check("inversion", "closed formula = AM^-1 x", n, bool(ok_route))


# -- fineness ---------------------------------------------------------------


def suite_fineness(n_max: int) -> Iterator[Check]:
    for n in range(1, min(n_max, CAPS["fineness"]) + 1):
        parts = cb.partitions(n)
        ok = all(
            (r := fs.fineness(fs.knuth_class(lam), n)).fine
            and r.multiplicities == {nu: int(nu == lam) for nu in parts}
            for lam in parts
        )
        yield Check("fineness", "Knuth classes: multiplicity one on their shape", n, ok)
        r = fs.fineness(fs.involutions(), n)
        yield Check("fineness", "involutions: all multiplicities one", n, r.fine and set(r.multiplicities.values()) == {1})
        yield Check("fineness", "conjugacy classes are fine", n, all(fs.fineness(fs.conj_class(nu), n).fine for nu in parts))
        mults = fs.syt_maj_multiplicities(n)
        ok = all(
            (r := fs.fineness(fs.length(k), n)).fine
            and r.multiplicities == {nu: mults.get(k, {}).get(nu, 0) for nu in parts}
            for k in range(n * (n - 1) // 2 + 1)
        )
        yield Check("fineness", "fixed length: SYT major-index multiplicities", n, ok)
        yield Check("fineness", "arc permutations are fine", n, fs.fineness(fs.arc(), n).fine)
        if n >= 3:
            # in S_2 the set {21} is the SYT class of (1,1), hence fine
            planted = tuple([2, 1] + list(range(3, n + 1)))
            yield Check("fineness", "single permutation is not fine", n, not fs.fineness(fs.explicit([planted]), n).fine)


RUNNERS: dict[str, Callable[[int], Iterator[Check]]] = {
    "matrices": suite_matrices,
    "inverses": suite_inverses,
    "eigen": suite_eigen,
    "characters": suite_characters,
    "inversion": suite_inversion,
    "fineness": suite_fineness,
}


def run(suite: str, n_max: int) -> dict:
    """Run one suite (or 'all') and return a JSON-ready report."""
    names = SUITES if suite == "all" else (suite,)
    checks = []
    for name in names:
        checks.extend(RUNNERS[name](n_max))
    return {
        "suite": suite,
        "n_max": n_max,
        "passed": all(c.passed for c in checks),
        "caps": {name: CAPS[name] for name in names},
        "checks": [asdict(c) for c in checks],
    }
