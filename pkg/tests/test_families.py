from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from descmat import combinatorics as cb
from descmat.exact_linalg import ExactMatrix, IntPolynomial, charpoly, det, inverse, is_lower_triangular, squarefree_part_degree
from descmat.families import (
    BASE_CAP,
    PRODUCT_CAP,
    CapExceeded,
    Family,
    am_inverse_entry,
    build,
    col_abs_sum_closed,
    det_closed,
    diag_seq,
    eigen_multiset,
    entry,
    entry_by_compositions,
    mx_inverse_entry,
    mx_matrix,
    row_sum_closed,
)

X = IntPolynomial.x()

# first 32 terms of the binomial-parity sequence, as listed in the OEIS
A106737 = [1, 2, 2, 3, 2, 4, 3, 4, 2, 4, 4, 6, 3, 6, 4, 5, 2, 4, 4, 6, 4, 8, 6, 8, 3, 6, 6, 9, 4, 8, 5, 6]


def _sign(k):
    return -1 if k & 1 else 1


@pytest.mark.parametrize("n", range(0, 6))
def test_base_families_by_definition(n):
    h, z, m = build("H", n), build("Z", n), build("M", n)
    for i in cb.subsets(n):
        for j in cb.subsets(n):
            assert h[(i, j)] == _sign(cb.size(i & j))
            assert z[(i, j)] == int(i & ~j == 0)
            assert m[(i, j)] == (_sign(cb.size(j & ~i)) if i & ~j == 0 else 0)


@pytest.mark.parametrize("n", range(0, 6))
def test_a_and_b_are_masked_hadamard(n):
    h, a, b = build("H", n), build("A", n), build("B", n)
    for i in cb.subsets(n):
        for j in cb.subsets(n):
            assert a[(i, j)] in (0, h[(i, j)])
            assert b[(i, j)] in (0, a[(i, j)])
            # the support of A is the prefix-compatibility relation
            assert (a[(i, j)] != 0) == cb.prefix_compatible(i, j)


def test_worked_examples():
    assert build("A", 2).to_lists() == [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, 0, 1]]
    assert build("B", 1).to_lists() == [[1, 1], [0, -1]]
    assert entry("A", cb.mask([1, 2]), cb.mask([2]), 2) == 0
    assert entry("AM", cb.mask([1, 2, 3]), cb.mask([2, 3]), 3) == 1
    assert all(entry("AM", i, 0, 4) == 1 for i in cb.subsets(4))
    assert build("A", 1) @ build("M", 1) == build("AM", 1)
    assert build("Z", 2) @ build("M", 2) == ExactMatrix.identity(4)
    assert is_lower_triangular(build("AM", 3)) and not is_lower_triangular(build("H", 2))
    assert not is_lower_triangular(build("Z", 3))


def test_small_determinants():
    assert det_closed("A", 0) == 1 and det_closed("A", 1) == -2 and det_closed("A", 2) == 12
    assert det(build("B", 2)) == 2
    for n in range(0, 5):
        for tag in "ABH":
            assert det_closed(tag, n) == sympy.Matrix(build(tag, n).to_lists()).det()


def test_charpolys_small():
    assert charpoly(build("A", 1)) == X * X - IntPolynomial([2])
    assert str(charpoly(build("A", 2))) == "x^4 - 7*x^2 + 12"
    assert charpoly(build("B", 2)) == (X * X - IntPolynomial([1])) * (X * X - IntPolynomial([2]))
    expected = IntPolynomial([1])
    for pi in (4, 6, 6, 8):
        expected = expected * (X * X - IntPolynomial([pi]))
    assert charpoly(build("A", 3)) == expected
    assert squarefree_part_degree(charpoly(build("A", 2))) == 4


def test_eigen_multiset():
    assert {p.composition: p.value for p in eigen_multiset("A", 2)} == {(2,): 3, (1, 1): 4}
    assert {p.composition: p.value for p in eigen_multiset("B", 2)} == {(2,): 1, (1, 1): 2}
    assert [p.value for p in eigen_multiset("A", 1)] == [2]


def test_caps():
    build("A", BASE_CAP)
    with pytest.raises(CapExceeded):
        build("A", BASE_CAP + 1)
    with pytest.raises(CapExceeded):
        build("AM", PRODUCT_CAP + 1)
    with pytest.raises(ValueError):
        Family.parse("Q")


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1))))
def test_entry_matches_product(case):
    n, i, j = case
    for tag, base in (("AM", "A"), ("BM", "B"), ("HM", "H")):
        b, m = build(base, n), build("M", n)
        assert entry(tag, i, j, n) == sum(b[(i, k)] * m[(k, j)] for k in cb.subsets(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_composition_form(n):
    comps = cb.compositions(n + 1)
    for lam in comps:
        for mu in comps:
            i, j = cb.composition_to_mask(lam), cb.composition_to_mask(mu)
            assert entry_by_compositions("AM", lam, mu) == entry("AM", i, j, n)
            assert entry_by_compositions("BM", lam, mu) == entry("BM", i, j, n)


def test_diag_seq_known_terms():
    assert [diag_seq(m) for m in range(32)] == A106737
    assert all(diag_seq(1 << k) == 2 for k in range(20))
    assert [abs(x) for x in build("AM", 3).diagonal()] == A106737[:8]


@given(st.integers(min_value=0, max_value=10 ** 6))
def test_diag_seq_recursions(m):
    assert diag_seq(2 * m) == diag_seq(m)
    assert diag_seq(4 * m + 3) == 2 * diag_seq(2 * m + 1) - diag_seq(m)


def test_row_and_column_examples():
    full3 = cb.full(3)
    assert row_sum_closed("AM", full3, 3) == (-1, 15)
    assert row_sum_closed("BM", full3, 3) == (-1, 1)
    assert all(row_sum_closed(t, 0, 3) == (1, 1) for t in ("AM", "BM", "HM"))
    assert col_abs_sum_closed("AM", 0, 3) == 8
    assert col_abs_sum_closed("AM", full3, 3) == 4
    assert all(col_abs_sum_closed("HM", j, 3) == 8 for j in cb.subsets(3))


def test_am_inverse_examples():
    full3 = cb.full(3)
    assert am_inverse_entry(full3, 0, 3) == Fraction(1, 24)
    assert am_inverse_entry(full3, full3, 3) == Fraction(-1, 4)
    assert am_inverse_entry(0, 0, 0) == 1


@pytest.mark.parametrize("n", range(0, 5))
def test_a_inverse_factors_through_am(n):
    assert inverse(build("A", n)) == build("M", n) @ inverse(build("AM", n))


def test_mx_matrix():
    assert mx_matrix(1, 1) == build("AM", 1)
    assert mx_matrix(1, 0) == build("BM", 1)
    assert mx_matrix(2, Fraction(1, 2))[(cb.mask([1, 2]), cb.mask([1]))] == -1
    for x in (Fraction(1, 3), Fraction(5, 2)):
        assert mx_inverse_entry(cb.mask([2]), 0, 2, x) == x / (x + 1)
        assert mx_inverse_entry(0, 0, 2, x) == 1
    with pytest.raises(ValueError):
        mx_inverse_entry(0, 0, 2, 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=3), st.fractions(min_value=Fraction(1, 9), max_value=10, max_denominator=9))
def test_mx_inverse_random_points(n, x):
    inv = inverse(mx_matrix(n, x))
    for i in cb.subsets(n):
        for j in cb.subsets(n):
            assert inv[(i, j)] == mx_inverse_entry(i, j, n, x)
