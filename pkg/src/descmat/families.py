"""The matrix families A, B, H, Z, M, AM, BM, HM and M(x).

Rows and columns are indexed by subset masks of [n] (anti-lex order), so
entry ``(I, J)`` of a built matrix is ``matrix[I, J]`` with integer masks.
Every family can be built from its block recursion (:func:`build`) and
evaluated entry by entry from a closed formula (:func:`entry`); the test
suite checks that the two agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import combinatorics as cb
from .exact_linalg import ExactMatrix, Scalar, normalize


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    H = "H"
    Z = "Z"
    M = "M"
    AM = "AM"
    BM = "BM"
    HM = "HM"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, Family):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown matrix family {value!r}") from None


BASE_FAMILIES = (Family.A, Family.B, Family.H, Family.Z, Family.M)
PRODUCT_FAMILIES = (Family.AM, Family.BM, Family.HM)
BASE_CAP = 12
PRODUCT_CAP = 10


class CapExceeded(ValueError):
    pass


def cap_for(tag: Family) -> int:
    return BASE_CAP if tag in BASE_FAMILIES else PRODUCT_CAP


def _block(tl, tr, bl, br) -> ExactMatrix:
    return ExactMatrix.from_blocks(tl, tr, bl, br)


@lru_cache(maxsize=None)
def _build(tag: Family, n: int) -> ExactMatrix:
    if n == 0:
        return ExactMatrix.identity(1)
    zero = ExactMatrix.zeros(1 << (n - 1))
    if tag is Family.A:
        a, b = _build(Family.A, n - 1), _build(Family.B, n - 1)
        return _block(a, a, a, -b)
    if tag is Family.B:
        a, b = _build(Family.A, n - 1), _build(Family.B, n - 1)
        return _block(a, a, zero, -b)
    if tag is Family.H:
        h = _build(Family.H, n - 1)
        return _block(h, h, h, -h)
    if tag is Family.Z:
        z = _build(Family.Z, n - 1)
        return _block(z, z, zero, z)
    if tag is Family.M:
        m = _build(Family.M, n - 1)
        return _block(m, -m, zero, m)
    if tag is Family.AM:
        am, bm = _build(Family.AM, n - 1), _build(Family.BM, n - 1)
        return _block(am, zero, am, -(am + bm))
    if tag is Family.BM:
        am, bm = _build(Family.AM, n - 1), _build(Family.BM, n - 1)
        return _block(am, zero, zero, -bm)
    if tag is Family.HM:
        hm = _build(Family.HM, n - 1)
        return _block(hm, zero, hm, hm.scale(-2))
    raise ValueError(tag)


def build(tag, n: int) -> ExactMatrix:
    """Order-2^n matrix of the family, from its block recursion."""
    tag = Family.parse(tag)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap_for(tag):
        raise CapExceeded(f"{tag.value}_{n} exceeds the cap n <= {cap_for(tag)}")
    return _build(tag, n)


def build_explicit(tag, n: int) -> ExactMatrix:
    """Same matrix as :func:`build`, assembled from :func:`entry`."""
    tag = Family.parse(tag)
    if n > cap_for(tag):
        raise CapExceeded(f"{tag.value}_{n} exceeds the cap n <= {cap_for(tag)}")
    return ExactMatrix._wrap(
        tuple(tuple(entry(tag, i, j, n) for j in cb.subsets(n)) for i in cb.subsets(n))
    )


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


def _am_abs(i_bits: int, j_bits: int, n: int, *, drop_last_at_n: bool) -> int:
    """prod (|J_k|+1)^{c_k(I)} over runs of J; c_k(I) = 0 iff m_k is in I."""
    runs = cb.runs(j_bits)
    if drop_last_at_n and n and i_bits >> (n - 1) & 1:
        runs = runs[:-1]
    out = 1
    for run in runs:
        m = run.start
        if not (m >= 1 and i_bits >> (m - 1) & 1):
            out *= run.length + 1
    return out


def entry(tag, i_bits: int, j_bits: int, n: int) -> Scalar:
    """Closed-form entry (I, J) of the order-2^n matrix, without building it."""
    tag = Family.parse(tag)
    if tag is Family.H:
        return _sign(cb.size(i_bits & j_bits))
    if tag is Family.A:
        return _sign(cb.size(i_bits & j_bits)) if cb.prefix_compatible(i_bits, j_bits) else 0
    if tag is Family.B:
        if not cb.prefix_compatible(i_bits, j_bits):
            return 0
        if n and (i_bits & ~j_bits) >> (n - 1) & 1:
            return 0
        return _sign(cb.size(i_bits & j_bits))
    if tag is Family.Z:
        return int(i_bits & ~j_bits == 0)
    if tag is Family.M:
        return _sign(cb.size(j_bits & ~i_bits)) if i_bits & ~j_bits == 0 else 0
    # the three lower-triangular families vanish unless J is a subset of I
    if j_bits & ~i_bits:
        return 0
    sign = _sign(cb.size(j_bits))
    if tag is Family.HM:
        return sign << cb.size(j_bits)
    if tag is Family.AM:
        return sign * _am_abs(i_bits, j_bits, n, drop_last_at_n=False)
    if tag is Family.BM:
        if cb.fin(j_bits, n) != cb.fin(i_bits, n):
            return 0
        return sign * _am_abs(i_bits, j_bits, n, drop_last_at_n=True)
    raise ValueError(tag)


def entry_by_compositions(tag, lam: cb.Composition, mu: cb.Composition) -> int:
    """Entry (I(lam), I(mu)) of AM_n or BM_n for compositions of n+1.

    Nonzero iff mu refines lam (and, for BM, the last part of lam is left
    whole); sign (-1)^(n+1-len(mu)); magnitude is the product of the first
    mu-piece of each part of lam (all parts but the last, for BM).
    """
    tag = Family.parse(tag)
    if tag not in (Family.AM, Family.BM):
        raise ValueError("composition form exists for AM and BM only")
    if not cb.refines(mu, lam):
        return 0
    # split mu into consecutive blocks, one per part of lam
    blocks = []
    pos = 0
    for part in lam:
        block = []
        while part > 0:
            block.append(mu[pos])
            part -= mu[pos]
            pos += 1
        blocks.append(block)
    if tag is Family.BM:
        if len(blocks[-1]) != 1:
            return 0
        blocks = blocks[:-1]
    n_plus_1 = sum(lam)
    return _sign(n_plus_1 - len(mu)) * prod(block[0] for block in blocks)


# -- determinants ---------------------------------------------------------


def _closed_power_product(n: int, offset: int) -> int:
    """prod_{k=1}^{n} k^(2^(n-1-k) * (n+offset-k)), exponents kept exact."""
    out = 1
    for k in range(1, n + 1):
        exponent = Fraction(2) ** (n - 1 - k) * (n + offset - k)
        if exponent.denominator != 1:
            raise AssertionError(f"non-integral exponent {exponent} at k={k}")
        out *= k ** int(exponent)
    return out


def det_closed(tag, n: int) -> int:
    """Closed-form determinant of A_n, B_n or H_n."""
    tag = Family.parse(tag)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if tag is Family.A:
        return {0: 1, 1: -2}.get(n) or (n + 1) * _closed_power_product(n, 4)
    if tag is Family.B:
        return {0: 1, 1: -1}.get(n) or _closed_power_product(n, 2)
    if tag is Family.H:
        return {0: 1, 1: -2}.get(n) or 2 ** (2 ** (n - 1) * n)
    raise ValueError(f"no closed determinant for {tag.value}")


def det_exponent(j: int) -> int:
    """Exponent sequence with det(A_n) = prod_{k=1}^{n+1} k^{a(n+1-k)}, n >= 2.

    1, 2, 5, 12, 28, 64, ...; for j >= 2 it is (j+3) * 2^(j-2).
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j < 2:
        return (1, 2)[j]
    return (j + 3) << (j - 2)


def det_from_exponents(n: int) -> int:
    if n < 2:
        raise ValueError("exponent form holds for n >= 2")
    return prod(k ** det_exponent(n + 1 - k) for k in range(1, n + 2))


# -- eigenvalues ----------------------------------------------------------


@dataclass(frozen=True)
class EigenPair:
    """A composition and the square of its eigenvalue pair +-sqrt(value)."""

    composition: cb.Composition
    value: int


def eigen_multiset(tag, n: int) -> list[EigenPair]:
    """One pair per composition of n; the charpoly is prod (x^2 - value).

    For n = 0 the single (empty) composition stands for the 1x1 matrix (1).
    """
    tag = Family.parse(tag)
    if tag is Family.A:
        return [EigenPair(mu, prod(p + 1 for p in mu)) for mu in cb.compositions(n)]
    if tag is Family.B:
        return [EigenPair(mu, prod(p + 1 for p in mu[:-1])) for mu in cb.compositions(n)]
    raise ValueError(f"no eigenvalue description for {tag.value}")


# -- inverses -------------------------------------------------------------


def am_inverse_entry(i_bits: int, j_bits: int, n: int) -> Fraction:
    """Entry (I, J) of the inverse of AM_n."""
    cb.check_ambient(i_bits | j_bits, n)
    if j_bits & ~i_bits:
        return Fraction(0)
    num = 1
    den = 1
    for run in cb.runs(i_bits):
        den *= factorial(run.length + 1)
        for i in run.elements():
            if j_bits >> (i - 1) & 1:
                num *= run.last - i + 1
    return Fraction(_sign(cb.size(j_bits)) * num, den)


def mx_matrix(n: int, x) -> ExactMatrix:
    """M_n(x) = x AM_n + (1 - x) BM_n."""
    x = normalize(x)
    return build(Family.AM, n).scale(x) + build(Family.BM, n).scale(1 - x)


def mx_inverse_entry(i_bits: int, j_bits: int, n: int, x) -> Fraction:
    """Entry (I, J) of the inverse of M_n(x), x > 0."""
    x = Fraction(normalize(x))
    if x <= 0:
        raise ValueError("formula holds for x > 0 only")
    cb.check_ambient(i_bits | j_bits, n)
    if j_bits & ~i_bits:
        return Fraction(0)
    value = Fraction(_sign(cb.size(j_bits)))
    for run in cb.runs(i_bits):
        top = run.last
        at_n = top == n
        for i in run.elements():
            in_j = j_bits >> (i - 1) & 1
            if at_n:
                d = (top - i) * x + 1 if in_j else x
                e = (top - i + 1) * x + 1
            else:
                d = top - i + 1 if in_j else 1
                e = top - i + 2
            value *= Fraction(d) / e
    return value


# -- diagonal sequence ----------------------------------------------------


@lru_cache(maxsize=None)
def diag_seq(m: int) -> int:
    """|diagonal entry| of AM at ordinal m.

    Uses a_0 = 1 with a_2m = a_m, a_4m+1 = 2 a_2m, a_4m+3 = 2 a_2m+1 - a_m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return 1
    if m % 2 == 0:
        return diag_seq(m // 2)
    q, r = divmod(m, 4)
    if r == 1:
        return 2 * diag_seq(2 * q)
    return 2 * diag_seq(2 * q + 1) - diag_seq(q)


def _binomial_is_odd(a: int, b: int) -> bool:
    # Lucas: C(a, b) is odd iff every binary digit of b is at most that of a
    return 0 <= b <= a and b & ~a == 0


def diag_seq_binomial(m: int) -> int:
    """sum_k [C(m+k, m-k) C(m, k) mod 2], parities by Lucas' theorem."""
    return sum(1 for k in range(m + 1) if _binomial_is_odd(m + k, m - k) and _binomial_is_odd(m, k))


# -- row and column sums --------------------------------------------------


def row_sum_closed(tag, i_bits: int, n: int) -> tuple[int, int]:
    """(sum, sum of absolute values) of row I of AM_n, BM_n or HM_n."""
    tag = Family.parse(tag)
    cb.check_ambient(i_bits, n)
    signed = _sign(cb.size(i_bits))
    lam = cb.subset_to_composition(i_bits, n + 1)
    if tag is Family.AM:
        return signed, prod((1 << p) - 1 for p in lam)
    if tag is Family.BM:
        return signed, prod((1 << p) - 1 for p in lam[:-1])
    if tag is Family.HM:
        return signed, 3 ** cb.size(i_bits)
    raise ValueError(f"no row-sum formula for {tag.value}")


def col_abs_sum_closed(tag, j_bits: int, n: int) -> int:
    """Sum of |entries| of column J of AM_n, BM_n or HM_n.

    Equals the diagonal entry (J, J) of A_n^2, B_n^2, H_n^2 respectively.
    """
    tag = Family.parse(tag)
    cb.check_ambient(j_bits, n)
    if tag is Family.HM:
        return 1 << n
    mu = list(cb.subset_to_composition(j_bits, n + 1))
    mu[0] -= 1
    if tag is Family.AM:
        return prod(p + 1 for p in mu)
    if tag is Family.BM:
        return prod(p + 1 for p in mu[:-1])
    raise ValueError(f"no column-sum formula for {tag.value}")
