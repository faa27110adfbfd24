"""Dense exact linear algebra over the rationals.

Entries are Python ``int`` when integral and :class:`fractions.Fraction`
otherwise.  Nothing in here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

CHARPOLY_MAX_ORDER = 64


class SingularMatrixError(ArithmeticError):
    pass


def normalize(value) -> Scalar:
    """Coerce to int when integral, else Fraction."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return normalize(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return normalize(Fraction(value))
    raise TypeError(f"not an exact rational: {value!r}")


def format_scalar(value: Scalar) -> str:
    """'p' or 'p/q' in lowest terms."""
    return str(value)


class ExactMatrix:
    """Immutable square (or rectangular, for internal use) rational matrix."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable], *, _trusted: bool = False):
        if _trusted:
            self.rows = rows
        else:
            self.rows = tuple(tuple(normalize(x) for x in row) for row in rows)
            widths = {len(r) for r in self.rows}
            if len(widths) > 1:
                raise ValueError("ragged rows")
        self._hash = None

    @classmethod
    def identity(cls, order: int) -> "ExactMatrix":
        return cls._wrap(tuple(tuple(int(i == j) for j in range(order)) for i in range(order)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "ExactMatrix":
        ncols = nrows if ncols is None else ncols
        return cls._wrap(tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def _wrap(cls, rows) -> "ExactMatrix":
        return cls(rows, _trusted=True)

    @classmethod
    def from_blocks(cls, top_left, top_right, bottom_left, bottom_right) -> "ExactMatrix":
        top = tuple(a + b for a, b in zip(top_left.rows, top_right.rows))
        bottom = tuple(a + b for a, b in zip(bottom_left.rows, bottom_right.rows))
        return cls._wrap(top + bottom)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def order(self) -> int:
        nrows, ncols = self.shape
        if nrows != ncols:
            raise ValueError(f"matrix is not square: {self.shape}")
        return nrows

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return f"ExactMatrix({[[format_scalar(x) for x in r] for r in self.rows]})"

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._wrap(tuple(tuple(-x for x in r) for r in self.rows))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        _same_shape(self, other)
        return ExactMatrix._wrap(
            tuple(tuple(normalize(a + b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        _same_shape(self, other)
        return ExactMatrix._wrap(
            tuple(tuple(normalize(a - b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def scale(self, factor) -> "ExactMatrix":
        factor = normalize(factor)
        return ExactMatrix._wrap(tuple(tuple(normalize(factor * x) for x in r) for r in self.rows))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._wrap(tuple(zip(*self.rows)))

    def diagonal(self) -> list[Scalar]:
        return [self.rows[i][i] for i in range(self.order)]

    def column(self, j: int) -> list[Scalar]:
        return [r[j] for r in self.rows]

    def apply(self, vector: Sequence) -> list[Scalar]:
        """Matrix-vector product."""
        if len(vector) != self.shape[1]:
            raise ValueError("dimension mismatch")
        return [normalize(sum(a * v for a, v in zip(r, vector) if a)) for r in self.rows]

    def to_lists(self) -> list[list[Scalar]]:
        return [list(r) for r in self.rows]


def _same_shape(a: ExactMatrix, b: ExactMatrix) -> None:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Exact product; skips zero entries, which dominate most of our matrices."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    ncols = b.shape[1]
    sparse_b = [[(j, x) for j, x in enumerate(row) if x] for row in b.rows]
    out = []
    for row in a.rows:
        acc = [0] * ncols
        for k, aik in enumerate(row):
            if aik:
                for j, bkj in sparse_b[k]:
                    acc[j] += aik * bkj
        out.append(tuple(normalize(x) for x in acc))
    return ExactMatrix._wrap(tuple(out))


def _integer_rows(a: ExactMatrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; return the rows and the product of the scales."""
    rows = []
    scale = Fraction(1)
    for row in a.rows:
        d = lcm(*(x.denominator for x in row if isinstance(x, Fraction))) if any(
            isinstance(x, Fraction) for x in row
        ) else 1
        rows.append([int(x * d) for x in row])
        scale *= d
    return rows, scale


def bareiss_det_integer(rows: list[list[int]], *, check: bool = False) -> int:
    """Fraction-free Gaussian elimination; consumes ``rows``.

    Every intermediate value is an integer minor, so all divisions are exact.
    With ``check`` the exactness of each division is asserted.
    """
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            lead = row_i[k]
            if lead:
                for j in range(k + 1, n):
                    num = pivot * row_i[j] - lead * row_k[j]
                    if check and num % prev:
                        raise AssertionError("non-exact Bareiss division")
                    row_i[j] = num // prev
            else:
                for j in range(k + 1, n):
                    num = pivot * row_i[j]
                    if check and num % prev:
                        raise AssertionError("non-exact Bareiss division")
                    row_i[j] = num // prev
            row_i[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def det(a: ExactMatrix, *, check: bool = False) -> Scalar:
    """Exact determinant by Bareiss elimination.

    Rational input is first scaled row-wise to integers, so the elimination
    itself always runs on integers.
    """
    order = a.order
    if order == 0:
        return 1
    rows, scale = _integer_rows(a)
    return normalize(Fraction(bareiss_det_integer(rows, check=check)) / scale)


def inverse(a: ExactMatrix) -> ExactMatrix:
    """Gauss-Jordan inverse over the rationals."""
    n = a.order
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a.rows)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        row_c = [x / pivot for x in work[col]]
        work[col] = row_c
        nz = [j for j in range(2 * n) if row_c[j]]
        for r in range(n):
            if r != col:
                factor = work[r][col]
                if factor:
                    row_r = work[r]
                    for j in nz:
                        row_r[j] -= factor * row_c[j]
    return ExactMatrix(row[n:] for row in work)


def solve(columns: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Exact solution of sum_k c_k * columns[k] = rhs, or None if inconsistent.

    The columns must be linearly independent; a rank deficiency raises.
    """
    ncols = len(columns)
    nrows = len(rhs)
    work = [[Fraction(columns[k][i]) for k in range(ncols)] + [Fraction(rhs[i])] for i in range(nrows)]
    row = 0
    pivots = []
    for col in range(ncols):
        pivot_row = next((r for r in range(row, nrows) if work[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("columns are linearly dependent")
        work[row], work[pivot_row] = work[pivot_row], work[row]
        pivot = work[row][col]
        work[row] = [x / pivot for x in work[row]]
        for r in range(nrows):
            if r != row and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[row])]
        pivots.append(row)
        row += 1
    if any(work[r][ncols] != 0 for r in range(row, nrows)):
        return None
    return [work[r][ncols] for r in pivots]


def is_lower_triangular(a: ExactMatrix) -> bool:
    n = a.order
    return all(a.rows[i][j] == 0 for i in range(n) for j in range(i + 1, n))


def is_upper_triangular(a: ExactMatrix) -> bool:
    n = a.order
    return all(a.rows[i][j] == 0 for i in range(n) for j in range(i))


class IntPolynomial:
    """Polynomial with exact coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        c = [normalize(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, value) -> "IntPolynomial":
        return cls([value])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return IntPolynomial(normalize(other) * x for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return normalize(acc)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = Fraction(other.leading())
        for shift in range(len(quot) - 1, -1, -1):
            factor = rem[shift + other.degree] / lead
            quot[shift] = factor
            if factor:
                for i, c in enumerate(other.coeffs):
                    rem[shift + i] -= factor * c
        return IntPolynomial(quot), IntPolynomial(rem)

    def monic(self) -> "IntPolynomial":
        lead = Fraction(self.leading())
        return IntPolynomial(Fraction(c) / lead for c in self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({[format_scalar(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if i == 0:
                body = format_scalar(mag)
            else:
                body = ("" if mag == 1 else format_scalar(mag) + "*") + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Monic gcd over the rationals."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def squarefree_part_degree(p: IntPolynomial) -> int:
    """Number of distinct complex roots: deg(p / gcd(p, p'))."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    g = poly_gcd(p, p.derivative())
    return p.degree - g.degree


def charpoly(a: ExactMatrix) -> IntPolynomial:
    """det(xI - A) by the Faddeev-LeVerrier recurrence.

    Orders above ``CHARPOLY_MAX_ORDER`` are refused; the recurrence needs one
    matrix product per coefficient.
    """
    n = a.order
    if n > CHARPOLY_MAX_ORDER:
        raise ValueError(f"charpoly supported up to order {CHARPOLY_MAX_ORDER}, got {n}")
    coeffs: list[Scalar] = [0] * (n + 1)
    coeffs[n] = 1
    identity = ExactMatrix.identity(n)
    am = ExactMatrix.zeros(n)
    for k in range(1, n + 1):
        m = am + identity.scale(coeffs[n - k + 1])
        am = mat_mul(a, m)
        trace = sum(am.rows[i][i] for i in range(n))
        coeffs[n - k] = normalize(Fraction(-trace) / k)
    return IntPolynomial(coeffs)
