"""Subsets of [n] as bit masks, compositions, runs and the anti-lex order.

A subset J of [n] = {1, ..., n} is stored as the integer
``ord(J) = sum(2**(j-1) for j in J)``.  Sorting masks numerically is the
anti-lexicographic order, so a mask is directly a row/column index of every
matrix in :mod:`descmat.families`.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Iterator, NamedTuple

Composition = tuple[int, ...]
Partition = tuple[int, ...]

MAX_AMBIENT = 62


class Run(NamedTuple):
    """The interval {start+1, ..., start+length}."""

    start: int
    length: int

    @property
    def first(self) -> int:
        return self.start + 1

    @property
    def last(self) -> int:
        return self.start + self.length

    def elements(self) -> list[int]:
        return list(range(self.start + 1, self.start + self.length + 1))

    def mask(self) -> int:
        return ((1 << self.length) - 1) << self.start


def mask(elements: Iterable[int]) -> int:
    """Mask of a collection of positive integers."""
    bits = 0
    for j in elements:
        if j < 1:
            raise ValueError(f"subset elements must be positive, got {j}")
        bits |= 1 << (j - 1)
    return bits


def elements(bits: int) -> list[int]:
    """Sorted elements of the subset encoded by ``bits``."""
    out = []
    j = 1
    while bits:
        if bits & 1:
            out.append(j)
        bits >>= 1
        j += 1
    return out


def full(n: int) -> int:
    """Mask of [n]."""
    return (1 << n) - 1


def size(bits: int) -> int:
    return bin(bits).count("1")


def check_ambient(bits: int, n: int) -> None:
    if n < 0 or n > MAX_AMBIENT:
        raise ValueError(f"ambient size {n} outside [0, {MAX_AMBIENT}]")
    if bits < 0 or bits >> n:
        raise ValueError(f"subset {elements(bits)} not contained in [{n}]")


def subsets(n: int) -> range:
    """All subsets of [n] in anti-lex order."""
    return range(1 << n)


def subsets_of(bits: int) -> Iterator[int]:
    """All submasks of ``bits``, in increasing order."""
    out = []
    sub = bits
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & bits
    return reversed(out)


def supersets_in(bits: int, n: int) -> Iterator[int]:
    """All masks of subsets of [n] containing ``bits``, in increasing order."""
    rest = full(n) & ~bits
    for sub in subsets_of(rest):
        yield bits | sub


def runs(bits: int) -> list[Run]:
    """Maximal intervals of consecutive integers, in increasing order.

    >>> [r.elements() for r in runs(mask([1, 2, 4, 5, 6, 8, 10]))]
    [[1, 2], [4, 5, 6], [8], [10]]
    """
    out = []
    pos = 0
    while bits:
        while not bits & 1:
            bits >>= 1
            pos += 1
        length = 0
        while bits & 1:
            bits >>= 1
            length += 1
        out.append(Run(pos, length))
        pos += length
    return out


def antilex_less(a: int, b: int) -> bool:
    """True iff a < b in the anti-lexicographic order.

    The largest element of the symmetric difference decides; equal subsets
    are not comparable and raise ``ValueError``.
    """
    if a == b:
        raise ValueError(f"cannot order a subset against itself: {elements(a)}")
    top = (a ^ b).bit_length() - 1
    return bool(b >> top & 1)


def prefix_compatible(i_bits: int, j_bits: int) -> bool:
    """True iff every run of I meets J in a prefix of that run."""
    for run in runs(i_bits):
        hit = (j_bits & run.mask()) >> run.start
        # hit must look like 0...01...1 (low bits set, contiguous)
        if hit & (hit + 1):
            return False
    return True


def fin(bits: int, n: int) -> int:
    """Largest i in {0, ..., n} not in the subset; fin([n]) = 0."""
    i = n
    while i > 0 and bits >> (i - 1) & 1:
        i -= 1
    return i


def composition_to_subsets(mu: Composition) -> tuple[int, int]:
    """(S(mu), I(mu)): partial sums of mu and their complement in [n]."""
    check_composition(mu)
    s = 0
    total = 0
    for part in mu:
        total += part
        s |= 1 << (total - 1)
    return s, full(total) & ~s


def composition_to_mask(mu: Composition) -> int:
    """I(mu) as a subset of [n-1]."""
    return composition_to_subsets(mu)[1]


def subset_to_composition(bits: int, n: int) -> Composition:
    """The composition mu of n with I(mu) = J, for J a subset of [n-1]."""
    if n < 1:
        raise ValueError("compositions are of positive integers")
    check_ambient(bits, n - 1)
    parts = []
    current = 1
    for i in range(1, n):
        if bits >> (i - 1) & 1:
            current += 1
        else:
            parts.append(current)
            current = 1
    parts.append(current)
    return tuple(parts)


def check_composition(mu: Composition) -> None:
    if not mu or any(not isinstance(p, int) or p < 1 for p in mu):
        raise ValueError(f"not a composition: {mu!r}")


def refines(mu: Composition, lam: Composition) -> bool:
    """True iff mu refines lam, i.e. S(lam) is a subset of S(mu)."""
    if sum(mu) != sum(lam):
        raise ValueError("compositions of different integers")
    s_mu = composition_to_subsets(mu)[0]
    s_lam = composition_to_subsets(lam)[0]
    return s_lam & ~s_mu == 0


def parabolic_order(bits: int) -> int:
    """Order of the subgroup of S_n generated by {s_i : i in I}."""
    out = 1
    for run in runs(bits):
        out *= factorial(run.length + 1)
    return out


def compositions(n: int) -> list[Composition]:
    """All compositions of n, in anti-lex order of I(mu)."""
    if n == 0:
        return [()]
    return [subset_to_composition(bits, n) for bits in subsets(n - 1)]


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of n in reverse-lex order: (n) first, (1,...,1) last."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def underlying_partition(mu: Composition) -> Partition:
    return tuple(sorted(mu, reverse=True))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def format_subset(bits: int) -> str:
    return "{" + ",".join(map(str, elements(bits))) + "}"


def parse_subset(text: str) -> int:
    """Parse '1,3,4' (braces optional, empty string for the empty set)."""
    text = text.strip().strip("{}").strip()
    if not text:
        return 0
    return mask(int(tok) for tok in text.split(","))


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse a comma-separated list of positive integers."""
    parts = tuple(int(tok) for tok in text.strip().strip("()").split(",") if tok.strip())
    check_composition(parts)
    return parts
