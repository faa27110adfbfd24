"""Permutations, standard Young tableaux, RSK and characters of S_n.

Permutations are tuples in one-line notation, ``perm[i-1] = pi(i)``.
Products compose as functions: ``compose(p, q)(i) = p(q(i))``.
Tableaux are tuples of rows (English notation, row 0 on top).
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import factorial, prod
from typing import Iterator, Sequence

from . import combinatorics as cb

Permutation = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]

EXHAUSTIVE_CAP = 10


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def check_permutation(perm: Sequence[int]) -> Permutation:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation of [{len(perm)}]: {perm}")
    return perm


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order of one-line notation."""
    if n > EXHAUSTIVE_CAP:
        raise ValueError(f"exhaustive scans of S_n are capped at n = {EXHAUSTIVE_CAP}")
    return _itertools_permutations(range(1, n + 1))


def compose(p: Permutation, q: Permutation) -> Permutation:
    return tuple(p[x - 1] for x in q)


def inverse(perm: Permutation) -> Permutation:
    out = [0] * len(perm)
    for i, v in enumerate(perm, 1):
        out[v - 1] = i
    return tuple(out)


def simple_transposition(i: int, n: int) -> Permutation:
    perm = list(range(1, n + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def cycle_type(perm: Permutation) -> cb.Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if not seen[start]:
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = perm[i] - 1
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def descents_perm(perm: Sequence[int]) -> int:
    """Des(pi) = {i : pi(i) > pi(i+1)} as a mask."""
    bits = 0
    for i in range(len(perm) - 1):
        if perm[i] > perm[i + 1]:
            bits |= 1 << i
    return bits


def length_and_maj(perm: Sequence[int]) -> tuple[int, int]:
    """(number of inversions, major index)."""
    n = len(perm)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
    maj = sum(i + 1 for i in range(n - 1) if perm[i] > perm[i + 1])
    return inv, maj


def coxeter_element(bits: int, n: int) -> Permutation:
    """s_{j1} s_{j2} ... s_{jk} for J = {j1 < ... < jk}, a subset of [n-1]."""
    cb.check_ambient(bits, max(n - 1, 0))
    perm = identity(n)
    for j in cb.elements(bits):
        perm = compose(perm, simple_transposition(j, n))
    return perm


def is_mu_unimodal(bits: int, mu: cb.Composition) -> bool:
    """Each run of I(mu) meets J in a prefix of that run."""
    return cb.prefix_compatible(cb.composition_to_mask(mu), bits)


def is_arc(perm: Permutation) -> bool:
    """Every prefix {pi(1), ..., pi(k)} is an interval of Z_n."""
    n = len(perm)
    present = [False] * n
    starts = 0
    for k, v in enumerate(perm, 1):
        r = v % n
        present[r] = True
        # adding r: it may start a new block, merge with neighbours, or extend one
        left = present[(r - 1) % n] and (r - 1) % n != r
        right = present[(r + 1) % n] and (r + 1) % n != r
        if not left and not right:
            starts += 1
        elif left and right:
            starts -= 1
        if k < n and starts != 1:
            return False
    return True


def is_involution(perm: Permutation) -> bool:
    return all(perm[v - 1] == i for i, v in enumerate(perm, 1))


# -- tableaux --------------------------------------------------------------


def shape(tableau: Tableau) -> cb.Partition:
    return tuple(len(row) for row in tableau)


def check_tableau(tableau: Sequence[Sequence[int]]) -> Tableau:
    t = tuple(tuple(row) for row in tableau)
    lam = shape(t)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p == 0 for p in lam):
        raise ValueError(f"rows do not form a partition shape: {lam}")
    entries = sorted(x for row in t for x in row)
    if entries != list(range(1, sum(lam) + 1)):
        raise ValueError("entries must be exactly 1..n")
    for row in t:
        if any(a >= b for a, b in zip(row, row[1:])):
            raise ValueError("rows must increase")
    for r in range(1, len(t)):
        if any(t[r - 1][c] >= t[r][c] for c in range(len(t[r]))):
            raise ValueError("columns must increase")
    return t


def descents_tab(tableau: Tableau) -> int:
    """{i : i+1 lies in a strictly lower row than i} as a mask."""
    row_of = {}
    for r, row in enumerate(tableau):
        for x in row:
            row_of[x] = r
    n = len(row_of)
    bits = 0
    for i in range(1, n):
        if row_of[i + 1] > row_of[i]:
            bits |= 1 << (i - 1)
    return bits


def tableau_maj(tableau: Tableau) -> int:
    return sum(cb.elements(descents_tab(tableau)))


def standard_tableaux(lam: cb.Partition) -> list[Tableau]:
    """All SYT of shape lam, ordered by their reading of entries row by row."""
    lam = tuple(lam)
    n = sum(lam)
    if n == 0:
        return [()]
    out = []
    # n sits in a removable corner; recurse on the smaller shape
    for r in range(len(lam)):
        if r == len(lam) - 1 or lam[r] > lam[r + 1]:
            smaller = list(lam)
            smaller[r] -= 1
            smaller_shape = tuple(p for p in smaller if p)
            for t in standard_tableaux(smaller_shape):
                rows = [list(row) for row in t]
                if r == len(rows):
                    rows.append([n])
                else:
                    rows[r].append(n)
                out.append(tuple(tuple(row) for row in rows))
    return sorted(out)


def hook_length_count(lam: cb.Partition) -> int:
    """Number of SYT of shape lam."""
    n = sum(lam)
    conj = cb.conjugate(lam)
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(n) // hooks


def superstandard(lam: cb.Partition) -> Tableau:
    """Row superstandard tableau: 1..lam_1 in row 0, and so on."""
    rows = []
    start = 1
    for part in lam:
        rows.append(tuple(range(start, start + part)))
        start += part
    return tuple(rows)


def rsk(perm: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK: (insertion tableau P, recording tableau Q)."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(perm, 1):
        x = value
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                q_rows[r].append(step)
                break
            row[pos], x = x, row[pos]
            r += 1
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def inverse_rsk(p: Tableau, q: Tableau) -> Permutation:
    """The permutation with RSK image (P, Q)."""
    if shape(p) != shape(q):
        raise ValueError("P and Q must have the same shape")
    p_rows = [list(row) for row in p]
    where = {}
    for r, row in enumerate(q):
        for c, x in enumerate(row):
            where[x] = (r, c)
    n = len(where)
    out = [0] * n
    for step in range(n, 0, -1):
        r, c = where[step]
        x = p_rows[r].pop(c)
        if not p_rows[r]:
            p_rows.pop(r)
        for rr in range(r - 1, -1, -1):
            row = p_rows[rr]
            # largest entry smaller than x gets bumped out
            pos = bisect_right(row, x) - 1
            row[pos], x = x, row[pos]
        out[step - 1] = x
    return tuple(out)


# -- characters -------------------------------------------------------------


def class_size(mu: cb.Partition) -> int:
    """n! / z_mu."""
    counts = Counter(mu)
    z = prod(i ** m * factorial(m) for i, m in counts.items())
    return factorial(sum(mu)) // z


@lru_cache(maxsize=None)
def mn_character(lam: cb.Partition, mu: cb.Partition) -> int:
    """chi^lam at cycle type mu, by the Murnaghan-Nakayama rule.

    Rim hooks are removed on the beta-set (first-column hook lengths): a hook
    of length r corresponds to sliding a bead from b to b - r onto an empty
    position, with sign (-1)^(beads jumped over).
    """
    lam = tuple(p for p in lam if p)
    mu = tuple(sorted((p for p in mu if p), reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} are partitions of different integers")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = sorted((target if c == b else c for c in beta), reverse=True)
        new_lam = tuple(new_beta[i] - (k - 1 - i) for i in range(k))
        total += (-1) ** jumped * mn_character(new_lam, rest)
    return total
