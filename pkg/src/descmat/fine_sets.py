"""Character values versus descent-set distributions.

A family ``B`` of objects with descent sets in [n-1] gives a descent vector
``v`` (counts by descent set, anti-lex indexed).  ``B`` is fine for a
representation when ``A_{n-1} v`` lists the character at the Coxeter
elements ``c_J``.  Because ``A_{n-1}`` is invertible the character vector
determines the descent distribution; :func:`count_superset` and
:func:`count_exact` recover it in closed form.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Sequence

from . import combinatorics as cb
from . import symgroup as sg
from .exact_linalg import normalize, solve
from .families import Family, build

FAMILY_KINDS = ("knuth", "syt", "length", "involutions", "conj", "arc", "explicit")


@dataclass(frozen=True)
class FineFamily:
    """A combinatorial family with a descent map.

    ``param`` is a partition for knuth/syt/conj, an integer for length and a
    tuple of permutations for explicit; unused otherwise.
    """

    kind: str
    param: object = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}")

    @property
    def label(self) -> str:
        if self.kind in ("knuth", "syt", "conj"):
            return f"{self.kind}({','.join(map(str, self.param))})"
        if self.kind == "length":
            return f"length({self.param})"
        if self.kind == "explicit":
            return f"explicit[{len(self.param)}]"
        return self.kind

    def fixed_n(self) -> int | None:
        if self.kind in ("knuth", "syt", "conj"):
            return sum(self.param)
        if self.kind == "explicit" and self.param:
            return len(self.param[0])
        return None


def knuth_class(lam) -> FineFamily:
    return FineFamily("knuth", _partition(lam))


def syt(lam) -> FineFamily:
    return FineFamily("syt", _partition(lam))


def length(k: int) -> FineFamily:
    return FineFamily("length", int(k))


def involutions() -> FineFamily:
    return FineFamily("involutions")


def conj_class(nu) -> FineFamily:
    return FineFamily("conj", _partition(nu))


def arc() -> FineFamily:
    return FineFamily("arc")


def explicit(perms: Iterable[Sequence[int]] = ()) -> FineFamily:
    perms = tuple(sg.check_permutation(p) for p in perms)
    if len({len(p) for p in perms}) > 1:
        raise ValueError("explicit permutations must all have the same size")
    return FineFamily("explicit", perms)


def _partition(parts) -> cb.Partition:
    parts = tuple(parts)
    cb.check_composition(parts)
    if list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"not a partition: {parts}")
    return parts


def enumerate_family(family: FineFamily, n: int) -> Iterator[tuple[object, int]]:
    """Yield (element, descent mask) for each member, once each."""
    fixed = family.fixed_n()
    if fixed is not None and fixed != n:
        raise ValueError(f"{family.label} lives in S_{fixed}, not S_{n}")
    if n < 1:
        raise ValueError("n must be positive")
    kind = family.kind
    if kind == "syt":
        for t in sg.standard_tableaux(family.param):
            yield t, sg.descents_tab(t)
    elif kind == "knuth":
        p0 = sg.superstandard(family.param)
        for q in sg.standard_tableaux(family.param):
            perm = sg.inverse_rsk(p0, q)
            yield perm, sg.descents_perm(perm)
    elif kind == "explicit":
        for perm in family.param:
            yield perm, sg.descents_perm(perm)
    else:
        if kind == "length" and not 0 <= family.param <= n * (n - 1) // 2:
            raise ValueError(f"length {family.param} outside [0, {n * (n - 1) // 2}]")
        test = {
            "length": lambda p: sg.length_and_maj(p)[0] == family.param,
            "involutions": sg.is_involution,
            "conj": lambda p: sg.cycle_type(p) == family.param,
            "arc": sg.is_arc,
        }[kind]
        for perm in sg.all_permutations(n):
            if test(perm):
                yield perm, sg.descents_perm(perm)


@dataclass(frozen=True)
class DescentVector:
    n: int
    counts: tuple[int, ...]

    def __getitem__(self, bits: int) -> int:
        return self.counts[bits]

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class CharacterVector:
    """Entry at mask J is the character value at the Coxeter element c_J."""

    n: int
    values: tuple

    def __getitem__(self, bits: int):
        return self.values[bits]

    def at(self, mu: cb.Composition):
        return self.values[cb.composition_to_mask(mu)]


@lru_cache(maxsize=256)
def descent_vector(family: FineFamily, n: int) -> DescentVector:
    counts = [0] * (1 << (n - 1))
    for _, des in enumerate_family(family, n):
        counts[des] += 1
    return DescentVector(n, tuple(counts))


def descent_vector_from(descents: Iterable[int], n: int) -> DescentVector:
    counts = [0] * (1 << (n - 1))
    for des in descents:
        counts[des] += 1
    return DescentVector(n, tuple(counts))


def signed_unimodal_sum(descents: Counter, mu: cb.Composition) -> int:
    """sum over mu-unimodal descent sets of (-1)^|Des & I(mu)|, with multiplicity."""
    i_mu = cb.composition_to_mask(mu)
    total = 0
    for des, mult in descents.items():
        if cb.prefix_compatible(i_mu, des):
            total += -mult if cb.size(des & i_mu) & 1 else mult
    return total


def fine_character(family: FineFamily, mu: cb.Composition) -> int:
    """Signed count of members whose descent set is mu-unimodal."""
    v = descent_vector(family, sum(mu))
    return signed_unimodal_sum(Counter({d: c for d, c in enumerate(v.counts) if c}), mu)


def lift(v: DescentVector) -> CharacterVector:
    """x = A_{n-1} v."""
    return CharacterVector(v.n, tuple(build(Family.A, v.n - 1).apply(v.counts)))


def lift_character(family: FineFamily, n: int) -> CharacterVector:
    return lift(descent_vector(family, n))


def character_vector(chi, n: int) -> CharacterVector:
    """Vector of chi(cycle type of c_J) over all J in [n-1]; chi takes a partition."""
    return CharacterVector(
        n, tuple(chi(cb.underlying_partition(cb.subset_to_composition(j, n))) for j in cb.subsets(n - 1))
    )


def class_function_failures(x: CharacterVector) -> list[cb.Partition]:
    """Cycle types on which x takes more than one value (sorted reverse-lex)."""
    seen = defaultdict(set)
    for j in cb.subsets(x.n - 1):
        seen[cb.underlying_partition(cb.subset_to_composition(j, x.n))].add(x.values[j])
    order = cb.partitions(x.n)
    return [nu for nu in order if len(seen[nu]) > 1]


def count_superset(x: CharacterVector, i_bits: int) -> Fraction:
    """Closed-form |{b : Des(b) contains I}| from character values.

    Returned as an exact rational; non-integral values flag a non-fine input.
    """
    cb.check_ambient(i_bits, x.n - 1)
    runs = cb.runs(i_bits)
    total = 0
    for j_bits in cb.subsets_of(i_bits):
        weight = 1
        for run in runs:
            for i in run.elements():
                if j_bits >> (i - 1) & 1:
                    weight *= run.last - i + 1
        term = x.values[j_bits] * weight
        total += -term if cb.size(j_bits) & 1 else term
    return Fraction(total, cb.parabolic_order(i_bits))


def count_exact(x: CharacterVector, d_bits: int) -> Fraction:
    """|{b : Des(b) = D}| by inclusion-exclusion over count_superset."""
    total = Fraction(0)
    for i_bits in cb.supersets_in(d_bits, x.n - 1):
        term = count_superset(x, i_bits)
        total += -term if cb.size(i_bits & ~d_bits) & 1 else term
    return total


def recover_distribution(x: CharacterVector) -> list[Fraction]:
    return [count_exact(x, d) for d in cb.subsets(x.n - 1)]


# -- fineness ----------------------------------------------------------------


@dataclass
class FinenessReport:
    family: str
    n: int
    consistent: bool
    multiplicities: dict = field(default_factory=dict)
    fine: bool = False
    consistency_failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "fine": self.fine,
            "consistent": self.consistent,
            "multiplicities": {",".join(map(str, nu)): str(m) for nu, m in self.multiplicities.items()},
            "consistency_failures": [",".join(map(str, nu)) for nu in self.consistency_failures],
        }


def multiplicities(x: CharacterVector) -> dict:
    """Inner products <x, chi^nu> over the class functions of S_n.

    The value at a cycle type is read at I(nu) for nu itself; with an
    inconsistent x this is one arbitrary representative.
    """
    n = x.n
    parts = cb.partitions(n)
    out = {}
    for nu in parts:
        total = sum(sg.class_size(mu) * x.at(mu) * sg.mn_character(nu, mu) for mu in parts)
        out[nu] = normalize(Fraction(total, factorial(n)))
    return out


def multiplicities_by_solve(v: DescentVector) -> dict | None:
    """Solve v = sum_nu m_nu * (SYT(nu) descent vector) exactly; None if no solution."""
    parts = cb.partitions(v.n)
    columns = [descent_vector(syt(nu), v.n).counts for nu in parts]
    solution = solve(columns, v.counts)
    if solution is None:
        return None
    return {nu: normalize(m) for nu, m in zip(parts, solution)}


def fineness(source, n: int | None = None) -> FinenessReport:
    """Fineness test for a family or a descent vector.

    Fine means: the lifted vector is a class function and its multiplicities
    against every irreducible are nonnegative integers; the descent vector is
    then re-assembled from SYT descent vectors as a final check.
    """
    if isinstance(source, DescentVector):
        v = source
        label = "vector"
    else:
        if n is None:
            n = source.fixed_n()
        v = descent_vector(source, n)
        label = source.label
    x = lift(v)
    failures = class_function_failures(x)
    mults = multiplicities(x)
    fine = not failures and all(isinstance(m, int) and m >= 0 for m in mults.values())
    if fine:
        rebuilt = [0] * len(v.counts)
        for nu, m in mults.items():
            if m:
                for j, c in enumerate(descent_vector(syt(nu), v.n).counts):
                    rebuilt[j] += m * c
        if tuple(rebuilt) != v.counts:
            fine = False
    return FinenessReport(label, v.n, not failures, mults, fine, failures)


# -- Foata-Schuetzenberger / Lusztig-Stanley ---------------------------------


def syt_maj_multiplicities(n: int) -> dict[int, dict[cb.Partition, int]]:
    """k -> {lam: number of SYT(lam) with major index k}."""
    out: dict[int, dict] = defaultdict(dict)
    for lam in cb.partitions(n):
        for t in sg.standard_tableaux(lam):
            k = sg.tableau_maj(t)
            out[k][lam] = out[k].get(lam, 0) + 1
    return dict(out)


@dataclass
class EquidistributionReport:
    n: int
    joint_equal: bool
    characters_equal: bool
    mismatched_lengths: list = field(default_factory=list)
    mismatched_characters: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.joint_equal and self.characters_equal

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "joint_equal": self.joint_equal,
            "characters_equal": self.characters_equal,
            "mismatched_lengths": self.mismatched_lengths,
            "mismatched_characters": [[k, list(mu)] for k, mu in self.mismatched_characters],
        }


def equidistribution_fs_ls(n: int) -> EquidistributionReport:
    """Joint (Des, length) versus (Des, maj of inverse), and the character side.

    For each k the fixed-length class is compared against the SYT-maj
    multiplicities through the character oracle, at every composition.
    """
    if n > 9:
        raise ValueError("equidistribution check is capped at n = 9")
    by_length: dict[int, Counter] = defaultdict(Counter)
    by_imaj: dict[int, Counter] = defaultdict(Counter)
    for perm in sg.all_permutations(n):
        des = sg.descents_perm(perm)
        ell, _ = sg.length_and_maj(perm)
        _, imaj = sg.length_and_maj(sg.inverse(perm))
        by_length[ell][des] += 1
        by_imaj[imaj][des] += 1
    top = n * (n - 1) // 2
    mismatched = [k for k in range(top + 1) if by_length.get(k) != by_imaj.get(k)]
    mults = syt_maj_multiplicities(n)
    bad_chars = []
    for k in range(top + 1):
        for mu in cb.compositions(n):
            lhs = signed_unimodal_sum(by_length[k], mu)
            part = cb.underlying_partition(mu)
            rhs = sum(m * sg.mn_character(lam, part) for lam, m in mults.get(k, {}).items())
            if lhs != rhs:
                bad_chars.append((k, mu))
    return EquidistributionReport(n, not mismatched, not bad_chars, mismatched, bad_chars)
