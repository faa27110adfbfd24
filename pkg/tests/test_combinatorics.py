import pytest
from sympy.functions.combinatorial.numbers import partition as sympy_partition
from hypothesis import given, strategies as st

from descmat import combinatorics as cb

small_n = st.integers(min_value=1, max_value=12)


@st.composite
def subset_of(draw, n=None):
    if n is None:
        n = draw(small_n)
    return n, draw(st.integers(min_value=0, max_value=(1 << n) - 1))


@st.composite
def composition(draw, max_n=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    bits = draw(st.integers(min_value=0, max_value=(1 << (n - 1)) - 1))
    return cb.subset_to_composition(bits, n)


def test_mask_and_elements():
    assert cb.mask([1, 3]) == 5
    assert cb.elements(5) == [1, 3]
    assert cb.mask([]) == 0
    with pytest.raises(ValueError):
        cb.mask([0])


def test_runs_example():
    j = cb.mask([1, 2, 4, 5, 6, 8, 10])
    assert [r.elements() for r in cb.runs(j)] == [[1, 2], [4, 5, 6], [8], [10]]
    assert cb.runs(0) == []


@given(subset_of())
def test_runs_partition_the_subset(case):
    n, bits = case
    rs = cb.runs(bits)
    union = 0
    for r in rs:
        assert union & r.mask() == 0
        union |= r.mask()
    assert union == bits
    # maximal: consecutive runs are separated by a gap
    for a, b in zip(rs, rs[1:]):
        assert b.first > a.last + 1


def _antilex_brute(a, b):
    ea, eb = set(cb.elements(a)), set(cb.elements(b))
    return max(ea ^ eb) in eb


@given(subset_of(), subset_of())
def test_antilex_is_numeric_order(x, y):
    a, b = x[1], y[1]
    if a == b:
        with pytest.raises(ValueError):
            cb.antilex_less(a, b)
    else:
        assert cb.antilex_less(a, b) == (a < b) == _antilex_brute(a, b)


def test_antilex_listing_n3():
    listing = [cb.format_subset(b) for b in cb.subsets(3)]
    assert listing == ["{}", "{1}", "{2}", "{1,2}", "{3}", "{1,3}", "{2,3}", "{1,2,3}"]


def _prefix_brute(i_bits, j_bits):
    for r in cb.runs(i_bits):
        hit = [x for x in r.elements() if j_bits >> (x - 1) & 1]
        if hit != r.elements()[: len(hit)]:
            return False
    return True


@given(subset_of(), st.integers(min_value=0, max_value=(1 << 12) - 1))
def test_prefix_compatible_matches_definition(case, j):
    n, i = case
    j &= cb.full(n)
    assert cb.prefix_compatible(i, j) == _prefix_brute(i, j)


@given(composition())
def test_composition_subset_bijection(mu):
    n = sum(mu)
    s, i = cb.composition_to_subsets(mu)
    assert s | i == cb.full(n) and s & i == 0
    assert s >> (n - 1) & 1  # n is always a partial sum
    assert cb.subset_to_composition(i, n) == mu


def test_composition_examples():
    assert cb.composition_to_subsets((2, 1, 3)) == (cb.mask([2, 3, 6]), cb.mask([1, 4, 5]))
    assert cb.compositions(3) == [(1, 1, 1), (2, 1), (1, 2), (3,)]


@pytest.mark.parametrize("n", range(1, 11))
def test_counts(n):
    assert len(cb.compositions(n)) == 2 ** (n - 1)
    assert len(cb.partitions(n)) == sympy_partition(n)
    assert len(set(cb.partitions(n))) == len(cb.partitions(n))


def test_partition_order():
    assert cb.partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@given(composition(), composition())
def test_refines_by_subsets(mu, lam):
    if sum(mu) != sum(lam):
        with pytest.raises(ValueError):
            cb.refines(mu, lam)
        return
    i_mu, i_lam = cb.composition_to_mask(mu), cb.composition_to_mask(lam)
    # a finer composition has fewer "glue" positions
    assert cb.refines(mu, lam) == (i_mu & ~i_lam == 0)


def test_refines_brute():
    # merge adjacent parts of mu to reach lam
    for n in range(1, 7):
        comps = cb.compositions(n)
        for mu in comps:
            sums = {sum(mu[:k]) for k in range(len(mu) + 1)}
            for lam in comps:
                lam_sums = {sum(lam[:k]) for k in range(len(lam) + 1)}
                assert cb.refines(mu, lam) == lam_sums.issubset(sums)


@given(st.integers(min_value=1, max_value=12))
def test_conjugate_involution(n):
    for lam in cb.partitions(n):
        assert cb.conjugate(cb.conjugate(lam)) == lam
        assert sum(cb.conjugate(lam)) == n


@given(subset_of())
def test_fin(case):
    n, bits = case
    f = cb.fin(bits, n)
    outside = [i for i in range(1, n + 1) if not bits >> (i - 1) & 1]
    assert f == (max(outside) if outside else 0)


@given(subset_of())
def test_subsets_of_and_supersets(case):
    n, bits = case
    subs = list(cb.subsets_of(bits))
    assert subs == sorted(subs)
    assert len(subs) == 2 ** cb.size(bits)
    assert all(s & ~bits == 0 for s in subs)
    sups = list(cb.supersets_in(bits, n))
    assert len(sups) == 2 ** (n - cb.size(bits))
    assert all(s & bits == bits and s <= cb.full(n) for s in sups)


def _generated_group_order(gens, n):
    group = {tuple(range(1, n + 1))}
    frontier = list(group)
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = tuple(g[x - 1] for x in s)
            if h not in group:
                group.add(h)
                frontier.append(h)
    return len(group)


def test_parabolic_order():
    # <s_1, s_2, s_4> in S_5 is S_3 x S_2
    assert cb.parabolic_order(cb.mask([1, 2, 4])) == 12
    for n in range(1, 6):
        for bits in cb.subsets(n - 1):
            gens = []
            for i in cb.elements(bits):
                p = list(range(1, n + 1))
                p[i - 1], p[i] = p[i], p[i - 1]
                gens.append(tuple(p))
            assert cb.parabolic_order(bits) == _generated_group_order(gens, n)


@given(subset_of())
def test_format_parse_roundtrip(case):
    _, bits = case
    assert cb.parse_subset(cb.format_subset(bits)) == bits


def test_parse_parts():
    assert cb.parse_parts("3,2,1") == (3, 2, 1)
    with pytest.raises(ValueError):
        cb.parse_parts("3,0")
    with pytest.raises(ValueError):
        cb.parse_parts("")


def test_check_ambient():
    with pytest.raises(ValueError):
        cb.check_ambient(cb.mask([4]), 3)
    cb.check_ambient(cb.mask([3]), 3)
