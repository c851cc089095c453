import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from prismlattice.lattice import (
    GramLattice, IntegerSpan, NotPositiveDefinite, bareiss_det, canonical_sign, det, find_break,
    find_reduction, irreducible_flags, is_breakable, is_irreducible, pairing, pairwise_reduce,
    random_unimodular, transform_gram, vectors_of_norm, vectors_of_norm_at_most, vectors_with_norms,
)

C79 = [[4, -2, 0], [-2, 6, -1], [0, -1, 2]]


def frac_det(m):
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


def norm(G, v):
    return sum(v[i] * G[i][j] * v[j] for i in range(len(v)) for j in range(len(v)))


def box_vectors(G, bound, radius):
    """Every nonzero coefficient vector in [-radius, radius]^n of norm <= bound."""
    n = len(G)
    out = []
    for v in itertools.product(range(-radius, radius + 1), repeat=n):
        if any(v) and norm(G, v) <= bound:
            out.append(v)
    return sorted(out)


def box_reducible(G, v, radius):
    n = len(G)
    for x in itertools.product(range(-radius, radius + 1), repeat=n):
        y = tuple(a - b for a, b in zip(v, x))
        if any(x) and any(y):
            if sum(x[i] * G[i][j] * y[j] for i in range(n) for j in range(n)) >= 0:
                return True
    return False


def random_gram(rng, n, entry=3):
    B = [[rng.randint(-entry, entry) for _ in range(n)] for _ in range(n)]
    while frac_det(B) == 0:
        B = [[rng.randint(-entry, entry) for _ in range(n)] for _ in range(n)]
    return [[sum(B[k][i] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def test_pairing_examples():
    assert pairing(C79, (1, 0, 0), (1, 0, 0)) == 4
    assert pairing(C79, (1, 0, 0), (0, 1, 0)) == -2
    assert pairing(C79, (0, 0, 0), (3, -1, 7)) == 0
    with pytest.raises(ValueError):
        pairing(C79, (1, 0), (1, 0, 0))


def test_det_examples():
    assert det(C79) == 36
    assert det([[int(i == j) for j in range(5)] for i in range(5)]) == 1
    assert det([[4, -2], [-2, 4]]) == 12


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_bareiss_matches_fraction_elimination(n, seed):
    rng = random.Random(seed)
    m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
    assert bareiss_det(m) == frac_det(m)


def test_rejects_bad_gram():
    with pytest.raises(ValueError):
        GramLattice([[1, 2], [3, 4]])
    with pytest.raises(NotPositiveDefinite):
        GramLattice([[1, 2], [2, 1]])
    with pytest.raises(ValueError):
        GramLattice([])


def test_short_vectors_examples():
    assert vectors_of_norm_at_most(C79, 2) == [(0, 0, -1), (0, 0, 1)]
    assert vectors_of_norm_at_most([[1, 0], [0, 1]], 1) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert vectors_of_norm_at_most(C79, 0) == []


@settings(deadline=None, max_examples=40)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_short_vectors_match_box_search(n, seed):
    rng = random.Random(seed)
    G = random_gram(rng, n)
    L = GramLattice(G)
    bound = max(G[i][i] for i in range(n)) + 2
    # a vector of norm <= bound has |v_i| <= sqrt(bound * (G^-1)_ii); radius 6 covers these small cases
    radius = 6
    got = vectors_of_norm_at_most(L, bound)
    if got and max(abs(c) for v in got for c in v) >= radius:
        return
    assert got == box_vectors(G, bound, radius)
    assert vectors_with_norms(L, bound) == [(v, norm(G, v)) for v in got]
    exact = vectors_of_norm(L, G[0][0])
    assert (1,) + (0,) * (n - 1) in exact and all(norm(G, v) == G[0][0] for v in exact)


def test_irreducible_examples():
    for i in range(3):
        assert is_irreducible(C79, tuple(int(i == j) for j in range(3)))
    x, y = find_reduction(C79, (0, 1, 2))
    assert tuple(a + b for a, b in zip(x, y)) == (0, 1, 2)
    assert pairing(C79, x, y) >= 0 and any(x) and any(y)
    assert is_irreducible([[1, 0], [0, 1]], (0, 1))


def test_breakable_examples():
    assert not is_breakable(C79, (0, 0, 1))
    assert not is_breakable(C79, (0, 1, 0))
    # C(3, 11) has norms (4, 3, 2, 3, 2); x1 + x2 + x3 has two vertices of norm >= 3
    G = [[4, -2, 0, 0, 0], [-2, 3, -1, 0, 0], [0, -1, 2, -1, 0], [0, 0, -1, 3, -1], [0, 0, 0, -1, 2]]
    x, y = find_break(G, (0, 1, 1, 1, 0))
    assert pairing(G, x, y) == -1 and norm(G, x) >= 3 and norm(G, y) >= 3


@settings(deadline=None, max_examples=25)
@given(st.integers(2, 3), st.integers(0, 10**6))
def test_irreducible_matches_box_search(n, seed):
    rng = random.Random(seed)
    G = random_gram(rng, n, entry=2)
    L = GramLattice(G)
    for v in vectors_of_norm_at_most(L, max(G[i][i] for i in range(n)) + 1)[:12]:
        if max(abs(c) for c in v) > 2:
            continue
        assert is_irreducible(L, v) == (not box_reducible(G, v, 5))


@settings(deadline=None, max_examples=30)
@given(st.integers(2, 5), st.integers(0, 10**6))
def test_irreducible_flags_agree(n, seed):
    rng = random.Random(seed)
    G = random_gram(rng, n, entry=2)
    L = GramLattice(G)
    B = 2 * max(G[i][i] for i in range(n))
    vs = vectors_of_norm_at_most(L, B)[:200]
    pool = vectors_with_norms(L, B // 2)
    assert irreducible_flags(L, vs, pool) == [is_irreducible(L, v) for v in vs]


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_random_unimodular(n, seed):
    U = random_unimodular(n, random.Random(seed))
    assert abs(bareiss_det(U)) == 1


@settings(deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_pairwise_reduce_is_a_basis_change(n, seed):
    rng = random.Random(seed)
    G = random_gram(rng, n)
    U, H = pairwise_reduce(G)
    assert abs(bareiss_det(U)) == 1
    assert transform_gram(G, U) == H
    diag = [H[i][i] for i in range(n)]
    assert diag == sorted(diag)
    assert all(2 * abs(H[i][j]) <= H[j][j] for i in range(n) for j in range(n) if i != j)


def test_integer_span():
    S = IntegerSpan([(2, 0, 0), (0, 3, 3)], 3)
    assert S.rank == 2
    assert (4, -3, -3) in S
    assert (1, 0, 0) not in S
    assert (0, 3, 0) not in S
    assert (0, 0, 0) in S


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_integer_span_membership(gens, coeffs):
    S = IntegerSpan(gens, 3)
    combo = tuple(sum(c * g[k] for c, g in zip(coeffs, gens)) for k in range(3))
    assert combo in S


def test_canonical_sign():
    assert canonical_sign((0, -1, 2)) == (0, 1, -2)
    assert canonical_sign((0, 0)) == (0, 0)
