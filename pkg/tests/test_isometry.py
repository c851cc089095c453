import itertools
import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from prismlattice.changemaker import complement_gram, standard_basis, to_ambient
from prismlattice.ctype import build_ctype
from prismlattice.families import solve_x0
from prismlattice.isometry import are_isometric, invert_unimodular, verify_isometry
from prismlattice.lattice import bareiss_det, random_unimodular, transform_gram


def test_identity():
    C = build_ctype(7, 9)
    M = are_isometric(C.lattice, C.lattice)
    assert verify_isometry(C.lattice, C.lattice, M)
    ident = [[int(i == j) for j in range(3)] for i in range(3)]
    assert verify_isometry(C.lattice, C.lattice, ident)
    assert not verify_isometry(C.lattice, build_ctype(3, 11).lattice, ident)


def test_reversal_is_not_an_isometry():
    C = build_ctype(7, 9)
    rev = [[int(i + j == 2) for j in range(3)] for i in range(3)]
    assert not verify_isometry(C.lattice, C.lattice, rev)


def test_complement_of_1135():
    G = complement_gram((1, 1, 3, 5))
    C = build_ctype(7, 9)
    M = are_isometric(G, C.lattice)
    assert M is not None and verify_isometry(G, C.lattice, M)
    # the tabulated vertex basis {x0 = v3 completed, -v2, v1} also realises the Gram of C(7, 9)
    S = standard_basis((1, 1, 3, 5))
    xs = [tuple(-c for c in S.v(2)), S.v(1)]
    x0s = solve_x0(S.sigma, xs)
    assert x0s
    basis = [x0s[0]] + xs
    gram = tuple(tuple(sum(a * b for a, b in zip(u, w)) for w in basis) for u in basis)
    assert gram == C.gram


def test_cross_pair_negative():
    assert are_isometric(build_ctype(3, 11).lattice, build_ctype(5, 11).lattice) is None
    assert are_isometric([[2, 1], [1, 2]], [[2, 0], [0, 2]]) is None
    assert are_isometric([[2]], [[2, 0], [0, 2]]) is None


def brute_isometric(G1, G2, radius=2):
    """Try every integer matrix with entries in [-radius, radius]."""
    n = len(G1)
    for entries in itertools.product(range(-radius, radius + 1), repeat=n * n):
        M = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if transform_gram(G2, M) == tuple(map(tuple, G1)):
            return True
    return False


@pytest.mark.parametrize("G1, G2", [
    ([[2, 1], [1, 2]], [[2, -1], [-1, 2]]),
    ([[2, 1], [1, 3]], [[2, 0], [0, 3]]),
    ([[2, 1], [1, 5]], [[3, 1], [1, 3]]),
    ([[4, -2], [-2, 4]], [[4, 2], [2, 4]]),
    ([[3, 1], [1, 3]], [[2, 0], [0, 4]]),
])
def test_small_cases_against_brute_force(G1, G2):
    assert (are_isometric(G1, G2) is not None) == brute_isometric(G1, G2)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 30), st.data())
def test_scrambled_ctype_is_isometric(q, data):
    p = data.draw(st.integers(2, q - 1))
    if gcd(p, q) != 1:
        return
    C = build_ctype(p, q)
    U = random_unimodular(C.n + 1, random.Random(data.draw(st.integers(0, 10**6))))
    G = transform_gram(C.gram, U)
    M = are_isometric(G, C.lattice)
    assert M is not None and verify_isometry(G, C.lattice, M)
    assert abs(bareiss_det(M)) == 1


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_invert_unimodular(n, seed):
    U = random_unimodular(n, random.Random(seed))
    V = invert_unimodular(U)
    prod = [[sum(U[i][k] * V[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]
    with pytest.raises(ValueError):
        invert_unimodular([[2, 0], [0, 1]])


def test_to_ambient_of_witness_column():
    # columns of the witness express C(7, 9)'s vertex images in the standard basis
    S = standard_basis((1, 1, 3, 5))
    G = complement_gram(S.sigma)
    C = build_ctype(7, 9)
    Minv = invert_unimodular(are_isometric(G, C.lattice))
    images = [to_ambient([row[i] for row in Minv], S) for i in range(3)]
    gram = tuple(tuple(sum(a * b for a, b in zip(u, w)) for w in images) for u in images)
    assert gram == C.gram
