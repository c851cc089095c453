import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from prismlattice.changemaker import (
    GAPPY, JUST_RIGHT, TIGHT, standard_basis_violations, complement_gram, dot, enumerate_changemakers,
    is_changemaker, norm, standard_basis, supp, supp_plus, to_ambient,
)
from prismlattice.lattice import bareiss_det


def subset_sums(sigma):
    sums = {0}
    for x in sigma:
        sums |= {s + x for s in sums}
    return sums


def brute_is_changemaker(sigma):
    return subset_sums(sigma) >= set(range(sum(sigma) + 1))


def test_examples():
    assert is_changemaker((1, 1, 2, 2, 3, 5))
    assert not is_changemaker((1, 3))
    assert is_changemaker((0, 1))
    with pytest.raises(ValueError):
        is_changemaker((2, 1))


@given(st.lists(st.integers(0, 12), min_size=1, max_size=7))
def test_prefix_criterion_matches_subset_sums(xs):
    sigma = tuple(sorted(xs))
    assert is_changemaker(sigma) == brute_is_changemaker(sigma)


def test_enumeration_examples():
    assert list(enumerate_changemakers(2, 8)) == [(1, 1), (1, 2)]
    assert list(enumerate_changemakers(1, 5)) == [(1,)]
    assert (1, 1, 3, 5) in set(enumerate_changemakers(4, 36))
    assert (1, 1, 3, 5) not in set(enumerate_changemakers(4, 35))


@pytest.mark.parametrize("length, bound", [(3, 30), (4, 60), (5, 50), (6, 40)])
def test_enumeration_is_complete(length, bound):
    brute = set()
    for rest in itertools.product(range(1, 8), repeat=length - 1):
        sigma = (1,) + rest
        if list(sigma) == sorted(sigma) and norm(sigma) <= bound and brute_is_changemaker(sigma):
            brute.add(sigma)
    got = list(enumerate_changemakers(length, bound))
    assert got == sorted(got) and len(got) == len(set(got))
    assert set(got) == brute


def test_standard_basis_example():
    S = standard_basis((1, 1, 3, 5))
    assert S.vectors == ((1, -1, 0, 0), (2, 1, -1, 0), (1, 1, 1, -1))
    assert S.kinds == (JUST_RIGHT, TIGHT, JUST_RIGHT)
    assert standard_basis((1, 1)).vectors == ((1, -1),)
    assert complement_gram((1, 1)).gram == ((2,),)


def test_gappy_example():
    S = standard_basis((1, 2, 3, 3, 7))
    assert S.v(4) == (1, 0, 1, 1, -1)
    assert S.kind(4) == GAPPY and S.gappy_indices[3] == (0,)


def test_complement_gram_example():
    G = complement_gram((1, 1, 3, 5))
    assert G.gram == ((2, 1, 0), (1, 6, 2), (0, 2, 4))
    assert G.det() == 36


def random_changemaker(rng, length):
    sigma = [1]
    for _ in range(length - 1):
        sigma.append(rng.randint(sigma[-1], sum(sigma) + 1))
    return tuple(sigma)


@settings(max_examples=500, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**9))
def test_standard_basis_properties(length, seed):
    sigma = random_changemaker(random.Random(seed), length)
    S = standard_basis(sigma)
    for j in range(1, length):
        v = S.v(j)
        assert dot(v, sigma) == 0
        assert v[j] == -1 and all(c == 0 for c in v[j + 1:])
        assert max(supp(v)) == j and supp_plus(v) == supp(v) - {j}
    assert complement_gram(sigma).det() == norm(sigma)
    assert bareiss_det([list(r) for r in complement_gram(sigma).gram]) == norm(sigma)


def test_to_ambient():
    S = standard_basis((1, 1, 3, 5))
    assert to_ambient((1, 0, 1), S) == (2, 0, 1, -1)
    assert dot(to_ambient((3, -2, 5), S), S.sigma) == 0


@pytest.mark.parametrize("sigma", [(1, 1, 3, 5), (1, 2, 3, 3, 7), (1, 1, 2, 2, 3, 5), (1, 2, 3, 4, 5, 9),
                                   (1, 1, 1, 1, 4), (1, 2, 2, 2, 7, 14)])
def test_standard_basis_facts(sigma):
    assert not any(standard_basis_violations(sigma).values())


def test_standard_basis_rejects():
    with pytest.raises(ValueError):
        standard_basis((0, 1))
    with pytest.raises(ValueError):
        standard_basis((1, 3))
