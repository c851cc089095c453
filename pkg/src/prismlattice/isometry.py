"""Exact isometry testing for small positive-definite integer lattices.

A witness is an integer matrix M whose columns are the images of L1's basis
vectors written in L2's basis, so that M^T G2 M = G1.
"""
from fractions import Fraction

from .lattice import GramLattice, as_lattice, canonical_sign, pairwise_reduce, transform_gram, vectors_with_norms


def verify_isometry(L1, L2, M) -> bool:
    G1 = as_lattice(L1).gram
    G2 = as_lattice(L2).gram
    n = len(G1)
    if len(G2) != n or len(M) != n or any(len(row) != n for row in M):
        return False
    return transform_gram(G2, M) == G1


def invert_unimodular(M):
    n = len(M)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    inv = [[a[i][n + j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in row) for row in inv)


def _search(L1, L2):
    G1 = L1.gram
    n = L1.rank
    bound = max(G1[i][i] for i in range(n))
    if L1.norm_counts(bound) != L2.norm_counts(bound):
        return None
    pool = vectors_with_norms(L2, bound)
    by_norm = {}
    for v, nv in pool:
        by_norm.setdefault(nv, []).append(v)
    cands = [by_norm.get(G1[i][i], []) for i in range(n)]
    if any(not c for c in cands):
        return None
    gv = {v: L2.gram_times(v) for v, _ in pool}

    # fewest candidates first, then the basis vector most tied to those already placed
    order = []
    left = set(range(n))
    while left:
        def key(i):
            ties = sum(1 for j in order if G1[i][j] != 0)
            return (-ties, len(cands[i]), i)
        nxt = min(left, key=key)
        order.append(nxt)
        left.remove(nxt)

    image = [None] * n

    def place(depth):
        if depth == n:
            return True
        i = order[depth]
        placed = order[:depth]
        for c in cands[i]:
            if depth == 0 and canonical_sign(c) != c:
                continue
            gc = gv[c]
            ok = True
            for j in placed:
                if sum(a * b for a, b in zip(gc, image[j])) != G1[i][j]:
                    ok = False
                    break
            if ok:
                image[i] = c
                if place(depth + 1):
                    return True
        image[i] = None
        return False

    if not place(0):
        return None
    return tuple(tuple(image[j][i] for j in range(n)) for i in range(n))


def are_isometric(L1, L2):
    """Return a witness M (M^T G2 M = G1) or None if the lattices are not isometric."""
    L1, L2 = as_lattice(L1), as_lattice(L2)
    if L1.rank != L2.rank or L1.det() != L2.det():
        return None
    # search between size-reduced bases, then carry the witness back
    V1, H1 = pairwise_reduce(L1.gram)
    V2, H2 = pairwise_reduce(L2.gram)
    R1, R2 = GramLattice(H1), GramLattice(H2)
    d1 = max(H1[i][i] for i in range(L1.rank))
    d2 = max(H2[i][i] for i in range(L2.rank))
    if d1 <= d2:
        N = _search(R1, R2)
    else:
        N = _search(R2, R1)
        if N is not None:
            N = invert_unimodular(N)
    if N is None:
        return None
    M = _matmul(_matmul(V2, N), invert_unimodular(V1))
    assert verify_isometry(L1, L2, M), "isometry search produced a bad witness"
    return M


def _matmul(A, B):
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in zip(*B)) for row in A)
