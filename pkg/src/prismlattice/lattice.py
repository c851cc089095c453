"""Positive-definite integer lattices given by Gram matrices.

Vectors are tuples of integer coordinates in the lattice basis.  Everything is
exact: the short-vector search runs on a rational LDL^T factorisation that is
rescaled once to integers, so the inner loop only touches Python ints.

Practical range: the enumerators are written for rank <= 16 and were exercised
up to rank 12; cost grows with the number of lattice points in the ball.
"""
from fractions import Fraction
from math import isqrt, lcm
import random


class NotPositiveDefinite(ValueError):
    pass


def bareiss_det(matrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


class GramLattice:
    """A lattice presented by a symmetric positive-definite integer Gram matrix."""

    __slots__ = ("gram", "rank", "labels", "_scaled", "_det", "_norm_counts")

    def __init__(self, gram, labels=None):
        gram = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(gram)
        if n == 0:
            raise ValueError("rank must be positive")
        if any(len(row) != n for row in gram):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
        self.gram = gram
        self.rank = n
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(n))
        if len(self.labels) != n:
            raise ValueError("one label per basis vector")
        self._det = None
        self._norm_counts = {}
        self._scaled = self._factor()

    def _factor(self):
        g, n = self.gram, self.rank
        L = [[Fraction(0)] * n for _ in range(n)]
        d = [Fraction(0)] * n
        for k in range(n):
            dk = Fraction(g[k][k]) - sum(L[k][j] ** 2 * d[j] for j in range(k))
            if dk <= 0:
                raise NotPositiveDefinite(f"leading minor {k + 1} is not positive")
            d[k] = dk
            L[k][k] = Fraction(1)
            for i in range(k + 1, n):
                L[i][k] = (g[i][k] - sum(L[i][j] * L[k][j] * d[j] for j in range(k))) / dk
        m = 1
        for i in range(n):
            for k in range(i):
                m = lcm(m, L[i][k].denominator)
        M = [[int(L[i][k] * m) for k in range(i)] for i in range(n)]
        dl = 1
        for dk in d:
            dl = lcm(dl, dk.denominator)
        w = [int(dk * dl) for dk in d]
        return m, M, w, dl

    def __repr__(self):
        return f"GramLattice({[list(r) for r in self.gram]})"

    def __eq__(self, other):
        return isinstance(other, GramLattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def pair(self, v, w) -> int:
        g = self.gram
        return sum(vi * sum(gij * wj for gij, wj in zip(g[i], w)) for i, vi in enumerate(v) if vi)

    def norm(self, v) -> int:
        return self.pair(v, v)

    def gram_times(self, v) -> tuple:
        return tuple(sum(gij * vj for gij, vj in zip(row, v)) for row in self.gram)

    def det(self) -> int:
        if self._det is None:
            self._det = bareiss_det(self.gram)
        return self._det

    def points_in_ball(self, center, cden, radius2, visit) -> bool:
        """Call ``visit(x, s)`` for every integer x with ``|x - center/cden|^2 <= radius2``.

        ``center`` is an integer vector and ``cden`` a positive integer.  The
        callback receives a live list (copy it to keep it) and the integer
        ``s = |x - center/cden|^2 * self.ball_scale(cden)``.  A truthy return
        stops the search and makes this method return True.
        """
        n = self.rank
        m, M, w, dl = self._scaled
        scale = m * cden
        radius2 = Fraction(radius2)
        if radius2 < 0:
            return False
        budget0 = (radius2.numerator * scale * scale * dl) // radius2.denominator
        C = tuple(center)
        acc = [-m * c for c in C]
        x = [0] * n

        def level(k, budget):
            K = acc[k]
            wk = w[k]
            Y = isqrt(budget // wk)
            lo = -((Y + K) // scale)
            hi = (Y - K) // scale
            if k == 0:
                for xk in range(lo, hi + 1):
                    x[0] = xk
                    T = scale * xk + K
                    if visit(x, budget0 - budget + wk * T * T):
                        return True
                return False
            Mk = M[k]
            ck, cdk = C[k], cden
            for xk in range(lo, hi + 1):
                T = scale * xk + K
                rest = budget - wk * T * T
                x[k] = xk
                u = cdk * xk - ck
                if u:
                    for j in range(k):
                        acc[j] += Mk[j] * u
                stop = level(k - 1, rest)
                if u:
                    for j in range(k):
                        acc[j] -= Mk[j] * u
                if stop:
                    return True
            return False

        return level(n - 1, budget0)

    def ball_scale(self, cden=1) -> int:
        m, _, _, dl = self._scaled
        return (m * cden) ** 2 * dl

    def norm_counts(self, bound: int) -> dict:
        """Number of lattice vectors of each norm 1..bound (cached)."""
        if bound not in self._norm_counts:
            counts = {k: 0 for k in range(1, bound + 1)}
            for _, nv in vectors_with_norms(self, bound):
                counts[nv] += 1
            self._norm_counts[bound] = counts
        return self._norm_counts[bound]


def as_lattice(L) -> GramLattice:
    return L if isinstance(L, GramLattice) else GramLattice(L)


def _check_dim(L, *vs):
    for v in vs:
        if len(v) != L.rank:
            raise ValueError(f"vector {tuple(v)} has length {len(v)}, lattice rank is {L.rank}")


def pairing(L, v, w) -> int:
    L = as_lattice(L)
    _check_dim(L, v, w)
    return L.pair(v, w)


def det(L) -> int:
    return as_lattice(L).det()


def canonical_sign(v) -> tuple:
    """Return +v or -v, whichever has a positive first nonzero coordinate."""
    for c in v:
        if c:
            return tuple(v) if c > 0 else tuple(-x for x in v)
    return tuple(v)


def vectors_with_norms(L, bound) -> list:
    """Pairs (v, |v|) for all nonzero v with |v| <= bound, sorted by v."""
    L = as_lattice(L)
    out = []
    if bound <= 0:
        return out
    zero = [0] * L.rank
    scale = L.ball_scale()

    def keep(x, s):
        if s:
            out.append((tuple(x), s // scale))

    L.points_in_ball(zero, 1, bound, keep)
    out.sort()
    return out


def vectors_of_norm_at_most(L, bound) -> list:
    """All nonzero v with |v| <= bound, both signs, sorted lexicographically."""
    return [v for v, _ in vectors_with_norms(L, bound)]


def vectors_of_norm(L, value) -> list:
    return [v for v, nv in vectors_with_norms(L, value) if nv == value]


def find_reduction(L, v):
    """Return (x, v - x) with x, v - x nonzero and <x, v - x> >= 0, or None."""
    L = as_lattice(L)
    _check_dim(L, v)
    v = tuple(v)
    nv = L.norm(v)
    if nv == 0:
        raise ValueError("the zero vector has no reducibility status")
    found = []

    def visit(x, _):
        if any(x) and tuple(x) != v:
            found.append(tuple(x))
            return True
        return False

    # <x, v - x> >= 0  <=>  |x - v/2|^2 <= |v|/4
    L.points_in_ball(v, 2, Fraction(nv, 4), visit)
    if not found:
        return None
    x = found[0]
    return x, tuple(a - b for a, b in zip(v, x))


def is_irreducible(L, v) -> bool:
    return find_reduction(L, v) is None


def find_break(L, v):
    """Return (x, y) with v = x + y, |x|, |y| >= 3 and <x, y> = -1, or None."""
    L = as_lattice(L)
    _check_dim(L, v)
    v = tuple(v)
    nv = L.norm(v)
    if nv == 0:
        raise ValueError("the zero vector has no breakability status")
    if nv < 4:
        return None
    gv = L.gram_times(v)
    found = []
    radius2 = Fraction(nv, 4) + 1
    # <x, v - x> = -1  <=>  |x - v/2|^2 = |v|/4 + 1, i.e. x lies on the sphere
    on_sphere = radius2 * L.ball_scale(2)

    def visit(x, s):
        if s != on_sphere:
            return False
        xv = sum(a * b for a, b in zip(x, gv))
        nx = xv + 1
        # |v - x| = nv - 2 xv + nx
        if nx >= 3 and nv - 2 * xv + nx >= 3:
            found.append(tuple(x))
            return True
        return False

    L.points_in_ball(v, 2, radius2, visit)
    if not found:
        return None
    x = found[0]
    return x, tuple(a - b for a, b in zip(v, x))


def is_breakable(L, v) -> bool:
    return find_break(L, v) is not None


def transform_gram(gram, U):
    """Gram matrix of the basis given by the columns of U: U^T G U."""
    n = len(gram)
    k = len(U[0])
    GU = [[sum(gram[i][l] * U[l][j] for l in range(n)) for j in range(k)] for i in range(n)]
    return tuple(tuple(sum(U[l][i] * GU[l][j] for l in range(n)) for j in range(k)) for i in range(k))


def random_unimodular(n, rng=None, steps=None, max_entry=6):
    """A random integer matrix of determinant +-1 built from elementary moves."""
    rng = rng or random.Random(0)
    steps = 3 * n if steps is None else steps
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        return [[rng.choice((1, -1))]]
    done = 0
    while done < steps:
        i, j = rng.sample(range(n), 2)
        c = rng.choice((1, -1))
        new = [U[r][i] + c * U[r][j] for r in range(n)]
        if max(abs(e) for e in new) > max_entry:
            done += 1
            continue
        for r in range(n):
            U[r][i] = new[r]
        done += 1
    perm = list(range(n))
    rng.shuffle(perm)
    U = [[U[r][perm[c]] for c in range(n)] for r in range(n)]
    for c in range(n):
        if rng.random() < 0.5:
            for r in range(n):
                U[r][c] = -U[r][c]
    return U


class IntegerSpan:
    """Integer row span of a set of vectors, kept in Hermite normal form."""

    def __init__(self, generators, dim):
        self.dim = dim
        self.rows = hermite_normal_form(generators, dim)

    @property
    def rank(self):
        return len(self.rows)

    def __contains__(self, vec):
        vec = list(vec)
        for row, c in self.rows:
            if vec[c] % row[c]:
                return False
            f = vec[c] // row[c]
            if f:
                for j in range(c, self.dim):
                    vec[j] -= f * row[j]
        return not any(vec)


def hermite_normal_form(vectors, dim):
    """Row-style HNF: list of (row, pivot_column) with strictly increasing pivots."""
    rows = [list(v) for v in vectors if any(v)]
    out = []
    for c in range(dim):
        live = [r for r in rows if r[c]]
        if not live:
            continue
        rest = [r for r in rows if not r[c]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                f = r[c] // piv[c]
                r = [a - f * b for a, b in zip(r, piv)]
                if r[c]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        piv = live[0]
        if piv[c] < 0:
            piv = [-a for a in piv]
        for prev, pc in out:
            f = prev[c] // piv[c]
            if f:
                for j in range(c, dim):
                    prev[j] -= f * piv[j]
        out.append((piv, c))
        rows = rest
    return out


def pairwise_reduce(gram):
    """Greedy pairwise size reduction of a basis; returns (U, U^T G U).

    Repeatedly replaces b_i by b_i - k b_j whenever that shortens b_i, then
    sorts by norm.  Much weaker than LLL but enough to undo the skew of a
    random basis change before short-vector enumeration.  Columns of U are the
    new basis vectors in old coordinates.
    """
    g = [list(r) for r in gram]
    n = len(g)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j or 2 * abs(g[i][j]) <= g[j][j]:
                    continue
                k = (2 * g[i][j] + g[j][j]) // (2 * g[j][j])  # nearest integer to g_ij / g_jj
                # b_i <- b_i - k b_j
                for r in range(n):
                    U[r][i] -= k * U[r][j]
                gii = g[i][i] - 2 * k * g[i][j] + k * k * g[j][j]
                for r in range(n):
                    if r != i:
                        g[i][r] -= k * g[j][r]
                        g[r][i] = g[i][r]
                g[i][i] = gii
                changed = True
    order = sorted(range(n), key=lambda c: (g[c][c], c))
    U = [[U[r][c] for c in order] for r in range(n)]
    return U, tuple(tuple(g[a][b] for b in order) for a in order)


_EXACT_INT64 = 2 ** 62


def irreducible_flags(L, vectors, pool) -> list:
    """Batch irreducibility test.

    ``pool`` must contain every lattice vector of norm <= max|v|/2 together
    with its norm, e.g. ``vectors_with_norms(L, B)``.  If v = x + y with
    <x, y> >= 0 then |x| + |y| <= |v|, so the smaller summand x has
    2|x| <= |v| and <x, v> >= |x|; conversely any such x != 0 splits v.
    The products run in int64 when a magnitude bound shows they are exact,
    otherwise in Python integers.
    """
    import numpy as np

    L = as_lattice(L)
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return []
    norms = [L.norm(v) for v in vectors]
    half = max(norms) // 2
    small = [(x, nx) for x, nx in pool if nx <= half]
    if not small:
        return [True] * len(vectors)
    X = [x for x, _ in small]
    nx = [n for _, n in small]
    G = L.gram
    n = L.rank
    biggest = max(abs(c) for v in X + vectors for c in v)
    gmax = max(abs(g) for row in G for g in row)
    dtype = np.int64 if n * n * gmax * biggest * biggest < _EXACT_INT64 else object
    XG = np.array(X, dtype=dtype) @ np.array(G, dtype=dtype)  # rows are G x
    nxa = np.array(nx, dtype=dtype)
    out = []
    for start in range(0, len(vectors), 512):
        chunk = np.array(vectors[start:start + 512], dtype=dtype)
        nv = np.array(norms[start:start + 512], dtype=dtype)
        P = chunk @ XG.T
        hits = (P >= nxa[None, :]) & (2 * nxa[None, :] <= nv[:, None])
        out.extend(not h for h in hits.any(axis=1))
    return out
