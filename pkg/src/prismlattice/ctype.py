"""C-type lattices C(p, q), their intervals, and recovery of (p, q) from a Gram matrix.

C(p, q) has vertex basis x_0, ..., x_n with norms (4, a_1, ..., a_n), where
``(2q - p)/(q - p) = [a_1, ..., a_n]^-``; x_0.x_1 = -2, neighbouring x_i pair
to -1 and everything else is orthogonal.  Vectors here are written in
vertex-basis coordinates unless a function says otherwise.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from .contfrac import neg_eval, neg_expand
from .lattice import (
    GramLattice,
    IntegerSpan,
    as_lattice,
    canonical_sign,
    is_breakable,
    irreducible_flags,
    is_irreducible,
    pairwise_reduce,
    vectors_of_norm_at_most,
    vectors_with_norms,
)


def ctype_gram(norms) -> tuple:
    """Gram matrix of the chain with the given vertex norms (norms[0] is x_0's)."""
    n1 = len(norms)
    g = [[0] * n1 for _ in range(n1)]
    for i, a in enumerate(norms):
        g[i][i] = a
    if n1 > 1:
        g[0][1] = g[1][0] = -2
    for i in range(1, n1 - 1):
        g[i][i + 1] = g[i + 1][i] = -1
    return tuple(tuple(r) for r in g)


def check_pq(p, q):
    if q <= p or p <= 1:
        raise ValueError(f"need q > p > 1, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")


def ctype_coefficients(p, q) -> tuple:
    check_pq(p, q)
    return neg_expand(Fraction(2 * q - p, q - p))


def candidate_ps(q, rank) -> list:
    """p with 1 < p < q, gcd(p, q) = 1 and C(p, q) of the given rank."""
    return [p for p in range(2, q) if gcd(p, q) == 1 and len(ctype_coefficients(p, q)) + 1 == rank]


def pq_from_coefficients(coeffs):
    """Invert (a_1..a_n) -> (p, q); None unless this is a valid q > p > 1 sequence."""
    try:
        x = neg_eval(coeffs)
    except ZeroDivisionError:
        return None
    N, D = x.numerator, x.denominator
    q, p = N - D, N - 2 * D
    if D <= 0 or p <= 1 or q <= p or gcd(p, q) != 1:
        return None
    if neg_expand(x) != tuple(coeffs):
        return None
    return p, q


@dataclass(frozen=True)
class CTypeLattice:
    p: int
    q: int
    norms: tuple
    lattice: GramLattice = field(compare=False, repr=False)

    @property
    def n(self):
        return len(self.norms) - 1

    @property
    def gram(self):
        return self.lattice.gram

    def high_weight(self, i) -> bool:
        return i > 0 and self.norms[i] > 2

    def vertex(self, i) -> tuple:
        return tuple(int(j == i) for j in range(self.n + 1))


def build_ctype(p, q) -> CTypeLattice:
    a = ctype_coefficients(p, q)
    norms = (4,) + a
    labels = [f"x{i}" for i in range(len(norms))]
    return CTypeLattice(p, q, norms, GramLattice(ctype_gram(norms), labels))


@dataclass(frozen=True, order=True)
class Interval:
    left: int
    right: int
    sign: int = 1

    def __post_init__(self):
        if not 0 <= self.left <= self.right:
            raise ValueError(f"bad interval [{self.left}, {self.right}]")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def indices(self):
        return range(self.left, self.right + 1)


def _check_interval(L: CTypeLattice, I: Interval):
    if I.right > L.n:
        raise IndexError(f"interval {I} runs past x_{L.n}")


def interval_vector(L: CTypeLattice, I: Interval) -> tuple:
    _check_interval(L, I)
    return tuple(I.sign if I.left <= i <= I.right else 0 for i in range(L.n + 1))


def interval_norm(L: CTypeLattice, I: Interval) -> int:
    _check_interval(L, I)
    if I.left == I.right == 0:
        value = 4
    else:
        value = 2 + sum(L.norms[i] - 2 for i in I.indices() if i > 0)
    assert value == L.lattice.norm(interval_vector(L, I)), "interval norm formula disagrees with Gram"
    return value


def all_intervals(L: CTypeLattice):
    return [Interval(a, b) for a in range(L.n + 1) for b in range(a, L.n + 1)]


def as_interval(v):
    """Pattern-match v as +-(x_a + ... + x_b); None if it is not of that shape."""
    support = [i for i, c in enumerate(v) if c]
    if not support:
        return None
    a, b = support[0], support[-1]
    s = v[a]
    if s not in (1, -1) or b - a + 1 != len(support) or any(v[i] != s for i in support):
        return None
    return Interval(a, b, s)


def _edges(L: CTypeLattice):
    # the graph C: x_0 -- x_1 doubled, then a simple path
    es = []
    if L.n >= 1:
        es += [(0, 1), (0, 1)]
    es += [(i, i + 1) for i in range(1, L.n)]
    return es


def delta(L: CTypeLattice, I: Interval, J: Interval) -> int:
    """Number of dangling edges between the supports of I and J."""
    _check_interval(L, I)
    _check_interval(L, J)
    si, sj = set(I.indices()), set(J.indices())
    both = si & sj
    count = 0
    for u, w in _edges(L):
        spans = (u in si and w in sj) or (w in si and u in sj)
        if spans and not (u in both and w in both):
            count += 1
    meet = 0
    if both:
        lo, hi = min(both), max(both)
        meet = interval_norm(L, Interval(lo, hi))
    vi = interval_vector(L, Interval(I.left, I.right))
    vj = interval_vector(L, Interval(J.left, J.right))
    assert L.lattice.pair(vi, vj) == meet - count, "dangling-edge identity violated"
    return count


def unbreakable_interval(L: CTypeLattice, I: Interval) -> bool:
    """Interval criterion: at most one high-weight vertex.

    The lone vertex x_0 is the exception: when a_1 = 3 it splits as
    (x_0 + x_1) + (-x_1), two norm-3 vectors pairing to -1.
    """
    if I.left == I.right == 0:
        return L.n == 0 or L.norms[1] != 3
    return sum(1 for i in I.indices() if L.high_weight(i)) <= 1


def irreducible_elements(L: CTypeLattice, norm_bound) -> list:
    """Brute-force irreducible vectors of norm <= norm_bound, checked against +-intervals."""
    lat = L.lattice
    found = [v for v in vectors_of_norm_at_most(lat, norm_bound) if is_irreducible(lat, v)]
    expected = set()
    for I in all_intervals(L):
        if interval_norm(L, I) <= norm_bound:
            v = interval_vector(L, I)
            expected.add(v)
            expected.add(tuple(-c for c in v))
    assert set(found) == expected, "irreducible vectors are not exactly the signed intervals"
    return found


# -- graphs on sets of irreducible vectors -------------------------------------------------


def _abut(I: Interval, J: Interval) -> bool:
    consecutive = I.right + 1 == J.left or J.right + 1 == I.left
    common_end = I.left == J.left or I.right == J.right
    return consecutive or common_end


def _connected_avoiding(adj, a, b, banned) -> bool:
    seen = {a}
    stack = [a]
    while stack:
        u = stack.pop()
        if u == b:
            return True
        for w in adj[u]:
            if w != banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def find_claws(adj) -> list:
    """Quadruples (v, w1, w2, w3), w1 < w2 < w3, with v adjacent to each w_i and no w_i adjacent."""
    claws = []
    for v in sorted(adj):
        for w1, w2, w3 in combinations(sorted(adj[v]), 3):
            if w2 not in adj[w1] and w3 not in adj[w1] and w3 not in adj[w2]:
                claws.append((v, w1, w2, w3))
    return claws


def graph_diagnostics(L: CTypeLattice, T) -> dict:
    """Pairing graph, intersection graph, claws and heavy triples of a vector set T.

    Vertices are indices into T.  Heavy triples are searched among the
    unbreakable members of T, with the intersection graph restricted to them.
    """
    T = [tuple(v) for v in T]
    lat = L.lattice
    intervals = []
    for v in T:
        I = as_interval(v)
        if I is None or I.right > L.n:
            raise ValueError(f"{v} is not an interval, hence not irreducible")
        intervals.append(I)
    k = len(T)
    pairing_edges = [(i, j) for i, j in combinations(range(k), 2) if lat.pair(T[i], T[j]) != 0]
    inter_edges = [(i, j) for i, j in combinations(range(k), 2) if _abut(intervals[i], intervals[j])]
    adj = {i: set() for i in range(k)}
    for i, j in inter_edges:
        adj[i].add(j)
        adj[j].add(i)
    claws = find_claws(adj)
    unbreak = [i for i in range(k) if unbreakable_interval(L, intervals[i])]
    sub = {i: adj[i] & set(unbreak) for i in unbreak}
    x0 = L.vertex(0)
    minus_x0 = tuple(-c for c in x0)
    heavy = [i for i in unbreak if lat.norm(T[i]) >= 3 and T[i] not in (x0, minus_x0)]
    triples = []
    for a, b, c in combinations(heavy, 3):
        if (_connected_avoiding(sub, a, b, c) and _connected_avoiding(sub, a, c, b)
                and _connected_avoiding(sub, b, c, a)):
            triples.append((a, b, c))
    return {
        "intervals": intervals,
        "pairing_graph": pairing_edges,
        "intersection_graph": inter_edges,
        "claws": claws,
        "heavy_triples": triples,
    }


# -- recovering (p, q) ----------------------------------------------------------------------


def _is_c23(lat: GramLattice) -> bool:
    from .isometry import are_isometric

    return lat.rank == 2 and lat.det() == 12 and are_isometric(lat, ctype_gram((4, 4))) is not None


def recover_pq(L, norm_cap=None):
    """Read (p, q) off a lattice isometric to some C(p, q); None when the structure fails.

    Follows the uniqueness argument for C-type lattices: locate x_0, build the
    sublattice R spanned by x_0 and the roots, group the unbreakable
    irreducibles of norm >= 3 modulo R, and walk the resulting path from the end
    carrying x_0.  ``norm_cap`` bounds the largest vertex norm searched for; the
    default is the largest a_i over all C(p, q) sharing the rank and
    determinant of L, which suffices whenever L is C-type.  A positive
    answer on arbitrary input is a candidate and should be confirmed by an
    isometry check (see :func:`is_ctype`).
    """
    lat = as_lattice(L)
    if lat.rank < 2 or lat.det() % 4:
        return None
    if norm_cap is None:
        ps = candidate_ps(lat.det() // 4, lat.rank)
        if not ps:
            return None
        norm_cap = max(max(ctype_coefficients(p, lat.det() // 4)) for p in ps)
    lat = GramLattice(pairwise_reduce(lat.gram)[1])
    cache = {}

    def short(bound):
        if bound not in cache:
            cache[bound] = vectors_with_norms(lat, bound)
        return cache[bound]

    # x_0 is irreducible of norm 4 with even pairings against everything.  It is
    # breakable when a_1 = 3, so breakability cannot be used to single it out;
    # chains (3, 2, ..., 2, 3) and C(2, 3) carry further such vectors.
    cands = [v for v, nv in short(4)
             if nv == 4 and canonical_sign(v) == v
             and not any(c % 2 for c in lat.gram_times(v))]
    cands = [v for v, ok in zip(cands, irreducible_flags(lat, cands, short(4))) if ok]
    roots = [v for v, nv in short(4) if nv == 2 and canonical_sign(v) == v]
    found = set()
    for x0 in cands:
        pq = _recover_from_x0(lat, x0, roots, short, norm_cap)
        if pq is not None:
            found.add(pq)
    if _is_c23(lat):
        found.add((2, 3))
    if len(found) <= 1:
        return found.pop() if found else None
    from .isometry import are_isometric

    good = [pq for pq in sorted(found) if are_isometric(lat, build_ctype(*pq).lattice) is not None]
    return good[0] if good else None


def _recover_from_x0(lat, x0, roots, short, norm_cap):
    r = lat.rank
    D = lat.det()
    cap = D // 2 - 1 if norm_cap is None else norm_cap
    if any(lat.pair(v, x0) for v in roots):
        return None
    R = IntegerSpan([x0] + roots, r)
    # indecomposable components of the root system
    comp_of = {}
    comps = []
    for v in roots:
        if v in comp_of:
            continue
        comp = [v]
        comp_of[v] = len(comps)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in roots:
                if w not in comp_of and lat.pair(u, w):
                    comp_of[w] = len(comps)
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    comp_ranks = [IntegerSpan(c, r).rank for c in comps]
    if R.rank != 1 + sum(comp_ranks):
        return None
    h = r - R.rank
    if h < 1:
        return None

    classes = []  # lists of canonical representatives, one list per high-weight vertex
    done_upto = 2
    bound = 4
    while len(classes) < h:
        bound = min(bound, cap)
        level = {}
        for v, nv in short(bound):
            if nv > done_upto and canonical_sign(v) == v and v != x0:
                level.setdefault(nv, []).append(v)
        for nv in sorted(level):
            flags = irreducible_flags(lat, level[nv], short(bound))
            for v, irreducible in zip(level[nv], flags):
                if not irreducible or is_breakable(lat, v):
                    continue
                for cls in classes:
                    u = cls[0]
                    if (tuple(a - b for a, b in zip(v, u)) in R
                            or tuple(a + b for a, b in zip(v, u)) in R):
                        cls.append(v)
                        break
                else:
                    classes.append([v])
            if len(classes) >= h:
                break
        if len(classes) > h:
            return None
        if len(classes) < h:
            if bound >= cap:
                return None
            done_upto = bound
            bound *= 2

    adj = {("w0",): set()}
    for i in range(len(comps)):
        adj[("w", i)] = set()
    for j in range(len(classes)):
        adj[("v", j)] = set()

    def link(a, b):
        adj[a].add(b)
        adj[b].add(a)

    for j, cls in enumerate(classes):
        if any(abs(lat.pair(v, x0)) == 2 for v in cls):
            link(("v", j), ("w0",))
        for i, comp in enumerate(comps):
            if any(abs(lat.pair(v, w)) == 1 for v in cls for w in comp):
                link(("v", j), ("w", i))
    # two high-weight vertices with no run of 2's between them pair nonzero in every representative
    for j1, j2 in combinations(range(len(classes)), 2):
        if all(lat.pair(a, b) != 0 for a in classes[j1] for b in classes[j2]):
            link(("v", j1), ("v", j2))

    n_edges = sum(len(s) for s in adj.values()) // 2
    if n_edges != len(adj) - 1 or any(len(s) > 2 for s in adj.values()):
        return None
    if len(adj[("w0",)]) != 1:
        return None
    seq = []
    prev, cur = None, ("w0",)
    seen = {cur}
    while True:
        nxt = [u for u in adj[cur] if u != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        if cur in seen:
            return None
        seen.add(cur)
        if cur[0] == "w":
            seq.extend([2] * comp_ranks[cur[1]])
        else:
            seq.append(lat.norm(classes[cur[1]][0]))
    if len(seen) != len(adj) or len(seq) != r - 1 or seq[0] < 3:
        return None
    pq = pq_from_coefficients(seq)
    if pq is None or 4 * pq[1] != D:
        return None
    return pq


def is_ctype(L, norm_cap=None):
    """recover_pq confirmed by an explicit isometry; returns ((p, q), witness) or None."""
    from .isometry import are_isometric

    lat = as_lattice(L)
    pq = recover_pq(lat, norm_cap)
    if pq is None:
        return None
    witness = are_isometric(lat, build_ctype(*pq).lattice)
    if witness is None:
        return None
    return pq, witness
