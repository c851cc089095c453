"""Changemaker vectors and the standard basis of their orthogonal complements.

A vector here is a tuple in Z^{n+2} written on the orthonormal basis e_0..e_{n+1}.
"""
from dataclasses import dataclass

from .lattice import GramLattice, is_breakable, is_irreducible

TIGHT = "tight"
JUST_RIGHT = "just_right"
GAPPY = "gappy"


def _check_sorted(sigma):
    if any(x < 0 for x in sigma):
        raise ValueError(f"changemaker entries must be nonnegative: {sigma}")
    if any(a > b for a, b in zip(sigma, sigma[1:])):
        raise ValueError(f"changemaker entries must be nondecreasing: {sigma}")


def is_changemaker(sigma) -> bool:
    """Every 0 <= k <= sum(sigma) is a subset sum (checked by the prefix criterion)."""
    sigma = tuple(sigma)
    _check_sorted(sigma)
    total = 0
    for x in sigma:
        if x > total + 1:
            return False
        total += x
    return True


def norm(sigma) -> int:
    return sum(x * x for x in sigma)


def enumerate_changemakers(length, norm_bound):
    """Yield every changemaker with sigma_0 = 1, the given length and |sigma|^2 <= norm_bound.

    Lexicographic order.  The prefix criterion bounds each next entry by one
    more than the running sum, so nothing is generated and then discarded.
    """
    if length < 1:
        raise ValueError("length must be at least 1")
    if norm_bound < 1:
        return
    prefix = [1]

    def extend(total, nrm):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        remaining = length - len(prefix)
        for x in range(prefix[-1], total + 2):
            # later entries are >= x, so they contribute at least remaining * x^2
            if nrm + remaining * x * x > norm_bound:
                break
            prefix.append(x)
            yield from extend(total + x, nrm + x * x)
            prefix.pop()

    yield from extend(1, 1)


def supp(v) -> set:
    return {i for i, c in enumerate(v) if c}


def supp_plus(v) -> set:
    return {i for i, c in enumerate(v) if c > 0}


@dataclass(frozen=True)
class StandardBasis:
    sigma: tuple
    vectors: tuple  # v_1 .. v_{n+1}; vectors[j-1] is v_j
    kinds: tuple
    gappy_indices: tuple

    def v(self, j) -> tuple:
        return self.vectors[j - 1]

    def kind(self, j) -> str:
        return self.kinds[j - 1]


def _greedy_subset(sigma, j, target):
    # maximise sum 2^i over A in {0..j-1} with sum sigma_A = target
    prefix = [0]
    for x in sigma[:j]:
        prefix.append(prefix[-1] + x)
    A = []
    rem = target
    for i in range(j - 1, -1, -1):
        if sigma[i] <= rem and rem - sigma[i] <= prefix[i]:
            A.append(i)
            rem -= sigma[i]
    if rem:
        raise ValueError(f"sigma_{j} = {target} is not a subset sum of earlier entries")
    return sorted(A)


def standard_basis(sigma) -> StandardBasis:
    sigma = tuple(sigma)
    if not sigma or sigma[0] != 1:
        raise ValueError(f"standard basis needs sigma_0 = 1: {sigma}")
    if not is_changemaker(sigma):
        raise ValueError(f"{sigma} is not a changemaker vector")
    size = len(sigma)
    vectors, kinds, gaps = [], [], []
    running = sigma[0]
    for j in range(1, size):
        v = [0] * size
        if sigma[j] == 1 + running:
            v[0] = 2
            for i in range(1, j):
                v[i] = 1
            kind, gap = TIGHT, ()
        else:
            A = _greedy_subset(sigma, j, sigma[j])
            for i in A:
                v[i] = 1
            members = set(A)
            gap = tuple(i for i in A if i < j - 1 and i + 1 not in members)
            kind = GAPPY if gap else JUST_RIGHT
        v[j] = -1
        vectors.append(tuple(v))
        kinds.append(kind)
        gaps.append(gap)
        running += sigma[j]
    return StandardBasis(sigma, tuple(vectors), tuple(kinds), tuple(gaps))


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def complement_gram(sigma) -> GramLattice:
    """Gram matrix of (sigma)^perp in its standard basis."""
    S = standard_basis(sigma)
    vs = S.vectors
    gram = [[dot(a, b) for b in vs] for a in vs]
    return GramLattice(gram, [f"v{j}" for j in range(1, len(vs) + 1)])


def to_ambient(coeffs, basis: StandardBasis) -> tuple:
    """Sum_j coeffs[j-1] * v_j as a vector of Z^{n+2}."""
    size = len(basis.sigma)
    out = [0] * size
    for c, v in zip(coeffs, basis.vectors):
        if c:
            for i in range(size):
                out[i] += c * v[i]
    return tuple(out)


def standard_basis_violations(sigma) -> dict:
    """Check the standard basis facts every changemaker lattice satisfies.

    Keys: ``gappy_after_root`` (|v_{k+1}| = 2 yet k is a gappy index of some v_j),
    ``reducible`` (v_j reducible in (sigma)^perp), ``breakable_not_tight`` and
    ``missing_predecessor`` (j - 1 not in supp v_j).  Each maps to a list of
    offending indices j (pairs (k, j) for the first); all lists are empty on success.
    """
    S = standard_basis(sigma)
    L = complement_gram(sigma)
    r = len(S.vectors)
    out = {"gappy_after_root": [], "reducible": [], "breakable_not_tight": [],
           "missing_predecessor": []}
    root_next = {k for k in range(r) if dot(S.v(k + 1), S.v(k + 1)) == 2}
    for j in range(1, r + 1):
        for k in S.gappy_indices[j - 1]:
            if k in root_next:
                out["gappy_after_root"].append((k, j))
        unit = tuple(int(i == j - 1) for i in range(r))
        if not is_irreducible(L, unit):
            out["reducible"].append(j)
        if S.kind(j) != TIGHT and is_breakable(L, unit):
            out["breakable_not_tight"].append(j)
        if j - 1 not in supp(S.v(j)):
            out["missing_predecessor"].append(j)
    return out
