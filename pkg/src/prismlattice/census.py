"""Exhaustive search: which changemaker complements are C-type lattices C(p, q) with q > p."""
from dataclasses import dataclass, field
from math import gcd
import json

from .changemaker import complement_gram, enumerate_changemakers, norm, standard_basis, supp, to_ambient
from .ctype import build_ctype, candidate_ps, ctype_coefficients, graph_diagnostics, recover_pq
from .families import classify
from .isometry import are_isometric, invert_unimodular


@dataclass
class CensusRecord:
    sigma: tuple
    norm: int
    q: object = None
    is_ctype: bool = False
    p: object = None
    vertex_norms: object = None
    families: list = field(default_factory=list)
    witness: object = None

    def __post_init__(self):
        if self.is_ctype:
            assert self.p is not None and self.q is not None and self.vertex_norms is not None
            assert self.norm == 4 * self.q, "a C-type complement must have |sigma|^2 = 4q"

    def as_dict(self, with_witness=False):
        d = {
            "sigma": list(self.sigma),
            "norm": self.norm,
            "q": self.q,
            "is_ctype": self.is_ctype,
            "p": self.p,
            "vertex_norms": list(self.vertex_norms) if self.vertex_norms is not None else None,
            "families": self.families,
        }
        if with_witness and self.witness is not None:
            d["witness"] = [list(row) for row in self.witness]
        return d

    def to_json(self, with_witness=False):
        return json.dumps(self.as_dict(with_witness), sort_keys=True, separators=(",", ":"))

    def csv_row(self):
        fams = ";".join(f["family"] + "".join(f":{k}={v}" for k, v in sorted(f["params"].items()))
                        for f in self.families)
        vn = " ".join(map(str, self.vertex_norms)) if self.vertex_norms else ""
        return [" ".join(map(str, self.sigma)), self.norm, "" if self.q is None else self.q,
                int(self.is_ctype), "" if self.p is None else self.p, vn, fams]


CSV_COLUMNS = ("sigma", "norm", "q", "is_ctype", "p", "vertex_norms", "families")


def examine(sigma, exhaustive=False) -> CensusRecord:
    """Decide whether (sigma)^perp is isometric to some C(p, q) with q > p.

    The structural recovery proposes (p, q) and an explicit isometry confirms
    it.  With ``exhaustive`` every candidate p of the right rank is tried by
    isometry search as well, which does not rely on the recovery at all.
    """
    sigma = tuple(sigma)
    nrm = norm(sigma)
    rec = CensusRecord(sigma, nrm)
    if nrm % 4:
        return rec
    q = nrm // 4
    rec.q = q
    rank = len(sigma) - 1
    if rank < 2:
        return rec
    ps = candidate_ps(q, rank)
    if not ps:
        return rec
    G = complement_gram(sigma)
    found = None
    if exhaustive:
        for p in ps:
            C = build_ctype(p, q)
            M = are_isometric(G, C.lattice)
            if M is not None:
                found = (C, M)
                break
    else:
        cap = max(max(ctype_coefficients(p, q)) for p in ps)
        pq = recover_pq(G, norm_cap=cap)
        if pq is not None and pq[1] == q and pq[0] in ps:
            C = build_ctype(*pq)
            M = are_isometric(G, C.lattice)
            if M is not None:
                found = (C, M)
    if found is None:
        return rec
    C, M = found
    rec.is_ctype = True
    rec.p = C.p
    rec.vertex_norms = C.norms[1:]
    rec.witness = M
    if C.p % 2:
        rec.families = [r.as_dict() for r in classify(C.p, q)]
    return rec


def exhaustive_search(max_len=8, max_norm=400, exhaustive=False, min_len=1):
    """Yield a CensusRecord for every changemaker with sigma_0 = 1, length and norm in range."""
    for length in range(min_len, max_len + 1):
        for sigma in enumerate_changemakers(length, max_norm):
            yield examine(sigma, exhaustive=exhaustive)


def realized_pairs(records) -> set:
    return {(r.p, r.q) for r in records if r.is_ctype}


def predicted_pairs(max_len=8, max_norm=400) -> set:
    """(p, q) in some family, with 4q <= max_norm and rank(C(p, q)) + 1 <= max_len."""
    out = set()
    for q in range(3, max_norm // 4 + 1):
        for p in range(3, q, 2):
            if gcd(p, q) != 1:
                continue
            if len(ctype_coefficients(p, q)) + 2 > max_len:
                continue
            if classify(p, q):
                out.add((p, q))
    return out


# -- the modified basis S' of a C-type complement ------------------------------------------


@dataclass
class ModifiedBasis:
    """S' = (S minus v_{k3}) plus x_0, written in the vertex basis of C(p, q).

    ``vectors[i]`` is the vertex-coordinate image of the basis element with
    label ``labels[i]`` ("x0" or "v<j>").  ``x0_ambient`` is x_0 in Z^{n+2}
    and k3 = max supp x_0.
    """
    sigma: tuple
    ctype: object
    k3: int
    x0_ambient: tuple
    labels: tuple
    vectors: tuple


def modified_basis(sigma, p, q, witness=None) -> ModifiedBasis:
    sigma = tuple(sigma)
    C = build_ctype(p, q)
    G = complement_gram(sigma)
    M = witness if witness is not None else are_isometric(G, C.lattice)
    if M is None:
        raise ValueError(f"(sigma)^perp is not isometric to C({p}, {q})")
    r = len(M)
    S = standard_basis(sigma)
    # x_0 = e_0 in vertex coordinates; its standard-basis coefficients are M^{-1} e_0
    coeffs = [row[0] for row in invert_unimodular(M)]
    x0 = to_ambient(coeffs, S)
    k3 = max(supp(x0))
    assert k3 >= 1 and abs(coeffs[k3 - 1]) == 1, "x_0 does not replace v_{k3} in a basis"
    labels, vectors = [], []
    for j in range(1, r + 1):
        if j == k3:
            labels.append("x0")
            vectors.append(C.vertex(0))
        else:
            labels.append(f"v{j}")
            vectors.append(tuple(M[i][j - 1] for i in range(r)))
    return ModifiedBasis(sigma, C, k3, x0, tuple(labels), tuple(vectors))


def modified_basis_diagnostics(mb: ModifiedBasis) -> dict:
    """Claws in G(S') and heavy triples in G(S-bar'), the unbreakable part of S'."""
    diag = graph_diagnostics(mb.ctype, mb.vectors)
    return {
        "sigma": list(mb.sigma),
        "pq": [mb.ctype.p, mb.ctype.q],
        "k3": mb.k3,
        "claws": [[mb.labels[i] for i in c] for c in diag["claws"]],
        "heavy_triples": [[mb.labels[i] for i in t] for t in diag["heavy_triples"]],
    }
