import json

import pytest

from prismlattice.census import (
    CSV_COLUMNS, CensusRecord, candidate_ps, examine, exhaustive_search, modified_basis,
    modified_basis_diagnostics, predicted_pairs, realized_pairs,
)
from prismlattice.changemaker import complement_gram, standard_basis, to_ambient
from prismlattice.isometry import invert_unimodular


def test_examples():
    rec = examine((1, 1, 3, 5))
    assert rec.is_ctype and (rec.p, rec.q) == (7, 9) and rec.vertex_norms == (6, 2)
    assert [f["family"] for f in rec.families] == ["3B"]
    for sigma in [(1, 1, 1, 2, 3, 6, 6), (1, 1, 2, 2, 2, 5, 7)]:
        rec = examine(sigma)
        assert (rec.p, rec.q) == (5, 22)
    rec = examine((1, 2, 3, 4, 5, 9))
    assert (rec.p, rec.q) == (13, 34)
    assert not examine((1, 1, 1, 1)).is_ctype
    assert examine((1, 1, 1)).q is None


def test_record_invariant():
    with pytest.raises(AssertionError):
        CensusRecord((1, 1), 2, q=None, is_ctype=True, p=3, vertex_norms=(2,))


def test_serialisation():
    rec = examine((1, 1, 3, 5))
    d = json.loads(rec.to_json())
    assert d == {"sigma": [1, 1, 3, 5], "norm": 36, "q": 9, "is_ctype": True, "p": 7,
                 "vertex_norms": [6, 2], "families": [{"family": "3B", "params": {"r": 1}}]}
    assert "witness" in json.loads(rec.to_json(with_witness=True))
    assert len(rec.csv_row()) == len(CSV_COLUMNS)


def test_candidate_ps():
    assert candidate_ps(9, 3) == [4, 7]
    assert candidate_ps(11, 5) == [3, 4]  # 19/8 = [3,2,3,2], 18/7 = [3,3,2,2]


def test_exhaustive_mode_agrees():
    fast = [(r.sigma, r.p) for r in exhaustive_search(6, 200) if r.is_ctype]
    slow = [(r.sigma, r.p) for r in exhaustive_search(6, 200, exhaustive=True) if r.is_ctype]
    assert fast == slow and fast


def test_small_census_matches_prediction():
    recs = list(exhaustive_search(6, 160))
    real = {pq for pq in realized_pairs(recs) if pq[1] > pq[0]}
    assert real == predicted_pairs(6, 160)


def test_modified_basis_1135():
    rec = examine((1, 1, 3, 5))
    mb = modified_basis(rec.sigma, rec.p, rec.q, rec.witness)
    assert mb.x0_ambient in {(1, 1, 1, -1), (-1, -1, -1, 1)}
    assert mb.k3 == 3 and mb.labels == ("v1", "v2", "x0")
    d = modified_basis_diagnostics(mb)
    assert d["claws"] == [] and d["heavy_triples"] == []
    # S' is a basis: its Gram has the same determinant
    S = standard_basis(rec.sigma)
    Minv = invert_unimodular(rec.witness)
    for label, vec in zip(mb.labels, mb.vectors):
        amb = to_ambient([sum(Minv[i][k] * vec[k] for k in range(len(vec))) for i in range(len(vec))], S)
        if label == "x0":
            assert amb == mb.x0_ambient
        else:
            assert amb == S.v(int(label[1:]))


def test_modified_basis_rejects_wrong_pair():
    with pytest.raises(ValueError):
        modified_basis((1, 1, 3, 5), 4, 9)
    assert complement_gram((1, 1, 3, 5)).det() == 36
