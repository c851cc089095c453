from dataclasses import replace
from math import gcd

import pytest

from prismlattice.changemaker import norm
from prismlattice.families import (
    FAMILIES, ROWS, classify, family_q, family_tags, generate, get_row, integer_roots, is_member,
    solve_x0, verify_instance, verify_row, verify_tables,
)


def brute_classify(p, q):
    """Scan every family and every r with |r| <= 4q + 10."""
    out = set()
    for fam in ("1A", "1B", "Sporadic"):
        if is_member(fam, p, q):
            out.add((fam, None))
    for fam in ("2", "3A", "3B", "4", "5"):
        for r in range(-4 * q - 10, 4 * q + 11):
            if is_member(fam, p, q, r):
                out.add((fam, r))
    return out


def test_classify_examples():
    assert family_tags(5, 22) == {"1A", "5"}
    assert [(rec.family, rec.r) for rec in classify(5, 22)] == [("1A", None), ("5", 3)]
    assert family_tags(11, 19) == {"Sporadic"}
    assert family_tags(13, 34) == {"Sporadic"}
    assert classify(5, 7) == []
    assert family_tags(7, 9) == {"3B"}


def test_classify_domain():
    for p, q in [(4, 9), (1, 3), (9, 7), (3, 9)]:
        with pytest.raises(ValueError):
            classify(p, q)


@pytest.mark.parametrize("q", range(4, 301, 3))
def test_classify_matches_parameter_scan(q):
    for p in range(3, q, 2):
        if gcd(p, q) != 1:
            continue
        got = {(rec.family, rec.r) for rec in classify(p, q)}
        assert got == brute_classify(p, q), (p, q)


def test_members_satisfy_closed_forms():
    for q in range(4, 200):
        for p in range(3, q, 2):
            if gcd(p, q) != 1:
                continue
            for rec in classify(p, q):
                if rec.family != "Sporadic":
                    assert family_q(rec.family, p, rec.r) == q


def test_integer_roots():
    assert integer_roots(1, -5, 6) == [2, 3]
    assert integer_roots(2, 0, -8) == [-2, 2]
    assert integer_roots(0, 3, -6) == [2]
    assert integer_roots(0, 3, -5) == []
    assert integer_roots(1, 0, 1) == []
    with pytest.raises(ValueError):
        integer_roots(0, 0, 0)


def test_row_anchors():
    sigma, basis, norms, pq = generate(get_row("r01"), 2)
    assert sigma == (1, 1, 2, 2, 3, 5) and tuple(norms) == (3, 2, 3, 2) and pq == (3, 11)
    found = {}
    for row in ROWS:
        for s, t in row.ranges(5, 5):
            sigma, _, norms, pq = generate(row, s, t)
            found.setdefault(tuple(sigma), set()).add((tuple(norms), pq))
    assert ((6, 2), (7, 9)) in found[(1, 1, 3, 5)]
    assert ((4, 2, 3, 2), (11, 19)) in found[(1, 2, 2, 3, 3, 7)]
    assert any(pq == (13, 34) for _, pq in found[(1, 2, 3, 4, 5, 9)])
    assert norm((1, 1, 3, 5)) == 36


@pytest.mark.parametrize("row", ROWS, ids=lambda r: r.row_id)
def test_rows_small_parameters(row):
    for s, t in row.ranges(3, 3):
        rep = verify_row(row, s, t)
        assert rep.ok, rep.as_dict()
        assert norm(rep.sigma) == 4 * rep.q


def test_mutated_row_fails():
    row = get_row("r01")
    bad = replace(row, norms=lambda s, t: (4,) + tuple(row.norms(s, t))[1:])
    rep = verify_row(bad, 2)
    assert not rep.ok and rep.failed == "b"
    bad = replace(row, pq=lambda s, t: (5, 11))
    rep = verify_row(bad, 2)
    assert not rep.ok and rep.failed == "c"
    bad = replace(row, family="4")
    rep = verify_row(bad, 2)
    assert not rep.ok and rep.failed == "e"


def test_verify_instance_rejects_non_changemaker():
    rep = verify_instance("x", "1A", (1, 3), [{1: 1}], (2,), 3, 11)
    assert not rep.ok and rep.failed == "a"


def test_solve_x0_example():
    # sigma = (1, 1, 3, 5) with x_1 = -v_2, x_2 = v_1
    xs = [(-2, -1, 1, 0), (1, -1, 0, 0)]
    assert solve_x0((1, 1, 3, 5), xs) == [(1, 1, 1, -1)]


def test_verify_tables_all_pass():
    reports = verify_tables(2, 2)
    assert reports and all(r.ok for r in reports)
    assert {r.row_id for r in reports} == {row.row_id for row in ROWS}
    assert set(FAMILIES) >= {row.family for row in ROWS}
