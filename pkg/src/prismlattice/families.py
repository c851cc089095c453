"""The realizable families of P(p, q) with q > p, and the changemaker rows behind them.

``classify`` decides family membership exactly: for every family with a
parameter r the closed form is solved for r over the integers (a linear or
quadratic equation), and the congruence and exclusion conditions are then
checked on each integer root.  ``ROWS`` lists the parametrised changemaker
vectors together with their claimed vertex bases, norms and (p, q);
``verify_row`` certifies one instance of a row end to end.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .changemaker import dot, is_changemaker, norm, standard_basis, to_ambient
from .contfrac import neg_eval
from .ctype import ctype_gram

FAMILIES = ("1A", "1B", "2", "3A", "3B", "4", "5", "Sporadic")
SPORADIC = ((11, 19), (13, 34))


@dataclass(frozen=True, order=True)
class FamilyRecord:
    family: str
    params: tuple  # sorted (name, value) pairs; empty for 1A, 1B and the sporadic pair
    p: int
    q: int

    @property
    def r(self):
        return dict(self.params).get("r")

    def as_dict(self):
        return {"family": self.family, "params": dict(self.params)}


def check_domain(p, q):
    if p <= 1 or p % 2 == 0:
        raise ValueError(f"p must be odd and > 1, got {p}")
    if q <= p:
        raise ValueError(f"need q > p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")


def family_q(family, p, r=None) -> Fraction:
    """The closed form q(p[, r]) of a family, as an exact rational."""
    p = Fraction(p)
    if family == "1A":
        return (p * p + 3 * p + 4) / 2
    if family == "1B":
        return (p * p + 3 * p + 4) / 22
    if family == "2":
        return (r * r * p - 1) / abs(4 * r + 2)
    if family in ("3A", "3B"):
        return (p - 1) * (p - 4) / (2 * r)
    if family == "4":
        return ((2 * r + 1) ** 2 * p - 1) / (2 * r * r)
    if family == "5":
        return (r * r * p - 1) / (r * r - 2 * r - 1)
    raise ValueError(f"family {family!r} has no closed form")


def is_member(family, p, q, r=None) -> bool:
    """Closed form plus the congruence and exclusion conditions, for one parameter value."""
    if family == "Sporadic":
        return (p, q) in SPORADIC
    if p <= 1 or p % 2 == 0:
        return False
    if family == "1A":
        return 2 * q == p * p + 3 * p + 4
    if family == "1B":
        return 22 * q == p * p + 3 * p + 4 and p % 22 in (3, 5) and p not in (3, 5)
    if r is None or r % 2 == 0:
        return False
    if family == "2":
        d = abs(4 * r + 2)
        return (r % 4 == 3 and r not in (-5, -1, 3)
                and q * d == r * r * p - 1 and (p + 2 * r - 3) % d == 0)
    if family == "3A":
        return (r >= 5 and 2 * r * q == (p - 1) * (p - 4)
                and (p - 1) % (2 * r) == 0 and p != 2 * r + 1)
    if family == "3B":
        return (r >= 1 and 2 * r * q == (p - 1) * (p - 4)
                and (p - r - 4) % (2 * r) == 0 and p > r + 4)
    if family == "4":
        return (r not in (1, -1) and 2 * r * r * q == (2 * r + 1) ** 2 * p - 1
                and (p + 4 * r - 1) % (2 * r * r) == 0)
    if family == "5":
        d = r * r - 2 * r - 1
        return r > 1 and q * d == r * r * p - 1 and (p + 2 * r - 5) % d == 0
    raise ValueError(f"unknown family {family!r}")


def integer_roots(a, b, c) -> list:
    """Integer solutions of a x^2 + b x + c = 0 (finitely many unless a = b = c = 0)."""
    if a == 0:
        if b == 0:
            if c == 0:
                raise ValueError("every integer is a root")
            return []
        return [-c // b] if c % b == 0 else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    s = isqrt(disc)
    if s * s != disc:
        return []
    out = set()
    for num in (-b + s, -b - s):
        if num % (2 * a) == 0:
            out.add(num // (2 * a))
    return sorted(out)


def candidate_r(family, p, q) -> list:
    """Every integer r for which the family's closed form can produce (p, q)."""
    if family in ("3A", "3B"):
        num = (p - 1) * (p - 4)
        return [num // (2 * q)] if num % (2 * q) == 0 else []
    if family == "2":
        # 4r + 2 > 0:  p r^2 - 4q r - (2q + 1) = 0;  4r + 2 < 0:  p r^2 + 4q r + (2q - 1) = 0
        pos = [r for r in integer_roots(p, -4 * q, -(2 * q + 1)) if r >= 0]
        neg = [r for r in integer_roots(p, 4 * q, 2 * q - 1) if r < 0]
        return pos + neg
    if family == "4":
        return integer_roots(2 * q - 4 * p, -4 * p, -(p - 1))
    if family == "5":
        return integer_roots(q - p, -2 * q, -(q - 1))
    raise ValueError(f"family {family!r} has no parameter r")


def classify(p, q) -> list:
    """All (family, parameters) witnesses that P(p, q) is in one of the families."""
    check_domain(p, q)
    out = set()
    for fam in ("1A", "1B", "Sporadic"):
        if is_member(fam, p, q):
            out.add(FamilyRecord(fam, (), p, q))
    for fam in ("2", "3A", "3B", "4", "5"):
        for r in candidate_r(fam, p, q):
            if is_member(fam, p, q, r):
                out.add(FamilyRecord(fam, (("r", r),), p, q))
    return sorted(out, key=lambda rec: (FAMILIES.index(rec.family), rec.params))


def family_tags(p, q) -> set:
    return {rec.family for rec in classify(p, q)}


# -- changemaker rows ---------------------------------------------------------------------
#
# Vertex bases are lists of {j: coefficient} over the standard basis v_1..v_{n+1};
# x_0 is not part of the data and is solved for by ``verify_row``.


def _v(j, c=1):
    return {j: c}


def _combo(*parts):
    out = {}
    for part in parts:
        for j, c in part.items():
            out[j] = out.get(j, 0) + c
    return {j: c for j, c in out.items() if c}


def _block(a, b, c=1):
    """v_[a,b] = v_a + ... + v_b."""
    return {j: c for j in range(a, b + 1)}


def _up(a, b, c=-1):
    """c v_a, c v_{a+1}, ..., c v_b (empty when b < a)."""
    return [_v(j, c) for j in range(a, b + 1)]


def _down(a, b, c=-1):
    """c v_a, c v_{a-1}, ..., c v_b (empty when a < b)."""
    return [_v(j, c) for j in range(a, b - 1, -1)]


def _seq(*items):
    """Expand a word of entries and (value, count) runs into a tuple.

    A run with count -1 truncates the word there, dropping the entry in front
    of it as well.
    """
    out = []
    for item in items:
        if isinstance(item, tuple):
            value, count = item
            if count == -1:
                out.pop()
                break
            if count < 0:
                raise ValueError(f"run length {count} out of range")
            out.extend([value] * count)
        else:
            out.append(item)
    return tuple(out)


@dataclass(frozen=True)
class Row:
    row_id: str
    family: str
    sigma: object  # (s, t) -> changemaker
    basis: object  # (s, t) -> list of combinations, x_1..x_n
    norms: object  # (s, t) -> (a_1, ..., a_n)
    pq: object  # (s, t) -> (p, q)
    r: object = None  # (s, t) -> r, for families with a parameter
    s_min: object = None  # None when the row has no s
    t_min: object = None
    note: str = field(default="", compare=False)

    def ranges(self, s_max, t_max):
        ss = [0] if self.s_min is None else range(self.s_min, s_max + 1)
        ts = [0] if self.t_min is None else range(self.t_min, t_max + 1)
        return [(s, t) for s in ss for t in ts]


def _row(row_id, family, sigma, basis, norms, pq, r=None, s_min=None, t_min=None):
    return Row(row_id, family, sigma, basis, norms, pq, r, s_min, t_min)


ROWS = (
    _row("r01", "1A",
         lambda s, t: _seq(1, 1, (2, s), 2 * s - 1, 2 * s + 1),
         lambda s, t: _up(2, s + 1) + [_block(3, s + 2), _v(1)],
         lambda s, t: _seq(3, (2, s - 1), s + 1, 2),
         lambda s, t: (2 * s - 1, 2 * s * s + s + 1),
         s_min=2),
    _row("r02", "1B",
         lambda s, t: _seq(1, 1, (2, s), 2 * s + 1, 2 * s + 3, 4 * s + 4, 8 * s + 10),
         lambda s, t: _up(2, s + 1) + [_v(s + 5, -1), _v(s + 4), _v(s + 2), _v(1)],
         lambda s, t: _seq(3, (2, s - 1), 5, 3, s + 2, 2),
         lambda s, t: (22 * s + 25, 22 * s * s + 53 * s + 32),
         s_min=1),
    _row("r03", "1B",
         lambda s, t: _seq(1, 1, (2, s), 2 * s + 1, 2 * s + 3, 4 * s + 6, 8 * s + 10),
         lambda s, t: _up(2, s + 1) + [_v(s + 4, -1), _v(s + 5), _v(s + 2), _v(1)],
         lambda s, t: _seq(3, (2, s - 1), 4, 4, s + 2, 2),
         lambda s, t: (22 * s + 27, 22 * s * s + 57 * s + 37),
         s_min=1),
    _row("r04", "4",
         lambda s, t: _seq(1, 1, 2, 3, 5, (8, s), 8 * s + 6, (8 * s + 14, t)),
         lambda s, t: ([_v(2, -1), _v(s + 5), _v(1), _combo(_v(3, -1), _v(1, -1))]
                       + _up(5, s + 4) + _up(s + 6, s + t + 5)),
         lambda s, t: _seq(3, s + 3, 2, 3, 3, (2, s - 1), 3, (2, t - 1)),
         lambda s, t: (2 * (2 * s + 3) ** 2 * (t + 1) - 4 * (2 * s + 3) + 1,
                       (4 * s + 7) ** 2 * (t + 1) - 8 * (2 * s + 3) - 6),
         r=lambda s, t: 2 * s + 3, s_min=1, t_min=0),
    _row("r05", "4",
         lambda s, t: _seq(1, 1, 2, 3, 5, 6, (14, t)),
         lambda s, t: [_v(2, -1), _combo(_v(1), _v(5)), _v(1, -1), _v(3, -1)] + _up(6, t + 5),
         lambda s, t: _seq(3, 3, 2, 3, 4, (2, t - 1)),
         lambda s, t: (18 * t + 7, 49 * t + 19),
         r=lambda s, t: 3, t_min=0),
    _row("r06", "3B",
         lambda s, t: _seq(1, 1, (2, s), 2 * s + 3, 2 * s + 5, (4 * s + 6, t)),
         lambda s, t: (_up(2, s + 1)
                       + [_combo(_block(1, s + 1), _block(s + 4, s + t + 3), _v(s + 2, -1))]
                       + _down(s + t + 3, s + 4) + [_v(1, -1)]),
         lambda s, t: _seq(3, (2, s - 1), 4, (2, t - 1), s + 3, 2),
         lambda s, t: (2 * (2 * t + 1) * (s + 1) + (2 * t + 1) + 4,
                       (2 * (2 * t + 1) * s + 3 * (2 * t + 2)) * (2 * s + 3) // 2),
         r=lambda s, t: 2 * t + 1, s_min=1, t_min=1),
    _row("r07", "3B",
         lambda s, t: _seq(1, 1, (2, s), 2 * s + 3, 2 * s + 5),
         lambda s, t: _up(2, s + 1) + [_combo(_block(1, s + 1), _v(s + 2, -1)), _v(1, -1)],
         lambda s, t: _seq(3, (2, s - 1), s + 5, 2),
         lambda s, t: (2 * s + 7, (s + 3) * (2 * s + 3)),
         r=lambda s, t: 1, s_min=1),
    _row("r08", "3A",
         lambda s, t: _seq(1, 1, (2, s), 2 * s + 3, 2 * s + 5, 4 * s + 6, (4 * s + 8, t)),
         lambda s, t: (_up(2, s + 1) + _up(s + 5, s + t + 4)
                       + [_combo(_block(1, s + 1), _block(s + 4, s + t + 4), _v(s + 2, -1)),
                          _v(s + 4, -1), _v(1, -1)]),
         lambda s, t: _seq(3, (2, s - 1), 3, (2, t - 1), 3, s + 3, 2),
         lambda s, t: (2 * (2 * t + 3) * (s + 2) + 1, (s + 2) * (2 * (2 * t + 3) * (s + 2) - 3)),
         r=lambda s, t: 2 * t + 3, s_min=1, t_min=1),
    _row("r09", "3B",
         lambda s, t: _seq(1, 1, 3, 5, (6, t)),
         lambda s, t: [_combo(_v(1), _block(4, t + 3), _v(2, -1))] + _down(t + 3, 4) + [_v(1, -1)],
         lambda s, t: _seq(5, (2, t - 1), 3, 2),
         lambda s, t: (6 * t + 7, 9 * t + 9),
         r=lambda s, t: 2 * t + 1, t_min=1),
    _row("r10", "3B",
         lambda s, t: (1, 1, 3, 5),
         lambda s, t: [_v(2, -1), _v(1)],
         lambda s, t: (6, 2),
         lambda s, t: (7, 9),
         r=lambda s, t: 1),
    _row("r11", "3A",
         lambda s, t: _seq(1, 1, 3, 5, 6, (8, t + 1)),
         lambda s, t: (_up(5, t + 5) + [_combo(_v(1), _block(4, t + 5), _v(2, -1)),
                                        _v(4, -1), _v(1, -1)]),
         lambda s, t: _seq(4, (2, t), 3, 3, 2),
         lambda s, t: (8 * t + 21, 16 * t + 34),
         r=lambda s, t: 2 * t + 5, t_min=0),
    _row("r12", "5",
         lambda s, t: _seq(1, 1, 1, 3, 4, (4, t), 4 * t + 6, (4 * t + 10, s)),
         lambda s, t: ([_v(t + 5, -1), _v(1, -1), _v(2, -1)] + _up(4, t + 4)
                       + _up(t + 6, t + s + 5)),
         lambda s, t: _seq(t + 4, 2, 2, 3, (2, t), 3, (2, s - 1)),
         lambda s, t: (((2 * t + 5) ** 2 - 2 * (2 * t + 5) - 1) * (s + 1) - 2 * (2 * t + 5) + 5,
                       (2 * t + 5) ** 2 * (s + 1) - 2 * (2 * t + 5) + 1),
         r=lambda s, t: 2 * t + 5, s_min=0, t_min=0),
    _row("r13", "1B",
         lambda s, t: (1, 1, 1, 3, 4, 10),
         lambda s, t: [_v(5, -1), _v(4), _v(2), _v(1)],
         lambda s, t: (6, 3, 2, 2),
         lambda s, t: (25, 32)),
    _row("r14", "1B",
         lambda s, t: (1, 1, 1, 3, 6, 10),
         lambda s, t: [_v(4, -1), _v(5), _v(2), _v(1)],
         lambda s, t: (5, 4, 2, 2),
         lambda s, t: (27, 37)),
    _row("r15", "5",
         lambda s, t: _seq(1, 1, 1, 2, 3, (6, t)),
         lambda s, t: [_v(3, -1), _v(1, -1), _v(2, -1)] + _up(5, t + 4),
         lambda s, t: _seq(3, 2, 2, 4, (2, t - 1)),
         lambda s, t: (2 * t + 1, 9 * t + 4),
         r=lambda s, t: 3, t_min=1),
    _row("r16", "Sporadic",
         lambda s, t: (1, 2, 3, 4, 5, 9),
         lambda s, t: [_v(3, -1), _combo(_block(3, 4), _v(1, -1)), _v(4, -1), _v(2)],
         lambda s, t: (3, 3, 3, 3),
         lambda s, t: (13, 34)),
    _row("r17", "4",
         lambda s, t: _seq(1, 2, 3, 3, 7, (8, s), (8 * s + 10, t)),
         lambda s, t: ([_combo(_block(5, s + 4), _v(1, -1))] + _down(s + 4, 5)
                       + [_v(2), _v(3)] + _up(s + 5, s + t + 4, 1)),
         lambda s, t: _seq(4, (2, s - 1), 3, 3, 2, s + 3, (2, t - 1)),
         lambda s, t: (2 * (2 * s + 3) ** 2 * t + 4 * (2 * s + 3) + 1,
                       t * (4 * s + 5) ** 2 + 8 * (2 * s + 3) - 6),
         r=lambda s, t: -3 - 2 * s, s_min=1, t_min=0),
    _row("r18", "4",
         lambda s, t: _seq(1, 2, 3, 3, 7, (10, t)),
         lambda s, t: [_v(1, -1), _v(2), _v(3)] + _up(5, t + 4, 1),
         lambda s, t: _seq(5, 3, 2, 3, (2, t - 1)),
         lambda s, t: (18 * t + 13, 25 * t + 18),
         r=lambda s, t: -3, t_min=0),
    _row("r19", "2",
         lambda s, t: _seq(1, 2, 3, (4, s), 4 * s + 3, 4 * s + 7, (8 * s + 10, t)),
         lambda s, t: (_up(3, s + 2) + [_combo(_block(3, s + 2), _v(1, -1)), _v(2), _v(s + 3)]
                       + _up(s + 5, s + t + 4, 1)),
         lambda s, t: _seq(3, (2, s - 1), 4, 3, s + 2, 3, (2, t - 1)),
         lambda s, t: ((4 * (4 * s + 5) - 2) * t + 2 * (4 * s + 5) + 3,
                       (4 * s + 5) ** 2 * t + ((4 * s + 5) ** 2 + 2 * (4 * s + 5) + 1) // 2),
         r=lambda s, t: -5 - 4 * s, s_min=1, t_min=0),
    _row("r20", "Sporadic",
         lambda s, t: (1, 2, 2, 3, 3, 7),
         lambda s, t: [_combo(_block(3, 4), _v(1, -1)), _v(4, -1), _v(3, -1), _v(2, -1)],
         lambda s, t: (4, 2, 3, 2),
         lambda s, t: (11, 19)),
    _row("r21", "2",
         lambda s, t: _seq(1, 2, 2, 3, (4, s), 4 * s + 5, 4 * s + 9, (8 * s + 14, t)),
         lambda s, t: (_up(4, s + 3) + [_combo(_block(3, s + 3), _v(1, -1)), _v(3, -1),
                                        _v(2, -1), _v(s + 4, -1)] + _up(s + 6, s + t + 5)),
         lambda s, t: _seq(3, (2, s - 1), 3, 3, 2, s + 3, 3, (2, t - 1)),
         lambda s, t: ((4 * (4 * s + 7) + 2) * t + 2 * (4 * s + 7) + 5,
                       (4 * s + 7) ** 2 * t + ((4 * s + 7) ** 2 + 2 * (4 * s + 7) - 1) // 2),
         r=lambda s, t: 7 + 4 * s, s_min=1, t_min=0),
    _row("r22", "2",
         lambda s, t: _seq(1, 2, 2, 3, 5, 9, (14, t)),
         lambda s, t: [_combo(_v(3), _v(1, -1)), _v(3, -1), _v(2, -1), _v(4, -1)] + _up(6, t + 5),
         lambda s, t: _seq(4, 3, 2, 3, 3, (2, t - 1)),
         lambda s, t: (30 * t + 19, 49 * t + 31),
         r=lambda s, t: 7, t_min=0),
)


def table3_rows():
    return list(ROWS)


def get_row(row_id) -> Row:
    for row in ROWS:
        if row.row_id == row_id:
            return row
    raise KeyError(row_id)


def _check_params(row, s, t):
    if row.s_min is not None and s < row.s_min:
        raise ValueError(f"{row.row_id}: s = {s} below {row.s_min}")
    if row.t_min is not None and t < row.t_min:
        raise ValueError(f"{row.row_id}: t = {t} below {row.t_min}")


def generate(row, s=0, t=0):
    """Instantiate a row: (sigma, vertex basis x_1..x_n, norms, (p, q))."""
    _check_params(row, s, t)
    return row.sigma(s, t), row.basis(s, t), row.norms(s, t), row.pq(s, t)


# -- verification -------------------------------------------------------------------------


@dataclass
class RowReport:
    row_id: str
    s: int
    t: int
    sigma: tuple
    p: int
    q: int
    norms: tuple
    ok: bool
    failed: str = ""  # first failed check, one of a..e
    message: str = ""
    x0: tuple = ()
    vertex_basis: tuple = ()  # ambient vectors x_0..x_n

    def as_dict(self):
        return {
            "row": self.row_id, "s": self.s, "t": self.t, "sigma": list(self.sigma),
            "p": self.p, "q": self.q, "norms": list(self.norms), "ok": self.ok,
            "failed": self.failed, "message": self.message,
        }


def _nullspace_and_particular(A, b):
    """Solve A x = b over Q.  Returns (particular, nullspace basis) or None if inconsistent."""
    rows = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(A, b)]
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in rows):
        return None
    part = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        part[c] = rows[i][-1]
    free = [c for c in range(ncols) if c not in pivots]
    null = []
    for f in free:
        z = [Fraction(0)] * ncols
        z[f] = Fraction(1)
        for i, c in enumerate(pivots):
            z[c] = -rows[i][f]
        null.append(z)
    return part, null


def solve_x0(sigma, xs) -> list:
    """Integer vectors x with x.sigma = 0, |x| = 4, x.x_1 = -2 and x.x_i = 0 for i >= 2."""
    A = [list(sigma)] + [list(x) for x in xs]
    b = [0, -2] + [0] * (len(xs) - 1)
    sol = _nullspace_and_particular(A, b)
    if sol is None:
        return []
    y, null = sol
    if len(null) != 1:
        return []
    z = null[0]
    # |y + lam z|^2 = 4
    a = sum(c * c for c in z)
    bb = 2 * sum(u * w for u, w in zip(y, z))
    c = sum(u * u for u in y) - 4
    disc = bb * bb - 4 * a * c
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return []
    root = Fraction(rn, rd)
    out = set()
    for lam in ((-bb + root) / (2 * a), (-bb - root) / (2 * a)):
        x = [u + lam * w for u, w in zip(y, z)]
        if all(v.denominator == 1 for v in x):
            out.add(tuple(int(v) for v in x))
    return sorted(out)


def verify_instance(row_id, family, sigma, basis, norms, p, q, r=None, s=0, t=0) -> RowReport:
    sigma, norms = tuple(sigma), tuple(norms)
    rep = RowReport(row_id, s, t, sigma, p, q, norms, ok=False)

    def fail(check, msg):
        rep.failed, rep.message = check, msg
        return rep

    # (a)
    if any(a > b for a, b in zip(sigma, sigma[1:])) or not sigma or sigma[0] != 1:
        return fail("a", f"{sigma} is not sorted with leading 1")
    if not is_changemaker(sigma):
        return fail("a", f"{sigma} is not a changemaker")
    # (b)
    S = standard_basis(sigma)
    size = len(S.vectors)
    if len(basis) != len(norms) or len(basis) + 1 != size:
        return fail("b", f"{len(basis)} basis vectors and {len(norms)} norms for rank {size}")
    xs = []
    for combo in basis:
        if any(not 1 <= j <= size for j in combo):
            return fail("b", f"combination {combo} uses an index outside 1..{size}")
        coeffs = [combo.get(j, 0) for j in range(1, size + 1)]
        xs.append(to_ambient(coeffs, S))
    if any(dot(x, sigma) for x in xs):
        return fail("b", "a basis vector is not orthogonal to sigma")
    x0s = solve_x0(sigma, xs)
    if not x0s:
        return fail("b", "no x_0 of norm 4 completes the claimed basis")
    x0 = x0s[-1]
    vb = [x0] + xs
    gram = tuple(tuple(dot(u, w) for w in vb) for u in vb)
    if gram != ctype_gram((4,) + norms):
        return fail("b", f"vertex basis Gram {gram} differs from the chain Gram of {norms}")
    rep.x0, rep.vertex_basis = x0, tuple(vb)
    # (c)
    if q <= p or p <= 1:
        return fail("c", f"(p, q) = ({p}, {q}) out of range")
    if neg_eval(norms) != Fraction(2 * q - p, q - p):
        return fail("c", f"[{norms}]^- = {neg_eval(norms)} but (2q-p)/(q-p) = {Fraction(2 * q - p, q - p)}")
    # (d)
    if norm(sigma) != 4 * q:
        return fail("d", f"|sigma|^2 = {norm(sigma)} but 4q = {4 * q}")
    # (e)
    try:
        recs = classify(p, q)
    except ValueError as exc:
        return fail("e", str(exc))
    if not any(rec.family == family and (r is None or rec.r == r) for rec in recs):
        found = ", ".join(f"{rec.family}{rec.as_dict()['params']}" for rec in recs) or "none"
        want = family if r is None else f"{family} with r = {r}"
        return fail("e", f"expected {want}, classified as {found}")
    rep.ok = True
    return rep


def verify_row(row, s=0, t=0) -> RowReport:
    """Certify one instance of a row; checks (a)-(e) in order, stopping at the first failure.

    (a) sigma is a changemaker; (b) the claimed vertex basis, completed by the
    unique-up-to-choice x_0, has the chain Gram of the row's norms; (c) the
    norms expand (2q-p)/(q-p); (d) |sigma|^2 = 4q; (e) classify(p, q) contains
    the row's family (and its r, when the row names one).
    """
    if isinstance(row, str):
        row = get_row(row)
    sigma, basis, norms, (p, q) = generate(row, s, t)
    r = row.r(s, t) if row.r is not None else None
    return verify_instance(row.row_id, row.family, sigma, basis, norms, p, q, r, s, t)


def verify_tables(s_max=5, t_max=5) -> list:
    reports = []
    for row in ROWS:
        for s, t in row.ranges(s_max, t_max):
            reports.append(verify_row(row, s, t))
    return reports

