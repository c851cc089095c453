"""Torsion coefficients and the Alexander polynomial attached to a changemaker vector.

For sigma in Z^{n+2} with |sigma|^2 = 4q,

    t_i = min { (|c|^2 - (n+2)) / 8 : c characteristic, <c, sigma> + 4q = 2i (mod 8q) }

for 0 <= i <= 2q, and t_i = 0 beyond.  The minimum is taken over all-odd
integer vectors c.  It is computed exactly over a box |c_j| <= B_j by a
dynamic programme on the residue <c, sigma> mod 8q; the box is widened until
one more widening changes nothing, and that step is recorded as the
certificate.
"""
from dataclasses import dataclass

from .changemaker import is_changemaker, norm


@dataclass(frozen=True)
class TorsionSequence:
    q: int
    t: tuple  # t_0, t_1, ... with trailing zeros trimmed
    bounds: tuple = ()  # per-coordinate box that produced t
    certified: bool = False  # True when widening the box by 2 left every t_i unchanged

    def __getitem__(self, i):
        if i < 0:
            raise IndexError("torsion coefficients are indexed from 0")
        return self.t[i] if i < len(self.t) else 0

    def full(self):
        """t_0 .. t_{2q}, zeros included."""
        return tuple(self[i] for i in range(2 * self.q + 1))


@dataclass(frozen=True)
class AlexanderPolynomial:
    coeffs: tuple  # b_0, b_1, ..., b_d; Delta = b_0 + sum b_i (T^i + T^-i)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def at_one(self):
        return self.coeffs[0] + 2 * sum(self.coeffs[1:])

    def as_dict(self):
        return {i: b for i, b in enumerate(self.coeffs) if b}

    def lspace_shape(self) -> bool:
        """Nonzero coefficients are +-1 and alternate in sign, starting with +1 at the top."""
        symmetric = list(reversed(self.coeffs)) + list(self.coeffs[1:])
        nz = [b for b in symmetric if b]
        return all(b == (-1) ** k for k, b in enumerate(nz))


def _check_sigma(sigma, q):
    sigma = tuple(sigma)
    if not sigma or sigma[0] != 1 or not is_changemaker(sigma):
        raise ValueError(f"{sigma} is not a changemaker vector with sigma_0 = 1")
    if q is None:
        if norm(sigma) % 4:
            raise ValueError(f"|sigma|^2 = {norm(sigma)} is not divisible by 4")
        q = norm(sigma) // 4
    if norm(sigma) != 4 * q:
        raise ValueError(f"|sigma|^2 = {norm(sigma)} but 4q = {4 * q}")
    if q < 1:
        raise ValueError("q must be positive")
    return sigma, q


def min_char_norms(sigma, modulus, bounds) -> list:
    """best[r] = min |c|^2 over odd c with |c_j| <= bounds[j] and <c, sigma> = r (mod modulus)."""
    INF = None
    best = [INF] * modulus
    best[0] = 0
    for s, B in zip(sigma, bounds):
        choices = [(c * s % modulus, c * c) for c in range(-B, B + 1, 2)]
        nxt = [INF] * modulus
        for r, val in enumerate(best):
            if val is None:
                continue
            for dr, cost in choices:
                k = (r + dr) % modulus
                v = val + cost
                if nxt[k] is None or v < nxt[k]:
                    nxt[k] = v
        best = nxt
    return best


def _torsion_from_box(sigma, q, bounds):
    m = 8 * q
    best = min_char_norms(sigma, m, bounds)
    size = len(sigma)
    out = []
    for i in range(2 * q + 1):
        r = (2 * i - 4 * q) % m
        v = best[r]
        if v is None:
            return None
        num = v - size
        assert num % 8 == 0, "characteristic norm has the wrong residue mod 8"
        out.append(num // 8)
    return out


def torsion_coefficients(sigma, q=None, bounds=None, max_rounds=50) -> TorsionSequence:
    """Exact t_0..t_{2q} with a widening certificate.

    ``bounds`` overrides the starting box (default max(3, 2 sigma_j + 1) per
    coordinate).  The box grows by 2 in every coordinate until one growth
    step leaves all 2q + 1 minima unchanged.
    """
    sigma, q = _check_sigma(sigma, q)
    if bounds is None:
        bounds = [max(3, 2 * s + 1) for s in sigma]
    bounds = [b if b % 2 else b + 1 for b in bounds]
    cur = _torsion_from_box(sigma, q, bounds)
    for _ in range(max_rounds):
        wider = [b + 2 for b in bounds]
        nxt = _torsion_from_box(sigma, q, wider)
        if cur is not None and nxt == cur:
            break
        bounds, cur = wider, nxt
    else:
        raise ArithmeticError(f"torsion minima for {sigma} did not stabilise")
    if any(x < 0 for x in cur):
        raise ArithmeticError(f"negative torsion coefficient for {sigma}: {cur}")
    t = list(cur)
    while t and t[-1] == 0:
        t.pop()
    return TorsionSequence(q, tuple(t), tuple(bounds), True)


def alexander_polynomial(t) -> AlexanderPolynomial:
    """b_i = t_{i-1} - 2 t_i + t_{i+1} for i > 0, and b_0 = 1 - 2 sum_{i>0} b_i."""
    seq = list(t.t if isinstance(t, TorsionSequence) else t)
    if any(x < 0 for x in seq):
        raise ValueError("torsion coefficients are nonnegative")
    get = lambda i: seq[i] if 0 <= i < len(seq) else 0  # noqa: E731
    top = len(seq)  # b_i = 0 once i - 1 >= len(seq)
    b = [0] + [get(i - 1) - 2 * get(i) + get(i + 1) for i in range(1, top + 1)]
    b[0] = 1 - 2 * sum(b[1:])
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    return AlexanderPolynomial(tuple(b))


def torsion_from_polynomial(poly, q=None) -> TorsionSequence:
    """t_k = sum_{j >= 1} j b_{k+j}."""
    b = poly.coeffs if isinstance(poly, AlexanderPolynomial) else tuple(poly)
    d = len(b) - 1
    t = [sum(j * b[k + j] for j in range(1, d - k + 1)) for k in range(d)]
    while t and t[-1] == 0:
        t.pop()
    return TorsionSequence(q if q is not None else 0, tuple(t))


@dataclass(frozen=True)
class AlexanderReport:
    sigma: tuple
    q: int
    torsion: TorsionSequence
    polynomial: AlexanderPolynomial

    @property
    def genus(self):
        return self.polynomial.degree

    def as_dict(self):
        return {
            "sigma": list(self.sigma),
            "q": self.q,
            "torsion": list(self.torsion.t),
            "coeffs": {str(i): b for i, b in self.polynomial.as_dict().items()},
            "genus": self.genus,
            "lspace_shape": self.polynomial.lspace_shape(),
            "stabilization_bound": list(self.torsion.bounds),
        }


def alexander_report(sigma, q=None) -> AlexanderReport:
    ts = torsion_coefficients(sigma, q)
    return AlexanderReport(tuple(sigma), ts.q, ts, alexander_polynomial(ts))
