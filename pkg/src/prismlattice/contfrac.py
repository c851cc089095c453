"""Hirzebruch-Jung (minus) and regular (plus) continued fractions over exact rationals.

Coefficient sequences are plain tuples of ints.  ``[a1, ..., an]^-`` means
``a1 - 1/(a2 - 1/(... - 1/an))`` and ``[b1, ..., bm]^+`` means
``b1 + 1/(b2 + 1/(... + 1/bm))``.
"""
from fractions import Fraction


class DegenerateExpansion(ZeroDivisionError):
    """An intermediate denominator vanished while evaluating a continued fraction."""


def as_rational(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, tuple):
        return Fraction(*x)
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted")
    return Fraction(x)


def neg_expand(x) -> tuple:
    """Expand x > 1 as ``[a1, ..., an]^-`` with every ai >= 2 (ceiling recurrence)."""
    x = as_rational(x)
    if x <= 1:
        raise ValueError(f"neg_expand needs x > 1, got {x}")
    num, den = x.numerator, x.denominator
    coeffs = []
    while den:
        a = -(-num // den)
        coeffs.append(a)
        # x -> 1 / (a - x)
        num, den = den, a * den - num
    return tuple(coeffs)


def neg_eval(cf) -> Fraction:
    cf = tuple(cf)
    if not cf:
        raise ValueError("empty continued fraction")
    num, den = cf[-1], 1
    for a in reversed(cf[:-1]):
        if num == 0:
            raise DegenerateExpansion(f"zero denominator evaluating {list(cf)}^-")
        num, den = a * num - den, num
    return Fraction(num, den)


def pos_expand(x) -> tuple:
    """Expand x > 0 as ``[b1, ..., bm]^+`` with b1 >= 0 and later bi > 0 (floor recurrence)."""
    x = as_rational(x)
    if x <= 0:
        raise ValueError(f"pos_expand needs x > 0, got {x}")
    num, den = x.numerator, x.denominator
    coeffs = []
    while den:
        b = num // den
        coeffs.append(b)
        # x -> 1 / (x - b)
        num, den = den, num - b * den
    return tuple(coeffs)


def pos_eval(cf) -> Fraction:
    cf = tuple(cf)
    if not cf:
        raise ValueError("empty continued fraction")
    num, den = cf[-1], 1
    for b in reversed(cf[:-1]):
        if num == 0:
            raise DegenerateExpansion(f"zero denominator evaluating {list(cf)}^+")
        num, den = b * num + den, num
    return Fraction(num, den)


def hj_rewrite_interior(cf, position: int, run_length: int) -> tuple:
    """``[..., r, 2^[s], t, ...]^- = [..., r-1, -(s+1), t-1, ...]^-``.

    ``position`` indexes ``r``; the run of ``run_length`` twos follows it and
    ``t`` sits right after the run.
    """
    cf = tuple(cf)
    s = run_length
    t_index = position + s + 1
    if position < 0 or s < 0 or t_index >= len(cf):
        raise ValueError(f"no run r, 2^[{s}], t at position {position} in {list(cf)}")
    if any(a != 2 for a in cf[position + 1:t_index]):
        raise ValueError(f"entries {position + 1}..{t_index - 1} of {list(cf)} are not all 2")
    r, t = cf[position], cf[t_index]
    return cf[:position] + (r - 1, -(s + 1), t - 1) + cf[t_index + 1:]


def hj_rewrite_tail(cf, run_length: int) -> tuple:
    """``[..., s, 2^[t]]^- = [..., s-1, -(t+1)]^-`` for the trailing run of ``run_length`` twos."""
    cf = tuple(cf)
    t = run_length
    s_index = len(cf) - t - 1
    if t < 0 or s_index < 0:
        raise ValueError(f"no trailing run of {t} twos after an entry in {list(cf)}")
    if any(a != 2 for a in cf[s_index + 1:]):
        raise ValueError(f"the last {t} entries of {list(cf)} are not all 2")
    return cf[:s_index] + (cf[s_index] - 1, -(t + 1))


def montesinos_coeffs(b) -> tuple:
    """Convert ``p/(q-p) = [b1, ..., bm]^+`` into the minus expansion of ``(2q-p)/(q-p)``.

    Bands: ``b1 + 3``, then ``2^[b_even - 1]`` runs, ``b_odd + 2`` for interior
    odd positions and ``bm + 1`` for a final odd position.  Empty runs vanish.
    A single band (m = 1) carries ``b1 + 2`` half twists.
    """
    b = tuple(b)
    m = len(b)
    if m == 0:
        raise ValueError("empty expansion")
    if b[0] < 0 or any(x <= 0 for x in b[1:]):
        raise ValueError(f"sign conditions violated by {list(b)}")
    if m == 1:
        out = [b[0] + 2]
    else:
        out = [b[0] + 3]
        for i in range(2, m + 1):
            bi = b[i - 1]
            if i % 2 == 0:
                out.extend([2] * (bi - 1))
            elif i == m:
                out.append(bi + 1)
            else:
                out.append(bi + 2)
    out = tuple(out)
    if neg_eval(out) != pos_eval(b) + 2:
        raise ArithmeticError(f"band count identity fails for {list(b)} -> {list(out)}")
    return out
