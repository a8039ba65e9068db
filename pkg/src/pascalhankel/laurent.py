"""Truncated formal Laurent series over Q and their simple continued
fractions with polynomial partial quotients.

Precision is tracked explicitly: arithmetic never claims coefficients the
inputs cannot certify, and the expansion engine stops (setting a flag)
rather than emit an uncertified quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import sequences


@dataclass(frozen=True)
class Poly:
    """Polynomial with exact rational coefficients, ascending degree."""

    coeffs: tuple

    @staticmethod
    def make(coeffs) -> "Poly":
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return Poly(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly.make(out)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly.make(out)

    def __str__(self) -> str:
        return poly_str(self)


POLY_ZERO = Poly(())
POLY_ONE = Poly.make([1])


def poly_str(p: Poly) -> str:
    """Render like "X", "-1*X", "X^2 + 1"."""
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            x = "X" if k == 1 else f"X^{k}"
            terms.append(x if c == 1 else f"{c}*{x}")
    return " + ".join(terms)


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated series sum of c_e X^e for e = start_exponent, start_exponent-1, ...

    Exponents above start_exponent are zero; exponents below the stored
    range are unknown, not zero.
    """

    start_exponent: int
    coeffs: tuple

    @staticmethod
    def make(start_exponent: int, coeffs) -> "LaurentSeries":
        return LaurentSeries(start_exponent, tuple(Fraction(x) for x in coeffs))

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def coefficient(self, exponent: int) -> Fraction:
        if exponent > self.start_exponent:
            return Fraction(0)
        idx = self.start_exponent - exponent
        if idx >= len(self.coeffs):
            raise ValueError(f"coefficient of X^{exponent} beyond precision")
        return self.coeffs[idx]


@dataclass(frozen=True)
class CFExpansion:
    integer_part: Poly
    partial_quotients: tuple
    exhausted_precision: bool


def build_L(which: str, num_coeffs: int) -> LaurentSeries:
    """The Catalan Laurent series: coefficient of X^(-k-1) is c_k ("L1")
    or c_k mod 2 ("L2")."""
    if num_coeffs < 1:
        raise ValueError("need at least one coefficient")
    if which == "L1":
        coeffs = [sequences.catalan_interspersed(k) for k in range(num_coeffs)]
    elif which == "L2":
        coeffs = [sequences.catalan_interspersed(k, mod2=True)
                  for k in range(num_coeffs)]
    else:
        raise ValueError(f"unknown series: {which!r}")
    return LaurentSeries.make(-1, coeffs)


def _reciprocal(coeffs: list) -> list:
    """First len(coeffs) coefficients of 1/u for u = sum coeffs[i] t^i,
    coeffs[0] != 0."""
    c0 = coeffs[0]
    out = [Fraction(1) / c0]
    for i in range(1, len(coeffs)):
        s = sum(coeffs[j] * out[i - j] for j in range(1, i + 1))
        out.append(-s / c0)
    return out


def cf_expand(s: LaurentSeries, max_quotients: int) -> CFExpansion:
    """Simple continued fraction of a Laurent series.

    Repeatedly extracts the polynomial part as the next quotient and
    inverts the remainder by truncated power-series division.  Stops when
    the remaining precision cannot certify another quotient, setting
    exhausted_precision instead of guessing.
    """
    top = s.start_exponent
    coeffs = [Fraction(x) for x in s.coeffs]
    if all(c == 0 for c in coeffs):
        raise ValueError("cannot expand the zero series")
    if top >= 0:
        if len(coeffs) <= top:
            raise ValueError("insufficient precision for the integer part")
        integer_part = Poly.make(list(reversed(coeffs[:top + 1])))
        coeffs = coeffs[top + 1:]
        top = -1
    else:
        integer_part = POLY_ZERO
    quotients = []
    exhausted = False
    while len(quotients) < max_quotients:
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            top -= 1
        if not coeffs:
            # remaining known coefficients all vanish; cannot distinguish
            # termination from an unknown tail
            exhausted = True
            break
        e = top  # leading exponent, <= -1
        if -e + 1 > len(coeffs):
            exhausted = True
            break
        inv = _reciprocal(coeffs)
        # reciprocal has leading exponent -e; polynomial part spans -e..0
        quotients.append(Poly.make(list(reversed(inv[:-e + 1]))))
        coeffs = inv[-e + 1:]
        top = -1
    return CFExpansion(integer_part, tuple(quotients), exhausted)


def convergent(cf: CFExpansion, upto: int):
    """Numerator/denominator of the continued fraction truncated after
    `upto` partial quotients, by the three-term recursion."""
    if upto > len(cf.partial_quotients):
        raise ValueError("not enough partial quotients")
    p_prev, p_cur = POLY_ONE, cf.integer_part
    q_prev, q_cur = POLY_ZERO, POLY_ONE
    for quotient in cf.partial_quotients[:upto]:
        p_prev, p_cur = p_cur, quotient * p_cur + p_prev
        q_prev, q_cur = q_cur, quotient * q_cur + q_prev
    return p_cur, q_cur


def series_of_fraction(p: Poly, q: Poly, num_coeffs: int) -> LaurentSeries:
    """Laurent expansion of P/Q around infinity, num_coeffs terms."""
    if q.is_zero():
        raise ZeroDivisionError("zero denominator")
    if p.is_zero():
        return LaurentSeries.make(-1, [0] * num_coeffs)
    top = p.degree - q.degree
    # reverse into power series in t = 1/X and divide
    prev = list(reversed(p.coeffs)) + [Fraction(0)] * (num_coeffs - 1)
    qrev = list(reversed(q.coeffs))
    qinv = _reciprocal(qrev[:num_coeffs] + [Fraction(0)] * max(0, num_coeffs - len(qrev)))
    out = []
    for i in range(num_coeffs):
        out.append(sum(prev[j] * qinv[i - j] for j in range(i + 1)))
    return LaurentSeries.make(top, out)
