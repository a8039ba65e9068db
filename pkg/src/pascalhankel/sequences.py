"""Integer and +-1 sequence generators behind the matrix families."""

from __future__ import annotations

import math
from functools import lru_cache

SEQUENCE_KINDS = (
    "thue_morse",
    "catalan",
    "catalan_interspersed",
    "catalan_interspersed_mod2",
    "paperfolding",
)

# dual-formula cross-check is only affordable at small index; see tests
# for the wider sweep against both binomial formulas
_CROSSCHECK_LIMIT = 64


def s2(n: int) -> int:
    """Binary sum of digits (popcount)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n.bit_count()


def thue_morse(i: int) -> int:
    """Parity of the binary digit sum."""
    return s2(i) & 1


def lucas_binom_mod2(i: int, j: int) -> int:
    """binom(j, i) mod 2: 1 iff the bit set of i is contained in that of j."""
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    return 1 if i & ~j == 0 else 0


@lru_cache(maxsize=None)
def catalan(k: int) -> int:
    """Exact Catalan number binom(2k,k)/(k+1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    c = catalan(k - 1) * 2 * (2 * k - 1) // (k + 1)
    if k <= _CROSSCHECK_LIMIT:
        quotient = math.comb(2 * k, k) // (k + 1)
        difference = math.comb(2 * k, k) - math.comb(2 * k, k - 1)
        if not (c == quotient == difference):
            raise ArithmeticError(f"Catalan formulas disagree at k={k}")
    return c


def catalan_interspersed(k: int, mod2: bool = False) -> int:
    """Signed Catalan numbers interspersed with zeros.

    c_{2k} = (-1)^k C_k and c_{2k+1} = 0; with mod2 the residue in {0,1}
    is returned as a plain integer.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k % 2:
        return 0
    half = k // 2
    value = catalan(half)
    if mod2:
        return value % 2
    return -value if half % 2 else value


def paperfolding(length: int) -> list:
    """Prefix of the +-1 paperfolding sequence starting (1, -1, -1, -1, ...).

    Built by the doubling recursion w -> w . (-1) . (-w reversed); each
    step extends the previous word, so the prefix is well defined.
    """
    if length < 1:
        raise ValueError("length must be positive")
    w = [1]
    while len(w) < length:
        w = w + [-1] + [-x for x in reversed(w)]
    return w[:length]


def value(kind: str, i: int) -> int:
    """Total function N0 -> Z for any named sequence kind."""
    if kind == "thue_morse":
        return thue_morse(i)
    if kind == "catalan":
        return catalan(i)
    if kind == "catalan_interspersed":
        return catalan_interspersed(i)
    if kind == "catalan_interspersed_mod2":
        return catalan_interspersed(i, mod2=True)
    if kind == "paperfolding":
        return paperfolding(i + 1)[i]
    raise ValueError(f"unknown sequence kind: {kind}")
