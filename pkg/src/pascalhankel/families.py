"""Entry generators for the Pascal and Catalan-Hankel matrix families."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import exact, sequences


@dataclass(frozen=True)
class Family:
    """A named infinite matrix with a total entry function on N0 x N0.

    kind is one of "P1", "P2", "M1", "M2", "hankel"; a parametrizes P1/M1;
    seq names the sequence of a Hankel matrix.
    """

    kind: str
    a: int = 0
    seq: str = ""


def P1(a: int) -> Family:
    return Family("P1", a=a)


def M1(a: int) -> Family:
    return Family("M1", a=a)


P2 = Family("P2")
M2 = Family("M2")
H1 = Family("hankel", seq="catalan_interspersed")
H2 = Family("hankel", seq="catalan_interspersed_mod2")


def entry(f: Family, i: int, j: int) -> int:
    return entry_fn(f)(i, j)


def entry_fn(f: Family):
    """Closure computing entries of f; total on N0 x N0."""
    if f.kind == "P1":
        a = f.a
        if a == 0:
            return lambda i, j: 1 if i == j else 0
        return lambda i, j: 0 if i > j else math.comb(j, i) * a ** (j - i)
    if f.kind == "P2":
        return lambda i, j: math.comb(i + j, i)
    if f.kind == "M1":
        a = f.a
        if a == 0:
            return lambda i, j: 1 if i == j else 0

        def m1(i, j, a=a):
            if i & ~j:
                return 0
            # bit-subset makes the exponent nonnegative
            return a ** (sequences.s2(j) - sequences.s2(i))

        return m1
    if f.kind == "M2":
        return lambda i, j: math.comb(i + j, i) % 2
    if f.kind == "hankel":
        seq = f.seq

        def hankel(i, j, seq=seq):
            return sequences.value(seq, i + j)

        return hankel
    raise ValueError(f"unknown family kind: {f.kind}")


def h2_structure_entry(i: int, j: int) -> int:
    """Closed form for the mod-2 Catalan Hankel entries: 1 iff i+j+2 is a
    power of two."""
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    v = i + j + 2
    return 1 if v & (v - 1) == 0 else 0


def window_of(f: Family, n: int, m: int | None = None, k: int = 0) -> exact.ExactMatrix:
    return exact.window(entry_fn(f), n, m, k)


def parse_family(text: str) -> Family:
    """Parse CLI family names: "P1:a=3", "M1:a=-2", "P2", "M2", "H1", "H2".

    Bare "P1" and "M1" default to a=1.
    """
    name, _, param = text.partition(":")
    name = name.strip().upper()
    if name in ("P1", "M1"):
        a = 1
        if param:
            key, _, val = param.partition("=")
            if key.strip() != "a":
                raise ValueError(f"unknown parameter in {text!r}")
            a = int(val)
        return P1(a) if name == "P1" else M1(a)
    if param:
        raise ValueError(f"family {name} takes no parameters")
    if name == "P2":
        return P2
    if name == "M2":
        return M2
    if name == "H1":
        return H1
    if name == "H2":
        return H2
    raise ValueError(f"unknown family: {text!r}")


def family_name(f: Family) -> str:
    if f.kind in ("P1", "M1"):
        return f"{f.kind}:a={f.a}"
    if f.kind == "hankel":
        return "H1" if f.seq == "catalan_interspersed" else "H2"
    return f.kind
