"""Matrix family entry generators."""

from __future__ import annotations

import random

import pytest

from pascalhankel import families as fam
from pascalhankel import sequences as seq


def test_entry_examples():
    assert fam.entry(fam.M1(2), 1, 3) == 2
    assert fam.entry(fam.M2, 1, 1) == 0
    assert fam.entry(fam.H1, 1, 1) == -1


def test_delta_at_zero_parameter():
    for f in (fam.P1(0), fam.M1(0)):
        for i in range(6):
            for j in range(6):
                assert fam.entry(f, i, j) == (1 if i == j else 0)


def test_h2_structure_examples():
    assert fam.h2_structure_entry(0, 0) == 1
    assert fam.h2_structure_entry(3, 3) == 1
    assert fam.h2_structure_entry(1, 2) == 0


def test_h2_structure_matches_catalan_mod2():
    # entries depend on i+j only, so sweeping the anti-diagonal index
    # covers every (i, j) with i, j <= 2048
    for k in range(2 * 2048 + 1):
        assert seq.catalan_interspersed(k, mod2=True) == fam.h2_structure_entry(k, 0)


def test_m1_is_p1_mod2():
    p1 = fam.entry_fn(fam.P1(1))
    m1 = fam.entry_fn(fam.M1(1))
    for i in range(513):
        for j in range(0, 513, 7):
            assert p1(i, j) % 2 == m1(i, j)


def test_m1_magnitudes():
    rng = random.Random(3)
    for _ in range(300):
        a = rng.choice([-3, -2, -1, 1, 2, 3, 5])
        i = rng.randrange(128)
        j = rng.randrange(128)
        e = fam.entry(fam.M1(a), i, j)
        if e:
            exponent = seq.s2(j) - seq.s2(i)
            assert exponent >= 0
            assert abs(e) == abs(a) ** exponent


def test_hankel_symmetry():
    rng = random.Random(5)
    for f in (fam.H1, fam.H2):
        g = fam.entry_fn(f)
        for _ in range(100):
            i = rng.randrange(40)
            j = rng.randrange(40)
            assert g(i, j) == g(j, i)


def test_parse_family():
    assert fam.parse_family("P1:a=3") == fam.P1(3)
    assert fam.parse_family("M1:a=-2") == fam.M1(-2)
    assert fam.parse_family("P1") == fam.P1(1)
    assert fam.parse_family("P2") == fam.P2
    assert fam.parse_family("M2") == fam.M2
    assert fam.parse_family("H1") == fam.H1
    assert fam.parse_family("H2") == fam.H2
    with pytest.raises(ValueError):
        fam.parse_family("P3")
    with pytest.raises(ValueError):
        fam.parse_family("P2:a=1")
    with pytest.raises(ValueError):
        fam.parse_family("P1:b=1")


def test_family_name_roundtrip():
    for text in ("P1:a=3", "M1:a=-2", "P2", "M2", "H1", "H2"):
        assert fam.family_name(fam.parse_family(text)) == text
