"""Laurent series and continued fraction engine."""

from __future__ import annotations

from fractions import Fraction

import pytest

from pascalhankel import laurent
from pascalhankel import sequences as seq
from pascalhankel.laurent import LaurentSeries, Poly


def X_power(k):
    return Poly.make([0] * k + [1])


def test_poly_basics():
    p = Poly.make([1, 0, 1])  # X^2 + 1
    q = Poly.make([0, 1])     # X
    assert p.degree == 2 and q.degree == 1
    assert (p * q).coeffs == (0, 1, 0, 1)
    assert (p + q).coeffs == (1, 1, 1)
    assert Poly.make([0, 0]).is_zero()


def test_poly_str():
    assert laurent.poly_str(Poly.make([0, 1])) == "X"
    assert laurent.poly_str(Poly.make([0, -1])) == "-1*X"
    assert laurent.poly_str(Poly.make([1, 0, 1])) == "X^2 + 1"
    assert laurent.poly_str(Poly.make([])) == "0"
    assert laurent.poly_str(Poly.make([Fraction(1, 2), 3])) == "3*X + 1/2"


def test_build_L_examples():
    l1 = laurent.build_L("L1", 3)
    assert l1.start_exponent == -1
    assert l1.coeffs == (1, 0, -1)

    l2 = laurent.build_L("L2", 7)
    assert [k for k, c in enumerate(l2.coeffs) if c] == [0, 2, 6]

    assert laurent.build_L("L1", 1).coeffs == (1,)
    with pytest.raises(ValueError):
        laurent.build_L("L3", 3)
    with pytest.raises(ValueError):
        laurent.build_L("L1", 0)


def test_cf_expand_rejects_zero():
    with pytest.raises(ValueError):
        laurent.cf_expand(LaurentSeries.make(-1, [0, 0, 0]), 5)


def test_cf_expand_simple_inverse():
    # 1/X known through X^-3: one certified quotient X, then exhausted
    s = LaurentSeries.make(-1, [1, 0, 0])
    cf = laurent.cf_expand(s, 5)
    assert cf.integer_part.is_zero()
    assert [laurent.poly_str(q) for q in cf.partial_quotients] == ["X"]
    assert cf.exhausted_precision


def test_cf_expand_l1_all_X():
    cf = laurent.cf_expand(laurent.build_L("L1", 61), 30)
    assert len(cf.partial_quotients) == 30
    assert not cf.exhausted_precision
    assert all(laurent.poly_str(q) == "X" for q in cf.partial_quotients)


def test_cf_expand_l2_paperfolding_signs():
    cf = laurent.cf_expand(laurent.build_L("L2", 61), 30)
    assert len(cf.partial_quotients) == 30
    signs = []
    for q in cf.partial_quotients:
        assert q.degree == 1
        assert q.coeffs[0] == 0
        assert q.coeffs[1] in (1, -1)
        signs.append(int(q.coeffs[1]))
    assert signs == seq.paperfolding(30)


def test_cf_expand_certified_quotient_count():
    # precision p certifies at least floor((p-1)/2) degree-1 quotients
    for p in (5, 10, 21, 40):
        cf = laurent.cf_expand(laurent.build_L("L1", p), 100)
        assert len(cf.partial_quotients) >= (p - 1) // 2
        assert cf.exhausted_precision


def test_cf_expand_with_integer_part():
    # X + 1 + 1/X
    s = LaurentSeries.make(1, [1, 1, 1, 0, 0])
    cf = laurent.cf_expand(s, 3)
    assert laurent.poly_str(cf.integer_part) == "X + 1"
    assert [laurent.poly_str(q) for q in cf.partial_quotients] == ["X"]


def test_convergent_examples():
    cf = laurent.cf_expand(laurent.build_L("L1", 21), 10)
    p1, q1 = laurent.convergent(cf, 1)
    assert (p1, q1) == (Poly.make([1]), X_power(1))
    p2, q2 = laurent.convergent(cf, 2)
    assert p2 == X_power(1)
    assert q2 == Poly.make([1, 0, 1])
    with pytest.raises(ValueError):
        laurent.convergent(cf, 11)


def test_series_of_fraction():
    # X / (X^2 + 1) = X^-1 - X^-3 + X^-5 - ...
    s = laurent.series_of_fraction(X_power(1), Poly.make([1, 0, 1]), 6)
    assert s.start_exponent == -1
    assert s.coeffs == (1, 0, -1, 0, 1, 0)


@pytest.mark.parametrize("which", ["L1", "L2"])
def test_convergents_reconstruct_series(which):
    coeffs = 41
    series = laurent.build_L(which, coeffs)
    cf = laurent.cf_expand(series, 20)
    q_deg_prev = 0
    for upto in range(1, len(cf.partial_quotients) + 1):
        p, q = laurent.convergent(cf, upto)
        assert q.degree == sum(a.degree for a in cf.partial_quotients[:upto])
        # best approximation: agreement through exponent -(deg q + deg q' + 1)
        order = q.degree + q_deg_prev + 1
        if order > coeffs:
            break
        approx = laurent.series_of_fraction(p, q, order + q.degree + 1)
        for e in range(-1, -order - 1, -1):
            assert approx.coefficient(e) == series.coefficient(e)
        q_deg_prev = q.degree
