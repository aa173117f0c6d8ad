from fractions import Fraction
from itertools import product

import pytest

from qmacd.polyring import (
    ContractError,
    NonDivisibleError,
    XPoly,
    apply_qshift,
    apply_swap,
    bar_coeffs,
    compositions,
    compositions_upto,
    distinct_rearrangements,
    divide_by_xi,
    dominance_less,
    exact_divide,
    monomial_symmetric,
    partition_of,
    partitions,
    prec_order,
    principal_specialize,
)
from qmacd.qtfield import ONE, Q, T


def mono(*e, c=1):
    return XPoly.monomial(e, c)


# -- orders -------------------------------------------------------------------


@pytest.mark.parametrize("nu, eta, want", [
    ((0, 1), (1, 0), True),
    ((1, 0), (0, 1), False),
    ((1, 0), (1, 0), False),
])
def test_dominance_examples(nu, eta, want):
    assert dominance_less(nu, eta) is want


@pytest.mark.parametrize("nu, eta, want", [
    ((0, 1), (1, 0), True),
    ((1, 1), (2, 0), True),
    ((2, 0), (1, 1), False),
])
def test_prec_examples(nu, eta, want):
    assert prec_order(nu, eta) is want


def test_prec_rejects_mixed_weights():
    with pytest.raises(ContractError):
        prec_order((1, 0), (1, 1))
    with pytest.raises(ContractError):
        dominance_less((1, 0), (1, 0, 0))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_prec_is_strict_partial_order(n):
    for k in range(6):
        comps = compositions(n, k)
        rel = {(a, b): prec_order(a, b) for a in comps for b in comps}
        for a in comps:
            assert not rel[a, a]
        for a, b, c in product(comps, repeat=3):
            if rel[a, b] and rel[b, c]:
                assert rel[a, c]


def test_composition_enumeration():
    assert compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert len(compositions(3, 4)) == 15
    assert len(compositions_upto(3, 4)) == 35
    assert partitions(3, 3) == [(3, 0, 0), (2, 1, 0), (1, 1, 1)]
    assert distinct_rearrangements((1, 0, 0)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert partition_of((0, 2, 1)) == (2, 1, 0)


# -- elementary operators ---------------------------------------------------------


def test_swap():
    assert apply_swap(mono(2, 1), 1, 2) == mono(1, 2)
    assert apply_swap(mono(1, 1), 1, 2) == mono(1, 1)


def test_qshift():
    assert apply_qshift(mono(2, 0), 1) == mono(2, 0, c=Q * Q)
    assert apply_qshift(XPoly.constant(2), 1) == XPoly.constant(2)
    assert apply_qshift(mono(0, 1), 1) == mono(0, 1)


def test_divide():
    assert divide_by_xi(mono(2, 1), 1) == mono(1, 1)
    assert divide_by_xi(mono(0, 1, c=ONE - Q * T), 2) == XPoly.constant(2, ONE - Q * T)
    with pytest.raises(NonDivisibleError):
        divide_by_xi(mono(1, 0) + mono(0, 1), 1)


def test_principal_specialize():
    assert principal_specialize(mono(1, 0) + mono(0, 1)) == ONE + T
    assert principal_specialize(XPoly.constant(2, Q)) == Q
    assert principal_specialize(mono(1, 1)) == T


def test_bar_coeffs():
    assert bar_coeffs(mono(1, 0, c=ONE - T)) == mono(1, 0, c=(T - ONE) / T)
    assert bar_coeffs(mono(1, 0)) == mono(1, 0)


# -- ring structure ---------------------------------------------------------------


def test_arithmetic_and_cancellation(x2):
    x1, x2_ = x2
    f = (x1 + x2_) * (x1 - x2_)
    assert f == x1 * x1 - x2_ * x2_
    assert (f - f).is_zero() and len(f - f) == 0
    assert (x1 * Q).coeff((1, 0)) == Q


def test_exact_divide(x2):
    x1, x2_ = x2
    g = x1.scale(T) - x2_
    f = g * (x1 * x1 + x2_.scale(Q))
    assert exact_divide(f, g) == x1 * x1 + x2_.scale(Q)
    with pytest.raises(NonDivisibleError):
        exact_divide(f + XPoly.constant(2), g)


def test_eval_matches_substitution(x2):
    x1, x2_ = x2
    f = (x1 * x1).scale(Q) + x2_.scale(ONE - T)
    assert f.eval([2, 3], 5, Fraction(1, 2)) == 5 * 4 + 3 * Fraction(1, 2)


def test_monomial_symmetric():
    m = monomial_symmetric(3, (2, 1, 0))
    assert len(m) == 6
    for i in (1, 2):
        assert apply_swap(m, i, i + 1) == m


def test_json_roundtrip_and_text():
    f = mono(1, 0) + mono(0, 1, c=Q * (ONE - T) / (ONE - Q * T))
    assert XPoly.from_json(f.to_json()) == f
    assert f.to_string() == "x1 + ((-q+q*t)/(-1+q*t))*x2"
    assert [t["exp"] for t in f.to_json()["terms"]] == [[0, 1], [1, 0]]


def test_ring_mismatch_is_rejected():
    with pytest.raises(ContractError):
        XPoly.constant(2) + XPoly.constant(3)
