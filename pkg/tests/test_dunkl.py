import pytest

from qmacd.dunkl import (
    DunklConsistencyError,
    apply_Di,
    apply_E0m,
    apply_phi,
    apply_phihat,
)
from qmacd.hecke import apply_word, tpow
from qmacd.macdonald import nonsym_macdonald
from qmacd.polyring import (
    ContractError,
    XPoly,
    apply_qshift,
    compositions_upto,
    divide_by_xi,
    monomial_symmetric,
    partitions,
)
from qmacd.qtfield import ONE, Q, T
from qmacd.suites import dunkl_suite, e0m_checks, printed_forms, raising_suite


def mono(*e, c=1):
    return XPoly.monomial(e, c)


def test_di_examples():
    for n in (2, 3):
        for i in range(1, n + 1):
            assert apply_Di(XPoly.constant(n), i).is_zero()
    assert apply_Di(mono(0, 1), 2) == XPoly.constant(2, ONE - Q * T)
    assert apply_Di(mono(1, 0), 2) == XPoly.constant(2, -Q * (ONE - T))


@pytest.mark.parametrize("n", [2, 3])
def test_di_lowers_degree_by_one(n):
    for e in compositions_upto(n, 3):
        for i in range(1, n + 1):
            g = apply_Di(XPoly.monomial(e), i)
            assert all(sum(k) == sum(e) - 1 for k, _ in g)


@pytest.mark.parametrize("n", [2, 3])
def test_di_on_symmetric_matches_q_difference(n):
    # on symmetric f: D_j = T_j .. T_{n-1} x_n^{-1} (1 - tau_n)
    for d in range(4):
        for lam in partitions(n, d):
            f = monomial_symmetric(n, lam)
            g = divide_by_xi(f - apply_qshift(f, n), n)
            for j in range(1, n + 1):
                assert apply_Di(f, j) == apply_word(g, range(j, n)), (lam, j)


def test_consistency_error_is_arithmetic():
    assert issubclass(DunklConsistencyError, ArithmeticError)


def test_phi_examples():
    assert apply_phi(XPoly.constant(2)) == mono(0, 1, c=ONE / T)
    assert apply_phi(XPoly.constant(3)) == mono(0, 0, 1, c=tpow(-2))
    assert apply_phi(nonsym_macdonald((0, 0))) == nonsym_macdonald((0, 1)).scale(ONE / T)


def test_phihat_examples():
    assert apply_phihat(XPoly.constant(2)).is_zero()
    assert apply_phihat(nonsym_macdonald((0, 1))) == XPoly.constant(2, T * (ONE - Q * T))


def test_e0m_examples():
    assert apply_E0m(mono(1, 0) + mono(0, 1), 1) == XPoly.constant(2, (ONE - Q) * (ONE + T))
    assert apply_E0m(mono(1), 1) == XPoly.constant(1, ONE - Q)
    assert apply_E0m(XPoly.constant(3), 2).is_zero()
    with pytest.raises(ContractError):
        apply_E0m(mono(1, 0), 1)


@pytest.mark.parametrize("n", [2, 3])
def test_dunkl_suite(n):
    res = dunkl_suite(n, 3)
    assert res and all(r.passed for r in res), [r.to_json() for r in res if not r.passed]
    names = " ".join(r.identity for r in res)
    for key in ("T_1 D_2 = t D_1 T_1^-1", "omega D_2 = D_1 omega", "T_0 D_1", "[D_1,Y_2]",
                "D_1 Y_1 - q Y_1 D_1", "x_1[D_1,Y_n]", "[D_1,x_n^-1]", "[D_1,D_2]=0"):
        assert key in names


@pytest.mark.parametrize("n", [2, 3])
def test_raising_suite(n):
    res = raising_suite(n, 3)
    assert res and all(r.passed for r in res), [r.to_json() for r in res if not r.passed]


def test_e0m_sum_n4_degree2():
    assert all(r.passed for r in e0m_checks(4, 2))


def test_printed_forms_are_refuted_at_minimal_inputs():
    """Three relations fail in their literal printed form; the corrected ones pass."""
    res = {r.identity: r for r in printed_forms(2, 2)}
    yx = res["printed Y_1 x_n [n=2]"]
    assert not yx.passed
    assert yx.counterexample == {"input": [0, 0], "monomial": [0, 1], "lhs": "1/(t)", "rhs": "2-t"}
    dy = res["printed x_1[D_1,Y_n] [n=2]"]
    assert not dy.passed and dy.counterexample["input"] == [0, 0]
    tx = res["printed [T_1n^-1, x_n^-1] [n=2]"]
    assert not tx.passed and tx.counterexample["input"] == [0, 1]
    assert all(not r.passed for r in printed_forms(3, 2))
