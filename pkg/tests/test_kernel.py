import pytest

from qmacd.hecke import apply_Uplus
from qmacd.kernel import bislice, build_0F0, build_KA, check_prop54, check_theorem52
from qmacd.macdonald import nonsym_macdonald
from qmacd.polyring import ContractError, XPoly
from qmacd.qtfield import ONE, Q, T
from qmacd.suites import kernel_suite, uplus_suite


def mono(*e, c=1):
    return XPoly.monomial(e, c)


def test_truncation_zero():
    assert build_KA(2, 0).value == XPoly.constant(4)
    assert build_0F0(2, 0).value == XPoly.constant(4)


def test_KA_degree_one():
    K = build_KA(2, 1)
    assert K.per_eta[(0, 1)] == ONE / (ONE - Q * T)
    e10 = nonsym_macdonald((1, 0))
    want = (XPoly.constant(4)
            + (e10.embed(4, 0) * e10.bar().embed(4, 2)).scale(K.per_eta[(1, 0)])
            + mono(0, 1, 0, 1, c=ONE / (ONE - Q * T)))
    assert K.value == want


def test_0F0_degree_one():
    F = build_0F0(2, 1).value
    p1x = mono(1, 0, 0, 0) + mono(0, 1, 0, 0)
    p1y = mono(0, 0, 1, 0) + mono(0, 0, 0, 1)
    assert F == XPoly.constant(4) + (p1x * p1y).scale(ONE / ((ONE - Q) * (ONE + T)))


def test_symmetrized_kernel_weight_one_slice():
    K = build_KA(2, 1)
    lhs = bislice(apply_Uplus(K.value, offset=0, n=2), 2, 1, 1)
    p1x = mono(1, 0, 0, 0) + mono(0, 1, 0, 0)
    p1y = mono(0, 0, 1, 0) + mono(0, 0, 0, 1)
    assert lhs == (p1x * p1y).scale((ONE + T) / ((ONE - Q) * (ONE + T)))


def test_bislice():
    f = mono(1, 0, 0, 1) + mono(1, 1, 0, 0)
    assert bislice(f, 2, 1, 1) == mono(1, 0, 0, 1)
    assert bislice(f, 2, 2, 0) == mono(1, 1, 0, 0)


def test_contracts():
    with pytest.raises(ContractError):
        build_KA(0, 2)
    with pytest.raises(ContractError):
        build_0F0(2, -1)


@pytest.mark.parametrize("n, N", [(1, 3), (2, 3), (3, 2)])
def test_kernel_properties_and_symmetrization(n, N):
    K = build_KA(n, N)
    res = check_theorem52(K) + check_prop54(n, N, K)
    assert res and all(r.passed for r in res), [r.to_json() for r in res if not r.passed]


def test_kernel_check_detects_a_broken_kernel():
    K = build_KA(2, 2)
    broken = type(K)(K.n, K.N, K.value + mono(1, 0, 0, 1), K.per_eta)
    res = check_theorem52(broken, "a")
    bad = [r for r in res if not r.passed]
    assert bad and bad[0].slice == "(1,1)" and bad[0].counterexample is not None


@pytest.mark.parametrize("n", [2, 3])
def test_kernel_suite_small(n):
    res = kernel_suite(n, 2)
    assert all(r.passed for r in res)


@pytest.mark.parametrize("n", [2, 3])
def test_uplus_suite(n):
    res = uplus_suite(n, 2)
    assert res and all(r.passed for r in res)
