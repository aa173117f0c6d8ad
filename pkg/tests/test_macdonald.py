import pytest
import sympy

from qmacd.hecke import apply_Uplus, apply_Yi
from qmacd.macdonald import (
    OracleError,
    a_eta,
    clear_cache,
    composition_stats,
    delta,
    etabar,
    nonsym_macdonald,
    nonsym_macdonald_oracle,
    symmetric_macdonald,
    ti_on_E,
    tinv_on_E,
)
from qmacd.polyring import ContractError, XPoly, compositions_upto, partitions
from qmacd.qtfield import ONE, Q, T, QtMonomial, QtScalar
from qmacd.suites import coefficient_ratio_checks, macdonald_suite

q_s, t_s = sympy.symbols("q t")


def sym(s: QtScalar):
    return sympy.sympify(str(s).replace("^", "**"), locals={"q": q_s, "t": t_s})


def mono(*e, c=1):
    return XPoly.monomial(e, c)


# -- statistics ----------------------------------------------------------------------


def test_stats_examples():
    s = composition_stats((1, 0))
    assert (s.d, s.dprime, s.e) == (ONE - Q * T, ONE - Q, ONE - Q * T * T)
    assert s.etabar == (QtMonomial(1, 0), QtMonomial(0, -1))
    s = composition_stats((0, 1))
    assert (s.d, s.dprime, s.e) == (ONE - Q * T * T, ONE - Q * T, ONE - Q * T * T)
    assert s.etabar == (QtMonomial(0, -1), QtMonomial(1, 0))
    s = composition_stats((0, 0))
    assert s.d == s.dprime == s.e == ONE


def test_stats_length_contract():
    with pytest.raises(ContractError):
        composition_stats((1, 0), n=3)


def brute_stats(eta):
    """Constants from an explicit node list, as sympy expressions."""
    n = len(eta)
    nodes = [(i, j) for i in range(n) for j in range(1, eta[i] + 1)]
    d = dp = e = sympy.Integer(1)
    for i, j in nodes:
        a, ac = eta[i] - j, j - 1
        l = len([k for k in range(n) if k > i and j <= eta[k] <= eta[i]]) + \
            len([k for k in range(n) if k < i and j <= eta[k] + 1 <= eta[i]])
        lc = len([k for k in range(n) if k > i and eta[k] > eta[i]]) + \
            len([k for k in range(n) if k < i and eta[k] >= eta[i]])
        d *= 1 - q_s ** (a + 1) * t_s ** (l + 1)
        dp *= 1 - q_s ** (a + 1) * t_s ** l
        e *= 1 - q_s ** (ac + 1) * t_s ** (n - lc)
    return d, dp, e


@pytest.mark.parametrize("n", [2, 3])
def test_stats_match_node_enumeration(n):
    for eta in compositions_upto(n, 4):
        s = composition_stats(eta)
        for got, want in zip((s.d, s.dprime, s.e), brute_stats(eta)):
            assert sympy.expand(sym(got) - want) == 0, eta


@pytest.mark.parametrize("eta, i, want", [
    ((0, 1), 1, QtMonomial(-1, -1)),
    ((2, 2), 1, QtMonomial(0, 1)),
    ((0, 0), 1, QtMonomial(0, 1)),
    ((1, 0), 1, QtMonomial(1, 1)),
])
def test_delta(eta, i, want):
    assert delta(eta, i) == want


def test_stats_json():
    js = composition_stats((1, 0)).to_json()
    assert js["dprime"] == "1-q" and js["eigenvalues"] == ["q", "t^-1"]


# -- E_eta ------------------------------------------------------------------------


def test_E_examples():
    assert nonsym_macdonald((0, 1)) == mono(0, 1)
    assert nonsym_macdonald((0, 0)) == XPoly.constant(2)
    want = mono(1, 0) + mono(0, 1, c=Q * (ONE - T) / (ONE - Q * T))
    assert nonsym_macdonald((1, 0)) == want
    assert nonsym_macdonald_oracle((1, 0)) == want
    assert nonsym_macdonald_oracle((0, 0)) == XPoly.constant(2)


def test_cache_is_transparent():
    before = nonsym_macdonald((2, 0, 1))
    clear_cache()
    assert nonsym_macdonald((2, 0, 1)) == before


def test_eigenvalues_n4_spot_check():
    eta = (0, 2, 1, 0)
    e = nonsym_macdonald(eta)
    for i, lam in enumerate(etabar(eta), 1):
        assert apply_Yi(e, i) == e.scale(lam.scalar())


def test_oracle_error_type():
    assert issubclass(OracleError, ArithmeticError)


@pytest.mark.parametrize("n", [2, 3])
def test_macdonald_suite(n):
    res = macdonald_suite(n, 3)
    assert res and all(r.passed for r in res), [r.to_json() for r in res if not r.passed]


# -- T_i action -------------------------------------------------------------------


def test_ti_on_E_examples():
    assert ti_on_E((2, 2), 1) == (T, QtScalar())
    td = delta((0, 1), 1)
    a, b = ti_on_E((0, 1), 1)
    assert a == (T - ONE) / (ONE - td.inverse().scalar()) and b == T
    td = QtMonomial(1, 1)
    a, b = ti_on_E((1, 0), 1)
    assert a == (T - ONE) / (ONE - td.inverse().scalar())
    assert b == (ONE - Q * T * T) * (ONE - Q) / (ONE - Q * T) ** 2


def test_tinv_consistent_with_ti():
    # T^-1 = t^-1 T + (t^-1 - 1) applied to the two-term expansion
    for eta in [(0, 1), (1, 0), (1, 1), (2, 0, 1)]:
        for i in range(1, len(eta)):
            a, b = ti_on_E(eta, i)
            ai, bi = tinv_on_E(eta, i)
            assert ai == a / T + (ONE / T - ONE)
            assert bi == b / T


# -- symmetric polynomials ---------------------------------------------------------


def test_P_examples():
    assert symmetric_macdonald((1, 0)) == mono(1, 0) + mono(0, 1)
    assert symmetric_macdonald((0, 0, 0)) == XPoly.constant(3)
    with pytest.raises(ContractError):
        symmetric_macdonald((0, 1))


@pytest.mark.parametrize("n", [2, 3])
def test_P_eigen_for_sum_of_Y(n):
    # e_1(Y) preserves symmetric polynomials and P_kappa is its eigenfunction
    for d in range(4):
        for kappa in partitions(n, d):
            p = symmetric_macdonald(kappa)
            lhs = XPoly.zero(n)
            for i in range(1, n + 1):
                lhs = lhs + apply_Yi(p, i)
            lam = sum((m.scalar() for m in etabar(kappa)), QtScalar())
            assert lhs == p.scale(lam), kappa


def test_a_eta_examples():
    assert a_eta((0, 0)) == ONE + T
    for eta in [(1, 0), (0, 1)]:
        assert apply_Uplus(nonsym_macdonald(eta)) == (mono(1, 0) + mono(0, 1)).scale(a_eta(eta))
    assert a_eta((1, 0)) != a_eta((0, 1))


def test_coefficient_ratios_n4():
    res = coefficient_ratio_checks(4, compositions_upto(4, 2))
    assert all(r.passed for r in res)
