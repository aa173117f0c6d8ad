"""Composition statistics and (non-)symmetric Macdonald polynomials.

Two independent routes build E_eta(x; q, t):

* :func:`nonsym_macdonald` climbs from E_0 = 1 with the raising operator
  Phi_q and the intertwiner T_i - c (memoised);
* :func:`nonsym_macdonald_oracle` solves the joint eigenproblem
  Y_i E = t^{etabar_i} E by exact Gaussian elimination on the span of the
  monomials below eta.

The coefficient in Phi_q E_nu = t^{-k} E_{Phi nu} is read with
k = #{i >= 2 : nu_i <= nu_1}; counting i = 1 as well would break monicity
already at nu = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dunkl import apply_phi
from .hecke import T_INV, apply_Ti, apply_Uplus, apply_Yi, t_factorial, tpow
from .linalg import nullspace
from .polyring import (
    Composition,
    ContractError,
    XPoly,
    as_composition,
    compositions,
    distinct_rearrangements,
    is_partition,
    partition_of,
    prec_order,
    principal_specialize,
)
from .qtfield import ONE, T, QtMonomial, QtScalar

__all__ = [
    "CompositionStats",
    "OracleError",
    "composition_stats",
    "etabar",
    "delta",
    "nonsym_macdonald",
    "nonsym_macdonald_oracle",
    "ti_on_E",
    "tinv_on_E",
    "symmetric_macdonald",
    "a_eta",
    "clear_cache",
    "phi_composition",
    "phihat_composition",
]


class OracleError(ArithmeticError):
    """The eigen-solve did not produce a unique monic solution."""


@dataclass(frozen=True)
class CompositionStats:
    eta: Composition
    arm: tuple[tuple[int, ...], ...]
    armco: tuple[tuple[int, ...], ...]
    leg: tuple[tuple[int, ...], ...]
    legco: tuple[tuple[int, ...], ...]
    etabar: tuple[QtMonomial, ...]
    d: QtScalar
    dprime: QtScalar
    e: QtScalar

    def to_json(self) -> dict:
        return {
            "eta": list(self.eta),
            "arm": [list(r) for r in self.arm],
            "armco": [list(r) for r in self.armco],
            "leg": [list(r) for r in self.leg],
            "legco": [list(r) for r in self.legco],
            "eigenvalues": [str(m) for m in self.etabar],
            "d": str(self.d),
            "dprime": str(self.dprime),
            "e": str(self.e),
        }


def _one_minus(qe: int, te: int) -> QtScalar:
    return ONE - QtMonomial(qe, te).scalar()


def etabar(eta: Composition) -> tuple[QtMonomial, ...]:
    """Eigenvalues t^{etabar_i} = q^{eta_i} t^{-c_i}."""
    out = []
    for i, v in enumerate(eta):
        c = sum(1 for k in range(i) if eta[k] >= v) + sum(1 for k in range(i + 1, len(eta)) if eta[k] > v)
        out.append(QtMonomial(v, -c))
    return tuple(out)


@lru_cache(maxsize=None)
def _stats(eta: Composition, n: int) -> CompositionStats:
    arm, armco, leg, legco = [], [], [], []
    d = dp = e = ONE
    for i, ei in enumerate(eta):
        lco = sum(1 for k in range(i + 1, n) if eta[k] > ei) + sum(1 for k in range(i) if eta[k] >= ei)
        row_a, row_ac, row_l, row_lc = [], [], [], []
        for j in range(1, ei + 1):
            a = ei - j
            l = (sum(1 for k in range(i + 1, n) if j <= eta[k] <= ei)
                 + sum(1 for k in range(i) if j <= eta[k] + 1 <= ei))
            ac = j - 1
            row_a.append(a)
            row_ac.append(ac)
            row_l.append(l)
            row_lc.append(lco)
            d = d * _one_minus(a + 1, l + 1)
            dp = dp * _one_minus(a + 1, l)
            e = e * _one_minus(ac + 1, n - lco)
        arm.append(tuple(row_a))
        armco.append(tuple(row_ac))
        leg.append(tuple(row_l))
        legco.append(tuple(row_lc))
    return CompositionStats(eta, tuple(arm), tuple(armco), tuple(leg), tuple(legco),
                            etabar(eta), d, dp, e)


def composition_stats(eta, n: int | None = None) -> CompositionStats:
    eta = as_composition(eta)
    if n is not None and n != len(eta):
        raise ContractError(f"composition {eta} does not have length {n}")
    return _stats(eta, len(eta))


def delta(eta: Composition, i: int) -> QtMonomial:
    """t^{delta_{i,eta}} = t^{etabar_i} / t^{etabar_{i+1}}."""
    eta = as_composition(eta)
    if not 1 <= i <= len(eta) - 1:
        raise ContractError(f"index {i} out of range 1..{len(eta) - 1}")
    ev = etabar(eta)
    return ev[i - 1] / ev[i]


def phi_composition(eta: Composition) -> Composition:
    """(eta_2, ..., eta_n, eta_1 + 1)."""
    return tuple(eta[1:]) + (eta[0] + 1,)


def phihat_composition(eta: Composition) -> Composition:
    """(eta_n - 1, eta_1, ..., eta_{n-1})."""
    return (eta[-1] - 1,) + tuple(eta[:-1])


def _swap(eta: Composition, i: int) -> Composition:
    e = list(eta)
    e[i - 1], e[i] = e[i], e[i - 1]
    return tuple(e)


# -- recursive construction ----------------------------------------------

_E_CACHE: dict[Composition, XPoly] = {}


def clear_cache() -> None:
    _E_CACHE.clear()


def _intertwiner_constant(nu: Composition, i: int) -> QtScalar:
    # (t - 1)/(1 - t^{-delta_{i,nu}})
    return (T - ONE) / (ONE - delta(nu, i).inverse().scalar())


def nonsym_macdonald(eta) -> XPoly:
    """Monic E_eta(x; q, t) by the raising/intertwining recursion."""
    eta = as_composition(eta)
    hit = _E_CACHE.get(eta)
    if hit is not None:
        return hit
    n = len(eta)
    if not any(eta):
        out = XPoly.constant(n)
    elif eta[-1] >= 1:
        nu = phihat_composition(eta)
        k = sum(1 for v in nu[1:] if v <= nu[0])
        out = apply_phi(nonsym_macdonald(nu)).scale(tpow(k))
    else:
        i = max(k for k in range(1, n) if eta[k - 1] > eta[k])
        nu = _swap(eta, i)
        e_nu = nonsym_macdonald(nu)
        c = _intertwiner_constant(nu, i)
        out = (apply_Ti(e_nu, i) - e_nu.scale(c)).scale(T_INV)
    _E_CACHE[eta] = out
    return out


# -- eigen-solve oracle ----------------------------------------------------


def nonsym_macdonald_oracle(eta) -> XPoly:
    """E_eta as the unique monic joint eigenvector of the Y_i."""
    eta = as_composition(eta)
    n = len(eta)
    basis = [nu for nu in compositions(n, sum(eta)) if nu == eta or prec_order(nu, eta)]
    index = {nu: k for k, nu in enumerate(basis)}
    size = len(basis)
    rows = []
    for i, lam in enumerate(etabar(eta), start=1):
        lam = lam.scalar()
        block = [[QtScalar() for _ in range(size)] for _ in range(size)]
        for col, nu in enumerate(basis):
            img = apply_Yi(XPoly.monomial(nu), i)
            for mu, c in img.terms.items():
                row = index.get(mu)
                if row is None:
                    raise OracleError(f"Y_{i} x^{nu} leaves the span below {eta} (hits {mu})")
                block[row][col] = block[row][col] + c
            block[col][col] = block[col][col] - lam
        rows.extend(block)
    kernel = nullspace(rows, size)
    if len(kernel) != 1:
        raise OracleError(f"eigenspace for {eta} has dimension {len(kernel)}")
    v = kernel[0]
    lead = v[index[eta]]
    if lead.is_zero():
        raise OracleError(f"eigenvector for {eta} has no x^{eta} term")
    inv = lead.inverse()
    return XPoly(n, {nu: c * inv for nu, c in zip(basis, v)})


# -- action of T_i on E_eta ------------------------------------------------


def ti_on_E(eta, i: int) -> tuple[QtScalar, QtScalar]:
    """Coefficients (a, b) with T_i E_eta = a E_eta + b E_{s_i eta}."""
    eta = as_composition(eta)
    if not 1 <= i <= len(eta) - 1:
        raise ContractError(f"index {i} out of range 1..{len(eta) - 1}")
    if eta[i - 1] == eta[i]:
        return T, QtScalar()
    td = delta(eta, i)
    a = (T - ONE) / (ONE - td.inverse().scalar())
    if eta[i - 1] < eta[i]:
        return a, T
    b = (ONE - (td * QtMonomial(0, 1)).scalar()) * (ONE - (td * QtMonomial(0, -1)).scalar()) \
        / (ONE - td.scalar()) ** 2
    return a, b


def tinv_on_E(eta, i: int) -> tuple[QtScalar, QtScalar]:
    """Coefficients (a, b) with T_i^{-1} E_eta = a E_eta + b E_{s_i eta}."""
    eta = as_composition(eta)
    if not 1 <= i <= len(eta) - 1:
        raise ContractError(f"index {i} out of range 1..{len(eta) - 1}")
    if eta[i - 1] == eta[i]:
        return T_INV, QtScalar()
    td = delta(eta, i)
    a = (T_INV - ONE) / (ONE - td.scalar())
    if eta[i - 1] < eta[i]:
        return a, ONE
    b = T_INV * (ONE - (td * QtMonomial(0, 1)).scalar()) * (ONE - (td * QtMonomial(0, -1)).scalar()) \
        / (ONE - td.scalar()) ** 2
    return a, b


# -- symmetric polynomials ----------------------------------------------------


def symmetric_macdonald(kappa) -> XPoly:
    """P_kappa = d'_kappa sum_{eta^+ = kappa} E_eta / d'_eta."""
    kappa = as_composition(kappa)
    if not is_partition(kappa):
        raise ContractError(f"{kappa} is not a partition")
    dk = composition_stats(kappa).dprime
    total = XPoly.zero(len(kappa))
    for eta in distinct_rearrangements(kappa):
        total = total + nonsym_macdonald(eta).scale(dk / composition_stats(eta).dprime)
    return total


def a_eta(eta) -> QtScalar:
    """Constant with U^+ E_eta = a_eta P_{eta^+}, from the closed formula."""
    eta = as_composition(eta)
    st = composition_stats(eta)
    legsum = sum(sum(row) for row in st.leg)
    p0 = principal_specialize(symmetric_macdonald(partition_of(eta)))
    return t_factorial(len(eta)) * tpow(legsum) * st.e / (p0 * st.d)


def uplus_of_E(eta) -> XPoly:
    return apply_Uplus(nonsym_macdonald(eta))
