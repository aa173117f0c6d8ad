"""Truncated bilinear kernels K_A(x;y;q,t) and 0F0(x;y;q,t).

Both live in the doubled ring: variables 1..n are x, n+1..2n are y.
Operators marked "barred" are conjugated by the coefficientwise bar
involution: bar . Op^(y) . bar.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .checks import CheckResult, first_difference
from .dunkl import apply_Di, apply_phi, apply_phihat
from .hecke import apply_Ti, apply_Ti_inv, apply_Uplus, t_factorial, tpow
from .macdonald import composition_stats, nonsym_macdonald, symmetric_macdonald
from .polyring import (
    Composition,
    ContractError,
    XPoly,
    compositions_upto,
    multiply_by_xi,
    partitions,
    principal_specialize,
)
from .qtfield import QtScalar

__all__ = [
    "KernelTruncation",
    "build_KA",
    "build_0F0",
    "bislice",
    "check_theorem52",
    "check_prop54",
]


@dataclass(frozen=True)
class KernelTruncation:
    n: int
    N: int
    value: XPoly
    per_eta: dict[Composition, QtScalar] = field(default_factory=dict)


def _check_size(n: int, N: int) -> None:
    if n < 1:
        raise ContractError(f"need n >= 1, got {n}")
    if N < 0:
        raise ContractError(f"need N >= 0, got {N}")


def build_KA(n: int, N: int) -> KernelTruncation:
    """sum_{|eta| <= N} d_eta/(d'_eta e_eta) E_eta(x;q,t) E_eta(y;1/q,1/t)."""
    _check_size(n, N)
    value = XPoly.zero(2 * n)
    coeffs = {}
    for eta in compositions_upto(n, N):
        st = composition_stats(eta)
        a = st.d / (st.dprime * st.e)
        coeffs[eta] = a
        e = nonsym_macdonald(eta)
        value = value + (e.embed(2 * n, 0) * e.bar().embed(2 * n, n)).scale(a)
    return KernelTruncation(n, N, value, coeffs)


def build_0F0(n: int, N: int) -> KernelTruncation:
    """sum over partitions of t^{b(k)}/(d'_k P_k(1,t,..,t^{n-1})) P_k(x) P_k(y)."""
    _check_size(n, N)
    value = XPoly.zero(2 * n)
    coeffs = {}
    for m in range(N + 1):
        for kappa in partitions(n, m):
            p = symmetric_macdonald(kappa)
            b = sum(i * k for i, k in enumerate(kappa))
            c = tpow(b) / (composition_stats(kappa).dprime * principal_specialize(p))
            coeffs[kappa] = c
            value = value + (p.embed(2 * n, 0) * p.embed(2 * n, n)).scale(c)
    return KernelTruncation(n, N, value, coeffs)


def bislice(f: XPoly, n: int, dx: int, dy: int) -> XPoly:
    """Terms of x-degree dx and y-degree dy."""
    return f.select(lambda e: sum(e[:n]) == dx and sum(e[n:]) == dy)


def _compare_slices(name: str, lhs: XPoly, rhs: XPoly, n: int, slices) -> list[CheckResult]:
    out = []
    for dx, dy in slices:
        diff = first_difference(bislice(lhs, n, dx, dy), bislice(rhs, n, dx, dy))
        out.append(CheckResult(name, diff is None, 1, slice=f"({dx},{dy})", counterexample=diff))
    return out


def _barred(op, f: XPoly, **kw) -> XPoly:
    return op(f.bar(), **kw).bar()


def check_theorem52(K: KernelTruncation, parts: str = "abc") -> list[CheckResult]:
    """Slice-by-slice check of the three kernel properties.

    (a) T_i^{+-1} in x equals barred T_i^{-+1} in y, on every (m, m);
    (b) hat-Phi_q in x equals barred Phi_q in y, on (m-1, m) for 1 <= m <= N;
    (c) D_i in x equals multiplication by y_i, on (m, m+1) for m < N.
    """
    n, N, k = K.n, K.N, K.value
    y = dict(offset=n, n=n)
    x = dict(offset=0, n=n)
    results: list[CheckResult] = []
    if "a" in parts:
        diag = [(m, m) for m in range(N + 1)]
        for i in range(1, n):
            lhs = apply_Ti(k, i, **x)
            rhs = _barred(lambda f, **kw: apply_Ti_inv(f, i, **kw), k, **y)
            results += _compare_slices(f"K_A: T_{i} in x = barred T_{i}^-1 in y", lhs, rhs, n, diag)
            lhs = apply_Ti_inv(k, i, **x)
            rhs = _barred(lambda f, **kw: apply_Ti(f, i, **kw), k, **y)
            results += _compare_slices(f"K_A: T_{i}^-1 in x = barred T_{i} in y", lhs, rhs, n, diag)
    if "b" in parts:
        lhs = apply_phihat(k, **x)
        rhs = _barred(apply_phi, k, **y)
        results += _compare_slices("K_A: Phihat in x = barred Phi in y", lhs, rhs, n, [(m - 1, m) for m in range(1, N + 1)])
    if "c" in parts:
        for i in range(1, n + 1):
            lhs = apply_Di(k, i, **x)
            rhs = multiply_by_xi(k, n + i)
            results += _compare_slices(f"K_A: D_{i} in x = y_{i}", lhs, rhs, n, [(m, m + 1) for m in range(N)])
    return results


def check_prop54(n: int, N: int, K: KernelTruncation | None = None) -> list[CheckResult]:
    """U^+ in x applied to K_A equals [n]_t! 0F0, per weight slice."""
    K = K or build_KA(n, N)
    lhs = apply_Uplus(K.value, offset=0, n=n)
    rhs = build_0F0(n, N).value.scale(t_factorial(n))
    return _compare_slices("U+ K_A = [n]_t! 0F0", lhs, rhs, n, [(m, m) for m in range(N + 1)])
