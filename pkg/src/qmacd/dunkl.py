"""q-Dunkl operators, the raising/lowering pair Phi_q and its hat, and E_{0,m}."""

from __future__ import annotations

from functools import lru_cache

from .hecke import (
    T_INV_MINUS_ONE,
    apply_Iij_inv,
    apply_Tij_inv,
    apply_Yi,
    apply_omega,
    apply_word,
    tpow,
    _block,
    _extend,
)
from .polyring import (
    ContractError,
    NonDivisibleError,
    XPoly,
    _check_index,
    apply_qshift,
    apply_swap,
    divide_by_xi,
    exact_divide,
    multiply_by_xi,
)
from .qtfield import ONE, T

__all__ = [
    "DunklConsistencyError",
    "apply_Di",
    "apply_Di_alt",
    "apply_Di_interlaced",
    "apply_Di_conjugated",
    "apply_phi",
    "apply_phi_alt",
    "apply_phihat",
    "apply_phihat_alt",
    "apply_E0m",
]


class DunklConsistencyError(ArithmeticError):
    """x_i failed to divide the bracket of a q-Dunkl operator."""


def _divide(g: XPoly, i: int, offset: int) -> XPoly:
    try:
        return divide_by_xi(g, offset + i)
    except NonDivisibleError as exc:
        raise DunklConsistencyError(f"D_{i}: {exc}") from exc


def _di(f: XPoly, i: int, offset: int, n: int) -> XPoly:
    kw = dict(offset=offset, n=n)
    y = apply_Yi(f, i, **kw)
    bracket = y
    for j in range(i + 1, n + 1):
        bracket = bracket + apply_Tij_inv(y, i, j, **kw).scale(T_INV_MINUS_ONE * tpow(j - i))
    return _divide(f - bracket.scale(tpow(n - 1)), i, offset)


@lru_cache(maxsize=None)
def _di_image(e: tuple, i: int, offset: int, n: int) -> tuple:
    return tuple(_di(XPoly._raw(len(e), {e: ONE}), i, offset, n).terms.items())


def apply_Di(f: XPoly, i: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """D_i = x_i^{-1}(1 - t^{n-1}[1 + (t^{-1}-1) sum_{j>i} t^{j-i} T_{ij}^{-1}] Y_i)."""
    n = _block(f, offset, n)
    _check_index(i, n)
    return _extend(f, lambda e: _di_image(e, i, offset, n))


def apply_Di_alt(f: XPoly, i: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """x_i^{-1}(1 - t^{n-1} T_i^{-1}...T_{n-1}^{-1} omega T_1^{-1}...T_{i-1}^{-1})."""
    n = _block(f, offset, n)
    _check_index(i, n)
    kw = dict(offset=offset, n=n)
    g = apply_word(f, range(1, i), inverse=True, **kw)
    g = apply_omega(g, **kw)
    g = apply_word(g, range(i, n), inverse=True, **kw)
    return _divide(f - g.scale(tpow(n - 1)), i, offset)


def apply_Di_interlaced(f: XPoly, i: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """x_i^{-1}(1 - t^{2n-i-1} I_{i,n-1}^{-1} Y_i)."""
    n = _block(f, offset, n)
    _check_index(i, n)
    kw = dict(offset=offset, n=n)
    g = apply_Iij_inv(apply_Yi(f, i, **kw), i, n - 1, **kw)
    return _divide(f - g.scale(tpow(2 * n - i - 1)), i, offset)


def apply_Di_conjugated(f: XPoly, i: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """t^{i-n} T_i...T_{n-1} D_n T_{n-1}...T_i, with D_n = x_n^{-1}(1 - t^{n-1} Y_n)."""
    n = _block(f, offset, n)
    _check_index(i, n)
    kw = dict(offset=offset, n=n)
    g = apply_word(f, range(n - 1, i - 1, -1), **kw)
    g = _divide(g - apply_Yi(g, n, **kw).scale(tpow(n - 1)), n, offset)
    g = apply_word(g, range(i, n), **kw)
    return g.scale(tpow(i - n))


def apply_phi(f: XPoly, *, offset: int = 0, n: int | None = None) -> XPoly:
    """Raising operator Phi_q = x_n T_{n-1}^{-1} ... T_1^{-1}."""
    n = _block(f, offset, n)
    g = apply_word(f, range(n - 1, 0, -1), inverse=True, offset=offset, n=n)
    return multiply_by_xi(g, offset + n)


def apply_phi_alt(f: XPoly, i: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """t^{i-n} T_{n-1} ... T_i x_i T_{i-1}^{-1} ... T_1^{-1}."""
    n = _block(f, offset, n)
    _check_index(i, n)
    kw = dict(offset=offset, n=n)
    g = apply_word(f, range(i - 1, 0, -1), inverse=True, **kw)
    g = multiply_by_xi(g, offset + i)
    g = apply_word(g, range(n - 1, i - 1, -1), **kw)
    return g.scale(tpow(i - n))


def apply_phihat(f: XPoly, *, offset: int = 0, n: int | None = None) -> XPoly:
    """Lowering operator T_1 T_2 ... T_{n-1} D_n."""
    n = _block(f, offset, n)
    kw = dict(offset=offset, n=n)
    return apply_word(apply_Di(f, n, **kw), range(1, n), **kw)


def apply_phihat_alt(f: XPoly, i: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """t^{n-i} T_1 ... T_{i-1} D_i T_i^{-1} ... T_{n-1}^{-1}."""
    n = _block(f, offset, n)
    _check_index(i, n)
    kw = dict(offset=offset, n=n)
    g = apply_word(f, range(i, n), inverse=True, **kw)
    g = apply_Di(g, i, **kw)
    g = apply_word(g, range(1, i), **kw)
    return g.scale(tpow(n - i))


def _is_symmetric(f: XPoly, lo: int, hi: int) -> bool:
    return all(apply_swap(f, k, k + 1) == f for k in range(lo, hi))


def apply_E0m(f: XPoly, m: int) -> XPoly:
    """(1-q) E_{0,m} f = sum_{i=m}^n A_{i,m} (1 - tau_i) f / x_i.

    A_{i,m} = prod_{j>=m, j != i} (t x_i - x_j)/(x_i - x_j).  The sum is
    formed over the common denominator prod_{m<=a<b<=n} (x_a - x_b) and
    divided exactly.
    """
    n = f.n
    _check_index(m, n)
    if not _is_symmetric(f, m, n):
        raise ContractError(f"E_0,{m} needs input symmetric in x_{m}..x_{n}")
    x = [None] + [XPoly.variable(n, k) for k in range(1, n + 1)]
    one = XPoly.constant(n)
    idx = range(m, n + 1)
    vandermonde = one
    for a in idx:
        for b in idx:
            if a < b:
                vandermonde = vandermonde * (x[a] - x[b])
    numerator = XPoly.zero(n)
    for i in idx:
        g = divide_by_xi(f - apply_qshift(f, i), i)
        if g.is_zero():
            continue
        # A_{i,m} * V == (-1)^{i-m} prod_{j != i}(t x_i - x_j) prod_{a<b; a,b != i}(x_a - x_b)
        factor = one
        for j in idx:
            if j != i:
                factor = factor * (x[i].scale(T) - x[j])
        for a in idx:
            for b in idx:
                if a < b and i not in (a, b):
                    factor = factor * (x[a] - x[b])
        if (i - m) % 2:
            factor = -factor
        numerator = numerator + factor * g
    try:
        return exact_divide(numerator, vandermonde)
    except NonDivisibleError as exc:
        raise DunklConsistencyError(f"E_0,{m}: inexact division ({exc})") from exc
