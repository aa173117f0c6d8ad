"""Verification suites for the operator identities.

Operator identities are checked by applying both sides to every monomial
of degree <= D.  All operators involved are graded, so this is a genuine
check on that finite-dimensional subspace.  Identities with x_k^{-1}
factors are multiplied through by the offending variables and applied to
inputs divisible by x_n, so every intermediate stays polynomial.
"""

from __future__ import annotations

import random
import time
from typing import Callable, Iterable

from .checks import CheckResult, check_on_inputs, first_difference
from .dunkl import (
    apply_Di,
    apply_Di_alt,
    apply_Di_conjugated,
    apply_Di_interlaced,
    apply_E0m,
    apply_phi,
    apply_phi_alt,
    apply_phihat,
    apply_phihat_alt,
)
from .hecke import (
    T_INV,
    T_INV_MINUS_ONE,
    apply_Iij_inv,
    apply_Iij_inv_expansion,
    apply_omega,
    apply_omega_inv,
    apply_T0,
    apply_T0_inv,
    apply_T0_rational,
    apply_Ti,
    apply_Ti_inv,
    apply_Tij,
    apply_Tij_inv,
    apply_Tij_inv_alt,
    apply_Tw,
    apply_Uplus,
    apply_word,
    apply_Yi,
    t_factorial,
    tpow,
    word_length_ok,
)
from .kernel import build_KA, check_prop54, check_theorem52
from .macdonald import (
    a_eta,
    composition_stats,
    delta,
    etabar,
    nonsym_macdonald,
    nonsym_macdonald_oracle,
    phi_composition,
    phihat_composition,
    symmetric_macdonald,
    ti_on_E,
    tinv_on_E,
)
from .polyring import (
    XPoly,
    apply_swap,
    compositions_upto,
    monomial_symmetric,
    multiply_by_xi,
    partition_of,
    partitions,
    prec_order,
)
from .qtfield import ONE, Q, T, QtMonomial

__all__ = ["SUITES", "run_suite", "monomial_inputs", "printed_forms"]

Inputs = list[tuple[tuple[int, ...], XPoly]]


def monomial_inputs(n: int, D: int, sample: int | None = None, seed: int = 0) -> Inputs:
    """Monomials of degree <= D in n variables, in increasing degree."""
    exps = compositions_upto(n, D)
    if sample is not None and sample < len(exps):
        picked = set(random.Random(seed).sample(range(len(exps)), sample))
        exps = [e for k, e in enumerate(exps) if k in picked]
    return [(e, XPoly.monomial(e)) for e in exps]


def _multiples_of_xn(inputs: Inputs, n: int) -> Inputs:
    """x_n * g for each input g, labelled by the exponent of x_n g."""
    out = []
    for e, g in inputs:
        f = multiply_by_xi(g, n)
        out.append((e[:-1] + (e[-1] + 1,), f))
    return out


def _timed(fn: Callable[[], CheckResult | list[CheckResult]]) -> list[CheckResult]:
    t0 = time.perf_counter()
    res = fn()
    dt = time.perf_counter() - t0
    res = res if isinstance(res, list) else [res]
    for r in res:
        r.seconds = dt / len(res)
    return res


def _zero(f: XPoly) -> XPoly:
    return XPoly.zero(f.n)


def _x(f: XPoly, k: int) -> XPoly:
    return multiply_by_xi(f, k)


def _coefficient_check(name: str, cases: Iterable[tuple[object, object, object]]) -> CheckResult:
    """Compare scalar pairs; each case is (label, lhs, rhs)."""
    count = 0
    for label, a, b in cases:
        count += 1
        if a != b:
            return CheckResult(name, False, count,
                               counterexample={"input": _label(label), "lhs": str(a), "rhs": str(b)})
    return CheckResult(name, True, count)


def _poly_check(name: str, cases: Iterable[tuple[object, XPoly, XPoly]]) -> CheckResult:
    count = 0
    for label, a, b in cases:
        count += 1
        diff = first_difference(a, b)
        if diff is not None:
            return CheckResult(name, False, count, counterexample={"input": _label(label), **diff})
    return CheckResult(name, True, count)


def _label(x) -> object:
    if isinstance(x, tuple):
        return [_label(v) for v in x]
    return x


# -- Hecke -----------------------------------------------------------------


def _all_reduced_words(n: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Every reduced word of every permutation, grouped by permutation."""
    by_perm: dict = {}
    longest = n * (n - 1) // 2

    def extend(word):
        if word_length_ok(word, n):
            perm = list(range(n))
            for i in word:
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
            by_perm.setdefault(tuple(perm), []).append(tuple(word))
            if len(word) < longest:
                for i in range(1, n):
                    extend(word + [i])

    extend([])
    return by_perm


def hecke_suite(n: int, D: int, inputs: Inputs | None = None) -> list[CheckResult]:
    mons = inputs if inputs is not None else monomial_inputs(n, D)
    res: list[CheckResult] = []

    def add(name, lhs, rhs, inp=mons):
        res.extend(_timed(lambda: check_on_inputs(f"{name} [n={n}]", lhs, rhs, inp)))

    for i in range(1, n):
        add(f"quadratic (T_{i}-t)(T_{i}+1)=0",
            lambda f, i=i: (lambda g: apply_Ti(g, i) - g.scale(T))(apply_Ti(f, i) + f), _zero)
        add(f"T_{i}^-1 T_{i} = 1", lambda f, i=i: apply_Ti_inv(apply_Ti(f, i), i), lambda f: f)
        add(f"T_{i} T_{i}^-1 = 1", lambda f, i=i: apply_Ti(apply_Ti_inv(f, i), i), lambda f: f)
        add(f"T_{i}^-1 = t^-1 - 1 + t^-1 T_{i}",
            lambda f, i=i: apply_Ti_inv(f, i),
            lambda f, i=i: f.scale(T_INV_MINUS_ONE) + apply_Ti(f, i).scale(T_INV))
    for i in range(1, n - 1):
        add(f"braid T_{i}T_{i + 1}T_{i}", lambda f, i=i: apply_word(f, [i, i + 1, i]),
            lambda f, i=i: apply_word(f, [i + 1, i, i + 1]))
    for i in range(1, n):
        for j in range(i + 2, n):
            add(f"commute T_{i}T_{j}", lambda f, i=i, j=j: apply_word(f, [i, j]),
                lambda f, i=i, j=j: apply_word(f, [j, i]))
    if n >= 2:
        add("quadratic (T_0-t)(T_0+1)=0",
            lambda f: (lambda g: apply_T0(g) - g.scale(T))(apply_T0(f) + f), _zero)
        add("T_0 = omega T_1 omega^-1 matches rational form", apply_T0, apply_T0_rational)
        add("T_0 T_0^-1 = 1", lambda f: apply_T0(apply_T0_inv(f)), lambda f: f)
        add("omega T_1 = T_0 omega", lambda f: apply_omega(apply_Ti(f, 1)),
            lambda f: apply_T0(apply_omega(f)))
    add("omega^-1 omega = 1", lambda f: apply_omega_inv(apply_omega(f)), lambda f: f)
    for i in range(2, n):
        add(f"omega T_{i} = T_{i - 1} omega", lambda f, i=i: apply_omega(apply_Ti(f, i)),
            lambda f, i=i: apply_Ti(apply_omega(f), i - 1))
    for i in range(1, n):
        add(f"T_{i}^-1 x_{i + 1} = t^-1 x_{i} T_{i}",
            lambda f, i=i: apply_Ti_inv(_x(f, i + 1), i),
            lambda f, i=i: _x(apply_Ti(f, i), i).scale(T_INV))
        add(f"T_{i}^-1 x_{i} = x_{i + 1} T_{i}^-1 + (t^-1-1) x_{i}",
            lambda f, i=i: apply_Ti_inv(_x(f, i), i),
            lambda f, i=i: _x(apply_Ti_inv(f, i), i + 1) + _x(f, i).scale(T_INV_MINUS_ONE))
        add(f"T_{i} x_{i} = t x_{i + 1} T_{i}^-1",
            lambda f, i=i: apply_Ti(_x(f, i), i),
            lambda f, i=i: _x(apply_Ti_inv(f, i), i + 1).scale(T))
        add(f"T_{i} x_{i + 1} = x_{i} T_{i} + (t-1) x_{i + 1}",
            lambda f, i=i: apply_Ti(_x(f, i + 1), i),
            lambda f, i=i: _x(apply_Ti(f, i), i) + _x(f, i + 1).scale(T - ONE))
        add(f"omega x_{i + 1} = x_{i} omega",
            lambda f, i=i: apply_omega(_x(f, i + 1)), lambda f, i=i: _x(apply_omega(f), i))
    add("omega x_1 = q x_n omega", lambda f: apply_omega(_x(f, 1)),
        lambda f: _x(apply_omega(f), n).scale(Q))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            add(f"[Y_{i},Y_{j}]=0", lambda f, i=i, j=j: apply_Yi(apply_Yi(f, j), i),
                lambda f, i=i, j=j: apply_Yi(apply_Yi(f, i), j))
    for i in range(1, n):
        add(f"T_{i} Y_{i + 1} T_{i} = t Y_{i}",
            lambda f, i=i: apply_Ti(apply_Yi(apply_Ti(f, i), i + 1), i),
            lambda f, i=i: apply_Yi(f, i).scale(T))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                add(f"[T_{i},Y_{j}]=0", lambda f, i=i, j=j: apply_Ti(apply_Yi(f, j), i),
                    lambda f, i=i, j=j: apply_Yi(apply_Ti(f, i), j))
        add(f"T_{i}^-1 Y_{i + 1} = (t^-1-1) Y_{i + 1} + Y_{i} T_{i}^-1",
            lambda f, i=i: apply_Ti_inv(apply_Yi(f, i + 1), i),
            lambda f, i=i: apply_Yi(f, i + 1).scale(T_INV_MINUS_ONE) + apply_Yi(apply_Ti_inv(f, i), i))
    for i in range(1, n):
        add(f"Y_{i} x_n = x_n Y_{i} + t^(i-n)(1-t) x_n T_{i}..T_(n-2) omega T_1^-1..T_{i - 1}^-1", lambda f, i=i: apply_Yi(_x(f, n), i),
            lambda f, i=i: _yx_rhs(f, i, n, printed=False))
    add("Y_n x_n = q t^{1-n} x_n omega T_1..T_{n-1}",
        lambda f: apply_Yi(_x(f, n), n),
        lambda f: _x(apply_omega(apply_word(f, range(1, n))), n).scale(Q * tpow(1 - n)))
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            add(f"T_{i}{j}^-1 factorisations agree", lambda f, i=i, j=j: apply_Tij_inv(f, i, j),
                lambda f, i=i, j=j: apply_Tij_inv_alt(f, i, j))
            add(f"T_{i}{j} T_{i}{j}^-1 = 1", lambda f, i=i, j=j: apply_Tij(apply_Tij_inv(f, i, j), i, j),
                lambda f: f)
        for j in range(i, n):
            add(f"I_{i}{j}^-1 expansion", lambda f, i=i, j=j: apply_Iij_inv(f, i, j),
                lambda f, i=i, j=j: apply_Iij_inv_expansion(f, i, j))
    for perm, words in sorted(_all_reduced_words(n).items()):
        for w in words[1:]:
            add(f"T_w reduced words agree {words[0]}~{w}", lambda f, a=words[0]: apply_Tw(f, a),
                lambda f, b=w: apply_Tw(f, b))
    for i in range(1, n):
        add(f"T_{i} U+ = t U+", lambda f, i=i: apply_Ti(apply_Uplus(f), i),
            lambda f: apply_Uplus(f).scale(T))
    res.append(_timed(lambda: _poly_check(f"U+ 1 = [n]_t! [n={n}]",
                                          [((), apply_Uplus(XPoly.constant(n)),
                                            XPoly.constant(n, t_factorial(n)))]))[0])
    return res


def _yx_rhs(f: XPoly, i: int, n: int, printed: bool) -> XPoly:
    # Y_i x_n = x_n Y_i + t^{i-n}(1-t) x_n T_i..T_{n-2} omega T_1^-1..T_{i-1}^-1.
    # The printed variant has t^{1-n} and runs the T word up to T_{n-1}.
    g = apply_omega(apply_word(f, range(1, i), inverse=True))
    if printed:
        g, c = apply_word(g, range(i, n)), tpow(1 - n)
    else:
        g, c = apply_word(g, range(i, n - 1)), tpow(i - n)
    return _x(apply_Yi(f, i), n) + _x(g, n).scale(c * (ONE - T))


# -- Macdonald polynomials ------------------------------------------------


def macdonald_suite(n: int, D: int) -> list[CheckResult]:
    etas = compositions_upto(n, D)
    res: list[CheckResult] = []

    def add(fn):
        res.extend(_timed(fn))

    add(lambda: _poly_check(f"eigenvalue Y_i E = t^etabar_i E [n={n}]",
                            (((eta, i), apply_Yi(nonsym_macdonald(eta), i),
                              nonsym_macdonald(eta).scale(lam.scalar()))
                             for eta in etas for i, lam in enumerate(etabar(eta), 1))))

    def triangular():
        count = 0
        for eta in etas:
            count += 1
            e = nonsym_macdonald(eta)
            if not e.coeff(eta).is_one():
                return CheckResult(f"triangularity [n={n}]", False, count,
                                   counterexample={"input": list(eta), "leading": str(e.coeff(eta))})
            for nu in e.terms:
                if nu != eta and not prec_order(nu, eta):
                    return CheckResult(f"triangularity [n={n}]", False, count,
                                       counterexample={"input": list(eta), "monomial": list(nu)})
        return CheckResult(f"triangularity [n={n}]", True, count)

    add(triangular)
    add(lambda: _poly_check(f"recursion = eigen-solve oracle [n={n}]",
                            ((eta, nonsym_macdonald(eta), nonsym_macdonald_oracle(eta)) for eta in etas)))

    def swapped(eta, i):
        e = list(eta)
        e[i - 1], e[i] = e[i], e[i - 1]
        return tuple(e)

    def action_cases(op, coeffs):
        for eta in etas:
            for i in range(1, n):
                a, b = coeffs(eta, i)
                rhs = nonsym_macdonald(eta).scale(a) + nonsym_macdonald(swapped(eta, i)).scale(b)
                yield (eta, i), op(nonsym_macdonald(eta), i), rhs

    add(lambda: _poly_check(f"action1 T_i E_eta [n={n}]", action_cases(apply_Ti, ti_on_E)))
    add(lambda: _poly_check(f"action2 T_i^-1 E_eta [n={n}]", action_cases(apply_Ti_inv, tinv_on_E)))
    add(lambda: coefficient_ratio_checks(n, etas))
    return res


def coefficient_ratio_checks(n: int, etas) -> list[CheckResult]:
    st = composition_stats
    qtn = QtMonomial(1, n)
    r1 = _coefficient_check(f"d_Phi/d = 1-q t^(n+etabar_1) [n={n}]",
                            ((eta, st(phi_composition(eta)).d / st(eta).d,
                              ONE - (qtn * etabar(eta)[0]).scalar()) for eta in etas))
    r2 = _coefficient_check(f"e_Phi/e = 1-q t^(n+etabar_1) [n={n}]",
                            ((eta, st(phi_composition(eta)).e / st(eta).e,
                              ONE - (qtn * etabar(eta)[0]).scalar()) for eta in etas))
    r3 = _coefficient_check(f"d'_Phi/d' = 1-q t^(n-1+etabar_1) [n={n}]",
                            ((eta, st(phi_composition(eta)).dprime / st(eta).dprime,
                              ONE - (QtMonomial(1, n - 1) * etabar(eta)[0]).scalar()) for eta in etas))

    def swapped(eta, i):
        e = list(eta)
        e[i - 1], e[i] = e[i], e[i - 1]
        return tuple(e)

    r4 = _coefficient_check(f"e_(s_i eta) = e_eta [n={n}]",
                            (((eta, i), st(swapped(eta, i)).e, st(eta).e)
                             for eta in etas for i in range(1, n)))
    desc = [(eta, i) for eta in etas for i in range(1, n) if eta[i - 1] > eta[i]]

    def one_minus(m):
        return ONE - m.scalar()

    r5 = _coefficient_check(f"d_(s_i eta)/d_eta [n={n}]",
                            (((eta, i), st(swapped(eta, i)).d / st(eta).d,
                              one_minus(delta(eta, i) * QtMonomial(0, 1)) / one_minus(delta(eta, i)))
                             for eta, i in desc))
    r6 = _coefficient_check(f"d'_(s_i eta)/d'_eta [n={n}]",
                            (((eta, i), st(swapped(eta, i)).dprime / st(eta).dprime,
                              one_minus(delta(eta, i)) / one_minus(delta(eta, i) * QtMonomial(0, -1)))
                             for eta, i in desc))
    return [r1, r2, r3, r4, r5, r6]


# -- raising / lowering -----------------------------------------------------


def raising_suite(n: int, D: int, inputs: Inputs | None = None) -> list[CheckResult]:
    mons = inputs if inputs is not None else monomial_inputs(n, D)
    res: list[CheckResult] = []

    def add(name, lhs, rhs, inp=mons):
        res.extend(_timed(lambda: check_on_inputs(f"{name} [n={n}]", lhs, rhs, inp)))

    for j in range(1, n):
        add(f"Y_{j} Phi = Phi Y_{j + 1}", lambda f, j=j: apply_Yi(apply_phi(f), j),
            lambda f, j=j: apply_phi(apply_Yi(f, j + 1)))
    add("Y_n Phi = q Phi Y_1", lambda f: apply_Yi(apply_phi(f), n),
        lambda f: apply_phi(apply_Yi(f, 1)).scale(Q))
    for j in range(2, n + 1):
        add(f"Y_{j} Phihat = Phihat Y_{j - 1}", lambda f, j=j: apply_Yi(apply_phihat(f), j),
            lambda f, j=j: apply_phihat(apply_Yi(f, j - 1)))
    add("Y_1 Phihat = q^-1 Phihat Y_n", lambda f: apply_Yi(apply_phihat(f), 1),
        lambda f: apply_phihat(apply_Yi(f, n)).scale(Q.inverse()))
    for i in range(1, n + 1):
        add(f"Phi factorisation i={i}", apply_phi, lambda f, i=i: apply_phi_alt(f, i))
        add(f"Phihat factorisation i={i}", apply_phihat, lambda f, i=i: apply_phihat_alt(f, i))

    etas = compositions_upto(n, D)
    st = composition_stats

    def phi_cases():
        for eta in etas:
            k = sum(1 for v in eta[1:] if v <= eta[0])
            yield eta, apply_phi(nonsym_macdonald(eta)), nonsym_macdonald(phi_composition(eta)).scale(tpow(-k))

    def phihat_cases():
        for eta in etas:
            lhs = apply_phihat(nonsym_macdonald(eta))
            if eta[-1] == 0:
                yield eta, lhs, XPoly.zero(n)
                continue
            nu = phihat_composition(eta)
            k = sum(1 for v in eta if v < eta[-1])
            yield eta, lhs, nonsym_macdonald(nu).scale(tpow(k) * st(eta).dprime / st(nu).dprime)

    res.extend(_timed(lambda: _poly_check(f"Phi E_eta = t^-k E_(Phi eta) [n={n}]", phi_cases())))
    res.extend(_timed(lambda: _poly_check(f"Phihat E_eta = t^k d'_eta/d'_(Phihat eta) E_(Phihat eta) [n={n}]", phihat_cases())))
    return res


# -- q-Dunkl ---------------------------------------------------------------


def dunkl_suite(n: int, D: int, inputs: Inputs | None = None) -> list[CheckResult]:
    mons = inputs if inputs is not None else monomial_inputs(n, D)
    xn_mons = _multiples_of_xn(monomial_inputs(n, D - 1) if inputs is None else
                               [(e, f) for e, f in inputs if sum(e) < D], n) if D >= 1 else []
    res: list[CheckResult] = []

    def add(name, lhs, rhs, inp=mons):
        res.extend(_timed(lambda: check_on_inputs(f"{name} [n={n}]", lhs, rhs, inp)))

    D_ = apply_Di
    for i in range(1, n + 1):
        add(f"D_{i} = x_i^-1(1 - t^(n-1) T_i^-1..omega..)", lambda f, i=i: D_(f, i),
            lambda f, i=i: apply_Di_alt(f, i))
        add(f"D_{i} = x_i^-1(1 - t^(2n-i-1) I^-1 Y_i)", lambda f, i=i: D_(f, i),
            lambda f, i=i: apply_Di_interlaced(f, i))
        add(f"D_{i} = t^(i-n) T_i..T_(n-1) D_n T_(n-1)..T_i", lambda f, i=i: D_(f, i),
            lambda f, i=i: apply_Di_conjugated(f, i))
    for i in range(1, n):
        add(f"T_{i} D_{i + 1} = t D_{i} T_{i}^-1", lambda f, i=i: apply_Ti(D_(f, i + 1), i),
            lambda f, i=i: D_(apply_Ti_inv(f, i), i).scale(T))
        add(f"T_{i} D_{i} = D_{i + 1} T_{i} + (t-1) D_{i}", lambda f, i=i: apply_Ti(D_(f, i), i),
            lambda f, i=i: D_(apply_Ti(f, i), i + 1) + D_(f, i).scale(T - ONE))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                add(f"[T_{i},D_{j}]=0", lambda f, i=i, j=j: apply_Ti(D_(f, j), i),
                    lambda f, i=i, j=j: D_(apply_Ti(f, i), j))
    for i in range(1, n):
        add(f"omega D_{i + 1} = D_{i} omega", lambda f, i=i: apply_omega(D_(f, i + 1)),
            lambda f, i=i: D_(apply_omega(f), i))
    add("q omega D_1 = D_n omega", lambda f: apply_omega(D_(f, 1)).scale(Q),
        lambda f: D_(apply_omega(f), n))
    if n >= 2:
        add("T_0 D_1 = q^-1 t D_n T_0^-1", lambda f: apply_T0(D_(f, 1)),
            lambda f: D_(apply_T0_inv(f), n).scale(T / Q))
        add("T_0 D_n = q D_1 T_0 + (t-1) D_n", lambda f: apply_T0(D_(f, n)),
            lambda f: D_(apply_T0(f), 1).scale(Q) + D_(f, n).scale(T - ONE))
        for i in range(2, n):
            add(f"[T_0,D_{i}]=0", lambda f, i=i: apply_T0(D_(f, i)),
                lambda f, i=i: D_(apply_T0(f), i))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j:
                add(f"[D_{i},Y_{j}] = c Y T D", lambda f, i=i, j=j: D_(apply_Yi(f, j), i) - apply_Yi(D_(f, i), j),
                    lambda f, i=i, j=j: apply_Yi(apply_Tij(D_(f, j), i, j), j).scale(tpow(i - j) * (ONE - T)))
            elif i > j:
                add(f"[D_{i},Y_{j}] = c Y T D", lambda f, i=i, j=j: D_(apply_Yi(f, j), i) - apply_Yi(D_(f, i), j),
                    lambda f, i=i, j=j: apply_Yi(apply_Tij(D_(f, i), j, i), i).scale(tpow(j - i) * (ONE - T)))

        def dy_same_rhs(f, i=i):
            out = XPoly.zero(n)
            for p in range(i + 1, n + 1):
                out = out + apply_Yi(apply_Tij(D_(f, p), i, p), p).scale((T - ONE) * tpow(i - p))
            inner = XPoly.zero(n)
            for p in range(1, i):
                inner = inner + apply_Tij(D_(f, i), p, i).scale(tpow(p - i))
            return out + apply_Yi(inner, i).scale(Q * (T - ONE))

        add(f"D_{i} Y_{i} - q Y_{i} D_{i}",
            lambda f, i=i: D_(apply_Yi(f, i), i) - apply_Yi(D_(f, i), i).scale(Q), dy_same_rhs)
    for i in range(1, n):
        # x_i [D_i, Y_n] = t^{n-i}(t^-1 - 1) T_in^-1 Y_i (1 - t^{n-1} Y_n)
        add(f"x_{i}[D_{i},Y_n]",
            lambda f, i=i: _x(D_(apply_Yi(f, n), i) - apply_Yi(D_(f, i), n), i),
            lambda f, i=i: _dy_rhs(f, i, n))
    for i in range(1, n):
        add(f"x_{i}x_n[D_{i},x_n^-1] (f = x_n g)",
            lambda f, i=i: _x(_x(D_(_div_xn(f, n), i), n), i) - _x(D_(f, i), i),
            lambda f, i=i: apply_Tij_inv(apply_Yi(f, i), i, n).scale(tpow(2 * n - i - 1) * T_INV_MINUS_ONE),
            xn_mons)
        add(f"x_{i}x_n Y_{i} x_n^-1 (f = x_n g)",
            lambda f, i=i: _x(_x(apply_Yi(_div_xn(f, n), i), n), i),
            lambda f, i=i: _x(apply_Yi(f, i), i)
            + _x(apply_Tij_inv(apply_Yi(f, i), i, n), n).scale(tpow(n - i - 1) * (T - ONE)),
            xn_mons)
        add(f"[T_{i}n^-1, x_n^-1] (f = x_n g)", lambda f, i=i: _tinv_xinv_lhs(f, i, n),
            lambda f, i=i: _tinv_xinv_rhs(f, i, n), xn_mons)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            add(f"[D_{i},D_{j}]=0", lambda f, i=i, j=j: D_(D_(f, j), i),
                lambda f, i=i, j=j: D_(D_(f, i), j))
    return res


def _div_xn(f: XPoly, n: int) -> XPoly:
    from .polyring import divide_by_xi
    return divide_by_xi(f, n)


def _mono_mul(f: XPoly, ks: Iterable[int]) -> XPoly:
    for k in ks:
        f = multiply_by_xi(f, k)
    return f


def _tinv_xinv_word(i: int, p: int, n: int) -> list[int]:
    # T_i^-1 .. T_{p-2}^-1 T_p^-1 .. T_{n-1}^-1 .. T_i^-1 (letter p-1 omitted on the way up)
    return list(range(i, p - 1)) + list(range(p, n)) + list(range(n - 2, i - 1, -1))


def _tinv_xinv_lhs(f: XPoly, i: int, n: int) -> XPoly:
    # M [T_in^-1, x_n^-1] f with M = x_i .. x_n
    others = range(i, n)
    g = _div_xn(f, n)
    return _mono_mul(apply_Tij_inv(g, i, n), range(i, n + 1)) - _mono_mul(apply_Tij_inv(f, i, n), others)


def _tinv_xinv_rhs(f: XPoly, i: int, n: int, printed: bool = False) -> XPoly:
    every = list(range(i, n + 1))

    def without(k):
        return [v for v in every if v != k]

    tf = apply_Tij_inv(f, i, n)
    out = _mono_mul(tf, without(i)) - _mono_mul(tf, without(n))
    # x_n^{-1} I_{i,n-2}^{-1}; the printed form reads I_{i,n-1}^{-1}
    inner = apply_Iij_inv(f, i, n - 1 if printed else n - 2)
    out = out + _mono_mul(inner, without(n)).scale(T_INV_MINUS_ONE)
    for p in range(i + 1, n):
        w = apply_word(f, _tinv_xinv_word(i, p, n), inverse=True)
        out = out + _mono_mul(w, without(p)).scale(T_INV_MINUS_ONE)
    return out


def _dy_rhs(f: XPoly, i: int, n: int, printed: bool = False) -> XPoly:
    # t^{n-i}(t^-1-1) T_in^-1 Y_i (1 - t^{n-1} Y_n); the printed form reads (1-t^{n-1}) Y_n
    if printed:
        g = apply_Yi(f, n).scale(ONE - tpow(n - 1))
    else:
        g = f - apply_Yi(f, n).scale(tpow(n - 1))
    return apply_Tij_inv(apply_Yi(g, i), i, n).scale(tpow(n - i) * T_INV_MINUS_ONE)


def printed_forms(n: int, D: int) -> list[CheckResult]:
    """The three identities in their literal printed form.

    These are expected to fail; each result carries the smallest
    counterexample, which documents the misprint.
    """
    mons = monomial_inputs(n, D)
    xn_mons = _multiples_of_xn(monomial_inputs(n, D - 1), n)
    res = []
    for i in range(1, n):
        res.append(check_on_inputs(f"printed Y_{i} x_n [n={n}]",
                                   lambda f, i=i: apply_Yi(_x(f, n), i),
                                   lambda f, i=i: _yx_rhs(f, i, n, printed=True), mons))
        res.append(check_on_inputs(f"printed x_{i}[D_{i},Y_n] [n={n}]",
                                   lambda f, i=i: _x(apply_Di(apply_Yi(f, n), i) - apply_Yi(apply_Di(f, i), n), i),
                                   lambda f, i=i: _dy_rhs(f, i, n, printed=True), mons))
        res.append(check_on_inputs(f"printed [T_{i}n^-1, x_n^-1] [n={n}]",
                                   lambda f, i=i: _tinv_xinv_lhs(f, i, n),
                                   lambda f, i=i: _tinv_xinv_rhs(f, i, n, printed=True), xn_mons))
    return res


# -- kernel ----------------------------------------------------------------


def e0m_checks(n: int, D: int) -> list[CheckResult]:
    res = []
    for m in range(1, n + 1):
        def cases(m=m):
            for d in range(D + 1):
                for lam in partitions(n, d):
                    f = monomial_symmetric(n, lam)
                    lhs = XPoly.zero(n)
                    for i in range(m, n + 1):
                        lhs = lhs + apply_Di(f, i)
                    yield lam, lhs, apply_E0m(f, m)

        res.extend(_timed(lambda: _poly_check(f"sum_(i>={m}) D_i = (1-q)E_0,{m} [n={n}]", cases())))
    return res


def kernel_suite(n: int, D: int) -> list[CheckResult]:
    res: list[CheckResult] = []
    t0 = time.perf_counter()
    K = build_KA(n, D)
    build_time = time.perf_counter() - t0
    for r in _timed(lambda: check_theorem52(K)):
        r.identity = f"{r.identity} [n={n},N={D}]"
        res.append(r)
    for r in _timed(lambda: check_prop54(n, D, K)):
        r.identity = f"{r.identity} [n={n},N={D}]"
        res.append(r)
    if res:
        res[0].seconds = (res[0].seconds or 0) + build_time
    res.extend(e0m_checks(n, D))
    return res


# -- U^+ and symmetric polynomials ---------------------------------------


def uplus_suite(n: int, D: int) -> list[CheckResult]:
    etas = compositions_upto(n, D)

    def uplus_cases():
        for eta in etas:
            yield eta, apply_Uplus(nonsym_macdonald(eta)), symmetric_macdonald(partition_of(eta)).scale(a_eta(eta))

    def bar_cases():
        for d in range(D + 1):
            for kappa in partitions(n, d):
                p = symmetric_macdonald(kappa)
                yield kappa, p.bar(), p

    def symmetric_cases():
        for d in range(D + 1):
            for kappa in partitions(n, d):
                p = symmetric_macdonald(kappa)
                for i in range(1, n):
                    yield (kappa, i), apply_swap(p, i, i + 1), p

    res = []
    res += _timed(lambda: _poly_check(f"U+ E_eta = a_eta P_eta+ [n={n}]", uplus_cases()))
    res += _timed(lambda: _poly_check(f"P_kappa(1/q,1/t) = P_kappa(q,t) [n={n}]", bar_cases()))
    res += _timed(lambda: _poly_check(f"P_kappa symmetric [n={n}]", symmetric_cases()))
    return res


SUITES: dict[str, Callable[[int, int], list[CheckResult]]] = {
    "hecke": hecke_suite,
    "macdonald": macdonald_suite,
    "raising": raising_suite,
    "dunkl": dunkl_suite,
    "kernel": kernel_suite,
    "uplus": uplus_suite,
}


def run_suite(name: str, n: int, D: int, sample: int | None = None, seed: int = 0) -> list[CheckResult]:
    fn = SUITES[name]
    if sample is not None and name in ("hecke", "raising", "dunkl"):
        return fn(n, D, monomial_inputs(n, D, sample, seed))
    return fn(n, D)
