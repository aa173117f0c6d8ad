"""Polynomial representation of the type-A affine Hecke algebra.

Every operator acts on a block of consecutive variables of an
:class:`~qmacd.polyring.XPoly`.  By default the block is the whole ring;
``offset=n`` with ``n=n`` selects the y-variables of the doubled ring.
Variables outside the block are spectators.

Operator products are written in the usual left-to-right order and applied
right-to-left, e.g. ``Y_i = t^{i-n} T_i ... T_{n-1} omega T_1^{-1} ... T_{i-1}^{-1}``
applies ``T_{i-1}^{-1}`` first.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from .polyring import ContractError, XPoly, _acc, _check_index, apply_swap, exact_divide
from .qtfield import ONE, T, QtMonomial, QtScalar

__all__ = [
    "ReducedWord",
    "apply_Ti",
    "apply_Ti_inv",
    "apply_Tij",
    "apply_Tij_inv",
    "apply_Tij_inv_alt",
    "apply_Iij_inv",
    "apply_Iij_inv_expansion",
    "apply_omega",
    "apply_omega_inv",
    "apply_T0",
    "apply_T0_inv",
    "apply_T0_rational",
    "apply_Yi",
    "apply_Tw",
    "apply_Uplus",
    "apply_word",
    "reduced_words",
    "word_length_ok",
    "t_factorial",
    "tpow",
]

ReducedWord = tuple[int, ...]

T_INV = T.inverse()
ONE_MINUS_T = ONE - T
T_MINUS_ONE = T - ONE
T_INV_MINUS_ONE = T_INV - ONE


@lru_cache(maxsize=None)
def tpow(k: int) -> QtScalar:
    return QtMonomial(0, k).scalar()


def _block(f: XPoly, offset: int, n: int | None) -> int:
    if n is None:
        n = f.n - offset
    if offset < 0 or n < 1 or offset + n > f.n:
        raise ContractError(f"block offset={offset}, n={n} does not fit {f.n} variables")
    return n


def _extend(f: XPoly, image: Callable) -> XPoly:
    """Linear extension of a cached monomial image ``exps -> ((exps, c), ...)``."""
    out: dict = {}
    for e, c in f.terms.items():
        for e2, k in image(e):
            _acc(out, e2, c * k)
    return XPoly._raw(f.n, out)


# -- T_i -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _ti_image(e: tuple, pos: int) -> tuple:
    """T_i on x^e where x_i sits at 0-based position ``pos``."""
    a, b = e[pos], e[pos + 1]

    def mono(ei, ej):
        out = list(e)
        out[pos], out[pos + 1] = ei, ej
        return tuple(out)

    if a == b:
        return ((e, T),)
    if a > b:
        terms = [(mono(j, a + b - j), ONE_MINUS_T) for j in range(b + 1, a)]
        terms.append((mono(b, a), ONE))
    else:
        terms = [(mono(j, a + b - j), T_MINUS_ONE) for j in range(a, b)]
        terms.append((mono(b, a), T))
    return tuple(terms)


@lru_cache(maxsize=None)
def _ti_inv_image(e: tuple, pos: int) -> tuple:
    # T_i^{-1} = (t^{-1} - 1) + t^{-1} T_i
    out = {e: T_INV_MINUS_ONE}
    for e2, c in _ti_image(e, pos):
        _acc(out, e2, c * T_INV)
    return tuple(out.items())


def _check_ti(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ContractError(f"Hecke generator index {i} out of range 1..{n - 1}")


def apply_Ti(f: XPoly, i: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """Demazure-Lusztig operator T_i, via its closed-form monomial action."""
    n = _block(f, offset, n)
    _check_ti(i, n)
    pos = offset + i - 1
    return _extend(f, lambda e: _ti_image(e, pos))


def apply_Ti_inv(f: XPoly, i: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    n = _block(f, offset, n)
    _check_ti(i, n)
    pos = offset + i - 1
    return _extend(f, lambda e: _ti_inv_image(e, pos))


def apply_word(f: XPoly, letters: Sequence[int], *, inverse: bool = False,
               offset: int = 0, n: int | None = None) -> XPoly:
    """Apply T_{l_1} T_{l_2} ... T_{l_p} (or the same word of inverses)."""
    op = apply_Ti_inv if inverse else apply_Ti
    for i in reversed(letters):
        f = op(f, i, offset=offset, n=n)
    return f


# -- omega -----------------------------------------------------------------


def apply_omega(f: XPoly, *, offset: int = 0, n: int | None = None) -> XPoly:
    """omega x^eta = q^{eta_1} x^{(eta_2, ..., eta_n, eta_1)}."""
    n = _block(f, offset, n)
    lo, hi = offset, offset + n
    out = {}
    for e, c in f.terms.items():
        first = e[lo]
        e2 = e[:lo] + e[lo + 1:hi] + (first,) + e[hi:]
        out[e2] = c * QtMonomial(first, 0).scalar() if first else c
    return XPoly._raw(f.n, out)


def apply_omega_inv(f: XPoly, *, offset: int = 0, n: int | None = None) -> XPoly:
    n = _block(f, offset, n)
    lo, hi = offset, offset + n
    out = {}
    for e, c in f.terms.items():
        last = e[hi - 1]
        e2 = e[:lo] + (last,) + e[lo:hi - 1] + e[hi:]
        out[e2] = c * QtMonomial(-last, 0).scalar() if last else c
    return XPoly._raw(f.n, out)


# -- T_0 -------------------------------------------------------------------


def apply_T0(f: XPoly, *, offset: int = 0, n: int | None = None) -> XPoly:
    """T_0 = omega T_1 omega^{-1}."""
    n = _block(f, offset, n)
    if n < 2:
        raise ContractError("T_0 needs at least two variables")
    kw = dict(offset=offset, n=n)
    return apply_omega(apply_Ti(apply_omega_inv(f, **kw), 1, **kw), **kw)


def apply_T0_inv(f: XPoly, *, offset: int = 0, n: int | None = None) -> XPoly:
    n = _block(f, offset, n)
    kw = dict(offset=offset, n=n)
    return apply_omega(apply_Ti_inv(apply_omega_inv(f, **kw), 1, **kw), **kw)


def apply_T0_rational(f: XPoly) -> XPoly:
    """T_0 from its defining rational expression, for cross-checking.

    t + (q t x_n - x_1)/(q x_n - x_1) (s_0 - 1) with s_0 = s_{1n} tau_1 tau_n^{-1};
    the division by q x_n - x_1 is exact.
    """
    n = f.n
    if n < 2:
        raise ContractError("T_0 needs at least two variables")
    s0f = {}
    for e, c in f.terms.items():
        k = e[0] - e[-1]
        _acc(s0f, e, c * QtMonomial(k, 0).scalar() if k else c)
    s0f = apply_swap(XPoly._raw(n, s0f), 1, n)
    diff = s0f - f
    qxn = XPoly.variable(n, n).scale(QtMonomial(1, 0).scalar())
    x1 = XPoly.variable(n, 1)
    quotient = exact_divide((qxn.scale(T) - x1) * diff, qxn - x1)
    return f.scale(T) + quotient


# -- Y_i -------------------------------------------------------------------


def _yi(f: XPoly, i: int, offset: int, n: int) -> XPoly:
    kw = dict(offset=offset, n=n)
    g = apply_word(f, range(1, i), inverse=True, **kw)
    g = apply_omega(g, **kw)
    g = apply_word(g, range(i, n), **kw)
    return g.scale(tpow(i - n))


@lru_cache(maxsize=None)
def _yi_image(e: tuple, i: int, offset: int, n: int) -> tuple:
    return tuple(_yi(XPoly._raw(len(e), {e: ONE}), i, offset, n).terms.items())


def apply_Yi(f: XPoly, i: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """Cherednik operator Y_i = t^{i-n} T_i...T_{n-1} omega T_1^{-1}...T_{i-1}^{-1}."""
    n = _block(f, offset, n)
    _check_index(i, n)
    return _extend(f, lambda e: _yi_image(e, i, offset, n))


# -- palindromic products --------------------------------------------------


def _check_pair(i: int, j: int, n: int) -> None:
    if not 1 <= i < j <= n:
        raise ContractError(f"need 1 <= i < j <= {n}, got i={i}, j={j}")


def _tij_letters(i: int, j: int) -> list[int]:
    # i, i+1, ..., j-1, j-2, ..., i
    return list(range(i, j)) + list(range(j - 2, i - 1, -1))


def apply_Tij_inv(f: XPoly, i: int, j: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """T_i^{-1} ... T_{j-2}^{-1} T_{j-1}^{-1} T_{j-2}^{-1} ... T_i^{-1}."""
    n = _block(f, offset, n)
    _check_pair(i, j, n)
    return apply_word(f, _tij_letters(i, j), inverse=True, offset=offset, n=n)


def apply_Tij_inv_alt(f: XPoly, i: int, j: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """The other factorisation T_{j-1}^{-1} ... T_i^{-1} ... T_{j-1}^{-1}."""
    n = _block(f, offset, n)
    _check_pair(i, j, n)
    letters = list(range(j - 1, i - 1, -1)) + list(range(i + 1, j))
    return apply_word(f, letters, inverse=True, offset=offset, n=n)


def apply_Tij(f: XPoly, i: int, j: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """T_i ... T_{j-1} ... T_i, the inverse of T_{ij}^{-1}."""
    n = _block(f, offset, n)
    _check_pair(i, j, n)
    return apply_word(f, _tij_letters(i, j), offset=offset, n=n)


def _check_iij(i: int, j: int, n: int) -> None:
    if not (1 <= i and i - 1 <= j <= n - 1):
        raise ContractError(f"need 1 <= i, i-1 <= j <= {n - 1}, got i={i}, j={j}")


def apply_Iij_inv(f: XPoly, i: int, j: int, *, offset: int = 0, n: int | None = None) -> XPoly:
    """T_i^{-1} ... T_j^{-1} T_j^{-1} ... T_i^{-1}; the identity when j = i - 1."""
    n = _block(f, offset, n)
    _check_iij(i, j, n)
    letters = list(range(i, j + 1)) + list(range(j, i - 1, -1))
    return apply_word(f, letters, inverse=True, offset=offset, n=n)


def apply_Iij_inv_expansion(f: XPoly, i: int, j: int, *, offset: int = 0,
                            n: int | None = None) -> XPoly:
    """t^{i-j-1} + (t^{-1}-1) sum_{p=i+1}^{j+1} t^{p-j-1} T_{ip}^{-1}."""
    n = _block(f, offset, n)
    _check_iij(i, j, n)
    out = f.scale(tpow(i - j - 1))
    for p in range(i + 1, j + 2):
        g = apply_Tij_inv(f, i, p, offset=offset, n=n)
        out = out + g.scale(T_INV_MINUS_ONE * tpow(p - j - 1))
    return out


# -- words and the symmetriser ----------------------------------------------


def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def word_length_ok(word: Sequence[int], n: int) -> bool:
    """True iff the word is a reduced decomposition of its permutation."""
    perm = list(range(n))
    for i in word:
        if not 1 <= i <= n - 1:
            return False
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return _inversions(perm) == len(word)


@lru_cache(maxsize=None)
def reduced_words(n: int) -> dict[tuple[int, ...], ReducedWord]:
    """One reduced word per permutation of S_n (one-line notation keys).

    Built breadth-first by left multiplication w -> s_i w, trying i in
    increasing order, so each word is the lexicographically least among
    those found first at its length.
    """
    ident = tuple(range(1, n + 1))
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, n):
                # s_i w swaps the values i and i+1 in one-line notation
                w2 = tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)
                if w2 in words or _inversions(w2) != _inversions(w) + 1:
                    continue
                words[w2] = (i,) + words[w]
                nxt.append(w2)
        frontier = nxt
    return words


def apply_Tw(f: XPoly, word: Sequence[int], *, offset: int = 0, n: int | None = None) -> XPoly:
    """T_w = T_{i_1} ... T_{i_p} for a reduced word (i_1, ..., i_p)."""
    n = _block(f, offset, n)
    assert word_length_ok(word, n), f"word {tuple(word)} is not reduced"
    return apply_word(f, word, offset=offset, n=n)


def apply_Uplus(f: XPoly, *, offset: int = 0, n: int | None = None) -> XPoly:
    """U^+ = sum over S_n of T_w.

    Uses T_{s_i w} = T_i T_w whenever s_i w is longer than w, so each
    permutation costs a single T_i application.
    """
    n = _block(f, offset, n)
    words = reduced_words(n)
    images = {tuple(range(1, n + 1)): f}
    total = f
    for w, word in sorted(words.items(), key=lambda kv: (len(kv[1]), kv[1])):
        if not word:
            continue
        i = word[0]
        prev = tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)
        img = apply_Ti(images[prev], i, offset=offset, n=n)
        images[w] = img
        total = total + img
    return total


def t_factorial(n: int) -> QtScalar:
    """[n]_t! = prod_{i=1}^n (1 - t^i)/(1 - t) = sum over S_n of t^{length}."""
    total = ONE
    for i in range(2, n + 1):
        total = total * sum((tpow(k) for k in range(1, i)), ONE)
    return total
