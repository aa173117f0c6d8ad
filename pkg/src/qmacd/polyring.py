"""Sparse polynomials in x_1..x_n over Q(q, t), and compositions.

Variables are numbered from 1 in every public function, as in the usual
notation x_1, ..., x_n.  Exponent vectors are plain tuples.  The doubled
ring in (x, y) is just a polynomial in 2n variables whose last n variables
are the y's; operators acting on the y's take an ``offset``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, Iterator, Mapping

from .qtfield import ONE, T, ZERO, QtMonomial, QtScalar

__all__ = [
    "Composition",
    "ContractError",
    "NonDivisibleError",
    "XPoly",
    "as_composition",
    "weight",
    "partition_of",
    "is_partition",
    "dominance_less",
    "prec_order",
    "compositions",
    "compositions_upto",
    "partitions",
    "distinct_rearrangements",
    "monomial_symmetric",
    "apply_swap",
    "apply_qshift",
    "divide_by_xi",
    "multiply_by_xi",
    "principal_specialize",
    "bar_coeffs",
    "exact_divide",
]

Composition = tuple[int, ...]


class ContractError(ValueError):
    """A caller broke a precondition (bad index, mismatched lengths...)."""


class NonDivisibleError(ArithmeticError):
    """An exact division left a remainder."""


# -- compositions --------------------------------------------------------


def as_composition(entries: Iterable[int]) -> Composition:
    eta = tuple(int(e) for e in entries)
    if not eta:
        raise ContractError("a composition needs at least one entry")
    if any(e < 0 for e in eta):
        raise ContractError(f"negative entry in composition {eta}")
    return eta


def weight(eta: Composition) -> int:
    return sum(eta)


def partition_of(eta: Composition) -> Composition:
    """The decreasing rearrangement eta^+."""
    return tuple(sorted(eta, reverse=True))


def is_partition(eta: Composition) -> bool:
    return all(a >= b for a, b in zip(eta, eta[1:]))


def _check_comparable(nu: Composition, eta: Composition) -> None:
    if len(nu) != len(eta):
        raise ContractError(f"length mismatch: {nu} vs {eta}")
    if sum(nu) != sum(eta):
        raise ContractError(f"weight mismatch: {nu} vs {eta}")


def dominance_less(nu: Composition, eta: Composition) -> bool:
    """nu < eta in dominance order (strict)."""
    _check_comparable(nu, eta)
    if nu == eta:
        return False
    s = 0
    for a, b in zip(eta, nu):
        s += a - b
        if s < 0:
            return False
    return True


def prec_order(nu: Composition, eta: Composition) -> bool:
    """The strict order used for triangularity of E_eta.

    nu precedes eta if nu^+ < eta^+ in dominance, or nu^+ == eta^+ and
    nu < eta in dominance.
    """
    _check_comparable(nu, eta)
    nup, etap = partition_of(nu), partition_of(eta)
    if nup != etap:
        return dominance_less(nup, etap)
    return dominance_less(nu, eta)


def compositions(n: int, k: int) -> list[Composition]:
    """All compositions of length n and weight k, in lexicographic order."""
    if n == 1:
        return [(k,)]
    out = []
    for first in range(k + 1):
        for rest in compositions(n - 1, k - first):
            out.append((first,) + rest)
    return out


def compositions_upto(n: int, N: int) -> list[Composition]:
    """Compositions of length n with weight <= N, by weight then lex."""
    return [eta for k in range(N + 1) for eta in compositions(n, k)]


def partitions(n: int, k: int) -> list[Composition]:
    """Partitions of k with at most n parts, padded with zeros to length n."""
    return sorted({partition_of(eta) for eta in compositions(n, k)}, reverse=True)


def distinct_rearrangements(kappa: Composition) -> list[Composition]:
    return sorted(set(permutations(kappa)))


# -- polynomials ---------------------------------------------------------


def _acc(d: dict, key, c: QtScalar) -> None:
    old = d.get(key)
    if old is None:
        if not c.is_zero():
            d[key] = c
        return
    s = old + c
    if s.is_zero():
        del d[key]
    else:
        d[key] = s


class XPoly:
    """A sparse polynomial in n variables with Q(q,t) coefficients.

    Instances are treated as immutable; operations always build new ones.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Composition, object] | None = None):
        self.n = n
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ContractError(f"bad exponent vector {exps} for n={n}")
            c = QtScalar.coerce(c)
            if not c.is_zero():
                clean[exps] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "XPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "XPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c=1) -> "XPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exps: Iterable[int], c=1) -> "XPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "XPoly":
        _check_index(i, n)
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): ONE})

    # -- basic protocol -----------------------------------------------------

    def __iter__(self) -> Iterator[tuple[Composition, QtScalar]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Iterable[int]) -> QtScalar:
        return self.terms.get(tuple(exps), ZERO)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"XPoly({self.n}, {self.to_string()!r})"

    def __str__(self) -> str:
        return self.to_string()

    # -- arithmetic ---------------------------------------------------------

    def _same_ring(self, other: "XPoly") -> None:
        if self.n != other.n:
            raise ContractError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        self._same_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _acc(out, e, c)
        return XPoly._raw(self.n, out)

    def __neg__(self) -> "XPoly":
        return XPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        self._same_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _acc(out, e, -c)
        return XPoly._raw(self.n, out)

    def scale(self, c) -> "XPoly":
        c = QtScalar.coerce(c)
        if c.is_zero():
            return XPoly.zero(self.n)
        if c.is_one():
            return self
        return XPoly._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, XPoly):
            self._same_ring(other)
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    _acc(out, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
            return XPoly._raw(self.n, out)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other) -> "XPoly":
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def shift(self, exps: Iterable[int]) -> "XPoly":
        """Multiply by the monomial x^exps (non-negative exponents)."""
        exps = tuple(exps)
        return XPoly._raw(self.n, {tuple(a + b for a, b in zip(e, exps)): c
                                   for e, c in self.terms.items()})

    def map_coeffs(self, fn: Callable[[QtScalar], QtScalar]) -> "XPoly":
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                out[e] = v
        return XPoly._raw(self.n, out)

    def map_exps(self, fn: Callable[[Composition], tuple[Composition, QtScalar]]) -> "XPoly":
        """Linear extension of a monomial map ``exps -> (new_exps, factor)``."""
        out: dict = {}
        for e, c in self.terms.items():
            e2, f = fn(e)
            _acc(out, e2, c * f)
        return XPoly._raw(self.n, out)

    def select(self, pred: Callable[[Composition], bool]) -> "XPoly":
        return XPoly._raw(self.n, {e: c for e, c in self.terms.items() if pred(e)})

    def homogeneous(self, d: int) -> "XPoly":
        return self.select(lambda e: sum(e) == d)

    def embed(self, total: int, offset: int = 0) -> "XPoly":
        """Place these variables at positions offset+1.. of a larger ring."""
        if offset + self.n > total:
            raise ContractError("embedding does not fit")
        pad_l, pad_r = (0,) * offset, (0,) * (total - offset - self.n)
        return XPoly._raw(total, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    def bar(self) -> "XPoly":
        return self.map_coeffs(QtScalar.bar)

    def eval(self, xs: Iterable, q0, t0) -> Fraction:
        xs = [Fraction(x) for x in xs]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c.eval(q0, t0)
            for x, k in zip(xs, e):
                v *= x ** k
            total += v
        return total

    # -- printing -----------------------------------------------------------

    def to_string(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.n)]
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(names, e) if k)
            if not mono:
                body = str(c)
            elif c.is_one():
                body = mono
            elif (-c).is_one():
                body = "-" + mono
            elif c.den.is_one() and len(c.num) == 1:
                body = f"{c}*{mono}"
            else:
                body = f"({c})*{mono}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def to_latex(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x_{{{i + 1}}}" for i in range(self.n)]
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = " ".join(v if k == 1 else f"{v}^{{{k}}}" for v, k in zip(names, e) if k)
            if not mono:
                body = c.latex()
            elif c.is_one():
                body = mono
            elif (-c).is_one():
                body = "-" + mono
            elif c.den.is_one() and len(c.num) == 1:
                body = f"{c.latex()} {mono}"
            elif c.den.is_one():
                body = f"({c.latex()}) {mono}"
            else:
                body = f"{c.latex()} {mono}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") and not p.startswith(r"-\frac") else (" + " + p)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"exp": list(e), "coeff": c.to_json()} for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "XPoly":
        n = int(obj["n"])
        terms = {tuple(t["exp"]): QtScalar.from_json(t["coeff"]) for t in obj["terms"]}
        return cls(n, terms)


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ContractError(f"variable index {i} out of range 1..{n}")


# -- elementary variable actions -------------------------------------------


def apply_swap(f: XPoly, i: int, j: int) -> XPoly:
    """Interchange x_i and x_j."""
    _check_index(i, f.n)
    _check_index(j, f.n)
    if i == j:
        return f
    a, b = i - 1, j - 1

    def swap(e):
        e = list(e)
        e[a], e[b] = e[b], e[a]
        return tuple(e)

    return XPoly._raw(f.n, {swap(e): c for e, c in f.terms.items()})


def apply_qshift(f: XPoly, i: int, power: int = 1) -> XPoly:
    """x_i -> q**power * x_i."""
    _check_index(i, f.n)
    a = i - 1
    return XPoly._raw(f.n, {e: c * QtMonomial(power * e[a], 0).scalar() if e[a] else c
                            for e, c in f.terms.items()})


def multiply_by_xi(f: XPoly, i: int) -> XPoly:
    _check_index(i, f.n)
    shift = [0] * f.n
    shift[i - 1] = 1
    return f.shift(shift)


def divide_by_xi(f: XPoly, i: int) -> XPoly:
    """Exact quotient f / x_i; every term must contain x_i."""
    _check_index(i, f.n)
    a = i - 1
    out = {}
    for e, c in f.terms.items():
        if e[a] == 0:
            raise NonDivisibleError(f"term with exponent {e} is not divisible by x{i}")
        e2 = list(e)
        e2[a] -= 1
        out[tuple(e2)] = c
    return XPoly._raw(f.n, out)


def principal_specialize(f: XPoly) -> QtScalar:
    """Evaluate at x_i = t^(i-1)."""
    total = ZERO
    for e, c in f.terms.items():
        k = sum(i * ei for i, ei in enumerate(e))
        total = total + c * (T ** k if k else ONE)
    return total


def bar_coeffs(f: XPoly) -> XPoly:
    return f.bar()


def monomial_symmetric(n: int, lam: Iterable[int]) -> XPoly:
    """The monomial symmetric polynomial m_lambda in n variables."""
    lam = tuple(lam) + (0,) * (n - len(tuple(lam)))
    if len(lam) != n:
        raise ContractError(f"partition {lam} has more than {n} parts")
    return XPoly(n, {eta: ONE for eta in distinct_rearrangements(lam)})


def exact_divide(f: XPoly, g: XPoly) -> XPoly:
    """Exact quotient f / g by multivariate division in lex order."""
    f._same_ring(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead = max(g.terms)
    lc = g.terms[lead]
    rem = dict(f.terms)
    quot: dict = {}
    while rem:
        top = max(rem)
        if any(a < b for a, b in zip(top, lead)):
            raise NonDivisibleError(f"leading monomial {top} not divisible by {lead}")
        m = tuple(a - b for a, b in zip(top, lead))
        c = rem[top] / lc
        quot[m] = c
        for e, cg in g.terms.items():
            _acc(rem, tuple(a + b for a, b in zip(e, m)), -(c * cg))
    return XPoly._raw(f.n, quot)
