"""Exact arithmetic in the rational function field Q(q, t).

A :class:`QtScalar` is a reduced fraction of two integer polynomials in
``q`` and ``t``.  Reduction uses the multivariate gcd of python-flint; all
other behaviour (sign normalisation, the bar involution, evaluation,
printing) lives here.

Canonical form:

* ``gcd(num, den) == 1``;
* the leading coefficient of ``den`` under graded-lex order with ``q > t``
  is positive;
* zero is ``0/1``.

Two canonical scalars are equal iff their numerators and denominators are
equal, so ``==`` is a structural comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import flint

__all__ = [
    "QtPoly",
    "QtScalar",
    "QtMonomial",
    "QtArithmeticError",
    "QtEvaluationError",
    "qt_poly",
    "qt_poly_terms",
    "qt_arith",
    "qt_bar",
    "qt_eval",
    "ZERO",
    "ONE",
    "Q",
    "T",
]

CTX = flint.fmpz_mpoly_ctx.get(("q", "t"), "deglex")

#: Integer polynomials in q, t.  Exponents are non-negative; negative powers
#: only ever appear through a :class:`QtScalar` denominator.
QtPoly = flint.fmpz_mpoly

_ZERO_POLY = CTX.from_dict({})
_ONE_POLY = CTX.constant(1)


class QtArithmeticError(ZeroDivisionError):
    pass


class QtEvaluationError(ArithmeticError):
    pass


def qt_poly(terms) -> QtPoly:
    """Build a polynomial from a ``{(q_exp, t_exp): int}`` mapping."""
    return CTX.from_dict({k: v for k, v in dict(terms).items() if v})


def qt_poly_terms(p: QtPoly) -> dict[tuple[int, int], int]:
    return {(int(a), int(b)): int(v) for (a, b), v in p.to_dict().items()}


def _display_order(p: QtPoly):
    # ascending total degree, ties broken lexicographically with q > t
    items = [((int(a), int(b)), int(c)) for (a, b), c in p.to_dict().items()]
    items.sort(key=lambda it: (it[0][0] + it[0][1], -it[0][0]))
    return items


def _shift_to_poly(p: QtPoly, dq: int, dt: int) -> QtPoly:
    """Return ``q**dq * t**dt * p(1/q, 1/t)``; caller guarantees no negatives."""
    return CTX.from_dict({(dq - a, dt - b): c for (a, b), c in p.to_dict().items()})


Coercible = Union["QtScalar", int, Fraction, "QtMonomial"]


class QtScalar:
    """An element of Q(q, t) held in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, *, _reduced: bool = False):
        if isinstance(num, Fraction):
            num, den = Fraction(num) / Fraction(den), 1
            num, den = num.numerator, num.denominator
        if isinstance(num, int):
            num = CTX.constant(num)
        if isinstance(den, int):
            den = CTX.constant(den)
        if den.is_zero():
            raise QtArithmeticError("zero denominator in Q(q,t)")
        if num.is_zero():
            self.num, self.den = _ZERO_POLY, _ONE_POLY
            return
        if not _reduced and not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num, den = num / g, den / g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x: Coercible) -> "QtScalar":
        if isinstance(x, QtScalar):
            return x
        if isinstance(x, QtMonomial):
            return x.scalar()
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QtScalar")

    @classmethod
    def from_polys(cls, num: QtPoly, den: QtPoly | None = None) -> "QtScalar":
        return cls(num, _ONE_POLY if den is None else den)

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, QtScalar):
            try:
                other = QtScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((tuple(sorted(qt_poly_terms(self.num).items())),
                     tuple(sorted(qt_poly_terms(self.den).items()))))

    def __reduce__(self):
        return (_rebuild, (qt_poly_terms(self.num), qt_poly_terms(self.den)))

    # -- arithmetic -----------------------------------------------------

    def __neg__(self) -> "QtScalar":
        return QtScalar(-self.num, self.den, _reduced=True)

    def __add__(self, other: Coercible) -> "QtScalar":
        try:
            other = QtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b.is_one() and d.is_one():
            return QtScalar(a + c, _ONE_POLY, _reduced=True)
        if b == d:
            return QtScalar(a + c, b)
        # gcd(num, b*d/g) == gcd(num, g) for reduced inputs
        g = b.gcd(d)
        if g.is_one():
            return QtScalar(a * d + c * b, b * d, _reduced=True)
        bg, dg = b / g, d / g
        num = a * dg + c * bg
        if num.is_zero():
            return QtScalar()
        h = num.gcd(g)
        if not h.is_one():
            num, g = num / h, g / h
        return QtScalar(num, bg * dg * g, _reduced=True)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "QtScalar":
        try:
            other = QtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "QtScalar":
        return QtScalar.coerce(other) - self

    def __mul__(self, other: Coercible) -> "QtScalar":
        try:
            other = QtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return QtScalar()
        if b.is_one() and d.is_one():
            return QtScalar(a * c, _ONE_POLY, _reduced=True)
        if not d.is_one():
            g = a.gcd(d)
            if not g.is_one():
                a, d = a / g, d / g
        if not b.is_one():
            g = c.gcd(b)
            if not g.is_one():
                c, b = c / g, b / g
        return QtScalar(a * c, b * d, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "QtScalar":
        if self.num.is_zero():
            raise QtArithmeticError("division by zero in Q(q,t)")
        return QtScalar(self.den, self.num, _reduced=True)

    def __truediv__(self, other: Coercible) -> "QtScalar":
        try:
            other = QtScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Coercible) -> "QtScalar":
        return QtScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "QtScalar":
        if k < 0:
            return self.inverse() ** (-k)
        return QtScalar(self.num ** k, self.den ** k, _reduced=True)

    # -- involution and evaluation ---------------------------------------

    def bar(self) -> "QtScalar":
        """Substitute q -> 1/q and t -> 1/t."""
        if self.num.is_zero():
            return self
        dn, dd = self.num.degrees(), self.den.degrees()
        dq, dt = max(dn[0], dd[0]), max(dn[1], dd[1])
        return QtScalar(_shift_to_poly(self.num, dq, dt), _shift_to_poly(self.den, dq, dt))

    def eval(self, q0, t0) -> Fraction:
        q0, t0 = Fraction(q0), Fraction(t0)
        den = _eval_poly(self.den, q0, t0)
        if den == 0:
            raise QtEvaluationError(f"denominator {self.den.str()} vanishes at q={q0}, t={t0}")
        return _eval_poly(self.num, q0, t0) / den

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        num = _poly_str(self.num)
        if self.den.is_one():
            return num
        num = num if len(self.num) == 1 else f"({num})"
        return f"{num}/({_poly_str(self.den)})"

    def __repr__(self) -> str:
        return f"QtScalar({str(self)!r})"

    def latex(self) -> str:
        if self.den.is_one():
            return _poly_latex(self.num)
        return rf"\frac{{{_poly_latex(self.num)}}}{{{_poly_latex(self.den)}}}"

    def to_json(self) -> dict:
        return {
            "num": [[c, a, b] for (a, b), c in _display_order(self.num)],
            "den": [[c, a, b] for (a, b), c in _display_order(self.den)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QtScalar":
        num = qt_poly({(a, b): c for c, a, b in obj["num"]})
        den = qt_poly({(a, b): c for c, a, b in obj["den"]})
        return cls(num, den)


def _rebuild(num_terms, den_terms) -> QtScalar:
    return QtScalar(qt_poly(num_terms), qt_poly(den_terms), _reduced=True)


def _eval_poly(p: QtPoly, q0: Fraction, t0: Fraction) -> Fraction:
    return sum((c * q0 ** a * t0 ** b for (a, b), c in qt_poly_terms(p).items()), Fraction(0))


def _mono_str(a: int, b: int, sep: str = "*") -> str:
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if b:
        parts.append("t" if b == 1 else f"t^{b}")
    return sep.join(parts)


def _poly_str(p: QtPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for (a, b), c in _display_order(p):
        mono = _mono_str(a, b)
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)


def _poly_latex(p: QtPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for (a, b), c in _display_order(p):
        mono = ""
        if a:
            mono += "q" if a == 1 else f"q^{{{a}}}"
        if b:
            mono += "t" if b == 1 else f"t^{{{b}}}"
        mag = abs(c)
        body = mono if (mag == 1 and mono) else f"{mag}{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


@dataclass(frozen=True, order=True)
class QtMonomial:
    """The Laurent monomial ``q**qexp * t**texp``.

    Eigenvalues t^{etabar_i} are always of this shape because the exponent
    of t carries the composition entries through t^alpha = q.
    """

    qexp: int = 0
    texp: int = 0

    def __mul__(self, other: "QtMonomial") -> "QtMonomial":
        if not isinstance(other, QtMonomial):
            return NotImplemented
        return QtMonomial(self.qexp + other.qexp, self.texp + other.texp)

    def __truediv__(self, other: "QtMonomial") -> "QtMonomial":
        if not isinstance(other, QtMonomial):
            return NotImplemented
        return QtMonomial(self.qexp - other.qexp, self.texp - other.texp)

    def __pow__(self, k: int) -> "QtMonomial":
        return QtMonomial(self.qexp * k, self.texp * k)

    def inverse(self) -> "QtMonomial":
        return QtMonomial(-self.qexp, -self.texp)

    def scalar(self) -> QtScalar:
        a, b = self.qexp, self.texp
        num = CTX.from_dict({(max(a, 0), max(b, 0)): 1})
        den = CTX.from_dict({(max(-a, 0), max(-b, 0)): 1})
        return QtScalar(num, den, _reduced=True)

    def __str__(self) -> str:
        parts = []
        if self.qexp:
            parts.append("q" if self.qexp == 1 else f"q^{self.qexp}")
        if self.texp:
            parts.append("t" if self.texp == 1 else f"t^{self.texp}")
        return "*".join(parts) or "1"


ZERO = QtScalar(0)
ONE = QtScalar(1)
Q = QtMonomial(1, 0).scalar()
T = QtMonomial(0, 1).scalar()


def qt_arith(a: QtScalar, b: QtScalar, op: str) -> QtScalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def qt_bar(a: QtScalar) -> QtScalar:
    return a.bar()


def qt_eval(a: QtScalar, q0, t0) -> Fraction:
    return a.eval(q0, t0)
