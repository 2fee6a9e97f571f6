"""Exact truncated formal power series in q with a finite Laurent window.

A :class:`TruncatedSeries` knows its coefficients exactly on the half-open
exponent range ``[min_exp, order)``.  Everything below ``min_exp`` is zero by
construction; everything at or above ``order`` is unknown.

Coefficients are Python ints or :class:`APoly` values (integer polynomials in
a marker variable ``a``).  Both support ``+``, ``-`` and ``*`` with each other,
so the series code itself never has to branch on the coefficient domain.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence, Union


class OutOfWindowError(IndexError):
    """Raised when an exponent falls outside a series' tracked window."""


class APoly:
    """Integer polynomial in the marker ``a`` with non-negative exponents.

    Stored densely as a tuple of ints, trailing zeros stripped.  Interoperates
    with plain ints, so ``APoly((1,)) == 1`` holds.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def monomial(cls, m: int, value: int = 1) -> "APoly":
        if m < 0:
            raise ValueError("negative a-exponent")
        return cls((0,) * m + (value,))

    @staticmethod
    def _lift(other):
        if isinstance(other, APoly):
            return other
        if isinstance(other, int):
            return APoly((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return APoly(out)

    __radd__ = __add__

    def __neg__(self):
        return APoly(-v for v in self.c)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return APoly(v * other for v in self.c)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.c or not o.c:
            return APoly()
        out = [0] * (len(self.c) + len(o.c) - 1)
        for i, u in enumerate(self.c):
            if u:
                for j, v in enumerate(o.c):
                    out[i + j] += u * v
        return APoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if len(self.c) <= 1:
            return hash(self.c[0] if self.c else 0)
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    def coeff(self, m: int) -> int:
        return self.c[m] if 0 <= m < len(self.c) else 0

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def evaluate(self, a: int) -> int:
        acc = 0
        for v in reversed(self.c):
            acc = acc * a + v
        return acc

    def __repr__(self):
        if not self.c:
            return "APoly(0)"
        terms = [f"{v}*a^{m}" if m else str(v) for m, v in enumerate(self.c) if v]
        return "APoly(" + " + ".join(terms) + ")"


Coefficient = Union[int, APoly]

#: The marker variable ``a`` itself.
A = APoly((0, 1))


class CoefficientDomain(enum.Enum):
    INTEGER = "integer"
    POLYNOMIAL_IN_A = "polynomial_in_a"


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients of q^min_exp ... q^(order-1), exactly."""

    min_exp: int
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.min_exp > self.order:
            raise ValueError(f"min_exp {self.min_exp} exceeds order {self.order}")
        if len(self.coeffs) != self.order - self.min_exp:
            raise ValueError("coefficient count does not match window")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_terms(
        cls, terms: Iterable[tuple[int, Coefficient]], min_exp: int, order: int
    ) -> "TruncatedSeries":
        if min_exp > order:
            raise ValueError(f"min_exp {min_exp} exceeds order {order}")
        out: list = [0] * (order - min_exp)
        for e, v in terms:
            if not isinstance(v, (int, APoly)):
                raise TypeError(f"inexact coefficient {v!r}")
            if not min_exp <= e < order:
                raise OutOfWindowError(f"exponent {e} outside [{min_exp}, {order})")
            out[e - min_exp] += v
        return cls(min_exp, order, tuple(out))

    @classmethod
    def from_list(cls, values: Sequence[Coefficient], min_exp: int = 0) -> "TruncatedSeries":
        for v in values:
            if not isinstance(v, (int, APoly)):
                raise TypeError(f"inexact coefficient {v!r}")
        return cls(min_exp, min_exp + len(values), tuple(values))

    @classmethod
    def zero(cls, order: int, min_exp: int = 0) -> "TruncatedSeries":
        return cls(min_exp, order, (0,) * (order - min_exp))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, e: int, order: int, value: Coefficient = 1) -> "TruncatedSeries":
        """``value * q**e`` known below ``order``; zero if e is past the order."""
        lo = min(e, order)
        return cls.from_terms([(e, value)] if e < order else [], lo, order)

    # -- access -------------------------------------------------------------

    def coefficient(self, n: int) -> Coefficient:
        if not self.min_exp <= n < self.order:
            raise OutOfWindowError(f"q^{n} outside [{self.min_exp}, {self.order})")
        return self.coeffs[n - self.min_exp]

    __getitem__ = coefficient

    def get(self, n: int) -> Coefficient:
        """Coefficient of q^n, zero below the window; error at or past the order."""
        if n < self.min_exp:
            return 0
        return self.coefficient(n)

    def items(self):
        """Nonzero ``(exponent, coefficient)`` pairs in increasing exponent order."""
        return [(self.min_exp + k, v) for k, v in enumerate(self.coeffs) if v]

    def to_list(self, start: int = 0, stop: int | None = None) -> list:
        stop = self.order if stop is None else stop
        return [self.get(n) for n in range(start, stop)]

    @property
    def domain(self) -> CoefficientDomain:
        if any(isinstance(v, APoly) for v in self.coeffs):
            return CoefficientDomain.POLYNOMIAL_IN_A
        return CoefficientDomain.INTEGER

    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient, or None."""
        for k, v in enumerate(self.coeffs):
            if v:
                return self.min_exp + k
        return None

    # -- windows ------------------------------------------------------------

    def with_window(self, min_exp: int, order: int) -> "TruncatedSeries":
        """Re-window: widening below pads zeros, order may only shrink.

        Narrowing below the current ``min_exp`` drops coefficients, so it is
        refused unless they are all zero.
        """
        if order > self.order:
            raise OutOfWindowError("cannot extend past the known order")
        order = max(order, min_exp)
        if min_exp > self.min_exp:
            dropped = self.coeffs[: min(min_exp, self.order) - self.min_exp]
            if any(dropped):
                raise OutOfWindowError("re-window would drop nonzero coefficients")
            body = self.coeffs[min_exp - self.min_exp : order - self.min_exp]
        else:
            body = (0,) * (self.min_exp - min_exp) + self.coeffs[: order - self.min_exp]
        return TruncatedSeries(min_exp, order, tuple(body) + (0,) * (order - min_exp - len(body)))

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        order = max(order, self.min_exp)
        return TruncatedSeries(self.min_exp, order, self.coeffs[: order - self.min_exp])

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k."""
        return TruncatedSeries(self.min_exp + k, self.order + k, self.coeffs)

    def map(self, f) -> "TruncatedSeries":
        return TruncatedSeries(self.min_exp, self.order, tuple(f(v) for v in self.coeffs))

    def specialize(self, a: int) -> "TruncatedSeries":
        """Substitute an integer for the marker ``a``."""
        return self.map(lambda v: v.evaluate(a) if isinstance(v, APoly) else v)

    def a_coefficient(self, m: int) -> "TruncatedSeries":
        """Integer series of the a^m coefficients."""
        return self.map(
            lambda v: v.coeff(m) if isinstance(v, APoly) else (v if m == 0 else 0)
        )

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.order, other.order)
        if hi < lo:
            return TruncatedSeries.zero(lo, lo)
        out = [0] * (hi - lo)
        for s in (self, other):
            base = s.min_exp - lo
            for k, v in enumerate(s.coeffs[: max(0, hi - s.min_exp)]):
                if v:
                    out[base + k] += v
        return TruncatedSeries(lo, hi, tuple(out))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.min_exp, self.order, tuple(-v for v in self.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, APoly)):
            return TruncatedSeries(
                self.min_exp, self.order, tuple(v * other for v in self.coeffs)
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        lo = self.min_exp + other.min_exp
        hi = min(self.order + other.min_exp, other.order + self.min_exp)
        out = [0] * (hi - lo)
        width = hi - lo
        a_items = [(k, v) for k, v in enumerate(self.coeffs) if v]
        b_items = [(k, v) for k, v in enumerate(other.coeffs) if v]
        if len(b_items) < len(a_items):
            a_items, b_items = b_items, a_items
        for ka, va in a_items:
            if ka >= width:
                break
            for kb, vb in b_items:
                idx = ka + kb
                if idx >= width:
                    break
                out[idx] += va * vb
        return TruncatedSeries(lo, hi, tuple(out))

    __rmul__ = __mul__

    def mul_binomial(self, c: Coefficient, e: int) -> "TruncatedSeries":
        """Multiply by ``(1 - c q^e)`` in one pass, keeping the window (e >= 0)."""
        if e < 0:
            raise ValueError("mul_binomial needs e >= 0")
        y = list(self.coeffs)
        x = self.coeffs
        if e == 0:
            return TruncatedSeries(self.min_exp, self.order, tuple(v - c * v for v in x))
        for k in range(e, len(x)):
            v = x[k - e]
            if v:
                y[k] = y[k] - c * v
        return TruncatedSeries(self.min_exp, self.order, tuple(y))

    def div_binomial(self, c: Coefficient, e: int) -> "TruncatedSeries":
        """Divide by ``(1 - c q^e)``: y_m = x_m + c * y_{m-e}."""
        if e <= 0:
            raise ValueError("div_binomial needs e >= 1 so that the divisor is a unit")
        y = list(self.coeffs)
        for k in range(e, len(y)):
            v = y[k - e]
            if v:
                y[k] = y[k] + c * v
        return TruncatedSeries(self.min_exp, self.order, tuple(y))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return first_mismatch(self, other) is None

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        terms = []
        for e, v in self.items()[:12]:
            terms.append(f"({v})q^{e}" if isinstance(v, APoly) else f"{v}q^{e}")
        body = " + ".join(terms) or "0"
        more = " + ..." if len(self.items()) > 12 else ""
        return f"TruncatedSeries({body}{more} + O(q^{self.order}); min_exp={self.min_exp})"


def first_mismatch(x: TruncatedSeries, y: TruncatedSeries) -> int | None:
    """Lowest exponent where x and y differ on their common window."""
    lo = min(x.min_exp, y.min_exp)
    hi = min(x.order, y.order)
    for n in range(lo, hi):
        if x.get(n) != y.get(n):
            return n
    return None


def from_terms(terms, min_exp: int, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_terms(terms, min_exp, order)


def add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x + y


def mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x * y


def div_binomial(x: TruncatedSeries, c: Coefficient, e: int) -> TruncatedSeries:
    return x.div_binomial(c, e)


def coefficient(x: TruncatedSeries, n: int) -> Coefficient:
    return x.coefficient(n)


@dataclass(frozen=True)
class PochhammerSpec:
    """The finite product prod_{i<count} (1 - coeff * q^(start_exp + i*step)).

    ``step`` is the base power: step=2 gives products in base q^2.
    """

    coeff: Coefficient
    start_exp: int
    count: int
    step: int = 1

    def __post_init__(self):
        if self.start_exp < 0 or self.count < 0 or self.step < 1:
            raise ValueError("start_exp and count must be non-negative, step positive")

    def factors(self):
        return [(self.coeff, self.start_exp + i * self.step) for i in range(self.count)]


def pochhammer(spec: PochhammerSpec, order: int) -> TruncatedSeries:
    """Expand the product below ``order`` (exclusive)."""
    s = TruncatedSeries.one(order)
    for c, e in spec.factors():
        s = s.mul_binomial(c, e)
    return s


def divide_pochhammer(x: TruncatedSeries, spec: PochhammerSpec) -> TruncatedSeries:
    """Divide by the product; every factor must have a unit constant term."""
    for c, e in spec.factors():
        x = x.div_binomial(c, e)
    return x


def multiply_pochhammer(x: TruncatedSeries, spec: PochhammerSpec) -> TruncatedSeries:
    for c, e in spec.factors():
        x = x.mul_binomial(c, e)
    return x


def series_sum(parts: Iterable[TruncatedSeries], min_exp: int, order: int) -> TruncatedSeries:
    """Exact sum of many series onto the fixed window ``[min_exp, order)``.

    Contributions at or past ``order`` are dropped; each part must be known up
    to ``order`` and must not reach below ``min_exp``.
    """
    out: list = [0] * (order - min_exp)
    for p in parts:
        if p.order < order:
            raise OutOfWindowError(f"part known only below q^{p.order}, need q^{order}")
        for k, v in enumerate(p.coeffs):
            if not v:
                continue
            e = p.min_exp + k
            if e >= order:
                break
            if e < min_exp:
                raise OutOfWindowError(f"nonzero term at q^{e} below window {min_exp}")
            out[e - min_exp] += v
    return TruncatedSeries(min_exp, order, tuple(out))
