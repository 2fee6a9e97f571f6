"""Generating functions built from q-Pochhammer quotients.

Every builder takes ``order`` as the highest exponent wanted: the returned
series carries coefficients of q^0 .. q^order (its ``order`` attribute is
``order + 1``, one past the last known exponent).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from .series import (
    A,
    Coefficient,
    PochhammerSpec,
    TruncatedSeries,
    divide_pochhammer,
    pochhammer,
    series_sum,
)


def pochhammer_term(
    numer: PochhammerSpec,
    denom: PochhammerSpec,
    shift: int,
    sign: Coefficient,
    order: int,
) -> TruncatedSeries | None:
    """``sign * q^shift * numer / denom`` through q^order, or None if shift > order."""
    if shift > order:
        return None
    body = divide_pochhammer(pochhammer(numer, order - shift + 1), denom)
    if sign != 1:
        body = body * sign
    return body.shift(shift)


def _qsum(terms, order: int) -> TruncatedSeries:
    return series_sum((t for t in terms if t is not None), 0, order + 1)


def _outer(order: int):
    n = 0
    while n * n <= order:
        yield n
        n += 1


def lhs_27(order: int) -> TruncatedSeries:
    """sum_n (q^2;q^2)_n (-1)^n q^(n^2) / (-q;q)_(2n)."""
    return _qsum(
        (
            pochhammer_term(
                PochhammerSpec(1, 2, n, step=2),
                PochhammerSpec(-1, 1, 2 * n),
                n * n,
                (-1) ** n,
                order,
            )
            for n in _outer(order)
        ),
        order,
    )


def middle_37(order: int) -> TruncatedSeries:
    """sum_n (q)_n (-1)^n q^(n(n+1)/2 + n(n-1)/2) / (-q^(n+1);q)_n."""
    return _qsum(
        (
            pochhammer_term(
                PochhammerSpec(1, 1, n),
                PochhammerSpec(-1, n + 1, n),
                n * (n + 1) // 2 + n * (n - 1) // 2,
                (-1) ** n,
                order,
            )
            for n in _outer(order)
        ),
        order,
    )


def lhs_28(order: int) -> TruncatedSeries:
    """sum_n (q)_n q^(n^2) / (q^(n+1);q)_n."""
    return _qsum(
        (
            pochhammer_term(
                PochhammerSpec(1, 1, n), PochhammerSpec(1, n + 1, n), n * n, 1, order
            )
            for n in _outer(order)
        ),
        order,
    )


def genfun_k(k: int, order: int, a: Coefficient | None = None) -> TruncatedSeries:
    """(q)_k q^(k^2) / (a q^(k+1);q)_k through q^order.

    With ``a=None`` the coefficients are :class:`APoly` values and the a^m
    coefficient of q^n is the signed count Abar_{k,m}(n).  An integer ``a``
    gives the specialised integer series directly.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    c = A if a is None else a
    t = pochhammer_term(
        PochhammerSpec(1, 1, k), PochhammerSpec(c, k + 1, k), k * k, 1, order
    )
    return t if t is not None else TruncatedSeries.zero(order + 1)


class Monomial(NamedTuple):
    exponent: int
    sign: int
    parts: tuple


def f_poly(k: int) -> list[Monomial]:
    """Uncancelled expansion of (x;x)_k * x^(1+1+2+2+...+(k-1)+(k-1)+k).

    One monomial per subset of the factors of (x;x)_k, so coinciding exponents
    with opposite signs are kept apart.  ``parts`` is the composition whose
    sum gives the exponent: each t < k twice and k once, plus one extra copy of
    every t taken from the product.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return [Monomial(0, 1, ())]
    base = [t for t in range(1, k) for _ in range(2)] + [k]
    out = []
    for size in range(k + 1):
        for extra in combinations(range(1, k + 1), size):
            parts = tuple(sorted(base + list(extra)))
            out.append(Monomial(sum(parts), (-1) ** size, parts))
    out.sort(key=lambda m: (m.exponent, -m.sign, m.parts))
    return out


@dataclass(frozen=True)
class CoefficientTable:
    name: str
    values: tuple

    def __post_init__(self):
        if self.name not in ("B", "Bbar"):
            raise ValueError(f"unknown table {self.name!r}")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


ROUTES = ("auto", "genfun", "series", "lattice", "oracle")
_AUTO_LATTICE_ABOVE = 2000


def _route(route: str, order: int) -> str:
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")
    if route == "auto":
        return "genfun" if order <= _AUTO_LATTICE_ABOVE else "lattice"
    return route


def b_table(order: int, route: str = "auto") -> CoefficientTable:
    """B(0..order) = sum over k, m of Abar_{k,m}(n)."""
    route = _route(route, order)
    if route == "genfun":
        s = _qsum((genfun_k(k, order, a=1) for k in _outer(order)), order)
    elif route == "series":
        s = lhs_28(order)
    elif route == "lattice":
        from .ternary import rhs_28

        s = rhs_28(order)
    else:
        from .partitions import b_oracle

        return CoefficientTable("B", tuple(b_oracle(n) for n in range(order + 1)))
    return CoefficientTable("B", tuple(s.to_list(0, order + 1)))


def bbar_table(order: int, route: str = "auto") -> CoefficientTable:
    """Bbar(0..order) = sum over k, m of (-1)^(m+k) Abar_{k,m}(n)."""
    route = _route(route, order)
    if route == "genfun":
        s = _qsum(
            (genfun_k(k, order, a=-1) * (-1) ** k for k in _outer(order)), order
        )
    elif route == "series":
        s = lhs_27(order)
    elif route == "lattice":
        from .ternary import rhs_27

        s = rhs_27(order)
    else:
        from .partitions import bbar_oracle

        return CoefficientTable("Bbar", tuple(bbar_oracle(n) for n in range(order + 1)))
    return CoefficientTable("Bbar", tuple(s.to_list(0, order + 1)))


def table_from_values(name: str, values: Sequence[int]) -> CoefficientTable:
    return CoefficientTable(name, tuple(values))
