"""Ternary lattice sums and quadratic-form representability.

The three lattice series (``rhs_27``, ``rhs_28``, ``rewrite_41``) are summed
row by row with numpy: every row is a fixed ``n`` (and for ``rewrite_41`` the
whole (j, i) block of that ``n``), exponents are computed as int64 arrays and
accumulated with ``np.bincount`` separately for positive and negative
contributions.  ``bincount`` without weights returns exact int64 counts, and
each count is bounded by the number of enumerated lattice points, which is
checked against 2**62 before returning, so the integer results are exact.

As with the generating functions, ``order`` is the highest exponent kept.

Enumeration boxes come from lower bounds on the exponent of each row:

* rhs_28, fixed (n, i): min over |j| <= i is n^2 + i^2 - n*i (at j = -i), so
  n <= sqrt(4*order/3) and i lies between the roots of i^2 - n*i + n^2 = order.
* rhs_27, fixed (n, i): min over 2|j| <= i is at least 2n^2 - n*i + i^2/4, so
  n^2 <= order and |i - 2n| <= 2*sqrt(order - n^2).
* rewrite_41, fixed (n, j): exponent grows with i >= 0; at i = 0 it is
  n^2 + (n + j)^2 for j <= 0 and 2n^2 + j^2 + 2j + 2jn for j > 0.

Every prefactor offset is non-negative, so these bounds cover all terms.  The
``slack`` argument widens each box, to check that nothing was cut off.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt
from typing import Callable, Iterator

import numpy as np

from .series import TruncatedSeries

_POINT_LIMIT = 2**62


def _isqrt_floor(v: int) -> int:
    return isqrt(v) if v >= 0 else -1


# -- lattice rows -------------------------------------------------------------
#
# A row is (exps, signs, diag) for one block of lattice points, after the
# prefactor offsets are applied.  ``diag`` marks points on the diagonal used by
# split_components.


def _ij_block(i_vals: np.ndarray, half: np.ndarray):
    """All (i, j) with |j| <= half[i], flattened."""
    counts = 2 * half + 1
    i = np.repeat(i_vals, counts)
    starts = np.cumsum(counts) - counts
    j = np.arange(counts.sum(), dtype=np.int64) - np.repeat(starts, counts)
    j -= np.repeat(half, counts)
    return i, j


def _rows_28(order: int, slack: int) -> Iterator[tuple]:
    n_max = _isqrt_floor(4 * order // 3) + 1 + slack
    for n in range(n_max + 1):
        disc = 4 * order - 3 * n * n
        r = _isqrt_floor(disc) + 1 if disc >= 0 else 0
        lo = max(0, (n - r) // 2 - 1 - slack)
        hi = (n + r) // 2 + 1 + slack
        if disc < 0 and slack == 0:
            continue
        i_vals = np.arange(lo, hi + 1, dtype=np.int64)
        i, j = _ij_block(i_vals, i_vals)
        base = n * n + i * (3 * i + 1) // 2 - j * (j - 1) // 2 + n * j
        sign = 1 - 2 * ((i + j) & 1)
        diag = i == j
        yield from _apply_offsets(
            base, sign, diag, [(0, 1), (2 * n + 1, -1)], [(0, 1), (2 * i + 1, -1)], order
        )


def _rows_27(order: int, slack: int) -> Iterator[tuple]:
    n_max = _isqrt_floor(order) + slack
    for n in range(n_max + 1):
        rem = order - n * n
        r = 2 * (_isqrt_floor(rem) + 1) if rem >= 0 else 0
        lo = max(0, 2 * n - r - slack)
        hi = 2 * n + r + slack
        if rem < 0 and slack == 0:
            continue
        i_vals = np.arange(lo, hi + 1, dtype=np.int64)
        i, j = _ij_block(i_vals, i_vals // 2)
        base = 2 * n * n + i * (i + 1) // 2 - j * (j - 1) + 2 * n * j
        sign = 1 - 2 * (j & 1)
        diag = i == 2 * j
        yield from _apply_offsets(base, sign, diag, [(0, 1), (4 * n + 2, -1)], [(0, 1)], order)


def _rows_41(order: int, slack: int) -> Iterator[tuple]:
    n_max = _isqrt_floor(order) + slack
    i_max = _isqrt_floor(2 * order) + 1 + slack
    for n in range(n_max + 1):
        rem = order - n * n
        r = _isqrt_floor(max(rem, 0)) + 1 + slack
        j_vals = np.arange(-(n + r), r + 1, dtype=np.int64)
        i_vals = np.arange(0, i_max + 1, dtype=np.int64)
        j, i = (g.ravel() for g in np.meshgrid(j_vals, i_vals, indexing="ij"))
        aj = np.abs(j)
        base = 2 * n * n + i * (i + 1) // 2 + j * (j + 1) + (2 * i + 1) * aj + 2 * j * n
        sign = 1 - 2 * (j & 1)
        diag = np.zeros_like(base, dtype=bool)
        yield from _apply_offsets(base, sign, diag, [(0, 1), (4 * n + 2, -1)], [(0, 1)], order)


def _apply_offsets(base, sign, diag, n_offsets, i_offsets, order):
    for off_n, s_n in n_offsets:
        for off_i, s_i in i_offsets:
            e = base + off_n + off_i
            keep = e <= order
            if keep.any():
                yield e[keep], (sign * (s_n * s_i))[keep], diag[keep]


_ROWS: dict[str, Callable] = {"RHS27": _rows_27, "RHS28": _rows_28, "REWRITE41": _rows_41}


def _resolve(form_id: str) -> str:
    key = {"2.7": "RHS27", "2.8": "RHS28", "4.1": "REWRITE41"}.get(form_id, form_id)
    if key not in _ROWS:
        raise ValueError(f"unknown lattice form {form_id!r}")
    return key


def _accumulate(form_id: str, order: int, slack: int = 0, select=None):
    """Signed per-exponent totals (and unsigned hit counts) on [0, order]."""
    if order < 0:
        raise ValueError("order must be non-negative")
    size = order + 1
    pos = np.zeros(size, dtype=np.int64)
    neg = np.zeros(size, dtype=np.int64)
    points = 0
    for e, s, d in _ROWS[_resolve(form_id)](order, slack):
        if select is not None:
            m = select(d)
            e, s = e[m], s[m]
        if e.size == 0:
            continue
        if (e < 0).any():
            raise AssertionError(f"{form_id}: negative exponent in lattice sum")
        points += int(e.size)
        pos += np.bincount(e[s > 0], minlength=size)
        neg += np.bincount(e[s < 0], minlength=size)
    if points >= _POINT_LIMIT:
        raise OverflowError("lattice point count exceeds exact int64 range")
    return pos, neg


def lattice_series(form_id: str, order: int, slack: int = 0, select=None) -> TruncatedSeries:
    pos, neg = _accumulate(form_id, order, slack, select)
    return TruncatedSeries.from_list([int(v) for v in (pos - neg)])


def lattice_support(form_id: str, order: int) -> np.ndarray:
    """Boolean mask of exponents hit by at least one lattice contribution."""
    pos, neg = _accumulate(form_id, order)
    return (pos + neg) > 0


def rhs_28(order: int, slack: int = 0) -> TruncatedSeries:
    """sum q^(n^2) (1-q^(2n+1)) sum_i (-1)^i q^(i(3i+1)/2) (1-q^(2i+1)) sum_{|j|<=i} (-1)^j q^(-j(j-1)/2+nj)."""
    return lattice_series("RHS28", order, slack)


def rhs_27(order: int, slack: int = 0) -> TruncatedSeries:
    """sum q^(2n^2) (1-q^(4n+2)) sum_i q^(i(i+1)/2) sum_{2|j|<=i} (-1)^j q^(-j(j-1)+2nj)."""
    return lattice_series("RHS27", order, slack)


def rewrite_41(order: int, slack: int = 0) -> TruncatedSeries:
    """rhs_27 reindexed by i -> i + 2|j|, summed over all j and i >= 0."""
    return lattice_series("REWRITE41", order, slack)


@dataclass(frozen=True)
class ComponentExpansion:
    """Diagonal and off-diagonal parts of a lattice series.

    For RHS28 the diagonal is j = i, for RHS27 it is i = 2j.  Each coefficient
    is the signed number of lattice contributions landing on that exponent,
    prefactor offsets included.
    """

    form_id: str
    diagonal: TruncatedSeries
    off_diagonal: TruncatedSeries

    def total(self) -> TruncatedSeries:
        return self.diagonal + self.off_diagonal


def split_components(form_id: str, order: int) -> ComponentExpansion:
    key = _resolve(form_id)
    if key not in ("RHS27", "RHS28"):
        raise ValueError(f"no diagonal split defined for {form_id!r}")
    return ComponentExpansion(
        key,
        lattice_series(key, order, select=lambda d: d),
        lattice_series(key, order, select=lambda d: ~d),
    )


# -- quadratic forms ----------------------------------------------------------


@dataclass(frozen=True)
class TernaryForm:
    """f(x, y, z) = a x^2 + b y^2 + c z^2 + r yz + s zx + t xy."""

    a: int
    b: int
    c: int
    r: int = 0
    s: int = 0
    t: int = 0

    @classmethod
    def parse(cls, text: str) -> "TernaryForm":
        vals = [int(v) for v in text.split(",")]
        if len(vals) != 6:
            raise ValueError("a ternary form needs six coefficients a,b,c,r,s,t")
        return cls(*vals)

    @property
    def coefficients(self) -> tuple:
        return (self.a, self.b, self.c, self.r, self.s, self.t)

    def gram(self) -> list[list[int]]:
        """Integer matrix M with f(v) = v^T M v / 2."""
        return [
            [2 * self.a, self.t, self.s],
            [self.t, 2 * self.b, self.r],
            [self.s, self.r, 2 * self.c],
        ]

    def determinant(self) -> int:
        (p, q, u), (_, v, w), (_, _, z) = self.gram()
        return p * (v * z - w * w) - q * (q * z - w * u) + u * (q * w - v * u)

    def is_positive_definite(self) -> bool:
        m = self.gram()
        d1 = m[0][0]
        d2 = m[0][0] * m[1][1] - m[0][1] ** 2
        return d1 > 0 and d2 > 0 and self.determinant() > 0

    def primitive(self) -> bool:
        return reduce(gcd, self.coefficients) == 1

    def __call__(self, x, y, z):
        return (
            self.a * x * x + self.b * y * y + self.c * z * z
            + self.r * y * z + self.s * z * x + self.t * x * y
        )

    def box(self, n: int) -> tuple[int, int, int]:
        """Largest |x|, |y|, |z| that can occur with f(x, y, z) <= n."""
        if not self.is_positive_definite():
            raise ValueError(f"{self} is not positive definite")
        m = self.gram()
        det = self.determinant()
        cof = [
            m[1][1] * m[2][2] - m[1][2] ** 2,
            m[0][0] * m[2][2] - m[0][2] ** 2,
            m[0][0] * m[1][1] - m[0][1] ** 2,
        ]
        return tuple(isqrt(2 * n * c // det) for c in cof)


def representation_counts(form: TernaryForm, X: int) -> np.ndarray:
    """counts[n] = #{(x, y, z) in Z^3 : f(x, y, z) = n} for 0 <= n <= X."""
    bx, by, bz = form.box(X)
    ys = np.arange(-by, by + 1, dtype=np.int64)
    zs = np.arange(-bz, bz + 1, dtype=np.int64)
    y, z = (g.ravel() for g in np.meshgrid(ys, zs, indexing="ij"))
    yz = form.b * y * y + form.c * z * z + form.r * y * z
    out = np.zeros(X + 1, dtype=np.int64)
    for x in range(-bx, bx + 1):
        v = yz + form.a * x * x + form.s * z * x + form.t * x * y
        out += np.bincount(v[v <= X], minlength=X + 1)
    return out


def represent_count(form: TernaryForm, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return int(representation_counts(form, n)[n])


def representable_upto(form: TernaryForm, X: int) -> int:
    """Number of 0 <= n <= X represented by the form (n = 0 included)."""
    return int((representation_counts(form, X) > 0).sum())


def is_sum_three_squares(n: int) -> bool:
    """False exactly when n = 4^a (8b + 7)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def three_squares_mask(X: int) -> np.ndarray:
    """Vectorised Legendre test for 0 <= n <= X."""
    m = np.arange(X + 1, dtype=np.int64)
    m[0] = 1
    while True:
        sel = (m % 4 == 0)
        if not sel.any():
            break
        m[sel] //= 4
    return m % 8 != 7


def loeschian_mask(X: int) -> np.ndarray:
    """mask[n] is True when n = x^2 + xy + y^2 for integers x, y (0 <= n <= X)."""
    mask = np.zeros(X + 1, dtype=bool)
    bound = isqrt(4 * X // 3) + 1
    ys = np.arange(-bound, bound + 1, dtype=np.int64)
    for x in range(-bound, bound + 1):
        v = x * x + x * ys + ys * ys
        mask[v[v <= X]] = True
    return mask


def loeschian_upto(X: int) -> int:
    """#{1 <= n <= X : n = x^2 + xy + y^2}."""
    if X < 1:
        return 0
    return int(loeschian_mask(X)[1:].sum())
