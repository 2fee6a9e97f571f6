"""The two explicit Bailey pairs and the specialised Bailey lemma.

PAIR_A lives in base q^2 with relative parameter a = q^2:

    beta_n  = q^(-n) / (-q;q)_(2n)
    alpha_n = (-1)^n q^(n(n-1)) (1 - q^(4n+2)) / (1 - q^2)
              * sum_{i>=0} q^(i(i+1)/2) sum_{2|j|<=i} (-1)^j q^(-j(j-1) + 2nj)

PAIR_B lives in base q with a = q:

    beta_n  = (q)_n (-1)^n q^(n(n-1)/2) / (q)_(2n)
    alpha_n = (-1)^n q^(n(n-1)/2) (1 - q^(2n+1)) / (1 - q)
              * sum_{i>=0} (-1)^i q^(i(3i+1)/2) (1 - q^(2i+1)) sum_{|j|<=i} (-1)^j q^(-j(j-1)/2 + nj)

``order`` is the highest exponent kept.  PAIR_A's alpha_n and beta_n reach
down to q^(-n), so their series start at ``min_exp = -n``; a term landing
below that raises instead of being dropped.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .report import VerificationReport, compare
from .series import (
    PochhammerSpec,
    TruncatedSeries,
    divide_pochhammer,
    multiply_pochhammer,
    pochhammer,
    series_sum,
)


class PairId(enum.Enum):
    A = "PairA"
    B = "PairB"

    @property
    def base_power(self) -> int:
        return 2 if self is PairId.A else 1

    @classmethod
    def coerce(cls, value) -> "PairId":
        if isinstance(value, PairId):
            return value
        key = str(value).upper().removeprefix("PAIR").strip("-_ ")
        return cls.A if key == "A" else cls.B if key == "B" else cls(value)


@dataclass(frozen=True)
class BaileyPair:
    id: PairId

    @property
    def base_power(self) -> int:
        return self.id.base_power

    def alpha(self, n: int, order: int) -> TruncatedSeries:
        return alpha_explicit(self.id, n, order)

    def beta(self, n: int, order: int) -> TruncatedSeries:
        return beta_explicit(self.id, n, order)


PAIR_A = BaileyPair(PairId.A)
PAIR_B = BaileyPair(PairId.B)


def beta_explicit(pair_id, n: int, order: int) -> TruncatedSeries:
    pid = PairId.coerce(pair_id)
    if n < 0:
        raise ValueError("n must be non-negative")
    if pid is PairId.A:
        one = TruncatedSeries.one(order + n + 1)
        return divide_pochhammer(one, PochhammerSpec(-1, 1, 2 * n)).shift(-n)
    shift = n * (n - 1) // 2
    if shift > order:
        return TruncatedSeries.zero(order + 1)
    body = pochhammer(PochhammerSpec(1, 1, n), order - shift + 1)
    body = divide_pochhammer(body, PochhammerSpec(1, 1, 2 * n)) * (-1) ** n
    return body.shift(shift).with_window(0, order + 1)


def _alpha_min_exp(pid: PairId, n: int) -> int:
    if pid is PairId.A:
        # (n - h)^2 - n over h = |j| <= i/2, smallest at h = n
        return -n
    return min(0, min(n * (n - 1) // 2 + i * i - n * i for i in range(n + 1)))


def _alpha_terms(pid: PairId, n: int, order: int, extra_i: int):
    """Inner double sum (no prefactors in q^b) as (exponent, coefficient) pairs."""
    i = 0
    stop_after = None
    while True:
        if pid is PairId.A:
            # row minimum >= n(n-1) + i^2/4 - n*i, increasing once i >= 2n;
            # the exact row minimum is not monotone in i
            done = i >= 2 * n and 4 * n * (n - 1) + i * i - 4 * n * i > 4 * order
        else:
            lower = n * (n - 1) // 2 + i * i - n * i
            done = i >= n and lower > order
        if done and stop_after is None:
            stop_after = i + extra_i
        if stop_after is not None and i >= stop_after:
            return
        if pid is PairId.A:
            for j in range(-(i // 2), i // 2 + 1):
                e = n * (n - 1) + i * (i + 1) // 2 - j * (j - 1) + 2 * n * j
                if e <= order:
                    yield e, -1 if (n + j) & 1 else 1
        else:
            base = n * (n - 1) // 2 + i * (3 * i + 1) // 2
            for j in range(-i, i + 1):
                e = base - j * (j - 1) // 2 + n * j
                s = -1 if (n + i + j) & 1 else 1
                if e <= order:
                    yield e, s
                if e + 2 * i + 1 <= order:
                    yield e + 2 * i + 1, -s
        i += 1


def alpha_explicit(pair_id, n: int, order: int, extra_i: int = 0) -> TruncatedSeries:
    """alpha_n through q^order.

    The i-loop stops once i is past the vertex of the per-i minimum exponent
    and that minimum exceeds ``order``; ``extra_i`` runs that many more rows,
    which must not change the result.
    """
    pid = PairId.coerce(pair_id)
    if n < 0:
        raise ValueError("n must be non-negative")
    lo = _alpha_min_exp(pid, n)
    s = TruncatedSeries.from_terms(_alpha_terms(pid, n, order, extra_i), lo, order + 1)
    if pid is PairId.A:
        return s.mul_binomial(1, 4 * n + 2).div_binomial(1, 2)
    return s.mul_binomial(1, 2 * n + 1).div_binomial(1, 1)


def verify_pair_definition(pair_id, n_max: int, order: int) -> list[VerificationReport]:
    """Check beta_n = sum_r alpha_r / ((a p; p)_(n+r) (p; p)_(n-r)) for n <= n_max.

    Here p = q^b and a = p.  The comparison covers the negative exponents of
    the window too, so any Laurent residue left over shows up as a mismatch.
    """
    pid = PairId.coerce(pair_id)
    b = pid.base_power
    alphas = [alpha_explicit(pid, r, order) for r in range(n_max + 1)]
    out = []
    for n in range(n_max + 1):
        parts = [
            divide_pochhammer(
                divide_pochhammer(alphas[r], PochhammerSpec(1, 2 * b, n + r, step=b)),
                PochhammerSpec(1, b, n - r, step=b),
            )
            for r in range(n + 1)
        ]
        lo = min(p.min_exp for p in parts)
        beta = beta_explicit(pid, n, order)
        lo = min(lo, beta.min_exp)
        total = series_sum(parts, lo, order + 1)
        out.append(compare(f"pair-def-{pid.name}[n={n}]", order, total, beta))
    return out


def bailey_lemma_sides(pair_id, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the Bailey lemma at a = q^b, base q^b, through q^order.

    left  = sum_n (q^b;q^b)_n (-1)^n beta_n q^(b n(n+1)/2)
    right = (1 - q^b) sum_n (-1)^n q^(b n(n+1)/2) alpha_n
    """
    pid = PairId.coerce(pair_id)
    b = pid.base_power
    left, right = [], []
    n = 0
    while n * n <= order:
        shift = b * n * (n + 1) // 2
        beta = beta_explicit(pid, n, order - shift)
        term = multiply_pochhammer(beta, PochhammerSpec(1, b, n, step=b))
        left.append((term * (-1) ** n).shift(shift))
        n += 1
    n = 0
    while True:
        shift = b * n * (n + 1) // 2
        lower = shift + _alpha_min_exp(pid, n)
        if pid is PairId.B:
            lower = shift + n * (n - 1) // 2 - (n * n) // 4
        if lower > order:
            break
        right.append((alpha_explicit(pid, n, order - shift) * (-1) ** n).shift(shift))
        n += 1
    lo = min([0] + [t.min_exp for t in left + right])
    lhs = series_sum(left, lo, order + 1)
    rhs = series_sum(right, lo, order + 1).mul_binomial(1, b)
    return lhs, rhs


def verify_bailey_lemma(pair_id, order: int) -> VerificationReport:
    pid = PairId.coerce(pair_id)
    lhs, rhs = bailey_lemma_sides(pid, order)
    rep = compare(f"lemma-2.2-{pid.name}", order, lhs, rhs)
    if rep.passed:
        bad = [e for e, v in lhs.items() if e < 0] + [e for e, v in rhs.items() if e < 0]
        if bad:
            e = min(bad)
            return VerificationReport(rep.check_id, order, "FAIL", e, str(lhs.get(e)),
                                      str(rhs.get(e)), "negative-exponent residue")
    return rep
