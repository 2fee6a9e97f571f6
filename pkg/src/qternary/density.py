"""Empirical density of sets of positive integers.

Counts always run over 1 <= n <= X; n = 0 is left out.  Ratios are kept as
exact fractions and only rounded (to six places) when rendered.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Sequence

import numpy as np

from .genfun import CoefficientTable
from .ternary import TernaryForm, loeschian_mask, representation_counts, three_squares_mask

DEFAULT_CHECKPOINTS = (10**3, 10**4, 10**5, 10**6)


def render_ratio(r: Fraction, places: int = 6) -> str:
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(r.numerator) / Decimal(r.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


@dataclass(frozen=True)
class DensityReport:
    subject: str
    checkpoints: tuple
    counts: tuple

    def __post_init__(self):
        if len(self.checkpoints) != len(self.counts):
            raise ValueError("one count per checkpoint")
        if any(b <= a for a, b in zip(self.checkpoints, self.checkpoints[1:])):
            raise ValueError("checkpoints must be strictly increasing")
        if any(x < 1 for x in self.checkpoints):
            raise ValueError("checkpoints must be positive")

    @property
    def ratios(self) -> tuple:
        return tuple(Fraction(c, x) for c, x in zip(self.counts, self.checkpoints))

    def rendered_ratios(self) -> tuple:
        return tuple(render_ratio(r) for r in self.ratios)

    def rows(self) -> list[tuple[str, str, str]]:
        return [
            (str(x), str(c), r)
            for x, c, r in zip(self.checkpoints, self.counts, self.rendered_ratios())
        ]


def _checkpoints(checkpoints: Sequence[int]) -> tuple:
    cps = tuple(int(x) for x in checkpoints)
    if not cps:
        raise ValueError("at least one checkpoint is required")
    return cps


def report_from_mask(subject: str, mask: np.ndarray, checkpoints: Sequence[int]) -> DensityReport:
    """mask[n] says whether n has the property; index 0 is ignored."""
    cps = _checkpoints(checkpoints)
    if cps[-1] >= len(mask):
        raise IndexError(f"checkpoint {cps[-1]} beyond data range {len(mask) - 1}")
    running = np.cumsum(np.asarray(mask[1:], dtype=np.int64))
    return DensityReport(subject, cps, tuple(int(running[x - 1]) for x in cps))


def nonzero_density(table: CoefficientTable, checkpoints: Sequence[int]) -> DensityReport:
    mask = np.fromiter((v != 0 for v in table.values), dtype=bool, count=len(table.values))
    return report_from_mask(table.name, mask, checkpoints)


def three_squares_density(checkpoints: Sequence[int] = DEFAULT_CHECKPOINTS) -> DensityReport:
    cps = _checkpoints(checkpoints)
    return report_from_mask("three-squares", three_squares_mask(cps[-1]), cps)


def loeschian_density(checkpoints: Sequence[int] = DEFAULT_CHECKPOINTS) -> DensityReport:
    cps = _checkpoints(checkpoints)
    return report_from_mask("loeschian", loeschian_mask(cps[-1]), cps)


def form_density(form: TernaryForm, checkpoints: Sequence[int]) -> DensityReport:
    """Density of integers represented by a positive definite ternary form.

    Cost grows like X^(3/2); fine up to about 10^5.
    """
    cps = _checkpoints(checkpoints)
    name = "form:" + ",".join(map(str, form.coefficients))
    return report_from_mask(name, representation_counts(form, cps[-1]) > 0, cps)


def running_upper_density(table: CoefficientTable) -> list[tuple[int, Fraction]]:
    """Finite-horizon lim sup estimate of the nonzero density.

    For X = 1, 10, 100, ... (and the last index N of the table) the value is
    max over X <= X' <= N of #{1 <= n <= X' : table[n] != 0} / X'.  The values
    are non-increasing in X.
    """
    N = len(table.values) - 1
    if N < 1:
        raise ValueError("table needs at least the entries n = 0 and n = 1")
    nz = np.fromiter((v != 0 for v in table.values[1:]), dtype=bool, count=N)
    counts = np.cumsum(nz, dtype=np.int64)
    xs = np.arange(1, N + 1, dtype=np.int64)
    # suffix argmax of counts/xs, compared exactly by cross-multiplication
    best = [0] * N
    b = N - 1
    for idx in range(N - 1, -1, -1):
        if counts[idx] * xs[b] > counts[b] * xs[idx]:
            b = idx
        best[idx] = b
    marks = []
    x = 1
    while x <= N:
        marks.append(x)
        x *= 10
    if marks[-1] != N:
        marks.append(N)
    return [(x, Fraction(int(counts[best[x - 1]]), int(xs[best[x - 1]]))) for x in marks]
