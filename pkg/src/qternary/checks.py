"""Named identity checks, one per claim, runnable by id from the CLI."""
from __future__ import annotations

from typing import Callable

from .bailey import verify_bailey_lemma, verify_pair_definition
from .genfun import genfun_k, lhs_27, lhs_28, middle_37
from .partitions import abar_count, b_oracle, bbar_oracle
from .report import VerificationReport, combine, compare
from .series import TruncatedSeries, series_sum
from .ternary import (
    TernaryForm,
    is_sum_three_squares,
    representation_counts,
    rewrite_41,
    rhs_27,
    rhs_28,
    split_components,
)

DEFAULT_K_MAX = 6
DEFAULT_PAIR_N_MAX = 8


def _outer(order: int):
    k = 0
    while k * k <= order:
        yield k
        k += 1


def check_27(order: int, n_max=None) -> list[VerificationReport]:
    return [compare("2.7", order, lhs_27(order), rhs_27(order))]


def check_28(order: int, n_max=None) -> list[VerificationReport]:
    return [compare("2.8", order, lhs_28(order), rhs_28(order))]


def check_37_termwise(order: int, n_max=None) -> list[VerificationReport]:
    return [compare("3.7-termwise", order, middle_37(order), lhs_27(order))]


def check_31_oracle(order: int, n_max=None) -> list[VerificationReport]:
    """genfun_k against brute-force Abar_{k,m}(n) for k <= n_max, n <= order."""
    k_max = DEFAULT_K_MAX if n_max is None else n_max
    subs = []
    for k in range(k_max + 1):
        g = genfun_k(k, order)
        # every part counted by m is at least k + 1
        m_max = order // (k + 1) if k else 0
        for m in range(m_max + 1):
            series = g.a_coefficient(m)
            oracle = TruncatedSeries.from_list([abar_count(k, m, n) for n in range(order + 1)])
            subs.append(compare(f"3.1-oracle[k={k},m={m}]", order, series, oracle))
    return [combine("3.1-oracle", order, subs)]


def check_32_routes(order: int, n_max=None) -> list[VerificationReport]:
    ks = list(_outer(order))
    b_gen = series_sum((genfun_k(k, order, a=1) for k in ks), 0, order + 1)
    bb_gen = series_sum((genfun_k(k, order, a=-1) * (-1) ** k for k in ks), 0, order + 1)
    b_orc = TruncatedSeries.from_list([b_oracle(n) for n in range(order + 1)])
    bb_orc = TruncatedSeries.from_list([bbar_oracle(n) for n in range(order + 1)])
    l28, l27 = lhs_28(order), lhs_27(order)
    subs = [
        compare("3.2-routes[B:series=genfun]", order, l28, b_gen),
        compare("3.2-routes[B:series=oracle]", order, l28, b_orc),
        compare("3.2-routes[Bbar:series=genfun]", order, l27, bb_gen),
        compare("3.2-routes[Bbar:series=oracle]", order, l27, bb_orc),
    ]
    return [combine("3.2-routes", order, subs)]


def check_41(order: int, n_max=None) -> list[VerificationReport]:
    return [compare("4.1", order, rewrite_41(order), rhs_27(order))]


def _pair_def(pair: str):
    def run(order: int, n_max=None) -> list[VerificationReport]:
        n = DEFAULT_PAIR_N_MAX if n_max is None else n_max
        subs = verify_pair_definition(pair, n, order)
        return [combine(f"pair-def-{pair}", order, subs)] + subs

    return run


def _lemma(pair: str):
    def run(order: int, n_max=None) -> list[VerificationReport]:
        return [verify_bailey_lemma(pair, order)]

    return run


def _split(form: str):
    full = {"2.7": rhs_27, "2.8": rhs_28}[form]

    def run(order: int, n_max=None) -> list[VerificationReport]:
        parts = split_components(form, order)
        return [compare(f"split-{form}", order, parts.total(), full(order))]

    return run


def check_legendre(order: int, n_max=None) -> list[VerificationReport]:
    counts = representation_counts(TernaryForm(1, 1, 1), order)
    crit = TruncatedSeries.from_list([int(is_sum_three_squares(n)) for n in range(order + 1)])
    search = TruncatedSeries.from_list([int(c > 0) for c in counts])
    return [compare("legendre-oracle", order, crit, search)]


CHECKS: dict[str, Callable[..., list[VerificationReport]]] = {
    "2.7": check_27,
    "2.8": check_28,
    "3.7-termwise": check_37_termwise,
    "3.1-oracle": check_31_oracle,
    "3.2-routes": check_32_routes,
    "4.1": check_41,
    "pair-def-A": _pair_def("A"),
    "pair-def-B": _pair_def("B"),
    "lemma-2.2-A": _lemma("A"),
    "lemma-2.2-B": _lemma("B"),
    "split-2.7": _split("2.7"),
    "split-2.8": _split("2.8"),
    "legendre-oracle": check_legendre,
}


def run_check(check_id: str, order: int, n_max: int | None = None) -> list[VerificationReport]:
    """First report is the overall verdict; any further ones are sub-checks."""
    try:
        fn = CHECKS[check_id]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}") from None
    return fn(order, n_max)
