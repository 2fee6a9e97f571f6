"""Exact q-series toolkit for Bailey-pair identities, the partition counts
B(n) and Bbar(n), and their ternary quadratic form expansions."""
from .bailey import (
    PAIR_A,
    PAIR_B,
    BaileyPair,
    PairId,
    alpha_explicit,
    bailey_lemma_sides,
    beta_explicit,
    verify_pair_definition,
)
from .density import (
    DensityReport,
    loeschian_density,
    nonzero_density,
    running_upper_density,
    three_squares_density,
)
from .genfun import (
    CoefficientTable,
    b_table,
    bbar_table,
    f_poly,
    genfun_k,
    lhs_27,
    lhs_28,
    middle_37,
)
from .partitions import a_count, abar_count, b_oracle, bbar_oracle, enumerate_partitions
from .report import VerificationReport
from .series import (
    A,
    APoly,
    CoefficientDomain,
    OutOfWindowError,
    PochhammerSpec,
    TruncatedSeries,
    pochhammer,
)
from .ternary import (
    TernaryForm,
    is_sum_three_squares,
    loeschian_upto,
    represent_count,
    representable_upto,
    rewrite_41,
    rhs_27,
    rhs_28,
    split_components,
)

__version__ = "0.1.0"
