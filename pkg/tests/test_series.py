import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qternary.series import (
    A,
    APoly,
    CoefficientDomain,
    OutOfWindowError,
    PochhammerSpec,
    TruncatedSeries,
    add,
    coefficient,
    div_binomial,
    from_terms,
    mul,
    pochhammer,
)


def S(values, min_exp=0):
    return TruncatedSeries.from_list(values, min_exp)


class TestFromTerms:
    def test_zero(self):
        z = from_terms([], 0, 5)
        assert z.coeffs == (0,) * 5 and z.order == 5

    def test_one(self):
        assert from_terms([(0, 1)], 0, 5).to_list() == [1, 0, 0, 0, 0]

    def test_laurent(self):
        s = from_terms([(-1, 1), (3, -2)], -2, 6)
        assert s.min_exp == -2 and s.order == 6
        assert s.to_list(-2, 6) == [0, 1, 0, 0, 0, -2, 0, 0]

    @pytest.mark.parametrize("e", [-3, 6, 10])
    def test_outside_window(self, e):
        with pytest.raises(OutOfWindowError):
            from_terms([(e, 1)], -2, 6)

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            from_terms([(0, 1.0)], 0, 2)


class TestAdd:
    def test_cancellation(self):
        assert add(S([1, -1, 0]), S([0, 1, 0])) == S([1, 0, 0])

    def test_identity(self):
        x = S([3, 0, -7, 2])
        assert add(TruncatedSeries.zero(4), x).coeffs == x.coeffs

    def test_laurent_cancellation(self):
        x = from_terms([(-1, 1)], -1, 5)
        y = from_terms([(-1, -1), (2, 1)], -1, 5)
        r = add(x, y)
        assert r.items() == [(2, 1)]

    def test_window_is_min_min(self):
        r = S([1, 2, 3], min_exp=-1) + S([1, 1, 1, 1, 1])
        assert (r.min_exp, r.order) == (-1, 2)


class TestMul:
    def test_telescoping_inverse(self):
        geo = S([1] * 10)
        assert mul(S([1, -1] + [0] * 8), geo) == TruncatedSeries.one(10)

    def test_identity(self):
        x = S([2, -1, 0, 5])
        assert (x * TruncatedSeries.one(4)).coeffs == x.coeffs

    def test_hand_expansion(self):
        # (1 - q)(1 - q^2) = 1 - q - q^2 + q^3
        r = S([1, -1, 0, 0, 0]) * S([1, 0, -1, 0, 0])
        assert r.to_list() == [1, -1, -1, 1, 0]

    def test_order_rule(self):
        x = S([1, 2, 3], min_exp=-1)  # known on [-1, 2)
        y = S([1, 1, 1, 1, 1, 1], min_exp=1)  # known on [1, 7)
        r = x * y
        assert r.min_exp == 0
        assert r.order == min(2 + 1, 7 - 1)


class TestDivBinomial:
    def test_geometric(self):
        assert div_binomial(TruncatedSeries.one(6), 1, 1).to_list() == [1] * 6

    def test_exact_quotient(self):
        assert div_binomial(S([1, -1, 0, 0]), 1, 1) == TruncatedSeries.one(4)

    def test_alternating(self):
        r = div_binomial(TruncatedSeries.one(7), -1, 2)
        assert r.to_list() == [1, 0, -1, 0, 1, 0, -1]

    @pytest.mark.parametrize("e", [0, -1])
    def test_nonunit_divisor(self, e):
        with pytest.raises(ValueError):
            div_binomial(TruncatedSeries.one(3), 1, e)

    def test_marker_coefficient(self):
        # 1/(1 - a q) = sum a^m q^m
        r = TruncatedSeries.one(4).div_binomial(A, 1)
        assert [r[m] for m in range(4)] == [APoly.monomial(m) for m in range(4)]
        assert r.domain is CoefficientDomain.POLYNOMIAL_IN_A


class TestPochhammer:
    def test_empty(self):
        assert pochhammer(PochhammerSpec(1, 1, 0), 5) == TruncatedSeries.one(5)

    def test_q_q_2(self):
        assert pochhammer(PochhammerSpec(1, 1, 2), 5).to_list() == [1, -1, -1, 1, 0]

    def test_minus_q_2(self):
        assert pochhammer(PochhammerSpec(-1, 1, 2), 5).to_list() == [1, 1, 1, 1, 0]

    def test_step(self):
        # (q^2;q^2)_2 = (1 - q^2)(1 - q^4)
        assert pochhammer(PochhammerSpec(1, 2, 2, step=2), 7).to_list() == [1, 0, -1, 0, -1, 0, 1]


class TestCoefficient:
    def test_zero(self):
        assert coefficient(TruncatedSeries.zero(5), 3) == 0

    def test_forced(self):
        assert coefficient(S([1, -2, 0]), 1) == -2

    def test_out_of_window(self):
        with pytest.raises(OutOfWindowError):
            coefficient(TruncatedSeries.zero(5), 7)

    def test_below_window_is_error_but_get_is_zero(self):
        s = S([1, 2], min_exp=0)
        with pytest.raises(OutOfWindowError):
            s.coefficient(-1)
        assert s.get(-1) == 0


# -- properties ---------------------------------------------------------------

small = st.integers(-5, 5)


@st.composite
def series(draw, max_len=12):
    lo = draw(st.integers(-3, 3))
    vals = draw(st.lists(small, min_size=1, max_size=max_len))
    return S(vals, lo)


@st.composite
def apoly_series(draw):
    lo = draw(st.integers(-2, 2))
    vals = draw(
        st.lists(st.lists(small, max_size=3).map(APoly), min_size=1, max_size=8)
    )
    return S(vals, lo)


@given(series(), series())
def test_add_commutes(x, y):
    assert (x + y).coeffs == (y + x).coeffs


@given(series(), series(), series())
def test_add_associates(x, y, z):
    assert ((x + y) + z).coeffs == (x + (y + z)).coeffs


@given(series(), series())
def test_mul_commutes(x, y):
    l, r = x * y, y * x
    assert (l.min_exp, l.order, l.coeffs) == (r.min_exp, r.order, r.coeffs)


@given(series(), series(), series())
def test_mul_associates(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(series(), series(), series())
def test_distributive(x, y, z):
    assert x * (y + z) == x * y + x * z


@given(apoly_series(), apoly_series())
def test_apoly_ring_laws(x, y):
    assert x * y == y * x
    assert (x + y) - y == x


@given(series(), st.sampled_from([1, -1, 2, -3]), st.integers(1, 5))
def test_div_binomial_inverts_mul(x, c, e):
    y = x.div_binomial(c, e)
    assert y.mul_binomial(c, e).coeffs == x.coeffs
    binom = from_terms([(0, 1), (e, -c)] if e < 40 else [(0, 1)], 0, 40)
    assert y * binom == x


@given(series(max_len=20), series(max_len=20), st.integers(1, 10))
def test_truncation_correctness(x, y, cut):
    # computing at full precision then truncating equals computing on truncated inputs
    full = (x * y).truncate((x * y).order - cut)
    xt = x.truncate(x.order - cut)
    yt = y.truncate(y.order - cut)
    small_prod = xt * yt
    assert full == small_prod.truncate(full.order)
    d = x.div_binomial(2, 3)
    assert d.truncate(x.order - cut).coeffs == xt.div_binomial(2, 3).coeffs


@settings(max_examples=50)
@given(st.sampled_from([1, -1, A]), st.integers(0, 4), st.integers(0, 6), st.integers(1, 20))
def test_pochhammer_is_fold_of_mul(c, e, n, order):
    spec = PochhammerSpec(c, e, n)
    folded = TruncatedSeries.one(order)
    for cc, ee in spec.factors():
        folded = folded * from_terms([(0, 1)] + ([(ee, -cc)] if ee < order else []), 0, order)
    assert pochhammer(spec, order) == folded


def test_apoly_int_interop():
    assert APoly((1,)) == 1
    assert APoly() == 0 and not APoly()
    assert (A * A - A + 3).c == (3, -1, 1)
    assert (A + 1).evaluate(-1) == 0
    with pytest.raises(ValueError):
        APoly.monomial(-1)


def test_immutable():
    s = S([1, 2])
    with pytest.raises(AttributeError):
        s.order = 9


def test_equality_is_on_common_window():
    assert S([1, 2, 3]) == S([1, 2])
    assert S([1, 2, 3]) != S([1, 5])
