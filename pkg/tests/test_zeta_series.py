import math
from fractions import Fraction

import mpmath
import pytest

from ehz import harmonic as ha
from ehz import numerics as nu
from ehz import zeta_series as zs
from ehz.numerics import Mode, PrecisionContext
from ehz.zeta_series import (
    CatalanKind,
    EulerSumKind,
    EvalRequest,
    Formula,
    MixedKind,
    PolylogIdentity,
)

F = Fraction
HIGH = PrecisionContext(30, Mode.HIGH)
FAST = PrecisionContext(30, Mode.FAST)


def within_tail(result, reference, factor=3.0) -> bool:
    return abs(float(result.value) - float(reference)) <= factor * float(
        result.tail_estimate
    )


class TestHurwitzRef:
    def test_at_one(self):
        with nu.working_precision(40):
            assert abs(zs.hurwitz_ref(2, 1, HIGH) - nu.const_zeta(2, HIGH)) < mpmath.mpf(10) ** -28

    @pytest.mark.parametrize("s", [2, 3, 4])
    def test_half_shift_doubling(self, s):
        with nu.working_precision(40):
            got = zs.hurwitz_ref(s, F(1, 2), HIGH)
            want = (2**s - 1) * nu.const_zeta(s, HIGH)
            assert abs(got - want) < mpmath.mpf(10) ** -26

    def test_quarter_shift_catalan(self):
        with nu.working_precision(40):
            got = zs.hurwitz_ref(2, F(1, 4), HIGH)
            want = nu.const_pi(HIGH) ** 2 + 8 * nu.const_catalan(HIGH)
            assert abs(got - want) < mpmath.mpf(10) ** -26


class TestHasse:
    def test_zeta2_error_below_tail(self):
        res = zs.hasse_hurwitz(2, F(1), 10**4, FAST)
        ref = nu.const_zeta(2, FAST)
        assert abs(res.value - ref) <= res.tail_estimate

    def test_terms_used_contract(self):
        res = zs.hasse_hurwitz(2, F(1), 500, FAST)
        assert res.terms_used == 500

    def test_analytic_continuation_at_zero(self):
        res = zs.hasse_hurwitz(0, F(1), 50, FAST)
        assert abs(res.value - (-0.5)) < 1e-6
        assert res.tail_estimate == 0.0

    def test_s_equals_one_rejected(self):
        with pytest.raises(nu.DomainError):
            zs.hasse_hurwitz(1, F(1), 10, FAST)

    def test_noninteger_cap(self):
        with pytest.raises(nu.DomainError):
            zs.hasse_hurwitz(2.5, F(1), 10**4, FAST)

    def test_noninteger_within_tails(self):
        res = zs.hasse_hurwitz(2.5, F(1), 200, HIGH)
        ref = zs.hurwitz_ref(2.5, F(1), HIGH)
        assert within_tail(res, ref)

    def test_rows_match_euler_terms_exactly(self):
        # the double sum's exact rows, reindexed, are the single-series
        # terms: brute-force binomial inner sums against the Bell form
        for q, x in ((1, F(1)), (2, F(1, 2)), (3, F(7, 4))):
            terms = zs.euler_hurwitz_exact_terms(q, x, 40)
            for n in range(40):
                row = ha.coppo_lhs(n, q, x) / ((n + 1) * q)
                assert row == terms[n]


class TestEta:
    def test_log2(self):
        res = zs.sondow_alt(1, 60, FAST)
        assert abs(res.value - math.log(2)) < 1e-14

    def test_eta2_twelve_digits_by_50(self):
        res = zs.sondow_alt(2, 50, FAST)
        assert abs(res.value - math.pi**2 / 12) < 1e-12

    def test_alternating_hurwitz_catalan(self):
        res = zs.alt_hurwitz(2, F(1, 2), 60, FAST)
        assert abs(res.value - 4 * nu.const_catalan(FAST)) < 1e-12

    def test_reference_matches(self):
        req = EvalRequest(formula=Formula.ALT_HURWITZ, s_or_q=3, x=F(1, 3), N=60, ctx=FAST)
        res = zs.evaluate(req)
        ref = zs.reference_value(req)
        assert abs(res.value - ref) < 1e-11


class TestEulerHurwitz:
    def test_q1_is_basel_partial(self):
        exact = Fraction(0)
        for k in range(1, 201):
            exact += Fraction(1, k * k)
        res = zs.euler_hurwitz(1, F(1), 200, FAST)
        assert abs(res.value - float(exact)) < 1e-14

    def test_exact_terms_q4_bracket_identity(self):
        # term n must equal (1/4!) ([H]^3 + 3 H^(2) H + 2 H^(3)) / n^2 exactly
        terms = zs.euler_hurwitz_exact_terms(4, F(1), 1000)
        for n in range(1, 1001):
            h1, h2, h3 = ha.H(n, 1), ha.H(n, 2), ha.H(n, 3)
            want = (h1**3 + 3 * h2 * h1 + 2 * h3) / (24 * n * n)
            assert terms[n - 1] == want

    def test_route_agreement_matrix(self):
        for q in (1, 2, 3, 4):
            for x in (F(1), F(1, 2), F(3, 2)):
                a = zs.euler_hurwitz(q, x, 10**4, FAST)
                b = zs.stirling_route(q, x, 10**4, FAST)
                ref = zs.hurwitz_ref(q + 1, x, FAST)
                assert abs(a.value - b.value) <= float(a.tail_estimate) + float(
                    b.tail_estimate
                )
                assert within_tail(a, ref)
                assert within_tail(b, ref)

    def test_rejects_bad_args(self):
        with pytest.raises(nu.DomainError):
            zs.euler_hurwitz(0, F(1), 10, FAST)
        with pytest.raises(nu.DomainError):
            zs.euler_hurwitz(2, F(-1), 10, FAST)

    @pytest.mark.parametrize("q", [6, 7])
    def test_generic_bell_path_beyond_fast_orders(self, q):
        a = zs.euler_hurwitz(q, F(1), 4000, FAST)
        b = zs.stirling_route(q, F(1), 4000, FAST)
        ref = nu.const_zeta(q + 1, FAST)
        assert abs(float(a.value) - float(ref)) <= 3 * float(a.tail_estimate)
        assert abs(float(b.value) - float(ref)) <= 3 * float(b.tail_estimate)


class TestStirlingRoute:
    def test_q1_identical_terms_to_euler_route(self):
        a = zs.euler_hurwitz_exact_terms(1, F(2, 3), 50)
        b = zs.stirling_route_exact_terms(1, F(2, 3), 50)
        assert a == b

    def test_q2_unit_terms(self):
        terms = zs.stirling_route_exact_terms(2, F(1), 30)
        for n in range(1, 31):
            assert terms[n - 1] == ha.H(n - 1, 1) / Fraction(n * n)

    def test_half_shift_seven_zeta3(self):
        res = zs.stirling_route(2, F(1, 2), 10**4, FAST)
        assert within_tail(res, 7 * nu.const_zeta(3, FAST))


class TestShen:
    def test_p1_terms_are_inverse_squares(self):
        res = zs.shen_series(1, 100, FAST)
        exact = float(sum(Fraction(1, k * k) for k in range(1, 101)))
        assert abs(res.value - exact) < 1e-14

    def test_p2_within_tail(self):
        res = zs.shen_series(2, 2000, FAST)
        assert within_tail(res, nu.const_zeta(3, FAST))

    def test_p3_within_tail(self):
        res = zs.shen_series(3, 1000, FAST)
        assert within_tail(res, nu.const_zeta(4, FAST))


class TestMixed:
    @pytest.mark.parametrize(
        "kind,q", [(MixedKind.Z4_457, 4), (MixedKind.Z5_457B, 5), (MixedKind.Z6_459, 6)]
    )
    def test_unit_shift(self, kind, q):
        res = zs.mixed_q(kind, F(1), 10**4, FAST)
        assert within_tail(res, nu.const_zeta(q, FAST))

    def test_half_shift(self):
        res = zs.mixed_q(MixedKind.Z4_457, F(1, 2), 10**4, FAST)
        assert within_tail(res, zs.hurwitz_ref(4, F(1, 2), FAST))


class TestEulerSums:
    @pytest.mark.parametrize(
        "kind",
        [EulerSumKind.E41, EulerSumKind.E43, EulerSumKind.E43_2, EulerSumKind.E45_8, EulerSumKind.E45_10],
    )
    def test_within_three_tails_at_1e4(self, kind):
        res = zs.euler_sum_partial(kind, 10**4, FAST)
        assert within_tail(res, zs.euler_sum_target(kind, FAST))

    @pytest.mark.parametrize(
        "kind", [EulerSumKind.ALT2, EulerSumKind.ALT3, EulerSumKind.ALT4, EulerSumKind.ALT5]
    )
    def test_alternating_family_reaches_twelve_digits(self, kind):
        res = zs.euler_sum_partial(kind, 80, FAST)
        target = zs.euler_sum_target(kind, FAST)
        assert abs(res.value - target) < 1e-12 * abs(target)

    def test_zeta6_routes_agree_within_combined_tails(self):
        a = zs.euler_sum_partial(EulerSumKind.E43_2, 10**5, FAST)
        b = zs.euler_sum_partial(EulerSumKind.E45_10, 10**5, FAST)
        z6 = float(nu.const_zeta(6, FAST))
        norm_a = float(a.value) / 120
        norm_b = float(b.value) / 60
        combined = float(a.tail_estimate) / 120 + float(b.tail_estimate) / 60
        assert abs(norm_a - norm_b) <= combined
        assert abs(norm_a - z6) <= 3 * float(a.tail_estimate) / 120
        assert abs(norm_b - z6) <= 3 * float(b.tail_estimate) / 60

    def test_integer_q_rejects_fractional(self):
        req = EvalRequest(formula=Formula.EULER_HURWITZ, s_or_q=2.5, x=F(1), N=10, ctx=FAST)
        with pytest.raises(nu.DomainError):
            zs.evaluate(req)


class TestCatalan:
    @pytest.mark.parametrize(
        "kind,target_of",
        [
            (CatalanKind.RAMANUJAN_38, "catalan"),
            (CatalanKind.CENTRAL_38_1, "catalan"),
            (CatalanKind.ZETA2_37, "zeta2"),
            (CatalanKind.ZETA3_HALF_45_6, "7zeta3"),
        ],
    )
    def test_within_tails(self, kind, target_of):
        res = zs.catalan_series(kind, 10**4, FAST)
        target = {
            "catalan": nu.const_catalan(FAST),
            "zeta2": nu.const_zeta(2, FAST),
            "7zeta3": 7 * nu.const_zeta(3, FAST),
        }[target_of]
        assert within_tail(res, target)

    def test_two_catalan_series_agree_after_tail_correction(self):
        a = zs.catalan_series(CatalanKind.RAMANUJAN_38, 10**4, FAST)
        b = zs.catalan_series(CatalanKind.CENTRAL_38_1, 10**4, FAST)
        corrected_a = res_plus_tail(a)
        corrected_b = res_plus_tail(b)
        assert abs(corrected_a - corrected_b) < 1e-3


def res_plus_tail(res) -> float:
    return float(res.value) + float(res.tail_estimate)


class TestPolylog:
    def test_dilog_half_closed_form(self):
        with nu.working_precision(40):
            got = zs.polylog(2, F(1, 2), HIGH)
            want = nu.const_pi(HIGH) ** 2 / 12 - nu.const_log2(HIGH) ** 2 / 2
            assert abs(got - want) < mpmath.mpf(10) ** -25

    def test_domain(self):
        with pytest.raises(nu.DomainError):
            zs.polylog(2, 1.0, FAST)

    def test_identity_14_4(self):
        lhs, rhs = zs.polylog_identity_check(PolylogIdentity.E14_4, 2, F(1, 2), 80, HIGH)
        assert abs(float(lhs) - float(rhs)) < 1e-10

    def test_identity_14_3_within_tail(self):
        lhs, rhs = zs.polylog_identity_check(PolylogIdentity.E14_3, 1, F(1, 2), 400, HIGH)
        # rows decay like (log n + c)/n^2; analytic tail at N = 400
        tail = zs._tail_from_last(_e14_3_row(400), 400, 1.0, 1, 1.0)
        assert abs(float(lhs) - float(rhs)) <= 3 * tail


def _e14_3_row(n: int) -> float:
    total = Fraction(0)
    c = 1
    yk = Fraction(1)
    for k in range(1, n + 1):
        c = c * (n - k + 1) // k
        yk *= Fraction(1, 2)
        t = Fraction(c, k) * yk
        total += -t if k % 2 else t
    return abs(float(total / n**2))


class TestDigamma:
    def test_single_term(self):
        res = zs.digamma_half_sum(2, 1, FAST)
        psi_half = -nu.const_gamma(FAST) - 2 * math.log(2)
        assert abs(res.value - psi_half) < 1e-15

    def test_power4_fast_convergence(self):
        res = zs.digamma_half_sum(4, 1000, FAST)
        assert abs(res.value - zs.digamma_half_target(4, FAST)) < 1e-4

    def test_power2_within_tail(self):
        res = zs.digamma_half_sum(2, 10**4, FAST)
        assert within_tail(res, zs.digamma_half_target(2, FAST))

    def test_bad_power(self):
        with pytest.raises(nu.DomainError):
            zs.digamma_half_sum(3, 10, FAST)


class TestConvergenceTable:
    def test_euler_hurwitz_unit_exponent(self):
        req = EvalRequest(formula=Formula.EULER_HURWITZ, s_or_q=1, x=F(1), N=1, ctx=FAST)
        rows = zs.convergence_table(req, [100, 1000, 10000])
        expo = zs.fit_convergence_exponent(rows)
        assert abs(expo - (-1.0)) < 0.05
        for row in rows:
            assert row.abs_error == abs(float(row.partial) - float(row.reference))

    def test_half_shift_exponent(self):
        req = EvalRequest(formula=Formula.EULER_HURWITZ, s_or_q=1, x=F(1, 2), N=1, ctx=FAST)
        rows = zs.convergence_table(req, [100, 1000, 10000])
        expo = zs.fit_convergence_exponent(rows)
        assert abs(expo - (-0.5)) < 0.05

    def test_geometric_halves_per_term(self):
        req = EvalRequest(formula=Formula.SONDOW_ALT, s_or_q=2, x=None, N=1, ctx=FAST)
        rows = zs.convergence_table(req, [10, 20, 40])
        errs = [float(r.abs_error) for r in rows]
        assert errs[1] < errs[0] * 2.0**-9
        assert errs[2] == 0 or errs[2] < errs[1] * 2.0**-9

    def test_requires_increasing(self):
        req = EvalRequest(formula=Formula.SHEN, s_or_q=2, x=None, N=1, ctx=FAST)
        with pytest.raises(nu.DomainError):
            zs.convergence_table(req, [100, 100])


class TestDeterminism:
    def test_fast_bit_identical(self):
        a = zs.euler_hurwitz(3, F(1, 2), 5000, FAST)
        b = zs.euler_hurwitz(3, F(1, 2), 5000, FAST)
        assert repr(a.value) == repr(b.value)
        assert repr(float(a.tail_estimate)) == repr(float(b.tail_estimate))

    def test_high_bit_identical(self):
        a = zs.stirling_route(2, F(1, 3), 400, HIGH)
        b = zs.stirling_route(2, F(1, 3), 400, HIGH)
        assert str(a.value) == str(b.value)


class TestFastHighAgreement:
    @pytest.mark.parametrize(
        "make",
        [
            lambda ctx: zs.euler_hurwitz(3, F(1, 2), 2000, ctx),
            lambda ctx: zs.mixed_q(MixedKind.Z5_457B, F(1), 2000, ctx),
            lambda ctx: zs.catalan_series(CatalanKind.CENTRAL_38_1, 2000, ctx),
            lambda ctx: zs.euler_sum_partial(EulerSumKind.E41, 2000, ctx),
            lambda ctx: zs.shen_series(2, 2000, ctx),
            lambda ctx: zs.digamma_half_sum(2, 500, ctx),
        ],
    )
    def test_modes_agree_to_thirteen_digits(self, make):
        a = make(FAST)
        b = make(HIGH)
        assert abs(float(a.value) - float(b.value)) < 1e-13 * max(1.0, abs(float(b.value)))


class TestTailHonesty:
    def test_acceptance_style_matrix(self):
        cases = [
            zs.euler_hurwitz(1, F(1, 4), 2000, FAST),
            zs.euler_hurwitz(2, F(1), 2000, FAST),
            zs.stirling_route(3, F(3, 2), 2000, FAST),
            zs.shen_series(2, 2000, FAST),
            zs.catalan_series(CatalanKind.CENTRAL_38_1, 2000, FAST),
            zs.mixed_q(MixedKind.Z6_459, F(1), 2000, FAST),
        ]
        refs = [
            zs.hurwitz_ref(2, F(1, 4), FAST),
            zs.hurwitz_ref(3, F(1), FAST),
            zs.hurwitz_ref(4, F(3, 2), FAST),
            nu.const_zeta(3, FAST),
            nu.const_catalan(FAST),
            nu.const_zeta(6, FAST),
        ]
        for res, ref in zip(cases, refs):
            assert abs(float(res.value) - float(ref)) <= 3 * float(res.tail_estimate)
