from fractions import Fraction
from math import factorial

import pytest
from mpmath import mp, mpf

from millsratio.bounds import (
    CSV_COLUMNS,
    beta,
    certify_grid,
    first_order_enclosure,
    first_order_error_bound,
    komatsu_lower,
    log_convexity_check,
    log_convexity_error,
    second_order_bound,
    second_order_root,
    szarek_werner_upper,
)
from millsratio.errors import DomainError, SingularityError
from millsratio.families import pq_pair, quadratic_triple
from millsratio.oracle import phi_series


class TestFirstOrder:
    def test_order_zero(self):
        enc = first_order_enclosure(0, 2, 128)
        assert enc.lower == 0
        assert enc.upper == mpf("0.5")
        assert enc.lower_source == "Eq15/order=0"

    def test_order_one_at_one(self):
        enc = first_order_enclosure(1, 1, 128)
        assert abs(enc.lower - mpf("0.5")) < mpf(2) ** -120
        assert abs(enc.upper - mpf("0.75")) < mpf(2) ** -120

    def test_order_two_at_one(self):
        enc = first_order_enclosure(2, 1, 128)
        with mp.workprec(160):
            assert abs(enc.lower - mpf(6) / 10) < mpf(2) ** -120
            assert abs(enc.upper - mpf(18) / 26) < mpf(2) ** -120

    def test_rejects_nonpositive_x(self):
        with pytest.raises(DomainError):
            first_order_enclosure(1, 0, 128)

    def test_error_bound_values(self):
        assert first_order_error_bound(0, 2, 128) == mpf("0.5")
        assert abs(first_order_error_bound(1, 1, 128) - mpf("0.5")) < mpf(2) ** -120
        with mp.workprec(160):
            assert abs(first_order_error_bound(4, 1, 128) - mpf(6) / 65) < mpf(2) ** -120

    def test_error_bound_strictly_decreases(self):
        # equivalent exact statement: (n+1) P_n(x) < P_{n+2}(x) for x > 0
        for x in (Fraction(1, 10), Fraction(1), Fraction(10)):
            for n in range(20):
                lhs = (n + 1) * pq_pair(n).p.eval_rational(x)
                assert lhs < pq_pair(n + 2).p.eval_rational(x)


class TestClassicalBounds:
    def test_komatsu(self):
        assert komatsu_lower(0, 128) == 1
        assert komatsu_lower(Fraction(3, 2), 128) == mpf("0.5")
        with mp.workprec(160):
            assert abs(komatsu_lower(-2, 128) - (mp.sqrt(2) + 1)) < mpf(2) ** -120

    def test_komatsu_below_phi_everywhere(self):
        for x in (-5, -2, 0, 1, 10):
            assert komatsu_lower(x, 128) < phi_series(x, 128).value

    def test_szarek_werner(self):
        with mp.workprec(160):
            assert abs(szarek_werner_upper(0, 128) - mp.sqrt(2)) < mpf(2) ** -120
            assert abs(szarek_werner_upper(1, 128) - mpf(2) / 3) < mpf(2) ** -120

    def test_szarek_werner_above_phi(self):
        for x in (Fraction(-1, 2), Fraction(0), Fraction(2), Fraction(9)):
            assert szarek_werner_upper(x, 128) > phi_series(x, 128).value

    def test_szarek_werner_domain(self):
        with pytest.raises(DomainError):
            szarek_werner_upper(-1, 128)
        with pytest.raises(DomainError):
            szarek_werner_upper(Fraction(-3, 2), 128)


class TestSecondOrder:
    def test_root_order_zero(self):
        assert second_order_root(0, 0, "+", 128) == 1

    def test_root_order_one(self):
        got = second_order_root(1, 2, "-", 128)
        with mp.workprec(160):
            expect = 4 / (6 + mp.sqrt(12))
            assert abs(got - expect) < mpf(2) ** -120

    def test_root_order_two(self):
        got = second_order_root(2, 0, "+", 128)
        with mp.workprec(160):
            assert abs(got - mp.sqrt(12) / 3) < mpf(2) ** -120

    def test_root_singularity_at_beta(self):
        # A_1 = x^2 - 1 vanishes at x = 1
        with pytest.raises(SingularityError):
            second_order_root(1, 1, "-", 128)

    def test_even_orders_reproduce_komatsu(self):
        for x in (Fraction(-4), Fraction(-1), Fraction(0), Fraction(3)):
            sb = second_order_bound(0, x, 128)
            assert sb.role == "lower"
            diff = abs(sb.value - komatsu_lower(x, 128))
            assert diff <= 4 * abs(sb.value) * mpf(2) ** -128

    def test_order_one_reproduces_szarek_werner(self):
        for x in (Fraction(-1, 2), Fraction(0), Fraction(2), Fraction(8)):
            sb = second_order_bound(1, x, 128)
            assert sb.role == "upper"
            diff = abs(sb.value - szarek_werner_upper(x, 128))
            assert diff <= 4 * abs(sb.value) * mpf(2) ** -128

    def test_order_two_example(self):
        sb = second_order_bound(2, 1, 128)
        with mp.workprec(160):
            expect = (mp.sqrt(13) - 1) / 4
            assert abs(sb.value - expect) < mpf(2) ** -120

    def test_order_three_matches_published_form(self):
        # (x^4+x^2+16) / (x^5+2x^3+12x+3 sqrt(x^2+16)) is the rationalized form
        for x in (Fraction(1), Fraction(3), Fraction(1, 2)):
            sb = second_order_bound(3, x, 128)
            with mp.workprec(192):
                xv = mpf(x.numerator) / x.denominator
                expect = (xv**4 + xv**2 + 16) / (xv**5 + 2 * xv**3 + 12 * xv + 3 * mp.sqrt(xv**2 + 16))
                assert abs(sb.value - expect) < mpf(2) ** -118

    def test_odd_domain_error(self):
        with pytest.raises(DomainError):
            second_order_bound(1, -2, 128)
        with pytest.raises(DomainError):
            second_order_bound(3, -1, 128)  # beta_1 < 1


class TestBeta:
    def test_beta_zero_is_exactly_one(self):
        root = beta(0)
        assert root.value == 1

    def test_beta_one_value(self):
        root = beta(1)
        assert abs(root.value - mpf("0.871338")) < mpf("5e-6")

    def test_bracket_signs_are_exact(self):
        for m in range(1, 6):
            root = beta(m)
            a = quadratic_triple(2 * m + 1).a
            lo, hi = root.bracket
            assert a.eval_rational(lo) < 0 < a.eval_rational(hi)
            assert lo < hi
            assert 0 < root.value <= 1

    def test_tolerance_respected(self):
        root = beta(2, Fraction(1, 10**8))
        lo, hi = root.bracket
        assert hi - lo <= Fraction(1, 10**8)

    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            beta(1, Fraction(0))


class TestLogConvexity:
    def test_order_zero_at_zero(self):
        # phi(0)^2 - 1 = pi/2 - 1
        with mp.workprec(160):
            expect = mp.pi / 2 - 1
            assert abs(log_convexity_check(0, 0, 128) - expect) < mpf(2) ** -100

    def test_order_one_at_zero(self):
        with mp.workprec(160):
            expect = 2 - mp.pi / 2
            assert abs(log_convexity_check(1, 0, 128) - expect) < mpf(2) ** -100

    def test_order_three_positive(self):
        value = log_convexity_check(3, 1, 128)
        assert value > log_convexity_error(3, 1, 128)

    def test_positive_across_orders(self):
        for x in (Fraction(-3), Fraction(0), Fraction(2)):
            for n in range(8):
                assert log_convexity_check(n, x, 128) > 0


class TestCertifyGrid:
    def test_eq15_certificates(self):
        certs = certify_grid("eq15", [1], [Fraction(1)], 128)
        assert len(certs) == 1
        c = certs[0]
        assert c.verdict == "pass"
        assert c.family == "Eq15"
        assert float(c.margin) == pytest.approx(0.75 - 0.65568, abs=1e-4)

    def test_i2_at_zero(self):
        certs = certify_grid("i", [2], [Fraction(0)], 128)
        main = [c for c in certs if c.family == "I_2"]
        assert main[0].verdict == "pass"
        with mp.workprec(160):
            expect = mp.sqrt(mp.pi / 2) - mp.sqrt(12) / 3
            assert abs(main[0].margin - expect) < mpf("1e-30")

    def test_eq18_at_zero(self):
        certs = certify_grid("eq18", [0], [Fraction(0)], 128)
        assert certs[0].verdict == "pass"
        with mp.workprec(160):
            assert abs(certs[0].margin - (mp.sqrt(mp.pi / 2) - 1)) < mpf("1e-30")

    def test_sharper_companions_emitted(self):
        certs = certify_grid("i", [2, 3], [Fraction(2)], 128)
        families = {c.family for c in certs}
        assert {"I_2", "I_3", "I_2_sharper", "I_3_sharper"} <= families
        assert all(c.verdict == "pass" for c in certs)

    def test_sorted_and_serializable(self):
        certs = certify_grid("eq16", [0, 1, 2], [Fraction(1), Fraction(1, 2)], 128)
        keys = [(c.family, c.n, c.x) for c in certs]
        assert keys == sorted(keys)
        d = certs[0].to_json_dict()
        assert list(d.keys()) == CSV_COLUMNS
        assert d["x"] == "1/2"

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            certify_grid("eq99", [0], [Fraction(1)], 128)
