#include <doctest.h>

#include <random>

#include "qsf/rogers_szego.hpp"

using namespace qsf;

namespace {
double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
}
}  // namespace

TEST_CASE("rs_direct small cases") {
    const auto h0 = rs_direct<double>(0, 0.5);
    CHECK(h0.degree() == 0);
    CHECK(h0.coeff(0) == 1.0);

    const auto h1 = rs_direct<double>(1, 0.5);
    CHECK(h1.coeff(0) == 1.0);
    CHECK(h1.coeff(1) == 1.0);

    const auto h2 = rs_direct<Rational>(2, Rational(1, 2));
    CHECK(h2.coeff(0) == Rational(1));
    CHECK(h2.coeff(1) == Rational(3, 2));  // 1 + q at q = 1/2
    CHECK(h2.coeff(2) == Rational(1));
    CHECK(h2.degree() == 2);
}

TEST_CASE("rs_recurrence matches rs_direct exactly") {
    CHECK(rs_recurrence<double>(0, 0.7) == QPolynomial<double>::one());
    for (const Rational& q : {Rational(1, 2), Rational(1, 3), Rational(2, 5)})
        for (int n = 0; n <= 20; ++n)
            CHECK(rs_recurrence<Rational>(n, q) == rs_direct<Rational>(n, q));
}

TEST_CASE("rs_eval") {
    CHECK(rs_eval(6, Complex{0.0, 0.0}, 0.3).real() == doctest::Approx(1.0));
    CHECK(rs_eval(2, Complex{1.0, 0.0}, 0.5).real() == doctest::Approx(3.5));
    double sum = 0.0;
    for (int k = 0; k <= 3; ++k) sum += qbinomial(3, k, 0.4);
    CHECK(rs_eval(3, Complex{1.0, 0.0}, 0.4).real() == doctest::Approx(sum));
}

TEST_CASE("raising, lowering, number operators on the H basis") {
    const Rational q(1, 2);
    SUBCASE("raise") {
        CHECK(rs_raise(rs_direct<Rational>(0, q), q) == rs_direct<Rational>(1, q));
        CHECK(rs_raise(rs_direct<Rational>(1, q), q) == rs_direct<Rational>(2, q));
        CHECK(rs_raise(QPolynomial<Rational>::zero(), q).is_zero());
        for (int n = 0; n <= 30; ++n)
            CHECK(rs_raise(rs_direct<Rational>(n, q), q, n) ==
                  rs_direct<Rational>(n + 1, q));
    }
    SUBCASE("lower") {
        CHECK(rs_lower(rs_direct<Rational>(0, q), q).is_zero());
        CHECK(rs_lower(rs_direct<Rational>(1, q), q) == QPolynomial<Rational>::one());
        // S- H_3 = [3] H_2 = 7/4 H_2 at q = 1/2
        CHECK(rs_lower(rs_direct<Rational>(3, q), q) ==
              Rational(7, 4) * rs_direct<Rational>(2, q));
    }
    SUBCASE("number") {
        CHECK(rs_number(rs_direct<Rational>(0, q), q).is_zero());
        CHECK(rs_number(rs_direct<Rational>(2, q), q) ==
              Rational(3, 2) * rs_direct<Rational>(2, q));
        CHECK(rs_number(rs_direct<Rational>(1, q), q) == rs_direct<Rational>(1, q));
    }
}

TEST_CASE("generating function, product form") {
    CHECK(rs_generating_closed(Complex{0.0, 0.0}, Complex{0.4, 0.0}, 0.5).real() ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(rs_generating_closed(Complex{1.2, 0.0}, Complex{0.1, 0.0}, 0.5),
                    DomainError);

    // series-side oracle at alpha = 0.3, y = 0.7, q = 0.5
    const double q = 0.5, alpha = 0.3, y = 0.7;
    Complex series{0.0, 0.0};
    double poch = 1.0;
    for (int m = 0; m < 200; ++m) {
        series += std::pow(alpha, m) / poch * rs_eval(m, Complex{y, 0.0}, q);
        poch *= (1.0 - std::pow(q, m + 1.0));
    }
    const Complex closed = rs_generating_closed(Complex{alpha, 0.0}, Complex{y, 0.0}, q);
    CHECK(std::abs(closed - series) <= 1e-12 * std::abs(closed));

    // y = 0 collapses to 1/(alpha;q)_inf
    const Complex at0 = rs_generating_closed(Complex{alpha, 0.0}, Complex{0.0, 0.0}, q);
    const Complex eq = 1.0 / qpochhammer_inf(Complex{alpha, 0.0}, Complex{q, 0.0}).value;
    CHECK(std::abs(at0 - eq) <= 1e-14 * std::abs(eq));
}

TEST_CASE("generating function with Gaussian q-weights") {
    CHECK(rs_generating2_closed(Complex{0.0, 0.0}, Complex{0.4, 0.0}, 0.5).real() ==
          doctest::Approx(1.0));

    // series side: sum_m t^m q^{m(m-1)/2} H_m(y) / (q;q)_m
    const double q = 0.5, t = 0.4, y = 0.6;
    Complex series{0.0, 0.0};
    double f = 1.0;
    for (int m = 0; m < 120; ++m) {
        series += f * rs_eval(m, Complex{y, 0.0}, q).real();
        f *= t * std::pow(q, m) / (1.0 - std::pow(q, m + 1.0));
    }
    const Complex closed = rs_generating2_closed(Complex{t, 0.0}, Complex{y, 0.0}, q);
    CHECK(std::abs(closed - series) <= 1e-12 * std::abs(closed));

    // y = 0: the series is sum t^m q^{m(m-1)/2}/(q;q)_m = (-t;q)_inf
    const Complex at0 = rs_generating2_closed(Complex{t, 0.0}, Complex{0.0, 0.0}, q);
    const Complex prod = qpochhammer_inf(Complex{-t, 0.0}, Complex{q, 0.0}).value;
    CHECK(std::abs(at0 - prod) <= 1e-13 * std::abs(prod));
}

TEST_CASE("q-difference equation residual") {
    CHECK(rs_qdifference_residual<double, Complex>(0, Complex{1.3, 0.0}, 0.5) ==
          Complex{0.0, 0.0});

    const Complex r5 = rs_qdifference_residual<double, Complex>(5, Complex{0.3, 0.0}, 0.6);
    CHECK(std::abs(r5) <= 1e-12 * (1.0 + std::abs(rs_eval(5, Complex{0.3, 0.0}, 0.6))));

    const Rational exact =
        rs_qdifference_residual<Rational, Rational>(8, Rational(2, 3), Rational(1, 2));
    CHECK(exact == Rational(0));

    for (int n = 0; n <= 10; ++n)
        CHECK(rs_qdifference_residual<Rational, Rational>(n, Rational(-3, 7),
                                                          Rational(2, 5)) == Rational(0));
}

TEST_CASE("ladder commutation relations on H_n, exact") {
    const Rational q(1, 3);
    for (int n = 0; n <= 15; ++n) {
        const auto h = rs_direct<Rational>(n, q);
        // [S-, S+] H_n = q^n H_n
        CHECK(rs_lower(rs_raise(h, q, n), q) - rs_raise(rs_lower(h, q), q, n - 1) ==
              pow_int(q, n) * h);
        // [N_q, S+] H_n = q^n H_{n+1}
        CHECK(rs_number(rs_raise(h, q, n), q) - rs_raise(rs_number(h, q), q, n) ==
              pow_int(q, n) * rs_direct<Rational>(n + 1, q));
        // [N, S-] H_n = -S- H_n with the degree operator N
        CHECK(degree_scale(rs_lower(h, q)) - rs_lower(degree_scale(h), q) ==
              Rational(-1) * rs_lower(h, q));
        // [N_q, S-] H_n = -q^{n-1} S- H_n
        const auto low = rs_lower(h, q);
        const auto lhs = rs_number(low, q) - rs_lower(rs_number(h, q), q);
        if (n == 0) {
            CHECK(lhs.is_zero());
        } else {
            CHECK(lhs == Rational(-1) * pow_int(q, n - 1) * low);
        }
    }
}

TEST_CASE("alpha-difference relation of the generating function") {
    // coeff_m(qD_alpha S_q) = (H_m(y) + y q^m H_m(y/q)) / ((1-q)(q;q)_m)
    std::mt19937_64 eng(3);
    for (int rep = 0; rep < 3; ++rep) {
        const double q = uniform(eng, 0.3, 0.8);
        const double y = uniform(eng, -0.9, 0.9);
        double poch = 1.0;
        for (int m = 0; m <= 25; ++m) {
            const double poch_next = poch * (1.0 - std::pow(q, m + 1.0));
            const Complex lhs = qnumber_m<double>(m + 1, q) *
                                rs_eval(m + 1, Complex{y, 0.0}, q) / poch_next;
            const Complex rhs = (rs_eval(m, Complex{y, 0.0}, q) +
                                 y * std::pow(q, m) * rs_eval(m, Complex{y / q, 0.0}, q)) /
                                ((1.0 - q) * poch);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
            poch = poch_next;
        }
    }
}
