#include <doctest.h>

#include <random>

#include "qsf/deformed_exp.hpp"
#include "qsf/qcore.hpp"

using namespace qsf;

namespace {
double rel_diff(const Complex& a, const Complex& b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}
}  // namespace

TEST_CASE("eq_mu basics and domain") {
    CHECK(eq_mu(Complex{0.0, 0.0}, 0.5, 0.3).value.real() == doctest::Approx(1.0));
    CHECK_THROWS_AS(eq_mu(Complex{0.5, 0.0}, 1.5, 0.0), DomainError);
    CHECK_THROWS_AS(eq_mu(Complex{0.5, 0.0}, 0.5, -0.1), DomainError);
    CHECK_THROWS_AS(eq_mu(Complex{1.0, 0.0}, 0.5, 0.0), DomainError);

    // mu = 0: product form 1/(z;q)_inf
    const Complex lhs0 = eq_mu(Complex{0.5, 0.0}, 0.5, 0.0).value;
    const Complex rhs0 = 1.0 / qpochhammer_inf(Complex{0.5, 0.0}, Complex{0.5, 0.0}).value;
    CHECK(rel_diff(lhs0, rhs0) <= 1e-13);

    // mu = 1/2: product form (-q^{1/2} z;q)_inf
    const Complex lhs1 = eq_mu(Complex{0.4, 0.0}, 0.5, 0.5).value;
    const Complex rhs1 =
        qpochhammer_inf(Complex{-std::sqrt(0.5) * 0.4, 0.0}, Complex{0.5, 0.0}).value;
    CHECK(rel_diff(lhs1, rhs1) <= 1e-13);
}

TEST_CASE("eq_mu convergence flag is honest") {
    const auto r = eq_mu(Complex{3.7, 0.0}, 0.6, 0.25);
    CHECK(r.converged);
    CHECK(r.est_error <= 1e-14 * std::abs(r.value));
    CHECK(r.terms_used < 200);
}

TEST_CASE("epq_munu") {
    CHECK(epq_munu(Complex{0.0, 0.0}, 0.8, 0.5, 0.3, 0.4).value.real() ==
          doctest::Approx(1.0));

    SUBCASE("p = 1 reduces to the single-base family") {
        std::mt19937_64 eng(17);
        for (int i = 0; i < 25; ++i) {
            const double q = 0.15 + 0.7 * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
            const double mu = (i % 5 == 0)
                                  ? 0.0
                                  : (static_cast<double>(eng() >> 11) * 0x1.0p-53);
            const double nu = static_cast<double>(eng() >> 11) * 0x1.0p-53;
            const double z = -0.8 + 1.6 * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
            const Complex a = epq_munu(Complex{z, 0.0}, 1.0, q, mu, nu).value;
            const Complex b = eq_mu(Complex{z, 0.0}, q, mu).value;
            CHECK(rel_diff(a, b) <= 1e-14);
        }
    }

    SUBCASE("mu = nu = 0 against a 60-term direct loop") {
        const double p = 0.8, q = 0.5, z = 0.3;
        double want = 0.0;
        for (int n = 0; n < 60; ++n)
            want += std::pow(z, n) / pq_factorial_std(p, q, n);
        CHECK(epq_munu(Complex{z, 0.0}, p, q, 0.0, 0.0).value.real() ==
              doctest::Approx(want).epsilon(1e-14));
    }

    SUBCASE("divergent growth factor is rejected") {
        // p > 1 with mu = nu = 0 gives q^{2mu} p^{1-2nu} = p > 1
        CHECK_THROWS_AS(epq_munu(Complex{0.1, 0.0}, 1.2, 0.5, 0.0, 0.0), DomainError);
        // boundary c = 1 outside the disk
        CHECK_THROWS_AS(epq_munu(Complex{1.5, 0.0}, 1.0, 0.5, 0.0, 0.3), DomainError);
    }
}

TEST_CASE("named exponentials") {
    auto params = DeformationParams::pq(0.8, 0.5);

    // eps_pq is the zeta = 1/2 family, i.e. mu = nu = 1/4
    const Complex a = named_exp(ExpName::eps_pq, Complex{0.3, 0.0}, params).value;
    const Complex b = epq_munu(Complex{0.3, 0.0}, 0.8, 0.5, 0.25, 0.25).value;
    CHECK(a == b);

    // E^{1/2,1/2}_{p,q}(z) = E_{p,q}((q/p)^{1/2} z), both sides independent sums
    const Complex lhs = epq_munu(Complex{0.3, 0.0}, 0.8, 0.5, 0.5, 0.5).value;
    const Complex rhs =
        epq_vinet(Complex{std::sqrt(0.5 / 0.8) * 0.3, 0.0}, 0.8, 0.5).value;
    CHECK(rel_diff(lhs, rhs) <= 1e-13);

    // e_q alias hits the mu = 0 path
    auto qonly = DeformationParams::q_only(0.5);
    CHECK(named_exp(ExpName::eq, Complex{0.5, 0.0}, qonly).value ==
          eq_mu(Complex{0.5, 0.0}, 0.5, 0.0).value);

    // classical E_q(z) = (-z;q)_inf
    const Complex cap = named_exp(ExpName::EQ, Complex{0.4, 0.0}, qonly).value;
    const Complex prod = qpochhammer_inf(Complex{-0.4, 0.0}, Complex{0.5, 0.0}).value;
    CHECK(rel_diff(cap, prod) <= 1e-13);
}

TEST_CASE("classical limits") {
    SUBCASE("q-ladder deviations decrease") {
        const std::vector<std::pair<double, double>> ladder = {
            {1.0, 0.9}, {1.0, 0.99}, {1.0, 0.999}};
        for (double mu : {0.0, 0.5}) {
            const auto devs = classical_limit_report(Complex{1.0, 0.0}, mu, 0.0, ladder);
            CHECK(devs.size() == 3);
            CHECK(devs[0] > devs[1]);
            CHECK(devs[1] > devs[2]);
        }
    }
    SUBCASE("z = 0 gives zero deviations") {
        const std::vector<std::pair<double, double>> ladder = {{1.0, 0.9}, {0.95, 0.9}};
        const auto devs = classical_limit_report(Complex{0.0, 0.0}, 0.5, 0.5, ladder);
        for (double d : devs) CHECK(d == 0.0);
    }
    SUBCASE("(p,q)-ladder deviations decrease") {
        const std::vector<std::pair<double, double>> ladder = {
            {0.9, 0.9}, {0.99, 0.99}, {0.999, 0.999}};
        const auto devs = classical_limit_report(Complex{0.5, 0.0}, 0.0, 0.0, ladder);
        CHECK(devs[0] > devs[1]);
        CHECK(devs[1] > devs[2]);
    }
}
