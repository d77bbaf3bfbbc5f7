#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsf/quadrature.hpp"
#include "qsf/errors.hpp"

using namespace qsf;

TEST_CASE("Gauss-Hermite rule sanity") {
    for (int n : {32, 128, 256}) {
        const auto& gh = gauss_hermite(n);
        REQUIRE(gh.nodes.size() == static_cast<std::size_t>(n));

        double w_sum = 0.0, x2_sum = 0.0;
        for (int i = 0; i < n; ++i) {
            w_sum += gh.weights[i];
            x2_sum += gh.weights[i] * gh.nodes[i] * gh.nodes[i];
        }
        CHECK(w_sum == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
        CHECK(x2_sum == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-13));

        // symmetric rule
        for (int i = 0; i < n / 2; ++i) {
            CHECK(gh.nodes[i] == doctest::Approx(-gh.nodes[n - 1 - i]).epsilon(1e-13));
            CHECK(gh.weights[i] == doctest::Approx(gh.weights[n - 1 - i]).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(gauss_hermite(0), DomainError);
}

TEST_CASE("base Gaussian Fourier transform") {
    // (1/sqrt(2 pi)) int e^{ixy - y^2/2} dy = e^{-x^2/2}
    const auto& gh = gauss_hermite(128);
    for (double x : {0.0, 0.7, 1.5}) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
            const double y = std::numbers::sqrt2 * gh.nodes[i];
            acc += gh.weights[i] * std::exp(Complex{0.0, x * y});
        }
        acc /= std::sqrt(std::numbers::pi);
        CHECK(acc.real() == doctest::Approx(std::exp(-x * x / 2.0)).epsilon(1e-13));
        CHECK(std::abs(acc.imag()) <= 1e-14);
    }
}

TEST_CASE("trapezoid agrees with Gauss-Hermite on a damped oscillation") {
    const double x = 0.9;
    auto f = [x](double y) {
        return std::exp(Complex{0.0, x * y}) * std::exp(-y * y / 2.0) * std::cos(0.3 * y);
    };
    const Complex t = trapezoid(f, -12.0, 12.0, 4096);

    const auto& gh = gauss_hermite(128);
    Complex g{0.0, 0.0};
    for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
        const double y = std::numbers::sqrt2 * gh.nodes[i];
        g += gh.weights[i] * std::exp(Complex{0.0, x * y}) * std::cos(0.3 * y);
    }
    g *= std::numbers::sqrt2;
    CHECK(std::abs(t - g) <= 1e-12 * std::abs(g));
    CHECK_THROWS_AS(trapezoid(f, 0.0, 1.0, 0), DomainError);
}
