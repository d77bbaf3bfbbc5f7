#include <doctest.h>

#include <random>

#include "qsf/fourier_gauss.hpp"
#include "qsf/parallel.hpp"
#include "qsf/suites.hpp"

using namespace qsf;

TEST_CASE("batch: parallel path reproduces the serial reference bit for bit") {
    auto f = [](std::size_t i) {
        double acc = 0.0;
        for (int k = 0; k < 50; ++k) acc += std::sin(0.01 * static_cast<double>(i * 37 + k));
        return acc;
    };
    const auto serial = par::batch<double>(1000, f, false);
    const auto parallel = par::batch<double>(1000, f, true);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("pairwise sum is deterministic and accurate") {
    std::mt19937_64 eng(1234);
    std::vector<double> v(10001);
    for (auto& x : v)
        x = (static_cast<double>(eng() >> 11) * 0x1.0p-53 - 0.5) * 1e6;
    const double a = par::pairwise_sum(v);
    const double b = par::pairwise_sum(v);
    CHECK(a == b);
    long double ref = 0.0L;
    for (double x : v) ref += x;
    CHECK(std::abs(a - static_cast<double>(ref)) <= 1e-9 * std::abs(static_cast<double>(ref)) + 1e-6);
}

TEST_CASE("quadrature results do not depend on the execution path") {
    FGSpec spec;
    spec.p = 0.9;
    spec.k = 0.3;
    spec.zeta = 0.5;
    spec.t = Complex{0.25, 0.0};
    spec.x = 0.5;
    const Complex serial = fg_quadrature_side(spec, FGDirection::inverse, {}, 1e-6, false);
    const Complex parallel = fg_quadrature_side(spec, FGDirection::inverse, {}, 1e-6, true);
    CHECK(serial.real() == parallel.real());
    CHECK(serial.imag() == parallel.imag());
}

TEST_CASE("suite reports are identical under both execution paths") {
    SuiteOptions serial_opts;
    serial_opts.parallel = false;
    SuiteOptions parallel_opts;
    parallel_opts.parallel = true;
    const auto a = run_suite("limits", serial_opts);
    const auto b = run_suite("limits", parallel_opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].identity_name == b[i].identity_name);
        CHECK(a[i].lhs == b[i].lhs);
        CHECK(a[i].rhs == b[i].rhs);
        CHECK(a[i].rel_err == b[i].rel_err);
        CHECK(a[i].passed == b[i].passed);
    }
}
