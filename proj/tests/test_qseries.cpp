#include <doctest.h>

#include <random>

#include "qsf/qseries.hpp"

using namespace qsf;

namespace {

double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
}

double rel_diff(const Complex& a, const Complex& b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

TEST_CASE("phi_rs trivial and terminating") {
    PhiSpec spec;
    spec.upper_q = {Complex{0.3, 0.0}};
    spec.lower_q = {Complex{0.2, 0.0}};
    spec.base_q = 0.5;
    spec.argument = 0.0;
    CHECK(phi_rs(spec).value.real() == doctest::Approx(1.0));  // only the k = 0 term

    // 1phi1 with upper q^{-1} terminates after two terms; hand sum:
    // 1 + (1-q^{-1})/((1-q)(1-b)) * (-1) x  at q=0.5, b=0.25, x=0.3
    PhiSpec t;
    t.upper_q = {Complex{2.0, 0.0}};  // q^{-1}
    t.lower_q = {Complex{0.25, 0.0}};
    t.base_q = 0.5;
    t.argument = 0.3;
    const auto r = phi_rs(t);
    const double hand = 1.0 + (1.0 - 2.0) / ((1.0 - 0.5) * (1.0 - 0.25)) * (-1.0) * 0.3;
    CHECK(r.value.real() == doctest::Approx(hand).epsilon(1e-15));
    CHECK(r.value.real() == doctest::Approx(1.8).epsilon(1e-15));
    CHECK(r.terms_used == 2);
    CHECK(r.converged);
    CHECK(r.est_error == 0.0);
}

TEST_CASE("terminating series are policy independent") {
    PhiSpec t;
    t.upper_q = {pow_int(Complex{0.4, 0.0}, -5), Complex{0.7, 0.0}};
    t.lower_q = {Complex{0.3, 0.0}};
    t.base_q = 0.4;
    t.argument = 0.9;
    SeriesPolicy loose;
    loose.max_terms = 7;
    SeriesPolicy tight;
    tight.max_terms = 5000;
    tight.rel_tol = 1e-10;
    const auto a = phi_rs(t, loose);
    const auto b = phi_rs(t, tight);
    CHECK(a.value == b.value);  // identical sum, bit for bit
    CHECK(a.terms_used == 6);
}

TEST_CASE("phi_rs lower-parameter pole raises") {
    PhiSpec t;
    t.upper_q = {Complex{0.3, 0.0}};
    t.lower_q = {pow_int(Complex{0.5, 0.0}, -2)};  // b = q^{-2}: pole at k = 2
    t.base_q = 0.5;
    t.argument = 0.2;
    CHECK_THROWS_AS(phi_rs(t), DomainError);
}

TEST_CASE("Heine's binomial theorem") {
    std::mt19937_64 eng(42);
    for (int i = 0; i < 50; ++i) {
        const double q = uniform(eng, 0.1, 0.9);
        const double a = uniform(eng, -1.5, 1.5);
        const double z = uniform(eng, -0.9, 0.9);
        PhiSpec s;  // 1phi0(a; -; q, z)
        s.upper_q = {Complex{a, 0.0}};
        s.base_q = q;
        s.argument = z;
        const Complex lhs = phi_rs(s).value;
        const Complex rhs = qpochhammer_inf(Complex{a * z, 0.0}, Complex{q, 0.0}).value /
                            qpochhammer_inf(Complex{z, 0.0}, Complex{q, 0.0}).value;
        CHECK(rel_diff(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("phi_bibasic") {
    PhiSpec b;
    b.upper_q = {Complex{0.5, 0.0}};
    b.lower_q = {Complex{0.1, 0.0}};
    b.upper_p = {Complex{0.3, 0.0}};
    b.lower_p = {Complex{0.2, 0.0}};
    b.base_q = 0.45;
    b.base_p = 0.8;
    b.argument = 0.0;
    CHECK(phi_bibasic(b).value.real() == doctest::Approx(1.0));

    SUBCASE("empty p-lists reduce to phi_rs") {
        std::mt19937_64 eng(5);
        for (int i = 0; i < 100; ++i) {
            PhiSpec s;
            // r <= s + 1 keeps the non-terminating series convergent
            const int nl = static_cast<int>(eng() % 2);
            const int nu = static_cast<int>(eng() % (nl + 2));
            for (int j = 0; j < nu; ++j) s.upper_q.emplace_back(uniform(eng, -0.9, 0.9), 0.0);
            for (int j = 0; j < nl; ++j) s.lower_q.emplace_back(uniform(eng, -0.5, 0.5), 0.0);
            s.base_q = uniform(eng, 0.2, 0.8);
            s.argument = uniform(eng, -0.5, 0.5);
            const Complex plain = phi_rs(s).value;
            PhiSpec bb = s;
            bb.base_p = 0.77;  // irrelevant: no p-parameters
            const Complex bi = phi_bibasic(bb).value;
            CHECK(rel_diff(plain, bi) <= 1e-14);
        }
    }

    SUBCASE("terminating bibasic equals a direct finite loop") {
        PhiSpec s;
        const double bq = 0.36;  // plays the role of the product base
        const double bp = 0.8;
        s.upper_q = {pow_int(Complex{bq, 0.0}, -3), Complex{0.4, 0.0}};
        s.lower_q = {Complex{0.15, 0.0}};
        s.upper_p = {Complex{0.25, 0.0}};
        s.lower_p = {Complex{0.6, 0.0}};
        s.base_q = bq;
        s.base_p = bp;
        s.argument = 0.7;
        const Complex got = phi_bibasic(s).value;
        // four-term direct loop; counts: #a=2, #b=1, #c=1, #d=1
        Complex want{0.0, 0.0};
        for (int l = 0; l <= 3; ++l) {
            Complex t{1.0, 0.0};
            for (const auto& a : s.upper_q) t *= qpochhammer(a, Complex{bq, 0.0}, l);
            for (const auto& c : s.upper_p) t *= qpochhammer(c, Complex{bp, 0.0}, l);
            t /= qpochhammer(Complex{bq, 0.0}, Complex{bq, 0.0}, l);
            for (const auto& bparam : s.lower_q) t /= qpochhammer(bparam, Complex{bq, 0.0}, l);
            for (const auto& d : s.lower_p) t /= qpochhammer(d, Complex{bp, 0.0}, l);
            // [(-1)^l q^{l(l-1)/2}]^{1+1-2} = [..]^0; [(-1)^l p^{l(l-1)/2}]^{1-1} = 1
            t *= pow_int(Complex{0.7, 0.0}, l);
            want += t;
        }
        CHECK(rel_diff(got, want) <= 1e-14);
    }
}

TEST_CASE("little q-Jacobi") {
    CHECK(little_q_jacobi(0, Complex{0.4, 0.0}, Complex{0.3, 0.0}, Complex{0.2, 0.0}, 0.5)
              .real() == doctest::Approx(1.0));
    // n = 1 two-term hand expansion at alpha=0.5, beta=0.25, q=0.5, z=0.2
    const double q = 0.5, alpha = 0.5, beta = 0.25, z = 0.2;
    const double hand =
        1.0 + (1.0 - 1.0 / q) * (1.0 - q * q * alpha * beta) /
                  ((1.0 - q) * (1.0 - alpha * q)) * (q * z);
    const Complex got =
        little_q_jacobi(1, Complex{z, 0.0}, Complex{alpha, 0.0}, Complex{beta, 0.0}, q);
    CHECK(got.real() == doctest::Approx(hand).epsilon(1e-15));
    // z = 0 kills every k >= 1 term
    CHECK(little_q_jacobi(4, Complex{0.0, 0.0}, Complex{0.3, 0.0}, Complex{0.6, 0.0}, 0.4)
              .real() == doctest::Approx(1.0));
}

TEST_CASE("little q-Jacobi is a polynomial of degree <= n in z") {
    // forward differences of order n+1 annihilate degree-n polynomials
    const int n = 5;
    const double q = 0.6, h = 0.17;
    const Complex alpha{0.35, 0.0}, beta{0.2, 0.0};
    Complex acc{0.0, 0.0};
    double binom = 1.0;
    double scale = 0.0;
    for (int j = 0; j <= n + 1; ++j) {
        const Complex v = little_q_jacobi(n, Complex{j * h, 0.0}, alpha, beta, q);
        acc += ((n + 1 - j) % 2 == 0 ? 1.0 : -1.0) * binom * v;
        scale += binom * std::abs(v);
        binom = binom * (n + 1 - j) / (j + 1);
    }
    CHECK(std::abs(acc) <= 1e-12 * scale);
}

TEST_CASE("big q-Jacobi") {
    CHECK(big_q_jacobi(0, Complex{0.4, 0.0}, Complex{0.3, 0.0}, Complex{0.2, 0.0}, 0.5)
              .real() == doctest::Approx(1.0));
    // n = 1 hand expansion: uppers q^{-1}, q^2 ab, q a z; lowers q a, 0; arg q
    const double q = 0.5, a = 0.3, b = 0.2, z = 0.4;
    const double hand = 1.0 + (1.0 - 1.0 / q) * (1.0 - q * q * a * b) *
                                  (1.0 - q * a * z) /
                                  ((1.0 - q) * (1.0 - q * a)) * q;
    CHECK(big_q_jacobi(1, Complex{z, 0.0}, Complex{a, 0.0}, Complex{b, 0.0}, q).real() ==
          doctest::Approx(hand).epsilon(1e-15));
    // n = 2 against a direct triple-product loop
    Complex want{0.0, 0.0};
    const Complex qc{q, 0.0};
    for (int k = 0; k <= 2; ++k) {
        Complex t = qpochhammer(pow_int(qc, -2), qc, k) *
                    qpochhammer(pow_int(qc, 3) * a * b, qc, k) *
                    qpochhammer(qc * a * z, qc, k);
        // lowers are qa and 0; (0;q)_k = 1, and the balancing factor for
        // r=3, s=2 is [(-1)^k q^{k(k-1)/2}]^0 = 1
        t /= qpochhammer(qc, qc, k) * qpochhammer(qc * a, qc, k);
        t *= pow_int(qc, k);
        want += t;
    }
    // the alternating (q^{-n};q)_k terms cancel down to ~0.09 here, so the
    // two summation orders agree to ~condition * ulp, not to ulp
    const Complex got2 = big_q_jacobi(2, Complex{z, 0.0}, Complex{a, 0.0}, Complex{b, 0.0}, q);
    CHECK(std::abs(got2 - want) <= 1e-13 * std::max({std::abs(want), std::abs(got2), 1.0}));
}

TEST_CASE("Hahn-Exton q-Bessel") {
    CHECK(hahn_exton_bessel(0, Complex{0.0, 0.0}, 0.5).value.real() ==
          doctest::Approx(1.0));
    CHECK(std::abs(hahn_exton_bessel(2, Complex{0.0, 0.0}, 0.5).value) == 0.0);
    CHECK_THROWS_AS(hahn_exton_bessel(-1, Complex{0.1, 0.0}, 0.5), DomainError);

    // term-by-term brute-force oracle at n=0, z=0.3, q=0.5
    const double q = 0.5, z = 0.3;
    double num = 1.0, den = 1.0;  // (q^{n+1};q)_inf / (q;q)_inf at n = 0
    for (int i = 0; i < 200; ++i) {
        num *= (1.0 - std::pow(q, 1.0 + i));
        den *= (1.0 - std::pow(q, 1.0 + i));
    }
    double sum = 0.0;
    for (int k = 0; k < 80; ++k) {
        double t = std::pow(-1.0, k) * std::pow(q, 0.5 * k * (k - 1.0)) *
                   std::pow(q * z * z, k);
        double d1 = 1.0, d2 = 1.0;
        for (int i = 0; i < k; ++i) {
            d1 *= (1.0 - std::pow(q, i + 1.0));
            d2 *= (1.0 - std::pow(q, 1.0 + i));  // (q^{n+1};q)_k at n=0
        }
        sum += t / (d1 * d2);
    }
    const double want = (num / den) * sum;
    CHECK(hahn_exton_bessel(0, Complex{z, 0.0}, q).value.real() ==
          doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("q-Bessel of the second kind") {
    CHECK(q_bessel_2(0, Complex{0.0, 0.0}, 0.5).value.real() == doctest::Approx(1.0));
    CHECK(std::abs(q_bessel_2(1, Complex{0.0, 0.0}, 0.5).value) == 0.0);

    const double q = 0.6;
    const Complex x{0.4, 0.0};
    double want = 0.0;
    for (int n = 0; n < 100; ++n) {
        double d1 = 1.0, d2 = 1.0;
        for (int i = 1; i <= n; ++i) d1 *= (1.0 - std::pow(q, i));
        for (int i = 1; i <= n; ++i) d2 *= (1.0 - std::pow(q, i));
        want += std::pow(q, static_cast<double>(n) * n) * std::pow(-1.0, n) /
                (d1 * d2) * std::pow(0.2, 2 * n);
    }
    const auto got = q_bessel_2(0, x, q);
    CHECK(got.value.real() == doctest::Approx(want).epsilon(1e-14));
    CHECK(got.converged);
    CHECK(got.est_error <= 1e-14 * std::abs(got.value));
}

TEST_CASE("q-Laguerre") {
    CHECK(q_laguerre(0, 0.7, Complex{0.3, 0.0}, 0.5).real() == doctest::Approx(1.0));
    // x = 0 collapses the 1phi1 to 1
    const double q = 0.5, gamma = 0.7;
    const Complex expect0 = qpochhammer(Complex{std::pow(q, gamma + 1.0), 0.0},
                                        Complex{q, 0.0}, 3) /
                            qpochhammer(Complex{q, 0.0}, Complex{q, 0.0}, 3);
    CHECK(q_laguerre(3, gamma, Complex{0.0, 0.0}, q).real() ==
          doctest::Approx(expect0.real()).epsilon(1e-15));

    // n = 2, gamma = 0.5, q = 0.5, x = 0.3: prefactor times 3-term hand sum
    const double g = 0.5, x = 0.3;
    const double qg1 = std::pow(0.5, g + 1.0);
    const double w = x * std::pow(0.5, g + 2.0 + 1.0);
    double hand = 0.0;
    for (int k = 0; k <= 2; ++k) {
        double top = 1.0, d1 = 1.0, d2 = 1.0;
        for (int i = 0; i < k; ++i) {
            top *= (1.0 - std::pow(0.5, -2.0) * std::pow(0.5, i));
            d1 *= (1.0 - std::pow(0.5, i + 1.0));
            d2 *= (1.0 - qg1 * std::pow(0.5, i));
        }
        hand += top / (d1 * d2) * std::pow(-1.0, k) * std::pow(0.5, 0.5 * k * (k - 1.0)) *
                std::pow(w, k);
    }
    double pref = 1.0;
    for (int i = 0; i < 2; ++i)
        pref *= (1.0 - qg1 * std::pow(0.5, i)) / (1.0 - std::pow(0.5, i + 1.0));
    CHECK(q_laguerre(2, g, Complex{x, 0.0}, 0.5).real() ==
          doctest::Approx(pref * hand).epsilon(1e-14));
}
