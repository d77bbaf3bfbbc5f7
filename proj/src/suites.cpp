#include "qsf/suites.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "qsf/deformed_exp.hpp"
#include "qsf/errors.hpp"
#include "qsf/fourier_gauss.hpp"
#include "qsf/matrix_elements.hpp"
#include "qsf/oscillator.hpp"
#include "qsf/parallel.hpp"
#include "qsf/polynomial.hpp"
#include "qsf/qcore.hpp"
#include "qsf/qseries.hpp"
#include "qsf/rogers_szego.hpp"

namespace qsf {

namespace {

/// Engine-portable uniform draws (the distribution is ours, not the
/// standard library's, so seeded runs are reproducible everywhere).
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

using Item = std::function<VerificationReport()>;

std::vector<VerificationReport> run_items(const std::vector<Item>& items, bool parallel) {
    return par::batch<VerificationReport>(
        items.size(), [&](std::size_t i) { return items[i](); }, parallel);
}

const std::vector<Rational> kExactQ = {Rational(1, 2), Rational(1, 3), Rational(2, 5)};

std::string rep_name(const std::string& prefix, const std::string& rest) {
    return prefix + ": " + rest;
}

// ---------------------------------------------------------------- recurrence

template <class T>
VerificationReport item_direct_vs_recurrence(const T& q, int max_n) {
    bool identical = true;
    double worst = 0.0;
    for (int n = 0; n <= max_n; ++n) {
        const auto a = rs_direct<T>(n, q);
        const auto b = rs_recurrence<T>(n, q);
        const auto d = a - b;
        if (!d.is_zero()) {
            identical = false;
            if constexpr (!is_exact_backend_v<T>)
                for (int k = 0; k <= d.degree(); ++k)
                    worst = std::max(worst, abs_value(d.coeff(k)));
        }
    }
    if constexpr (is_exact_backend_v<T>) {
        return make_report_exact(rep_name("recurrence", "H_n direct sum == three-term recurrence"),
                                 {{"q", format_scalar(q)}, {"max_n", std::to_string(max_n)}},
                                 identical, identical ? "identical" : "mismatch", "identical");
    } else {
        return make_report_residual(
            rep_name("recurrence", "H_n direct sum == three-term recurrence"),
            {{"q", format_scalar(q)}, {"max_n", std::to_string(max_n)}}, worst, 1.0, 1e-12);
    }
}

template <class T>
VerificationReport item_creation_step(const T& q, int max_n) {
    // H_{n+1} = H_n + y q^n T^{-1} H_n
    bool identical = true;
    double worst = 0.0;
    for (int n = 0; n <= max_n; ++n) {
        const auto h = rs_direct<T>(n, q);
        const auto step =
            h + pow_int(q, n) * q_dilation(h, q, Dilation::inverse).shifted_up();
        const auto d = step - rs_direct<T>(n + 1, q);
        if (!d.is_zero()) {
            identical = false;
            if constexpr (!is_exact_backend_v<T>)
                for (int k = 0; k <= d.degree(); ++k)
                    worst = std::max(worst, abs_value(d.coeff(k)));
        }
    }
    if constexpr (is_exact_backend_v<T>) {
        return make_report_exact(
            rep_name("recurrence", "raising step H_{n+1} = H_n + y q^n T^{-1} H_n"),
            {{"q", format_scalar(q)}, {"max_n", std::to_string(max_n)}}, identical,
            identical ? "identical" : "mismatch", "identical");
    } else {
        return make_report_residual(
            rep_name("recurrence", "raising step H_{n+1} = H_n + y q^n T^{-1} H_n"),
            {{"q", format_scalar(q)}, {"max_n", std::to_string(max_n)}}, worst, 1.0, 1e-12);
    }
}

std::vector<VerificationReport> suite_recurrence(const SuiteOptions& opts) {
    const bool exact = opts.exact.value_or(true);
    const int max_n = opts.max_n > 0 ? opts.max_n : 20;
    std::vector<Item> items;
    if (exact) {
        for (const auto& q : kExactQ) {
            items.push_back([q, max_n] { return item_direct_vs_recurrence<Rational>(q, max_n); });
            items.push_back([q, max_n] { return item_creation_step<Rational>(q, max_n); });
        }
    } else {
        Rng rng(opts.seed);
        for (int i = 0; i < 3; ++i) {
            const double q = rng.uniform(0.1, 0.9);
            items.push_back([q, max_n] { return item_direct_vs_recurrence<double>(q, max_n); });
            items.push_back([q, max_n] { return item_creation_step<double>(q, max_n); });
        }
    }
    return run_items(items, opts.parallel);
}

// --------------------------------------------------------------- commutators

/// The four ladder commutation relations, each checked as an action on
/// H_n (where the q^N factors reduce to explicit powers of q):
///   (i)   (S-S+ - S+S-) H_n = q^n H_n
///   (ii)  (N_q S+ - S+ N_q) H_n = q^n H_{n+1}
///   (iii) (N S- - S- N) H_n = -S- H_n  with N the degree operator
///   (iv)  (N_q S- - S- N_q) H_n = -q^{n-1} S- H_n
template <class T>
VerificationReport item_commutator(const T& q, int max_n, int which) {
    bool identical = true;
    double worst = 0.0;
    static const char* names[] = {
        "[S-,S+] H_n = q^n H_n",
        "[N_q,S+] H_n = q^n S+ H_n",
        "[N,S-] H_n = -S- H_n",
        "[N_q,S-] H_n = -q^{n-1} S- H_n",
    };
    for (int n = 0; n <= max_n; ++n) {
        const auto h = rs_direct<T>(n, q);
        QPolynomial<T> lhs, rhs;
        switch (which) {
            case 0:
                lhs = rs_lower(rs_raise(h, q, n), q) - rs_raise(rs_lower(h, q), q, n - 1);
                rhs = pow_int(q, n) * h;
                break;
            case 1:
                lhs = rs_number(rs_raise(h, q, n), q) - rs_raise(rs_number(h, q), q, n);
                rhs = pow_int(q, n) * rs_direct<T>(n + 1, q);
                break;
            case 2:
                lhs = degree_scale(rs_lower(h, q)) - rs_lower(degree_scale(h), q);
                rhs = T(-1) * rs_lower(h, q);
                break;
            case 3: {
                lhs = rs_number(rs_lower(h, q), q) - rs_lower(rs_number(h, q), q);
                const auto low = rs_lower(h, q);
                rhs = low.is_zero() ? QPolynomial<T>::zero()
                                    : T(-1) * pow_int(q, n - 1) * low;
                break;
            }
        }
        const auto d = lhs - rhs;
        if (!d.is_zero()) {
            identical = false;
            if constexpr (!is_exact_backend_v<T>)
                for (int k = 0; k <= d.degree(); ++k)
                    worst = std::max(worst, abs_value(d.coeff(k)));
        }
    }
    if constexpr (is_exact_backend_v<T>) {
        return make_report_exact(rep_name("commutator", names[which]),
                                 {{"q", format_scalar(q)}, {"max_n", std::to_string(max_n)}},
                                 identical, identical ? "identical" : "mismatch", "identical");
    } else {
        return make_report_residual(rep_name("commutator", names[which]),
                                    {{"q", format_scalar(q)}, {"max_n", std::to_string(max_n)}},
                                    worst, 1.0, 1e-12);
    }
}

std::vector<VerificationReport> suite_commutators(const SuiteOptions& opts) {
    const bool exact = opts.exact.value_or(true);
    const int max_n = opts.max_n > 0 ? opts.max_n : 15;
    std::vector<Item> items;
    if (exact) {
        for (const auto& q : kExactQ)
            for (int w = 0; w < 4; ++w)
                items.push_back([q, max_n, w] { return item_commutator<Rational>(q, max_n, w); });
    } else {
        Rng rng(opts.seed);
        for (int i = 0; i < 3; ++i) {
            const double q = rng.uniform(0.1, 0.9);
            for (int w = 0; w < 4; ++w)
                items.push_back([q, max_n, w] { return item_commutator<double>(q, max_n, w); });
        }
    }
    return run_items(items, opts.parallel);
}

// --------------------------------------------------------------- qdifference

std::vector<VerificationReport> suite_qdifference(const SuiteOptions& opts) {
    const bool exact = opts.exact.value_or(true);
    const int max_n = opts.max_n > 0 ? opts.max_n : 10;
    std::vector<Item> items;
    if (exact) {
        const std::vector<Rational> ys = {Rational(2, 3), Rational(-1, 2), Rational(5, 7)};
        for (const auto& q : kExactQ) {
            items.push_back([q, ys, max_n] {
                bool all_zero = true;
                for (int n = 0; n <= max_n; ++n)
                    for (const auto& y : ys)
                        if (rs_qdifference_residual<Rational, Rational>(n, y, q) != 0)
                            all_zero = false;
                return make_report_exact(
                    rep_name("qdifference", "(qD + y q^n qD T^{-1} - [n]) H_n = 0"),
                    {{"q", format_scalar(q)}, {"max_n", std::to_string(max_n)}}, all_zero,
                    all_zero ? "0" : "nonzero", "0");
            });
        }
    } else {
        Rng rng(opts.seed);
        for (int i = 0; i < 6; ++i) {
            const double q = rng.uniform(0.15, 0.9);
            const double y = rng.uniform(-2.0, 2.0);
            items.push_back([q, y, max_n] {
                double worst = 0.0;
                for (int n = 0; n <= max_n; ++n) {
                    const Complex res =
                        rs_qdifference_residual<double, Complex>(n, Complex(y), q);
                    const double scale = 1.0 + std::abs(rs_eval(n, Complex(y), q));
                    worst = std::max(worst, std::abs(res) / scale);
                }
                return make_report_residual(
                    rep_name("qdifference", "(qD + y q^n qD T^{-1} - [n]) H_n = 0"),
                    {{"q", to_decimal(q)}, {"y", to_decimal(y)},
                     {"max_n", std::to_string(max_n)}},
                    worst, 1.0, 1e-12);
            });
        }
    }
    return run_items(items, opts.parallel);
}

// --------------------------------------------------------- algebra-relations

std::vector<VerificationReport> suite_algebra_relations(const SuiteOptions& opts) {
    const bool exact = opts.exact.value_or(true);
    const int max_index = opts.max_n > 0 ? opts.max_n : 10;
    const int jackson_deg = opts.max_n > 0 ? opts.max_n : 12;
    std::vector<Item> items;
    if (exact) {
        for (const auto& q : kExactQ) {
            items.push_back([q, max_index] {
                return verify_algebra_relations(QOscillator<Rational>(q), max_index);
            });
            items.push_back(
                [q, jackson_deg] { return verify_jackson_realization<Rational>(q, jackson_deg); });
        }
    } else {
        Rng rng(opts.seed);
        for (int i = 0; i < 3; ++i) {
            const double q = rng.uniform(0.15, 0.9);
            items.push_back([q, max_index] {
                return verify_algebra_relations(QOscillator<double>(q), max_index);
            });
            items.push_back(
                [q, jackson_deg] { return verify_jackson_realization<double>(q, jackson_deg); });
        }
    }
    const std::vector<std::pair<double, double>> pq_pairs = {
        {0.8, 0.5}, {0.9, 0.55}, {0.95, 0.3}};
    for (const auto& [p, q] : pq_pairs) {
        items.push_back([p = p, q = q, max_index] {
            return verify_algebra_relations(PQOscillator(p, q), max_index);
        });
    }
    return run_items(items, opts.parallel);
}

// ---------------------------------------------------------------- generating

/// H_m(y) values by the three-term recurrence, used as the independent
/// series side of the generating-function identities.
std::vector<Complex> h_values(int count, const Complex& y, double q) {
    std::vector<Complex> h(static_cast<std::size_t>(count));
    if (count > 0) h[0] = 1.0;
    if (count > 1) h[1] = 1.0 + y;
    double qn = q;
    for (int m = 1; m + 1 < count; ++m) {
        h[static_cast<std::size_t>(m) + 1] =
            (1.0 + y) * h[static_cast<std::size_t>(m)] -
            y * (1.0 - qn) * h[static_cast<std::size_t>(m) - 1];
        qn *= q;
    }
    return h;
}

Complex generating_series_side(const Complex& alpha, const Complex& y, double q) {
    const int cap = 3000;
    const auto h = h_values(cap, y, q);
    Complex partial{0.0, 0.0};
    Complex f{1.0, 0.0};  // alpha^m / (q;q)_m
    int small_run = 0;
    for (int m = 0; m < cap; ++m) {
        const Complex term = f * h[static_cast<std::size_t>(m)];
        partial += term;
        if (std::abs(term) <= 1e-16 * std::abs(partial)) {
            if (++small_run >= 3) break;
        } else {
            small_run = 0;
        }
        f *= alpha / (1.0 - std::pow(q, m + 1));
    }
    return partial;
}

Complex generating2_series_side(const Complex& t, const Complex& y, double q) {
    const int cap = 3000;
    const auto h = h_values(cap, y, q);
    Complex partial{0.0, 0.0};
    Complex f{1.0, 0.0};  // t^m q^{m(m-1)/2} / (q;q)_m
    int small_run = 0;
    for (int m = 0; m < cap; ++m) {
        const Complex term = f * h[static_cast<std::size_t>(m)];
        partial += term;
        if (std::abs(term) <= 1e-16 * std::abs(partial)) {
            if (++small_run >= 3) break;
        } else {
            small_run = 0;
        }
        f *= t * std::pow(q, m) / (1.0 - std::pow(q, m + 1));
    }
    return partial;
}

std::vector<VerificationReport> suite_generating(const SuiteOptions& opts) {
    const double tol = opts.tol.value_or(1e-12);
    const int points = 50;
    std::vector<Item> items;

    items.push_back([seed = opts.seed, tol, points] {
        Rng rng(seed);
        double worst = 0.0;
        for (int i = 0; i < points; ++i) {
            const double q = rng.uniform(0.2, 0.9);
            const double alpha = rng.uniform(-0.7, 0.7);
            double y = rng.uniform(-1.0, 1.0);
            if (std::abs(alpha * y) > 0.7) y *= 0.7 / std::abs(alpha * y);
            const Complex closed = rs_generating_closed(Complex(alpha), Complex(y), q);
            const Complex series = generating_series_side(Complex(alpha), Complex(y), q);
            worst = std::max(worst,
                             std::abs(closed - series) / std::max(std::abs(closed), 1e-30));
        }
        return make_report_residual(
            rep_name("generating", "S_q(alpha;y) product form == H_m series"),
            {{"points", std::to_string(points)}}, worst, 1.0, tol);
    });

    items.push_back([seed = opts.seed, tol, points] {
        Rng rng(seed + 1);
        double worst = 0.0;
        for (int i = 0; i < points; ++i) {
            const double q = rng.uniform(0.2, 0.9);
            const double t = rng.uniform(-0.7, 0.7);
            const double y = rng.uniform(-1.0, 1.0);
            const Complex closed = rs_generating2_closed(Complex(t), Complex(y), q);
            const Complex series = generating2_series_side(Complex(t), Complex(y), q);
            worst = std::max(worst,
                             std::abs(closed - series) / std::max(std::abs(closed), 1e-30));
        }
        return make_report_residual(
            rep_name("generating", "q-weighted generating function == H_m series"),
            {{"points", std::to_string(points)}}, worst, 1.0, tol);
    });

    // alpha-difference relation for S_q, coefficient-wise in alpha:
    //   coeff_m(qD_alpha S_q) = (1/(1-q)) [H_m(y) + y q^m H_m(y/q)] / (q;q)_m
    items.push_back([seed = opts.seed, tol] {
        Rng rng(seed + 2);
        double worst = 0.0;
        for (int rep = 0; rep < 5; ++rep) {
            const double q = rng.uniform(0.3, 0.8);
            const double y = rng.uniform(-0.9, 0.9);
            const int order = 25;
            const auto h = h_values(order + 2, Complex(y), q);
            const auto hs = h_values(order + 2, Complex(y / q), q);
            double poch = 1.0;  // (q;q)_m
            for (int m = 0; m <= order; ++m) {
                const double poch_next = poch * (1.0 - std::pow(q, m + 1));
                const Complex lhs = qnumber_m<double>(m + 1, q) *
                                    h[static_cast<std::size_t>(m) + 1] / poch_next;
                const Complex rhs =
                    (h[static_cast<std::size_t>(m)] +
                     y * std::pow(q, m) * hs[static_cast<std::size_t>(m)]) /
                    ((1.0 - q) * poch);
                worst = std::max(worst,
                                 std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
                poch = poch_next;
            }
        }
        return make_report_residual(
            rep_name("generating", "qD_alpha S_q = (1 + y T_y^{-1} T_alpha) S_q / (1-q)"),
            {{"order", "25"}}, worst, 1.0, tol);
    });

    // Difference rule qD_alpha e_q(alpha y) = y/(1-q) e_q(alpha y), in
    // coefficients of alpha.
    items.push_back([seed = opts.seed, tol] {
        Rng rng(seed + 3);
        double worst = 0.0;
        for (int rep = 0; rep < 5; ++rep) {
            const double q = rng.uniform(0.3, 0.8);
            const double y = rng.uniform(-0.9, 0.9);
            double poch = 1.0;
            double ym = 1.0;  // y^m
            for (int m = 0; m <= 25; ++m) {
                const double poch_next = poch * (1.0 - std::pow(q, m + 1));
                const double lhs = qnumber_m<double>(m + 1, q) * ym * y / poch_next;
                const double rhs = y * ym / ((1.0 - q) * poch);
                worst =
                    std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
                poch = poch_next;
                ym *= y;
            }
        }
        return make_report_residual(
            rep_name("generating", "qD_alpha e_q(alpha y) = y/(1-q) e_q(alpha y)"),
            {{"order", "25"}}, worst, 1.0, tol);
    });

    return run_items(items, opts.parallel);
}

// ------------------------------------------------------- matrix elements

std::vector<VerificationReport> suite_matrix_q(const SuiteOptions& opts) {
    const double tol = opts.tol.value_or(1e-9);
    const int max_mn = opts.max_n > 0 ? opts.max_n : 12;
    const int draws = 20;
    std::vector<Item> items;
    for (int d = 0; d < draws; ++d) {
        items.push_back([seed = opts.seed, d, max_mn, tol] {
            Rng rng(seed + 1000 * static_cast<std::uint64_t>(d));
            const double alpha = rng.uniform(-1.0, 1.0);
            const double beta = rng.uniform(-1.0, 1.0);
            const double mu = rng.uniform(0.0, 1.0);
            const double nu = rng.uniform(0.0, 1.0);
            const double q = rng.uniform(0.15, 0.85);
            const QOscillator<double> osc(q);
            double worst = 0.0;
            for (int m = 0; m <= max_mn; ++m)
                for (int n = 0; n <= max_mn; ++n) {
                    const Complex closed =
                        u_q(m, n, Complex(alpha), Complex(beta), mu, nu, q).value;
                    const Complex oracle = oracle_matrix_element(
                        osc, m, n, Complex(alpha), Complex(beta), mu, nu);
                    worst = std::max(worst, std::abs(closed - oracle) /
                                                std::max({std::abs(oracle),
                                                          std::abs(closed), 1e-30}));
                }
            return make_report_residual(
                rep_name("matrix-q", "closed-form U_{m,n} == ladder-expansion oracle"),
                {{"alpha", to_decimal(alpha)}, {"beta", to_decimal(beta)},
                 {"mu", to_decimal(mu)}, {"nu", to_decimal(nu)}, {"q", to_decimal(q)},
                 {"max_mn", std::to_string(max_mn)}},
                worst, 1.0, tol);
        });
    }
    items.push_back([seed = opts.seed, max_mn] {
        Rng rng(seed + 777);
        double worst = 0.0;
        for (int d = 0; d < 50; ++d) {
            const double alpha = rng.uniform(-1.0, 1.0);
            const double beta = rng.uniform(-1.0, 1.0);
            const double mu = rng.uniform(0.0, 1.0);
            const double nu = rng.uniform(0.0, 1.0);
            const double q = rng.uniform(0.15, 0.85);
            const int n = rng.uniform_int(0, max_mn);
            const Complex a = u_q_branch(Branch::lowering_dominant, n, n, Complex(alpha),
                                         Complex(beta), mu, nu, q);
            const Complex b = u_q_branch(Branch::raising_dominant, n, n, Complex(alpha),
                                         Complex(beta), mu, nu, q);
            worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), 1e-30));
        }
        return make_report_residual(
            rep_name("matrix-q", "branch agreement at m = n"), {{"draws", "50"}}, worst,
            1.0, 1e-13);
    });
    return run_items(items, opts.parallel);
}

std::vector<VerificationReport> suite_matrix_pq(const SuiteOptions& opts) {
    const double tol = opts.tol.value_or(1e-9);
    const int max_mn = opts.max_n > 0 ? opts.max_n : 10;
    const int draws = 20;
    std::vector<Item> items;
    for (int d = 0; d < draws; ++d) {
        items.push_back([seed = opts.seed, d, max_mn, tol] {
            Rng rng(seed + 2000 * static_cast<std::uint64_t>(d) + 11);
            const double alpha = rng.uniform(-1.0, 1.0);
            const double beta = rng.uniform(-1.0, 1.0);
            const double mu = rng.uniform(0.0, 1.0);
            const double nu = rng.uniform(0.0, 1.0);
            const double p = rng.uniform(0.75, 0.95);
            const double q = rng.uniform(0.2, 0.65);
            const PQOscillator osc(p, q);
            double worst = 0.0;
            for (int m = 0; m <= max_mn; ++m)
                for (int n = 0; n <= max_mn; ++n) {
                    const Complex closed =
                        u_pq(m, n, Complex(alpha), Complex(beta), mu, nu, p, q).value;
                    const Complex oracle = oracle_matrix_element(
                        osc, m, n, Complex(alpha), Complex(beta), mu, nu);
                    worst = std::max(worst, std::abs(closed - oracle) /
                                                std::max({std::abs(oracle),
                                                          std::abs(closed), 1e-30}));
                }
            return make_report_residual(
                rep_name("matrix-pq", "closed-form U_{m,n} == ladder-expansion oracle"),
                {{"alpha", to_decimal(alpha)}, {"beta", to_decimal(beta)},
                 {"mu", to_decimal(mu)}, {"nu", to_decimal(nu)}, {"p", to_decimal(p)},
                 {"q", to_decimal(q)}, {"max_mn", std::to_string(max_mn)}},
                worst, 1.0, tol);
        });
    }
    items.push_back([seed = opts.seed, max_mn] {
        Rng rng(seed + 778);
        double worst = 0.0;
        for (int d = 0; d < 50; ++d) {
            const double alpha = rng.uniform(-1.0, 1.0);
            const double beta = rng.uniform(-1.0, 1.0);
            const double mu = rng.uniform(0.0, 1.0);
            const double nu = rng.uniform(0.0, 1.0);
            const double p = rng.uniform(0.75, 0.95);
            const double q = rng.uniform(0.2, 0.65);
            const int n = rng.uniform_int(0, max_mn);
            const Complex a = u_pq_branch(Branch::lowering_dominant, n, n, Complex(alpha),
                                          Complex(beta), mu, nu, p, q);
            const Complex b = u_pq_branch(Branch::raising_dominant, n, n, Complex(alpha),
                                          Complex(beta), mu, nu, p, q);
            worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), 1e-30));
        }
        return make_report_residual(
            rep_name("matrix-pq", "branch agreement at m = n"), {{"draws", "50"}}, worst,
            1.0, 1e-13);
    });
    return run_items(items, opts.parallel);
}

// ---------------------------------------------------------------- reductions

// Independent brute-force summations for the named special functions.
// These recompute every power and Pochhammer from scratch, sharing no
// machinery with the evaluators they check.

Complex brute_qpoch(const Complex& a, double q, int n) {
    Complex r{1.0, 0.0};
    for (int i = 0; i < n; ++i) r *= (1.0 - a * std::pow(q, i));
    return r;
}

double brute_qpoch_inf(double a, double q) {
    double r = 1.0;
    for (int i = 0; i < 100000; ++i) {
        const double f = a * std::pow(q, i);
        r *= (1.0 - f);
        if (std::abs(f) < 1e-18) break;
    }
    return r;
}

Complex brute_hahn_exton(int n, const Complex& z, double q) {
    const double pref = brute_qpoch_inf(std::pow(q, n + 1), q) / brute_qpoch_inf(q, q);
    Complex sum{0.0, 0.0};
    for (int k = 0; k < 400; ++k) {
        const Complex term = std::pow(Complex(-1.0), k) *
                             std::pow(q, 0.5 * k * (k - 1.0)) *
                             pow_int(q * z * z, k) /
                             (brute_qpoch(Complex(q), q, k) *
                              brute_qpoch(Complex(std::pow(q, n + 1)), q, k));
        sum += term;
        if (k > 5 && std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return pow_int(z, n) * pref * sum;
}

Complex brute_q_bessel_2(int nu, const Complex& x, double q) {
    Complex sum{0.0, 0.0};
    for (int n = 0; n < 400; ++n) {
        const Complex term = std::pow(q, static_cast<double>(n) * (n + nu)) *
                             std::pow(Complex(-1.0), n) * pow_int(x / 2.0, 2 * n + nu) /
                             (brute_qpoch(Complex(q), q, n) *
                              brute_qpoch(Complex(q), q, n + nu));
        sum += term;
        if (n > 5 && std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
    }
    return sum;
}

Complex brute_little_q_jacobi(int n, const Complex& z, const Complex& alpha,
                              const Complex& beta, double q) {
    Complex sum{0.0, 0.0};
    for (int k = 0; k <= n; ++k) {
        sum += brute_qpoch(pow_int(Complex(q), -n), q, k) *
               brute_qpoch(pow_int(Complex(q), n + 1) * alpha * beta, q, k) /
               (brute_qpoch(Complex(q), q, k) * brute_qpoch(alpha * q, q, k)) *
               pow_int(q * z, k);
    }
    return sum;
}

Complex brute_big_q_jacobi(int n, const Complex& z, const Complex& alpha,
                           const Complex& beta, double q) {
    Complex sum{0.0, 0.0};
    for (int k = 0; k <= n; ++k) {
        sum += brute_qpoch(pow_int(Complex(q), -n), q, k) *
               brute_qpoch(pow_int(Complex(q), n + 1) * alpha * beta, q, k) *
               brute_qpoch(Complex(q) * alpha * z, q, k) /
               (brute_qpoch(Complex(q), q, k) * brute_qpoch(Complex(q) * alpha, q, k)) *
               pow_int(Complex(q), k);
    }
    return sum;
}

Complex brute_heine_series(const Complex& a, const Complex& z, double q) {
    Complex sum{0.0, 0.0};
    for (int n = 0; n < 2000; ++n) {
        const Complex term = brute_qpoch(a, q, n) / brute_qpoch(Complex(q), q, n) *
                             pow_int(z, n);
        sum += term;
        if (n > 5 && std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

std::vector<VerificationReport> suite_reductions(const SuiteOptions& opts) {
    std::vector<Item> items;
    const std::uint64_t seed = opts.seed;

    // --- kernel reductions (Q and L against their hypergeometric forms)
    items.push_back([seed, tol = opts.tol.value_or(1e-12)] {
        Rng rng(seed + 10);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const int n = rng.uniform_int(0, 8);
            const int gamma = rng.uniform_int(0, 4);
            const double x = rng.uniform(-1.5, 1.5);
            const double q = rng.uniform(0.2, 0.8);
            const Complex lhs = q_kernel_Q(n, Complex(x), gamma, 0.0, 0.0, q);
            PhiSpec spec;
            spec.upper_q = {pow_int(Complex(q), -n), Complex{0.0, 0.0}, Complex{0.0, 0.0}};
            spec.lower_q = {Complex(std::pow(q, gamma + 1.0))};
            spec.base_q = q;
            spec.argument = -x * std::pow(q, n);
            const Complex rhs = phi_rs(spec).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(rep_name("kernel-reduction", "Q^{(0,0)} == 3phi1"),
                                    {{"points", "20"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-12)] {
        Rng rng(seed + 11);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const int n = rng.uniform_int(0, 8);
            const int gamma = rng.uniform_int(0, 4);
            const double x = rng.uniform(-1.5, 1.5);
            const double q = rng.uniform(0.2, 0.8);
            const Complex lhs = q_kernel_Q(n, Complex(x), gamma, 0.0, 0.5, q);
            const Complex rhs = little_q_jacobi(
                n, Complex(x * std::pow(q, gamma + n - 0.5)),
                Complex(std::pow(q, gamma)), Complex{0.0, 0.0}, q);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(
            rep_name("kernel-reduction", "Q^{(0,1/2)} == little q-Jacobi"),
            {{"points", "20"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-12)] {
        Rng rng(seed + 12);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const int n = rng.uniform_int(0, 8);
            const double gamma = rng.uniform(0.0, 3.0);
            const double x = rng.uniform(-1.5, 1.5);
            const double q = rng.uniform(0.2, 0.8);
            const Complex lhs = q_kernel_Q(n, Complex(x), gamma, 0.5, 0.5, q);
            // Q^{(1/2,1/2)}_n(x) = ((q;q)_n / (q^{gamma+1};q)_n) L_n^{(gamma)}(-x);
            // the kernel carries argument -x relative to the 1phi1 form.
            const Complex rhs = qpochhammer(Complex(q), Complex(q), n) /
                                qpochhammer(Complex(std::pow(q, gamma + 1.0)), Complex(q), n) *
                                q_laguerre(n, gamma, Complex(-x), q);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(
            rep_name("kernel-reduction", "Q^{(1/2,1/2)} == q-Laguerre"),
            {{"points", "20"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-12)] {
        Rng rng(seed + 13);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const int n = rng.uniform_int(0, 6);
            const int gamma = rng.uniform_int(0, 4);
            const double x = rng.uniform(-1.5, 1.5);
            const double p = rng.uniform(0.75, 0.95);
            const double q = rng.uniform(0.2, 0.65);
            const double pq = p * q;
            const Complex lhs = pq_kernel_L(n, Complex(x), gamma, 0.0, 0.0, p, q);
            PhiSpec spec;
            spec.upper_q = {pow_int(Complex(pq), -n), Complex{0.0, 0.0}};
            spec.lower_q = {Complex(std::pow(pq, gamma + 1.0))};
            spec.upper_p = {};
            spec.lower_p = {Complex{0.0, 0.0}};
            spec.base_q = pq;
            spec.base_p = p;
            spec.argument = -x * (1.0 - pq) * std::pow(p, gamma + n + 1.0);
            const Complex rhs = phi_bibasic(spec).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(
            rep_name("kernel-reduction", "L^{(gamma;0,0)} == bibasic Phi"),
            {{"points", "20"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-12)] {
        Rng rng(seed + 14);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const int n = rng.uniform_int(0, 6);
            const int gamma = rng.uniform_int(0, 4);
            const double x = rng.uniform(-1.5, 1.5);
            const double p = rng.uniform(0.75, 0.95);
            const double q = rng.uniform(0.2, 0.65);
            const double pq = p * q;
            const Complex lhs = pq_kernel_L(n, Complex(x), gamma, 0.25, 0.25, p, q);
            PhiSpec spec;
            spec.upper_q = {pow_int(Complex(pq), -n)};
            spec.lower_q = {Complex(std::pow(pq, gamma + 1.0))};
            spec.upper_p = {Complex{0.0, 0.0}};
            spec.lower_p = {};
            spec.base_q = pq;
            spec.base_p = p;
            spec.argument =
                x * (1.0 - pq) * std::pow(q / p, (gamma + 1.0) / 2.0) *
                std::pow(p, gamma + n + 1.0);
            const Complex rhs = phi_bibasic(spec).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(
            rep_name("kernel-reduction", "L^{(gamma;1/4,1/4)} == bibasic Phi"),
            {{"points", "20"}}, worst, 1.0, tol);
    });

    // --- deformed-exponential product forms and aliases
    items.push_back([seed, tol = opts.tol.value_or(1e-12)] {
        Rng rng(seed + 20);
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const double q = rng.uniform(0.15, 0.85);
            const double z = rng.uniform(-0.85, 0.85);
            const Complex lhs = eq_mu(Complex(z), q, 0.0).value;
            const Complex rhs = 1.0 / qpochhammer_inf(Complex(z), Complex(q)).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(rep_name("exp-form", "e_q(z) == 1/(z;q)_inf"),
                                    {{"points", "25"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-12)] {
        Rng rng(seed + 21);
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const double q = rng.uniform(0.15, 0.85);
            const double z = rng.uniform(-2.0, 2.0);
            const Complex lhs = eq_mu(Complex(z), q, 0.5).value;
            const Complex rhs =
                qpochhammer_inf(Complex(-std::sqrt(q) * z), Complex(q)).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(
            rep_name("exp-form", "E^{(1/2)}(z) == (-q^{1/2} z;q)_inf"),
            {{"points", "25"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-14)] {
        Rng rng(seed + 22);
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const double q = rng.uniform(0.15, 0.85);
            const double mu = (i % 5 == 0) ? 0.0 : rng.uniform(0.0, 1.0);
            const double nu = rng.uniform(0.0, 1.0);
            const double z = rng.uniform(-0.8, 0.8);
            const Complex lhs = epq_munu(Complex(z), 1.0, q, mu, nu).value;
            const Complex rhs = eq_mu(Complex(z), q, mu).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(
            rep_name("exp-form", "E^{mu,nu}_{1,q} == E^{(mu)}_q"),
            {{"points", "25"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-13)] {
        Rng rng(seed + 23);
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const double p = rng.uniform(0.7, 0.95);
            const double q = rng.uniform(0.2, 0.7);
            const double z = rng.uniform(-1.5, 1.5);
            auto params = DeformationParams::pq(p, q);
            const Complex lhs = named_exp(ExpName::eps_pq, Complex(z), params).value;
            const Complex rhs = epq_munu(Complex(z), p, q, 0.25, 0.25).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(
            rep_name("exp-form", "eps_pq == E^{(1/2)}_{p,q}"), {{"points", "25"}}, worst,
            1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-13)] {
        Rng rng(seed + 24);
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const double p = rng.uniform(0.7, 0.95);
            const double q = rng.uniform(0.2, 0.7);
            const double z = rng.uniform(-1.5, 1.5);
            const Complex lhs = epq_munu(Complex(z), p, q, 0.5, 0.5).value;
            const Complex rhs =
                epq_vinet(Complex(std::sqrt(q / p) * z), p, q).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(
            rep_name("exp-form", "E^{1/2,1/2}_{p,q}(z) == E_{p,q}((q/p)^{1/2} z)"),
            {{"points", "25"}}, worst, 1.0, tol);
    });

    // --- Heine's binomial theorem
    items.push_back([seed, tol = opts.tol.value_or(1e-12)] {
        Rng rng(seed + 30);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double q = rng.uniform(0.1, 0.9);
            const double a = rng.uniform(-1.5, 1.5);
            const double z = rng.uniform(-0.85, 0.85);
            const Complex lhs = brute_heine_series(Complex(a), Complex(z), q);
            const Complex rhs = qpochhammer_inf(Complex(a * z), Complex(q)).value /
                                qpochhammer_inf(Complex(z), Complex(q)).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30));
        }
        return make_report_residual(
            rep_name("heine", "sum (a;q)_n/(q;q)_n z^n == (az;q)_inf/(z;q)_inf"),
            {{"points", "50"}}, worst, 1.0, tol);
    });

    // --- named special functions against independent brute-force loops
    items.push_back([seed, tol = opts.tol.value_or(1e-13)] {
        Rng rng(seed + 31);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const int n = rng.uniform_int(0, 6);
            const double z = rng.uniform(-1.2, 1.2);
            const double q = rng.uniform(0.2, 0.8);
            const Complex lhs = hahn_exton_bessel(n, Complex(z), q).value;
            const Complex rhs = brute_hahn_exton(n, Complex(z), q);
            worst = std::max(worst,
                             std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-30}));
        }
        return make_report_residual(
            rep_name("special-function", "Hahn-Exton J_n == brute-force series"),
            {{"points", "20"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-13)] {
        Rng rng(seed + 32);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const int nu = rng.uniform_int(0, 5);
            const double x = rng.uniform(-1.5, 1.5);
            const double q = rng.uniform(0.2, 0.8);
            const Complex lhs = q_bessel_2(nu, Complex(x), q).value;
            const Complex rhs = brute_q_bessel_2(nu, Complex(x), q);
            worst = std::max(worst,
                             std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-30}));
        }
        return make_report_residual(
            rep_name("special-function", "J^(2)_nu == brute-force series"),
            {{"points", "20"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-13)] {
        Rng rng(seed + 33);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const int n = rng.uniform_int(0, 8);
            const double z = rng.uniform(-1.0, 1.0);
            const double alpha = rng.uniform(-0.9, 0.9);
            const double beta = rng.uniform(-0.9, 0.9);
            const double q = rng.uniform(0.2, 0.8);
            const Complex lhs = little_q_jacobi(n, Complex(z), Complex(alpha), Complex(beta), q);
            const Complex rhs = brute_little_q_jacobi(n, Complex(z), Complex(alpha),
                                                      Complex(beta), q);
            worst = std::max(worst,
                             std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-30}));
        }
        return make_report_residual(
            rep_name("special-function", "little q-Jacobi == brute-force sum"),
            {{"points", "20"}}, worst, 1.0, tol);
    });

    items.push_back([seed, tol = opts.tol.value_or(1e-13)] {
        Rng rng(seed + 34);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const int n = rng.uniform_int(0, 8);
            const double z = rng.uniform(-1.0, 1.0);
            const double alpha = rng.uniform(-0.9, 0.9);
            const double beta = rng.uniform(-0.9, 0.9);
            const double q = rng.uniform(0.2, 0.8);
            const Complex lhs = big_q_jacobi(n, Complex(z), Complex(alpha), Complex(beta), q);
            const Complex rhs =
                brute_big_q_jacobi(n, Complex(z), Complex(alpha), Complex(beta), q);
            worst = std::max(worst,
                             std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-30}));
        }
        return make_report_residual(
            rep_name("special-function", "big q-Jacobi == brute-force sum"),
            {{"points", "20"}}, worst, 1.0, tol);
    });

    return run_items(items, opts.parallel);
}

// -------------------------------------------------------------- fourier-gauss

std::vector<VerificationReport> suite_fourier_gauss(const SuiteOptions& opts) {
    const double tol = opts.tol.value_or(1e-7);
    const std::vector<double> ps = {0.85, 0.9, 0.95};
    const std::vector<double> ks = {0.2, 0.3};
    const std::vector<double> xs = {0.0, 0.5, -0.5, 1.0, -1.0};
    const Complex t{0.3, 0.0};

    struct Case {
        FGSpec spec;
        FGDirection dir;
        std::string name;
    };
    std::vector<Case> cases;
    for (double zeta : {0.0, 0.5})
        for (double p : ps)
            for (double k : ks)
                for (double x : xs) {
                    FGSpec s;
                    s.p = p; s.k = k; s.zeta = zeta; s.t = t; s.x = x;
                    cases.push_back({s, FGDirection::forward,
                                     "Gaussian transform, forward, zeta=" + to_decimal(zeta)});
                }
    for (double zeta : {0.5, 1.0})
        for (double p : ps)
            for (double k : ks)
                for (double x : xs) {
                    FGSpec s;
                    s.p = p; s.k = k; s.zeta = zeta; s.t = t; s.x = x;
                    cases.push_back({s, FGDirection::inverse,
                                     "Gaussian transform, inverse, zeta=" + to_decimal(zeta)});
                }
    for (double rho : {1.0, std::numbers::sqrt2, 2.0})
        for (double p : ps)
            for (double k : ks)
                for (double x : {0.0, 1.0, -1.0}) {
                    FGSpec s;
                    s.p = p; s.k = k; s.zeta = 0.0; s.rho = rho; s.t = t; s.x = x;
                    std::string name = "Gaussian transform, unified, rho=" + to_decimal(rho);
                    if (rho == std::numbers::sqrt2) name += " (Ramanujan case)";
                    cases.push_back({s, FGDirection::unified, name});
                }

    std::vector<Item> items;
    items.reserve(cases.size());
    for (const auto& c : cases) {
        items.push_back([c, tol] {
            FGReport rep = fg_verify(c.spec, c.dir, tol, {}, /*parallel=*/false);
            // Node-doubling stability: the 256-node value must sit within
            // the reported disagreement of the 128-node value.
            FGSpec doubled = c.spec;
            doubled.nodes = 256;
            const Complex v2 =
                fg_quadrature_side(doubled, c.dir, {}, 1e-6, /*parallel=*/false);
            const double doubling =
                std::abs(v2 - rep.rhs) / std::max(std::abs(rep.lhs), 1e-30);
            VerificationReport r = make_report(
                c.name,
                {{"p", to_decimal(c.spec.p)}, {"k", to_decimal(c.spec.k)},
                 {"zeta", to_decimal(c.spec.zeta)}, {"rho", to_decimal(c.spec.rho)},
                 {"t", format_scalar(c.spec.t)}, {"x", to_decimal(c.spec.x)},
                 {"nodes", std::to_string(c.spec.nodes)},
                 {"node_doubling_shift", to_decimal(doubling)}},
                rep.lhs, rep.rhs, tol);
            if (doubling > std::max(rep.rel_err, 1e-12)) r.passed = false;
            return r;
        });
    }
    return run_items(items, opts.parallel);
}

// -------------------------------------------------------------------- limits

std::vector<VerificationReport> suite_limits(const SuiteOptions& opts) {
    std::vector<Item> items;
    const std::vector<Complex> zs = {Complex{0.5, 0.0}, Complex{1.0, 0.0},
                                     Complex{-0.5, 0.0}};

    for (double mu : {0.0, 0.5}) {
        for (const Complex& z : zs) {
            items.push_back([mu, z] {
                const std::vector<std::pair<double, double>> ladder = {
                    {1.0, 0.9}, {1.0, 0.99}, {1.0, 0.999}};
                const auto devs = classical_limit_report(z, mu, 0.0, ladder);
                const bool decreasing = devs[0] > devs[1] && devs[1] > devs[2];
                VerificationReport r = make_report_residual(
                    rep_name("classical-limit", "|E^{(mu)}_q((1-q)z) - e^z| decreasing"),
                    {{"mu", to_decimal(mu)}, {"z", format_scalar(z)},
                     {"deviations", to_decimal(devs[0]) + ", " + to_decimal(devs[1]) +
                                        ", " + to_decimal(devs[2])}},
                    devs[2], 1.0, 1.0);
                r.passed = decreasing;
                return r;
            });
        }
    }

    for (bool half : {false, true}) {
        for (const Complex& z : zs) {
            items.push_back([half, z] {
                const double mu = half ? 0.5 : 0.0;
                // mu = nu = 1/2 tolerates the straddling ladder (1+eps, 1-eps);
                // mu = nu = 0 needs p <= 1, so it walks (1-eps, 1-eps).
                std::vector<std::pair<double, double>> ladder;
                for (double eps : {0.1, 0.01, 0.001})
                    ladder.push_back(half ? std::make_pair(1.0 + eps, 1.0 - eps)
                                          : std::make_pair(1.0 - eps, 1.0 - eps));
                const auto devs = classical_limit_report(z, mu, mu, ladder);
                const bool decreasing = devs[0] > devs[1] && devs[1] > devs[2];
                VerificationReport r = make_report_residual(
                    rep_name("classical-limit",
                             "|E^{mu,nu}_{p,q}((p^{-1}-q)z) - e^z| decreasing"),
                    {{"mu", to_decimal(mu)}, {"nu", to_decimal(mu)}, {"z", format_scalar(z)},
                     {"deviations", to_decimal(devs[0]) + ", " + to_decimal(devs[1]) +
                                        ", " + to_decimal(devs[2])}},
                    devs[2], 1.0, 1.0);
                r.passed = decreasing;
                return r;
            });
        }
    }
    return run_items(items, opts.parallel);
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"generating",  "recurrence", "commutators",   "qdifference", "matrix-q",
            "matrix-pq",   "reductions", "fourier-gauss", "limits",      "algebra-relations"};
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "generating") return suite_generating(opts);
    if (name == "recurrence") return suite_recurrence(opts);
    if (name == "commutators") return suite_commutators(opts);
    if (name == "qdifference") return suite_qdifference(opts);
    if (name == "matrix-q") return suite_matrix_q(opts);
    if (name == "matrix-pq") return suite_matrix_pq(opts);
    if (name == "reductions") return suite_reductions(opts);
    if (name == "fourier-gauss") return suite_fourier_gauss(opts);
    if (name == "limits") return suite_limits(opts);
    if (name == "algebra-relations") return suite_algebra_relations(opts);
    throw DomainError("run_suite: unknown suite '" + name + "'");
}

}  // namespace qsf
