#include "qsf/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

#include <gsl/gsl_integration.h>

#include "qsf/errors.hpp"
#include "qsf/parallel.hpp"

namespace qsf {

namespace {

GaussHermiteTable compute_gauss_hermite(int n) {
    gsl_integration_fixed_workspace* ws = gsl_integration_fixed_alloc(
        gsl_integration_fixed_hermite, static_cast<std::size_t>(n),
        /*a=*/0.0, /*b=*/1.0, /*alpha=*/0.0, /*beta=*/0.0);
    if (ws == nullptr) throw DomainError("gauss_hermite: table allocation failed");
    GaussHermiteTable t;
    const double* x = gsl_integration_fixed_nodes(ws);
    const double* w = gsl_integration_fixed_weights(ws);
    t.nodes.assign(x, x + n);
    t.weights.assign(w, w + n);
    gsl_integration_fixed_free(ws);
    return t;
}

}  // namespace

const GaussHermiteTable& gauss_hermite(int n) {
    if (n < 1) throw DomainError("gauss_hermite: order must be >= 1");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussHermiteTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussHermiteTable>(compute_gauss_hermite(n));
    return *slot;
}

Complex trapezoid(const std::function<Complex(double)>& f, double a, double b,
                  int intervals, bool parallel) {
    if (intervals < 1) throw DomainError("trapezoid: need at least one interval");
    const double h = (b - a) / intervals;
    const std::size_t npts = static_cast<std::size_t>(intervals) + 1;
    auto values = par::batch<Complex>(
        npts,
        [&](std::size_t i) {
            const double x = a + h * static_cast<double>(i);
            Complex v = f(x);
            if (i == 0 || i + 1 == npts) v *= 0.5;
            return v;
        },
        parallel);
    return h * par::pairwise_sum(values);
}

}  // namespace qsf
