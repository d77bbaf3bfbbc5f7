#include "qsf/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace qsf {

VerificationReport make_report(std::string identity, ParamList params, const Complex& lhs,
                               const Complex& rhs, double tolerance) {
    VerificationReport r;
    r.identity_name = std::move(identity);
    r.parameters = std::move(params);
    r.lhs = format_scalar(lhs);
    r.rhs = format_scalar(rhs);
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / std::max({std::abs(lhs), std::abs(rhs), 1e-30});
    r.tolerance = tolerance;
    r.passed = r.rel_err <= tolerance;
    return r;
}

VerificationReport make_report_residual(std::string identity, ParamList params,
                                        double residual, double scale, double tolerance) {
    VerificationReport r;
    r.identity_name = std::move(identity);
    r.parameters = std::move(params);
    r.lhs = to_decimal(residual);
    r.rhs = "0";
    r.abs_err = std::abs(residual);
    r.rel_err = r.abs_err / std::max(scale, 1e-30);
    r.tolerance = tolerance;
    r.passed = r.rel_err <= tolerance;
    return r;
}

VerificationReport make_report_exact(std::string identity, ParamList params,
                                     bool identical, std::string lhs, std::string rhs) {
    VerificationReport r;
    r.identity_name = std::move(identity);
    r.parameters = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.abs_err = identical ? 0.0 : 1.0;
    r.rel_err = r.abs_err;
    r.tolerance = 0.0;
    r.passed = identical;
    return r;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["identity_name"] = r.identity_name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["passed"] = r.passed;
    j["tolerance"] = r.tolerance;
    return j;
}

}  // namespace

std::string to_json_string(const VerificationReport& r) { return report_json(r).dump(2); }

std::string to_json_string(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2);
}

}  // namespace qsf
