#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsf/scalar.hpp"

namespace qsf {

/// Structured pass/fail record for one verified identity: both sides,
/// residuals, the tolerance in force, and the parameters that produced it.
struct VerificationReport {
    std::string identity_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string lhs;
    std::string rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool passed = false;
    double tolerance = 0.0;
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

/// Compare two scalars; rel_err is measured against the larger magnitude
/// (floored away from zero so exact-zero comparisons stay meaningful).
VerificationReport make_report(std::string identity, ParamList params, const Complex& lhs,
                               const Complex& rhs, double tolerance);

/// Residual-style report: |residual| measured against an explicit scale.
VerificationReport make_report_residual(std::string identity, ParamList params,
                                        double residual, double scale, double tolerance);

/// Exact-arithmetic report: passed iff the residual is identically zero.
VerificationReport make_report_exact(std::string identity, ParamList params,
                                     bool identical, std::string lhs, std::string rhs);

std::string to_json_string(const VerificationReport& r);
std::string to_json_string(const std::vector<VerificationReport>& reports);

}  // namespace qsf
