#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsf/report.hpp"

namespace qsf {

/// Options shared by every verification suite. Random parameter draws are
/// fully determined by `seed`; `tol` and `max_n` override suite defaults;
/// `exact` selects the rational backend on the structural suites.
struct SuiteOptions {
    std::uint64_t seed = 12345;
    std::optional<double> tol;
    int max_n = -1;
    std::optional<bool> exact;
    bool parallel = true;
};

std::vector<std::string> suite_names();

/// Runs one named suite and returns its reports in definition order
/// (independent of thread count). Unknown names throw DomainError.
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const SuiteOptions& opts = {});

}  // namespace qsf
