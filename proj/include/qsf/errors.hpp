#pragma once

#include <stdexcept>
#include <string>

namespace qsf {

/// Parameter outside the documented domain of an operation. Domains are
/// enforced eagerly; no silent clamping or limit-taking anywhere.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A series or infinite product exhausted its term budget before the
/// convergence criterion was met.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// The two independent quadrature discretizations disagree beyond the
/// allowed cross-check tolerance.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsf
