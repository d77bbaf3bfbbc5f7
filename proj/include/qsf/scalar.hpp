#pragma once

#include <complex>
#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsf {

using Real = double;
using Complex = std::complex<double>;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Backs the exact arithmetic mode of the structural
/// identity checks, where coefficient growth overflows any fixed-width
/// integer long before the checked degrees are reached.
using Rational = boost::multiprecision::cpp_rational;

template <class T>
struct is_exact_backend : std::false_type {};
template <>
struct is_exact_backend<Rational> : std::true_type {};
template <class T>
inline constexpr bool is_exact_backend_v = is_exact_backend<T>::value;

/// Integer power by binary exponentiation; negative exponents divide,
/// so the base must be invertible in the scalar type.
template <class T>
T pow_int(T base, long long e) {
    if (e < 0) {
        base = T(1) / base;
        e = -e;
    }
    T acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline double abs_value(double x) { return std::abs(x); }
inline double abs_value(const Complex& z) { return std::abs(z); }

/// 17 significant digits: enough to round-trip an IEEE double exactly.
inline std::string to_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Serialized scalar for reports: plain decimal for real values,
/// "re + im i" when an imaginary part is present.
inline std::string format_scalar(const Complex& z) {
    if (z.imag() == 0.0) return to_decimal(z.real());
    return to_decimal(z.real()) + (z.imag() < 0 ? " - " : " + ") +
           to_decimal(std::abs(z.imag())) + "i";
}

inline std::string format_scalar(double x) { return to_decimal(x); }

inline std::string format_scalar(const Rational& r) {
    return r.str();
}

}  // namespace qsf
