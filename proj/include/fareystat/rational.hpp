#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace fareystat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A computed quantity: exact rational or double, depending on summation mode.
using Value = std::variant<Rational, double>;

// Raised when a request exceeds a configured resource limit (e.g. the exact-mode
// order cutoff). Distinct from std::invalid_argument so callers can map it to a
// dedicated exit code.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool value_is_exact(const Value& v) {
    return std::holds_alternative<Rational>(v);
}

inline const Rational& value_exact(const Value& v) {
    if (!value_is_exact(v))
        throw std::invalid_argument("value is not exact");
    return std::get<Rational>(v);
}

inline double value_to_double(const Value& v) {
    if (value_is_exact(v))
        return std::get<Rational>(v).convert_to<double>();
    return std::get<double>(v);
}

inline BigInt bigint_from_u128(unsigned __int128 v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | static_cast<std::uint64_t>(v);
}

// "p/q" for proper fractions, plain integer when the denominator is 1.
std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace fareystat
