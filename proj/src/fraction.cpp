#include "fareystat/fraction.hpp"

#include <numeric>
#include <stdexcept>

namespace fareystat {

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
    if (numerator < 1 || denominator < 1)
        throw std::invalid_argument("Fraction: numerator and denominator must be >= 1");
    const std::int64_t g = std::gcd(numerator, denominator);
    num = numerator / g;
    den = denominator / g;
}

std::string Fraction::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

}  // namespace fareystat
