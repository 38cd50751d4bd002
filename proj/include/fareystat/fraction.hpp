#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace fareystat {

// Reduced positive rational. Farey elements live in (0,1]; the one exception
// is a cursor's successor one step past 1/1, which continues the sequence.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t numerator, std::int64_t denominator);  // reduces; requires both >= 1

    bool operator==(const Fraction&) const = default;

    bool in_unit_interval() const { return num <= den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

// Order by value; cross-multiplication in 128-bit, no overflow for any
// representable operands.
bool operator<(const Fraction& a, const Fraction& b);

}  // namespace fareystat
