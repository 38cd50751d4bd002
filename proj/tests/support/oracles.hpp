#pragma once

#include "fareystat/fraction.hpp"
#include "fareystat/rational.hpp"

#include <cstdint>
#include <vector>

// Brute-force reference computations, kept independent of the library's
// streaming/rank implementations: enumeration by sorting, totients by trial
// division, exact sums over one common denominator.
namespace oracle {

struct Term {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t index = 0;  // 1-based position in the sorted sequence
};

// All reduced p/q with 0 < p <= q <= m, sorted by value.
std::vector<Term> enumeration(std::int64_t m);

std::int64_t phi_trial_division(std::int64_t k);
int mu_factorization(std::int64_t k);

// R(m) as an exact rational over the common denominator (lcm(1..m) * Phi(m))^2.
fareystat::Rational exact_statistic(std::int64_t m);

}  // namespace oracle
