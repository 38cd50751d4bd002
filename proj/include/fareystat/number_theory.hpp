#pragma once

#include <cstdint>
#include <vector>

namespace fareystat {

// Sieved totients phi(k) with cumulative sums Phi(k) = sum_{j<=k} phi(j),
// 1-based; index 0 is unused. Immutable after construction.
struct TotientTable {
    std::int64_t limit = 0;
    std::vector<std::int64_t> phi;         // phi[k], 1 <= k <= limit
    std::vector<std::int64_t> cumulative;  // Phi(k)

    // Phi(m) = number of reduced fractions p/q with 0 < p <= q <= m.
    std::int64_t phi_sum(std::int64_t m) const;
};

// Moebius values mu(k) in {-1, 0, +1}, 1-based.
struct MobiusTable {
    std::int64_t limit = 0;
    std::vector<std::int8_t> mu;
};

struct SieveTables {
    TotientTable totients;
    MobiusTable mobius;
};

// One linear pass computes phi and mu together.
SieveTables sieve_tables(std::int64_t m);

TotientTable totient_sieve(std::int64_t m);
MobiusTable mobius_sieve(std::int64_t m);

// Phi(m) - phi(1), i.e. the totient sum taken from k = 2.
std::int64_t totient_sum_from_2(const TotientTable& table, std::int64_t m);

// 3 m^2 / pi^2, the leading-order approximation of Phi(m).
double totient_sum_approx(std::int64_t m);

}  // namespace fareystat
