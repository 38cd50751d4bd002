#pragma once

#include "fareystat/fraction.hpp"
#include "fareystat/number_theory.hpp"

#include <cstdint>

namespace fareystat {

// Streaming enumeration state for the Farey sequence of order m restricted to
// (0,1]. `current` is the index-th element; `current` and `successor` are
// Farey-adjacent: successor.num * current.den - current.num * successor.den = 1.
struct FareyCursor {
    std::int64_t order = 1;
    Fraction current;
    Fraction successor;
    std::int64_t index = 1;

    bool at_end() const { return current.num == current.den; }  // current == 1/1
};

// Cursor positioned at 1/m with index 1 (1/1 for m = 1).
FareyCursor farey_start(std::int64_t m);

// Adjacent-pair recurrence: next = (j*c - a)/(j*d - b) with j = floor((m+b)/d)
// for the pair a/b, c/d. Throws std::out_of_range once current is 1/1.
FareyCursor farey_next(const FareyCursor& cursor);

// 1-based position of x in the (0,1] Farey sequence of order m, by Moebius
// inversion of the floor-sum count of fractions <= x:
//   rank(p/q) = sum_{d<=m} mu(d) * sum_{t<=m/d} floor(t*p/q).
// O(m) time per query.
std::int64_t farey_rank(const Fraction& x, std::int64_t m, const MobiusTable& mobius);

// rank(1/k) via the closed-form floor sum sum_{t<=n} floor(t/k); same value as
// farey_rank on 1/k, cheaper and allocation-free.
std::int64_t unit_fraction_index(std::int64_t k, std::int64_t m, const MobiusTable& mobius);

}  // namespace fareystat
