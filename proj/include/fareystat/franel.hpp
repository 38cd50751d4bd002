#pragma once

#include "fareystat/fraction.hpp"
#include "fareystat/number_theory.hpp"
#include "fareystat/rational.hpp"

#include <cstdint>
#include <vector>

namespace fareystat {

enum class SumMode { exact, compensated_float };

// `full` sums i = 1..Phi(m); `trimmed` drops the first and last terms.
enum class SumRange { full, trimmed };

struct FranelOptions {
    std::int64_t exact_cutoff = 2000;  // largest order accepted in exact mode
};

// Largest order accepted in float mode; keeps the integer deviation numerator
// p*Phi(m) - i*q inside 64 bits.
inline constexpr std::int64_t kFloatOrderLimit = 2'000'000;

// R(m) = sum over the sequence of (F_m(i) - i/N)^2 with N = Phi(m).
struct FranelResult {
    std::int64_t order = 0;
    std::int64_t count = 0;  // N = Phi(m)
    SumMode mode = SumMode::exact;
    SumRange range = SumRange::full;
    Value value;
};

// Single streaming pass over the Farey walk; O(m) memory beyond the walk.
// Exact mode accumulates integer deviation numerators per denominator; float
// mode uses compensated (Neumaier) summation of one-rounding terms.
FranelResult franel_sum(std::int64_t m, SumMode mode, SumRange range = SumRange::full,
                        const FranelOptions& options = {});

// index/count - fraction, exact and signed: the index-map-minus-element
// orientation of the piecewise formulas. Squaring removes the sign everywhere
// the statistic uses it.
Rational term_deviation(std::int64_t index, const Fraction& fraction, std::int64_t count);

struct QTerm {
    std::int64_t numerator = 0;  // i, coprime to the denominator
    Value value;                 // Q_m(k,i)
};

// The phi(k) terms of R(m) whose Farey element has reduced denominator k.
struct Decomposition {
    std::int64_t order = 0;
    std::int64_t denominator = 0;
    SumMode mode = SumMode::exact;
    std::vector<QTerm> terms;  // ascending numerator, exactly phi(k) entries
    Value subtotal;            // P_m(k)
};

Decomposition decompose(std::int64_t m, std::int64_t k, SumMode mode, const SieveTables& tables);

// Q_m(k,i) = (rank(i/k)/Phi(m) - i/k)^2 for a single reduced fraction i/k.
Value q_term(std::int64_t m, std::int64_t k, std::int64_t i, SumMode mode,
             const SieveTables& tables);

struct DominanceProfile {
    std::int64_t order = 0;
    std::int64_t denominator = 0;
    std::int64_t argmax_numerator = 0;  // smallest numerator attaining the max term
    Value max_term;
    Value unit_term;                 // Q_m(k,1)
    bool unit_is_max = false;        // max_term == unit_term
    double unit_to_best_other = 0.;  // Q(k,1) / max_{j>1} Q(k,j); +inf when phi(k) = 1
};

DominanceProfile dominance_profile(std::int64_t m, std::int64_t k, SumMode mode,
                                   const SieveTables& tables);

struct BoundRatio {
    FranelResult statistic;  // R(m)
    Value unit_sum;          // sum_{k=2..m} Q_m(k,1)
    double ratio = 0.;       // R(m) / unit_sum
};

// Both sides of the empirical bound R(m) < C * sum_k Q_m(k,1).
BoundRatio bound_ratio(std::int64_t m, SumMode mode, const SieveTables& tables, int threads = 1);

// P_m(k) for k = 2..m from one walk; result[k] indexed by denominator
// (entries 0 and 1 are zero).
std::vector<Value> denominator_subtotals(std::int64_t m, SumMode mode,
                                         const FranelOptions& options = {});

// sum_k P_m(k) via per-denominator decompositions, reduced in ascending k.
// Exact-mode result is identical bit-for-bit for any thread count.
Value sum_decompositions(std::int64_t m, SumMode mode, const SieveTables& tables, int threads = 1);

}  // namespace fareystat
