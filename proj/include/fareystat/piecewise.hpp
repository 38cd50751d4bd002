#pragma once

#include "fareystat/number_theory.hpp"
#include "fareystat/rational.hpp"

#include <cstdint>
#include <vector>

namespace fareystat {

// One maximal run of constant first difference of rank(1/k): for every k in
// [k_low, k_high], rank(1/k, m) = intercept + slope * k. Certified pointwise
// during derivation, never extrapolated.
struct PiecewiseSegment {
    std::int64_t regime = 0;      // band label c = floor(order / k_high)
    std::int64_t k_low = 0;       // inclusive
    std::int64_t k_high = 0;      // inclusive
    std::int64_t intercept = 0;   // a
    std::int64_t slope = 0;       // b <= 0; 0 for single-point segments
    std::int64_t normalizer = 0;  // Phi(order), shared denominator of the index map

    std::int64_t length() const { return k_high - k_low + 1; }
    bool contains(std::int64_t k) const { return k_low <= k && k <= k_high; }
    std::int64_t rank_at(std::int64_t k) const { return intercept + slope * k; }
};

// Contiguous, non-overlapping cover of [k_min, order], listed in scan order
// (descending k).
struct SegmentTable {
    std::int64_t order = 0;
    std::int64_t k_min = 0;
    std::vector<PiecewiseSegment> segments;

    const PiecewiseSegment* find(std::int64_t k) const;
};

// Scans k from m down to k_min, extends a segment while the first difference
// of rank(1/k) stays constant, then re-verifies each emitted segment pointwise.
// A segment of length 1 is valid; irregular boundary points never block coverage.
SegmentTable derive_segments(std::int64_t m, std::int64_t k_min, const SieveTables& tables);

// Predicted |slope| for band c: Phi(c). Away from band boundaries, the gap
// (1/(k+1), 1/k] with m/(c+1) < k <= m/c holds phi(j) fractions for each
// denominator j <= c, Phi(c) in total.
std::int64_t step_size_law(std::int64_t c, const TotientTable& totients);

// Affine representation of rank(i/k', m) in k' around a given k, over the k'
// with gcd(i, k') = 1. Coefficients are exact rationals (integers when i = 1).
struct AffineTermParams {
    std::int64_t order = 0;
    std::int64_t numerator = 0;  // i
    std::int64_t k_low = 0;      // certified interval, inclusive
    std::int64_t k_high = 0;
    Rational intercept;          // a
    Rational slope;              // b
    std::int64_t regime = 0;     // floor(order / k)
    bool degenerate = false;     // only one admissible k' in the interval
};

// Maximal interval containing k on which the index map is affine over
// admissible k'. When k sits on a breakpoint the map anchored below is
// preferred, matching the descending scan.
AffineTermParams general_term_params(std::int64_t m, std::int64_t k, std::int64_t i,
                                     const SieveTables& tables);

}  // namespace fareystat
