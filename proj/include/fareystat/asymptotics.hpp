#pragma once

#include "fareystat/number_theory.hpp"
#include "fareystat/piecewise.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fareystat {

struct EstimateComponent {
    double intercept = 0.;  // a
    double slope = 0.;      // b
    double k_lo = 0.;       // integration window [k_lo, k_hi]
    double k_hi = 0.;
    std::int64_t numerator = 1;  // i
    double value = 0.;
};

struct Estimate {
    std::int64_t order = 0;
    double value = 0.;     // constant * sum of component values
    double constant = 1.;  // scaling constant C
    std::vector<EstimateComponent> components;
};

// Closed form of the top-band estimate: the index map m+1-k over k in (m/2, m],
// normalizer replaced by 3m^2/pi^2, integrated over [m/2, m]:
//   (12 pi^4 + 6m(pi^4 - 24 pi^2 log 2) + m^2(216 + pi^4 - 72 pi^2 (log 4 - 1)))
//   / (216 m^3)
Estimate r_hat_top(std::int64_t m);

// Expanded coefficients of r_hat_top: value = (C2 m^2 + C1 m + C0) / m^3.
double r_hat_top_coeff_m2();
double r_hat_top_coeff_m1();
double r_hat_top_coeff_m0();

// Closed form of int_{m/c}^{m/c+1} ((a + b k)/(3 m^2/pi^2) - i/k)^2 dk.
// c is real: c = m/k0 places the window at [k0, k0+1].
double segment_integral(double a, double b, double c, std::int64_t i, std::int64_t m);

enum class NumeratorPolicy { unit_only, all };

struct EstimateOptions {
    NumeratorPolicy policy = NumeratorPolicy::unit_only;
    double constant = 1.;  // C
};

// Sums segment_integral over per-k windows [k, k+1] for every k covered by the
// table, one component per segment (per term for the all-numerators policy,
// which derives each term's affine coefficients and needs `tables`).
Estimate r_hat_general(std::int64_t m, const SegmentTable& segments,
                       const EstimateOptions& options = {},
                       const SieveTables* tables = nullptr);

struct LimitPoint {
    std::int64_t order = 0;
    double value = 0.;  // r_hat_top(order) / order^(-1+epsilon)
};

// Diagnostic sequence for the decay claim; requires epsilon > 0 and strictly
// increasing orders.
std::vector<LimitPoint> limit_diagnostic(double epsilon, std::span<const std::int64_t> orders);

}  // namespace fareystat
