#include "fareystat/asymptotics.hpp"

#include "fareystat/farey.hpp"
#include "fareystat/fraction.hpp"
#include "fareystat/summation.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fareystat {

namespace {

constexpr double kPi = std::numbers::pi;

double pi2() {
    return kPi * kPi;
}
double pi4() {
    return pi2() * pi2();
}

}  // namespace

double r_hat_top_coeff_m2() {
    return (216. + pi4() - 72. * pi2() * (std::log(4.) - 1.)) / 216.;
}

double r_hat_top_coeff_m1() {
    return (pi4() - 24. * pi2() * std::log(2.)) * 6. / 216.;
}

double r_hat_top_coeff_m0() {
    return 12. * pi4() / 216.;
}

Estimate r_hat_top(std::int64_t m) {
    if (m < 2)
        throw std::invalid_argument("r_hat_top: order must be >= 2");
    const double md = static_cast<double>(m);
    const double value = (12. * pi4() + 6. * md * (pi4() - 24. * pi2() * std::log(2.)) +
                          md * md * (216. + pi4() - 72. * pi2() * (std::log(4.) - 1.))) /
                         (216. * md * md * md);

    Estimate est;
    est.order = m;
    est.constant = 1.;
    est.value = value;
    est.components.push_back({md + 1., -1., md / 2., md, 1, value});
    return est;
}

double segment_integral(double a, double b, double c, std::int64_t i, std::int64_t m) {
    if (!(c >= 1.))
        throw std::invalid_argument("segment_integral: need c >= 1");
    if (m < 1 || static_cast<double>(m) < c)
        throw std::invalid_argument("segment_integral: need m >= c");
    const double md = static_cast<double>(m);
    const double id = static_cast<double>(i);
    const double c2 = c * c;
    const double m2 = md * md;
    const double numerator =
        27. * c2 * c2 * id * id * m2 * md - 18. * b * c2 * id * m2 * (c + md) * pi2() +
        18. * a * c2 * id * m2 * (c + md) * pi2() * std::log(md / (md + c)) +
        (md + c) *
            (3. * a * a * c2 + 3. * a * b * c * (c + 2. * md) +
             b * b * (c2 + 3. * c * md + 3. * m2)) *
            pi4();
    return numerator / (27. * c2 * (md + c) * m2 * m2);
}

namespace {

// Two-point affine anchor for the index map of i/k, shared with
// general_term_params' derivation but without the interval extension.
struct Anchor {
    double intercept = 0.;
    double slope = 0.;
};

Anchor term_anchor(std::int64_t m, std::int64_t k, std::int64_t i, const SieveTables& tables) {
    const auto rank_at = [&](std::int64_t kk) {
        return static_cast<double>(farey_rank(Fraction(i, kk), m, tables.mobius));
    };
    const double r0 = rank_at(k);
    std::int64_t neighbour = 0;
    for (std::int64_t kk = k - 1; kk > i; --kk)
        if (kk <= m && std::gcd(i, kk) == 1) {
            neighbour = kk;
            break;
        }
    if (neighbour == 0)
        for (std::int64_t kk = k + 1; kk <= m; ++kk)
            if (std::gcd(i, kk) == 1) {
                neighbour = kk;
                break;
            }
    if (neighbour == 0)
        return {r0, 0.};
    const double r1 = rank_at(neighbour);
    const double slope = (r1 - r0) / static_cast<double>(neighbour - k);
    return {r0 - slope * static_cast<double>(k), slope};
}

}  // namespace

Estimate r_hat_general(std::int64_t m, const SegmentTable& segments,
                       const EstimateOptions& options, const SieveTables* tables) {
    if (segments.order != m)
        throw std::invalid_argument("r_hat_general: segment table order mismatch");
    if (options.policy == NumeratorPolicy::all && tables == nullptr)
        throw std::invalid_argument("r_hat_general: all-numerators policy needs sieve tables");

    Estimate est;
    est.order = m;
    est.constant = options.constant;

    NeumaierSum total;
    for (const auto& seg : segments.segments) {
        if (options.policy == NumeratorPolicy::unit_only) {
            NeumaierSum part;
            for (std::int64_t k = seg.k_low; k <= seg.k_high; ++k)
                part.add(segment_integral(static_cast<double>(seg.intercept),
                                          static_cast<double>(seg.slope),
                                          static_cast<double>(m) / static_cast<double>(k), 1, m));
            est.components.push_back({static_cast<double>(seg.intercept),
                                      static_cast<double>(seg.slope),
                                      static_cast<double>(seg.k_low),
                                      static_cast<double>(seg.k_high + 1), 1, part.value()});
            total.add(part.value());
        } else {
            // numerator 0 marks an aggregate over all numerators of the band
            NeumaierSum part;
            for (std::int64_t k = seg.k_low; k <= seg.k_high; ++k) {
                for (std::int64_t i = 1; i < k; ++i) {
                    if (std::gcd(i, k) != 1)
                        continue;
                    const Anchor anchor = term_anchor(m, k, i, *tables);
                    part.add(segment_integral(anchor.intercept, anchor.slope,
                                              static_cast<double>(m) / static_cast<double>(k), i,
                                              m));
                }
            }
            est.components.push_back({static_cast<double>(seg.intercept),
                                      static_cast<double>(seg.slope),
                                      static_cast<double>(seg.k_low),
                                      static_cast<double>(seg.k_high + 1), 0, part.value()});
            total.add(part.value());
        }
    }
    est.value = options.constant * total.value();
    return est;
}

std::vector<LimitPoint> limit_diagnostic(double epsilon, std::span<const std::int64_t> orders) {
    if (!(epsilon > 0.))
        throw std::invalid_argument("limit_diagnostic: epsilon must be > 0");
    std::vector<LimitPoint> points;
    points.reserve(orders.size());
    std::int64_t prev = 0;
    for (std::int64_t m : orders) {
        if (m <= prev)
            throw std::invalid_argument("limit_diagnostic: orders must be strictly increasing");
        prev = m;
        const double md = static_cast<double>(m);
        points.push_back({m, r_hat_top(m).value * std::pow(md, 1. - epsilon)});
    }
    return points;
}

}  // namespace fareystat
