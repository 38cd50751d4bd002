#include "fareystat/piecewise.hpp"

#include "fareystat/farey.hpp"
#include "fareystat/fraction.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace fareystat {

const PiecewiseSegment* SegmentTable::find(std::int64_t k) const {
    for (const auto& seg : segments)
        if (seg.contains(k))
            return &seg;
    return nullptr;
}

SegmentTable derive_segments(std::int64_t m, std::int64_t k_min, const SieveTables& tables) {
    if (m < 2)
        throw std::invalid_argument("derive_segments: order must be >= 2");
    if (k_min < 2 || k_min > m)
        throw std::invalid_argument("derive_segments: need 2 <= k_min <= m");
    if (tables.totients.limit < m || tables.mobius.limit < m)
        throw std::invalid_argument("derive_segments: sieve tables cover less than the order");

    const std::int64_t normalizer = tables.totients.phi_sum(m);
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(m - k_min) + 1);
    for (std::int64_t k = k_min; k <= m; ++k)
        ranks[static_cast<std::size_t>(k - k_min)] = unit_fraction_index(k, m, tables.mobius);
    const auto rank_of = [&](std::int64_t k) {
        return ranks[static_cast<std::size_t>(k - k_min)];
    };

    SegmentTable table;
    table.order = m;
    table.k_min = k_min;

    std::int64_t seg_high = m;
    std::int64_t seg_low = m;
    std::optional<std::int64_t> step;
    const auto close = [&] {
        PiecewiseSegment seg;
        seg.k_low = seg_low;
        seg.k_high = seg_high;
        seg.slope = step ? -*step : 0;
        seg.intercept = rank_of(seg_high) - seg.slope * seg_high;
        seg.regime = m / seg_high;
        seg.normalizer = normalizer;
        table.segments.push_back(seg);
    };

    for (std::int64_t k = m - 1; k >= k_min; --k) {
        const std::int64_t diff = rank_of(k) - rank_of(k + 1);
        if (!step) {
            step = diff;
            seg_low = k;
        } else if (diff == *step) {
            seg_low = k;
        } else {
            close();
            seg_high = seg_low = k;
            step.reset();
        }
    }
    close();

    // Pointwise certification of every emitted segment.
    for (const auto& seg : table.segments)
        for (std::int64_t k = seg.k_low; k <= seg.k_high; ++k)
            if (seg.rank_at(k) != rank_of(k))
                throw std::logic_error("derive_segments: segment failed certification at k = " +
                                       std::to_string(k));
    return table;
}

std::int64_t step_size_law(std::int64_t c, const TotientTable& totients) {
    if (c < 1 || c > totients.limit)
        throw std::invalid_argument("step_size_law: regime outside table limit");
    return totients.phi_sum(c);
}

namespace {

bool admissible(std::int64_t k, std::int64_t i, std::int64_t m) {
    return k > i && k <= m && std::gcd(i, k) == 1;
}

std::int64_t rank_of_term(std::int64_t m, std::int64_t k, std::int64_t i,
                          const SieveTables& tables) {
    return farey_rank(Fraction(i, k), m, tables.mobius);
}

}  // namespace

AffineTermParams general_term_params(std::int64_t m, std::int64_t k, std::int64_t i,
                                     const SieveTables& tables) {
    if (k < 2 || k > m)
        throw std::invalid_argument("general_term_params: need 2 <= k <= m");
    if (i < 1 || i >= k || std::gcd(i, k) != 1)
        throw std::invalid_argument("general_term_params: i/k must be a reduced fraction in (0,1)");
    if (tables.totients.limit < m || tables.mobius.limit < m)
        throw std::invalid_argument("general_term_params: sieve tables cover less than the order");

    AffineTermParams params;
    params.order = m;
    params.numerator = i;
    params.regime = m / k;

    const std::int64_t r0 = rank_of_term(m, k, i, tables);

    // Anchor on the nearest admissible neighbour, preferring the one below k
    // (matching the descending scan direction of segment derivation).
    std::int64_t anchor = 0;
    for (std::int64_t kk = k - 1; kk > i; --kk)
        if (admissible(kk, i, m)) {
            anchor = kk;
            break;
        }
    if (anchor == 0)
        for (std::int64_t kk = k + 1; kk <= m; ++kk)
            if (admissible(kk, i, m)) {
                anchor = kk;
                break;
            }

    if (anchor == 0) {
        params.k_low = params.k_high = k;
        params.intercept = r0;
        params.slope = 0;
        params.degenerate = true;
        return params;
    }

    const std::int64_t r1 = rank_of_term(m, anchor, i, tables);
    params.slope = Rational(r1 - r0, anchor - k);
    params.intercept = Rational(r0) - params.slope * k;
    params.degenerate = false;

    const auto matches = [&](std::int64_t kk) {
        return Rational(rank_of_term(m, kk, i, tables)) == params.intercept + params.slope * kk;
    };

    std::int64_t lo = std::min(k, anchor);
    std::int64_t hi = std::max(k, anchor);
    for (std::int64_t kk = lo - 1; kk > i; --kk) {
        if (!admissible(kk, i, m))
            continue;
        if (!matches(kk))
            break;
        lo = kk;
    }
    for (std::int64_t kk = hi + 1; kk <= m; ++kk) {
        if (!admissible(kk, i, m))
            continue;
        if (!matches(kk))
            break;
        hi = kk;
    }
    params.k_low = lo;
    params.k_high = hi;

    // Certify the reported interval end to end.
    for (std::int64_t kk = lo; kk <= hi; ++kk)
        if (admissible(kk, i, m) && !matches(kk))
            throw std::logic_error("general_term_params: affine certification failed");
    return params;
}

}  // namespace fareystat
