#include "fareystat/franel.hpp"

#include "fareystat/farey.hpp"
#include "fareystat/parallel.hpp"
#include "fareystat/summation.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fareystat {

namespace {

void check_order(std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("order must be >= 1");
}

void check_mode_limits(std::int64_t m, SumMode mode, const FranelOptions& options) {
    if (mode == SumMode::exact && m > options.exact_cutoff)
        throw ResourceLimitError("exact mode is limited to m <= " +
                                 std::to_string(options.exact_cutoff) +
                                 "; use compensated-float mode for m = " + std::to_string(m));
    if (mode == SumMode::compensated_float && m > kFloatOrderLimit)
        throw ResourceLimitError("float mode is limited to m <= " +
                                 std::to_string(kFloatOrderLimit));
}

void check_tables(std::int64_t m, const SieveTables& tables) {
    if (tables.totients.limit < m || tables.mobius.limit < m)
        throw std::invalid_argument("sieve tables cover less than the requested order");
}

// Integer numerator of F - i/N over the denominator q*N. Both factors stay in
// 64 bits for m <= kFloatOrderLimit.
std::int64_t deviation_numerator(std::int64_t p, std::int64_t q, std::int64_t i,
                                 std::int64_t count) {
    return p * count - i * q;
}

Rational squared_term(std::int64_t dev_num, std::int64_t den) {
    const BigInt n = BigInt(dev_num) * dev_num;
    const BigInt d = BigInt(den) * den;
    return Rational(n, d);
}

double squared_term_double(std::int64_t dev_num, std::int64_t den) {
    const double dv = static_cast<double>(dev_num) / static_cast<double>(den);
    return dv * dv;
}

// Folds per-denominator squared-numerator buckets into sum_q S_q/q^2 / N^2.
Rational fold_buckets(const std::vector<unsigned __int128>& buckets, std::int64_t count) {
    Rational acc;
    for (std::size_t q = 1; q < buckets.size(); ++q) {
        if (buckets[q] == 0)
            continue;
        acc += Rational(bigint_from_u128(buckets[q]), BigInt(q) * q);
    }
    return acc / Rational(BigInt(count) * count);
}

}  // namespace

FranelResult franel_sum(std::int64_t m, SumMode mode, SumRange range,
                        const FranelOptions& options) {
    check_order(m);
    check_mode_limits(m, mode, options);

    const TotientTable totients = totient_sieve(m);
    const std::int64_t count = totients.phi_sum(m);

    FranelResult result;
    result.order = m;
    result.count = count;
    result.mode = mode;
    result.range = range;

    std::vector<unsigned __int128> buckets;
    NeumaierSum float_sum;
    if (mode == SumMode::exact)
        buckets.assign(static_cast<std::size_t>(m) + 1, 0);

    FareyCursor cursor = farey_start(m);
    for (;;) {
        const std::int64_t i = cursor.index;
        const bool skip = range == SumRange::trimmed && (i == 1 || i == count);
        if (!skip) {
            const std::int64_t d =
                deviation_numerator(cursor.current.num, cursor.current.den, i, count);
            if (mode == SumMode::exact) {
                const auto sq = static_cast<unsigned __int128>(static_cast<__int128>(d) * d);
                buckets[static_cast<std::size_t>(cursor.current.den)] += sq;
            } else {
                float_sum.add(squared_term_double(d, cursor.current.den * count));
            }
        }
        if (cursor.at_end())
            break;
        cursor = farey_next(cursor);
    }

    if (mode == SumMode::exact)
        result.value = fold_buckets(buckets, count);
    else
        result.value = float_sum.value();
    return result;
}

Rational term_deviation(std::int64_t index, const Fraction& fraction, std::int64_t count) {
    if (count < 1)
        throw std::invalid_argument("term_deviation: count must be >= 1");
    if (index < 1 || index > count)
        throw std::invalid_argument("term_deviation: index " + std::to_string(index) +
                                    " outside 1.." + std::to_string(count));
    const BigInt num = BigInt(index) * fraction.den - BigInt(fraction.num) * count;
    return Rational(num, BigInt(fraction.den) * count);
}

Decomposition decompose(std::int64_t m, std::int64_t k, SumMode mode,
                        const SieveTables& tables) {
    check_order(m);
    if (k < 2 || k > m)
        throw std::invalid_argument("decompose: need 2 <= k <= m");
    check_tables(m, tables);

    const std::int64_t count = tables.totients.phi_sum(m);
    const std::int64_t den = k * count;

    Decomposition dec;
    dec.order = m;
    dec.denominator = k;
    dec.mode = mode;
    dec.terms.reserve(static_cast<std::size_t>(tables.totients.phi[static_cast<std::size_t>(k)]));

    BigInt exact_sum = 0;
    NeumaierSum float_sum;
    for (std::int64_t i = 1; i < k; ++i) {
        if (std::gcd(i, k) != 1)
            continue;
        const std::int64_t rank = farey_rank(Fraction(i, k), m, tables.mobius);
        const std::int64_t d = deviation_numerator(i, k, rank, count);
        QTerm term;
        term.numerator = i;
        if (mode == SumMode::exact) {
            term.value = squared_term(d, den);
            exact_sum += BigInt(d) * d;
        } else {
            term.value = squared_term_double(d, den);
            float_sum.add(std::get<double>(term.value));
        }
        dec.terms.push_back(std::move(term));
    }

    if (mode == SumMode::exact)
        dec.subtotal = Rational(exact_sum, BigInt(den) * den);
    else
        dec.subtotal = float_sum.value();
    return dec;
}

Value q_term(std::int64_t m, std::int64_t k, std::int64_t i, SumMode mode,
             const SieveTables& tables) {
    check_order(m);
    if (k < 2 || k > m)
        throw std::invalid_argument("q_term: need 2 <= k <= m");
    if (i < 1 || i >= k)
        throw std::invalid_argument("q_term: need 1 <= i < k");
    if (std::gcd(i, k) != 1)
        throw std::invalid_argument("q_term: " + std::to_string(i) + "/" + std::to_string(k) +
                                    " is not reduced");
    check_tables(m, tables);

    const std::int64_t count = tables.totients.phi_sum(m);
    const std::int64_t rank = farey_rank(Fraction(i, k), m, tables.mobius);
    const std::int64_t d = deviation_numerator(i, k, rank, count);
    if (mode == SumMode::exact)
        return squared_term(d, k * count);
    return squared_term_double(d, k * count);
}

namespace {

bool value_less(const Value& a, const Value& b) {
    if (value_is_exact(a) && value_is_exact(b))
        return std::get<Rational>(a) < std::get<Rational>(b);
    return value_to_double(a) < value_to_double(b);
}

bool value_equal(const Value& a, const Value& b) {
    if (value_is_exact(a) && value_is_exact(b))
        return std::get<Rational>(a) == std::get<Rational>(b);
    return value_to_double(a) == value_to_double(b);
}

}  // namespace

DominanceProfile dominance_profile(std::int64_t m, std::int64_t k, SumMode mode,
                                   const SieveTables& tables) {
    const Decomposition dec = decompose(m, k, mode, tables);

    DominanceProfile profile;
    profile.order = m;
    profile.denominator = k;
    profile.unit_term = dec.terms.front().value;  // i = 1 is always present

    std::size_t best = 0;
    for (std::size_t t = 1; t < dec.terms.size(); ++t) {
        if (value_less(dec.terms[best].value, dec.terms[t].value))
            best = t;
    }
    profile.argmax_numerator = dec.terms[best].numerator;
    profile.max_term = dec.terms[best].value;
    profile.unit_is_max = value_equal(profile.unit_term, profile.max_term);

    bool has_other = false;
    std::size_t best_other = 0;
    for (std::size_t t = 1; t < dec.terms.size(); ++t) {
        if (!has_other || value_less(dec.terms[best_other].value, dec.terms[t].value)) {
            best_other = t;
            has_other = true;
        }
    }
    if (!has_other) {
        profile.unit_to_best_other = std::numeric_limits<double>::infinity();
    } else {
        const double denom = value_to_double(dec.terms[best_other].value);
        profile.unit_to_best_other =
            denom == 0. ? std::numeric_limits<double>::infinity()
                        : value_to_double(profile.unit_term) / denom;
    }
    return profile;
}

BoundRatio bound_ratio(std::int64_t m, SumMode mode, const SieveTables& tables, int threads) {
    if (m < 2)
        throw std::invalid_argument("bound_ratio: order must be >= 2");
    check_tables(m, tables);

    BoundRatio out;
    out.statistic = franel_sum(m, mode);

    const auto unit_terms = map_ordered<Value>(
        2, m + 1, threads, [&](std::int64_t k) { return q_term(m, k, 1, mode, tables); });

    if (mode == SumMode::exact) {
        Rational acc;
        for (const Value& v : unit_terms)
            acc += std::get<Rational>(v);
        out.unit_sum = acc;
    } else {
        NeumaierSum acc;
        for (const Value& v : unit_terms)
            acc.add(std::get<double>(v));
        out.unit_sum = acc.value();
    }

    out.ratio = value_to_double(out.statistic.value) / value_to_double(out.unit_sum);
    return out;
}

std::vector<Value> denominator_subtotals(std::int64_t m, SumMode mode,
                                         const FranelOptions& options) {
    check_order(m);
    check_mode_limits(m, mode, options);

    const TotientTable totients = totient_sieve(m);
    const std::int64_t count = totients.phi_sum(m);
    const auto size = static_cast<std::size_t>(m) + 1;

    std::vector<unsigned __int128> buckets;
    std::vector<NeumaierSum> float_buckets;
    if (mode == SumMode::exact)
        buckets.assign(size, 0);
    else
        float_buckets.assign(size, {});

    FareyCursor cursor = farey_start(m);
    for (;;) {
        const std::int64_t q = cursor.current.den;
        const std::int64_t d =
            deviation_numerator(cursor.current.num, q, cursor.index, count);
        if (mode == SumMode::exact)
            buckets[static_cast<std::size_t>(q)] +=
                static_cast<unsigned __int128>(static_cast<__int128>(d) * d);
        else
            float_buckets[static_cast<std::size_t>(q)].add(
                squared_term_double(d, q * count));
        if (cursor.at_end())
            break;
        cursor = farey_next(cursor);
    }

    std::vector<Value> subtotals(size);
    for (std::size_t q = 0; q < size; ++q) {
        if (mode == SumMode::exact) {
            const BigInt den = BigInt(static_cast<std::int64_t>(q)) * count;
            subtotals[q] = q < 2 || buckets[q] == 0
                               ? Rational(0)
                               : Rational(bigint_from_u128(buckets[q]), den * den);
        } else {
            subtotals[q] = q < 2 ? 0.0 : float_buckets[q].value();
        }
    }
    return subtotals;
}

Value sum_decompositions(std::int64_t m, SumMode mode, const SieveTables& tables, int threads) {
    check_order(m);
    check_tables(m, tables);
    if (m == 1)
        return mode == SumMode::exact ? Value(Rational(0)) : Value(0.0);

    const auto subtotals = map_ordered<Value>(
        2, m + 1, threads,
        [&](std::int64_t k) { return decompose(m, k, mode, tables).subtotal; });

    if (mode == SumMode::exact) {
        Rational acc;
        for (const Value& v : subtotals)
            acc += std::get<Rational>(v);
        return acc;
    }
    NeumaierSum acc;
    for (const Value& v : subtotals)
        acc.add(std::get<double>(v));
    return acc.value();
}

}  // namespace fareystat
