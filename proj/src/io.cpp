#include "fareystat/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace fareystat {

std::string format_rational(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

std::string format_value(const Value& v) {
    if (value_is_exact(v))
        return format_rational(std::get<Rational>(v));
    return format_double(std::get<double>(v));
}

const char* to_string(SumMode mode) {
    return mode == SumMode::exact ? "exact" : "float";
}

const char* to_string(SumRange range) {
    return range == SumRange::full ? "full" : "trimmed";
}

SumMode sum_mode_from_string(const std::string& s) {
    if (s == "exact")
        return SumMode::exact;
    if (s == "float")
        return SumMode::compensated_float;
    throw std::invalid_argument("unknown mode '" + s + "' (expected exact or float)");
}

SumRange sum_range_from_string(const std::string& s) {
    if (s == "full")
        return SumRange::full;
    if (s == "trimmed")
        return SumRange::trimmed;
    throw std::invalid_argument("unknown range '" + s + "' (expected full or trimmed)");
}

nlohmann::json to_json(const ComputeReport& report) {
    nlohmann::json j;
    j["m"] = report.order;
    j["phi_sum"] = report.phi_sum;
    j["T"] = report.tail_phi_sum;
    if (value_is_exact(report.statistic))
        j["R"] = format_rational(std::get<Rational>(report.statistic));
    else
        j["R"] = std::get<double>(report.statistic);
    j["mode"] = to_string(report.mode);
    j["range"] = to_string(report.range);
    return j;
}

ComputeReport compute_report_from_json(const nlohmann::json& j) {
    ComputeReport report;
    report.order = j.at("m").get<std::int64_t>();
    report.phi_sum = j.at("phi_sum").get<std::int64_t>();
    report.tail_phi_sum = j.at("T").get<std::int64_t>();
    report.mode = sum_mode_from_string(j.at("mode").get<std::string>());
    report.range = sum_range_from_string(j.at("range").get<std::string>());
    if (j.at("R").is_string())
        report.statistic = parse_rational(j.at("R").get<std::string>());
    else
        report.statistic = j.at("R").get<double>();
    return report;
}

nlohmann::json to_json(const PiecewiseSegment& segment) {
    return nlohmann::json{{"c", segment.regime},        {"k_low", segment.k_low},
                          {"k_high", segment.k_high},   {"a", segment.intercept},
                          {"b", segment.slope},         {"normalizer", segment.normalizer}};
}

nlohmann::json to_json(const SegmentTable& table) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& seg : table.segments)
        arr.push_back(to_json(seg));
    return arr;
}

SegmentTable segment_table_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("segment_table_from_json: expected a non-empty array");
    SegmentTable table;
    table.order = 0;
    table.k_min = std::numeric_limits<std::int64_t>::max();
    for (const auto& js : j) {
        PiecewiseSegment seg;
        seg.regime = js.at("c").get<std::int64_t>();
        seg.k_low = js.at("k_low").get<std::int64_t>();
        seg.k_high = js.at("k_high").get<std::int64_t>();
        seg.intercept = js.at("a").get<std::int64_t>();
        seg.slope = js.at("b").get<std::int64_t>();
        seg.normalizer = js.at("normalizer").get<std::int64_t>();
        table.order = std::max(table.order, seg.k_high);
        table.k_min = std::min(table.k_min, seg.k_low);
        table.segments.push_back(seg);
    }
    return table;
}

nlohmann::json to_json(const Decomposition& decomposition) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : decomposition.terms) {
        nlohmann::json jt;
        jt["i"] = term.numerator;
        if (value_is_exact(term.value))
            jt["Q"] = format_rational(std::get<Rational>(term.value));
        else
            jt["Q"] = std::get<double>(term.value);
        terms.push_back(std::move(jt));
    }
    nlohmann::json j;
    j["m"] = decomposition.order;
    j["k"] = decomposition.denominator;
    j["mode"] = to_string(decomposition.mode);
    if (value_is_exact(decomposition.subtotal))
        j["P"] = format_rational(std::get<Rational>(decomposition.subtotal));
    else
        j["P"] = std::get<double>(decomposition.subtotal);
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::json to_json(const Estimate& estimate) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& comp : estimate.components)
        components.push_back(nlohmann::json{{"a", comp.intercept},
                                            {"b", comp.slope},
                                            {"k_lo", comp.k_lo},
                                            {"k_hi", comp.k_hi},
                                            {"i", comp.numerator},
                                            {"value", comp.value}});
    return nlohmann::json{{"m", estimate.order},
                          {"value", estimate.value},
                          {"constant", estimate.constant},
                          {"components", std::move(components)}};
}

}  // namespace fareystat
