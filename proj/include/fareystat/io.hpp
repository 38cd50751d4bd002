#pragma once

#include "fareystat/asymptotics.hpp"
#include "fareystat/franel.hpp"
#include "fareystat/piecewise.hpp"
#include "fareystat/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace fareystat {

// Shortest representation that parses back to the same double.
std::string format_double(double v);

// Exact values render as "p/q" (plain integer when q = 1); floats via
// format_double.
std::string format_value(const Value& v);

const char* to_string(SumMode mode);
const char* to_string(SumRange range);
SumMode sum_mode_from_string(const std::string& s);
SumRange sum_range_from_string(const std::string& s);

// Report emitted by the compute command.
struct ComputeReport {
    std::int64_t order = 0;
    std::int64_t phi_sum = 0;        // Phi(m)
    std::int64_t tail_phi_sum = 0;   // Phi(m) - 1
    SumMode mode = SumMode::exact;
    SumRange range = SumRange::full;
    Value statistic;                 // R(m)
};

nlohmann::json to_json(const ComputeReport& report);
ComputeReport compute_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PiecewiseSegment& segment);
nlohmann::json to_json(const SegmentTable& table);
SegmentTable segment_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Decomposition& decomposition);
nlohmann::json to_json(const Estimate& estimate);

}  // namespace fareystat
