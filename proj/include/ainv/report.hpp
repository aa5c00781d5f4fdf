#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ainv/harness.hpp"
#include "ainv/inventory.hpp"
#include "ainv/simulation.hpp"

namespace ainv {

/// Trace CSV header, PeriodRecord field order.
extern const std::vector<std::string> kTraceColumns;
extern const std::vector<std::string> kComparisonColumns;

/// Real numbers in CSV output: 17 significant digits.
std::string format_real(double value);

void write_trace_csv(std::ostream& out, const std::vector<PeriodRecord>& trace);
/// Throws ConfigError on a header mismatch or malformed row.
std::vector<PeriodRecord> read_trace_csv(std::istream& in, std::string_view source = "trace");

nlohmann::ordered_json to_json(const RunMetrics& metrics);
nlohmann::ordered_json to_json(const MetricsSummary& summary);
nlohmann::ordered_json to_json(const ComparisonResult& result);

/// One row per (scenario, policy) in the comparison CSV.
struct ComparisonTable {
    std::vector<ComparisonResult> scenarios;
    std::vector<ComparisonResult> robustness;
    std::vector<SensitivityRow> sensitivity;
};

void write_comparison_csv(std::ostream& out, const ComparisonTable& table);
nlohmann::ordered_json to_json(const ComparisonTable& table);

/// Fixed-width console table: scenario, policy, total cost, service level, change.
void print_comparison(std::ostream& out, const ComparisonTable& table);
void print_summary(std::ostream& out, std::string_view label, const RunMetrics& metrics);

enum class PlotKind { Convergence, Adaptation, Performance };
/// "convergence", "adaptation", "performance"; anything else is a ConfigError.
PlotKind parse_plot_kind(std::string_view text);

struct LabelledTrace {
    std::string label;
    std::vector<PeriodRecord> trace;
};

/// Tidy series. Convergence and adaptation use the first trace:
///   convergence: period,lambda_hat,alpha_hat,lambda_true,alpha_true
///   adaptation:  period,active_s,active_S,on_hand_end
/// performance stacks every trace: series,period,cumulative_cost
void write_plot_data(std::ostream& out, PlotKind kind, const std::vector<LabelledTrace>& traces);

}  // namespace ainv
