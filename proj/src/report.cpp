#include "ainv/report.hpp"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "ainv/error.hpp"

namespace ainv {

const std::vector<std::string> kTraceColumns = {
    "period",        "lambda_true",  "alpha_true",   "demand",       "sales",
    "lost_units",    "on_hand_end",  "order_qty",    "order_placed", "sampled_lead_time",
    "disrupted",     "active_s",     "active_S",     "lambda_hat",   "alpha_hat",
    "holding_cost",  "stockout_cost", "ordering_cost", "total_cost"};

const std::vector<std::string> kComparisonColumns = {
    "section",         "scenario",       "variation",      "policy",        "n",
    "total_cost",      "cost_per_period", "period_service_level", "fill_rate", "avg_inventory",
    "stockout_events", "holding_total",  "stockout_total", "ordering_total", "disruptions_experienced",
    "percent_change",  "t_statistic",    "p_value"};

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

void write_header(std::ostream& out, const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

void write_trace_csv(std::ostream& out, const std::vector<PeriodRecord>& trace) {
    write_header(out, kTraceColumns);
    for (const auto& r : trace) {
        out << r.period << ',' << format_real(r.lambda_true) << ',' << format_real(r.alpha_true) << ',' << r.demand
            << ',' << r.sales << ',' << r.lost_units << ',' << r.on_hand_end << ',' << r.order_qty << ','
            << (r.order_placed ? 1 : 0) << ',' << r.sampled_lead_time << ',' << (r.disrupted ? 1 : 0) << ','
            << r.active_s << ',' << r.active_S << ',' << (r.lambda_hat ? format_real(*r.lambda_hat) : "") << ','
            << (r.alpha_hat ? format_real(*r.alpha_hat) : "") << ',' << format_real(r.holding_cost) << ','
            << format_real(r.stockout_cost) << ',' << format_real(r.ordering_cost) << ','
            << format_real(r.total_cost) << '\n';
    }
}

std::vector<PeriodRecord> read_trace_csv(std::istream& in, std::string_view source) {
    std::string line;
    int line_no = 1;
    auto fail = [&](const std::string& msg) {
        throw ConfigError(std::string(source) + ":" + std::to_string(line_no) + ": " + msg);
    };
    if (!std::getline(in, line)) fail("empty trace file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (split_csv(line) != kTraceColumns) fail("unexpected trace header");

    std::vector<PeriodRecord> trace;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_csv(line);
        if (cells.size() != kTraceColumns.size()) fail("expected " + std::to_string(kTraceColumns.size()) + " fields");
        std::size_t i = 0;
        auto integer = [&]() {
            const auto& c = cells[i++];
            std::int64_t v{};
            const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
            if (res.ec != std::errc{} || res.ptr != c.data() + c.size()) fail("bad integer '" + c + "'");
            return v;
        };
        auto real = [&]() {
            const auto& c = cells[i++];
            double v{};
            const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
            if (res.ec != std::errc{} || res.ptr != c.data() + c.size()) fail("bad number '" + c + "'");
            return v;
        };
        auto optional_real = [&]() -> std::optional<double> {
            if (cells[i].empty()) {
                ++i;
                return std::nullopt;
            }
            return real();
        };
        PeriodRecord r;
        r.period = integer();
        r.lambda_true = real();
        r.alpha_true = real();
        r.demand = integer();
        r.sales = integer();
        r.lost_units = integer();
        r.on_hand_end = integer();
        r.order_qty = integer();
        r.order_placed = integer() != 0;
        r.sampled_lead_time = integer();
        r.disrupted = integer() != 0;
        r.active_s = integer();
        r.active_S = integer();
        r.lambda_hat = optional_real();
        r.alpha_hat = optional_real();
        r.holding_cost = real();
        r.stockout_cost = real();
        r.ordering_cost = real();
        r.total_cost = real();
        trace.push_back(r);
    }
    return trace;
}

nlohmann::ordered_json to_json(const RunMetrics& m) {
    return {{"total_cost", m.total_cost},
            {"cost_per_period", m.cost_per_period},
            {"period_service_level", m.period_service_level},
            {"fill_rate", m.fill_rate},
            {"avg_inventory", m.avg_inventory},
            {"stockout_events", m.stockout_events},
            {"holding_total", m.holding_total},
            {"stockout_total", m.stockout_total},
            {"ordering_total", m.ordering_total},
            {"disruptions_experienced", m.disruptions_experienced}};
}

nlohmann::ordered_json to_json(const MetricsSummary& m) {
    return {{"total_cost", m.total_cost},
            {"cost_per_period", m.cost_per_period},
            {"period_service_level", m.period_service_level},
            {"fill_rate", m.fill_rate},
            {"avg_inventory", m.avg_inventory},
            {"stockout_events", m.stockout_events},
            {"holding_total", m.holding_total},
            {"stockout_total", m.stockout_total},
            {"ordering_total", m.ordering_total},
            {"disruptions_experienced", m.disruptions_experienced}};
}

nlohmann::ordered_json to_json(const ComparisonResult& r) {
    nlohmann::ordered_json j;
    j["scenario"] = r.scenario;
    j["n"] = r.n;
    j["baseline"] = to_json(r.baseline_mean);
    j["adaptive"] = to_json(r.adaptive_mean);
    j["stationary_baseline_reference"] =
        r.stationary_baseline_mean ? to_json(*r.stationary_baseline_mean) : nlohmann::ordered_json(nullptr);
    j["mean_cost_difference"] = r.mean_cost_difference;
    j["percent_change"] = r.percent_change;
    j["service_level_change"] = r.service_level_change;
    j["t_statistic"] = r.t_statistic;
    j["p_value"] = r.p_value;
    auto costs = [](const std::vector<RunMetrics>& runs) {
        std::vector<double> v;
        for (const auto& m : runs) v.push_back(m.total_cost);
        return v;
    };
    j["baseline_costs"] = costs(r.baseline_runs);
    j["adaptive_costs"] = costs(r.adaptive_runs);
    return j;
}

namespace {

void write_pair(std::ostream& out, std::string_view section, const ComparisonResult& r, std::string_view variation) {
    auto row = [&](std::string_view policy, const MetricsSummary& m, bool with_test) {
        out << section << ',' << r.scenario << ',' << variation << ',' << policy << ',' << r.n << ','
            << format_real(m.total_cost) << ',' << format_real(m.cost_per_period) << ','
            << format_real(m.period_service_level) << ',' << format_real(m.fill_rate) << ','
            << format_real(m.avg_inventory) << ',' << format_real(m.stockout_events) << ','
            << format_real(m.holding_total) << ',' << format_real(m.stockout_total) << ','
            << format_real(m.ordering_total) << ',' << format_real(m.disruptions_experienced) << ',';
        if (with_test) {
            out << format_real(r.percent_change) << ',' << format_real(r.t_statistic) << ','
                << format_real(r.p_value);
        } else {
            out << ",,";
        }
        out << '\n';
    };
    row("baseline", r.baseline_mean, false);
    row("adaptive", r.adaptive_mean, true);
}

}  // namespace

void write_comparison_csv(std::ostream& out, const ComparisonTable& table) {
    write_header(out, kComparisonColumns);
    for (const auto& r : table.scenarios) write_pair(out, "scenarios", r, "");
    for (const auto& r : table.robustness) write_pair(out, "robustness", r, "");
    for (const auto& row : table.sensitivity) {
        if (row.result) write_pair(out, "sensitivity", *row.result, row.variation);
    }
}

nlohmann::ordered_json to_json(const ComparisonTable& table) {
    nlohmann::ordered_json j;
    j["scenarios"] = nlohmann::ordered_json::array();
    for (const auto& r : table.scenarios) j["scenarios"].push_back(to_json(r));
    if (!table.robustness.empty()) {
        j["robustness"] = nlohmann::ordered_json::array();
        for (const auto& r : table.robustness) j["robustness"].push_back(to_json(r));
    }
    if (!table.sensitivity.empty()) {
        j["sensitivity"] = nlohmann::ordered_json::array();
        for (const auto& row : table.sensitivity) {
            nlohmann::ordered_json e;
            e["variation"] = row.variation;
            e["scenario"] = row.scenario;
            if (row.result) {
                e["result"] = to_json(*row.result);
            } else {
                e["error"] = row.error;
            }
            j["sensitivity"].push_back(e);
        }
    }
    return j;
}

void print_comparison(std::ostream& out, const ComparisonTable& table) {
    auto print_rows = [&](const std::vector<ComparisonResult>& rows, std::string_view prefix) {
        for (const auto& r : rows) {
            const std::string name = std::string(prefix) + r.scenario;
            out << std::left << std::setw(28) << name << std::setw(10) << "baseline" << std::right << std::fixed
                << std::setprecision(0) << std::setw(12) << r.baseline_mean.total_cost << std::setprecision(1)
                << std::setw(9) << 100.0 * r.baseline_mean.period_service_level << "%" << std::setw(10) << "--"
                << '\n';
            out << std::left << std::setw(28) << name << std::setw(10) << "adaptive" << std::right
                << std::setprecision(0) << std::setw(12) << r.adaptive_mean.total_cost << std::setprecision(1)
                << std::setw(9) << 100.0 * r.adaptive_mean.period_service_level << "%" << std::setw(9)
                << std::showpos << r.percent_change << std::noshowpos << "%"
                << "  t=" << std::setprecision(2) << r.t_statistic << " p=" << std::scientific
                << std::setprecision(2) << r.p_value << std::defaultfloat << '\n';
        }
    };
    out << std::left << std::setw(28) << "Scenario" << std::setw(10) << "Policy" << std::right << std::setw(12)
        << "Total Cost" << std::setw(10) << "Service" << std::setw(10) << "Change" << '\n';
    print_rows(table.scenarios, "");
    print_rows(table.robustness, "");
    for (const auto& row : table.sensitivity) {
        if (row.result) {
            print_rows({*row.result}, row.variation + " ");
        } else {
            out << row.variation << " " << row.scenario << ": rejected: " << row.error << '\n';
        }
    }
}

void print_summary(std::ostream& out, std::string_view label, const RunMetrics& m) {
    out << label << '\n' << std::fixed << std::setprecision(2);
    out << "  total cost           " << m.total_cost << '\n'
        << "  cost per period      " << m.cost_per_period << '\n'
        << "  holding / stockout / ordering  " << m.holding_total << " / " << m.stockout_total << " / "
        << m.ordering_total << '\n'
        << "  period service level " << 100.0 * m.period_service_level << "%\n"
        << "  fill rate            " << 100.0 * m.fill_rate << "%\n"
        << "  avg inventory        " << m.avg_inventory << '\n'
        << "  stockout events      " << m.stockout_events << '\n'
        << "  disruptions          " << m.disruptions_experienced << '\n'
        << std::defaultfloat;
}

PlotKind parse_plot_kind(std::string_view text) {
    if (text == "convergence") return PlotKind::Convergence;
    if (text == "adaptation") return PlotKind::Adaptation;
    if (text == "performance") return PlotKind::Performance;
    throw ConfigError("unknown plot kind '" + std::string(text) + "'");
}

void write_plot_data(std::ostream& out, PlotKind kind, const std::vector<LabelledTrace>& traces) {
    if (traces.empty()) throw ConfigError("plot data needs at least one trace");
    switch (kind) {
        case PlotKind::Convergence:
            out << "period,lambda_hat,alpha_hat,lambda_true,alpha_true\n";
            for (const auto& r : traces.front().trace) {
                if (!r.lambda_hat || !r.alpha_hat) {
                    throw ConfigError("convergence data needs an adaptive trace (lambda_hat column is empty)");
                }
                out << r.period << ',' << format_real(*r.lambda_hat) << ',' << format_real(*r.alpha_hat) << ','
                    << format_real(r.lambda_true) << ',' << format_real(r.alpha_true) << '\n';
            }
            break;
        case PlotKind::Adaptation:
            out << "period,active_s,active_S,on_hand_end\n";
            for (const auto& r : traces.front().trace) {
                out << r.period << ',' << r.active_s << ',' << r.active_S << ',' << r.on_hand_end << '\n';
            }
            break;
        case PlotKind::Performance:
            out << "series,period,cumulative_cost\n";
            for (const auto& t : traces) {
                double cumulative = 0.0;
                for (const auto& r : t.trace) {
                    cumulative += r.total_cost;
                    out << t.label << ',' << r.period << ',' << format_real(cumulative) << '\n';
                }
            }
            break;
    }
}

}  // namespace ainv
