#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ainv {

enum class ScenarioName { Stationary, DemandShock, SupplyDisruption, Custom };

std::string_view to_string(ScenarioName name);
/// Accepts "stationary", "demand-shock", "supply-disruption", "custom".
ScenarioName parse_scenario_name(std::string_view text);

/// Piecewise-constant override for custom schedules; `last` empty means open-ended.
struct ScheduleSegment {
    std::int64_t first = 1;
    std::optional<std::int64_t> last;
    double lambda = 10.0;
    double alpha = 0.02;

    friend bool operator==(const ScheduleSegment&, const ScheduleSegment&) = default;
};

struct TrueParams {
    double lambda = 0.0;
    double alpha = 0.0;
    friend bool operator==(const TrueParams&, const TrueParams&) = default;
};

/// Time-indexed true demand rate and disruption probability.
struct ScenarioSchedule {
    ScenarioName name = ScenarioName::Stationary;
    double base_lambda = 10.0;
    double base_alpha = 0.02;
    std::optional<double> shock_lambda;
    std::optional<std::int64_t> shock_period;
    std::optional<double> disruption_alpha;
    std::optional<std::pair<std::int64_t, std::int64_t>> disruption_window;
    std::vector<ScheduleSegment> segments;  // Custom only; later segments win

    friend bool operator==(const ScenarioSchedule&, const ScenarioSchedule&) = default;
};

ScenarioSchedule stationary();
/// lambda 10 -> 20 from period 183 on.
ScenarioSchedule demand_shock();
/// alpha 0.02 -> 0.15 for periods 122..244 inclusive.
ScenarioSchedule supply_disruption();
ScenarioSchedule make_scenario(ScenarioName name);

/// Demand-shock schedule with the given post-shock rate (shock at period 183).
ScenarioSchedule shock_magnitude_variant(double target_lambda);

/// Throws InvalidParameter on negative rates, probabilities outside [0, 1],
/// an inverted window, or a shock period outside [1, horizon].
void validate(const ScenarioSchedule& schedule, std::int64_t horizon);

/// Shortest round-trip decimal form of a rate ("15", "12.5").
std::string format_rate(double value);

TrueParams params_at(const ScenarioSchedule& schedule, std::int64_t t);

}  // namespace ainv
