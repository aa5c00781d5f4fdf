#include "ainv/scenarios.hpp"

#include <charconv>
#include <string>

#include "ainv/error.hpp"

namespace ainv {

std::string_view to_string(ScenarioName name) {
    switch (name) {
        case ScenarioName::Stationary: return "stationary";
        case ScenarioName::DemandShock: return "demand-shock";
        case ScenarioName::SupplyDisruption: return "supply-disruption";
        case ScenarioName::Custom: return "custom";
    }
    return "unknown";
}

ScenarioName parse_scenario_name(std::string_view text) {
    for (auto n : {ScenarioName::Stationary, ScenarioName::DemandShock, ScenarioName::SupplyDisruption,
                   ScenarioName::Custom}) {
        if (text == to_string(n)) return n;
    }
    throw ConfigError("unknown scenario '" + std::string(text) + "'");
}

ScenarioSchedule stationary() { return ScenarioSchedule{}; }

ScenarioSchedule demand_shock() { return shock_magnitude_variant(20.0); }

ScenarioSchedule supply_disruption() {
    ScenarioSchedule s;
    s.name = ScenarioName::SupplyDisruption;
    s.disruption_alpha = 0.15;
    s.disruption_window = std::pair<std::int64_t, std::int64_t>{122, 244};
    return s;
}

ScenarioSchedule make_scenario(ScenarioName name) {
    switch (name) {
        case ScenarioName::Stationary: return stationary();
        case ScenarioName::DemandShock: return demand_shock();
        case ScenarioName::SupplyDisruption: return supply_disruption();
        case ScenarioName::Custom: {
            ScenarioSchedule s;
            s.name = ScenarioName::Custom;
            return s;
        }
    }
    return stationary();
}

ScenarioSchedule shock_magnitude_variant(double target_lambda) {
    if (!(target_lambda > 0.0)) {
        throw InvalidParameter("shock magnitude must be > 0, got " + std::to_string(target_lambda));
    }
    ScenarioSchedule s;
    s.name = ScenarioName::DemandShock;
    s.shock_lambda = target_lambda;
    s.shock_period = 183;
    return s;
}

namespace {

void check_rate(double v, const char* what) {
    if (!(v >= 0.0)) throw InvalidParameter(std::string(what) + " must be >= 0");
}

void check_prob(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidParameter(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

void validate(const ScenarioSchedule& schedule, std::int64_t horizon) {
    check_rate(schedule.base_lambda, "base lambda");
    check_prob(schedule.base_alpha, "base alpha");
    if (schedule.shock_lambda) check_rate(*schedule.shock_lambda, "shock lambda");
    if (schedule.shock_lambda.has_value() != schedule.shock_period.has_value()) {
        throw InvalidParameter("shock lambda and shock period must be given together");
    }
    if (schedule.shock_period && (*schedule.shock_period < 1 || *schedule.shock_period > horizon)) {
        throw InvalidParameter("shock period must lie in [1, horizon]");
    }
    if (schedule.disruption_alpha) check_prob(*schedule.disruption_alpha, "disruption alpha");
    if (schedule.disruption_alpha.has_value() != schedule.disruption_window.has_value()) {
        throw InvalidParameter("disruption alpha and disruption window must be given together");
    }
    if (schedule.disruption_window && schedule.disruption_window->first > schedule.disruption_window->second) {
        throw InvalidParameter("disruption window start must not exceed its end");
    }
    for (const auto& seg : schedule.segments) {
        check_rate(seg.lambda, "segment lambda");
        check_prob(seg.alpha, "segment alpha");
        if (seg.first < 1 || (seg.last && *seg.last < seg.first)) {
            throw InvalidParameter("segment bounds are invalid");
        }
    }
}

std::string format_rate(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

TrueParams params_at(const ScenarioSchedule& schedule, std::int64_t t) {
    if (t < 1) throw InvalidParameter("period must be >= 1, got " + std::to_string(t));
    TrueParams p{schedule.base_lambda, schedule.base_alpha};
    if (schedule.shock_period && t >= *schedule.shock_period) p.lambda = *schedule.shock_lambda;
    if (schedule.disruption_window && t >= schedule.disruption_window->first &&
        t <= schedule.disruption_window->second) {
        p.alpha = *schedule.disruption_alpha;
    }
    for (const auto& seg : schedule.segments) {
        if (t >= seg.first && (!seg.last || t <= *seg.last)) p = {seg.lambda, seg.alpha};
    }
    return p;
}

}  // namespace ainv
