#include <doctest.h>

#include "ainv/error.hpp"
#include "ainv/scenarios.hpp"

using namespace ainv;

TEST_CASE("named schedules") {
    CHECK(params_at(stationary(), 50) == TrueParams{10.0, 0.02});
    CHECK(params_at(demand_shock(), 182) == TrueParams{10.0, 0.02});
    CHECK(params_at(demand_shock(), 183) == TrueParams{20.0, 0.02});
    CHECK(params_at(demand_shock(), 365) == TrueParams{20.0, 0.02});
    CHECK(params_at(supply_disruption(), 121) == TrueParams{10.0, 0.02});
    CHECK(params_at(supply_disruption(), 122) == TrueParams{10.0, 0.15});
    CHECK(params_at(supply_disruption(), 244) == TrueParams{10.0, 0.15});
    CHECK(params_at(supply_disruption(), 245) == TrueParams{10.0, 0.02});
    CHECK_THROWS_AS(params_at(stationary(), 0), InvalidParameter);
}

TEST_CASE("schedules agree with stationary outside their change regions") {
    const auto base = stationary();
    for (std::int64_t t = 1; t <= 365; ++t) {
        REQUIRE(params_at(base, t) == params_at(base, 1));
        if (t < 183) REQUIRE(params_at(demand_shock(), t) == params_at(base, t));
        if (t < 122 || t > 244) REQUIRE(params_at(supply_disruption(), t) == params_at(base, t));
        REQUIRE(params_at(demand_shock(), t).alpha == params_at(base, t).alpha);
        REQUIRE(params_at(supply_disruption(), t).lambda == params_at(base, t).lambda);
    }
}

TEST_CASE("shock magnitude variants") {
    const auto small = shock_magnitude_variant(15.0);
    CHECK(small.name == ScenarioName::DemandShock);
    CHECK(params_at(small, 183).lambda == 15.0);
    CHECK(params_at(shock_magnitude_variant(25.0), 300).lambda == 25.0);
    const auto none = shock_magnitude_variant(10.0);
    for (std::int64_t t = 1; t <= 365; ++t) REQUIRE(params_at(none, t).lambda == params_at(stationary(), t).lambda);
    CHECK(shock_magnitude_variant(20.0) == demand_shock());
    CHECK_THROWS_AS(shock_magnitude_variant(0.0), InvalidParameter);
    CHECK_THROWS_AS(shock_magnitude_variant(-3.0), InvalidParameter);
}

TEST_CASE("custom segments override in order") {
    ScenarioSchedule s;
    s.name = ScenarioName::Custom;
    s.segments = {{1, 100, 5.0, 0.0}, {101, std::nullopt, 12.0, 0.3}, {200, 210, 30.0, 0.5}};
    CHECK(params_at(s, 1) == TrueParams{5.0, 0.0});
    CHECK(params_at(s, 150) == TrueParams{12.0, 0.3});
    CHECK(params_at(s, 205) == TrueParams{30.0, 0.5});
    CHECK(params_at(s, 1000) == TrueParams{12.0, 0.3});
    CHECK_NOTHROW(validate(s, 365));
}

TEST_CASE("schedule validation") {
    auto s = demand_shock();
    CHECK_NOTHROW(validate(s, 365));
    CHECK_THROWS_AS(validate(s, 100), InvalidParameter);
    auto w = supply_disruption();
    w.disruption_window = std::pair<std::int64_t, std::int64_t>{200, 100};
    CHECK_THROWS_AS(validate(w, 365), InvalidParameter);
    auto p = stationary();
    p.base_alpha = 1.5;
    CHECK_THROWS_AS(validate(p, 365), InvalidParameter);
    p = stationary();
    p.base_lambda = -1;
    CHECK_THROWS_AS(validate(p, 365), InvalidParameter);
}

TEST_CASE("names") {
    CHECK(parse_scenario_name("demand-shock") == ScenarioName::DemandShock);
    CHECK(to_string(ScenarioName::SupplyDisruption) == "supply-disruption");
    CHECK_THROWS_AS(parse_scenario_name("tsunami"), ConfigError);
    CHECK(format_rate(15.0) == "15");
    CHECK(format_rate(12.5) == "12.5");
}
