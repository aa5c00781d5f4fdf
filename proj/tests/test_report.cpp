#include <doctest.h>

#include <sstream>

#include "ainv/error.hpp"
#include "ainv/report.hpp"
#include "ainv/simulation.hpp"

using namespace ainv;

namespace {

std::vector<PeriodRecord> sample_trace(std::uint64_t seed, PolicyMode mode) {
    ExperimentConfig x;
    x.optimizer.num_samples = 10;
    x.optimizer.planning_horizon = 10;
    auto controller = mode == PolicyMode::Static
                          ? PolicyController::make_static(x.baseline)
                          : PolicyController::make_adaptive(x.baseline, x.prior, 7, x.optimizer, x.costs);
    auto r = run_simulation(40, initial_state(50), supply_disruption(), controller, x.costs, seed, 0);
    for (auto& rec : r.trace) rec.arrivals = 0;  // not serialized
    return r.trace;
}

}  // namespace

TEST_CASE("trace header") {
    std::ostringstream out;
    write_trace_csv(out, {});
    CHECK(out.str() ==
          "period,lambda_true,alpha_true,demand,sales,lost_units,on_hand_end,order_qty,order_placed,"
          "sampled_lead_time,disrupted,active_s,active_S,lambda_hat,alpha_hat,holding_cost,stockout_cost,"
          "ordering_cost,total_cost\n");
    CHECK(kTraceColumns.size() == 19);
}

TEST_CASE("trace CSV round-trips exactly") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        for (auto mode : {PolicyMode::Static, PolicyMode::Adaptive}) {
            const auto trace = sample_trace(seed, mode);
            std::ostringstream out;
            write_trace_csv(out, trace);
            std::istringstream in(out.str());
            CHECK(read_trace_csv(in) == trace);
        }
    }
}

TEST_CASE("malformed traces are rejected") {
    std::istringstream bad_header("period,demand\n1,2\n");
    CHECK_THROWS_AS(read_trace_csv(bad_header), ConfigError);
    std::ostringstream out;
    write_trace_csv(out, sample_trace(1, PolicyMode::Static));
    std::istringstream truncated(out.str().substr(0, out.str().size() - 5) + ",x\n");
    CHECK_THROWS_AS(read_trace_csv(truncated), ConfigError);
}

TEST_CASE("plot data") {
    CHECK(parse_plot_kind("adaptation") == PlotKind::Adaptation);
    CHECK_THROWS_AS(parse_plot_kind("histogram"), ConfigError);
    const std::vector<LabelledTrace> traces{{"adaptive", sample_trace(2, PolicyMode::Adaptive)},
                                            {"baseline", sample_trace(2, PolicyMode::Static)}};
    std::ostringstream conv, perf;
    write_plot_data(conv, PlotKind::Convergence, traces);
    CHECK(conv.str().rfind("period,lambda_hat,alpha_hat,lambda_true,alpha_true\n", 0) == 0);
    write_plot_data(perf, PlotKind::Performance, traces);
    std::size_t lines = 0;
    for (char c : perf.str()) lines += c == '\n';
    CHECK(lines == 1 + 80);
}

TEST_CASE("json summaries") {
    RunMetrics m;
    m.total_cost = 12.5;
    const auto j = to_json(m);
    CHECK(j["total_cost"] == 12.5);
    CHECK(j.contains("fill_rate"));
}
