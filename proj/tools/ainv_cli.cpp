// Command-line front end: run, compare, plotdata, optimize-baseline.
//
// Exit codes: 0 success, 1 configuration error, 2 runtime error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ainv/config.hpp"
#include "ainv/controller.hpp"
#include "ainv/error.hpp"
#include "ainv/harness.hpp"
#include "ainv/optimizer.hpp"
#include "ainv/report.hpp"
#include "ainv/simulation.hpp"

namespace fs = std::filesystem;
using namespace ainv;

namespace {

constexpr int kConfigExit = 1;
constexpr int kRuntimeExit = 2;

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> reps;
    std::string out_dir;
    std::string mode;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "Configuration file (key = value)");
    cmd->add_option("--seed", opts.seed, "Master seed (falls back to ADAPTIVE_INV_SEED)");
    cmd->add_option("--reps", opts.reps, "Number of replications");
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_option("--mode", opts.mode, "Optimizer sampling mode")->check(CLI::IsMember({"posterior", "point"}));
}

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-') {
        throw ConfigError("ADAPTIVE_INV_SEED is not an unsigned integer: '" + text + "'");
    }
    return v;
}

// Config file, then environment seed, then flags.
RunConfig resolve_config(const CommonOptions& opts) {
    RunConfig cfg = opts.config_path.empty() ? parse_config("") : load_config(opts.config_path);
    if (const char* env = std::getenv("ADAPTIVE_INV_SEED"); env && *env) cfg.experiment.seed = parse_seed(env);
    if (opts.seed) cfg.experiment.seed = *opts.seed;
    if (opts.reps) {
        if (*opts.reps < 2) throw ConfigError("--reps must be >= 2");
        cfg.experiment.n_reps = *opts.reps;
    }
    if (!opts.out_dir.empty()) cfg.output_dir = opts.out_dir;
    if (opts.mode == "point") cfg.experiment.optimizer.mode = SamplingMode::PointEstimate;
    if (opts.mode == "posterior") cfg.experiment.optimizer.mode = SamplingMode::PosteriorSampling;
    return cfg;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

ScenarioSchedule scenario_for(const RunConfig& cfg, const std::string& name) {
    const auto parsed = parse_scenario_name(name);
    if (parsed == cfg.scenario.name) return cfg.scenario;
    if (parsed == ScenarioName::Custom) throw ConfigError("custom scenarios must be defined in the config file");
    return make_scenario(parsed);
}

int cmd_run(const CommonOptions& opts, const std::string& scenario_name, const std::string& policy,
            std::uint64_t replication) {
    const RunConfig cfg = resolve_config(opts);
    const auto scenario = scenario_name.empty() ? cfg.scenario : scenario_for(cfg, scenario_name);
    const auto& x = cfg.experiment;
    validate(scenario, x.horizon);
    validate(x);
    const auto controller = policy == "static"
                                ? PolicyController::make_static(x.baseline)
                                : PolicyController::make_adaptive(x.baseline, x.prior, x.update_period, x.optimizer,
                                                                  x.costs);

    const auto result = run_simulation(x.horizon, experiment_initial_state(x), scenario, controller, x.costs, x.seed,
                                       replication, x.lead_time_p);

    std::ostringstream trace_csv;
    write_trace_csv(trace_csv, result.trace);
    nlohmann::ordered_json summary;
    summary["scenario"] = std::string(to_string(scenario.name));
    summary["policy"] = policy;
    summary["seed"] = x.seed;
    summary["replication"] = replication;
    summary["horizon"] = x.horizon;
    summary["reoptimizations"] = result.reoptimizations;
    summary["final_policy"] = {{"s", result.trace.back().active_s}, {"S", result.trace.back().active_S}};
    summary["metrics"] = to_json(result.metrics);

    const fs::path dir = cfg.output_dir;
    fs::create_directories(dir);
    const std::string stem = std::string(to_string(scenario.name)) + "_" + policy;
    write_file(dir / ("trace_" + stem + ".csv"), trace_csv.str());
    write_file(dir / ("summary_" + stem + ".json"), summary.dump(2) + "\n");
    print_summary(std::cout, stem, result.metrics);
    std::cout << "wrote " << (dir / ("trace_" + stem + ".csv")).string() << '\n';
    return 0;
}

int cmd_compare(const CommonOptions& opts, const std::string& scenario_list, const std::string& robustness,
                bool sensitivity) {
    RunConfig cfg = resolve_config(opts);
    validate(cfg.experiment);
    std::vector<ScenarioSchedule> scenarios;
    const auto names = scenario_list.empty()
                           ? std::vector<std::string>{"stationary", "demand-shock", "supply-disruption"}
                           : split_list(scenario_list);
    if (names.empty()) throw ConfigError("--scenario needs at least one scenario");
    for (const auto& name : names) {
        scenarios.push_back(scenario_for(cfg, name));
        validate(scenarios.back(), cfg.experiment.horizon);
    }
    std::vector<double> magnitudes;
    for (const auto& item : split_list(robustness)) {
        try {
            std::size_t used = 0;
            magnitudes.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("--robustness expects comma-separated rates, got '" + item + "'");
        }
        if (!(magnitudes.back() > 0.0)) throw ConfigError("--robustness rates must be > 0");
    }
    if (!robustness.empty() && magnitudes.empty()) throw ConfigError("--robustness needs at least one rate");

    ComparisonTable table;
    for (const auto& s : scenarios) table.scenarios.push_back(run_experiment(s, cfg.experiment));
    if (!magnitudes.empty()) table.robustness = robustness_sweep(magnitudes, cfg.experiment);
    if (sensitivity) {
        table.sensitivity = sensitivity_sweep(default_sensitivity_variations(), scenarios, cfg.experiment);
    }

    std::ostringstream csv;
    write_comparison_csv(csv, table);
    auto json = to_json(table);
    json["seed"] = cfg.experiment.seed;
    json["reps"] = cfg.experiment.n_reps;

    const fs::path dir = cfg.output_dir;
    fs::create_directories(dir);
    write_file(dir / "comparison.csv", csv.str());
    write_file(dir / "comparison.json", json.dump(2) + "\n");
    print_comparison(std::cout, table);
    return 0;
}

int cmd_plotdata(const std::vector<std::string>& files, const std::string& kind_text, const std::string& out_path) {
    const PlotKind kind = parse_plot_kind(kind_text);
    if (files.empty()) throw ConfigError("plotdata needs at least one trace file");
    std::vector<LabelledTrace> traces;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw ConfigError("cannot read trace file '" + f + "'");
        traces.push_back({fs::path(f).stem().string(), read_trace_csv(in, f)});
    }
    std::ostringstream data;
    write_plot_data(data, kind, traces);
    if (out_path.empty()) {
        std::cout << data.str();
    } else {
        if (const auto parent = fs::path(out_path).parent_path(); !parent.empty()) fs::create_directories(parent);
        write_file(out_path, data.str());
    }
    return 0;
}

int cmd_optimize_baseline(const CommonOptions& opts) {
    const RunConfig cfg = resolve_config(opts);
    const auto& x = cfg.experiment;
    validate(x);
    // Posterior concentrated at lambda = 10, alpha = 0.02.
    const PosteriorState concentrated{1e6, 1e5, 2e3, 98e3};
    RngStream rng(x.seed, StreamId::Optimizer, 0);
    const auto result = optimize(concentrated, x.optimizer, x.costs, experiment_initial_state(x), rng);
    const auto best = std::find_if(result.evaluations.begin(), result.evaluations.end(),
                                   [&](const PolicyEvaluation& e) { return e.params == result.best; });
    nlohmann::ordered_json j;
    j["s"] = result.best.reorder_point;
    j["S"] = result.best.order_up_to;
    j["estimated_cost"] = best->estimated_cost;
    j["cost_std_error"] = best->cost_std_error;
    j["num_samples"] = x.optimizer.num_samples;
    j["planning_horizon"] = x.optimizer.planning_horizon;
    j["candidates"] = result.evaluations.size();
    j["seed"] = x.seed;
    std::cout << "s* = " << result.best.reorder_point << ", S* = " << result.best.order_up_to
              << "  (estimated cost " << best->estimated_cost << " over " << x.optimizer.planning_horizon
              << " periods)\n";
    if (!opts.out_dir.empty()) {
        fs::create_directories(opts.out_dir);
        write_file(fs::path(opts.out_dir) / "optimize_baseline.json", j.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Static vs adaptive (s, S) inventory control experiments"};
    app.require_subcommand(1);

    CommonOptions run_opts, cmp_opts, opt_opts;
    std::string run_scenario, run_policy = "static";
    std::uint64_t run_replication = 0;
    auto* run = app.add_subcommand("run", "Simulate one replication and write its trace");
    add_common(run, run_opts);
    run->add_option("--scenario", run_scenario, "stationary | demand-shock | supply-disruption | custom");
    run->add_option("--policy", run_policy, "static | adaptive")->check(CLI::IsMember({"static", "adaptive"}));
    run->add_option("--replication", run_replication, "Replication index");

    std::string cmp_scenarios, cmp_robustness;
    bool cmp_sensitivity = false;
    auto* compare = app.add_subcommand("compare", "Paired baseline-vs-adaptive experiments");
    add_common(compare, cmp_opts);
    compare->add_option("--scenario", cmp_scenarios, "Comma-separated scenarios (default: all three)");
    compare->add_option("--robustness", cmp_robustness, "Comma-separated post-shock demand rates");
    compare->add_flag("--sensitivity", cmp_sensitivity, "Append the cost and update-frequency sensitivity grid");

    std::vector<std::string> plot_files;
    std::string plot_kind, plot_out;
    auto* plot = app.add_subcommand("plotdata", "Extract figure data series from trace files");
    plot->add_option("traces", plot_files, "Trace CSV files")->required();
    plot->add_option("--kind", plot_kind, "convergence | adaptation | performance")->required();
    plot->add_option("--out", plot_out, "Output CSV (default: stdout)");

    auto* opt = app.add_subcommand("optimize-baseline", "Re-derive the static (s, S) from a concentrated posterior");
    add_common(opt, opt_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigExit;
    }

    try {
        if (*run) return cmd_run(run_opts, run_scenario, run_policy, run_replication);
        if (*compare) return cmd_compare(cmp_opts, cmp_scenarios, cmp_robustness, cmp_sensitivity);
        if (*plot) return cmd_plotdata(plot_files, plot_kind, plot_out);
        if (*opt) return cmd_optimize_baseline(opt_opts);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigExit;
    } catch (const InvalidParameter& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigExit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeExit;
    }
    return kConfigExit;
}
