#include "ainv/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ainv/error.hpp"

namespace ainv {

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class Reader {
public:
    Reader(std::string_view text, std::string_view source) : source_(source) {
        std::istringstream in{std::string(text)};
        std::string raw;
        int line = 0;
        while (std::getline(in, raw)) {
            ++line;
            std::string_view s = raw;
            if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
            s = trim(s);
            if (s.empty()) continue;
            const auto eq = s.find('=');
            if (eq == std::string_view::npos) fail(line, "expected 'key = value'");
            const std::string key(trim(s.substr(0, eq)));
            const std::string value(trim(s.substr(eq + 1)));
            if (key.empty()) fail(line, "missing key");
            if (key == "segment") {
                segments_.push_back({value, line});
                continue;
            }
            if (entries_.contains(key)) {
                fail(line, "duplicate key '" + key + "' (first set on line " + std::to_string(entries_[key].line) + ")");
            }
            entries_[key] = {value, line};
        }
    }

    [[noreturn]] void fail(int line, const std::string& msg) const {
        throw ConfigError(std::string(source_) + ":" + std::to_string(line) + ": " + msg);
    }

    int line_of(const std::string& key) const {
        const auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    const Entry* find(const std::string& key) {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return nullptr;
        used_.push_back(key);
        return &it->second;
    }

    double real(const std::string& key, double fallback) {
        const Entry* e = find(key);
        return e ? to_real(*e, key) : fallback;
    }

    double to_real(const Entry& e, const std::string& key) const {
        double v = 0.0;
        const auto* end = e.value.data() + e.value.size();
        const auto res = std::from_chars(e.value.data(), end, v);
        if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) {
            fail(e.line, "'" + key + "' expects a number, got '" + e.value + "'");
        }
        return v;
    }

    template <class Int>
    Int integer(const std::string& key, Int fallback) {
        const Entry* e = find(key);
        if (!e) return fallback;
        Int v{};
        const auto* end = e->value.data() + e->value.size();
        const auto res = std::from_chars(e->value.data(), end, v);
        if (res.ec != std::errc{} || res.ptr != end) {
            fail(e->line, "'" + key + "' expects an integer, got '" + e->value + "'");
        }
        return v;
    }

    bool boolean(const std::string& key, bool fallback) {
        const Entry* e = find(key);
        if (!e) return fallback;
        if (e->value == "true" || e->value == "1") return true;
        if (e->value == "false" || e->value == "0") return false;
        fail(e->line, "'" + key + "' expects true or false, got '" + e->value + "'");
    }

    std::string text(const std::string& key, std::string fallback) {
        const Entry* e = find(key);
        return e ? e->value : fallback;
    }

    void reject_unknown() const {
        for (const auto& [key, entry] : entries_) {
            if (std::find(used_.begin(), used_.end(), key) == used_.end()) fail(entry.line, "unknown key '" + key + "'");
        }
    }

    const std::vector<Entry>& segments() const { return segments_; }

private:
    std::string_view source_;
    std::map<std::string, Entry> entries_;
    std::vector<Entry> segments_;
    std::vector<std::string> used_;
};

ScheduleSegment parse_segment(const Reader& reader, const Entry& e) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(e.value);
    while (std::getline(in, part, ',')) parts.emplace_back(trim(part));
    if (parts.size() != 4) reader.fail(e.line, "segment expects 'first,last,lambda,alpha'");
    ScheduleSegment seg;
    auto parse_int = [&](const std::string& s) {
        std::int64_t v{};
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) reader.fail(e.line, "bad segment period '" + s + "'");
        return v;
    };
    seg.first = parse_int(parts[0]);
    if (parts[1] != "-") seg.last = parse_int(parts[1]);
    seg.lambda = reader.to_real({parts[2], e.line}, "segment lambda");
    seg.alpha = reader.to_real({parts[3], e.line}, "segment alpha");
    return seg;
}

std::string num(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

RunConfig parse_config(std::string_view text, std::string_view source) {
    Reader r(text, source);
    RunConfig cfg;
    auto& x = cfg.experiment;

    x.horizon = r.integer<std::int64_t>("horizon", x.horizon);
    if (x.horizon < 1) r.fail(r.line_of("horizon"), "horizon must be >= 1");
    x.n_reps = r.integer<int>("reps", x.n_reps);
    if (x.n_reps < 2) r.fail(r.line_of("reps"), "reps must be >= 2");
    x.seed = r.integer<std::uint64_t>("seed", x.seed);
    x.threads = r.integer<unsigned>("threads", x.threads);

    x.costs.holding = r.real("holding_cost", x.costs.holding);
    x.costs.stockout = r.real("stockout_cost", x.costs.stockout);
    x.costs.fixed_order = r.real("fixed_order_cost", x.costs.fixed_order);
    for (const char* key : {"holding_cost", "stockout_cost", "fixed_order_cost"}) {
        if (r.real(key, 0.0) < 0.0) r.fail(r.line_of(key), std::string(key) + " must be >= 0");
    }
    if (!(x.costs.stockout > x.costs.holding)) {
        r.fail(std::max(r.line_of("stockout_cost"), r.line_of("holding_cost")),
               "stockout_cost must exceed holding_cost");
    }

    x.baseline.reorder_point = r.integer<Units>("baseline_s", x.baseline.reorder_point);
    x.baseline.order_up_to = r.integer<Units>("baseline_S", x.baseline.order_up_to);
    if (x.baseline.reorder_point < 0 || x.baseline.reorder_point >= x.baseline.order_up_to) {
        r.fail(std::max(r.line_of("baseline_s"), r.line_of("baseline_S")), "baseline requires 0 <= s < S");
    }
    if (r.find("initial_on_hand")) {
        x.initial_on_hand = r.integer<Units>("initial_on_hand", 0);
        if (*x.initial_on_hand < 0) r.fail(r.line_of("initial_on_hand"), "initial_on_hand must be >= 0");
    }

    x.prior.demand_shape = r.real("prior_demand_shape", x.prior.demand_shape);
    x.prior.demand_rate = r.real("prior_demand_rate", x.prior.demand_rate);
    x.prior.disruption_alpha = r.real("prior_disruption_alpha", x.prior.disruption_alpha);
    x.prior.disruption_beta = r.real("prior_disruption_beta", x.prior.disruption_beta);
    for (const char* key : {"prior_demand_shape", "prior_demand_rate", "prior_disruption_alpha", "prior_disruption_beta"}) {
        if (!(r.real(key, 1.0) > 0.0)) r.fail(r.line_of(key), std::string(key) + " must be > 0");
    }

    x.update_period = r.integer<int>("update_period", x.update_period);
    if (x.update_period < 1) r.fail(r.line_of("update_period"), "update_period must be >= 1");
    x.lead_time_p = r.real("lead_time_p", x.lead_time_p);
    if (!(x.lead_time_p > 0.0 && x.lead_time_p <= 1.0)) r.fail(r.line_of("lead_time_p"), "lead_time_p must lie in (0, 1]");

    auto& opt = x.optimizer;
    opt.num_samples = r.integer<int>("optimizer_samples", opt.num_samples);
    if (opt.num_samples < 1) r.fail(r.line_of("optimizer_samples"), "optimizer_samples must be >= 1");
    opt.planning_horizon = r.integer<int>("planning_horizon", opt.planning_horizon);
    if (opt.planning_horizon < 1) r.fail(r.line_of("planning_horizon"), "planning_horizon must be >= 1");
    const std::string mode = r.text("optimizer_mode", "posterior");
    if (mode == "posterior") {
        opt.mode = SamplingMode::PosteriorSampling;
    } else if (mode == "point") {
        opt.mode = SamplingMode::PointEstimate;
    } else {
        r.fail(r.line_of("optimizer_mode"), "optimizer_mode must be 'posterior' or 'point'");
    }
    opt.refine = r.boolean("optimizer_refine", opt.refine);
    opt.lead_time_p = x.lead_time_p;

    cfg.grid.s_min = r.integer<Units>("grid_s_min", cfg.grid.s_min);
    cfg.grid.s_max = r.integer<Units>("grid_s_max", cfg.grid.s_max);
    cfg.grid.S_max = r.integer<Units>("grid_S_max", cfg.grid.S_max);
    cfg.grid.step = r.integer<Units>("grid_step", cfg.grid.step);
    {
        const int line = std::max({r.line_of("grid_s_min"), r.line_of("grid_s_max"), r.line_of("grid_S_max"),
                                   r.line_of("grid_step")});
        try {
            opt.grid = make_grid(cfg.grid.s_min, cfg.grid.s_max, cfg.grid.S_max, cfg.grid.step);
        } catch (const ConfigError& e) {
            r.fail(line, e.what());
        }
        if (opt.grid.empty()) r.fail(line, "grid bounds produce no candidates");
    }

    ScenarioName name = ScenarioName::Stationary;
    try {
        name = parse_scenario_name(r.text("scenario", "stationary"));
    } catch (const ConfigError& e) {
        r.fail(r.line_of("scenario"), e.what());
    }
    auto& sc = cfg.scenario;
    sc = make_scenario(name);
    sc.base_lambda = r.real("base_lambda", sc.base_lambda);
    sc.base_alpha = r.real("base_alpha", sc.base_alpha);
    if (r.find("shock_lambda")) sc.shock_lambda = r.real("shock_lambda", 0.0);
    if (r.find("shock_period")) sc.shock_period = r.integer<std::int64_t>("shock_period", 0);
    if (r.find("disruption_alpha")) sc.disruption_alpha = r.real("disruption_alpha", 0.0);
    if (r.find("disruption_start") || r.find("disruption_end")) {
        auto window = sc.disruption_window.value_or(std::pair<std::int64_t, std::int64_t>{1, x.horizon});
        window.first = r.integer<std::int64_t>("disruption_start", window.first);
        window.second = r.integer<std::int64_t>("disruption_end", window.second);
        sc.disruption_window = window;
    }
    for (const auto& e : r.segments()) sc.segments.push_back(parse_segment(r, e));
    try {
        validate(sc, x.horizon);
    } catch (const InvalidParameter& e) {
        int line = r.line_of("scenario");
        for (const char* key : {"base_lambda", "base_alpha", "shock_lambda", "shock_period", "disruption_alpha",
                                "disruption_start", "disruption_end"}) {
            line = std::max(line, r.line_of(key));
        }
        if (!r.segments().empty()) line = std::max(line, r.segments().back().line);
        r.fail(line, e.what());
    }

    x.stationary_reference = r.boolean("stationary_reference", x.stationary_reference);
    cfg.output_dir = r.text("output_dir", cfg.output_dir);
    r.reject_unknown();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

std::string serialize_config(const RunConfig& config) {
    const auto& x = config.experiment;
    const auto& sc = config.scenario;
    std::ostringstream out;
    out << "horizon = " << x.horizon << '\n'
        << "reps = " << x.n_reps << '\n'
        << "seed = " << x.seed << '\n'
        << "threads = " << x.threads << '\n'
        << "holding_cost = " << num(x.costs.holding) << '\n'
        << "stockout_cost = " << num(x.costs.stockout) << '\n'
        << "fixed_order_cost = " << num(x.costs.fixed_order) << '\n'
        << "baseline_s = " << x.baseline.reorder_point << '\n'
        << "baseline_S = " << x.baseline.order_up_to << '\n';
    if (x.initial_on_hand) out << "initial_on_hand = " << *x.initial_on_hand << '\n';
    out << "prior_demand_shape = " << num(x.prior.demand_shape) << '\n'
        << "prior_demand_rate = " << num(x.prior.demand_rate) << '\n'
        << "prior_disruption_alpha = " << num(x.prior.disruption_alpha) << '\n'
        << "prior_disruption_beta = " << num(x.prior.disruption_beta) << '\n'
        << "update_period = " << x.update_period << '\n'
        << "lead_time_p = " << num(x.lead_time_p) << '\n'
        << "optimizer_samples = " << x.optimizer.num_samples << '\n'
        << "planning_horizon = " << x.optimizer.planning_horizon << '\n'
        << "optimizer_mode = " << (x.optimizer.mode == SamplingMode::PointEstimate ? "point" : "posterior") << '\n'
        << "optimizer_refine = " << (x.optimizer.refine ? "true" : "false") << '\n'
        << "grid_s_min = " << config.grid.s_min << '\n'
        << "grid_s_max = " << config.grid.s_max << '\n'
        << "grid_S_max = " << config.grid.S_max << '\n'
        << "grid_step = " << config.grid.step << '\n'
        << "scenario = " << to_string(sc.name) << '\n'
        << "base_lambda = " << num(sc.base_lambda) << '\n'
        << "base_alpha = " << num(sc.base_alpha) << '\n';
    if (sc.shock_lambda) out << "shock_lambda = " << num(*sc.shock_lambda) << '\n';
    if (sc.shock_period) out << "shock_period = " << *sc.shock_period << '\n';
    if (sc.disruption_alpha) out << "disruption_alpha = " << num(*sc.disruption_alpha) << '\n';
    if (sc.disruption_window) {
        out << "disruption_start = " << sc.disruption_window->first << '\n'
            << "disruption_end = " << sc.disruption_window->second << '\n';
    }
    for (const auto& seg : sc.segments) {
        out << "segment = " << seg.first << ',' << (seg.last ? std::to_string(*seg.last) : std::string("-")) << ','
            << num(seg.lambda) << ',' << num(seg.alpha) << '\n';
    }
    out << "stationary_reference = " << (x.stationary_reference ? "true" : "false") << '\n'
        << "output_dir = " << config.output_dir << '\n';
    return out.str();
}

}  // namespace ainv
