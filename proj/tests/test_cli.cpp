#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int status = -1;
    std::string output;
};

Outcome run_cli(const std::string& args) {
    const std::string cmd = std::string(AINV_CLI_PATH) + " " + args + " 2>&1";
    Outcome o;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.output.append(buf.data(), n);
    const int raw = pclose(pipe);
    o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("ainv_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
    const auto p = dir / "run.cfg";
    std::ofstream(p) << text;
    return p;
}

const char* kFastConfig = "optimizer_samples = 20\nplanning_horizon = 20\nreps = 2\n";

}  // namespace

TEST_CASE("missing config exits 1 without writing output") {
    const auto dir = scratch("missing");
    const auto o = run_cli("run --config " + (dir / "nope.cfg").string() + " --out " + (dir / "out").string());
    CHECK(o.status == 1);
    CHECK(!fs::exists(dir / "out"));
}

TEST_CASE("invalid config value exits 1 and names the line") {
    const auto dir = scratch("invalid");
    const auto cfg = write_config(dir, "horizon = 10\nstockout_cost = 0.2\n");
    const auto o = run_cli("run --config " + cfg.string() + " --out " + (dir / "out").string());
    CHECK(o.status == 1);
    CHECK(o.output.find(":2:") != std::string::npos);
}

TEST_CASE("run writes a full-horizon trace with weekly policy changes") {
    const auto dir = scratch("run");
    const auto cfg = write_config(dir, kFastConfig);
    const auto o = run_cli("run --config " + cfg.string() + " --policy adaptive --scenario demand-shock --seed 7 --out " +
                           (dir / "out").string());
    REQUIRE(o.status == 0);
    const auto rows = read_csv(dir / "out" / "trace_demand-shock_adaptive.csv");
    REQUIRE(rows.size() == 366);
    CHECK(rows[0][0] == "period");
    CHECK(rows[0][11] == "active_s");
    for (std::size_t i = 2; i < rows.size(); ++i) {
        const bool changed = rows[i][11] != rows[i - 1][11] || rows[i][12] != rows[i - 1][12];
        const int period = std::stoi(rows[i][0]);
        if (changed) REQUIRE(period % 7 == 0);
    }
    CHECK(fs::exists(dir / "out" / "summary_demand-shock_adaptive.json"));

    const auto again = scratch("run2");
    REQUIRE(run_cli("run --config " + cfg.string() + " --policy adaptive --scenario demand-shock --seed 7 --out " +
                    (again / "out").string())
                .status == 0);
    CHECK(slurp(dir / "out" / "trace_demand-shock_adaptive.csv") ==
          slurp(again / "out" / "trace_demand-shock_adaptive.csv"));
}

TEST_CASE("plotdata") {
    const auto dir = scratch("plot");
    const auto cfg = write_config(dir, kFastConfig);
    REQUIRE(run_cli("run --config " + cfg.string() + " --policy static --out " + (dir / "out").string()).status == 0);
    const auto trace = (dir / "out" / "trace_stationary_static.csv").string();
    CHECK(run_cli("plotdata " + trace + " --kind spaghetti").status == 1);
    const auto o = run_cli("plotdata " + trace + " --kind adaptation --out " + (dir / "adapt.csv").string());
    CHECK(o.status == 0);
    const auto rows = read_csv(dir / "adapt.csv");
    REQUIRE(rows.size() == 366);
    CHECK(rows[1] == std::vector<std::string>{"1", "25", "50", rows[1][3]});
}

TEST_CASE("compare writes one row per scenario and policy") {
    const auto dir = scratch("compare");
    const auto cfg = write_config(dir, std::string(kFastConfig) + "horizon = 200\n");
    const auto o = run_cli("compare --config " + cfg.string() +
                           " --scenario stationary,supply-disruption --out " + (dir / "out").string());
    // The default demand shock lands after a 200-period horizon, so only these two are valid.
    REQUIRE(o.status == 0);
    const auto rows = read_csv(dir / "out" / "comparison.csv");
    REQUIRE(rows.size() == 1 + 4);
    CHECK(fs::exists(dir / "out" / "comparison.json"));

    const auto bad = run_cli("compare --config " + cfg.string() + " --scenario volcano --out " + (dir / "x").string());
    CHECK(bad.status == 1);
}

TEST_CASE("seed precedence") {
    const auto dir = scratch("seed");
    const auto cfg = write_config(dir, kFastConfig);
    REQUIRE(run_cli("run --config " + cfg.string() + " --policy static --seed 11 --out " + (dir / "a").string()).status == 0);
    REQUIRE(run_cli("run --config " + cfg.string() + " --policy static --seed 12 --out " + (dir / "b").string()).status == 0);
    CHECK(slurp(dir / "a" / "trace_stationary_static.csv") != slurp(dir / "b" / "trace_stationary_static.csv"));
}

TEST_CASE("shipped example configs parse") {
    const fs::path root = AINV_TEST_SOURCE_DIR;
    for (const auto& entry : fs::directory_iterator(root / "configs")) {
        if (entry.path().extension() != ".cfg") continue;
        const auto dir = scratch("shipped");
        const auto o = run_cli("run --config " + entry.path().string() + " --policy static --out " + (dir / "o").string());
        CHECK_MESSAGE(o.status == 0, entry.path().string() << ": " << o.output);
    }
}
