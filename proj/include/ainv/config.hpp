#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ainv/harness.hpp"
#include "ainv/scenarios.hpp"

namespace ainv {

/// Grid bounds; the candidate set is make_grid(s_min, s_max, S_max, step).
struct GridBounds {
    Units s_min = 0;
    Units s_max = 60;
    Units S_max = 120;
    Units step = 5;

    friend bool operator==(const GridBounds&, const GridBounds&) = default;
};

/// Full run configuration. Every field has the shipped default, so an empty
/// file yields the reference setup.
struct RunConfig {
    ExperimentConfig experiment;
    GridBounds grid;
    ScenarioSchedule scenario;  // used by `run` unless overridden on the command line
    std::string output_dir = "out";
};

/**
 * Parses flat `key = value` text. `#` starts a comment; blank lines are
 * ignored; `segment = first,last,lambda,alpha` may repeat (use `-` for an
 * open-ended last period). Unknown keys, malformed values and out-of-range
 * values throw ConfigError prefixed with "<source>:<line>: ".
 */
RunConfig parse_config(std::string_view text, std::string_view source = "config");

/// Reads and parses a file; a missing or unreadable file is a ConfigError.
RunConfig load_config(const std::filesystem::path& path);

/// Canonical serialization: every key, fixed order, round-trip exact numbers.
std::string serialize_config(const RunConfig& config);

}  // namespace ainv
