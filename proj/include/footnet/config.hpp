#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace footnet {

enum class WeightMode { ranking, value };

const char* weight_mode_name(WeightMode mode);
std::optional<WeightMode> weight_mode_from_name(const std::string& name);

/// Run configuration. Defaults are usable as-is; theta is an assumed
/// per-year inflation rate, not a measured one.
struct AnalysisConfig {
    double theta = 0.02;             // per-year inflation rate, >= 0
    int reference_season = 2016;     // season weights are inflated toward
    double damping = 0.85;           // PageRank damping, in (0,1)
    double pr_tolerance = 1e-9;      // L1 stopping threshold, > 0
    int pr_max_iter = 200;           // >= 1
    WeightMode weight_mode = WeightMode::ranking;
    bool normalize_betweenness = true;
    int first_season = 2001;         // earliest season considered valid

    bool operator==(const AnalysisConfig&) const = default;
};

/// Loads a config from a JSON object file. A missing path or file yields the
/// defaults; present keys override them. Throws ParseError for malformed
/// JSON or unknown keys and RangeError for invariant violations.
AnalysisConfig load_config(const std::optional<std::filesystem::path>& path);

/// Parses a config from JSON text (same contract as load_config).
AnalysisConfig parse_config(const std::string& json_text);

/// Serializes a config as the JSON object load_config accepts.
std::string config_to_json(const AnalysisConfig& config);

} // namespace footnet
