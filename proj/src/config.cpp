#include "footnet/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "footnet/errors.hpp"

namespace footnet {

const char* weight_mode_name(WeightMode mode) {
    return mode == WeightMode::ranking ? "ranking" : "value";
}

std::optional<WeightMode> weight_mode_from_name(const std::string& name) {
    if (name == "ranking") return WeightMode::ranking;
    if (name == "value") return WeightMode::value;
    return std::nullopt;
}

namespace {

void check_invariants(const AnalysisConfig& c) {
    if (c.theta < 0) throw Error(errc::range_error, "theta");
    if (!(c.damping > 0.0 && c.damping < 1.0)) throw Error(errc::range_error, "damping");
    if (!(c.pr_tolerance > 0.0)) throw Error(errc::range_error, "pr_tolerance");
    if (c.pr_max_iter < 1) throw Error(errc::range_error, "pr_max_iter");
    if (c.first_season > c.reference_season) throw Error(errc::range_error, "first_season");
}

} // namespace

AnalysisConfig parse_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw Error(errc::parse_error, "config: top level must be a JSON object");

    AnalysisConfig c;
    try {
        for (const auto& [key, val] : j.items()) {
            if (key == "theta") c.theta = val.get<double>();
            else if (key == "reference_season") c.reference_season = val.get<int>();
            else if (key == "damping") c.damping = val.get<double>();
            else if (key == "pr_tolerance") c.pr_tolerance = val.get<double>();
            else if (key == "pr_max_iter") c.pr_max_iter = val.get<int>();
            else if (key == "normalize_betweenness") c.normalize_betweenness = val.get<bool>();
            else if (key == "first_season") c.first_season = val.get<int>();
            else if (key == "weight_mode") {
                auto mode = weight_mode_from_name(val.get<std::string>());
                if (!mode) throw Error(errc::range_error, "weight_mode");
                c.weight_mode = *mode;
            } else {
                throw Error(errc::parse_error, "config: unknown key \"" + key + "\"");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("config: ") + e.what());
    }
    check_invariants(c);
    return c;
}

AnalysisConfig load_config(const std::optional<std::filesystem::path>& path) {
    if (!path) return AnalysisConfig{};
    std::ifstream in(*path, std::ios::binary);
    if (!in) return AnalysisConfig{}; // absent file means "use defaults"
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_to_json(const AnalysisConfig& c) {
    nlohmann::json j;
    j["theta"] = c.theta;
    j["reference_season"] = c.reference_season;
    j["damping"] = c.damping;
    j["pr_tolerance"] = c.pr_tolerance;
    j["pr_max_iter"] = c.pr_max_iter;
    j["weight_mode"] = weight_mode_name(c.weight_mode);
    j["normalize_betweenness"] = c.normalize_betweenness;
    j["first_season"] = c.first_season;
    return j.dump(2);
}

} // namespace footnet
