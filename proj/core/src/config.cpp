#include "nairu/config.hpp"

#include "nairu/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

namespace nairu {

namespace {

ParseError error_at(const YAML::Node& node, const std::string& key, const std::string& message) {
    const YAML::Mark mark = node.Mark();
    if (mark.is_null()) {
        return ParseError(0, 0, key, message);
    }
    return ParseError(mark.line + 1, mark.column + 1, key, message);
}

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

// Rejects keys outside `allowed`.
void require_keys(const YAML::Node& map, const std::string& path,
                  std::initializer_list<std::string_view> allowed) {
    if (!map.IsMap()) {
        throw error_at(map, path, "'" + path + "' must be a mapping");
    }
    for (const auto& entry : map) {
        const auto key = entry.first.as<std::string>();
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw error_at(entry.first, join(path, key), "unknown key '" + join(path, key) + "'");
        }
    }
}

double number(const YAML::Node& node, const std::string& path) {
    if (!node.IsScalar()) {
        throw error_at(node, path, "'" + path + "' must be a number");
    }
    try {
        return node.as<double>();
    } catch (const YAML::BadConversion&) {
        throw error_at(node, path, "'" + path + "' must be a number, got '" +
                                       node.as<std::string>() + "'");
    }
}

double required_number(const YAML::Node& map, const std::string& parent, const char* key) {
    const YAML::Node node = map[key];
    if (!node) {
        throw error_at(map, join(parent, key), "missing key '" + join(parent, key) + "'");
    }
    return number(node, join(parent, key));
}

ModelParams read_params(const YAML::Node& node, const std::string& path) {
    require_keys(node, path, {"a", "kappa", "n", "z"});
    ModelParams p{required_number(node, path, "a"), required_number(node, path, "kappa"),
                  required_number(node, path, "n"), required_number(node, path, "z")};
    try {
        return validate_params(p);
    } catch (const DomainError& e) {
        throw DomainError(e.field(), path + ": " + e.what());
    }
}

State read_state(const YAML::Node& node, const std::string& path) {
    require_keys(node, path, {"inflation", "unemployment"});
    State s{required_number(node, path, "inflation"), required_number(node, path, "unemployment")};
    try {
        validate_state(s);
    } catch (const DomainError& e) {
        throw DomainError(e.field(), path + ": " + e.what());
    }
    return s;
}

Dynamics read_dynamics(const YAML::Node& node) {
    const auto text = node.IsScalar() ? node.as<std::string>() : std::string();
    if (text == "nonlinear") {
        return Dynamics::Nonlinear;
    }
    if (text == "linearized") {
        return Dynamics::Linearized;
    }
    throw error_at(node, "dynamics", "'dynamics' must be 'nonlinear' or 'linearized'");
}

int read_positive_int(const YAML::Node& node, const std::string& path) {
    try {
        const int v = node.as<int>();
        if (v >= 1) {
            return v;
        }
    } catch (const YAML::BadConversion&) {
    }
    throw error_at(node, path, "'" + path + "' must be a positive integer");
}

Shock read_shock(const YAML::Node& node, const std::string& path) {
    require_keys(node, path,
                 {"time", "set_inflation", "set_unemployment", "add_inflation", "add_unemployment"});
    Shock shock;
    shock.time = required_number(node, path, "time");
    if (node["set_inflation"]) {
        shock.set_inflation = number(node["set_inflation"], path + ".set_inflation");
    }
    if (node["set_unemployment"]) {
        shock.set_unemployment = number(node["set_unemployment"], path + ".set_unemployment");
    }
    if (node["add_inflation"]) {
        shock.add_inflation = number(node["add_inflation"], path + ".add_inflation");
    }
    if (node["add_unemployment"]) {
        shock.add_unemployment = number(node["add_unemployment"], path + ".add_unemployment");
    }
    return shock;
}

Industry read_industry(const YAML::Node& node, const std::string& path) {
    require_keys(node, path, {"label", "params", "weight", "initial"});
    Industry ind;
    if (!node["label"] || !node["label"].IsScalar()) {
        throw error_at(node, path + ".label", "missing key '" + path + ".label'");
    }
    ind.label = node["label"].as<std::string>();
    if (!node["params"]) {
        throw error_at(node, path + ".params", "missing key '" + path + ".params'");
    }
    ind.params = read_params(node["params"], path + ".params");
    if (node["weight"]) {
        ind.weight = number(node["weight"], path + ".weight");
        if (!(ind.weight > 0.0)) {
            throw DomainError("weight", path + ".weight: weight must be positive");
        }
    }
    if (node["initial"]) {
        ind.initial = read_state(node["initial"], path + ".initial");
    }
    return ind;
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
    const YAML::Node root = [&] {
        try {
            return YAML::Load(std::string(text));
        } catch (const YAML::ParserException& e) {
            throw ParseError(e.mark.line + 1, e.mark.column + 1, "", e.msg);
        }
    }();
    if (!root.IsMap()) {
        throw ParseError(1, 1, "", "configuration must be a mapping");
    }
    require_keys(root, "",
                 {"params", "initial", "horizon", "dt", "dynamics", "record_every", "shocks",
                  "industries", "analysis"});

    ScenarioConfig cfg;
    Scenario& sc = cfg.scenario;

    if (const YAML::Node list = root["industries"]) {
        if (!list.IsSequence() || list.size() == 0) {
            throw error_at(list, "industries", "'industries' must be a non-empty list");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            cfg.industries.push_back(
                read_industry(list[i], "industries[" + std::to_string(i) + "]"));
        }
    }

    if (root["params"]) {
        sc.params = read_params(root["params"], "params");
    } else if (!cfg.industries.empty()) {
        sc.params = averaged_params(cfg.industries);
    } else {
        throw error_at(root, "params", "missing key 'params'");
    }

    if (!root["initial"]) {
        throw error_at(root, "initial", "missing key 'initial'");
    }
    sc.initial = read_state(root["initial"], "initial");

    if (root["horizon"]) {
        sc.horizon = number(root["horizon"], "horizon");
    }
    if (root["dt"]) {
        sc.dt = number(root["dt"], "dt");
    }
    if (root["dynamics"]) {
        sc.dynamics = read_dynamics(root["dynamics"]);
    }
    if (root["record_every"]) {
        sc.record_every = read_positive_int(root["record_every"], "record_every");
    }
    if (const YAML::Node list = root["shocks"]) {
        if (!list.IsSequence()) {
            throw error_at(list, "shocks", "'shocks' must be a list");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            sc.shocks.push_back(read_shock(list[i], "shocks[" + std::to_string(i) + "]"));
        }
    }
    if (const YAML::Node opts = root["analysis"]) {
        require_keys(opts, "analysis", {"re_tolerance"});
        if (opts["re_tolerance"]) {
            cfg.analysis.re_tolerance = number(opts["re_tolerance"], "analysis.re_tolerance");
            if (!(cfg.analysis.re_tolerance >= 0.0)) {
                throw error_at(opts["re_tolerance"], "analysis.re_tolerance",
                               "'analysis.re_tolerance' must be non-negative");
            }
        }
    }

    try {
        validate_scenario(sc);
    } catch (const DomainError& e) {
        throw DomainError(e.field(), std::string("config: ") + e.what());
    }
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, 0, "", "cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace nairu
