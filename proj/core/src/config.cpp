#include "qrod/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace qrod {

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

} // namespace

ConfigMap parse_key_value_text(const std::string& text) {
    ConfigMap config;
    std::istringstream stream(text);
    std::string line;
    int line_number = 0;
    std::vector<std::string> problems;
    while (std::getline(stream, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::string content = trim(line);
        if (content.empty() || content.front() == ';') continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos) {
            problems.push_back("line " + std::to_string(line_number) +
                               ": expected 'key = value', got '" + content + "'");
            continue;
        }
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty() || value.empty()) {
            problems.push_back("line " + std::to_string(line_number) + ": empty key or value");
            continue;
        }
        if (config.contains(key)) {
            problems.push_back("line " + std::to_string(line_number) + ": duplicate key '" +
                               key + "'");
            continue;
        }
        config[key] = value;
    }
    if (!problems.empty()) {
        std::string message = "config parse failed:";
        for (const auto& p : problems) message += "\n  " + p;
        throw ConfigError(message);
    }
    return config;
}

ConfigMap parse_key_value_file(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_key_value_text(buffer.str());
}

const char* to_string(UnitsMode mode) {
    switch (mode) {
        case UnitsMode::Si: return "si";
        case UnitsMode::Natural: return "natural";
    }
    return "unknown";
}

ProblemConfig problem_from_config(const ConfigMap& config) {
    std::vector<std::string> problems;

    auto parse_double = [&](const std::string& key, double& target, bool& present) {
        present = false;
        const auto it = config.find(key);
        if (it == config.end()) return;
        errno = 0;
        char* end = nullptr;
        const double value = std::strtod(it->second.c_str(), &end);
        if (end == it->second.c_str() || *end != '\0' || errno == ERANGE) {
            problems.push_back("key '" + key + "': cannot parse '" + it->second +
                               "' as a number");
            return;
        }
        target = value;
        present = true;
    };

    static const std::vector<std::string> known = {"mass",  "half_length", "gravity",
                                                   "hbar",  "sigma",       "units_mode"};
    for (const auto& [key, value] : config) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            problems.push_back("unknown key '" + key + "'");
        }
    }

    ProblemConfig result;
    if (const auto it = config.find("units_mode"); it != config.end()) {
        if (it->second == "si") {
            result.units = UnitsMode::Si;
        } else if (it->second == "natural") {
            result.units = UnitsMode::Natural;
        } else {
            problems.push_back("key 'units_mode': expected 'si' or 'natural', got '" +
                               it->second + "'");
        }
    }

    double mass = 0, half_length = 0, gravity = 0, hbar = 0, sigma = 0;
    bool has_mass = false, has_a = false, has_g = false, has_hbar = false, has_sigma = false;
    parse_double("mass", mass, has_mass);
    parse_double("half_length", half_length, has_a);
    parse_double("gravity", gravity, has_g);
    parse_double("hbar", hbar, has_hbar);
    parse_double("sigma", sigma, has_sigma);

    if (result.units == UnitsMode::Natural) {
        if (has_mass || has_a || has_g) {
            problems.push_back(
                "natural units pin mass = half_length = gravity = 1; drop those keys");
        }
        result.params = RodParameters::natural(kCodataHbar);
    } else {
        if (has_mass) result.params.mass = mass;
        if (has_a) result.params.half_length = half_length;
        if (has_g) result.params.gravity = gravity;
    }
    if (has_hbar) {
        result.params.hbar = hbar;
        result.hbar_explicit = true;
    }
    if (has_sigma) result.sigma = sigma;

    auto require_positive = [&](const char* name, double value) {
        if (!(std::isfinite(value) && value > 0.0)) {
            std::ostringstream msg;
            msg << "parameter '" << name << "' must be positive and finite, got " << value;
            problems.push_back(msg.str());
        }
    };
    require_positive("mass", result.params.mass);
    require_positive("half_length", result.params.half_length);
    require_positive("gravity", result.params.gravity);
    require_positive("hbar", result.params.hbar);

    if (!problems.empty()) {
        std::string message = "invalid configuration:";
        for (const auto& p : problems) message += "\n  " + p;
        throw ConfigError(message);
    }
    return result;
}

} // namespace qrod
