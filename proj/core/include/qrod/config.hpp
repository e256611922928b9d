#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "qrod/parameters.hpp"

namespace qrod {

/// Flat key = value text config. Lines starting with '#' (or ';') and
/// blank lines are ignored; inline '#' comments are stripped.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_key_value_text(const std::string& text);
ConfigMap parse_key_value_file(const std::filesystem::path& path);

enum class UnitsMode { Si, Natural };

const char* to_string(UnitsMode mode);

/// Physical problem read from a config: rod parameters plus the initial
/// width. Natural mode pins m = a = g = 1; explicit mass/half_length/
/// gravity keys are then rejected as contradictory.
struct ProblemConfig {
    RodParameters params;
    double sigma = 0.1;
    UnitsMode units = UnitsMode::Si;
    bool hbar_explicit = false;  ///< false means the CODATA default was applied
};

/// Recognized keys: mass, half_length, gravity, hbar, sigma, units_mode.
/// Every problem found (unknown key, unparsable number, non-positive
/// parameter) is collected and reported in one aggregated ConfigError.
ProblemConfig problem_from_config(const ConfigMap& config);

} // namespace qrod
