#pragma once

#include <map>
#include <optional>
#include <string>

#include "edgewalk/io.hpp"

namespace edgewalk {

// Flat key=value experiment description. The raw map is the single source
// of truth; typed getters validate on access and throw
// std::invalid_argument with the offending key in the message.
struct ExperimentConfig {
    std::string command;  // simulate | spectrum | asymptotic | scattering | equivalence | average
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    std::string get_string(const std::string& key, const std::string& fallback) const;
    long long get_int(const std::string& key, std::optional<long long> fallback = {}) const;
    double get_double(const std::string& key, std::optional<double> fallback = {}) const;
    cplx get_complex(const std::string& key, std::optional<cplx> fallback = {}) const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// key=value per line; '#' comments and blank lines ignored. Errors carry
// the line number.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

// "key=value" override, as given on the command line.
void apply_override(ExperimentConfig& cfg, const std::string& assignment);

// Recovers the config from the "# cfg:key=value" metadata lines of an
// emitted CSV (round-trip contract).
ExperimentConfig config_from_csv(const std::string& path);

// Dispatches to the library and returns the result table; every
// distribution table is normalization-checked (1e-9) before returning.
// Deterministic given the config, including any seeded randomness.
ResultTable run(const ExperimentConfig& cfg);

inline constexpr const char* kToolVersion = "edgewalk 1.0.0";

}  // namespace edgewalk
