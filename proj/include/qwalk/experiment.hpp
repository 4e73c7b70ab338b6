#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
    Walk,
    Boundary,
    Perturb,
    WindingSweep,
    Transmission,
    Register,
    EntangleBulk,
    EntangleEdge,
};

/// Parsed and validated experiment description. The JSON document is kept
/// alongside so runs can echo their exact configuration.
struct ExperimentConfig {
    ExperimentKind kind;
    std::string source;  // the JSON text this config was parsed from

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_file(const std::filesystem::path& p);
};

struct RunOutcome {
    int exit_code = 0;           // 0 ok, 2 config error, 3 invariant violation
    std::string summary_text;    // printed to stdout by the CLI
};

/// Executes the experiment, writing distribution.csv / summary.json /
/// sweep.csv (as applicable) under out_dir. threads = 0 keeps the OpenMP
/// default. Deterministic: reruns produce byte-identical files.
RunOutcome run_experiment(const ExperimentConfig& cfg,
                          const std::filesystem::path& out_dir, int threads);

std::vector<std::string> preset_names();
std::string preset_json(const std::string& name);  // throws ConfigError

}  // namespace qwalk
