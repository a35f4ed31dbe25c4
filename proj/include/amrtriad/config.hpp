// Scenario configuration: the declarative description of a run that both the
// CLI and the figure presets consume.
//
// On-disk format is a flat list of `key = value` lines. `#` starts a comment,
// blank lines are ignored, dotted keys group related settings (`model.gamma`,
// `grid.dt`, `ensemble.n_paths`). Unknown keys and duplicate keys are errors;
// `parse_config(serialize_config(c)) == c` holds for every valid config.
// The full grammar is documented in docs/config-format.md.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "amrtriad/grid.hpp"
#include "amrtriad/model.hpp"

namespace amrtriad {

/// Which solver family a scenario exercises. `All` runs ode, sde, and fde
/// side by side on the same parameter set.
enum class RunEngine { Ode, Sde, Fde, All };

/// The model parameter a sweep varies while all others stay fixed.
enum class SweepParameter { Gamma, Sigma, Alpha };

/// One-dimensional parameter sweep: the scenario is repeated once per value.
struct SweepSpec {
    SweepParameter parameter = SweepParameter::Gamma;
    std::vector<double> values;
    bool operator==(const SweepSpec&) const = default;
};

/// Monte Carlo ensemble settings (stochastic engine only).
struct EnsembleSpec {
    int n_paths = 200;
    std::uint64_t base_seed = 1;
    double burn_in = 0.5;  ///< fraction of each path discarded before histogramming
    int n_bins = 60;
    bool operator==(const EnsembleSpec&) const = default;
};

/// Which artifact kinds a run writes.
struct OutputSpec {
    bool csv = true;
    bool svg = true;
    bool report = true;
    bool operator==(const OutputSpec&) const = default;
};

/// A complete, self-contained description of one run.
struct ScenarioConfig {
    RunEngine engine = RunEngine::Ode;
    ModelParams params;
    double r0 = 999999.0;
    TimeGrid grid{0.0, 50.0, 0.01};
    std::optional<SweepSpec> sweep;
    std::optional<EnsembleSpec> ensemble;
    OutputSpec outputs;
    bool overlay_deterministic = false;  ///< also draw the noise-free curve on sde panels
    bool thresholds_only = false;        ///< report thresholds, run no integration
    std::string label;                   ///< free-form tag used in file names and titles

    bool operator==(const ScenarioConfig&) const = default;
};

const char* run_engine_name(RunEngine e);
const char* sweep_parameter_name(SweepParameter p);

RunEngine parse_run_engine(const std::string& s);

/// Parses a configuration document. Throws ConfigError (carrying the key)
/// on unknown keys, duplicates, or malformed values.
ScenarioConfig parse_config(const std::string& text);

/// Reads and parses a configuration file.
ScenarioConfig load_config_file(const std::filesystem::path& path);

/// Canonical text form; emits every key so defaults are explicit.
std::string serialize_config(const ScenarioConfig& cfg);

/// Semantic checks beyond syntax: model invariants, sweep values admissible
/// for the swept parameter, ensemble only with the stochastic engine.
/// Throws ConfigError / ParameterError with a descriptive message.
void validate_config(const ScenarioConfig& cfg);

}  // namespace amrtriad
