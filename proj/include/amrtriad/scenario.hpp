// Scenario execution: turns a ScenarioConfig into files on disk.
//
// A scenario expands into cells = (engine list) x (sweep values). Every cell
// writes one CSV (trajectory, or histogram for ensemble cells); each engine
// gets one combined SVG holding all of its sweep curves; every ensemble cell
// gets its own histogram SVG; the whole scenario gets one plain-text report
// with thresholds, per-cell outcomes, and runtime metadata. All files are
// written atomically, and files already written are removed again when a
// later cell fails.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "amrtriad/config.hpp"

namespace amrtriad {

/// A named list of panels run together (multi-panel figures hold two panels,
/// suffixed `a` and `b`; simple figures hold one).
struct ScenarioPlan {
    std::string name;
    std::vector<ScenarioConfig> panels;
};

/// Built-in configurations reproducing the library's reference figures:
/// `figure1`..`figure5` and `thresholds-table`. Throws ConfigError for
/// unknown names.
ScenarioPlan preset(const std::string& name);

/// Names of all built-in presets, for help text and validation.
std::vector<std::string> preset_names();

struct RunOptions {
    std::filesystem::path out_dir = ".";
    std::optional<std::uint64_t> seed_override;  ///< replaces every base seed when set
    int n_threads = 1;
};

struct RunArtifacts {
    std::vector<std::filesystem::path> files;  ///< everything written, report last
    std::string report_text;
};

/// Runs one scenario; `stem` prefixes every emitted file name.
/// Errors from a cell are rethrown with the cell coordinates prepended.
RunArtifacts run_scenario(const ScenarioConfig& cfg, const std::string& stem,
                          const RunOptions& opt = {});

/// Runs every panel of a plan (stems `name`, or `name_a` / `name_b` ... for
/// multi-panel plans) and concatenates the artifact lists.
RunArtifacts run_plan(const ScenarioPlan& plan, const RunOptions& opt = {});

}  // namespace amrtriad
