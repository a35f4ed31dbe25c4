#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "amrtriad/analysis.hpp"
#include "amrtriad/grid.hpp"

namespace amrtriad {

// Shortest round-trip-exact decimal form of v (17 significant digits via %g).
std::string format_double(double v);

// Trajectory CSV. Header: t,R,path_id,engine,seed
// One row per grid point per path; seed is empty for deterministic engines;
// newline is LF; floats carry 17 significant digits so parsing returns the
// exact bits. Multiple paths are concatenated with their path_id.
std::string trajectory_csv(const std::vector<const Trajectory*>& paths);
std::string trajectory_csv(const Trajectory& t);

// Histogram CSV. Header: bin_left,bin_right,mass
std::string histogram_csv(const Histogram& h);

// Writes content to path atomically: a temp file in the same directory is
// renamed over the target, so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace amrtriad
