#include "amrtriad/csv.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include "amrtriad/errors.hpp"

namespace amrtriad {

namespace {

constexpr const char* kTrajectoryHeader = "t,R,path_id,engine,seed";
constexpr const char* kHistogramHeader = "bin_left,bin_right,mass";

// Every writer funnels through this check so a drifting header is caught at
// the write site, not by a downstream consumer.
void require_header(const std::string& body, const char* expected) {
    const auto eol = body.find('\n');
    if (eol == std::string::npos || body.compare(0, eol, expected) != 0)
        throw Error(std::string("csv: header mismatch, expected \"") + expected + "\"");
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trajectory_csv(const std::vector<const Trajectory*>& paths) {
    std::string out(kTrajectoryHeader);
    out += '\n';
    int path_id = 0;
    for (const Trajectory* t : paths) {
        const char* eng = engine_name(t->engine);
        const std::string seed = t->seed ? std::to_string(*t->seed) : std::string();
        for (std::size_t i = 0; i < t->values.size(); ++i) {
            out += format_double(t->times[i]);
            out += ',';
            out += format_double(t->values[i]);
            out += ',';
            out += std::to_string(path_id);
            out += ',';
            out += eng;
            out += ',';
            out += seed;
            out += '\n';
        }
        ++path_id;
    }
    require_header(out, kTrajectoryHeader);
    return out;
}

std::string trajectory_csv(const Trajectory& t) {
    return trajectory_csv(std::vector<const Trajectory*>{&t});
}

std::string histogram_csv(const Histogram& h) {
    std::string out(kHistogramHeader);
    out += '\n';
    for (std::size_t i = 0; i + 1 < h.bin_edges.size(); ++i) {
        out += format_double(h.bin_edges[i]);
        out += ',';
        out += format_double(h.bin_edges[i + 1]);
        out += ',';
        out += format_double(h.bin_mass[i]);
        out += '\n';
    }
    require_header(out, kHistogramHeader);
    return out;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::error_code ec;
    fs::create_directories(dir, ec);  // best effort; open failure reports below

    const fs::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("atomic_write_file: cannot open " + tmp.string());
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw Error("atomic_write_file: write failed for " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error("atomic_write_file: rename failed for " + path.string());
    }
}

}  // namespace amrtriad
