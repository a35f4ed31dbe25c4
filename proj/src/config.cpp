#include "amrtriad/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "amrtriad/csv.hpp"
#include "amrtriad/errors.hpp"

namespace amrtriad {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double num(const std::string& v, const std::string& key) {
    if (v.empty()) throw ConfigError("empty value for key \"" + key + "\"", key);
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || errno == ERANGE)
        throw ConfigError("cannot parse \"" + v + "\" as a number for key \"" + key + "\"", key);
    return x;
}

long long integer(const std::string& v, const std::string& key) {
    if (v.empty()) throw ConfigError("empty value for key \"" + key + "\"", key);
    errno = 0;
    char* end = nullptr;
    const long long x = std::strtoll(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || errno == ERANGE)
        throw ConfigError("cannot parse \"" + v + "\" as an integer for key \"" + key + "\"", key);
    return x;
}

std::uint64_t unsigned_integer(const std::string& v, const std::string& key) {
    if (v.empty() || v[0] == '-')
        throw ConfigError("key \"" + key + "\" requires a non-negative integer, got \"" + v + "\"",
                          key);
    errno = 0;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || errno == ERANGE)
        throw ConfigError("cannot parse \"" + v + "\" as an integer for key \"" + key + "\"", key);
    return x;
}

bool boolean(const std::string& v, const std::string& key) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ConfigError("key \"" + key + "\" requires true or false, got \"" + v + "\"", key);
}

std::vector<double> number_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) out.push_back(num(trim(item), key));
    if (out.empty()) throw ConfigError("key \"" + key + "\" requires at least one value", key);
    return out;
}

std::string join_numbers(const std::vector<double>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += format_double(vs[i]);
    }
    return out;
}

SweepParameter parse_sweep_parameter(const std::string& v) {
    if (v == "gamma") return SweepParameter::Gamma;
    if (v == "sigma") return SweepParameter::Sigma;
    if (v == "alpha") return SweepParameter::Alpha;
    throw ConfigError("unknown sweep parameter \"" + v + "\" (expected gamma, sigma, or alpha)",
                      "sweep.parameter");
}

}  // namespace

const char* run_engine_name(RunEngine e) {
    switch (e) {
        case RunEngine::Ode: return "ode";
        case RunEngine::Sde: return "sde";
        case RunEngine::Fde: return "fde";
        case RunEngine::All: return "all";
    }
    return "ode";
}

const char* sweep_parameter_name(SweepParameter p) {
    switch (p) {
        case SweepParameter::Gamma: return "gamma";
        case SweepParameter::Sigma: return "sigma";
        case SweepParameter::Alpha: return "alpha";
    }
    return "gamma";
}

RunEngine parse_run_engine(const std::string& s) {
    if (s == "ode") return RunEngine::Ode;
    if (s == "sde") return RunEngine::Sde;
    if (s == "fde") return RunEngine::Fde;
    if (s == "all") return RunEngine::All;
    throw ConfigError("unknown engine \"" + s + "\" (expected ode, sde, fde, or all)", "engine");
}

ScenarioConfig parse_config(const std::string& text) {
    // Pass 1: split into key/value pairs, rejecting duplicates and bad syntax.
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value, got \"" +
                              line + "\"");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        if (!kv.emplace(key, value).second)
            throw ConfigError("duplicate key \"" + key + "\"", key);
    }

    // Pass 2: interpret keys against the schema.
    ScenarioConfig cfg;
    double t0 = 0.0, t_end = 50.0, dt = 0.01;
    SweepSpec sweep;
    EnsembleSpec ens;
    bool has_sweep_param = false, has_sweep_values = false, any_ensemble = false;
    bool has_engine = false;

    for (const auto& [key, value] : kv) {
        if (key == "engine") { cfg.engine = parse_run_engine(value); has_engine = true; }
        else if (key == "mode") {
            if (value == "simulate") cfg.thresholds_only = false;
            else if (value == "thresholds") cfg.thresholds_only = true;
            else throw ConfigError("unknown mode \"" + value + "\" (expected simulate or thresholds)",
                                   key);
        }
        else if (key == "label") cfg.label = value;
        else if (key == "model.N") cfg.params.N = num(value, key);
        else if (key == "model.mu") cfg.params.mu = num(value, key);
        else if (key == "model.beta") cfg.params.beta = num(value, key);
        else if (key == "model.gamma") cfg.params.gamma = num(value, key);
        else if (key == "model.epsilon") cfg.params.epsilon = num(value, key);
        else if (key == "model.sigma") cfg.params.sigma = num(value, key);
        else if (key == "model.alpha") cfg.params.alpha = num(value, key);
        else if (key == "r0") cfg.r0 = num(value, key);
        else if (key == "grid.t0") t0 = num(value, key);
        else if (key == "grid.t_end") t_end = num(value, key);
        else if (key == "grid.dt") dt = num(value, key);
        else if (key == "sweep.parameter") {
            sweep.parameter = parse_sweep_parameter(value);
            has_sweep_param = true;
        }
        else if (key == "sweep.values") {
            sweep.values = number_list(value, key);
            has_sweep_values = true;
        }
        else if (key == "ensemble.n_paths") {
            ens.n_paths = static_cast<int>(integer(value, key));
            any_ensemble = true;
        }
        else if (key == "ensemble.base_seed") {
            ens.base_seed = unsigned_integer(value, key);
            any_ensemble = true;
        }
        else if (key == "ensemble.burn_in") { ens.burn_in = num(value, key); any_ensemble = true; }
        else if (key == "ensemble.n_bins") {
            ens.n_bins = static_cast<int>(integer(value, key));
            any_ensemble = true;
        }
        else if (key == "output.csv") cfg.outputs.csv = boolean(value, key);
        else if (key == "output.svg") cfg.outputs.svg = boolean(value, key);
        else if (key == "output.report") cfg.outputs.report = boolean(value, key);
        else if (key == "overlay.deterministic") cfg.overlay_deterministic = boolean(value, key);
        else throw ConfigError("unknown key \"" + key + "\"", key);
    }

    if (!has_engine) throw ConfigError("missing required key \"engine\"", "engine");
    if (has_sweep_param != has_sweep_values)
        throw ConfigError("sweep.parameter and sweep.values must be given together",
                          has_sweep_param ? "sweep.values" : "sweep.parameter");
    if (has_sweep_param) cfg.sweep = sweep;
    if (any_ensemble) cfg.ensemble = ens;
    try {
        cfg.grid = TimeGrid(t0, t_end, dt);
    } catch (const GridError& e) {
        throw ConfigError(std::string("grid: ") + e.what(), "grid.dt");
    }
    return cfg;
}

ScenarioConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::string out = "# scenario configuration\n";
    out += std::string("engine = ") + run_engine_name(cfg.engine) + "\n";
    out += std::string("mode = ") + (cfg.thresholds_only ? "thresholds" : "simulate") + "\n";
    if (!cfg.label.empty()) out += "label = " + cfg.label + "\n";
    out += "model.N = " + format_double(cfg.params.N) + "\n";
    out += "model.mu = " + format_double(cfg.params.mu) + "\n";
    out += "model.beta = " + format_double(cfg.params.beta) + "\n";
    out += "model.gamma = " + format_double(cfg.params.gamma) + "\n";
    out += "model.epsilon = " + format_double(cfg.params.epsilon) + "\n";
    out += "model.sigma = " + format_double(cfg.params.sigma) + "\n";
    out += "model.alpha = " + format_double(cfg.params.alpha) + "\n";
    out += "r0 = " + format_double(cfg.r0) + "\n";
    out += "grid.t0 = " + format_double(cfg.grid.t0) + "\n";
    out += "grid.t_end = " + format_double(cfg.grid.t_end) + "\n";
    out += "grid.dt = " + format_double(cfg.grid.dt) + "\n";
    if (cfg.sweep) {
        out += std::string("sweep.parameter = ") + sweep_parameter_name(cfg.sweep->parameter) + "\n";
        out += "sweep.values = " + join_numbers(cfg.sweep->values) + "\n";
    }
    if (cfg.ensemble) {
        out += "ensemble.n_paths = " + std::to_string(cfg.ensemble->n_paths) + "\n";
        out += "ensemble.base_seed = " + std::to_string(cfg.ensemble->base_seed) + "\n";
        out += "ensemble.burn_in = " + format_double(cfg.ensemble->burn_in) + "\n";
        out += "ensemble.n_bins = " + std::to_string(cfg.ensemble->n_bins) + "\n";
    }
    out += std::string("overlay.deterministic = ") +
           (cfg.overlay_deterministic ? "true" : "false") + "\n";
    out += std::string("output.csv = ") + (cfg.outputs.csv ? "true" : "false") + "\n";
    out += std::string("output.svg = ") + (cfg.outputs.svg ? "true" : "false") + "\n";
    out += std::string("output.report = ") + (cfg.outputs.report ? "true" : "false") + "\n";
    return out;
}

void validate_config(const ScenarioConfig& cfg) {
    cfg.params.validate();
    if (!cfg.thresholds_only && !(cfg.r0 > 0.0 && cfg.r0 < cfg.params.N))
        throw ConfigError("r0 must lie strictly between 0 and model.N", "r0");
    if (cfg.sweep) {
        for (double v : cfg.sweep->values) {
            switch (cfg.sweep->parameter) {
                case SweepParameter::Gamma:
                    if (v < 0.0)
                        throw ConfigError("sweep over gamma requires non-negative values",
                                          "sweep.values");
                    break;
                case SweepParameter::Sigma:
                    if (v < 0.0)
                        throw ConfigError("sweep over sigma requires non-negative values",
                                          "sweep.values");
                    break;
                case SweepParameter::Alpha:
                    if (!(v > 0.0 && v <= 1.0))
                        throw ConfigError("sweep over alpha requires values in (0, 1]",
                                          "sweep.values");
                    break;
            }
        }
    }
    if (cfg.ensemble) {
        if (cfg.engine != RunEngine::Sde)
            throw ConfigError("ensemble settings require engine = sde", "ensemble.n_paths");
        if (cfg.ensemble->n_paths < 1)
            throw ConfigError("ensemble.n_paths must be at least 1", "ensemble.n_paths");
        if (!(cfg.ensemble->burn_in >= 0.0 && cfg.ensemble->burn_in < 1.0))
            throw ConfigError("ensemble.burn_in must lie in [0, 1)", "ensemble.burn_in");
        if (cfg.ensemble->n_bins < 2)
            throw ConfigError("ensemble.n_bins must be at least 2", "ensemble.n_bins");
    }
    if (cfg.overlay_deterministic && cfg.engine != RunEngine::Sde)
        throw ConfigError("overlay.deterministic requires engine = sde", "overlay.deterministic");
}

}  // namespace amrtriad
