#include "amrtriad/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "amrtriad/analysis.hpp"
#include "amrtriad/caputo.hpp"
#include "amrtriad/csv.hpp"
#include "amrtriad/errors.hpp"
#include "amrtriad/ode.hpp"
#include "amrtriad/sde.hpp"
#include "amrtriad/svg.hpp"

namespace amrtriad {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Short value form for file names and labels ("%g": 0.1, 1.25, 2e-06).
std::string token(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string short10(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Extinction: return "extinction";
        case Regime::Persistence: return "persistence";
        case Regime::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

const char* outcome_name(Outcome::Kind k) {
    switch (k) {
        case Outcome::Kind::Extinct: return "Extinct";
        case Outcome::Kind::Persistent: return "Persistent";
        case Outcome::Kind::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

std::vector<Engine> engines_of(RunEngine e) {
    switch (e) {
        case RunEngine::Ode: return {Engine::Ode};
        case RunEngine::Sde: return {Engine::Sde};
        case RunEngine::Fde: return {Engine::Fde};
        case RunEngine::All: return {Engine::Ode, Engine::Sde, Engine::Fde};
    }
    return {Engine::Ode};
}

void apply_sweep(ModelParams& p, SweepParameter sp, double v) {
    switch (sp) {
        case SweepParameter::Gamma: p.gamma = v; break;
        case SweepParameter::Sigma: p.sigma = v; break;
        case SweepParameter::Alpha: p.alpha = v; break;
    }
}

// True when the swept parameter changes the deterministic vector field, so a
// deterministic overlay must be recomputed per sweep value.
bool sweep_affects_drift(SweepParameter sp) { return sp == SweepParameter::Gamma; }

struct CellResult {
    Engine engine = Engine::Ode;
    std::optional<double> sweep_value;
    ModelParams params;
    ThresholdReport thresholds;
    std::optional<Trajectory> traj;
    std::optional<Histogram> hist;
    std::optional<double> ens_mean_terminal;
    std::optional<double> ens_var_terminal;
    std::optional<Outcome> outcome;
    std::optional<std::uint64_t> seed;
    std::int64_t n_paths = 0;
    std::int64_t clamp_total = 0;
    double runtime_ms = 0.0;
    std::string csv_name;
};

std::string cell_coordinates(const ScenarioConfig& cfg, const CellResult& cell) {
    std::string s = std::string("engine=") + engine_name(cell.engine);
    if (cell.sweep_value)
        s += std::string(" ") + sweep_parameter_name(cfg.sweep->parameter) + "=" +
             token(*cell.sweep_value);
    return s;
}

std::vector<double> grid_times(const TimeGrid& g) {
    std::vector<double> t(static_cast<std::size_t>(g.n_points()));
    for (std::int64_t i = 0; i < g.n_points(); ++i) t[static_cast<std::size_t>(i)] = g.time(i);
    return t;
}

void append_cell_report(std::string& rep, const ScenarioConfig& cfg, const CellResult& cell) {
    rep += "[cell " + cell_coordinates(cfg, cell) + "]\n";
    const ThresholdReport& th = cell.thresholds;
    rep += "  thresholds: k0_d=" + short10(th.k0_d) + " (" + regime_name(th.regime_d) +
           "), k0_s=" + short10(th.k0_s) + " (" + regime_name(th.regime_s) +
           "), k0_f=" + short10(th.k0_f) + " (" + regime_name(th.regime_f) + ")\n";
    rep += "  equilibria: xi_d=" + (th.xi_d ? short10(*th.xi_d) : std::string("none")) +
           ", xi_s=" + (th.xi_s ? short10(*th.xi_s) : std::string("none")) + "\n";
    if (cell.outcome) {
        const Outcome& oc = *cell.outcome;
        rep += std::string("  outcome: ") + outcome_name(oc.kind) +
               ", terminal=" + short10(oc.terminal_value);
        if (oc.attractor_estimate) rep += ", attractor=" + short10(*oc.attractor_estimate);
        if (oc.log_slope) rep += ", log_slope=" + short10(*oc.log_slope);
        rep += "\n";
    }
    if (cell.hist) {
        rep += "  ensemble: n_paths=" + std::to_string(cell.n_paths) +
               ", base_seed=" + std::to_string(cell.seed.value_or(0)) +
               ", histogram_mean=" + short10(cell.hist->mean()) +
               ", terminal_mean=" + short10(cell.ens_mean_terminal.value_or(0.0)) +
               ", terminal_variance=" + short10(cell.ens_var_terminal.value_or(0.0)) + "\n";
    } else if (cell.seed) {
        rep += "  seed: " + std::to_string(*cell.seed) + " (mt19937_64, inverse-CDF increments)\n";
    }
    rep += "  boundary interventions: " + std::to_string(cell.clamp_total) + "\n";
    if (cell.engine == Engine::Sde) {
        const double noise_scale = cell.params.sigma * cell.params.sigma * cell.params.N;
        rep += "  noise scale: sigma^2*N=" + short10(noise_scale) + " vs beta=" +
               short10(cell.params.beta);
        rep += (noise_scale > cell.params.beta)
                   ? " -> outside the small-noise persistence hypothesis\n"
                   : " -> small-noise persistence hypothesis holds\n";
    }
    if (cell.engine == Engine::Fde) {
        // Diagnostics only; the stated invariance interval and the persistence
        // side condition are reported, never enforced (the reference figures
        // themselves run outside them).
        if (!(cfg.r0 > 0.0 && cfg.r0 < th.k0_f))
            rep += "  note: R0=" + short10(cfg.r0) +
                   " lies outside the stated invariance interval (0, " + short10(th.k0_f) +
                   "); reproduced as configured\n";
        const double gm = cell.params.gamma + cell.params.mu;
        const double lower = (cell.params.beta * cell.params.N - gm) /
                                 (cell.params.beta * cell.params.N) -
                             cell.params.beta / gm;
        rep += "  persistence side condition: lower=" + short10(lower) +
               ", epsilon=" + short10(cell.params.epsilon) + ", upper=1; lower<epsilon " +
               (lower < cell.params.epsilon ? "holds" : "fails") + ", epsilon<1 " +
               (cell.params.epsilon < 1.0 ? "holds" : "fails") + " (reported, not enforced)\n";
    }
    if (!cell.csv_name.empty()) rep += "  csv: " + cell.csv_name + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "  runtime: %.1f ms\n", cell.runtime_ms);
    rep += buf;
    rep += "\n";
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"figure1", "figure2", "figure3", "figure4", "figure5", "thresholds-table"};
}

ScenarioPlan preset(const std::string& name) {
    ScenarioPlan plan;
    plan.name = name;

    ScenarioConfig base;
    base.params.sigma = 1e-6;
    base.params.alpha = 0.7;

    if (name == "figure1") {
        // Extinction: all three engines, gamma sweep, start near N.
        ScenarioConfig c = base;
        c.engine = RunEngine::All;
        c.r0 = c.params.N - 1.0;
        c.grid = TimeGrid(0.0, 50.0, 0.01);
        c.sweep = SweepSpec{SweepParameter::Gamma, {1.0, 1.25, 1.5, 1.75, 2.0}};
        c.label = "extinction";
        plan.panels = {c};
    } else if (name == "figure2") {
        // Persistence: all three engines, small gamma sweep, start at 1.
        ScenarioConfig c = base;
        c.engine = RunEngine::All;
        c.r0 = 1.0;
        c.grid = TimeGrid(0.0, 200.0, 0.01);
        c.sweep = SweepSpec{SweepParameter::Gamma, {0.0, 0.1, 0.2, 0.3, 0.4}};
        c.label = "persistence";
        plan.panels = {c};
    } else if (name == "figure3") {
        // Stochastic vs deterministic, sigma sweep, two panels.
        ScenarioConfig a;
        a.engine = RunEngine::Sde;
        a.params.alpha = 1.0;
        a.params.gamma = 2.0;
        a.r0 = a.params.N - 1.0;
        a.grid = TimeGrid(0.0, 50.0, 1e-3);
        a.sweep = SweepSpec{SweepParameter::Sigma, {1e-6, 2e-6, 3e-6, 4e-6, 5e-6}};
        a.overlay_deterministic = true;
        a.label = "extinction";
        ScenarioConfig b = a;
        b.params.gamma = 0.0;
        b.r0 = 1.0;
        b.grid = TimeGrid(0.0, 200.0, 1e-3);
        b.label = "persistence";
        plan.panels = {a, b};
    } else if (name == "figure4") {
        // Fractional order sweep, two panels.
        ScenarioConfig a;
        a.engine = RunEngine::Fde;
        a.params.gamma = 1.5;
        a.r0 = a.params.N - 1.0;
        a.grid = TimeGrid(0.0, 50.0, 0.01);
        a.sweep = SweepSpec{SweepParameter::Alpha, {0.5, 0.6, 0.7, 0.8}};
        a.label = "extinction";
        ScenarioConfig b = a;
        b.params.gamma = 0.2;
        b.r0 = 1.0;
        b.grid = TimeGrid(0.0, 200.0, 0.01);
        b.label = "persistence";
        plan.panels = {a, b};
    } else if (name == "figure5") {
        // Stationary histograms across gamma, seeded ensembles.
        ScenarioConfig c;
        c.engine = RunEngine::Sde;
        c.params.sigma = 1e-7;
        c.r0 = c.params.N - 1.0;
        c.grid = TimeGrid(0.0, 300.0, 0.01);
        c.sweep = SweepSpec{SweepParameter::Gamma, {0.0, 0.1, 0.2, 0.3, 0.4}};
        c.ensemble = EnsembleSpec{200, 1, 0.5, 60};
        c.label = "stationary";
        plan.panels = {c};
    } else if (name == "thresholds-table") {
        ScenarioConfig c;
        c.engine = RunEngine::Ode;
        c.params.sigma = 1e-7;
        c.thresholds_only = true;
        c.sweep = SweepSpec{SweepParameter::Gamma,
                            {0.0, 0.1, 0.2, 0.3, 0.4, 1.0, 1.25, 1.5, 1.75, 2.0}};
        c.label = "thresholds";
        plan.panels = {c};
    } else {
        throw ConfigError("unknown preset \"" + name + "\"");
    }
    return plan;
}

RunArtifacts run_scenario(const ScenarioConfig& cfg, const std::string& stem,
                          const RunOptions& opt) {
    RunArtifacts art;
    const auto emit = [&](const std::string& name, const std::string& content) {
        const fs::path full = opt.out_dir / name;
        atomic_write_file(full, content);
        art.files.push_back(full);
    };

    try {
        validate_config(cfg);
        const auto run_start = Clock::now();

        const std::vector<Engine> engines = engines_of(cfg.engine);
        std::vector<std::optional<double>> values;
        if (cfg.sweep)
            for (double v : cfg.sweep->values) values.emplace_back(v);
        else
            values.emplace_back(std::nullopt);

        // Execute every (engine, sweep value) cell.
        std::vector<CellResult> cells;
        for (Engine eng : engines) {
            for (std::size_t vi = 0; vi < values.size(); ++vi) {
                CellResult cell;
                cell.engine = eng;
                cell.sweep_value = values[vi];
                cell.params = cfg.params;
                if (cell.sweep_value) apply_sweep(cell.params, cfg.sweep->parameter, *values[vi]);

                try {
                    cell.thresholds = compute_thresholds(cell.params);
                    if (!cfg.thresholds_only) {
                        const auto t0 = Clock::now();
                        switch (eng) {
                            case Engine::Ode:
                                cell.traj = integrate_ode(cell.params, cfg.r0, cfg.grid);
                                break;
                            case Engine::Fde:
                                cell.traj =
                                    integrate_caputo(make_model_problem(cell.params, cfg.r0, cfg.grid));
                                break;
                            case Engine::Sde:
                                if (cfg.ensemble) {
                                    const std::uint64_t base =
                                        opt.seed_override.value_or(cfg.ensemble->base_seed);
                                    EnsembleResult ens = simulate_ensemble(
                                        cell.params, cfg.r0, cfg.grid, cfg.ensemble->n_paths,
                                        base, opt.n_threads);
                                    cell.hist = stationary_histogram(ens, cfg.ensemble->burn_in,
                                                                     cfg.ensemble->n_bins);
                                    cell.seed = base;
                                    cell.n_paths = ens.n_paths;
                                    cell.ens_mean_terminal = ens.per_time_mean.back();
                                    cell.ens_var_terminal = ens.per_time_variance.back();
                                    for (const Trajectory& p : ens.paths)
                                        cell.clamp_total += p.clamp_events;
                                    Trajectory mean_traj{grid_times(cfg.grid), ens.per_time_mean,
                                                         cell.params, Engine::Sde, base, 0};
                                    cell.outcome = classify_outcome(mean_traj, cell.params);
                                } else {
                                    const std::uint64_t seed =
                                        opt.seed_override.value_or(1) + vi;
                                    NoisePlan plan;
                                    plan.seed = seed;
                                    cell.traj = simulate_path(cell.params, cfg.r0, cfg.grid, plan);
                                    cell.seed = seed;
                                }
                                break;
                        }
                        cell.runtime_ms =
                            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
                        if (cell.traj) {
                            cell.outcome = classify_outcome(*cell.traj, cell.params);
                            cell.clamp_total = cell.traj->clamp_events;
                            cell.n_paths = 1;
                        }
                    }
                } catch (const Error& err) {
                    throw Error("cell " + cell_coordinates(cfg, cell) + ": " + err.what());
                }

                if (!cfg.thresholds_only && cfg.outputs.csv) {
                    std::string name = stem + "_" + engine_name(eng);
                    if (cell.sweep_value)
                        name += std::string("_") + sweep_parameter_name(cfg.sweep->parameter) +
                                "_" + token(*cell.sweep_value);
                    name += cell.hist ? "_hist.csv" : ".csv";
                    emit(name, cell.hist ? histogram_csv(*cell.hist)
                                         : trajectory_csv(*cell.traj));
                    cell.csv_name = name;
                }
                cells.push_back(std::move(cell));
            }
        }

        // Deterministic overlay curves for stochastic panels.
        std::vector<std::pair<std::string, Trajectory>> overlays;
        if (cfg.overlay_deterministic && !cfg.thresholds_only && !cfg.ensemble) {
            if (cfg.sweep && sweep_affects_drift(cfg.sweep->parameter)) {
                for (double v : cfg.sweep->values) {
                    ModelParams p = cfg.params;
                    apply_sweep(p, cfg.sweep->parameter, v);
                    overlays.emplace_back(
                        std::string("det ") + sweep_parameter_name(cfg.sweep->parameter) + "=" +
                            token(v),
                        integrate_ode(p, cfg.r0, cfg.grid));
                }
            } else {
                overlays.emplace_back("deterministic", integrate_ode(cfg.params, cfg.r0, cfg.grid));
            }
            if (cfg.outputs.csv) {
                for (std::size_t i = 0; i < overlays.size(); ++i) {
                    const std::string name =
                        stem + "_ode_overlay" +
                        (overlays.size() > 1 ? "_" + std::to_string(i) : std::string()) + ".csv";
                    emit(name, trajectory_csv(overlays[i].second));
                }
            }
        }

        // One combined SVG per engine; one histogram SVG per ensemble cell.
        if (!cfg.thresholds_only && cfg.outputs.svg) {
            for (Engine eng : engines) {
                SvgChart chart;
                chart.title = stem + " (" + engine_name(eng) + ")";
                chart.x_label = "t (days)";
                chart.y_label = "R(t)";
                for (const CellResult& cell : cells) {
                    if (cell.engine != eng || !cell.traj) continue;
                    std::string label =
                        cell.sweep_value
                            ? std::string(sweep_parameter_name(cfg.sweep->parameter)) + "=" +
                                  token(*cell.sweep_value)
                            : std::string(engine_name(eng));
                    chart.series.push_back(
                        SvgSeries{std::move(label), cell.traj->times, cell.traj->values, false});
                }
                if (eng == Engine::Sde)
                    for (const auto& [label, traj] : overlays)
                        chart.series.push_back(SvgSeries{label, traj.times, traj.values, true});
                if (!chart.series.empty())
                    emit(stem + "_" + engine_name(eng) + ".svg", render_line_chart(chart));
            }
            for (const CellResult& cell : cells) {
                if (!cell.hist) continue;
                std::string name = stem + "_" + engine_name(cell.engine);
                std::string title = stem;
                if (cell.sweep_value) {
                    const std::string tag =
                        std::string(sweep_parameter_name(cfg.sweep->parameter)) + "=" +
                        token(*cell.sweep_value);
                    name += "_" + std::string(sweep_parameter_name(cfg.sweep->parameter)) + "_" +
                            token(*cell.sweep_value);
                    title += " (" + tag + ")";
                }
                emit(name + "_hist.svg", render_histogram_chart(*cell.hist, title, "R"));
            }
        }

        // Report: configuration echo (defaults included), cells, totals.
        if (cfg.outputs.report) {
            std::string rep = "# run report: " + stem + "\n\n";
            rep += "## configuration (defaults applied)\n";
            rep += serialize_config(cfg);
            rep += "\n## grid\n";
            rep += "t0=" + short10(cfg.grid.t0) + ", t_end=" + short10(cfg.grid.t_end) +
                   ", dt=" + short10(cfg.grid.dt) +
                   ", points=" + std::to_string(cfg.grid.n_points()) + "\n\n";
            rep += "## cells\n";
            for (const CellResult& cell : cells) append_cell_report(rep, cfg, cell);
            const double total_ms =
                std::chrono::duration<double, std::milli>(Clock::now() - run_start).count();
            char buf[64];
            std::snprintf(buf, sizeof buf, "## totals\ntotal runtime: %.1f ms\n", total_ms);
            rep += buf;
            rep += "cells: " + std::to_string(cells.size()) + "\n";
            art.report_text = rep;
            emit(stem + "_report.txt", rep);
        }
    } catch (...) {
        // A failed scenario leaves no partial artifact set behind.
        for (const fs::path& f : art.files) {
            std::error_code ec;
            fs::remove(f, ec);
        }
        throw;
    }
    return art;
}

RunArtifacts run_plan(const ScenarioPlan& plan, const RunOptions& opt) {
    RunArtifacts all;
    for (std::size_t i = 0; i < plan.panels.size(); ++i) {
        std::string stem = plan.name;
        if (plan.panels.size() > 1) stem += std::string("_") + static_cast<char>('a' + i);
        RunArtifacts one = run_scenario(plan.panels[i], stem, opt);
        all.files.insert(all.files.end(), one.files.begin(), one.files.end());
        all.report_text += one.report_text;
    }
    return all;
}

}  // namespace amrtriad
