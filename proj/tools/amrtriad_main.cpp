// amrtriad command line interface.
//
// Subcommands:
//   thresholds  print the threshold/equilibrium table for a config (or the
//               built-in gamma table when no config is given)
//   simulate    run a scenario config and write CSV/SVG/report artifacts
//   ensemble    same, but requires an ensemble section (engine = sde)
//   figure      run a built-in preset (figure1..figure5, thresholds-table)
//   validate    run the fast built-in oracle checks, one PASS/FAIL line each
//
// Global flags --config/--out/--seed/--threads can also be set through the
// environment as AMRTRIAD_CONFIG, AMRTRIAD_OUT, AMRTRIAD_SEED,
// AMRTRIAD_THREADS.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amrtriad/analysis.hpp"
#include "amrtriad/caputo.hpp"
#include "amrtriad/config.hpp"
#include "amrtriad/csv.hpp"
#include "amrtriad/errors.hpp"
#include "amrtriad/mittag_leffler.hpp"
#include "amrtriad/model.hpp"
#include "amrtriad/ode.hpp"
#include "amrtriad/scenario.hpp"
#include "amrtriad/sde.hpp"

namespace {

using namespace amrtriad;

const char* regime_short(Regime r) {
    switch (r) {
        case Regime::Extinction: return "ext";
        case Regime::Persistence: return "per";
        case Regime::Indeterminate: return "ind";
    }
    return "ind";
}

int cmd_thresholds(const ScenarioConfig& cfg) {
    struct Row {
        double value;
        ModelParams params;
    };
    std::vector<Row> rows;
    const char* col = "value";
    if (cfg.sweep) {
        col = sweep_parameter_name(cfg.sweep->parameter);
        for (double v : cfg.sweep->values) {
            ModelParams p = cfg.params;
            switch (cfg.sweep->parameter) {
                case SweepParameter::Gamma: p.gamma = v; break;
                case SweepParameter::Sigma: p.sigma = v; break;
                case SweepParameter::Alpha: p.alpha = v; break;
            }
            rows.push_back({v, p});
        }
    } else {
        col = "gamma";
        rows.push_back({cfg.params.gamma, cfg.params});
    }

    std::printf("%-8s %-12s %-12s %-12s %-14s %-14s %s\n", col, "k0_d", "k0_s", "k0_f", "xi_d",
                "xi_s", "regime d/s/f");
    for (const Row& row : rows) {
        const ThresholdReport th = compute_thresholds(row.params);
        char xd[24] = "-", xs[24] = "-";
        if (th.xi_d) std::snprintf(xd, sizeof xd, "%.10g", *th.xi_d);
        if (th.xi_s) std::snprintf(xs, sizeof xs, "%.10g", *th.xi_s);
        std::printf("%-8g %-12.10g %-12.10g %-12.10g %-14s %-14s %s/%s/%s\n", row.value, th.k0_d,
                    th.k0_s, th.k0_f, xd, xs, regime_short(th.regime_d), regime_short(th.regime_s),
                    regime_short(th.regime_f));
    }
    return 0;
}

void print_artifacts(const RunArtifacts& art) {
    for (const auto& f : art.files) std::printf("wrote %s\n", f.string().c_str());
}

// Fast self-checks against frozen reference values; the heavyweight
// acceptance suite lives in the test tree. Each check prints one line.
int cmd_validate() {
    int failed = 0;
    const auto check = [&](const char* name, bool ok, const std::string& detail = "") {
        if (ok)
            std::printf("[PASS] %s\n", name);
        else {
            std::printf("[FAIL] %s%s%s\n", name, detail.empty() ? "" : ": ", detail.c_str());
            ++failed;
        }
    };

    ModelParams table;  // N=1e6, mu=0.1, beta=5e-7, gamma=0, epsilon=1e-6
    table.sigma = 1e-7;

    {
        const ThresholdReport th = compute_thresholds(table);
        check("thresholds: k0_d = 5 and k0_s = 4.95 at the reference parameters",
              std::fabs(th.k0_d - 5.0) <= 5e-12 && std::fabs(th.k0_s - 4.95) <= 5e-12 &&
                  th.k0_f == th.k0_d);
    }
    {
        const double xi_d = equilibrium_deterministic(table);
        const double xi_s = equilibrium_stochastic(table);
        check("equilibria: deterministic 666666.67, stochastic 666109.06",
              std::fabs(xi_d - 666666.6666666667) <= 0.01 &&
                  std::fabs(xi_s - 666109.0643298335) <= 1e-5);
    }
    {
        const bool a = std::fabs(mittag_leffler(1.0, -1.0) - std::exp(-1.0)) <= 1e-15;
        const bool b = std::fabs(mittag_leffler(0.7, -0.1) - 0.8975611269313868) <= 1e-12;
        const double lo = mittag_leffler(0.75, -10.0 - 1e-9);
        const double hi = mittag_leffler(0.75, -10.0 + 1e-9);
        check("mittag-leffler: reference values and branch continuity",
              a && b && std::fabs(lo - hi) <= 1e-8);
    }
    {
        ModelParams p;
        p.gamma = 2.0;
        const TimeGrid coarse(0.0, 10.0, 0.01), fine(0.0, 10.0, 0.005);
        const double r1 = integrate_ode(p, p.N - 1.0, coarse).terminal();
        const double r2 = integrate_ode(p, p.N - 1.0, fine).terminal();
        const TimeGrid finest(0.0, 10.0, 0.0025);
        const double r3 = integrate_ode(p, p.N - 1.0, finest).terminal();
        const double order = std::log2(std::fabs(r1 - r2) / std::fabs(r2 - r3));
        check("rk4: empirical convergence order at least 3.9",
              order >= 3.9, "measured order " + std::to_string(order));
    }
    {
        ModelParams p = table;
        p.sigma = 5e-7;
        p.gamma = 2.0;
        const TimeGrid grid(0.0, 1.0, 1e-3);
        NoisePlan plan;
        plan.seed = 7;
        const Trajectory a = simulate_path(p, p.N - 1.0, grid, plan);
        const Trajectory b = simulate_path(p, p.N - 1.0, grid, plan);
        check("sde: identical seeds give identical paths", a.values == b.values);
    }
    {
        ModelParams p;
        p.gamma = 0.2;
        const TimeGrid grid(0.0, 10.0, 0.01);
        NoisePlan plan;
        plan.seed = 3;
        const Trajectory em = simulate_path(p, 1e3, grid, plan);  // sigma = 0
        double r = 1e3;
        double worst = 0.0;
        for (std::size_t i = 1; i < em.values.size(); ++i) {
            r += grid.dt * drift(r, p);
            worst = std::max(worst, std::fabs(r - em.values[i]));
        }
        check("sde: zero-noise path equals explicit Euler", worst <= 1e-12 * p.N);
    }
    {
        ModelParams p;
        p.gamma = 0.2;
        p.alpha = 1.0;
        const TimeGrid grid(0.0, 10.0, 0.01);
        const Trajectory ode = integrate_ode(p, 1e3, grid);
        const Trajectory fde = integrate_caputo(make_model_problem(p, 1e3, grid));
        double worst = 0.0;
        for (std::size_t i = 0; i < ode.values.size(); ++i)
            worst = std::max(worst, std::fabs(fde.values[i] - ode.values[i]) /
                                        std::max(1.0, std::fabs(ode.values[i])));
        check("fde: order-1 solver matches the deterministic engine within 1e-4", worst <= 1e-4);
    }
    {
        CaputoProblem prob;
        prob.R0 = 1.0;
        prob.alpha = 0.7;
        prob.grid = TimeGrid(0.0, 1.0, 1e-3);
        prob.rhs = [](double, double R) { return -0.1 * R; };
        const double got = integrate_caputo(prob).terminal();
        const double want = mittag_leffler(0.7, -0.1);
        check("fde: linear problem matches its Mittag-Leffler closed form within 1e-3",
              std::fabs(got - want) / want <= 1e-3);
    }
    {
        ModelParams p = table;
        const TimeGrid grid(0.0, 5.0, 0.01);
        const EnsembleResult ens = simulate_ensemble(p, p.N - 1.0, grid, 4, 99);
        const Histogram h = stationary_histogram(ens, 0.5, 20);
        double mass = 0.0;
        for (double m : h.bin_mass) mass += m;
        check("analysis: histogram mass sums to one", std::fabs(mass - 1.0) <= 1e-12);
    }
    {
        bool ok = true;
        for (const std::string& name : preset_names())
            for (const ScenarioConfig& panel : preset(name).panels)
                ok = ok && parse_config(serialize_config(panel)) == panel;
        check("config: every preset round-trips through serialize/parse", ok);
    }

    std::printf("%d/10 checks passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resistance-reversal population dynamics: deterministic, stochastic, and "
                 "fractional-order simulation"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "amrtriad 1.0.0");

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    int threads = 1;

    auto* opt_config =
        app.add_option("--config", config_path, "scenario configuration file")
            ->envname("AMRTRIAD_CONFIG");
    app.add_option("--out", out_dir, "output directory (default: current directory)")
        ->envname("AMRTRIAD_OUT");
    auto* opt_seed =
        app.add_option("--seed", seed, "override every base seed in the scenario")
            ->envname("AMRTRIAD_SEED");
    app.add_option("--threads", threads, "worker threads for ensemble runs")
        ->check(CLI::PositiveNumber)
        ->envname("AMRTRIAD_THREADS");

    auto* sub_thresholds =
        app.add_subcommand("thresholds", "print thresholds and equilibria as a table");
    auto* sub_simulate = app.add_subcommand("simulate", "run a scenario configuration");
    auto* sub_ensemble =
        app.add_subcommand("ensemble", "run an ensemble scenario (requires ensemble settings)");
    auto* sub_figure = app.add_subcommand("figure", "run a built-in figure preset");
    std::string preset_name;
    sub_figure->add_option("preset", preset_name, "one of: figure1 figure2 figure3 figure4 figure5 thresholds-table")
        ->required();
    auto* sub_validate = app.add_subcommand("validate", "run the fast built-in oracle checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        RunOptions opt;
        opt.out_dir = out_dir;
        opt.n_threads = threads;
        if (opt_seed->count() > 0) opt.seed_override = seed;

        if (sub_thresholds->parsed()) {
            ScenarioConfig cfg;
            if (opt_config->count() > 0)
                cfg = load_config_file(config_path);
            else
                cfg = preset("thresholds-table").panels.front();
            return cmd_thresholds(cfg);
        }
        if (sub_simulate->parsed() || sub_ensemble->parsed()) {
            if (opt_config->count() == 0)
                throw ConfigError("simulate/ensemble require --config (or AMRTRIAD_CONFIG)");
            const ScenarioConfig cfg = load_config_file(config_path);
            if (sub_ensemble->parsed() && !cfg.ensemble)
                throw ConfigError(
                    "the ensemble subcommand needs ensemble.* settings (engine = sde)",
                    "ensemble.n_paths");
            const std::string stem = cfg.label.empty() ? "scenario" : cfg.label;
            const RunArtifacts art = run_scenario(cfg, stem, opt);
            print_artifacts(art);
            return 0;
        }
        if (sub_figure->parsed()) {
            const RunArtifacts art = run_plan(preset(preset_name), opt);
            print_artifacts(art);
            return 0;
        }
        if (sub_validate->parsed()) return cmd_validate();
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
