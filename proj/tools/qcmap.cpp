// qcmap - scenario runner.
//
//   qcmap lz --config configs/fig1_v02.cfg --out-dir out
//   qcmap sweep --config configs/sweep_lz.cfg --out-dir out/sweep --no-plot
//
// Exit status: 0 success, 1 invalid input, 2 numerical failure.

#include "qcmap/output.hpp"
#include "qcmap/runner.hpp"
#include "qcmap/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qcmap;

struct Options {
    std::string config;
    std::optional<std::string> out_dir;
    std::optional<double> rtol, atol;
    std::optional<int> samples;
    std::optional<std::string> schemes;
    bool no_plot{false};
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--config", o.config, "Scenario file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out-dir", o.out_dir, "Output directory (default: config out_dir or .)");
    cmd->add_option("--rtol", o.rtol, "Relative tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--atol", o.atol, "Absolute tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--samples", o.samples, "Number of output samples")->check(CLI::Range(2, 10000000));
    cmd->add_option("--schemes", o.schemes, "Comma-separated subset of quantum,exact,rca,doubled,gate");
    cmd->add_flag("--no-plot", o.no_plot, "Skip the SVG plot");
}

ScenarioConfig load(const Options& o) {
    ScenarioConfig cfg = load_scenario(o.config);
    if (o.out_dir) cfg.out_dir = *o.out_dir;
    if (o.rtol) cfg.integrator.rtol = *o.rtol;
    if (o.atol) cfg.integrator.atol = *o.atol;
    if (o.samples) cfg.integrator.sample_count = *o.samples;
    if (o.no_plot) cfg.write_plot = false;
    if (o.schemes) {
        cfg.schemes.clear();
        for (auto s : detail::split(*o.schemes, ',')) cfg.schemes.push_back(parse_scheme(s));
    }
    validate(cfg);
    return cfg;
}

void print_summary(const ScenarioResult& r, const std::vector<std::string>& files) {
    const auto& rep = r.report;
    std::printf("%s (%s)\n", rep.scenario.c_str(), rep.kind.c_str());
    for (const auto& p : rep.pairs) {
        std::printf("  %-8s vs %-8s max |dP| = %.3e at t = %.4g (tail %.3e)\n", p.a.c_str(), p.b.c_str(),
                    p.max_diff, p.time_of_max, p.tail_max_diff);
    }
    if (rep.zener) {
        std::printf("  Zener exp(-pi V^2/A) = %.4f, quantum P1(t1) = %.4f\n", rep.zener->prediction,
                    rep.zener->quantum_final);
    }
    if (rep.drive_residual && rep.drive_residual->maxCoeff() > 0.0) {
        std::printf("  driven RCA shorthand residual amplitude = %.3e\n", rep.drive_residual->maxCoeff());
    }
    if (rep.gate) {
        std::printf("  schedule vs matrix (mod global phase) = %.3e over %zu windows, coupling time %.4g\n",
                    rep.gate->distance, rep.gate->windows, rep.gate->total_duration);
        if (rep.gate->entanglement) {
            std::printf("  entropy %.6f, concurrence %.6f\n", rep.gate->entanglement->entropy,
                        rep.gate->entanglement->concurrence);
        }
    }
    for (const auto& f : files) std::printf("  wrote %s\n", f.c_str());
}

void require_kind(const ScenarioConfig& cfg, const std::string& cmd) {
    auto fail = [&](const std::string& need) {
        throw ValidationError("'" + cmd + "' expects " + need + " (config '" + cfg.name + "')");
    };
    if (cmd == "gate") {
        if (!cfg.has(Scheme::Gate)) fail("a [circuit] scenario with schemes = gate");
        return;
    }
    if (cmd == "compare" || cmd == "sweep") return;
    if (!cfg.hamiltonian) fail("a Hamiltonian section");
    const auto k = cfg.hamiltonian->kind;
    if (cmd == "lz" && !is_time_dependent(k)) fail("an LZLinear or LZArctan Hamiltonian");
    if (cmd == "dissipative" && k != HamiltonianKind::DissipativeTwoLevel && k != HamiltonianKind::GeneralComplexStatic) {
        fail("a DissipativeTwoLevel or GeneralComplexStatic Hamiltonian");
    }
    if (cmd == "driven" && k != HamiltonianKind::DrivenDissipative) fail("a DrivenDissipative Hamiltonian");
}

int run_single(const Options& o, const std::string& cmd) {
    const ScenarioConfig cfg = load(o);
    require_kind(cfg, cmd);
    const ScenarioResult r = run_scenario(cfg);
    print_summary(r, write_outputs(r, cfg.out_dir, cfg.write_plot));
    return 0;
}

int run_sweep_cmd(const Options& o) {
    const ScenarioConfig cfg = load(o);
    const auto results = run_sweep(cfg);
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& r : results) {
        const auto files = write_outputs(r, cfg.out_dir, cfg.write_plot);
        print_summary(r, files);
        nlohmann::json row = report_json(r.report);
        const auto& h = *r.config.hamiltonian;
        const nlohmann::json params = {{"E1", h.E1}, {"E2", h.E2}, {"V", h.V}, {"E0", h.E0}, {"A", h.A},
                  {"lambda1", h.lambda1}, {"lambda2", h.lambda2}, {"mu1", h.mu1}, {"mu2", h.mu2},
                  {"omega_drive", h.omega_drive}};
        row["parameters"] = params;
        summary.push_back(row);
    }
    const std::string path = (std::filesystem::path(cfg.out_dir) / (cfg.name + "_summary.json")).string();
    detail::write_file(path, summary.dump(2) + "\n");
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum dynamics as coupled classical oscillators: scenario runner"};
    app.require_subcommand(1);

    Options opts;
    std::string chosen;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"lz", "Landau-Zener sweep (LZLinear / LZArctan)"},
        {"dissipative", "Non-Hermitian two-level decay"},
        {"driven", "Driven dissipative pair"},
        {"gate", "Qubit circuit: matrix path vs oscillator schedule"},
        {"compare", "Any scenario, all selected schemes"},
        {"sweep", "Cartesian parameter grid from the [sweep] section, run concurrently"},
    };
    for (const auto& [name, help] : commands) {
        auto* cmd = app.add_subcommand(name, help);
        add_common(cmd, opts);
        cmd->callback([&chosen, n = name] { chosen = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return chosen == "sweep" ? run_sweep_cmd(opts) : run_single(opts, chosen);
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
