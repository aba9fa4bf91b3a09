#include "qcmap/runner.hpp"
#include "qcmap/scenario.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

using namespace qcmap;

namespace {

std::string config_path(const std::string& name) { return std::string(QCMAP_CONFIG_DIR) + "/" + name; }

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_scenario_text(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(Scenario, BundledConfigsParseAndValidate) {
    for (const auto& entry : std::filesystem::directory_iterator(QCMAP_CONFIG_DIR)) {
        if (entry.path().extension() != ".cfg") continue;
        const auto cfg = load_scenario(entry.path().string());
        EXPECT_NO_THROW(validate(cfg)) << entry.path();
        EXPECT_EQ(cfg.name, entry.path().stem().string());
    }
}

TEST(Scenario, LandauZenerConfigFields) {
    const auto cfg = load_scenario(config_path("fig1_v02.cfg"));
    ASSERT_TRUE(cfg.hamiltonian);
    EXPECT_EQ(cfg.hamiltonian->kind, HamiltonianKind::LZLinear);
    EXPECT_DOUBLE_EQ(cfg.hamiltonian->E0, 40);
    EXPECT_DOUBLE_EQ(cfg.hamiltonian->A, 1);
    EXPECT_DOUBLE_EQ(cfg.hamiltonian->V, 0.2);
    EXPECT_DOUBLE_EQ(cfg.t0, -25);
    EXPECT_DOUBLE_EQ(cfg.t1, 25);
    EXPECT_EQ(cfg.integrator.sample_count, 2001);
    EXPECT_EQ(cfg.schemes, (std::vector<Scheme>{Scheme::Quantum, Scheme::Exact, Scheme::RCA}));
    EXPECT_EQ(initial_amplitudes(cfg), (ComplexVector(2) << 1, 0).finished());
}

TEST(Scenario, DissipativeConfigKeepsSignedRates) {
    const auto cfg = load_scenario(config_path("fig2.cfg"));
    ASSERT_TRUE(cfg.hamiltonian);
    EXPECT_EQ(cfg.hamiltonian->kind, HamiltonianKind::DissipativeTwoLevel);
    EXPECT_DOUBLE_EQ(cfg.hamiltonian->lambda1, 0.0);
    EXPECT_DOUBLE_EQ(cfg.hamiltonian->lambda2, -0.2);
}

TEST(Scenario, CircuitConfig) {
    const auto cfg = load_scenario(config_path("cnot.cfg"));
    ASSERT_TRUE(cfg.circuit);
    EXPECT_EQ(cfg.circuit->n_qubits, 2);
    const auto expect = cnot_decomposition_gates();
    ASSERT_EQ(cfg.circuit->gates.size(), expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
        EXPECT_EQ(cfg.circuit->gates[k].kind, expect[k].kind) << k;
        EXPECT_EQ(cfg.circuit->gates[k].targets, expect[k].targets) << k;
        EXPECT_NEAR(cfg.circuit->gates[k].angle, expect[k].angle, 1e-15) << k;
    }
    EXPECT_EQ(initial_amplitudes(cfg), basis_state("|10>").amplitudes);
}

TEST(Scenario, ComplexInitialStates) {
    const auto a = parse_scenario_text("initial = 0.6, 0.8i\n");
    EXPECT_EQ(a.initial(1), Complex(0, 0.8));
    const auto b = parse_scenario_text("initial = 0.6, 0\ninitial_im = 0, -0.8\n");
    EXPECT_EQ(b.initial(1), Complex(0, -0.8));
    EXPECT_EQ(parse_error_line("initial = 1, 0\ninitial_im = 1\n"), 2u);
}

TEST(Scenario, AngleForms) {
    const double pi = std::numbers::pi;
    EXPECT_DOUBLE_EQ(parse_angle("pi", 1), pi);
    EXPECT_DOUBLE_EQ(parse_angle("-pi/2", 1), -pi / 2);
    EXPECT_DOUBLE_EQ(parse_angle("+pi/4", 1), pi / 4);
    EXPECT_DOUBLE_EQ(parse_angle("3*pi", 1), 3 * pi);
    EXPECT_DOUBLE_EQ(parse_angle("0.25", 1), 0.25);
    EXPECT_THROW(parse_angle("tau", 4), ParseError);
}

TEST(Scenario, MatrixHamiltonian) {
    const auto cfg = load_scenario(config_path("static_4.cfg"));
    ASSERT_TRUE(cfg.hamiltonian);
    EXPECT_EQ(cfg.hamiltonian->dim, 4);
    EXPECT_EQ(cfg.hamiltonian->matrixR.rows(), 4);
    EXPECT_EQ(parse_error_line("[StaticReal]\nH = 1 2; 3\n"), 2u);
}

TEST(Scenario, ParseErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("name = x\nt1 = oops\n"), 2u);
    EXPECT_EQ(parse_error_line("# comment\n\nbogus = 1\n"), 3u);
    EXPECT_EQ(parse_error_line("t0 = 1\nt0 = 2\n"), 2u);
    EXPECT_EQ(parse_error_line("[Nowhere]\n"), 1u);
    EXPECT_EQ(parse_error_line("[LZLinear]\nE0 = 40\nW = 1\n"), 3u);
    EXPECT_EQ(parse_error_line("schemes = quantum, magic\n"), 1u);
    EXPECT_EQ(parse_error_line("samples = 1\n"), 1u);
    EXPECT_EQ(parse_error_line("just words\n"), 1u);
    EXPECT_EQ(parse_error_line("[circuit\n"), 1u);
    EXPECT_EQ(parse_error_line("[circuit]\nqubits = 2\ngate = CNOT a a\n"), 3u);
    EXPECT_EQ(parse_error_line("[circuit]\nqubits = 2\ngate = RX a\n"), 3u);
    EXPECT_EQ(parse_error_line("[circuit]\nqubits = 2\n\ngate = H c\n"), 4u);
    EXPECT_EQ(parse_error_line("[circuit]\ngate = H a\nqubits = 3\n"), 3u);
    EXPECT_EQ(parse_error_line("[LZLinear]\n[LZArctan]\n"), 2u);
}

TEST(Scenario, ValidationErrors) {
    auto base = load_scenario(config_path("fig1_v02.cfg"));
    EXPECT_NO_THROW(validate(base));

    auto c = base;
    c.t1 = c.t0;
    EXPECT_THROW(validate(c), ValidationError);
    c = base;
    c.schemes.clear();
    EXPECT_THROW(validate(c), ValidationError);
    c = base;
    c.schemes = {Scheme::Doubled};
    EXPECT_THROW(validate(c), ValidationError);
    c = base;
    c.initial = ComplexVector::Ones(3);
    EXPECT_THROW(validate(c), ValidationError);
    c = base;
    c.schemes = {Scheme::Gate};
    EXPECT_THROW(validate(c), ValidationError);
    c = base;
    c.hamiltonian.reset();
    EXPECT_THROW(validate(c), ValidationError);

    auto s = load_scenario(config_path("static_4.cfg"));
    s.schemes = {Scheme::RCA};
    EXPECT_THROW(validate(s), ValidationError);

    auto g = load_scenario(config_path("cnot.cfg"));
    g.schemes = {Scheme::Gate, Scheme::Quantum};
    EXPECT_THROW(validate(g), ValidationError);
    EXPECT_THROW(load_scenario("/nonexistent/x.cfg"), ValidationError);
}

TEST(Sweep, ExpansionOrderAndNames) {
    const auto base = parse_scenario_text(
        "name = grid\nschemes = quantum\n[LZLinear]\nE0 = 40\nA = 1\nV = 0.2\n[sweep]\nV = 0.2, 0.4\nA = 1, 2, 3\n");
    const auto grid = expand_sweep(base);
    ASSERT_EQ(grid.size(), 6u);
    EXPECT_EQ(grid[0].name, "grid_0");
    EXPECT_EQ(grid[5].name, "grid_5");
    EXPECT_DOUBLE_EQ(grid[1].hamiltonian->V, 0.2);
    EXPECT_DOUBLE_EQ(grid[1].hamiltonian->A, 2);
    EXPECT_DOUBLE_EQ(grid[3].hamiltonian->V, 0.4);
    EXPECT_DOUBLE_EQ(grid[3].hamiltonian->A, 1);
    for (const auto& c : grid) EXPECT_TRUE(c.sweep.empty());
}

TEST(Sweep, UnknownAxisOrMissingSection) {
    auto base = load_scenario(config_path("fig1_v02.cfg"));
    EXPECT_THROW(expand_sweep(base), ValidationError);
    base.sweep = {{"Q", {1.0}}};
    EXPECT_THROW(expand_sweep(base), ParseError);
}

TEST(Runner, QuantumOnlyHasNoPairsAndZenerUsesFinalPopulation) {
    auto cfg = load_scenario(config_path("fig1_v02.cfg"));
    cfg.schemes = {Scheme::Quantum};
    cfg.integrator.sample_count = 201;
    const auto r = run_scenario(cfg);
    EXPECT_TRUE(r.report.pairs.empty());
    ASSERT_TRUE(r.report.zener);
    EXPECT_EQ(r.report.zener->quantum_final, r.traces[0].populations.back()(0));
    EXPECT_LT(r.report.zener->abs_error, 0.01);
}

TEST(Runner, PairsAreSymmetric) {
    auto cfg = load_scenario(config_path("fig1_v06.cfg"));
    cfg.integrator.sample_count = 401;
    const auto r = run_scenario(cfg);
    ASSERT_EQ(r.traces.size(), 3u);
    ASSERT_EQ(r.report.pairs.size(), 3u);
    const auto ab = compare_traces(r.traces[0], r.traces[2]);
    const auto ba = compare_traces(r.traces[2], r.traces[0]);
    EXPECT_EQ(ab.max_diff, ba.max_diff);
    EXPECT_EQ(ab.time_of_max, ba.time_of_max);
    EXPECT_LE(ab.tail_max_diff, ab.max_diff);
    ASSERT_NE(r.report.pair("quantum", "exact"), nullptr);
    EXPECT_LT(r.report.pair("quantum", "exact")->max_diff, 1e-6);
}

TEST(Runner, GateScenario) {
    const auto r = run_scenario(load_scenario(config_path("cnot.cfg")));
    ASSERT_TRUE(r.report.gate);
    EXPECT_LT(r.report.gate->distance, 1e-8);
    EXPECT_EQ(r.report.gate->windows, 7);
    EXPECT_NEAR(std::abs(r.report.gate->matrix_state(3)), 1.0, 1e-10);
    ASSERT_TRUE(r.report.gate->entanglement);
    EXPECT_LT(r.report.gate->entanglement->concurrence, 1e-10);
}

TEST(Runner, SchemeErrorsCarryScenarioContext) {
    auto cfg = parse_scenario_text("name = tight\nschemes = exact\nt0 = -1\nt1 = 1\n[LZLinear]\nE0 = 1\nA = 1\nV = 1\n");
    try {
        run_scenario(cfg);
        FAIL();
    } catch (const NumericalError& e) {
        EXPECT_NE(std::string(e.what()).find("tight"), std::string::npos) << e.what();
    }
}
