// runner.hpp - Runs a scenario through every selected scheme on one time grid
// and compares the resulting population traces.

#pragma once

#include "qcmap/errors.hpp"
#include "qcmap/gates.hpp"
#include "qcmap/oscillator.hpp"
#include "qcmap/quantum.hpp"
#include "qcmap/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <vector>

namespace qcmap {

// One scheme's output in the common (P, q, p) representation. For the
// quantum scheme q and p are sqrt2 Re c and sqrt2 Im c.
struct SchemeTrace {
    Scheme scheme{Scheme::Quantum};
    std::vector<double> times;
    std::vector<Vector> populations;
    std::vector<Vector> q;
    std::vector<Vector> p;

    std::string name() const { return std::string(scheme_name(scheme)); }
};

struct PairComparison {
    std::string a, b;
    double max_diff{0.0};
    double time_of_max{0.0};
    double tail_max_diff{0.0};  // over the final 10% of the window
};

struct ZenerCheck {
    double prediction;
    double quantum_final;  // P1 at t1
    double abs_error;
};

struct GateOutcome {
    ComplexVector input;
    ComplexVector matrix_state;
    ComplexVector schedule_state;
    double distance;  // modulo global phase
    std::size_t windows;
    double total_duration;
    std::optional<EntanglementMeasures> entanglement;
};

struct ComparisonReport {
    std::string scenario;
    std::string kind;
    std::vector<std::string> schemes;
    std::vector<PairComparison> pairs;
    std::vector<std::pair<std::string, Vector>> final_populations;
    std::optional<ZenerCheck> zener;
    std::optional<Vector> drive_residual;
    std::optional<GateOutcome> gate;

    const PairComparison* pair(const std::string& x, const std::string& y) const {
        for (const auto& pc : pairs) {
            if ((pc.a == x && pc.b == y) || (pc.a == y && pc.b == x)) return &pc;
        }
        return nullptr;
    }
};

struct ScenarioResult {
    ScenarioConfig config;
    std::vector<SchemeTrace> traces;
    ComparisonReport report;
};

// ----------------------------------------------------------- conversions

inline SchemeTrace make_trace(Scheme scheme, const ComplexTrajectory& t) {
    SchemeTrace s{scheme, t.times, {}, {}, {}};
    for (const auto& c : t.states) {
        s.populations.push_back(c.cwiseAbs2());
        s.q.push_back(std::numbers::sqrt2 * c.real());
        s.p.push_back(std::numbers::sqrt2 * c.imag());
    }
    return s;
}

inline SchemeTrace make_trace(Scheme scheme, const PhaseTrajectory& t) {
    SchemeTrace s{scheme, t.times, {}, {}, {}};
    for (const auto& x : t.states) {
        s.populations.push_back(populations(x));
        s.q.push_back(x.q);
        s.p.push_back(x.p);
    }
    return s;
}

// max over samples and states of |P_a - P_b|; both traces share one grid.
inline PairComparison compare_traces(const SchemeTrace& a, const SchemeTrace& b) {
    if (a.times.size() != b.times.size()) throw ValidationError("compare_traces: grids differ");
    PairComparison pc{a.name(), b.name()};
    const std::size_t n = a.times.size();
    const double t_tail = a.times.front() + 0.9 * (a.times.back() - a.times.front());
    for (std::size_t k = 0; k < n; ++k) {
        const double d = (a.populations[k] - b.populations[k]).cwiseAbs().maxCoeff();
        if (d > pc.max_diff) {
            pc.max_diff = d;
            pc.time_of_max = a.times[k];
        }
        if (a.times[k] >= t_tail) pc.tail_max_diff = std::max(pc.tail_max_diff, d);
    }
    return pc;
}

// --------------------------------------------------------------- running

inline GateOutcome run_gate_circuit(const ScenarioConfig& cfg) {
    const Circuit& c = *cfg.circuit;
    const RegisterState in = make_register(c.n_qubits, initial_amplitudes(cfg));
    if (!(std::abs(in.amplitudes.squaredNorm() - 1.0) <= kNormTol)) {
        throw ValidationError(cfg.name + ": initial register state is not normalized");
    }
    const RegisterState by_matrix = run_circuit_matrix(c, in);
    const GateSchedule sched = schedule_for_circuit(c);
    const RegisterState by_schedule = execute_schedule(sched, in, cfg.integrator);

    GateOutcome g{in.amplitudes, by_matrix.amplitudes, by_schedule.amplitudes,
                  phase_aligned_distance(by_schedule.amplitudes, by_matrix.amplitudes), 0, 0.0, std::nullopt};
    for (const auto& step : sched.steps) {
        if (const auto* w = std::get_if<CouplingWindow>(&step)) {
            ++g.windows;
            g.total_duration += w->duration;
        }
    }
    if (c.n_qubits == 2) g.entanglement = entanglement_measures(by_matrix);
    return g;
}

inline ScenarioResult run_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    ScenarioResult r{cfg, {}, {}};
    ComparisonReport& rep = r.report;
    rep.scenario = cfg.name;
    for (auto s : cfg.schemes) rep.schemes.emplace_back(scheme_name(s));

    if (cfg.has(Scheme::Gate)) {
        rep.kind = "circuit";
        rep.gate = run_gate_circuit(cfg);
        rep.final_populations.emplace_back("matrix", rep.gate->matrix_state.cwiseAbs2());
        rep.final_populations.emplace_back("gate", rep.gate->schedule_state.cwiseAbs2());
        return r;
    }

    const HamiltonianSpec& spec = *cfg.hamiltonian;
    rep.kind = std::string(kind_name(spec.kind));
    const ComplexVector c0 = initial_amplitudes(cfg);
    const double t0 = cfg.t0, t1 = cfg.t1;
    const IntegratorConfig& ic = cfg.integrator;

    const std::string ctx = "scenario '" + cfg.name + "'";
    for (Scheme s : cfg.schemes) {
        with_context(ctx + " scheme " + std::string(scheme_name(s)), [&] {
            switch (s) {
                case Scheme::Quantum: r.traces.push_back(make_trace(s, evolve_tdse(spec, c0, t0, t1, ic))); break;
                case Scheme::Exact: r.traces.push_back(make_trace(s, evolve_exact(spec, c0, t0, t1, ic))); break;
                case Scheme::RCA: r.traces.push_back(make_trace(s, evolve_rca(spec, c0, t0, t1, ic))); break;
                case Scheme::Doubled:
                    r.traces.push_back(make_trace(s, to_phase_space(evolve_doubled(spec, c0, t0, t1, ic))));
                    break;
                case Scheme::Gate: break;
            }
        });
    }

    for (std::size_t i = 0; i < r.traces.size(); ++i) {
        rep.final_populations.emplace_back(r.traces[i].name(), r.traces[i].populations.back());
        for (std::size_t j = i + 1; j < r.traces.size(); ++j) {
            rep.pairs.push_back(compare_traces(r.traces[i], r.traces[j]));
        }
    }

    if (spec.kind == HamiltonianKind::LZLinear && spec.A > 0.0) {
        const double z = zener_probability(spec.V, spec.A);
        for (const auto& t : r.traces) {
            if (t.scheme == Scheme::Quantum) {
                const double p1 = t.populations.back()(0);
                rep.zener = ZenerCheck{z, p1, std::abs(p1 - z)};
            }
        }
        if (!rep.zener) rep.zener = ZenerCheck{z, NAN, NAN};
    }
    if (is_driven(spec.kind)) rep.drive_residual = driven_rca_residual(spec);
    return r;
}

// ---------------------------------------------------------------- sweeps

// Cartesian product of the sweep axes, in row-major order (last axis fastest).
inline std::vector<ScenarioConfig> expand_sweep(const ScenarioConfig& base) {
    if (base.sweep.empty()) throw ValidationError(base.name + ": no [sweep] section");
    if (!base.hamiltonian) throw ValidationError(base.name + ": sweeps need a Hamiltonian section");
    std::vector<ScenarioConfig> out;
    std::vector<std::size_t> idx(base.sweep.size(), 0);
    std::size_t counter = 0;
    while (true) {
        ScenarioConfig c = base;
        c.sweep.clear();
        for (std::size_t a = 0; a < base.sweep.size(); ++a) {
            const auto& axis = base.sweep[a];
            set_hamiltonian_field(*c.hamiltonian, axis.key, axis.values[idx[a]]);
        }
        c.name = base.name + "_" + std::to_string(counter++);
        out.push_back(std::move(c));

        std::size_t a = base.sweep.size();
        while (a > 0) {
            --a;
            if (++idx[a] < base.sweep[a].values.size()) break;
            idx[a] = 0;
            if (a == 0) return out;
        }
    }
}

// Independent runs in parallel; results keep grid order.
inline std::vector<ScenarioResult> run_sweep(const ScenarioConfig& base) {
    const auto grid = expand_sweep(base);
    std::vector<std::future<ScenarioResult>> jobs;
    jobs.reserve(grid.size());
    for (const auto& c : grid) jobs.push_back(std::async(std::launch::async, [c] { return run_scenario(c); }));
    std::vector<ScenarioResult> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace qcmap
