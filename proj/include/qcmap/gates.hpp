// gates.hpp - Qubit registers as banks of oscillators, one per basis state.
//
// Basis ordering is |q_0 q_1 ... q_{n-1}> with qubit 0 ("a") the most
// significant bit, so for two qubits the oscillators are |00>,|01>,|10>,|11>.
// Gates exist twice: as unitary matrices (apply_gate) and as timed coupling
// schedules run through the classical oscillator integrator
// (execute_schedule). Equality between the two is checked modulo a global
// phase.

#pragma once

#include "qcmap/errors.hpp"
#include "qcmap/integrate.hpp"
#include "qcmap/oscillator.hpp"
#include "qcmap/types.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qcmap {

inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kNormTol = 1e-10;

struct RegisterState {
    int n_qubits{1};
    ComplexVector amplitudes;

    Eigen::Index size() const noexcept { return amplitudes.size(); }
    Complex operator[](Eigen::Index k) const { return amplitudes(k); }
};

inline RegisterState make_register(int n_qubits, const ComplexVector& amplitudes) {
    if (n_qubits < 1 || n_qubits > 16) throw ValidationError("register: n_qubits must be in [1, 16]");
    if (amplitudes.size() != (Eigen::Index{1} << n_qubits)) {
        throw ValidationError("register: need 2^n amplitudes");
    }
    return {n_qubits, amplitudes};
}

inline RegisterState basis_state(int n_qubits, Eigen::Index index) {
    if (n_qubits < 1 || n_qubits > 16) throw ValidationError("register: n_qubits must be in [1, 16]");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (index < 0 || index >= dim) throw ValidationError("basis_state: index out of range");
    ComplexVector c = ComplexVector::Zero(dim);
    c(index) = 1.0;
    return {n_qubits, c};
}

// "|01>" style labels; qubit a first.
inline RegisterState basis_state(std::string_view label) {
    if (label.size() < 3 || label.front() != '|' || label.back() != '>') {
        throw ValidationError("basis label must look like |01>");
    }
    const std::string_view bits = label.substr(1, label.size() - 2);
    Eigen::Index index = 0;
    for (char b : bits) {
        if (b != '0' && b != '1') throw ValidationError("basis label must contain only 0 and 1");
        index = 2 * index + (b - '0');
    }
    return basis_state(static_cast<int>(bits.size()), index);
}

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
inline RegisterState bloch_state(double theta, double phi) {
    ComplexVector c(2);
    c << std::cos(0.5 * theta), std::polar(1.0, phi) * std::sin(0.5 * theta);
    return {1, c};
}

inline RegisterState tensor(const RegisterState& a, const RegisterState& b) {
    ComplexVector c(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        c.segment(i * b.size(), b.size()) = a.amplitudes(i) * b.amplitudes;
    }
    return {a.n_qubits + b.n_qubits, c};
}

// ------------------------------------------------------------ gate matrices

enum class GateKind { Identity, Hadamard, Rx, Ry, Rz, SWAP, SQiSW, CNOT };

struct Gate {
    GateKind kind{GateKind::Identity};
    std::vector<int> targets;  // qubit indices; CNOT is (control, target)
    double angle{0.0};
};

inline std::string_view gate_name(GateKind k) {
    switch (k) {
        case GateKind::Identity: return "I";
        case GateKind::Hadamard: return "H";
        case GateKind::Rx: return "RX";
        case GateKind::Ry: return "RY";
        case GateKind::Rz: return "RZ";
        case GateKind::SWAP: return "SWAP";
        case GateKind::SQiSW: return "SQISW";
        case GateKind::CNOT: return "CNOT";
    }
    return "?";
}

inline GateKind parse_gate_kind(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return std::toupper(ch); });
    for (auto k : {GateKind::Identity, GateKind::Hadamard, GateKind::Rx, GateKind::Ry, GateKind::Rz,
                   GateKind::SWAP, GateKind::SQiSW, GateKind::CNOT}) {
        if (gate_name(k) == up) return k;
    }
    if (up == "ID") return GateKind::Identity;
    throw ValidationError("unknown gate '" + std::string(name) + "'");
}

inline int gate_arity(GateKind k) {
    switch (k) {
        case GateKind::SWAP:
        case GateKind::SQiSW:
        case GateKind::CNOT: return 2;
        default: return 1;
    }
}

// exp(-i theta sigma_x / 2)
inline ComplexMatrix rx_matrix(double theta) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    ComplexMatrix m(2, 2);
    m << c, Complex(0, -s), Complex(0, -s), c;
    return m;
}

// exp(-i theta sigma_y / 2)
inline ComplexMatrix ry_matrix(double theta) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    ComplexMatrix m(2, 2);
    m << c, -s, s, c;
    return m;
}

inline ComplexMatrix rz_matrix(double theta) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -0.5 * theta);
    m(1, 1) = std::polar(1.0, 0.5 * theta);
    return m;
}

// Two degenerate states coupled by V for time t: [[cos Vt, -i sin Vt], [-i sin Vt, cos Vt]].
inline ComplexMatrix coupling_unitary(double V, double t) { return rx_matrix(2.0 * V * t); }

inline ComplexMatrix gate_matrix(const Gate& g) {
    const double r = 1.0 / std::numbers::sqrt2;
    switch (g.kind) {
        case GateKind::Identity: return ComplexMatrix::Identity(2, 2);
        case GateKind::Hadamard: {
            ComplexMatrix m(2, 2);
            m << r, r, r, -r;
            return m;
        }
        case GateKind::Rx: return rx_matrix(g.angle);
        case GateKind::Ry: return ry_matrix(g.angle);
        case GateKind::Rz: return rz_matrix(g.angle);
        case GateKind::SWAP: {
            ComplexMatrix m = ComplexMatrix::Zero(4, 4);
            m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
            return m;
        }
        case GateKind::SQiSW: {
            ComplexMatrix m = ComplexMatrix::Identity(4, 4);
            m.block(1, 1, 2, 2) = coupling_unitary(1.0, std::numbers::pi / 4.0);
            return m;
        }
        case GateKind::CNOT: {
            ComplexMatrix m = ComplexMatrix::Zero(4, 4);
            m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
            return m;
        }
    }
    throw ValidationError("gate_matrix: unknown gate");
}

inline double unitarity_defect(const ComplexMatrix& U) {
    return (U.adjoint() * U - ComplexMatrix::Identity(U.rows(), U.cols())).cwiseAbs().maxCoeff();
}

namespace detail {

inline void check_register(const RegisterState& s) {
    if (s.n_qubits < 1 || s.size() != (Eigen::Index{1} << s.n_qubits)) {
        throw ValidationError("register: amplitude count does not match n_qubits");
    }
}

inline Eigen::Index qubit_bit(int n_qubits, int q) { return Eigen::Index{1} << (n_qubits - 1 - q); }

}  // namespace detail

// Applies a 2^k x 2^k unitary to qubits `targets` (first target = most
// significant bit of g's index).
inline RegisterState apply_gate(const ComplexMatrix& g, const std::vector<int>& targets,
                                const RegisterState& s) {
    detail::check_register(s);
    const int k = static_cast<int>(targets.size());
    if (k < 1 || g.rows() != (Eigen::Index{1} << k) || g.cols() != g.rows()) {
        throw ValidationError("apply_gate: matrix size does not match target count");
    }
    for (int i = 0; i < k; ++i) {
        if (targets[i] < 0 || targets[i] >= s.n_qubits) {
            throw ValidationError("apply_gate: target qubit out of range");
        }
        for (int j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) throw ValidationError("apply_gate: repeated target qubit");
        }
    }
    if (!(unitarity_defect(g) <= kUnitarityTol)) throw ValidationError("apply_gate: matrix is not unitary");

    std::vector<Eigen::Index> bits(k);
    Eigen::Index mask = 0;
    for (int i = 0; i < k; ++i) {
        bits[i] = detail::qubit_bit(s.n_qubits, targets[i]);
        mask |= bits[i];
    }
    const Eigen::Index sub = g.rows();
    auto spread = [&](Eigen::Index base, Eigen::Index local) {
        Eigen::Index idx = base;
        for (int i = 0; i < k; ++i) {
            if (local & (Eigen::Index{1} << (k - 1 - i))) idx |= bits[i];
        }
        return idx;
    };

    RegisterState out = s;
    ComplexVector in(sub);
    for (Eigen::Index base = 0; base < s.size(); ++base) {
        if (base & mask) continue;
        for (Eigen::Index l = 0; l < sub; ++l) in(l) = s.amplitudes(spread(base, l));
        const ComplexVector res = g * in;
        for (Eigen::Index l = 0; l < sub; ++l) out.amplitudes(spread(base, l)) = res(l);
    }
    return out;
}

inline RegisterState apply_gate(const Gate& g, const RegisterState& s) {
    if (static_cast<int>(g.targets.size()) != gate_arity(g.kind)) {
        throw ValidationError("gate " + std::string(gate_name(g.kind)) + " needs " +
                              std::to_string(gate_arity(g.kind)) + " target(s)");
    }
    return apply_gate(gate_matrix(g), g.targets, s);
}

// Full 2^n x 2^n matrix of a gate on an n-qubit register.
inline ComplexMatrix embed_gate(const Gate& g, int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    ComplexMatrix U(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) U.col(j) = apply_gate(g, basis_state(n_qubits, j)).amplitudes;
    return U;
}

// ------------------------------------------------------------ decomposition

// The six factors in order of application on qubits (a, b).
inline std::vector<Gate> cnot_decomposition_gates() {
    const double pi = std::numbers::pi;
    return {
        {GateKind::Ry, {0}, pi / 2},   {GateKind::SQiSW, {0, 1}, 0.0},
        {GateKind::Rx, {0}, pi},       {GateKind::SQiSW, {0, 1}, 0.0},
        {GateKind::Rx, {0}, pi / 2},   {GateKind::Rx, {1}, -pi / 2},
        {GateKind::Ry, {0}, -pi / 2},
    };
}

struct DecompositionResult {
    RegisterState final_state;
    std::vector<RegisterState> intermediates;  // Psi_1 (input) ... Psi_7 (output)
};

inline DecompositionResult cnot_via_decomposition(const RegisterState& s) {
    detail::check_register(s);
    if (s.n_qubits != 2) throw ValidationError("cnot_via_decomposition: needs a 2-qubit state");
    const auto gates = cnot_decomposition_gates();
    DecompositionResult r{s, {s}};
    RegisterState cur = s;
    for (std::size_t k = 0; k < gates.size(); ++k) {
        cur = apply_gate(gates[k], cur);
        // The two local rotations on a and b form one step.
        if (k == 4) continue;
        r.intermediates.push_back(cur);
    }
    r.final_state = cur;
    return r;
}

// --------------------------------------------------------- global phase

// Phase of the largest-magnitude amplitude of `ref`.
inline Complex reference_phase(const ComplexVector& ref) {
    Eigen::Index imax = 0;
    ref.cwiseAbs().maxCoeff(&imax);
    const double mag = std::abs(ref(imax));
    return mag > 0.0 ? ref(imax) / mag : Complex(1.0, 0.0);
}

// max_k |a_k e^{-i phi_a} - b_k e^{-i phi_b}|, phases taken from b's largest entry.
inline double phase_aligned_distance(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) throw ValidationError("phase_aligned_distance: size mismatch");
    Eigen::Index imax = 0;
    b.cwiseAbs().maxCoeff(&imax);
    const Complex pb = reference_phase(b);
    const Complex pa = std::abs(a(imax)) > 0.0 ? a(imax) / std::abs(a(imax)) : Complex(1.0, 0.0);
    return (a / pa - b / pb).cwiseAbs().maxCoeff();
}

inline bool equal_up_to_global_phase(const ComplexVector& a, const ComplexVector& b, double tol) {
    return phase_aligned_distance(a, b) < tol;
}

// Matrix version: one phase for the whole operator.
inline double phase_aligned_distance(const ComplexMatrix& A, const ComplexMatrix& B) {
    const Eigen::Map<const ComplexVector> a(A.data(), A.size());
    const Eigen::Map<const ComplexVector> b(B.data(), B.size());
    return phase_aligned_distance(ComplexVector(a), ComplexVector(b));
}

// ---------------------------------------------------------- entanglement

inline ComplexMatrix density_matrix(const RegisterState& s) {
    return s.amplitudes * s.amplitudes.adjoint();
}

struct EntanglementMeasures {
    double entropy;
    double concurrence;
};

inline EntanglementMeasures entanglement_measures(const RegisterState& s) {
    detail::check_register(s);
    if (s.n_qubits != 2) throw ValidationError("entanglement_measures: needs a 2-qubit state");
    if (!(std::abs(s.amplitudes.squaredNorm() - 1.0) <= kNormTol)) {
        throw ValidationError("entanglement_measures: state is not normalized");
    }
    const Complex al = s[0], be = s[1], ga = s[2], de = s[3];
    const double concurrence = std::min(1.0, 2.0 * std::abs(al * de - be * ga));

    // rho_a = Tr_b |psi><psi|
    Eigen::Matrix2cd rho_a;
    rho_a(0, 0) = std::norm(al) + std::norm(be);
    rho_a(1, 1) = std::norm(ga) + std::norm(de);
    rho_a(0, 1) = al * std::conj(ga) + be * std::conj(de);
    rho_a(1, 0) = std::conj(rho_a(0, 1));
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho_a, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (int k = 0; k < 2; ++k) {
        const double p = es.eigenvalues()(k);
        if (p > 1e-15) entropy -= p * std::log2(p);
    }
    return {std::clamp(entropy, 0.0, 1.0), concurrence};
}

// ------------------------------------------------------------- schedules

// Simultaneous coupling windows: each pair (i, j) of oscillators is coupled
// with `strength` for `duration`. Non-listed oscillators idle.
struct CouplingWindow {
    std::vector<std::pair<int, int>> pairs;
    double strength{1.0};
    double duration{0.0};
};

// Multiplies amplitude `state` by e^{i angle}: a rotation of that oscillator's
// (q, p) plane, i.e. a timed detuning of one oscillator.
struct PhaseShift {
    int state{0};
    double angle{0.0};
};

using ScheduleStep = std::variant<CouplingWindow, PhaseShift>;

struct GateSchedule {
    int n_qubits{2};
    std::vector<ScheduleStep> steps;

    bool empty() const noexcept { return steps.empty(); }
    void append(const GateSchedule& other) { steps.insert(steps.end(), other.steps.begin(), other.steps.end()); }
};

inline void validate(const GateSchedule& sched) {
    if (sched.n_qubits < 1 || sched.n_qubits > 16) throw ValidationError("schedule: n_qubits must be in [1, 16]");
    const int dim = 1 << sched.n_qubits;
    for (const auto& step : sched.steps) {
        if (const auto* w = std::get_if<CouplingWindow>(&step)) {
            if (!(w->duration >= 0.0) || !std::isfinite(w->duration) || !std::isfinite(w->strength)) {
                throw ValidationError("schedule: window durations must be finite and non-negative");
            }
            std::vector<char> used(dim, 0);
            for (auto [i, j] : w->pairs) {
                if (i < 0 || j < 0 || i >= dim || j >= dim || i == j) {
                    throw ValidationError("schedule: pair indices must be distinct and in range");
                }
                if (used[i] || used[j]) throw ValidationError("schedule: oscillator appears in two pairs of one window");
                used[i] = used[j] = 1;
            }
        } else {
            const auto& p = std::get<PhaseShift>(step);
            if (p.state < 0 || p.state >= dim || !std::isfinite(p.angle)) {
                throw ValidationError("schedule: phase shift state out of range");
            }
        }
    }
}

namespace detail {

// Pairs of basis states that differ only in qubit q.
inline std::vector<std::pair<int, int>> qubit_pairs(int n_qubits, int q) {
    const int bit = static_cast<int>(qubit_bit(n_qubits, q));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < (1 << n_qubits); ++i) {
        if (!(i & bit)) pairs.emplace_back(i, i | bit);
    }
    return pairs;
}

inline std::vector<int> states_with(int n_qubits, int q, bool set) {
    const int bit = static_cast<int>(qubit_bit(n_qubits, q));
    std::vector<int> out;
    for (int i = 0; i < (1 << n_qubits); ++i) {
        if (static_cast<bool>(i & bit) == set) out.push_back(i);
    }
    return out;
}

// Rx(theta) = coupling for V t = theta / 2; the sign of theta goes into V.
inline GateSchedule rx_schedule(int n, int q, double theta, double V) {
    GateSchedule s{n, {}};
    if (theta == 0.0) return s;
    const double strength = std::copysign(std::abs(V), theta);
    s.steps.push_back(CouplingWindow{qubit_pairs(n, q), strength, std::abs(theta) / (2.0 * std::abs(V))});
    return s;
}

inline void add_phases(GateSchedule& s, const std::vector<int>& states, double angle) {
    for (int k : states) s.steps.push_back(PhaseShift{k, angle});
}

// Ry = P Rx P^dagger with P = diag(1, i) on the target qubit.
inline GateSchedule ry_schedule(int n, int q, double theta, double V) {
    GateSchedule s{n, {}};
    if (theta == 0.0) return s;
    const auto ones = states_with(n, q, true);
    add_phases(s, ones, -std::numbers::pi / 2);
    s.append(rx_schedule(n, q, theta, V));
    add_phases(s, ones, std::numbers::pi / 2);
    return s;
}

inline int pair_state(int n, int qa, int qb, int va, int vb) {
    return static_cast<int>((va ? qubit_bit(n, qa) : 0) | (vb ? qubit_bit(n, qb) : 0));
}

// Windows between |..0_a..1_b..> and |..1_a..0_b..> for all spectator values.
inline std::vector<std::pair<int, int>> exchange_pairs(int n, int qa, int qb) {
    std::vector<std::pair<int, int>> pairs;
    const int ba = static_cast<int>(qubit_bit(n, qa)), bb = static_cast<int>(qubit_bit(n, qb));
    for (int i = 0; i < (1 << n); ++i) {
        if ((i & ba) || (i & bb)) continue;
        pairs.emplace_back(i | pair_state(n, qa, qb, 0, 1), i | pair_state(n, qa, qb, 1, 0));
    }
    return pairs;
}

}  // namespace detail

inline GateSchedule schedule_for_gate(const Gate& g, int n_qubits = 2, double V = 1.0) {
    if (!(std::abs(V) > 0.0) || !std::isfinite(V)) throw ValidationError("schedule_for_gate: V must be non-zero");
    if (static_cast<int>(g.targets.size()) != gate_arity(g.kind) && g.kind != GateKind::Identity) {
        throw ValidationError("schedule_for_gate: wrong number of targets for " + std::string(gate_name(g.kind)));
    }
    for (int q : g.targets) {
        if (q < 0 || q >= n_qubits) throw ValidationError("schedule_for_gate: target out of range");
    }
    const double pi = std::numbers::pi;
    const int n = n_qubits;
    GateSchedule s{n, {}};
    switch (g.kind) {
        case GateKind::Identity: return s;
        case GateKind::Rx: return detail::rx_schedule(n, g.targets[0], g.angle, V);
        case GateKind::Ry: return detail::ry_schedule(n, g.targets[0], g.angle, V);
        case GateKind::Rz: {
            detail::add_phases(s, detail::states_with(n, g.targets[0], false), -0.5 * g.angle);
            detail::add_phases(s, detail::states_with(n, g.targets[0], true), 0.5 * g.angle);
            return s;
        }
        case GateKind::Hadamard: {
            // H = i Rx(pi) Ry(pi/2)
            s = detail::ry_schedule(n, g.targets[0], pi / 2, V);
            s.append(detail::rx_schedule(n, g.targets[0], pi, V));
            for (int k = 0; k < (1 << n); ++k) s.steps.push_back(PhaseShift{k, pi / 2});
            return s;
        }
        case GateKind::SQiSW:
        case GateKind::SWAP: {
            if (g.targets[0] == g.targets[1]) throw ValidationError("schedule_for_gate: repeated target");
            const auto pairs = detail::exchange_pairs(n, g.targets[0], g.targets[1]);
            const double t = (g.kind == GateKind::SQiSW ? pi / 4 : pi / 2) / std::abs(V);
            s.steps.push_back(CouplingWindow{pairs, std::abs(V), t});
            if (g.kind == GateKind::SWAP) {
                // The window leaves -i on both exchanged states.
                for (auto [i, j] : pairs) {
                    s.steps.push_back(PhaseShift{i, pi / 2});
                    s.steps.push_back(PhaseShift{j, pi / 2});
                }
            }
            return s;
        }
        case GateKind::CNOT: {
            if (g.targets[0] == g.targets[1]) throw ValidationError("schedule_for_gate: repeated target");
            // Decomposition with control -> a and target -> b.
            const int a = g.targets[0], b = g.targets[1];
            for (const Gate& f : cnot_decomposition_gates()) {
                Gate mapped = f;
                for (int& t : mapped.targets) t = (t == 0 ? a : b);
                s.append(schedule_for_gate(mapped, n, V));
            }
            return s;
        }
    }
    throw ValidationError("schedule_for_gate: unsupported gate");
}

// Runs each coupling window through the exact classical oscillator equations
// of the block Hamiltonian sum_pairs V (|i><j| + |j><i|); phase shifts rotate
// single oscillators in phase space.
inline RegisterState execute_schedule(const GateSchedule& sched, const RegisterState& s,
                                      const IntegratorConfig& cfg) {
    validate(sched);
    detail::check_register(s);
    if (s.n_qubits != sched.n_qubits) throw ValidationError("execute_schedule: register size mismatch");
    const Eigen::Index dim = s.size();
    PhaseSpaceState x = qp_from_amplitudes(s.amplitudes);
    IntegratorConfig run = cfg;
    run.sample_count = 2;

    for (std::size_t k = 0; k < sched.steps.size(); ++k) {
        const auto& step = sched.steps[k];
        if (const auto* w = std::get_if<CouplingWindow>(&step)) {
            if (w->duration == 0.0 || w->pairs.empty()) continue;
            Matrix H = Matrix::Zero(dim, dim);
            for (auto [i, j] : w->pairs) H(i, j) = H(j, i) = w->strength;
            const auto traj = with_context("execute_schedule step " + std::to_string(k),
                                           [&] { return evolve_exact_real(H, x, 0.0, w->duration, run); });
            x = traj.back();
        } else {
            const auto& p = std::get<PhaseShift>(step);
            const double c = std::cos(p.angle), sn = std::sin(p.angle);
            const double q = x.q(p.state), mom = x.p(p.state);
            x.q(p.state) = c * q - sn * mom;
            x.p(p.state) = sn * q + c * mom;
        }
    }
    return {s.n_qubits, amplitudes_from_qp(x)};
}

// Exact matrix of a schedule (matrix exponentials of each window), for tests
// and for comparing against the integrator path.
inline ComplexMatrix schedule_matrix(const GateSchedule& sched) {
    validate(sched);
    const Eigen::Index dim = Eigen::Index{1} << sched.n_qubits;
    ComplexMatrix U = ComplexMatrix::Identity(dim, dim);
    for (const auto& step : sched.steps) {
        ComplexMatrix S = ComplexMatrix::Identity(dim, dim);
        if (const auto* w = std::get_if<CouplingWindow>(&step)) {
            for (auto [i, j] : w->pairs) {
                const ComplexMatrix b = coupling_unitary(w->strength, w->duration);
                S(i, i) = b(0, 0);
                S(i, j) = b(0, 1);
                S(j, i) = b(1, 0);
                S(j, j) = b(1, 1);
            }
        } else {
            const auto& p = std::get<PhaseShift>(step);
            S(p.state, p.state) = std::polar(1.0, p.angle);
        }
        U = S * U;
    }
    return U;
}

// Circuit = ordered gates on one register.
struct Circuit {
    int n_qubits{2};
    double coupling{1.0};
    std::vector<Gate> gates;
};

inline RegisterState run_circuit_matrix(const Circuit& c, const RegisterState& s) {
    RegisterState cur = s;
    for (const auto& g : c.gates) cur = apply_gate(g, cur);
    return cur;
}

inline GateSchedule schedule_for_circuit(const Circuit& c) {
    GateSchedule s{c.n_qubits, {}};
    for (const auto& g : c.gates) s.append(schedule_for_gate(g, c.n_qubits, c.coupling));
    return s;
}

}  // namespace qcmap
