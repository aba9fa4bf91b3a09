// scenario.hpp - Scenario files.
//
// Line-oriented `key = value` text. Top-level keys describe the run, a
// section named after a Hamiltonian kind holds its parameters, `[circuit]`
// holds a gate list and `[sweep]` holds comma-separated value lists for a
// Cartesian parameter grid. `#` starts a comment.
//
//   name    = fig1_v02
//   schemes = quantum, exact, rca
//   t0 = -25
//   t1 = 25
//   initial = 1, 0
//
//   [LZLinear]
//   E0 = 40
//   A  = 1
//   V  = 0.2

#pragma once

#include "qcmap/errors.hpp"
#include "qcmap/gates.hpp"
#include "qcmap/integrate.hpp"
#include "qcmap/model.hpp"
#include "qcmap/types.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcmap {

enum class Scheme { Quantum, Exact, RCA, Doubled, Gate };

inline std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Quantum: return "quantum";
        case Scheme::Exact: return "exact";
        case Scheme::RCA: return "rca";
        case Scheme::Doubled: return "doubled";
        case Scheme::Gate: return "gate";
    }
    return "?";
}

inline Scheme parse_scheme(std::string_view name) {
    for (auto s : {Scheme::Quantum, Scheme::Exact, Scheme::RCA, Scheme::Doubled, Scheme::Gate}) {
        if (scheme_name(s) == name) return s;
    }
    throw ValidationError("unknown scheme '" + std::string(name) + "'");
}

struct SweepAxis {
    std::string key;
    std::vector<double> values;
};

struct ScenarioConfig {
    std::string name{"scenario"};
    std::optional<HamiltonianSpec> hamiltonian;
    std::optional<Circuit> circuit;
    ComplexVector initial;  // empty = ground state |0...0> / state 1
    double t0{0.0};
    double t1{1.0};
    IntegratorConfig integrator;
    std::vector<Scheme> schemes{Scheme::Quantum};
    std::vector<SweepAxis> sweep;
    std::string out_dir{"."};
    bool write_plot{true};

    bool has(Scheme s) const { return std::find(schemes.begin(), schemes.end(), s) != schemes.end(); }
};

// ------------------------------------------------------------ text helpers

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

}  // namespace detail

inline double parse_number(std::string_view s, std::size_t line) {
    const auto v = detail::to_double(s);
    if (!v || !std::isfinite(*v)) throw ParseError(line, "expected a finite number, got '" + std::string(s) + "'");
    return *v;
}

// Numbers plus the forms pi, pi/k, k*pi, each with an optional sign.
inline double parse_angle(std::string_view s, std::size_t line) {
    s = detail::trim(s);
    double sign = 1.0;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-') sign = -1.0;
        s.remove_prefix(1);
    }
    const double pi = std::numbers::pi;
    if (s == "pi") return sign * pi;
    if (s.starts_with("pi/")) return sign * pi / parse_number(s.substr(3), line);
    if (s.ends_with("*pi")) return sign * parse_number(s.substr(0, s.size() - 3), line) * pi;
    return sign * parse_number(s, line);
}

inline std::vector<double> parse_list(std::string_view s, std::size_t line) {
    std::vector<double> out;
    for (auto item : detail::split(s, ',')) out.push_back(parse_number(item, line));
    return out;
}

// Rows separated by ';', entries by whitespace or ','.
inline Matrix parse_matrix(std::string_view s, std::size_t line) {
    std::vector<std::vector<double>> rows;
    for (auto row : detail::split(s, ';')) {
        std::string r(row);
        std::replace(r.begin(), r.end(), ',', ' ');
        std::vector<double> vals;
        for (auto tok : detail::split_ws(r)) vals.push_back(parse_number(tok, line));
        if (vals.empty()) throw ParseError(line, "empty matrix row");
        rows.push_back(std::move(vals));
    }
    const std::size_t n = rows.size();
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != rows[0].size()) throw ParseError(line, "matrix rows differ in length");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

// Sets one named Hamiltonian parameter; used by the parser and by sweeps.
inline void set_hamiltonian_field(HamiltonianSpec& spec, std::string_view key, double v,
                                  std::size_t line = 0) {
    if (key == "E1") spec.E1 = v;
    else if (key == "E2") spec.E2 = v;
    else if (key == "V") spec.V = v;
    else if (key == "E0") spec.E0 = v;
    else if (key == "A") spec.A = v;
    else if (key == "lambda1") spec.lambda1 = v;
    else if (key == "lambda2") spec.lambda2 = v;
    else if (key == "mu1") spec.mu1 = v;
    else if (key == "mu2") spec.mu2 = v;
    else if (key == "omega_drive") spec.omega_drive = v;
    else throw ParseError(line, "unknown Hamiltonian parameter '" + std::string(key) + "'");
}

namespace detail {

inline int parse_qubit(std::string_view s, int n_qubits, std::size_t line) {
    int q = -1;
    if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'z') {
        q = s[0] - 'a';
    } else {
        const auto v = to_double(s);
        if (!v || *v != std::floor(*v)) throw ParseError(line, "bad qubit label '" + std::string(s) + "'");
        q = static_cast<int>(*v);
    }
    if (q < 0 || q >= n_qubits) throw ParseError(line, "qubit '" + std::string(s) + "' out of range");
    return q;
}

// NAME target [target] [angle]
inline Gate parse_gate_line(std::string_view value, int n_qubits, std::size_t line) {
    const auto toks = split_ws(value);
    if (toks.empty()) throw ParseError(line, "empty gate");
    Gate g;
    try {
        g.kind = parse_gate_kind(toks[0]);
    } catch (const ValidationError& e) {
        throw ParseError(line, e.what());
    }
    const int arity = gate_arity(g.kind);
    const bool rotation = g.kind == GateKind::Rx || g.kind == GateKind::Ry || g.kind == GateKind::Rz;
    const std::size_t expected = 1 + static_cast<std::size_t>(arity) + (rotation ? 1 : 0);
    if (toks.size() != expected) {
        throw ParseError(line, "gate " + std::string(gate_name(g.kind)) + " expects " +
                                   std::to_string(expected - 1) + " argument(s)");
    }
    for (int k = 0; k < arity; ++k) g.targets.push_back(parse_qubit(toks[1 + k], n_qubits, line));
    if (arity == 2 && g.targets[0] == g.targets[1]) throw ParseError(line, "gate targets must differ");
    if (rotation) g.angle = parse_angle(toks.back(), line);
    return g;
}

inline bool is_kind_name(std::string_view s) {
    for (auto k : kAllKinds) {
        if (kind_name(k) == s) return true;
    }
    return false;
}

}  // namespace detail

// Initial states: "1, 0" (real parts), "|10>" (basis label) or "0.6, 0.8i"
// style complex entries are all accepted.
inline ComplexVector parse_initial(std::string_view s, std::size_t line) {
    s = detail::trim(s);
    if (!s.empty() && s.front() == '|') {
        try {
            return basis_state(s).amplitudes;
        } catch (const ValidationError& e) {
            throw ParseError(line, e.what());
        }
    }
    const auto items = detail::split(s, ',');
    ComplexVector c(static_cast<Eigen::Index>(items.size()));
    for (std::size_t k = 0; k < items.size(); ++k) {
        auto item = items[k];
        if (!item.empty() && item.back() == 'i') {
            item.remove_suffix(1);
            c(k) = Complex(0.0, item.empty() || item == "+" ? 1.0 : item == "-" ? -1.0 : parse_number(item, line));
        } else {
            c(k) = parse_number(item, line);
        }
    }
    return c;
}

inline ScenarioConfig parse_scenario(std::istream& in) {
    ScenarioConfig cfg;
    std::string section;
    std::vector<std::string> seen;
    std::optional<ComplexVector> initial_im;
    std::size_t im_line = 0;
    std::vector<std::pair<std::string, std::size_t>> gate_lines;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(lineno, "unterminated section header");
            section = std::string(detail::trim(line.substr(1, line.size() - 2)));
            if (section == "circuit") {
                if (cfg.circuit) throw ParseError(lineno, "duplicate [circuit] section");
                cfg.circuit = Circuit{};
            } else if (section == "sweep") {
            } else if (detail::is_kind_name(section)) {
                if (cfg.hamiltonian) throw ParseError(lineno, "only one Hamiltonian section is allowed");
                cfg.hamiltonian = HamiltonianSpec{};
                cfg.hamiltonian->kind = parse_kind(section);
            } else {
                throw ParseError(lineno, "unknown section [" + section + "]");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(lineno, "expected key = value");
        const std::string key(detail::trim(line.substr(0, eq)));
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(lineno, "missing key");
        if (value.empty()) throw ParseError(lineno, "missing value for '" + key + "'");

        const std::string scoped = section + "." + key;
        if (key != "gate") {
            if (std::find(seen.begin(), seen.end(), scoped) != seen.end()) {
                throw ParseError(lineno, "duplicate key '" + key + "'");
            }
            seen.push_back(scoped);
        }

        if (section.empty()) {
            if (key == "name") cfg.name = std::string(value);
            else if (key == "t0") cfg.t0 = parse_number(value, lineno);
            else if (key == "t1") cfg.t1 = parse_number(value, lineno);
            else if (key == "samples") {
                const double n = parse_number(value, lineno);
                if (n != std::floor(n) || n < 2 || n > 1e7) throw ParseError(lineno, "samples must be an integer >= 2");
                cfg.integrator.sample_count = static_cast<int>(n);
            } else if (key == "rtol") cfg.integrator.rtol = parse_number(value, lineno);
            else if (key == "atol") cfg.integrator.atol = parse_number(value, lineno);
            else if (key == "max_step") cfg.integrator.max_step = parse_number(value, lineno);
            else if (key == "initial_step") cfg.integrator.initial_step = parse_number(value, lineno);
            else if (key == "schemes") {
                cfg.schemes.clear();
                for (auto s : detail::split(value, ',')) {
                    try {
                        cfg.schemes.push_back(parse_scheme(s));
                    } catch (const ValidationError& e) {
                        throw ParseError(lineno, e.what());
                    }
                }
            } else if (key == "initial") {
                cfg.initial = parse_initial(value, lineno);
            } else if (key == "initial_im") {
                const auto im = parse_list(value, lineno);
                initial_im = ComplexVector(static_cast<Eigen::Index>(im.size()));
                for (std::size_t k = 0; k < im.size(); ++k) (*initial_im)(k) = Complex(0.0, im[k]);
                im_line = lineno;
            } else if (key == "out_dir") cfg.out_dir = std::string(value);
            else if (key == "plot") {
                if (value == "true" || value == "yes" || value == "1") cfg.write_plot = true;
                else if (value == "false" || value == "no" || value == "0") cfg.write_plot = false;
                else throw ParseError(lineno, "plot must be true or false");
            } else throw ParseError(lineno, "unknown key '" + key + "'");
        } else if (section == "circuit") {
            if (key == "qubits") {
                const double n = parse_number(value, lineno);
                if (n != std::floor(n) || n < 1 || n > 10) throw ParseError(lineno, "qubits must be in [1, 10]");
                if (!gate_lines.empty()) throw ParseError(lineno, "qubits must precede gates");
                cfg.circuit->n_qubits = static_cast<int>(n);
            } else if (key == "coupling") {
                cfg.circuit->coupling = parse_number(value, lineno);
                if (cfg.circuit->coupling == 0.0) throw ParseError(lineno, "coupling must be non-zero");
            } else if (key == "gate") {
                gate_lines.emplace_back(std::string(value), lineno);
            } else throw ParseError(lineno, "unknown circuit key '" + key + "'");
        } else if (section == "sweep") {
            cfg.sweep.push_back({key, parse_list(value, lineno)});
        } else {
            auto& spec = *cfg.hamiltonian;
            if (key == "H" || key == "HR") {
                spec.matrixR = parse_matrix(value, lineno);
                spec.dim = static_cast<int>(spec.matrixR.rows());
            } else if (key == "HI") {
                spec.matrixI = parse_matrix(value, lineno);
            } else {
                set_hamiltonian_field(spec, key, parse_number(value, lineno), lineno);
            }
        }
    }

    if (cfg.circuit) {
        for (const auto& [text, ln] : gate_lines) {
            cfg.circuit->gates.push_back(detail::parse_gate_line(text, cfg.circuit->n_qubits, ln));
        }
    }
    if (initial_im) {
        if (cfg.initial.size() != initial_im->size()) {
            throw ParseError(im_line, "initial_im length differs from initial");
        }
        cfg.initial += *initial_im;
    }
    return cfg;
}

// Checks cross-field invariants; called after parsing and after CLI overrides.
inline void validate(const ScenarioConfig& cfg) {
    if (cfg.schemes.empty()) throw ValidationError(cfg.name + ": at least one scheme is required");
    cfg.integrator.validate();
    const bool gate_run = cfg.has(Scheme::Gate);
    if (gate_run) {
        if (!cfg.circuit) throw ValidationError(cfg.name + ": scheme 'gate' needs a [circuit] section");
        if (cfg.schemes.size() != 1) throw ValidationError(cfg.name + ": 'gate' cannot be combined with other schemes");
        const Eigen::Index dim = Eigen::Index{1} << cfg.circuit->n_qubits;
        if (cfg.initial.size() != 0 && cfg.initial.size() != dim) {
            throw ValidationError(cfg.name + ": initial state needs 2^qubits amplitudes");
        }
        return;
    }
    if (!cfg.hamiltonian) throw ValidationError(cfg.name + ": missing Hamiltonian section");
    validate(*cfg.hamiltonian);
    if (!(cfg.t1 > cfg.t0)) throw ValidationError(cfg.name + ": need t1 > t0");
    const auto& spec = *cfg.hamiltonian;
    if (cfg.initial.size() != 0 && cfg.initial.size() != spec.dim) {
        throw ValidationError(cfg.name + ": initial state length does not match the Hamiltonian");
    }
    if (cfg.initial.size() != 0 && !cfg.initial.allFinite()) {
        throw ValidationError(cfg.name + ": initial state must be finite");
    }
    if (cfg.has(Scheme::RCA) && !is_two_level(spec.kind)) {
        throw ValidationError(cfg.name + ": scheme 'rca' needs a two-level Hamiltonian");
    }
    if (cfg.has(Scheme::Doubled) && is_time_dependent(spec.kind)) {
        throw ValidationError(cfg.name + ": scheme 'doubled' needs a static Hamiltonian");
    }
    for (const auto& axis : cfg.sweep) {
        if (axis.values.empty()) throw ValidationError(cfg.name + ": sweep axis '" + axis.key + "' is empty");
    }
}

inline ScenarioConfig parse_scenario_text(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

inline ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config '" + path + "'");
    return parse_scenario(in);
}

// Initial amplitudes with the default (first basis state) filled in.
inline ComplexVector initial_amplitudes(const ScenarioConfig& cfg) {
    if (cfg.initial.size() != 0) return cfg.initial;
    const Eigen::Index dim =
        cfg.has(Scheme::Gate) ? (Eigen::Index{1} << cfg.circuit->n_qubits) : cfg.hamiltonian->dim;
    ComplexVector c = ComplexVector::Zero(dim);
    c(0) = 1.0;
    return c;
}

}  // namespace qcmap
