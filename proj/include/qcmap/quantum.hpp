// quantum.hpp - The quantum reference: numerical TDSE plus closed forms.
//
// evolve_tdse always integrates, even for static Hamiltonians where a matrix
// exponential would do, so time-dependent, dissipative and driven runs share
// one validated path. The closed forms below are cross-checks.

#pragma once

#include "qcmap/errors.hpp"
#include "qcmap/integrate.hpp"
#include "qcmap/model.hpp"
#include "qcmap/types.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qcmap {

// Complex amplitudes c_n of the truncated basis expansion.
using AmplitudeState = ComplexVector;
using ComplexTrajectory = Sampled<ComplexVector>;

namespace detail {

// Interleaved (Re c_0, Im c_0, Re c_1, ...).
inline Vector interleave(const ComplexVector& c) {
    Vector y(2 * c.size());
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        y(2 * k) = c(k).real();
        y(2 * k + 1) = c(k).imag();
    }
    return y;
}

inline ComplexVector deinterleave(const Eigen::Ref<const Vector>& y) {
    ComplexVector c(y.size() / 2);
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = Complex(y(2 * k), y(2 * k + 1));
    return c;
}

}  // namespace detail

// c' = -i (H_R + i H_I) c - i f(t), integrated componentwise.
inline ComplexTrajectory evolve_tdse(const HamiltonianSpec& spec, const AmplitudeState& c0,
                                     double t0, double t1, const IntegratorConfig& cfg) {
    validate(spec);
    if (c0.size() != spec.dim) {
        throw ValidationError("evolve_tdse: initial amplitude dimension does not match spec");
    }
    const Eigen::Index n = spec.dim;
    const bool varying = is_time_dependent(spec.kind);
    const bool driven = is_driven(spec.kind);
    const HamiltonianParts fixed = eval_h(spec, t0);

    // With c = a + i b:  a' = H_R b + H_I a,  b' = -H_R a + H_I b - f.
    VectorField rhs = [&, n](double t, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dy) {
        const HamiltonianParts h = varying ? eval_h(spec, t) : HamiltonianParts{};
        const Matrix& hr = varying ? h.real : fixed.real;
        const Matrix& hi = varying ? h.imag : fixed.imag;
        Vector a(n), b(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            a(k) = y(2 * k);
            b(k) = y(2 * k + 1);
        }
        Vector da = hr * b + hi * a;
        Vector db = -hr * a + hi * b;
        if (driven) db -= eval_drive(spec, t);
        for (Eigen::Index k = 0; k < n; ++k) {
            dy(2 * k) = da(k);
            dy(2 * k + 1) = db(k);
        }
    };

    const std::string label = "quantum";
    Trajectory raw = with_context("evolve_tdse(" + std::string(kind_name(spec.kind)) + ")", [&] {
        return integrate(rhs, detail::interleave(c0), t0, t1, cfg, label);
    });

    ComplexTrajectory out;
    out.label = label;
    out.times = std::move(raw.times);
    out.states.reserve(raw.states.size());
    for (const auto& y : raw.states) out.states.push_back(detail::deinterleave(y));
    return out;
}

// Degenerate pair (energy eps, coupling V) started in state 1:
// c1 = e^{-i eps t} cos(V t),  c2 = -i e^{-i eps t} sin(V t).
inline std::pair<Complex, Complex> two_level_analytic(double eps, double V, double t) {
    const Complex phase = std::exp(Complex(0.0, -eps * t));
    return {phase * std::cos(V * t), Complex(0.0, -1.0) * phase * std::sin(V * t)};
}

// (E_plus, E_minus) of [[E1, V], [V, E2]], E_plus >= E_minus.
inline std::pair<double, double> eigenvalues_two_level(double E1, double E2, double V) {
    const double mean = 0.5 * (E1 + E2);
    const double half_gap = 0.5 * std::sqrt((E1 - E2) * (E1 - E2) + 4.0 * V * V);
    return {mean + half_gap, mean - half_gap};
}

// Zener's asymptotic probability for a linear sweep of slope A: the
// non-adiabatic passage probability exp(-pi V^2 / A).
inline double zener_probability(double V, double A) {
    if (!(A > 0.0)) throw DomainError("zener_probability: sweep rate A must be positive");
    return std::exp(-std::numbers::pi * V * V / A);
}

inline Vector populations(const AmplitudeState& c) { return c.cwiseAbs2(); }

}  // namespace qcmap
