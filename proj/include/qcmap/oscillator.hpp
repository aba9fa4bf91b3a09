// oscillator.hpp - Classical side of the amplitude <-> oscillator mapping.
//
// A quantum amplitude c_n is identified with the phase-space point of one
// oscillator through c_n = (q_n + i p_n) / sqrt(2). This header provides:
//
//   * evolve_exact_real          q' = H p, p' = -H q (real, static H)
//   * evolve_exact_td            q'' + H^2 q - H' H^-1 q' = 0 (swept H)
//   * evolve_exact_nonhermitian  Newton form for H = H_R + i H_I, optional drive
//   * evolve_rca                 position-coupled approximations (two-level)
//   * evolve_doubled             2N oscillators, momenta as extra coordinates
//
// Velocity-coupled systems are integrated as first-order systems in (q, q');
// momenta are reconstructed only at sample times. Initial velocities always
// come from the first-order relations at t0.

#pragma once

#include "qcmap/errors.hpp"
#include "qcmap/integrate.hpp"
#include "qcmap/model.hpp"
#include "qcmap/quantum.hpp"
#include "qcmap/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

namespace qcmap {

struct PhaseSpaceState {
    Vector q;
    Vector p;

    Eigen::Index dim() const noexcept { return q.size(); }
};

// Doubled scheme: p is promoted to an independent coordinate, so the
// state carries both coordinate sets and their velocities.
struct DoubledState {
    Vector q;
    Vector p_as_position;
    Vector q_velocity;
    Vector p_velocity;
};

struct PhysicalOscillatorParams {
    double m1{1.0}, m2{1.0};
    double omega1{1.0}, omega2{1.0};
    double kappa{0.0};
};

struct DimensionlessCoupling {
    double omega1;
    double omega2;
    double K;           // kappa / sqrt(m1 m2 omega1 omega2)
    double mean_omega;  // sqrt(omega1 omega2), used by the symmetric X-form
};

// q_n'' + a q_n' + b q_n + c q_m + d q_m' = 0 for one row of a two-level system.
struct NewtonCoefficients {
    double a, b, c, d;
};

using PhaseTrajectory = Sampled<PhaseSpaceState>;
using DoubledTrajectory = Sampled<DoubledState>;

// ------------------------------------------------------------- conversions

inline PhaseSpaceState qp_from_amplitudes(const AmplitudeState& c) {
    return {std::numbers::sqrt2 * c.real(), std::numbers::sqrt2 * c.imag()};
}

inline AmplitudeState amplitudes_from_qp(const PhaseSpaceState& s) {
    if (s.q.size() != s.p.size()) throw ValidationError("PhaseSpaceState: q and p differ in length");
    AmplitudeState c(s.q.size());
    for (Eigen::Index k = 0; k < s.q.size(); ++k) {
        c(k) = Complex(s.q(k), s.p(k)) / std::numbers::sqrt2;
    }
    return c;
}

// |z_n|^2 = (q_n^2 + p_n^2) / 2.
inline Vector populations(const PhaseSpaceState& s) {
    return 0.5 * (s.q.cwiseAbs2() + s.p.cwiseAbs2());
}

// Classical Hamiltonian function (1/2) sum H_nm (q_n q_m + p_n p_m).
inline double classical_energy(const Matrix& H, const PhaseSpaceState& s) {
    return 0.5 * (s.q.dot(H * s.q) + s.p.dot(H * s.p));
}

inline ComplexTrajectory to_amplitudes(const PhaseTrajectory& traj) {
    ComplexTrajectory out;
    out.times = traj.times;
    out.label = traj.label;
    out.states.reserve(traj.size());
    for (const auto& s : traj.states) out.states.push_back(amplitudes_from_qp(s));
    return out;
}

inline PhaseTrajectory to_phase_space(const ComplexTrajectory& traj) {
    PhaseTrajectory out;
    out.times = traj.times;
    out.label = traj.label;
    out.states.reserve(traj.size());
    for (const auto& c : traj.states) out.states.push_back(qp_from_amplitudes(c));
    return out;
}

// ------------------------------------------------------- singularity guards

namespace detail {

inline constexpr double kTwoLevelSingularity = 1e-10;
inline constexpr double kConditionLimit = 1e12;

// Two-level denominators omega1 omega2 - V^2 (the determinant of H_R).
inline void guard_two_level(const Matrix& hr, double t) {
    const double diag = hr(0, 0) * hr(1, 1);
    const double off = hr(0, 1) * hr(1, 0);
    const double det = diag - off;
    const double scale = std::max(std::abs(diag), std::abs(off));
    if (!(std::abs(det) > kTwoLevelSingularity * scale)) {
        std::ostringstream os;
        os << "H_R is singular at t = " << t << " (omega1*omega2 - V^2 = " << det << ")";
        throw SingularityError(os.str(), t, det);
    }
}

// LU of H_R with a reciprocal-condition check.
inline Eigen::PartialPivLU<Matrix> checked_lu(const Matrix& hr, double t) {
    if (hr.rows() == 2) guard_two_level(hr, t);
    Eigen::PartialPivLU<Matrix> lu(hr);
    const double rcond = lu.rcond();
    if (!(rcond * kConditionLimit > 1.0)) {
        std::ostringstream os;
        os << "H_R is ill-conditioned at t = " << t << " (condition estimate "
           << (rcond > 0 ? 1.0 / rcond : INFINITY) << ")";
        throw SingularityError(os.str(), t, lu.determinant());
    }
    return lu;
}

inline void check_dim(const HamiltonianSpec& spec, const PhaseSpaceState& s, const char* who) {
    if (s.q.size() != spec.dim || s.p.size() != spec.dim) {
        throw ValidationError(std::string(who) + ": state dimension does not match spec");
    }
    if (!s.q.allFinite() || !s.p.allFinite()) {
        throw ValidationError(std::string(who) + ": initial state must be finite");
    }
}

inline Vector stack(const Vector& a, const Vector& b) {
    Vector y(a.size() + b.size());
    y << a, b;
    return y;
}

}  // namespace detail

// p = H_R^{-1} (q' - H_I q), via a linear solve. Reduces to H^{-1} q' for real H.
inline Vector recover_momenta(const Matrix& HR, const Matrix& HI, const Vector& q,
                              const Vector& qdot, double t = 0.0) {
    const auto lu = detail::checked_lu(HR, t);
    if (HI.size() == 0) return lu.solve(qdot);
    return lu.solve(qdot - HI * q);
}

// Closed-form two-level momenta with omega_n = E_n and diagonal H_I.
inline Vector two_level_momenta(double w1, double w2, double V, double l1, double l2,
                                const Vector& q, const Vector& qdot) {
    const double D = w1 * w2 - V * V;
    Vector p(2);
    p(0) = (w2 * qdot(0) - V * qdot(1) - l1 * w2 * q(0) + V * l2 * q(1)) / D;
    p(1) = (w1 * qdot(1) - V * qdot(0) - l2 * w1 * q(1) + V * l1 * q(0)) / D;
    return p;
}

// ---------------------------------------------------------- exact: real, static

inline PhaseTrajectory evolve_exact_real(const Matrix& H, const PhaseSpaceState& s0, double t0,
                                         double t1, const IntegratorConfig& cfg) {
    const Eigen::Index n = H.rows();
    if (H.cols() != n || s0.q.size() != n || s0.p.size() != n) {
        throw ValidationError("evolve_exact_real: dimension mismatch");
    }
    VectorField rhs = [&H, n](double, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dy) {
        dy.head(n).noalias() = H * y.tail(n);
        dy.tail(n).noalias() = -H * y.head(n);
    };
    Trajectory raw = integrate(rhs, detail::stack(s0.q, s0.p), t0, t1, cfg, "exact");

    PhaseTrajectory out;
    out.label = "exact";
    out.times = std::move(raw.times);
    out.states.reserve(raw.states.size());
    for (const auto& y : raw.states) out.states.push_back({y.head(n), y.tail(n)});
    return out;
}

inline PhaseTrajectory evolve_exact_real(const HamiltonianSpec& spec, const PhaseSpaceState& s0,
                                         double t0, double t1, const IntegratorConfig& cfg) {
    validate(spec);
    detail::check_dim(spec, s0, "evolve_exact_real");
    if (is_time_dependent(spec.kind) || is_driven(spec.kind)) {
        throw SpecificationError("evolve_exact_real: requires a static, undriven Hamiltonian");
    }
    const HamiltonianParts h = eval_h(spec, t0);
    if (!h.imag.isZero(0.0)) {
        throw SpecificationError("evolve_exact_real: Hamiltonian has a non-zero imaginary part");
    }
    return with_context("evolve_exact_real", [&] { return evolve_exact_real(h.real, s0, t0, t1, cfg); });
}

// ------------------------------------------------------ exact: time-dependent

// Component form of q'' + H^2 q - H' H^{-1} q' = 0 for H = [[w1, V], [V, w2]]
// with H' = diag(dw1, dw2). Row 1 is returned; swap indices for row 2.
inline NewtonCoefficients lz_exact_coefficients(double w1, double w2, double dw1, double V) {
    const double D = w1 * w2 - V * V;
    return {-dw1 * w2 / D, w1 * w1 + V * V, V * (w1 + w2), dw1 * V / D};
}

inline PhaseTrajectory evolve_exact_td(const HamiltonianSpec& spec, const PhaseSpaceState& s0,
                                       double t0, double t1, const IntegratorConfig& cfg) {
    validate(spec);
    detail::check_dim(spec, s0, "evolve_exact_td");
    if (is_complex(spec.kind) || is_driven(spec.kind)) {
        throw SpecificationError("evolve_exact_td: requires a real Hamiltonian");
    }
    const Eigen::Index n = spec.dim;

    VectorField rhs = [&spec, n](double t, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dy) {
        const Matrix H = eval_h(spec, t).real;
        const Matrix Hdot = eval_hdot(spec, t);
        const auto lu = detail::checked_lu(H, t);
        const auto q = y.head(n);
        const auto v = y.tail(n);
        dy.head(n) = v;
        dy.tail(n) = -(H * (H * q)) + Hdot * lu.solve(Vector(v));
    };

    const Matrix H0 = eval_h(spec, t0).real;
    const Vector v0 = H0 * s0.p;

    return with_context("evolve_exact_td(" + std::string(kind_name(spec.kind)) + ")", [&] {
        Trajectory raw = integrate(rhs, detail::stack(s0.q, v0), t0, t1, cfg, "exact");
        PhaseTrajectory out;
        out.label = "exact";
        out.times = raw.times;
        out.states.reserve(raw.size());
        for (std::size_t k = 0; k < raw.size(); ++k) {
            const double t = raw.times[k];
            const Vector q = raw.states[k].head(n);
            const Vector v = raw.states[k].tail(n);
            out.states.push_back({q, recover_momenta(eval_h(spec, t).real, Matrix(), q, v, t)});
        }
        return out;
    });
}

// -------------------------------------------------- exact: non-Hermitian

// Two-level row-1 coefficients for H = [[w1 + i l1, V], [V, w2 + i l2]].
// Row 2 follows by exchanging (w1, l1) with (w2, l2).
inline NewtonCoefficients dissipative_exact_coefficients(double w1, double w2, double V, double l1,
                                                         double l2) {
    const double D = w1 * w2 - V * V;
    const double mix = (w1 * w2 * l1 - V * V * l2) / D;
    return {
        -(l1 + mix),
        (w1 * w1 + V * V) + l1 * mix,
        V * (w1 + w2) - (V * w1 * l1 * l2 - V * w1 * l2 * l2) / D,
        w1 * V * (l1 - l2) / D,
    };
}

// q'' = -H_R^2 q + H_I q' + H_R H_I H_R^{-1} (q' - H_I q) - sqrt(2) H_R f(t)
inline PhaseTrajectory evolve_exact_nonhermitian(const HamiltonianSpec& spec,
                                                 const PhaseSpaceState& s0, double t0, double t1,
                                                 const IntegratorConfig& cfg) {
    validate(spec);
    detail::check_dim(spec, s0, "evolve_exact_nonhermitian");
    if (is_time_dependent(spec.kind)) {
        throw SpecificationError("evolve_exact_nonhermitian: requires a static Hamiltonian");
    }
    const Eigen::Index n = spec.dim;
    const HamiltonianParts h = eval_h(spec, t0);
    const Matrix& HR = h.real;
    const Matrix& HI = h.imag;
    const auto lu = with_context("evolve_exact_nonhermitian", [&] { return detail::checked_lu(HR, t0); });

    const Matrix M = HR * HI * lu.inverse();
    const Matrix velocity_coeff = HI + M;
    const Matrix position_coeff = -(HR * HR) - M * HI;
    const bool driven = is_driven(spec.kind);

    VectorField rhs = [&, n](double t, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dy) {
        const auto q = y.head(n);
        const auto v = y.tail(n);
        dy.head(n) = v;
        dy.tail(n).noalias() = position_coeff * q + velocity_coeff * v;
        if (driven) dy.tail(n) -= std::numbers::sqrt2 * (HR * eval_drive(spec, t));
    };

    const Vector v0 = HR * s0.p + HI * s0.q;
    return with_context("evolve_exact_nonhermitian(" + std::string(kind_name(spec.kind)) + ")", [&] {
        Trajectory raw = integrate(rhs, detail::stack(s0.q, v0), t0, t1, cfg, "exact");
        PhaseTrajectory out;
        out.label = "exact";
        out.times = raw.times;
        out.states.reserve(raw.size());
        for (const auto& y : raw.states) {
            const Vector q = y.head(n);
            out.states.push_back({q, lu.solve(Vector(y.tail(n) - HI * q))});
        }
        return out;
    });
}

// Dispatches to the exact scheme appropriate for the spec kind.
inline PhaseTrajectory evolve_exact(const HamiltonianSpec& spec, const PhaseSpaceState& s0,
                                    double t0, double t1, const IntegratorConfig& cfg) {
    if (is_time_dependent(spec.kind)) return evolve_exact_td(spec, s0, t0, t1, cfg);
    if (is_complex(spec.kind)) return evolve_exact_nonhermitian(spec, s0, t0, t1, cfg);
    return evolve_exact_real(spec, s0, t0, t1, cfg);
}

// ------------------------------------------------------------------- RCA

namespace detail {

inline void guard_frequency(double w, double t) {
    if (!(w > 0.0)) {
        std::ostringstream os;
        os << "oscillator frequency became non-positive (" << w << ") at t = " << t;
        throw NegativeFrequencyError(os.str(), t);
    }
}

}  // namespace detail

// Amplitude of the mismatch between the driven-RCA shorthand
// -sqrt2 mu_n (omega_n + V) cos(wt) and the matrix form -sqrt2 (H_R f)_n.
// Zero when mu1 = mu2.
inline Vector driven_rca_residual(const HamiltonianSpec& spec) {
    Vector r = Vector::Zero(2);
    if (!is_driven(spec.kind)) return r;
    const Vector mu = (Vector(2) << spec.mu1, spec.mu2).finished();
    const Vector matrix_form = eval_h(spec, 0.0).real * mu;
    const Vector shorthand = (Vector(2) << spec.mu1 * (spec.E1 + spec.V), spec.mu2 * (spec.E2 + spec.V)).finished();
    return std::numbers::sqrt2 * (matrix_form - shorthand).cwiseAbs();
}

// Realistic-coupling approximation for the two-level kinds:
//   static       q_n'' + w_n^2 q_n + 2 V w_n q_m = 0,             p_n = q_n' / w_n
//   swept        q_n'' + w_n^2 q_n - (w_n'/w_n) q_n' + 2 V w_n q_m = 0
//   dissipative  q_n'' - 2 l_n q_n' + (w_n^2 + l_n^2) q_n + V (w_1 + w_2) q_m
//                    = -sqrt2 mu_n (w_n + V) cos(w t),           p_n = (q_n' - l_n q_n) / w_n
// The diagonal velocity term of the swept form is integrated as written.
inline PhaseTrajectory evolve_rca(const HamiltonianSpec& spec, const PhaseSpaceState& s0,
                                  double t0, double t1, const IntegratorConfig& cfg) {
    validate(spec);
    detail::check_dim(spec, s0, "evolve_rca");
    if (!is_two_level(spec.kind)) {
        throw SpecificationError("evolve_rca: only defined for two-level kinds, got " +
                                 std::string(kind_name(spec.kind)));
    }
    const double V = spec.V;
    const bool swept = is_time_dependent(spec.kind);
    const bool damped = is_complex(spec.kind);
    const bool driven = is_driven(spec.kind);
    const double l[2] = {spec.lambda1, spec.lambda2};

    auto frequencies = [&spec](double t) {
        const Matrix h = eval_h(spec, t).real;
        return std::pair{h(0, 0), h(1, 1)};
    };

    VectorField rhs = [&](double t, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dy) {
        const auto [w1, w2] = frequencies(t);
        detail::guard_frequency(w1, t);
        detail::guard_frequency(w2, t);
        const double w[2] = {w1, w2};
        const double drive = driven ? std::cos(spec.omega_drive * t) : 0.0;
        const double mu[2] = {spec.mu1, spec.mu2};
        Eigen::Vector2d rate = Eigen::Vector2d::Zero();
        if (swept) {
            const Matrix hd = eval_hdot(spec, t);
            rate << hd(0, 0), hd(1, 1);
        }
        for (int k = 0; k < 2; ++k) {
            const int m = 1 - k;
            const double q = y(k), v = y(2 + k), q_other = y(m);
            double acc;
            if (damped) {
                acc = 2.0 * l[k] * v - (w[k] * w[k] + l[k] * l[k]) * q - V * (w1 + w2) * q_other -
                      std::numbers::sqrt2 * mu[k] * (w[k] + V) * drive;
            } else {
                acc = -w[k] * w[k] * q - 2.0 * V * w[k] * q_other;
                if (swept) acc += rate(k) / w[k] * v;
            }
            dy(k) = v;
            dy(2 + k) = acc;
        }
    };

    // Invert the RCA momentum relation so the reconstruction at t0 returns s0.
    const auto [w1_0, w2_0] = frequencies(t0);
    detail::guard_frequency(w1_0, t0);
    detail::guard_frequency(w2_0, t0);
    Vector y0(4);
    y0 << s0.q(0), s0.q(1), w1_0 * s0.p(0) + (damped ? l[0] * s0.q(0) : 0.0),
        w2_0 * s0.p(1) + (damped ? l[1] * s0.q(1) : 0.0);

    return with_context("evolve_rca(" + std::string(kind_name(spec.kind)) + ")", [&] {
        Trajectory raw = integrate(rhs, y0, t0, t1, cfg, "rca");
        PhaseTrajectory out;
        out.label = "rca";
        out.times = raw.times;
        out.states.reserve(raw.size());
        for (std::size_t k = 0; k < raw.size(); ++k) {
            const double t = raw.times[k];
            const auto [w1, w2] = frequencies(t);
            detail::guard_frequency(w1, t);
            detail::guard_frequency(w2, t);
            const Vector& y = raw.states[k];
            PhaseSpaceState s{y.head(2), Vector(2)};
            const double w[2] = {w1, w2};
            for (int n = 0; n < 2; ++n) {
                s.p(n) = (y(2 + n) - (damped ? l[n] * y(n) : 0.0)) / w[n];
            }
            out.states.push_back(std::move(s));
        }
        return out;
    });
}

// ---------------------------------------------------------------- doubled

// q'' = (H_I^2 - H_R^2) q + (H_R H_I + H_I H_R) p - sqrt2 H_R f
// p'' = (H_I^2 - H_R^2) p - (H_R H_I + H_I H_R) q - sqrt2 (H_I f + f')
// No velocity couplings; 2N oscillators for N states.
inline DoubledTrajectory evolve_doubled(const HamiltonianSpec& spec, const AmplitudeState& c0,
                                        double t0, double t1, const IntegratorConfig& cfg) {
    validate(spec);
    if (c0.size() != spec.dim) throw ValidationError("evolve_doubled: dimension mismatch");
    if (is_time_dependent(spec.kind)) {
        throw SpecificationError("evolve_doubled: requires a static Hamiltonian");
    }
    const Eigen::Index n = spec.dim;
    const HamiltonianParts h = eval_h(spec, t0);
    const Matrix& HR = h.real;
    const Matrix& HI = h.imag;
    const Matrix K = HI * HI - HR * HR;
    const Matrix S = HR * HI + HI * HR;
    const bool driven = is_driven(spec.kind);

    VectorField rhs = [&, n](double t, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dy) {
        const auto q = y.segment(0, n);
        const auto p = y.segment(n, n);
        dy.segment(0, 2 * n) = y.segment(2 * n, 2 * n);
        dy.segment(2 * n, n).noalias() = K * q + S * p;
        dy.segment(3 * n, n).noalias() = K * p - S * q;
        if (driven) {
            const Vector f = eval_drive(spec, t);
            dy.segment(2 * n, n) -= std::numbers::sqrt2 * (HR * f);
            dy.segment(3 * n, n) -= std::numbers::sqrt2 * (HI * f + eval_drive_rate(spec, t));
        }
    };

    const PhaseSpaceState s0 = qp_from_amplitudes(c0);
    Vector y0(4 * n);
    y0 << s0.q, s0.p, HR * s0.p + HI * s0.q,
        -HR * s0.q + HI * s0.p - std::numbers::sqrt2 * eval_drive(spec, t0);

    return with_context("evolve_doubled(" + std::string(kind_name(spec.kind)) + ")", [&] {
        Trajectory raw = integrate(rhs, y0, t0, t1, cfg, "doubled");
        DoubledTrajectory out;
        out.label = "doubled";
        out.times = raw.times;
        out.states.reserve(raw.size());
        for (const auto& y : raw.states) {
            out.states.push_back({y.segment(0, n), y.segment(n, n), y.segment(2 * n, n), y.segment(3 * n, n)});
        }
        return out;
    });
}

inline PhaseTrajectory to_phase_space(const DoubledTrajectory& traj) {
    PhaseTrajectory out;
    out.times = traj.times;
    out.label = traj.label;
    out.states.reserve(traj.size());
    for (const auto& s : traj.states) out.states.push_back({s.q, s.p_as_position});
    return out;
}

// Amplitude-first overloads: derive (q, p) from c0.
inline PhaseTrajectory evolve_exact(const HamiltonianSpec& spec, const AmplitudeState& c0, double t0,
                                    double t1, const IntegratorConfig& cfg) {
    return evolve_exact(spec, qp_from_amplitudes(c0), t0, t1, cfg);
}

inline PhaseTrajectory evolve_rca(const HamiltonianSpec& spec, const AmplitudeState& c0, double t0,
                                  double t1, const IntegratorConfig& cfg) {
    return evolve_rca(spec, qp_from_amplitudes(c0), t0, t1, cfg);
}

// -------------------------------------------------------- eigenfrequencies

// Squared normal-mode frequencies of the exact two-level Newton system
// (eigenvalues of H^2). Returned as (Omega_plus^2, Omega_minus^2).
inline std::pair<double, double> exact_eigenfrequencies(double E1, double E2, double V) {
    const double sum = E1 * E1 + E2 * E2 + 2.0 * V * V;
    const double root = std::sqrt((E1 * E1 - E2 * E2) * (E1 * E1 - E2 * E2) +
                                  4.0 * V * V * (E1 + E2) * (E1 + E2));
    return {0.5 * (sum + root), 0.5 * (sum - root)};
}

// Same for the RCA equations q_n'' + E_n^2 q_n + 2 V E_n q_m = 0.
inline std::pair<double, double> rca_eigenfrequencies(double E1, double E2, double V) {
    const double sum = E1 * E1 + E2 * E2;
    const double root =
        std::sqrt((E1 * E1 - E2 * E2) * (E1 * E1 - E2 * E2) + 16.0 * V * V * E1 * E2);
    return {0.5 * (sum + root), 0.5 * (sum - root)};
}

// ---------------------------------------------------- physical parameters

// Mass-spring pair with Hamiltonian sum p_n^2/(2 m_n) + m_n w_n^2 x_n^2 / 2
// - kappa x1 x2. Scaling x_n by sqrt(m_n w_n) gives the dimensionless coupling
// K = kappa / sqrt(m1 m2 w1 w2). The symmetric X-form uses the mean
// frequency sqrt(w1 w2), for which K = kappa / (mu * mean) with mu = sqrt(m1 m2).
inline DimensionlessCoupling physical_to_dimensionless(const PhysicalOscillatorParams& p) {
    if (!(p.m1 > 0.0) || !(p.m2 > 0.0) || !(p.omega1 > 0.0) || !(p.omega2 > 0.0)) {
        throw ValidationError("physical_to_dimensionless: masses and frequencies must be positive");
    }
    const double mean = std::sqrt(p.omega1 * p.omega2);
    return {p.omega1, p.omega2, p.kappa / std::sqrt(p.m1 * p.m2 * p.omega1 * p.omega2), mean};
}

}  // namespace qcmap
