// model.hpp - Declarative Hamiltonians H(t) = H_R(t) + i H_I(t) and drives f(t).
//
// Every scenario is plain data. Evaluation is pure: the same spec and time
// always produce bit-identical matrices. Units have hbar = 1; the Landau-Zener
// scenarios are expressed in units of sqrt(hbar/A) (time) and sqrt(hbar A)
// (energy) purely through parameter choice.

#pragma once

#include "qcmap/errors.hpp"
#include "qcmap/types.hpp"

#include <array>
#include <cmath>
#include <string>
#include <string_view>

namespace qcmap {

enum class HamiltonianKind {
    StaticReal,            // explicit real symmetric N x N matrix
    TwoLevel,              // [[E1, V], [V, E2]]
    LZLinear,              // E_{1/2}(t) = E0 +- A t
    LZArctan,              // E_{1/2}(t) = 2 E0 (1 +- atan(t / E0))
    DissipativeTwoLevel,   // diag(E_n + i lambda_n) with real coupling V
    DrivenDissipative,     // as above plus f(t) = cos(w t) (mu1, mu2)
    GeneralComplexStatic,  // explicit H_R, H_I of any shape
};

inline constexpr std::array<HamiltonianKind, 7> kAllKinds = {
    HamiltonianKind::StaticReal,          HamiltonianKind::TwoLevel,
    HamiltonianKind::LZLinear,            HamiltonianKind::LZArctan,
    HamiltonianKind::DissipativeTwoLevel, HamiltonianKind::DrivenDissipative,
    HamiltonianKind::GeneralComplexStatic,
};

inline std::string_view kind_name(HamiltonianKind kind) {
    switch (kind) {
        case HamiltonianKind::StaticReal: return "StaticReal";
        case HamiltonianKind::TwoLevel: return "TwoLevel";
        case HamiltonianKind::LZLinear: return "LZLinear";
        case HamiltonianKind::LZArctan: return "LZArctan";
        case HamiltonianKind::DissipativeTwoLevel: return "DissipativeTwoLevel";
        case HamiltonianKind::DrivenDissipative: return "DrivenDissipative";
        case HamiltonianKind::GeneralComplexStatic: return "GeneralComplexStatic";
    }
    throw SpecificationError("unknown Hamiltonian kind");
}

inline HamiltonianKind parse_kind(std::string_view name) {
    for (auto kind : kAllKinds) {
        if (kind_name(kind) == name) return kind;
    }
    throw SpecificationError("unknown Hamiltonian kind '" + std::string(name) + "'");
}

inline bool is_two_level(HamiltonianKind kind) noexcept {
    return kind != HamiltonianKind::StaticReal && kind != HamiltonianKind::GeneralComplexStatic;
}

inline bool is_time_dependent(HamiltonianKind kind) noexcept {
    return kind == HamiltonianKind::LZLinear || kind == HamiltonianKind::LZArctan;
}

// Kinds whose H_I may be non-zero.
inline bool is_complex(HamiltonianKind kind) noexcept {
    return kind == HamiltonianKind::DissipativeTwoLevel ||
           kind == HamiltonianKind::DrivenDissipative ||
           kind == HamiltonianKind::GeneralComplexStatic;
}

inline bool is_driven(HamiltonianKind kind) noexcept {
    return kind == HamiltonianKind::DrivenDissipative;
}

struct HamiltonianSpec {
    HamiltonianKind kind{HamiltonianKind::TwoLevel};
    int dim{2};

    double E1{0.0}, E2{0.0};
    double V{0.0};
    double E0{0.0}, A{0.0};
    // Signed: dissipation means lambda <= 0.
    double lambda1{0.0}, lambda2{0.0};
    double mu1{0.0}, mu2{0.0};
    double omega_drive{0.0};

    // Used by StaticReal (matrixR) and GeneralComplexStatic (both).
    Matrix matrixR;
    Matrix matrixI;
};

struct HamiltonianParts {
    Matrix real;
    Matrix imag;
};

// ----------------------------------------------------------------- factories

inline HamiltonianSpec two_level(double E1, double E2, double V) {
    HamiltonianSpec s;
    s.kind = HamiltonianKind::TwoLevel;
    s.E1 = E1;
    s.E2 = E2;
    s.V = V;
    return s;
}

inline HamiltonianSpec lz_linear(double E0, double A, double V) {
    HamiltonianSpec s;
    s.kind = HamiltonianKind::LZLinear;
    s.E0 = E0;
    s.A = A;
    s.V = V;
    return s;
}

inline HamiltonianSpec lz_arctan(double E0, double V) {
    HamiltonianSpec s;
    s.kind = HamiltonianKind::LZArctan;
    s.E0 = E0;
    s.V = V;
    return s;
}

inline HamiltonianSpec dissipative_two_level(double E1, double E2, double V, double lambda1,
                                             double lambda2) {
    HamiltonianSpec s;
    s.kind = HamiltonianKind::DissipativeTwoLevel;
    s.E1 = E1;
    s.E2 = E2;
    s.V = V;
    s.lambda1 = lambda1;
    s.lambda2 = lambda2;
    return s;
}

inline HamiltonianSpec driven_dissipative(double E1, double E2, double V, double lambda1,
                                          double lambda2, double mu1, double mu2,
                                          double omega_drive) {
    HamiltonianSpec s = dissipative_two_level(E1, E2, V, lambda1, lambda2);
    s.kind = HamiltonianKind::DrivenDissipative;
    s.mu1 = mu1;
    s.mu2 = mu2;
    s.omega_drive = omega_drive;
    return s;
}

inline HamiltonianSpec static_real(const Matrix& H) {
    HamiltonianSpec s;
    s.kind = HamiltonianKind::StaticReal;
    s.dim = static_cast<int>(H.rows());
    s.matrixR = H;
    return s;
}

inline HamiltonianSpec general_complex(const Matrix& HR, const Matrix& HI) {
    HamiltonianSpec s;
    s.kind = HamiltonianKind::GeneralComplexStatic;
    s.dim = static_cast<int>(HR.rows());
    s.matrixR = HR;
    s.matrixI = HI;
    return s;
}

// ---------------------------------------------------------------- validation

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw SpecificationError(what);
}

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

}  // namespace detail

inline void validate(const HamiltonianSpec& s) {
    using detail::require;
    const std::string kind(kind_name(s.kind));
    require(s.dim > 0, kind + ": dim must be positive");
    for (double x : {s.E1, s.E2, s.V, s.E0, s.A, s.lambda1, s.lambda2, s.mu1, s.mu2,
                     s.omega_drive}) {
        require(std::isfinite(x), kind + ": parameters must be finite");
    }
    if (is_two_level(s.kind)) {
        require(s.dim == 2, kind + ": two-level kinds require dim = 2");
    }
    switch (s.kind) {
        case HamiltonianKind::StaticReal: {
            require(s.matrixR.rows() == s.dim && s.matrixR.cols() == s.dim,
                    kind + ": matrixR must be dim x dim");
            require(detail::all_finite(s.matrixR), kind + ": matrixR must be finite");
            const double scale = std::max(1.0, s.matrixR.cwiseAbs().maxCoeff());
            require((s.matrixR - s.matrixR.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale,
                    kind + ": matrixR must be symmetric");
            require(s.matrixI.size() == 0 || s.matrixI.isZero(0.0),
                    kind + ": matrixI must be absent or zero");
            break;
        }
        case HamiltonianKind::GeneralComplexStatic: {
            require(s.matrixR.rows() == s.dim && s.matrixR.cols() == s.dim,
                    kind + ": matrixR must be dim x dim");
            require(s.matrixI.size() == 0 ||
                        (s.matrixI.rows() == s.dim && s.matrixI.cols() == s.dim),
                    kind + ": matrixI must be dim x dim");
            require(detail::all_finite(s.matrixR) &&
                        (s.matrixI.size() == 0 || detail::all_finite(s.matrixI)),
                    kind + ": matrices must be finite");
            break;
        }
        case HamiltonianKind::LZArctan:
            require(s.E0 != 0.0, kind + ": E0 must be non-zero");
            break;
        default:
            break;
    }
}

// ---------------------------------------------------------------- evaluation

namespace detail {

inline std::array<double, 2> diagonal_energies(const HamiltonianSpec& s, double t) {
    switch (s.kind) {
        case HamiltonianKind::LZLinear:
            return {s.E0 + s.A * t, s.E0 - s.A * t};
        case HamiltonianKind::LZArctan: {
            const double a = std::atan(t / s.E0);
            return {2.0 * s.E0 * (1.0 + a), 2.0 * s.E0 * (1.0 - a)};
        }
        default:
            return {s.E1, s.E2};
    }
}

}  // namespace detail

inline HamiltonianParts eval_h(const HamiltonianSpec& s, double t) {
    if (!std::isfinite(t)) throw DomainError("eval_h: time must be finite");
    const Eigen::Index n = s.dim;
    HamiltonianParts h{Matrix::Zero(n, n), Matrix::Zero(n, n)};
    switch (s.kind) {
        case HamiltonianKind::StaticReal:
            h.real = s.matrixR;
            break;
        case HamiltonianKind::GeneralComplexStatic:
            h.real = s.matrixR;
            if (s.matrixI.size() != 0) h.imag = s.matrixI;
            break;
        case HamiltonianKind::TwoLevel:
        case HamiltonianKind::LZLinear:
        case HamiltonianKind::LZArctan:
        case HamiltonianKind::DissipativeTwoLevel:
        case HamiltonianKind::DrivenDissipative: {
            const auto e = detail::diagonal_energies(s, t);
            h.real << e[0], s.V, s.V, e[1];
            if (is_complex(s.kind)) {
                h.imag(0, 0) = s.lambda1;
                h.imag(1, 1) = s.lambda2;
            }
            break;
        }
        default:
            throw SpecificationError("eval_h: unknown kind");
    }
    return h;
}

// Analytic dH/dt. The imaginary part is never time-dependent, so only the real
// part is returned; zero for static kinds.
inline Matrix eval_hdot(const HamiltonianSpec& s, double t) {
    Matrix d = Matrix::Zero(s.dim, s.dim);
    if (s.kind == HamiltonianKind::LZLinear) {
        d(0, 0) = s.A;
        d(1, 1) = -s.A;
    } else if (s.kind == HamiltonianKind::LZArctan) {
        const double x = t / s.E0;
        const double rate = 2.0 / (1.0 + x * x);
        d(0, 0) = rate;
        d(1, 1) = -rate;
    }
    return d;
}

inline Vector eval_drive(const HamiltonianSpec& s, double t) {
    Vector f = Vector::Zero(s.dim);
    if (is_driven(s.kind)) {
        const double c = std::cos(s.omega_drive * t);
        f << c * s.mu1, c * s.mu2;
    }
    return f;
}

// df/dt, needed where the drive enters a second-order equation differentiated
// once more (the doubled-oscillator scheme).
inline Vector eval_drive_rate(const HamiltonianSpec& s, double t) {
    Vector f = Vector::Zero(s.dim);
    if (is_driven(s.kind)) {
        const double d = -s.omega_drive * std::sin(s.omega_drive * t);
        f << d * s.mu1, d * s.mu2;
    }
    return f;
}

}  // namespace qcmap
