// integrate.hpp - Adaptive Dormand-Prince 5(4) integration sampled on a uniform grid.
//
// Every evolution in the library funnels through integrate(). Second-order
// systems are reduced to first order by the caller and complex systems are
// passed as interleaved real/imaginary parts, so the kernel only ever sees a
// real vector field.

#pragma once

#include "qcmap/errors.hpp"
#include "qcmap/types.hpp"

#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qcmap {

struct IntegratorConfig {
    double rtol{1e-10};
    double atol{1e-12};
    double max_step{1.0};
    double initial_step{1e-3};
    int sample_count{1001};

    void validate() const {
        if (!(rtol > 0.0) || !(atol > 0.0)) {
            throw ValidationError("IntegratorConfig: rtol and atol must be positive");
        }
        if (!(max_step > 0.0)) throw ValidationError("IntegratorConfig: max_step must be positive");
        if (!(initial_step > 0.0)) {
            throw ValidationError("IntegratorConfig: initial_step must be positive");
        }
        if (sample_count < 2) throw ValidationError("IntegratorConfig: sample_count must be >= 2");
    }
};

using Trajectory = Sampled<Vector>;

// dy/dt = rhs(t, y); the callee writes into `dydt`, which is pre-sized.
using VectorField =
    std::function<void(double t, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dydt)>;

// n points from t0 to t1 inclusive; the last point is exactly t1.
inline std::vector<double> sample_grid(double t0, double t1, int n) {
    std::vector<double> grid(static_cast<std::size_t>(n));
    const double h = (t1 - t0) / static_cast<double>(n - 1);
    for (int k = 0; k < n; ++k) grid[static_cast<std::size_t>(k)] = t0 + h * k;
    grid.back() = t1;
    return grid;
}

inline Trajectory integrate(const VectorField& rhs, const Vector& y0, double t0, double t1,
                            const IntegratorConfig& cfg, std::string label = {}) {
    namespace odeint = boost::numeric::odeint;
    using State = std::vector<double>;

    cfg.validate();
    if (!std::isfinite(t0) || !std::isfinite(t1) || t0 == t1) {
        throw ValidationError("integrate: need finite t0 != t1");
    }
    if (!y0.allFinite()) throw DivergenceError("integrate: non-finite initial state", t0);

    const auto n = static_cast<std::size_t>(y0.size());
    const double span = t1 - t0;
    const double dir = span > 0 ? 1.0 : -1.0;
    const double min_step = 1e-14 * std::abs(span);
    const double end_slack =
        64.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(t0), std::abs(t1), std::abs(span)});

    Trajectory out;
    out.label = std::move(label);
    out.times = sample_grid(t0, t1, cfg.sample_count);
    out.states.reserve(out.times.size());

    auto system = [&rhs, n](const State& x, State& dxdt, double t) {
        Eigen::Map<const Vector> y(x.data(), static_cast<Eigen::Index>(n));
        Eigen::Map<Vector> dy(dxdt.data(), static_cast<Eigen::Index>(n));
        rhs(t, y, dy);
    };

    // Signed max_dt keeps odeint's step clamping correct for backward runs.
    auto stepper = odeint::make_dense_output(cfg.atol, cfg.rtol, dir * cfg.max_step,
                                             odeint::runge_kutta_dopri5<State>());

    State x(y0.data(), y0.data() + n);
    const double h0 = std::min(cfg.initial_step, std::abs(span));
    stepper.initialize(x, t0, dir * h0);

    out.states.push_back(y0);
    std::size_t next = 1;
    State buf(n);

    auto past = [dir](double a, double b) { return dir * (a - b) >= 0.0; };  // a at/after b

    while (next < out.times.size()) {
        const double t_now = stepper.current_time();
        const double remaining = t1 - t_now;
        // Never step beyond t1: the vector field may be undefined there.
        if (dir * (stepper.current_time_step() - remaining) > 0.0) {
            State cur = stepper.current_state();
            stepper.initialize(cur, t_now, remaining);
        }

        std::pair<double, double> interval;
        try {
            interval = stepper.do_step(system);
        } catch (const odeint::step_adjustment_error&) {
            std::ostringstream os;
            os << "integrate: step size underflow (stiff or singular system) at t = " << t_now;
            throw StiffnessError(os.str(), t_now);
        }

        const auto& cur = stepper.current_state();
        for (double v : cur) {
            if (!std::isfinite(v)) {
                std::ostringstream os;
                os << "integrate: state diverged near t = " << interval.second;
                throw DivergenceError(os.str(), interval.second);
            }
        }
        const double taken = std::abs(interval.second - interval.first);
        const bool finished =
            past(interval.second, t1) || std::abs(t1 - interval.second) <= end_slack;
        if (taken < min_step && !finished) {
            std::ostringstream os;
            os << "integrate: required step " << taken << " below underflow threshold at t = "
               << interval.second;
            throw StiffnessError(os.str(), interval.second);
        }

        while (next < out.times.size() &&
               (past(interval.second, out.times[next]) || (finished && next + 1 == out.times.size()))) {
            stepper.calc_state(out.times[next], buf);
            out.states.emplace_back(Eigen::Map<const Vector>(buf.data(), static_cast<Eigen::Index>(n)));
            ++next;
        }
    }
    return out;
}

}  // namespace qcmap
