// types.hpp - Shared numeric aliases and the sampled-trajectory container.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qcmap {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

// Time-stamped sequence of states on a common grid. `label` names the scheme
// (or integrator run) that produced it.
template <class State>
struct Sampled {
    std::vector<double> times;
    std::vector<State> states;
    std::string label;

    std::size_t size() const noexcept { return times.size(); }
    bool empty() const noexcept { return times.empty(); }
    const State& back() const { return states.back(); }
    const State& front() const { return states.front(); }
};

}  // namespace qcmap
