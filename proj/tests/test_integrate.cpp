#include "qcmap/integrate.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qcmap;

namespace {

// x'' = -w^2 x as (x, v).
VectorField harmonic(double w) {
    return [w](double, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dy) {
        dy(0) = y(1);
        dy(1) = -w * w * y(0);
    };
}

}  // namespace

TEST(Integrate, GridEndsExactlyAtT1) {
    const auto g = sample_grid(-25, 25, 2001);
    ASSERT_EQ(g.size(), 2001u);
    EXPECT_EQ(g.front(), -25.0);
    EXPECT_EQ(g.back(), 25.0);
    EXPECT_DOUBLE_EQ(g[1000], 0.0);
}

TEST(Integrate, HarmonicOscillatorMatchesClosedForm) {
    IntegratorConfig cfg;
    cfg.sample_count = 501;
    const double w = 3.0;
    const auto tr = integrate(harmonic(w), Vector::Unit(2, 0), 0.0, 20.0, cfg);
    ASSERT_EQ(tr.size(), 501u);
    double err = 0;
    for (std::size_t k = 0; k < tr.size(); ++k) {
        const double t = tr.times[k];
        err = std::max(err, std::abs(tr.states[k](0) - std::cos(w * t)));
        err = std::max(err, std::abs(tr.states[k](1) + w * std::sin(w * t)));
    }
    EXPECT_LT(err, 1e-8);
}

TEST(Integrate, FirstSampleIsInitialState) {
    IntegratorConfig cfg;
    Vector y0(2);
    y0 << 0.3, -0.7;
    const auto tr = integrate(harmonic(1), y0, 1.0, 2.0, cfg);
    EXPECT_EQ(tr.states.front(), y0);
}

TEST(Integrate, ReversalRecoversInitialState) {
    IntegratorConfig cfg;
    cfg.sample_count = 2;
    Vector y0(2);
    y0 << 0.3, -0.7;
    const auto fwd = integrate(harmonic(2.5), y0, 0.0, 13.0, cfg);
    const auto back = integrate(harmonic(2.5), fwd.back(), 13.0, 0.0, cfg);
    EXPECT_LT((back.back() - y0).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Integrate, ExponentialGrowthIsAccurate) {
    VectorField f = [](double, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dy) { dy = y; };
    IntegratorConfig cfg;
    cfg.sample_count = 11;
    const auto tr = integrate(f, Vector::Ones(1), 0.0, 5.0, cfg);
    EXPECT_NEAR(tr.back()(0) / std::exp(5.0), 1.0, 1e-9);
}

TEST(Integrate, FiniteTimeBlowUpIsDetected) {
    // y' = y^2, y(0) = 1 blows up at t = 1.
    VectorField f = [](double, const Eigen::Ref<const Vector>& y, Eigen::Ref<Vector> dy) { dy(0) = y(0) * y(0); };
    IntegratorConfig cfg;
    try {
        integrate(f, Vector::Ones(1), 0.0, 2.0, cfg);
        FAIL() << "expected a numerical error";
    } catch (const NumericalError& e) {
        EXPECT_NEAR(e.time(), 1.0, 1e-3);
    }
}

TEST(Integrate, NanFieldIsDivergence) {
    VectorField f = [](double t, const Eigen::Ref<const Vector>&, Eigen::Ref<Vector> dy) {
        dy(0) = t > 0.5 ? NAN : 1.0;
    };
    IntegratorConfig cfg;
    EXPECT_THROW(integrate(f, Vector::Zero(1), 0.0, 1.0, cfg), NumericalError);
}

TEST(Integrate, RejectsBadInput) {
    IntegratorConfig cfg;
    EXPECT_THROW(integrate(harmonic(1), Vector::Zero(2), 1.0, 1.0, cfg), ValidationError);
    cfg.rtol = 0;
    EXPECT_THROW(integrate(harmonic(1), Vector::Zero(2), 0.0, 1.0, cfg), ValidationError);
    IntegratorConfig c2;
    c2.sample_count = 1;
    EXPECT_THROW(c2.validate(), ValidationError);
    IntegratorConfig c3;
    Vector bad(2);
    bad << NAN, 0;
    EXPECT_THROW(integrate(harmonic(1), bad, 0.0, 1.0, c3), DivergenceError);
}

TEST(Integrate, MaxStepIsRespected) {
    int calls = 0;
    VectorField f = [&calls](double, const Eigen::Ref<const Vector>&, Eigen::Ref<Vector> dy) {
        ++calls;
        dy.setZero();
    };
    IntegratorConfig cfg;
    cfg.max_step = 0.1;
    cfg.sample_count = 2;
    integrate(f, Vector::Zero(1), 0.0, 10.0, cfg);
    EXPECT_GE(calls, 100 * 5);  // at least 100 steps of >= 5 stages each
}
