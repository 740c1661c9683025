#include <gtest/gtest.h>

#include <cmath>

#include "hahnlab/quadrature.hpp"

using hahnlab::Complex;
using hahnlab::DecayBound;
using hahnlab::Envelope;
using hahnlab::pi;
using hahnlab::QuadratureConfig;

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

// sech^2(a x) <= 4 exp(-2a|x|), times (1+|x|)^power.
Envelope sech2_envelope(double a, double power = 0.0) { return Envelope::symmetric({4.0, power, 2.0 * a, 0.0}); }

} // namespace

TEST(IntegrateLine, SechSquaredExamples)
{
    const QuadratureConfig cfg;
    const auto r = hahnlab::integrate_line([](double x) { return Complex(std::pow(sech(pi * x / 2), 2)); },
                                           sech2_envelope(pi / 2), cfg);
    EXPECT_NEAR(r.value.real(), 4.0 / pi, 1e-10 * 4.0 / pi);
    EXPECT_EQ(r.value.imag(), 0.0);
    EXPECT_GT(r.evaluations, 0);
    EXPECT_LT(r.error, 1e-9);

    const auto m2 = hahnlab::integrate_line(
        [](double x) { return Complex(x * x * std::pow(sech(pi * x / 2), 2)); }, sech2_envelope(pi / 2, 2.0), cfg);
    EXPECT_NEAR(m2.value.real(), 4.0 / (3.0 * pi), 1e-10 * 4.0 / (3.0 * pi));
}

TEST(IntegrateLine, SechSquaredFamily)
{
    // int sech^2(ax) = 2/a, int x^2 sech^2(ax) = pi^2/(6a^3).
    const QuadratureConfig cfg;
    for (double a : {pi / 2, pi, 2 * pi}) {
        const auto zeroth = hahnlab::integrate_line([a](double x) { return Complex(std::pow(sech(a * x), 2)); },
                                                    sech2_envelope(a), cfg);
        EXPECT_NEAR(zeroth.value.real(), 2.0 / a, 1e-10 * 2.0 / a) << a;
        const auto second = hahnlab::integrate_line(
            [a](double x) { return Complex(x * x * std::pow(sech(a * x), 2)); }, sech2_envelope(a, 2.0), cfg);
        const double want = pi * pi / (6.0 * a * a * a);
        EXPECT_NEAR(second.value.real(), want, 1e-10 * want) << a;
    }
}

TEST(IntegrateLine, OddIntegrandVanishes)
{
    const QuadratureConfig cfg;
    const auto r = hahnlab::integrate_line([](double x) { return Complex(x * std::pow(sech(x), 2), x * x * x * sech(x)); },
                                           Envelope::symmetric({4.0, 3.0, 1.0, 0.0}), cfg);
    EXPECT_LE(std::abs(r.value), cfg.abs_tol);
}

TEST(IntegrateLine, Linearity)
{
    const QuadratureConfig cfg;
    const auto f = [](double x) { return Complex(std::pow(sech(x), 2), 0.5 * x * sech(x)); };
    const auto g = [](double x) { return std::exp(Complex(0.0, -0.7 * x)) * std::pow(sech(x), 3); };
    const Envelope env = Envelope::symmetric({8.0, 1.0, 1.0, 0.0});
    const Complex fs = hahnlab::integrate_line(f, env, cfg).value;
    const Complex gs = hahnlab::integrate_line(g, env, cfg, 0.7).value;
    const Complex both = hahnlab::integrate_line([&](double x) { return 2.0 * f(x) - g(x); }, env, cfg, 0.7).value;
    EXPECT_LT(std::abs(both - (2.0 * fs - gs)), 1e-10 * std::abs(both));
}

TEST(IntegrateLine, OscillatorySechTransform)
{
    // int e^{-ixz} sech x dx = pi sech(pi z / 2).
    const QuadratureConfig cfg;
    for (double z : {0.0, 0.5, 5.0, 12.0}) {
        const auto r = hahnlab::integrate_line([z](double x) { return std::exp(Complex(0.0, -x * z)) * sech(x); },
                                               Envelope::symmetric({2.0, 0.0, 1.0, 0.0}), cfg, z);
        const double want = pi * sech(pi * z / 2);
        EXPECT_LT(std::abs(r.value - want), std::max(1e-10 * want, 1e-13)) << z;
    }
}

TEST(IntegrateLine, AsymmetricEnvelope)
{
    // e^{x}/(1+e^{x})^3 = (1-tanh(x/2))^2 (1+tanh(x/2)) / 8 integrates to 1/2.
    const QuadratureConfig cfg;
    const auto f = [](double x) {
        const double t = std::tanh(x / 2);
        return Complex((1 - t) * (1 - t) * (1 + t) / 8.0);
    };
    const Envelope env{{1.0, 0.0, 1.0, 0.0}, {1.0, 0.0, 2.0, 0.0}};
    const auto r = hahnlab::integrate_line(f, env, cfg);
    EXPECT_NEAR(r.value.real(), 0.5, 1e-10);
    EXPECT_GT(r.left_radius, r.right_radius);
}

TEST(TruncationRadius, TailBelowTargetAndNearlyMinimal)
{
    for (const DecayBound b : {DecayBound{4.0, 0.0, pi, 0.0}, DecayBound{100.0, 6.0, 2 * pi, 0.0},
                               DecayBound{1.0, 2.0, 0.5, 3.0}}) {
        const double target = 1e-16;
        const double z = hahnlab::truncation_radius(b, target);
        EXPECT_LT(b.tail(z), target);
        EXPECT_GE(z, b.core);
        if (z - 0.25 / b.rate >= std::max(b.core, 2 * b.power / b.rate)) {
            EXPECT_GE(b.tail(z - 0.25 / b.rate), target);
        }
        // The tail bound really bounds the tail: compare with a crude Riemann sum.
        double tail = 0.0;
        for (double x = z + 5e-4 / b.rate; x < z + 60.0 / b.rate; x += 1e-3 / b.rate) tail += b.at(x) * 1e-3 / b.rate;
        EXPECT_LE(tail, b.tail(z) * (1 + 1e-7));
    }
}

TEST(IntegrateLine, NonConvergenceIsAnError)
{
    QuadratureConfig cfg;
    cfg.max_subdivisions = 3;
    cfg.rel_tol = 1e-14;
    // Kink at an irrational point defeats a handful of bisections.
    const auto f = [](double x) { return Complex(std::sqrt(std::abs(x - 0.1234567)) * std::pow(sech(x), 2)); };
    EXPECT_THROW(hahnlab::integrate_line(f, Envelope::symmetric({8.0, 1.0, 2.0, 0.0}), cfg),
                 hahnlab::quadrature_error);
}

TEST(IntegrateLine, NonFiniteIntegrandIsAnError)
{
    const QuadratureConfig cfg;
    const auto f = [](double x) {
        return Complex(std::abs(x) < 0.5 ? std::numeric_limits<double>::infinity() : std::pow(sech(x), 2));
    };
    EXPECT_THROW(hahnlab::integrate_line(f, sech2_envelope(1.0), cfg), hahnlab::overflow_error);
}

TEST(IntegrateLine, InvalidConfigIsAnError)
{
    QuadratureConfig cfg;
    cfg.rel_tol = 0.0;
    EXPECT_THROW(hahnlab::integrate_line([](double) { return Complex(0.0); }, sech2_envelope(1.0), cfg),
                 hahnlab::domain_error);
}

TEST(IntegrateLine, Deterministic)
{
    const QuadratureConfig cfg;
    const auto f = [](double x) { return std::exp(Complex(0.0, -3.0 * x)) * std::pow(sech(x), 2) * (1.0 + x * x); };
    const auto a = hahnlab::integrate_line(f, sech2_envelope(1.0, 2.0), cfg, 3.0);
    const auto b = hahnlab::integrate_line(f, sech2_envelope(1.0, 2.0), cfg, 3.0);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(IntegrateInterval, SinglePanelIsExactForLowDegree)
{
    // Both embedded rules integrate x^18 exactly, so the error estimate is roundoff only.
    const QuadratureConfig cfg;
    const auto r = hahnlab::integrate_interval([](double x) { return Complex(std::pow(x, 18)); }, 0.0, 2.0, cfg, 2.0);
    const double want = std::pow(2.0, 19) / 19.0;
    EXPECT_NEAR(r.value.real(), want, 1e-14 * want);
    EXPECT_EQ(r.panels, 1);
    EXPECT_EQ(r.evaluations, 21);
    // Degree 40 is beyond the Gauss rule; the estimate must notice.
    const auto hard = hahnlab::integrate_interval([](double x) { return Complex(std::pow(x, 40)); }, 0.0, 2.0, cfg, 2.0);
    EXPECT_GT(hard.panels, 1);
    EXPECT_NEAR(hard.value.real(), std::pow(2.0, 41) / 41.0, 1e-10 * std::pow(2.0, 41) / 41.0);
}
