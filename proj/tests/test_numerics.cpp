#include <gtest/gtest.h>

#include <cmath>

#include "hahnlab/numerics.hpp"
#include "oracles.hpp"

using hahnlab::Complex;
using hahnlab::pi;

namespace {

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// Relative distance between exp(a) and exp(b) for log-domain values.
double log_rel_err(Complex a, Complex b)
{
    Complex d = a - b;
    d.imag(std::remainder(d.imag(), 2.0 * pi));
    return std::abs(std::exp(d) - 1.0);
}

} // namespace

TEST(Pochhammer, Examples)
{
    EXPECT_EQ(hahnlab::pochhammer(Complex(2.5, 1.0), 0), Complex(1.0));
    EXPECT_EQ(hahnlab::pochhammer(Complex(1.0), 4), Complex(24.0));
    EXPECT_EQ(hahnlab::pochhammer(Complex(3.0), 4), Complex(360.0));
    EXPECT_THROW(hahnlab::pochhammer(Complex(1.0), -1), hahnlab::domain_error);
}

TEST(LogGamma, Examples)
{
    const auto one = hahnlab::log_gamma(Complex(1.0));
    EXPECT_NEAR(one.log_modulus, 0.0, 1e-15);
    EXPECT_NEAR(one.phase, 0.0, 1e-15);
    EXPECT_LT(rel_err(hahnlab::gamma(Complex(5.0)), Complex(24.0)), 1e-13);
    const Complex half = hahnlab::gamma(Complex(0.5));
    EXPECT_LT(rel_err(half * half, Complex(pi)), 1e-13);
}

TEST(LogGamma, PolesAreStructuredErrors)
{
    for (double z : {0.0, -1.0, -2.0, -17.0}) {
        EXPECT_THROW(hahnlab::log_gamma(Complex(z)), hahnlab::pole_error) << z;
    }
    EXPECT_NO_THROW(hahnlab::log_gamma(Complex(-1.0, 1e-9)));
}

TEST(LogGamma, PhaseIsPrincipal)
{
    oracle::Uniform u(11);
    for (int k = 0; k < 200; ++k) {
        const auto v = hahnlab::log_gamma(Complex(u(-30, 30), u(-200, 200)));
        EXPECT_GT(v.phase, -pi);
        EXPECT_LE(v.phase, pi);
    }
}

TEST(LogGamma, MatchesStirlingOracleOnRightHalfPlane)
{
    // Relative error of log Gamma; absolute near the zeros of log Gamma.
    oracle::Uniform u(2024);
    double worst = 0.0;
    for (int k = 0; k < 2000; ++k) {
        const Complex z(u(0.5, 40.0), u(-60.0, 60.0));
        Complex d = hahnlab::detail::log_gamma_raw(z) - oracle::stirling_log_gamma(z);
        d.imag(std::remainder(d.imag(), 2.0 * pi));
        worst = std::max(worst, std::abs(d) / std::max(1.0, std::abs(oracle::stirling_log_gamma(z))));
    }
    EXPECT_LT(worst, 1e-13);
}

TEST(LogGamma, MatchesStdLgammaOnRealAxis)
{
    for (double x = 0.05; x < 150.0; x *= 1.07) {
        EXPECT_NEAR(hahnlab::log_gamma(Complex(x)).log_modulus, std::lgamma(x), 1e-13 * (1.0 + std::abs(std::lgamma(x))))
            << x;
    }
    // Left half-line: sign of Gamma comes through the phase.
    for (double x : {-0.5, -1.5, -2.25, -7.75}) {
        const auto v = hahnlab::log_gamma(Complex(x));
        EXPECT_NEAR(v.log_modulus, std::lgamma(x), 1e-12) << x;
        EXPECT_DOUBLE_EQ(std::cos(v.phase), std::tgamma(x) > 0 ? 1.0 : -1.0) << x;
    }
}

TEST(LogGamma, LargeImaginaryPartStaysFinite)
{
    // |Gamma(1/4 + 300i)| ~ sqrt(2pi) 300^{-1/4} e^{-150 pi}: far below double range.
    const auto v = hahnlab::log_gamma(Complex(0.25, 300.0));
    const double expected = 0.5 * std::log(2 * pi) - 0.25 * std::log(300.0) - 150.0 * pi;
    EXPECT_NEAR(v.log_modulus, expected, 1e-4);
    const auto w = hahnlab::log_gamma(Complex(-3.25, -300.0));
    EXPECT_TRUE(std::isfinite(w.log_modulus));
    EXPECT_LT(log_rel_err(w.log(), oracle::stirling_log_gamma(Complex(0.75, -300.0)) -
                                       std::log(Complex(-3.25, -300.0)) - std::log(Complex(-2.25, -300.0)) -
                                       std::log(Complex(-1.25, -300.0)) - std::log(Complex(-0.25, -300.0))),
              1e-11);
}

TEST(LogGamma, RecurrenceProperty)
{
    oracle::Uniform u(7);
    int checked = 0;
    while (checked < 1000) {
        const Complex z(u(1e-3, 20.0), u(-20.0, 20.0));
        if (std::abs(z) > 20.0) continue;
        ++checked;
        const Complex lhs = hahnlab::detail::log_gamma_raw(z + 1.0);
        const Complex rhs = std::log(z) + hahnlab::detail::log_gamma_raw(z);
        EXPECT_LT(log_rel_err(lhs, rhs), 1e-12) << z;
    }
}

TEST(LogGamma, ReflectionProperty)
{
    oracle::Uniform u(8);
    for (int k = 0; k < 1000; ++k) {
        const Complex z(u(-6.0, 6.0), u(-3.0, 3.0));
        if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-3) continue;
        const Complex prod = hahnlab::gamma(z) * hahnlab::gamma(1.0 - z) * std::sin(pi * z) / pi;
        EXPECT_LT(std::abs(prod - 1.0), 1e-12) << z;
    }
}

TEST(Pochhammer, AgreesWithGammaRatio)
{
    oracle::Uniform u(9);
    for (int t = 0; t < 500; ++t) {
        const Complex a(u(-8.0, 8.0), u(-4.0, 4.0));
        const int k = static_cast<int>(u.integer(0, 12));
        if (std::abs(a.imag()) < 1e-2) continue; // keep away from poles of Gamma(a)
        const Complex ratio = hahnlab::gamma(a + static_cast<double>(k)) / hahnlab::gamma(a);
        EXPECT_LT(rel_err(hahnlab::pochhammer(a, k), ratio), 1e-12) << a << " " << k;
    }
}

TEST(Beta, Examples)
{
    EXPECT_LT(rel_err(hahnlab::beta(Complex(1.0), Complex(1.0)), Complex(1.0)), 1e-14);
    EXPECT_LT(rel_err(hahnlab::beta(Complex(2.0), Complex(3.0)), Complex(1.0 / 12.0)), 1e-14);
    EXPECT_LT(rel_err(hahnlab::beta(Complex(0.5), Complex(0.5)), Complex(pi)), 1e-14);
    EXPECT_THROW(hahnlab::beta(Complex(0.0), Complex(1.0)), hahnlab::domain_error);
    EXPECT_THROW(hahnlab::beta(Complex(1.0), Complex(-0.5, 2.0)), hahnlab::domain_error);
}

TEST(HahnWeight, Examples)
{
    const Complex one(1.0);
    EXPECT_LT(std::abs(hahnlab::hahn_weight(0.0, one, one, one, one) - 1.0), 1e-14);
    const Complex h(0.5);
    for (double z : {0.0, 0.3, 1.0, 2.5, 7.0}) {
        const double c = std::cosh(pi * z);
        EXPECT_LT(rel_err(hahnlab::hahn_weight(z, h, h, h, h), Complex(pi * pi / (c * c))), 1e-12) << z;
    }
    EXPECT_THROW(hahnlab::hahn_weight(0.0, Complex(0.0), one, one, one), hahnlab::domain_error);
}

TEST(HahnWeight, ConjugateParametersGivePositiveWeight)
{
    const Complex alpha(0.5, 0.25), beta(0.75, -0.25);
    for (double z = -20.0; z <= 20.0; z += 0.125) {
        const Complex w = hahnlab::hahn_weight(z, alpha, beta, std::conj(alpha), std::conj(beta));
        EXPECT_GT(w.real(), 0.0) << z;
        EXPECT_LE(std::abs(w.imag()), 1e-12 * std::abs(w.real())) << z;
    }
}

TEST(HahnWeight, OverflowSurfacesAsError)
{
    const Complex big(200.0);
    EXPECT_THROW(hahnlab::hahn_weight(0.0, big, big, big, big), hahnlab::overflow_error);
    EXPECT_NO_THROW(hahnlab::log_hahn_weight(0.0, big, big, big, big));
}

TEST(PiMOverSin, SeriesBranchIsContinuous)
{
    for (double m : {1e-7, 5e-7, 9.99e-7}) {
        const Complex series = hahnlab::pi_m_over_sin_pi_m(Complex(m));
        const double direct = pi * m / std::sin(pi * m);
        EXPECT_NEAR(series.real(), direct, 1e-15) << m;
    }
    EXPECT_EQ(hahnlab::pi_m_over_sin_pi_m(Complex(0.0)), Complex(1.0));
    EXPECT_NEAR(hahnlab::pi_m_over_sin_pi_m(Complex(0.5)).real(), pi / 2, 1e-15);
    EXPECT_THROW(hahnlab::pi_m_over_sin_pi_m(Complex(2.0)), hahnlab::pole_error);
}
