#ifndef HAHNLAB_TESTS_ORACLES_HPP
#define HAHNLAB_TESTS_ORACLES_HPP

// Test-only reference implementations, deliberately independent of the
// library code paths they are compared against.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace oracle {

using Complex = std::complex<double>;

/// log Gamma(z), Re(z) > 0, via upward recurrence and the Stirling series.
inline Complex stirling_log_gamma(Complex z)
{
    Complex shift = 0.0;
    while (std::abs(z) < 30.0 || z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    static constexpr std::array<double, 7> b2k = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                                  5.0 / 66, -691.0 / 2730, 7.0 / 6};
    Complex series = 0.0;
    Complex zpow = z;
    for (std::size_t k = 1; k <= b2k.size(); ++k) {
        series += b2k[k - 1] / (2.0 * double(k) * (2.0 * double(k) - 1.0) * zpow);
        zpow *= z * z;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

/// Gamma ratio via Stirling: Gamma(a)/Gamma(b) as exp of the log difference.
inline Complex stirling_gamma_ratio(Complex a, Complex b)
{
    return std::exp(stirling_log_gamma(a) - stirling_log_gamma(b));
}

/// Deterministic uniform double in [lo, hi).
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : rng_(seed) {}
    double operator()(double lo, double hi)
    {
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 rng_;
};

} // namespace oracle

#endif
