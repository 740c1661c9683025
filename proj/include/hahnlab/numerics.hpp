#ifndef HAHNLAB_NUMERICS_HPP
#define HAHNLAB_NUMERICS_HPP

// Floating-point foundations: complex log-gamma, Pochhammer symbol, beta
// function and the four-gamma continuous Hahn weight. All gamma products are
// assembled as sums of logarithms and exponentiated once at the end.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "hahnlab/errors.hpp"

namespace hahnlab {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex imag_i{0.0, 1.0};

/// Principal-branch log of Gamma(z), split into modulus and phase.
struct LogGammaValue {
    double log_modulus = 0.0;
    double phase = 0.0; // in (-pi, pi]

    [[nodiscard]] Complex log() const { return {log_modulus, phase}; }

    /// exp(log_modulus + i phase); throws overflow_error if not representable.
    [[nodiscard]] Complex value() const;
};

namespace detail {

inline std::string format_complex(Complex z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

inline bool is_nonpositive_integer(Complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

inline double wrap_phase(double phase)
{
    double w = std::remainder(phase, 2.0 * pi);
    if (w <= -pi) w += 2.0 * pi;
    return w;
}

/// Some branch of log(sin(pi z)), finite for every non-integer z including
/// |Im z| large where sin itself overflows.
inline Complex log_sin_pi(Complex z)
{
    constexpr double ln2 = std::numbers::ln2;
    const Complex w = pi * z;
    const double y = w.imag();
    if (std::abs(y) < 20.0) return std::log(std::sin(w));
    if (y > 0.0) return -imag_i * w + Complex(-ln2, pi / 2) + std::log(1.0 - std::exp(2.0 * imag_i * w));
    return imag_i * w + Complex(-ln2, -pi / 2) + std::log(1.0 - std::exp(-2.0 * imag_i * w));
}

// Lanczos approximation, g = 7, nine terms.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

/// log Gamma(z) for Re(z) >= 1/2, continuous (not wrapped) branch.
inline Complex lanczos_log_gamma(Complex z)
{
    const Complex zm1 = z - 1.0;
    Complex series = lanczos_coefficients[0];
    for (std::size_t k = 1; k < lanczos_coefficients.size(); ++k)
        series += lanczos_coefficients[k] / (zm1 + static_cast<double>(k));
    const Complex t = zm1 + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

/// log Gamma(z) on an unspecified but valid branch; suitable for summation.
inline Complex log_gamma_raw(Complex z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("log_gamma: non-finite argument");
    if (is_nonpositive_integer(z))
        throw pole_error("gamma pole at z = " + format_complex(z));
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    return std::log(pi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

inline Complex checked_exp(Complex log_value, const char* what)
{
    constexpr double max_log = 709.78; // log(DBL_MAX)
    if (!std::isfinite(log_value.real()) || !std::isfinite(log_value.imag()))
        throw overflow_error(std::string(what) + ": non-finite log-domain value");
    if (log_value.real() > max_log)
        throw overflow_error(std::string(what) + ": log-domain value " +
                             std::to_string(log_value.real()) + " exceeds double range");
    return std::exp(log_value);
}

inline void require_positive_real_part(Complex v, const char* what)
{
    if (!(v.real() > 0.0))
        throw domain_error(std::string(what) + " requires Re > 0, got " + format_complex(v));
}

} // namespace detail

inline Complex LogGammaValue::value() const
{
    return detail::checked_exp(log(), "LogGammaValue::value");
}

/// Principal-branch log Gamma(z). Throws pole_error at z = 0, -1, -2, ...
inline LogGammaValue log_gamma(Complex z)
{
    const Complex raw = detail::log_gamma_raw(z);
    return {raw.real(), detail::wrap_phase(raw.imag())};
}

inline Complex gamma(Complex z)
{
    return detail::checked_exp(detail::log_gamma_raw(z), "gamma");
}

/// Rising factorial a(a+1)...(a+k-1); generic over the scalar type.
template <class T>
T pochhammer(const T& a, int k)
{
    if (k < 0) throw domain_error("pochhammer: negative length");
    T result(1);
    for (int j = 0; j < k; ++j) result = result * (a + T(j));
    return result;
}

/// B(alpha, beta) = Gamma(alpha)Gamma(beta)/Gamma(alpha+beta), Re of both > 0.
inline Complex beta(Complex alpha, Complex beta_)
{
    detail::require_positive_real_part(alpha, "beta(alpha, .)");
    detail::require_positive_real_part(beta_, "beta(., beta)");
    const Complex l = detail::log_gamma_raw(alpha) + detail::log_gamma_raw(beta_) -
                      detail::log_gamma_raw(alpha + beta_);
    return detail::checked_exp(l, "beta");
}

/// log of Gamma(alpha+iz)Gamma(beta-iz)Gamma(a-iz)Gamma(b+iz) (unwrapped branch).
inline Complex log_hahn_weight(double z, Complex alpha, Complex beta_, Complex a, Complex b)
{
    detail::require_positive_real_part(alpha, "hahn_weight alpha");
    detail::require_positive_real_part(beta_, "hahn_weight beta");
    detail::require_positive_real_part(a, "hahn_weight a");
    detail::require_positive_real_part(b, "hahn_weight b");
    const Complex iz{0.0, z};
    return detail::log_gamma_raw(alpha + iz) + detail::log_gamma_raw(beta_ - iz) +
           detail::log_gamma_raw(a - iz) + detail::log_gamma_raw(b + iz);
}

/// Gamma(alpha+iz)Gamma(beta-iz)Gamma(a-iz)Gamma(b+iz), the continuous Hahn weight.
inline Complex hahn_weight(double z, Complex alpha, Complex beta_, Complex a, Complex b)
{
    return detail::checked_exp(log_hahn_weight(z, alpha, beta_, a, b), "hahn_weight");
}

/// 2^e for complex e.
inline Complex power_of_two(Complex e)
{
    return std::exp(e * std::numbers::ln2);
}

/// m*pi/sin(pi*m) = Gamma(1+m)Gamma(1-m), with its removable singularity at 0.
inline Complex pi_m_over_sin_pi_m(Complex m)
{
    if (std::abs(m) < 1e-6) {
        const Complex u = pi * m;
        const Complex u2 = u * u;
        return 1.0 + u2 / 6.0 + 7.0 * u2 * u2 / 360.0;
    }
    if (m.imag() == 0.0 && m.real() == std::round(m.real()))
        throw pole_error("m*pi/sin(pi*m) has a pole at integer m = " + detail::format_complex(m));
    return pi * m / std::sin(pi * m);
}

} // namespace hahnlab

#endif
