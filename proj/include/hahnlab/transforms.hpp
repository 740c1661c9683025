#ifndef HAHNLAB_TRANSFORMS_HPP
#define HAHNLAB_TRANSFORMS_HPP

// Fourier, Mellin and Parseval checks for weighted Jacobi polynomials
// (1 - tanh x)^alpha (1 + tanh x)^beta P_n^{(gamma,delta)}(tanh x) and their
// continuous Hahn images. Fourier convention: F(f)(z) = int e^{-ixz} f(x) dx.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hahnlab/numerics.hpp"
#include "hahnlab/polynomials.hpp"
#include "hahnlab/quadrature.hpp"
#include "hahnlab/report.hpp"

namespace hahnlab {

/// Parameters of the weighted Jacobi function w_{alpha,beta}(x) P_n^{(gamma,delta)}(tanh x).
struct WeightedJacobi {
    int n = 0;
    Complex alpha;
    Complex beta;
    Complex gamma;
    Complex delta;
};

namespace detail {

inline double softplus(double s) { return std::max(s, 0.0) + std::log1p(std::exp(-std::abs(s))); }

/// log((1 - tanh x)^alpha (1 + tanh x)^beta) without cancellation for large |x|.
inline Complex log_tanh_weight(double x, Complex alpha, Complex beta)
{
    // 1 -+ tanh x = 2 e^{-+2x} / (1 + e^{-+2x}) = 2 exp(-+2x - log1p(e^{-+2x})).
    constexpr double ln2 = std::numbers::ln2;
    const double log_minus = ln2 - 2.0 * x - softplus(-2.0 * x);
    const double log_plus = ln2 + 2.0 * x - softplus(2.0 * x);
    return alpha * log_minus + beta * log_plus;
}

inline double max1_pow2(double e) { return std::max(1.0, std::exp2(e)); }

/// Bound for |(1-tanh x)^alpha (1+tanh x)^beta|; needs Re alpha, Re beta > 0.
inline Envelope tanh_weight_envelope(Complex alpha, Complex beta)
{
    require_positive_real_part(alpha, "tanh weight alpha");
    require_positive_real_part(beta, "tanh weight beta");
    const double ra = alpha.real();
    const double rb = beta.real();
    return {{std::exp2(rb) * max1_pow2(ra), 0.0, 2.0 * rb, 0.0}, {std::exp2(ra) * max1_pow2(rb), 0.0, 2.0 * ra, 0.0}};
}

/// Max of |P(t)| over |t| <= 1 is at most the coefficient l1 norm.
inline double jacobi_sup_bound(int n, const JacobiParams<Complex>& p)
{
    return std::max(1e-300, coefficient_l1_norm(jacobi_coeffs(n, p)));
}

inline std::string jacobi_label(const WeightedJacobi& f)
{
    return "n=" + std::to_string(f.n) + ",alpha=" + short_complex(f.alpha) + ",beta=" + short_complex(f.beta) +
           ",gamma=" + short_complex(f.gamma) + ",delta=" + short_complex(f.delta);
}

} // namespace detail

/// Decay bound for a gamma product with |W(z)| ~ C |z|^power e^{-rate |z|}
/// for large |z|. The constant is calibrated on each side from samples at
/// core, 1.5 core, ..., 4 core and doubled.
template <class LogAbs>
Envelope calibrated_envelope(LogAbs&& log_abs, double power, double rate, double core)
{
    Envelope e;
    for (int side : {-1, 1}) {
        double amplitude = 0.0;
        for (double k : {1.0, 1.5, 2.0, 3.0, 4.0}) {
            const double r = core * k;
            amplitude = std::max(amplitude, std::exp(log_abs(side * r) - (power * std::log1p(r) - rate * r)));
        }
        (side < 0 ? e.left : e.right) = DecayBound{2.0 * amplitude, power, rate, core};
    }
    return e;
}

/// Envelope of z -> Gamma(alpha+isz)Gamma(beta-isz)Gamma(a-isz)Gamma(b+isz).
inline Envelope hahn_weight_envelope(Complex alpha, Complex beta, Complex a, Complex b, double s)
{
    const double power = (alpha + beta + a + b).real() - 2.0;
    const double size = std::max({std::abs(alpha), std::abs(beta), std::abs(a), std::abs(b), 2.0});
    const double core = 2.0 * size / s;
    return calibrated_envelope([&](double z) { return log_hahn_weight(s * z, alpha, beta, a, b).real(); }, power,
                               2.0 * pi * s, core);
}

/// (1-tanh x)^alpha (1+tanh x)^beta P_n^{(gamma,delta)}(tanh x).
inline Complex weighted_jacobi(const WeightedJacobi& f, double x)
{
    return std::exp(detail::log_tanh_weight(x, f.alpha, f.beta)) *
           jacobi_eval(f.n, JacobiParams<Complex>{f.gamma, f.delta}, Complex(std::tanh(x)));
}

/// int e^{-ixz} f(x) dx by quadrature.
inline QuadratureResult fourier_transform(const WeightedJacobi& f, double z, const QuadratureConfig& config)
{
    const Envelope env =
        scaled(detail::tanh_weight_envelope(f.alpha, f.beta), detail::jacobi_sup_bound(f.n, {f.gamma, f.delta}));
    return integrate_line([&](double x) { return std::exp(Complex(0.0, -x * z)) * weighted_jacobi(f, x); }, env,
                          config, z);
}

/// 2^{alpha+beta-1} Gamma(alpha+iz/2)Gamma(beta-iz/2)/Gamma(alpha+beta+n)
///   i^{-n} p_n(z/2; alpha, delta-beta+1, gamma-alpha+1, beta).
inline Complex fourier_closed_form(const WeightedJacobi& f, double z)
{
    const Complex half_iz{0.0, 0.5 * z};
    const Complex log_g = detail::log_gamma_raw(f.alpha + half_iz) + detail::log_gamma_raw(f.beta - half_iz) -
                          detail::log_gamma_raw(f.alpha + f.beta + static_cast<double>(f.n)) +
                          (f.alpha + f.beta - 1.0) * std::numbers::ln2;
    const auto hp = fourier_hahn_params(f.alpha, f.beta, JacobiParams<Complex>{f.gamma, f.delta});
    return detail::checked_exp(log_g, "fourier_closed_form") * power_of_i<Complex>(-f.n) *
           chahn_eval(f.n, hp, Complex(0.5 * z));
}

inline VerificationReport fourier_pair_check(const WeightedJacobi& f, double z, const QuadratureConfig& config,
                                             const CheckTolerance& tol = {})
{
    const std::string name = "fourier(" + detail::jacobi_label(f) + ",z=" + short_complex(z) + ")";
    return guarded(name, [&] {
        const QuadratureResult q = fourier_transform(f, z, config);
        const Complex rhs = fourier_closed_form(f, z);
        std::string details = "quadrature " + short_complex(q.value, 15) + " vs closed form " + short_complex(rhs, 15) +
                              "; truncated to [" + short_complex(-q.left_radius, 4) + ", " +
                              short_complex(q.right_radius, 4) + "]";
        if (f.n == 0 && z == 0.0) {
            const Complex beta_form = power_of_two(f.alpha + f.beta - 1.0) * beta(f.alpha, f.beta);
            details += "; t-substitution beta integral " + short_complex(beta_form, 15);
        }
        return compare_report(name, q.value, rhs, tol, details, {q.evaluations, q.error});
    });
}

/// int_0^inf x^alpha (1+x)^{-alpha-beta} P_n((1-x)/(1+x)) x^{-i lambda - 1} dx,
/// integrated in s = log x.
inline QuadratureResult mellin_transform(const WeightedJacobi& f, double lambda, const QuadratureConfig& config)
{
    detail::require_positive_real_part(f.alpha, "mellin alpha");
    detail::require_positive_real_part(f.beta, "mellin beta");
    // s -> +inf: |.| <= e^{-Re beta s}; s -> -inf: |.| <= e^{Re alpha s}.
    const double sup = detail::jacobi_sup_bound(f.n, {f.gamma, f.delta});
    const Envelope env{{sup, 0.0, f.alpha.real(), 0.0}, {sup, 0.0, f.beta.real(), 0.0}};
    const JacobiParams<Complex> jp{f.gamma, f.delta};
    return integrate_line(
        [&](double s) {
            const Complex log_w = (f.alpha - Complex(0.0, lambda)) * s - (f.alpha + f.beta) * detail::softplus(s);
            return std::exp(log_w) * jacobi_eval(f.n, jp, Complex(-std::tanh(0.5 * s)));
        },
        env, config, lambda);
}

/// The Mellin closed form under three gamma-argument conventions.
struct MellinClosedForms {
    Complex substitution; // Gamma(alpha-i lambda)Gamma(beta+i lambda) ... p_n(-lambda)
    Complex printed;      // Gamma(alpha-i lambda)Gamma(beta-i lambda) ... p_n(-lambda)
    Complex mirrored;     // Gamma(alpha+i lambda)Gamma(beta-i lambda) ... p_n(lambda)
};

inline MellinClosedForms mellin_closed_forms(const WeightedJacobi& f, double lambda)
{
    const Complex il{0.0, lambda};
    const Complex lg_norm = detail::log_gamma_raw(f.alpha + f.beta + static_cast<double>(f.n));
    const auto hp = fourier_hahn_params(f.alpha, f.beta, JacobiParams<Complex>{f.gamma, f.delta});
    const Complex in = power_of_i<Complex>(-f.n);
    const Complex p_minus = chahn_eval(f.n, hp, Complex(-lambda));
    const Complex p_plus = chahn_eval(f.n, hp, Complex(lambda));
    const auto g = [&](Complex a, Complex b) {
        return detail::checked_exp(detail::log_gamma_raw(a) + detail::log_gamma_raw(b) - lg_norm, "mellin");
    };
    return {g(f.alpha - il, f.beta + il) * in * p_minus, g(f.alpha - il, f.beta - il) * in * p_minus,
            g(f.alpha + il, f.beta - il) * in * p_plus};
}

/// Mellin quadrature against the Fourier route 2^{1-alpha-beta} F(-2 lambda)
/// and the closed-form conventions. Passes when the quadrature agrees with
/// both the Fourier route and the substitution closed form.
inline VerificationReport mellin_pair_check(const WeightedJacobi& f, double lambda, const QuadratureConfig& config,
                                            const CheckTolerance& tol = {})
{
    const std::string name = "mellin(" + detail::jacobi_label(f) + ",lambda=" + short_complex(lambda) + ")";
    return guarded(name, [&] {
        const QuadratureResult m = mellin_transform(f, lambda, config);
        const QuadratureResult fr = fourier_transform(f, -2.0 * lambda, config);
        const Complex via_fourier = power_of_two(1.0 - f.alpha - f.beta) * fr.value;
        const MellinClosedForms cf = mellin_closed_forms(f, lambda);

        const auto rel = [&](Complex v) {
            const double d = std::abs(m.value - v);
            return std::abs(v) > 0.0 ? d / std::abs(v) : d;
        };
        const auto matches = [&](Complex v) {
            return std::abs(m.value - v) <= tol.abs || rel(v) <= tol.rel;
        };
        std::string found;
        for (const auto& [label, v] : {std::pair<const char*, Complex>{"substitution", cf.substitution},
                                       {"printed", cf.printed},
                                       {"mirrored", cf.mirrored}}) {
            if (matches(v)) found += std::string(found.empty() ? "" : ",") + label;
        }
        std::ostringstream details;
        details.precision(3);
        details << "rel err vs Fourier route " << rel(via_fourier) << "; vs Gamma(alpha-il)Gamma(beta+il) p_n(-l) "
                << rel(cf.substitution) << "; vs printed Gamma(alpha-il)Gamma(beta-il) p_n(-l) " << rel(cf.printed)
                << "; vs mirrored Gamma(alpha+il)Gamma(beta-il) p_n(l) " << rel(cf.mirrored)
                << "; matching conventions: " << (found.empty() ? "none" : found);

        VerificationReport r = compare_report(name, m.value, cf.substitution, tol, details.str(),
                                              {m.evaluations + fr.evaluations, std::max(m.error, fr.error)});
        const VerificationReport route = compare_report(name, m.value, via_fourier, tol);
        r.max_abs_err = std::max(r.max_abs_err, route.max_abs_err);
        r.max_rel_err = std::max(r.max_rel_err, route.max_rel_err);
        if (!route.passed()) r.status = CheckStatus::fail;
        return r;
    });
}

/// Parameters of the second function in the Parseval identity.
struct ParsevalPair {
    WeightedJacobi f; // (alpha, beta, gamma, delta), degree n
    WeightedJacobi g; // (a, b, c, d), degree m
};

/// 2 pi int (1-t)^{alpha+a} (1+t)^{beta+b} P_n^{(gamma,delta)} P_m^{(c,d)} dx against
/// i^{m-n} 2^{alpha+a+beta+b-2} int Gamma(alpha+iz/2)Gamma(beta-iz/2)Gamma(a-iz/2)Gamma(b+iz/2)
///   / (Gamma(alpha+beta+n)Gamma(a+b+m)) p_n(z/2; ...) conj(p_m(z/2; conj params ...)) dz.
inline VerificationReport parseval_check(const ParsevalPair& pp, const QuadratureConfig& config,
                                         const CheckTolerance& tol = {})
{
    const auto& f = pp.f;
    const auto& g = pp.g;
    const std::string name = "parseval(" + detail::jacobi_label(f) + ";m=" + std::to_string(g.n) +
                             ",a=" + short_complex(g.alpha) + ",b=" + short_complex(g.beta) +
                             ",c=" + short_complex(g.gamma) + ",d=" + short_complex(g.delta) + ")";
    return guarded(name, [&] {
        const JacobiParams<Complex> jf{f.gamma, f.delta};
        const JacobiParams<Complex> jg{g.gamma, g.delta};
        const Complex wa = f.alpha + g.alpha;
        const Complex wb = f.beta + g.beta;
        const double sup = detail::jacobi_sup_bound(f.n, jf) * detail::jacobi_sup_bound(g.n, jg);
        const QuadratureResult lhs_q = integrate_line(
            [&](double x) {
                const Complex t(std::tanh(x));
                return std::exp(detail::log_tanh_weight(x, wa, wb)) * jacobi_eval(f.n, jf, t) * jacobi_eval(g.n, jg, t);
            },
            scaled(detail::tanh_weight_envelope(wa, wb), sup), config);
        const Complex lhs = 2.0 * pi * lhs_q.value;

        const auto hf = fourier_hahn_params(f.alpha, f.beta, jf);
        const HahnParams<Complex> hg_conj{std::conj(g.alpha), std::conj(g.delta) - std::conj(g.beta) + 1.0,
                                          std::conj(g.gamma) - std::conj(g.alpha) + 1.0, std::conj(g.beta)};
        const Complex log_norm = detail::log_gamma_raw(f.alpha + f.beta + static_cast<double>(f.n)) +
                                 detail::log_gamma_raw(g.alpha + g.beta + static_cast<double>(g.n));
        const double poly_bound =
            coefficient_l1_norm(chahn_coeffs(f.n, hf)) * coefficient_l1_norm(chahn_coeffs(g.n, hg_conj));
        const Envelope env = scaled(hahn_weight_envelope(f.alpha, f.beta, g.alpha, g.beta, 0.5),
                                    std::exp(-log_norm.real()) * poly_bound, static_cast<double>(f.n + g.n));
        const QuadratureResult rhs_q = integrate_line(
            [&](double z) {
                const Complex w = std::exp(log_hahn_weight(0.5 * z, f.alpha, f.beta, g.alpha, g.beta) - log_norm);
                return w * chahn_eval(f.n, hf, Complex(0.5 * z)) * std::conj(chahn_eval(g.n, hg_conj, Complex(0.5 * z)));
            },
            env, config);
        const Complex rhs = power_of_i<Complex>(g.n - f.n) * power_of_two(wa + wb - 2.0) * rhs_q.value;

        const std::string details = "x-side " + short_complex(lhs, 15) + ", z-side " + short_complex(rhs, 15);
        return compare_report(name, lhs, rhs, tol, details,
                              {lhs_q.evaluations + rhs_q.evaluations, std::max(lhs_q.error, rhs_q.error)});
    });
}

} // namespace hahnlab

#endif
