#ifndef HAHNLAB_ORTHOGONALITY_HPP
#define HAHNLAB_ORTHOGONALITY_HPP

// Orthogonality integrals: continuous Hahn Gram matrices and Barnes' first
// lemma, Bateman and Pasternack (bi)orthogonality, Jacobi orthogonality.

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hahnlab/numerics.hpp"
#include "hahnlab/polynomials.hpp"
#include "hahnlab/quadrature.hpp"
#include "hahnlab/report.hpp"
#include "hahnlab/transforms.hpp"

namespace hahnlab {

/// Gamma(a+b+n)Gamma(alpha+beta+n)Gamma(n+alpha+a)Gamma(n+beta+b)
///   / (n! (2n+s-1) Gamma(n+s-1)),  s = alpha+beta+a+b.
inline Complex chahn_norm_rhs(int n, Complex alpha, Complex beta, Complex a, Complex b)
{
    if (n < 0) throw domain_error("chahn_norm_rhs: negative degree");
    detail::require_positive_real_part(alpha, "chahn_norm_rhs alpha");
    detail::require_positive_real_part(beta, "chahn_norm_rhs beta");
    detail::require_positive_real_part(a, "chahn_norm_rhs a");
    detail::require_positive_real_part(b, "chahn_norm_rhs b");
    using detail::log_gamma_raw;
    const double nn = n;
    const Complex s = alpha + beta + a + b;
    Complex l = log_gamma_raw(alpha + beta + nn) + log_gamma_raw(a + b + nn) + log_gamma_raw(alpha + a + nn) +
                log_gamma_raw(beta + b + nn) - std::lgamma(nn + 1.0);
    // (s-1) Gamma(s-1) = Gamma(s) keeps n = 0 finite at s = 1.
    if (n == 0)
        l -= log_gamma_raw(s);
    else
        l -= std::log(2.0 * nn + s - 1.0) + log_gamma_raw(nn + s - 1.0);
    return detail::checked_exp(l, "chahn_norm_rhs");
}

/// The Hahn parameters (alpha, b, a, beta) orthogonal for the weight
/// Gamma(alpha+iz)Gamma(beta-iz)Gamma(a-iz)Gamma(b+iz).
inline HahnParams<Complex> gram_hahn_params(Complex alpha, Complex beta, Complex a, Complex b)
{
    return {alpha, b, a, beta};
}

/// Even weight and polynomials of parity n: alpha=a, beta=b or alpha=beta, a=b.
inline bool gram_has_parity(Complex alpha, Complex beta, Complex a, Complex b)
{
    return (alpha == a && beta == b) || (alpha == beta && a == b);
}

struct GramResult {
    std::vector<std::vector<Complex>> matrix;
    std::vector<Complex> expected_diagonal;
    double max_offdiag_abs = 0.0;
    double max_offdiag_scaled = 0.0; // |G_nm| / sqrt(|h_n h_m|)
    double max_diag_rel_err = 0.0;
    long evaluations = 0;
    double max_quad_error = 0.0;
    int parity_zeros = 0;

    [[nodiscard]] int size() const { return static_cast<int>(matrix.size()); }
};

/// (1/2pi) int Gamma(alpha+iz)Gamma(beta-iz)Gamma(a-iz)Gamma(b+iz) p_n p_m dz for
/// n, m < N with p_k = p_k(z; alpha, b, a, beta). Entries vanishing by parity are
/// set to zero without quadrature; the lower triangle mirrors the upper.
inline GramResult chahn_gram(int N, Complex alpha, Complex beta, Complex a, Complex b, const QuadratureConfig& config)
{
    if (N < 1 || N > 16) throw domain_error("chahn_gram: N must lie in [1, 16]");
    const auto hp = gram_hahn_params(alpha, beta, a, b);
    const bool parity = gram_has_parity(alpha, beta, a, b);
    const Envelope weight_env = hahn_weight_envelope(alpha, beta, a, b, 1.0);
    std::vector<double> l1;
    GramResult g;
    for (int n = 0; n < N; ++n) {
        l1.push_back(coefficient_l1_norm(chahn_coeffs(n, hp)));
        g.expected_diagonal.push_back(chahn_norm_rhs(n, alpha, beta, a, b));
    }
    g.matrix.assign(static_cast<std::size_t>(N), std::vector<Complex>(static_cast<std::size_t>(N)));
    for (int n = 0; n < N; ++n) {
        for (int m = n; m < N; ++m) {
            Complex v = 0.0;
            if (parity && (n + m) % 2 == 1) {
                ++g.parity_zeros;
            } else {
                const Envelope env = scaled(weight_env, l1[n] * l1[m] / (2.0 * pi), static_cast<double>(n + m));
                const QuadratureResult q = integrate_line(
                    [&](double z) {
                        const Complex w = std::exp(log_hahn_weight(z, alpha, beta, a, b));
                        return w * chahn_eval(n, hp, Complex(z)) * chahn_eval(m, hp, Complex(z));
                    },
                    env, config);
                v = q.value / (2.0 * pi);
                g.evaluations += q.evaluations;
                g.max_quad_error = std::max(g.max_quad_error, q.error / (2.0 * pi));
            }
            g.matrix[n][m] = v;
            g.matrix[m][n] = v;
            if (n == m) {
                const Complex h = g.expected_diagonal[n];
                g.max_diag_rel_err = std::max(g.max_diag_rel_err, std::abs(v - h) / std::abs(h));
            } else {
                g.max_offdiag_abs = std::max(g.max_offdiag_abs, std::abs(v));
                const double scale =
                    std::sqrt(std::abs(g.expected_diagonal[n]) * std::abs(g.expected_diagonal[m]));
                g.max_offdiag_scaled = std::max(g.max_offdiag_scaled, std::abs(v) / scale);
            }
        }
    }
    return g;
}

/// Gram matrix against the closed-form norms: diagonal to tol.rel relative,
/// off-diagonal to tol.abs after scaling by sqrt(|h_n h_m|).
inline VerificationReport gram_report(std::string name, const GramResult& g, const CheckTolerance& tol)
{
    VerificationReport r;
    r.name = std::move(name);
    r.max_rel_err = g.max_diag_rel_err;
    r.max_abs_err = g.max_offdiag_abs;
    r.status =
        g.max_diag_rel_err <= tol.rel && g.max_offdiag_scaled <= tol.abs ? CheckStatus::pass : CheckStatus::fail;
    std::ostringstream d;
    d.precision(3);
    d << "max diagonal rel err " << g.max_diag_rel_err << "; max off-diagonal " << g.max_offdiag_abs
      << " (scaled by sqrt(h_n h_m): " << g.max_offdiag_scaled << "); " << g.parity_zeros
      << " entries zero by parity";
    r.details = d.str();
    r.quad_diagnostics = {g.evaluations, g.max_quad_error};
    return r;
}

inline std::string gram_name(int N, Complex alpha, Complex beta, Complex a, Complex b)
{
    return "chahn_gram(N=" + std::to_string(N) + ",alpha=" + short_complex(alpha) + ",beta=" + short_complex(beta) +
           ",a=" + short_complex(a) + ",b=" + short_complex(b) + ")";
}

inline VerificationReport chahn_gram_check(int N, Complex alpha, Complex beta, Complex a, Complex b,
                                           const QuadratureConfig& config, const CheckTolerance& tol = {})
{
    const std::string name = gram_name(N, alpha, beta, a, b);
    return guarded(name, [&] { return gram_report(name, chahn_gram(N, alpha, beta, a, b, config), tol); });
}

/// Matrix as CSV with a header row of column indices; complex entries as re,im pairs.
inline void write_gram_csv(std::ostream& os, const GramResult& g)
{
    const auto old_precision = os.precision(17);
    os << "row";
    for (int m = 0; m < g.size(); ++m) os << ",re_" << m << ",im_" << m;
    os << "\n";
    for (int n = 0; n < g.size(); ++n) {
        os << n;
        for (const Complex& v : g.matrix[n]) os << "," << v.real() << "," << v.imag();
        os << "\n";
    }
    os.precision(old_precision);
}

inline nlohmann::json gram_summary(const GramResult& g)
{
    nlohmann::json diag = nlohmann::json::array();
    for (int n = 0; n < g.size(); ++n) {
        diag.push_back({{"n", n},
                        {"computed", {g.matrix[n][n].real(), g.matrix[n][n].imag()}},
                        {"expected", {g.expected_diagonal[n].real(), g.expected_diagonal[n].imag()}}});
    }
    return {{"N", g.size()},
            {"diagonal", diag},
            {"max_offdiag_abs", g.max_offdiag_abs},
            {"max_offdiag_scaled", g.max_offdiag_scaled},
            {"max_diag_rel_err", g.max_diag_rel_err},
            {"parity_zeros", g.parity_zeros},
            {"evaluations", g.evaluations},
            {"max_quad_error", g.max_quad_error}};
}

/// Barnes' first lemma: the n = m = 0 Gram entry against chahn_norm_rhs(0, ...).
inline VerificationReport barnes_check(Complex alpha, Complex beta, Complex a, Complex b,
                                       const QuadratureConfig& config, const CheckTolerance& tol = {})
{
    const std::string name = "barnes(alpha=" + short_complex(alpha) + ",beta=" + short_complex(beta) +
                             ",a=" + short_complex(a) + ",b=" + short_complex(b) + ")";
    return guarded(name, [&] {
        const Envelope env = scaled(hahn_weight_envelope(alpha, beta, a, b, 1.0), 1.0 / (2.0 * pi));
        const QuadratureResult q = integrate_line(
            [&](double z) { return std::exp(log_hahn_weight(z, alpha, beta, a, b)) / (2.0 * pi); }, env, config);
        const Complex rhs = chahn_norm_rhs(0, alpha, beta, a, b);
        VerificationReport r = compare_report(name, q.value, rhs, tol,
                                              "quadrature " + short_complex(q.value, 15) + " vs " +
                                                  short_complex(rhs, 15),
                                              {q.evaluations, q.error});
        r.status = r.max_rel_err <= tol.rel ? CheckStatus::pass : CheckStatus::fail;
        return r;
    });
}

namespace detail {

// Diagonal entries are judged relatively, off-diagonal ones absolutely.
inline VerificationReport ortho_report(std::string name, Complex got, Complex expected, bool diagonal,
                                       const CheckTolerance& tol, std::string details, const QuadratureResult& q)
{
    VerificationReport r = compare_report(std::move(name), got, expected, tol, std::move(details),
                                          {q.evaluations, q.error});
    const bool ok = diagonal ? r.max_rel_err <= tol.rel : r.max_abs_err <= tol.abs;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

// 1/(cos(pi m) + cosh(pi x)) = 2 e^{-pi|x|} / (1 + 2 cos(pi m) e^{-pi|x|} + e^{-2 pi|x|}).
inline Complex pasternack_weight(Complex cos_pi_m, double x)
{
    const double e = std::exp(-pi * std::abs(x));
    return 2.0 * e / (1.0 + 2.0 * cos_pi_m * e + e * e);
}

// For |x| >= 1 both weights are at most 4 e^{-pi|x|} (cosh y - 1 >= e^y / 4 once y >= ln 4).
inline Envelope pasternack_weight_envelope(double poly_bound, int degree)
{
    return Envelope::symmetric({4.0 * poly_bound, static_cast<double>(degree), pi, 1.0});
}

inline void require_pasternack_m(Complex m, bool allow_imaginary)
{
    const bool real_in_range = m.imag() == 0.0 && std::abs(m.real()) < 1.0;
    const bool imaginary = allow_imaginary && m.real() == 0.0;
    if (real_in_range || imaginary) return;
    if (m.imag() == 0.0 && m.real() == std::round(m.real()))
        throw pole_error("pasternack: m*pi/sin(pi*m) has a pole at m = " + format_complex(m));
    throw domain_error(std::string("pasternack: m must satisfy -1 < m < 1") + (allow_imaginary ? " or lie on iR" : "") +
                       ", got " + format_complex(m));
}

inline void require_ortho_degree(int n, int cap, const char* what)
{
    if (n < 0 || n > cap)
        throw domain_error(std::string(what) + ": degree " + std::to_string(n) + " outside [0, " +
                           std::to_string(cap) + "]");
}

// int F_n^{m1}(ix) F_p^{m2}(ix) / (cos(pi m) + cosh(pi x)) dx.
inline QuadratureResult pasternack_integral(int n, Complex m1, int p, Complex m2, Complex m,
                                            const QuadratureConfig& config)
{
    const Complex c = std::cos(pi * m);
    const double bound =
        coefficient_l1_norm(pasternack_coeffs(n, m1)) * coefficient_l1_norm(pasternack_coeffs(p, m2));
    return integrate_line(
        [&](double x) {
            const Complex ix{0.0, x};
            return pasternack_weight(c, x) * pasternack_eval(n, m1, ix) * pasternack_eval(p, m2, ix);
        },
        pasternack_weight_envelope(bound, n + p), config);
}

} // namespace detail

/// int F_n(ix) F_m(ix) / cosh^2(pi x / 2) dx == delta_{nm} 4 (-1)^n / (pi (2n+1)).
inline VerificationReport bateman_ortho_check(int n, int m, const QuadratureConfig& config,
                                              const CheckTolerance& tol = {})
{
    const std::string name = "bateman_ortho(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
    return guarded(name, [&] {
        detail::require_ortho_degree(n, 12, "bateman_ortho_check");
        detail::require_ortho_degree(m, 12, "bateman_ortho_check");
        // 1/cosh^2(pi x/2) = 2/(1 + cosh pi x).
        QuadratureResult q = detail::pasternack_integral(n, 0.0, m, 0.0, 0.0, config);
        q.value *= 2.0;
        q.error *= 2.0;
        const Complex rhs = n == m ? 4.0 * (n % 2 == 0 ? 1.0 : -1.0) / (pi * (2.0 * n + 1.0)) : 0.0;
        return detail::ortho_report(name, q.value, rhs, n == m, tol,
                                    "quadrature " + short_complex(q.value, 15) + " vs " + short_complex(rhs, 15), q);
    });
}

/// delta_{np} ((-1)^n/(2n+1)) (2/pi) ((1-m)_n/(1+m)_n) (m pi / sin pi m).
inline Complex pasternack_norm(int n, Complex m)
{
    return (n % 2 == 0 ? 1.0 : -1.0) / (2.0 * n + 1.0) * (2.0 / pi) * pochhammer(1.0 - m, n) /
           pochhammer(1.0 + m, n) * pi_m_over_sin_pi_m(m);
}

/// int F_n^m(ix) F_p^m(ix) / (cos(pi m) + cosh(pi x)) dx against the closed form; the
/// diagonal is also compared with the continuous Hahn norm at alpha = beta = (1+m)/2,
/// a = b = (1-m)/2, z = x/2, and the ratio is reported.
inline VerificationReport pasternack_ortho_check(int n, int p, Complex m, const QuadratureConfig& config,
                                                 const CheckTolerance& tol = {})
{
    const std::string name =
        "pasternack_ortho(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",m=" + short_complex(m) + ")";
    return guarded(name, [&] {
        detail::require_pasternack_m(m, true);
        detail::require_ortho_degree(n, 10, "pasternack_ortho_check");
        detail::require_ortho_degree(p, 10, "pasternack_ortho_check");
        const QuadratureResult q = detail::pasternack_integral(n, m, p, m, m, config);
        const Complex rhs = n == p ? pasternack_norm(n, m) : 0.0;
        std::string details = "quadrature " + short_complex(q.value, 15) + " vs " + short_complex(rhs, 15);
        if (n == p) {
            const Complex h = (1.0 + m) / 2.0;
            const Complex k = (1.0 - m) / 2.0;
            const Complex lead = pochhammer(1.0 + m, n);
            const Complex via_hahn =
                chahn_norm_rhs(n, h, h, k, k) * 2.0 / (pi * (n % 2 == 0 ? 1.0 : -1.0) * lead * lead);
            details += "; continuous Hahn norm gives " + short_complex(via_hahn, 15) + ", ratio " +
                       short_complex(rhs / via_hahn, 12);
        }
        return detail::ortho_report(name, q.value, rhs, n == p, tol, details, q);
    });
}

/// int F_n^m(ix) F_p^{-m}(ix) / (cosh(pi x) + cos(m pi)) dx against
/// delta_{np} 2 (-1)^n / (pi (2n+1)) (m pi / sin pi m). Also reports the constant
/// implied by the orthogonality norm and (1+m)_n F_n^m = (1-m)_n F_n^{-m}.
inline VerificationReport pasternack_biortho_check(int n, int p, Complex m, const QuadratureConfig& config,
                                                   const CheckTolerance& tol = {})
{
    const std::string name =
        "pasternack_biortho(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",m=" + short_complex(m) + ")";
    return guarded(name, [&] {
        detail::require_pasternack_m(m, false);
        detail::require_ortho_degree(n, 10, "pasternack_biortho_check");
        detail::require_ortho_degree(p, 10, "pasternack_biortho_check");
        const QuadratureResult q = detail::pasternack_integral(n, m, p, -m, m, config);
        const Complex printed =
            n == p ? 2.0 * (n % 2 == 0 ? 1.0 : -1.0) / (pi * (2.0 * n + 1.0)) * pi_m_over_sin_pi_m(m) : 0.0;
        std::string details = "quadrature " + short_complex(q.value, 15) + " vs " + short_complex(printed, 15);
        if (n == p) {
            const Complex derived = pasternack_norm(n, m) * pochhammer(1.0 + m, n) / pochhammer(1.0 - m, n);
            details += "; via orthogonality norm and reflection " + short_complex(derived, 15) + ", ratio " +
                       short_complex(printed / derived, 12) + "; measured/printed " +
                       short_complex(q.value / printed, 12);
        }
        return detail::ortho_report(name, q.value, printed, n == p, tol, details, q);
    });
}

/// int_{-1}^{1} (1-x)^alpha (1+x)^beta P_n P_m dx against
/// delta_{nm} 2^{alpha+beta+1}/(2n+alpha+beta+1) Gamma(n+alpha+1)Gamma(n+beta+1)/(n! Gamma(n+alpha+beta+1)),
/// integrated in x = tanh u.
inline VerificationReport jacobi_ortho_check(int n, int m, Complex alpha, Complex beta, const QuadratureConfig& config,
                                             const CheckTolerance& tol = {})
{
    const std::string name = "jacobi_ortho(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                             ",alpha=" + short_complex(alpha) + ",beta=" + short_complex(beta) + ")";
    return guarded(name, [&] {
        if (!(alpha.real() > -1.0) || !(beta.real() > -1.0))
            throw domain_error("jacobi_ortho_check: requires Re(alpha), Re(beta) > -1");
        if (n < 0 || m < 0) throw domain_error("jacobi_ortho_check: negative degree");
        const JacobiParams<Complex> jp{alpha, beta};
        const Complex wa = alpha + 1.0;
        const Complex wb = beta + 1.0;
        const double bound = coefficient_l1_norm(jacobi_coeffs(n, jp)) * coefficient_l1_norm(jacobi_coeffs(m, jp));
        const QuadratureResult q = integrate_line(
            [&](double u) {
                const Complex t(std::tanh(u));
                return std::exp(detail::log_tanh_weight(u, wa, wb)) * jacobi_eval(n, jp, t) * jacobi_eval(m, jp, t);
            },
            scaled(detail::tanh_weight_envelope(wa, wb), bound), config);
        Complex rhs = 0.0;
        if (n == m) {
            using detail::log_gamma_raw;
            const double nn = n;
            Complex l = (alpha + beta + 1.0) * std::numbers::ln2 + log_gamma_raw(nn + alpha + 1.0) +
                        log_gamma_raw(nn + beta + 1.0) - std::lgamma(nn + 1.0);
            // (alpha+beta+1) Gamma(alpha+beta+1) = Gamma(alpha+beta+2) at n = 0.
            if (n == 0)
                l -= log_gamma_raw(alpha + beta + 2.0);
            else
                l -= std::log(2.0 * nn + alpha + beta + 1.0) + log_gamma_raw(nn + alpha + beta + 1.0);
            rhs = detail::checked_exp(l, "jacobi_ortho_check");
        }
        return detail::ortho_report(name, q.value, rhs, n == m, tol,
                                    "quadrature " + short_complex(q.value, 15) + " vs " + short_complex(rhs, 15), q);
    });
}

} // namespace hahnlab

#endif
