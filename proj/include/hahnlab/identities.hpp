#ifndef HAHNLAB_IDENTITIES_HPP
#define HAHNLAB_IDENTITIES_HPP

// Exact checks of generating functions (as truncated series at a rational
// sample point), contiguous relations and two classical Jacobi identities.

#include <string>

#include "hahnlab/formal_series.hpp"
#include "hahnlab/operator_calculus.hpp"
#include "hahnlab/polynomials.hpp"

namespace hahnlab {

namespace detail {

inline void require_which(int which, const char* what)
{
    if (which != 1 && which != 2) throw domain_error(std::string(what) + ": which must be 1 or 2");
}

inline void require_order(int order, const char* what)
{
    if (order < 0 || order > max_exact_degree)
        throw domain_error(std::string(what) + ": order must lie in [0, " + std::to_string(max_exact_degree) + "]");
}

inline std::string first_nonzero(const ExactPoly& p, const char* var)
{
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coefficient(k).is_zero())
            return std::string(var) + "^" + std::to_string(k) + " coefficient " + p.coefficient(k).to_string();
    return "zero";
}

// c t / (1 - t)^2.
inline FormalSeries t_over_one_minus_t_squared(const GaussianRational& c, int order)
{
    const FormalSeries one_minus_t = FormalSeries::one_minus_t_power(GaussianRational(1), order);
    return FormalSeries::monomial(c, 1, order) * (one_minus_t * one_minus_t).reciprocal();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Jacobi generating functions at a fixed x.

/// which=1: (1-t)^{-gamma-delta-1} 2F1((gamma+delta+1)/2, (gamma+delta+2)/2; gamma+1; 2(x-1)t/(1-t)^2).
/// which=2: 0F1(; gamma+1; (x-1)t/2) 0F1(; delta+1; (x+1)t/2).
inline FormalSeries jacobi_genfun_closed(int which, const GaussianRational& gamma, const GaussianRational& delta,
                                         const GaussianRational& x, int order)
{
    using Q = GaussianRational;
    detail::require_which(which, "jacobi generating function");
    const Q half = Q::fraction(1, 2);
    if (which == 1) {
        const Q g = gamma + delta + Q(1);
        const FormalSeries u = detail::t_over_one_minus_t_squared(Q(2) * (x - Q(1)), order);
        return FormalSeries::one_minus_t_power(Q(0) - g, order) *
               hypergeometric_series({g * half, (g + Q(1)) * half}, {gamma + Q(1)}, u);
    }
    const FormalSeries u1 = FormalSeries::monomial((x - Q(1)) * half, 1, order);
    const FormalSeries u2 = FormalSeries::monomial((x + Q(1)) * half, 1, order);
    return hypergeometric_series({}, {gamma + Q(1)}, u1) * hypergeometric_series({}, {delta + Q(1)}, u2);
}

/// which=1: sum (gamma+delta+1)_n/(gamma+1)_n P_n t^n; which=2: sum P_n t^n / ((gamma+1)_n (delta+1)_n).
inline FormalSeries jacobi_genfun_expansion(int which, const GaussianRational& gamma, const GaussianRational& delta,
                                            const GaussianRational& x, int order)
{
    using Q = GaussianRational;
    detail::require_which(which, "jacobi generating function");
    FormalSeries s(order);
    for (int n = 0; n <= order; ++n) {
        const Q p = jacobi_eval(n, JacobiParams<Q>{gamma, delta}, x);
        const Q c = which == 1 ? pochhammer(gamma + delta + Q(1), n) / pochhammer(gamma + Q(1), n)
                               : Q(1) / (pochhammer(gamma + Q(1), n) * pochhammer(delta + Q(1), n));
        s.set_coefficient(n, c * p);
    }
    return s;
}

inline VerificationReport genfun_jacobi_check(int which, const GaussianRational& gamma, const GaussianRational& delta,
                                              const GaussianRational& x, int order)
{
    const std::string name = "genfun_jacobi(" + std::to_string(which) + "," +
                             detail::q_list({{"gamma", gamma}, {"delta", delta}, {"x", x}}) +
                             ",order=" + std::to_string(order) + ")";
    return guarded(name, [&] {
        detail::require_order(order, "genfun_jacobi_check");
        const FormalSeries residual = jacobi_genfun_closed(which, gamma, delta, x, order) -
                                      jacobi_genfun_expansion(which, gamma, delta, x, order);
        return exact_report(name, residual.to_polynomial(), "series residual in t");
    });
}

// ---------------------------------------------------------------------------
// Continuous Hahn generating functions at a fixed z; p_n = p_n(z; alpha, delta, gamma, beta).

struct HahnTuple {
    GaussianRational alpha;
    GaussianRational beta;
    GaussianRational gamma;
    GaussianRational delta;

    [[nodiscard]] HahnParams<GaussianRational> params() const { return {alpha, delta, gamma, beta}; }
    [[nodiscard]] GaussianRational sum() const { return alpha + beta + gamma + delta; }
};

namespace detail {

inline std::string hahn_label(const HahnTuple& h)
{
    return q_list({{"alpha", h.alpha}, {"beta", h.beta}, {"gamma", h.gamma}, {"delta", h.delta}});
}

// (1-t)^{exponent} 3F2((s-1)/2, s/2, alpha+iz; gamma+alpha, alpha+beta; -4t/(1-t)^2).
inline FormalSeries chahn_genfun1_with_exponent(const HahnTuple& h, const GaussianRational& z,
                                                const GaussianRational& exponent, int order)
{
    using Q = GaussianRational;
    const Q half = Q::fraction(1, 2);
    const Q s = h.sum();
    const FormalSeries u = t_over_one_minus_t_squared(Q(-4), order);
    return FormalSeries::one_minus_t_power(exponent, order) *
           hypergeometric_series({(s - Q(1)) * half, s * half, h.alpha + Q::i() * z}, {h.gamma + h.alpha, h.alpha + h.beta},
                                 u);
}

} // namespace detail

/// which=1: (1-t)^{1-s} 3F2((s-1)/2, s/2, alpha+iz; gamma+alpha, alpha+beta; -4t/(1-t)^2), s = alpha+beta+gamma+delta.
/// which=2: the double sum over p + k <= order of
///   (-t)^p t^k (alpha+iz)_p (beta-iz)_k / (p! (gamma+alpha)_p k! (delta+beta)_k (alpha+beta)_{p+k}).
inline FormalSeries chahn_genfun_closed(int which, const HahnTuple& h, const GaussianRational& z, int order)
{
    using Q = GaussianRational;
    detail::require_which(which, "continuous hahn generating function");
    if (which == 1) return detail::chahn_genfun1_with_exponent(h, z, Q(1) - h.sum(), order);
    const Q iz = Q::i() * z;
    FormalSeries s(order);
    for (int p = 0; p <= order; ++p) {
        const Q left = pochhammer(h.alpha + iz, p) / (pochhammer(Q(1), p) * pochhammer(h.gamma + h.alpha, p));
        for (int k = 0; p + k <= order; ++k) {
            const Q right = pochhammer(h.beta - iz, k) / (pochhammer(Q(1), k) * pochhammer(h.delta + h.beta, k));
            const Q sign = p % 2 == 0 ? Q(1) : Q(-1);
            s.set_coefficient(p + k, s.coefficient(p + k) + sign * left * right / pochhammer(h.alpha + h.beta, p + k));
        }
    }
    return s;
}

/// which=1: sum (s-1)_n / ((alpha+beta)_n (alpha+gamma)_n) (t/i)^n p_n.
/// which=2: sum (t/i)^n p_n / ((gamma+alpha)_n (delta+beta)_n (alpha+beta)_n).
inline FormalSeries chahn_genfun_expansion(int which, const HahnTuple& h, const GaussianRational& z, int order)
{
    using Q = GaussianRational;
    detail::require_which(which, "continuous hahn generating function");
    FormalSeries s(order);
    const auto params = h.params();
    for (int n = 0; n <= order; ++n) {
        const Q p = chahn_eval(n, params, z) * power_of_i<Q>(-n);
        const Q c = which == 1 ? pochhammer(h.sum() - Q(1), n) /
                                     (pochhammer(h.alpha + h.beta, n) * pochhammer(h.alpha + h.gamma, n))
                               : Q(1) / (pochhammer(h.gamma + h.alpha, n) * pochhammer(h.delta + h.beta, n) *
                                         pochhammer(h.alpha + h.beta, n));
        s.set_coefficient(n, c * p);
    }
    return s;
}

/// which=1 asserts the prefactor (1-t)^{1-s}; the details also give the first
/// nonzero residual coefficient with the printed prefactor (1-t)^{-s-1}.
inline VerificationReport genfun_chahn_check(int which, const HahnTuple& h, const GaussianRational& z, int order)
{
    using Q = GaussianRational;
    const std::string name = "genfun_chahn(" + std::to_string(which) + "," + detail::hahn_label(h) +
                             ",z=" + z.to_string() + ",order=" + std::to_string(order) + ")";
    return guarded(name, [&] {
        detail::require_order(order, "genfun_chahn_check");
        const FormalSeries expansion = chahn_genfun_expansion(which, h, z, order);
        const FormalSeries residual = chahn_genfun_closed(which, h, z, order) - expansion;
        std::string details = "series residual in t";
        if (which == 1) {
            const FormalSeries printed =
                detail::chahn_genfun1_with_exponent(h, z, Q(0) - h.sum() - Q(1), order) - expansion;
            details += "; prefactor (1-t)^{1-s} used; the printed (1-t)^{-s-1} leaves residual " +
                       detail::first_nonzero(printed.to_polynomial(), "t");
        } else {
            details += "; double sum compared on p+k <= " + std::to_string(order);
        }
        return exact_report(name, residual.to_polynomial(), details);
    });
}

// ---------------------------------------------------------------------------
// Contiguous relations, exact in z.

namespace detail {

// p_n(z; ...) as a polynomial in z, with p_{-1} = 0.
inline ExactPoly hahn_poly(int n, const GaussianRational& a, const GaussianRational& b, const GaussianRational& c,
                           const GaussianRational& d)
{
    if (n < 0) return {};
    require_exact_degree(n);
    return chahn_coeffs(n, HahnParams<GaussianRational>{a, b, c, d});
}

} // namespace detail

/// which=1: (alpha+beta+n)(alpha+iz) p_n(z; alpha,delta,gamma,beta)
///   = (alpha+beta)(alpha+iz) p_n(z; alpha+1,delta,gamma-1,beta)
///     + i(n+s-1)(alpha+iz)(beta-iz) p_{n-1}(z; alpha+1,delta,gamma,beta+1);
/// the details report the residual of the printed left side (alpha+beta+n) iz p_n.
/// which=2: (2n+s)(alpha+iz) p_n(z; alpha+1,delta,gamma,beta)
///   = (alpha+beta+n)(n+gamma+alpha) p_n(z; alpha,delta,gamma,beta) + i(n+1) p_{n+1}(z; alpha,delta,gamma,beta).
inline VerificationReport contiguous_check(int which, int n, const HahnTuple& h)
{
    using Q = GaussianRational;
    const std::string name =
        "contiguous(" + std::to_string(which) + ",n=" + std::to_string(n) + "," + detail::hahn_label(h) + ")";
    return guarded(name, [&] {
        detail::require_which(which, "contiguous_check");
        if (n < 0) throw domain_error("contiguous_check: negative degree");
        const auto& [al, be, ga, de] = h;
        const Q s = h.sum();
        const Q i = Q::i();
        const ExactPoly a_iz{al, i};
        const ExactPoly b_iz{be, Q(0) - i};
        const Q nn(n);
        using detail::hahn_poly;
        if (which == 1) {
            const ExactPoly rhs = (al + be) * (a_iz * hahn_poly(n, al + Q(1), de, ga - Q(1), be)) +
                                  (i * (nn + s - Q(1))) * (a_iz * b_iz * hahn_poly(n - 1, al + Q(1), de, ga, be + Q(1)));
            const ExactPoly pn = hahn_poly(n, al, de, ga, be);
            const ExactPoly lhs = (al + be + nn) * (a_iz * pn);
            const ExactPoly printed = (al + be + nn) * (ExactPoly{Q(0), i} * pn);
            const ExactPoly printed_residual = printed - rhs;
            const std::string details =
                "left side (alpha+beta+n)(alpha+iz)p_n used; the printed (alpha+beta+n) iz p_n " +
                (printed_residual.is_zero() ? std::string("also holds here")
                                            : "leaves residual " + detail::first_nonzero(printed_residual, "z"));
            return exact_report(name, lhs - rhs, details);
        }
        const ExactPoly lhs = (Q(2) * nn + s) * (a_iz * hahn_poly(n, al + Q(1), de, ga, be));
        const ExactPoly rhs = ((al + be + nn) * (nn + ga + al)) * hahn_poly(n, al, de, ga, be) +
                              (i * Q(n + 1)) * hahn_poly(n + 1, al, de, ga, be);
        return exact_report(name, lhs - rhs);
    });
}

// ---------------------------------------------------------------------------
// Classical Jacobi identities, exact in x.

enum class ClassicalIdentity { derivative, eq454 };

/// derivative: d/dx P_n^{(gamma,delta)} = (n+gamma+delta+1)/2 P_{n-1}^{(gamma+1,delta+1)}, P_{-1} = 0.
/// eq454: (n+gamma+1) P_n - (n+1) P_{n+1} = (2n+gamma+delta+2)/2 (1-x) P_n^{(gamma+1,delta)}.
inline VerificationReport jacobi_classical_check(ClassicalIdentity which, int n, const GaussianRational& gamma,
                                                 const GaussianRational& delta)
{
    using Q = GaussianRational;
    const std::string name = std::string("jacobi_classical(") +
                             (which == ClassicalIdentity::derivative ? "derivative" : "eq454") +
                             ",n=" + std::to_string(n) + "," + detail::q_list({{"gamma", gamma}, {"delta", delta}}) + ")";
    return guarded(name, [&] {
        if (n < 0) throw domain_error("jacobi_classical_check: negative degree");
        detail::require_exact_degree(n + 1);
        const Q half = Q::fraction(1, 2);
        const Q nn(n);
        const auto P = [](int k, const Q& g, const Q& d) {
            return k < 0 ? ExactPoly{} : jacobi_coeffs(k, JacobiParams<Q>{g, d});
        };
        if (which == ClassicalIdentity::derivative) {
            const ExactPoly lhs = P(n, gamma, delta).derivative();
            const ExactPoly rhs = ((nn + gamma + delta + Q(1)) * half) * P(n - 1, gamma + Q(1), delta + Q(1));
            return exact_report(name, lhs - rhs);
        }
        const ExactPoly lhs = (nn + gamma + Q(1)) * P(n, gamma, delta) - Q(n + 1) * P(n + 1, gamma, delta);
        const ExactPoly rhs =
            ((Q(2) * nn + gamma + delta + Q(2)) * half) * (ExactPoly{Q(1), Q(-1)} * P(n, gamma + Q(1), delta));
        return exact_report(name, lhs - rhs);
    });
}

} // namespace hahnlab

#endif
