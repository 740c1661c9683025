#ifndef HAHNLAB_OPERATOR_CALCULUS_HPP
#define HAHNLAB_OPERATOR_CALCULUS_HPP

// Exact calculus on functions w(x) q(tanh x) with
// w(x) = (1 - tanh x)^alpha (1 + tanh x)^beta.

#include <string>
#include <utility>
#include <vector>

#include "hahnlab/polynomials.hpp"

namespace hahnlab {

/// x -> (1 - tanh x)^alpha (1 + tanh x)^beta poly(tanh x).
struct WeightedTanhFunction {
    GaussianRational alpha;
    GaussianRational beta;
    ExactPoly poly;

    friend bool operator==(const WeightedTanhFunction&, const WeightedTanhFunction&) = default;
};

/// d/dx w q(t) = w [((beta - alpha) - (alpha + beta) t) q(t) + (1 - t^2) q'(t)].
inline WeightedTanhFunction d_dx(const WeightedTanhFunction& f)
{
    using Q = GaussianRational;
    const ExactPoly log_derivative{f.beta - f.alpha, Q(0) - (f.alpha + f.beta)};
    const ExactPoly one_minus_t2{Q(1), Q(0), Q(-1)};
    return {f.alpha, f.beta, log_derivative * f.poly + one_minus_t2 * f.poly.derivative()};
}

/// Sum_j c_j (scale d/dx)^j f for an operator polynomial sum_j c_j y^j.
/// Iterated derivatives are accumulated term by term; d/dx does not commute
/// with multiplication by t, so Horner's scheme does not apply.
inline WeightedTanhFunction apply_operator_polynomial(const ExactPoly& op, const GaussianRational& scale,
                                                      const WeightedTanhFunction& f)
{
    WeightedTanhFunction out{f.alpha, f.beta, {}};
    WeightedTanhFunction power = f;
    GaussianRational scale_power(1);
    for (int j = 0; j <= op.degree(); ++j) {
        if (j > 0) {
            power = d_dx(power);
            scale_power = scale_power * scale;
        }
        const GaussianRational c = op.coefficient(j) * scale_power;
        if (!c.is_zero()) out.poly += c * power.poly;
    }
    return out;
}

namespace detail {

// What the printed log-derivative factor (alpha+beta) + (alpha-beta) t would
// give at alpha = beta = 1/2, q = 1 (sech x), against the known -t.
inline std::string printed_log_derivative_note()
{
    using Q = GaussianRational;
    const Q h = Q::fraction(1, 2);
    const ExactPoly printed{h + h, h - h};
    const ExactPoly used = d_dx({h, h, ExactPoly{Q(1)}}).poly;
    return "d/dx w uses (beta-alpha)-(alpha+beta)tanh x; the printed factor (alpha+beta)+(alpha-beta)tanh x "
           "would give d/dx sech x = sech x * [" +
           printed.coefficient(0).to_string() + "] instead of sech x * [" + used.coefficient(1).to_string() +
           " tanh x]";
}

inline std::string q_list(std::initializer_list<std::pair<const char*, GaussianRational>> items)
{
    std::string s;
    for (const auto& [k, v] : items) s += std::string(s.empty() ? "" : ",") + k + "=" + v.to_string();
    return s;
}

} // namespace detail

/// (alpha + 1/2 d/dx)_r w == 2^{-r} (1 - t)^r (alpha + beta)_r w, exactly.
inline VerificationReport shifted_operator_identity_check(const GaussianRational& alpha, const GaussianRational& beta,
                                                          int r)
{
    using Q = GaussianRational;
    const std::string name =
        "shifted_operator(" + detail::q_list({{"alpha", alpha}, {"beta", beta}}) + ",r=" + std::to_string(r) + ")";
    return guarded(name, [&] {
        if (r < 0 || r > 32) throw domain_error("shifted_operator_identity_check: r must lie in [0, 32]");
        const Q half = Q::fraction(1, 2);
        WeightedTanhFunction f{alpha, beta, ExactPoly{Q(1)}};
        for (int j = 0; j < r; ++j) {
            WeightedTanhFunction next = d_dx(f);
            next.poly *= half;
            next.poly += (alpha + Q(j)) * f.poly;
            f = std::move(next);
        }
        ExactPoly expected{Q(1)};
        const ExactPoly factor{half, Q(0) - half};
        for (int j = 0; j < r; ++j) expected = expected * factor;
        expected *= pochhammer(alpha + beta, r);
        return exact_report(name, f.poly - expected, detail::printed_log_derivative_note());
    });
}

/// p_n(-(i/2) d/dx; alpha, delta-beta+1, gamma-alpha+1, beta) w
///   == i^n (alpha+beta)_n w P_n^{(gamma,delta)}(tanh x), exactly.
inline VerificationReport hahn_operator_identity_check(int n, const GaussianRational& alpha,
                                                       const GaussianRational& beta, const GaussianRational& gamma,
                                                       const GaussianRational& delta)
{
    using Q = GaussianRational;
    const std::string name = "hahn_operator(n=" + std::to_string(n) + "," +
                             detail::q_list({{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}}) +
                             ")";
    return guarded(name, [&] {
        const ExactPoly op = chahn_coeffs_exact(n, fourier_hahn_params(alpha, beta, JacobiParams<Q>{gamma, delta}));
        const WeightedTanhFunction w{alpha, beta, ExactPoly{Q(1)}};
        const WeightedTanhFunction lhs = apply_operator_polynomial(op, Q(0) - Q::i() / Q(2), w);
        const ExactPoly rhs = power_of_i<Q>(n) * pochhammer(alpha + beta, n) * jacobi_coeffs_exact(n, {gamma, delta});
        return exact_report(name, lhs.poly - rhs, detail::printed_log_derivative_note());
    });
}

/// The Pasternack case alpha = beta = (m+1)/2, gamma = delta = 0; m = 0 is Bateman's.
inline VerificationReport pasternack_operator_identity_check(int n, const GaussianRational& m)
{
    using Q = GaussianRational;
    const Q h = (m + Q(1)) / Q(2);
    VerificationReport r = hahn_operator_identity_check(n, h, h, Q(0), Q(0));
    r.name = "pasternack_operator(n=" + std::to_string(n) + ",m=" + m.to_string() + ")";
    return r;
}

/// Coefficients of x p_n = A p_{n+1} + B p_n + C p_{n-1}.
struct RecurrenceCoefficients {
    GaussianRational A;
    GaussianRational B;
    GaussianRational C;
};

/// Expands x p_n(x; a,b,c,d) in the basis p_0..p_{n+1} by exact back
/// substitution from the top degree. Throws identity_error if any basis
/// coefficient below n-1 is nonzero or the expansion leaves a remainder.
inline RecurrenceCoefficients derive_recurrence(int n, const HahnParams<GaussianRational>& params)
{
    using Q = GaussianRational;
    if (n < 1) throw domain_error("derive_recurrence: n must be at least 1");
    std::vector<ExactPoly> basis;
    for (int k = 0; k <= n + 1; ++k) basis.push_back(chahn_coeffs_exact(k, params));

    ExactPoly rest = ExactPoly{Q(0), Q(1)} * basis[static_cast<std::size_t>(n)];
    std::vector<Q> coef(static_cast<std::size_t>(n) + 2, Q(0));
    for (int k = n + 1; k >= 0; --k) {
        const auto& pk = basis[static_cast<std::size_t>(k)];
        const Q c = rest.coefficient(k) / pk.leading_coefficient();
        coef[static_cast<std::size_t>(k)] = c;
        if (!c.is_zero()) rest -= c * pk;
    }
    if (!rest.is_zero()) throw identity_error("derive_recurrence: basis expansion left a remainder");
    for (int k = 0; k < n - 1; ++k) {
        if (!coef[static_cast<std::size_t>(k)].is_zero())
            throw identity_error("derive_recurrence: coefficient of p_" + std::to_string(k) + " in x p_" +
                                 std::to_string(n) + " is " + coef[static_cast<std::size_t>(k)].to_string() +
                                 ", not zero");
    }
    return {coef[static_cast<std::size_t>(n) + 1], coef[static_cast<std::size_t>(n)],
            coef[static_cast<std::size_t>(n) - 1]};
}

/// derive_recurrence plus A_n == lc(p_n)/lc(p_{n+1}).
inline VerificationReport recurrence_check(int n, const HahnParams<GaussianRational>& params)
{
    const std::string name =
        "recurrence(n=" + std::to_string(n) + "," +
        detail::q_list({{"a", params.a}, {"b", params.b}, {"c", params.c}, {"d", params.d}}) + ")";
    return guarded(name, [&] {
        const RecurrenceCoefficients rc = derive_recurrence(n, params);
        const GaussianRational expected_a =
            chahn_leading_coefficient(n, params) / chahn_leading_coefficient(n + 1, params);
        VerificationReport r = exact_report(name, ExactPoly{rc.A - expected_a},
                                            "A=" + rc.A.to_string() + " B=" + rc.B.to_string() +
                                                " C=" + rc.C.to_string() + "; lower basis coefficients vanish");
        return r;
    });
}

} // namespace hahnlab

#endif
