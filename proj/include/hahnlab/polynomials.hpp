#ifndef HAHNLAB_POLYNOMIALS_HPP
#define HAHNLAB_POLYNOMIALS_HPP

// Jacobi, continuous Hahn, Bateman and Pasternack polynomials. Each family is
// a terminating hypergeometric sum accumulated through its term ratio, so the
// same code yields a floating value, an exact value, or exact coefficients
// depending on the scalar/value types it is instantiated with.

#include <complex>
#include <string>

#include "hahnlab/gaussian_rational.hpp"
#include "hahnlab/numerics.hpp"
#include "hahnlab/polynomial.hpp"
#include "hahnlab/report.hpp"

namespace hahnlab {

namespace detail {

// Floating sums carry terms far larger than the result (for n near 20 and
// |x| near 10 the ratio reaches 1e20), so they are accumulated in quad
// precision where the compiler provides it.
#ifdef __SIZEOF_FLOAT128__
using wide_real = __float128;
#else
using wide_real = long double;
#endif
using WideComplex = std::complex<wide_real>;

} // namespace detail

/// Jacobi parameters (gamma, delta) of P_n^{(gamma,delta)}.
template <class T>
struct JacobiParams {
    T gamma;
    T delta;
};

/// Continuous Hahn parameters of p_n(x; a, b, c, d).
template <class T>
struct HahnParams {
    T a;
    T b;
    T c;
    T d;

    [[nodiscard]] T sum() const { return a + b + c + d; }
};

template <>
inline detail::WideComplex imaginary_unit<detail::WideComplex>()
{
    return {0, 1};
}

/// Exact-mode degree cap.
inline constexpr int max_exact_degree = 64;

namespace detail {

inline WideComplex widen(const Complex& z) { return {wide_real(z.real()), wide_real(z.imag())}; }
inline Complex narrow(const WideComplex& z)
{
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline JacobiParams<WideComplex> widen(const JacobiParams<Complex>& p) { return {widen(p.gamma), widen(p.delta)}; }
inline HahnParams<WideComplex> widen(const HahnParams<Complex>& p)
{
    return {widen(p.a), widen(p.b), widen(p.c), widen(p.d)};
}

inline bool is_zero(const WideComplex& v) { return v.real() == 0 && v.imag() == 0; }

template <class T>
T checked_ratio(const T& num, const T& den, const char* family)
{
    if (is_zero(den)) throw pole_error(std::string(family) + ": parameter pole in a denominator Pochhammer symbol");
    return num / den;
}

/// sum_{k=0}^{n} c_k v_k with c_0 = 1, c_{k+1} = c_k ratio(k), v_0 = one,
/// v_{k+1} = v_k step(k).
template <class T, class V, class RatioFn, class StepFn>
V terminating_series(int n, const V& one, RatioFn&& ratio, StepFn&& step)
{
    if (n < 0) throw domain_error("negative degree");
    T coef(1);
    V power = one;
    V sum = one;
    for (int k = 0; k < n; ++k) {
        coef = coef * ratio(k);
        power = power * step(k);
        sum = sum + coef * power;
    }
    return sum;
}

// (1-x)/2 in the value form, or the polynomial 1/2 - x/2.
template <class T, class V>
V jacobi_series(int n, const JacobiParams<T>& p, const V& one, const V& y)
{
    const T nn(n);
    const T top = nn + p.gamma + p.delta + T(1);
    const auto ratio = [&](int k) {
        const T kk(k);
        return checked_ratio((kk - nn) * (top + kk), (kk + T(1)) * (p.gamma + T(1) + kk), "jacobi");
    };
    const V sum = terminating_series<T>(n, one, ratio, [&](int) { return y; });
    T prefactor = pochhammer(p.gamma + T(1), n);
    for (int j = 2; j <= n; ++j) prefactor = prefactor / T(j);
    return prefactor * sum;
}

// step(k) is a + k + i x.
template <class T, class V, class StepFn>
V chahn_series(int n, const HahnParams<T>& p, const V& one, StepFn&& step)
{
    const T nn(n);
    const T top = nn + p.sum() - T(1);
    const T ac = p.a + p.c;
    const T ad = p.a + p.d;
    const auto ratio = [&](int k) {
        const T kk(k);
        return checked_ratio((kk - nn) * (top + kk), (ac + kk) * (ad + kk) * (kk + T(1)), "continuous hahn");
    };
    const V sum = terminating_series<T>(n, one, ratio, step);
    T prefactor = power_of_i<T>(n) * pochhammer(ac, n) * pochhammer(ad, n);
    for (int j = 2; j <= n; ++j) prefactor = prefactor / T(j);
    return prefactor * sum;
}

// step(k) is (1+m+x)/2 + k.
template <class T, class V, class StepFn>
V pasternack_series(int n, const T& m, const V& one, StepFn&& step)
{
    const T nn(n);
    const auto ratio = [&](int k) {
        const T kk(k);
        return checked_ratio((kk - nn) * (nn + T(1) + kk), (kk + T(1)) * (kk + T(1)) * (m + T(1) + kk),
                             "pasternack");
    };
    return terminating_series<T>(n, one, ratio, step);
}

inline void require_exact_degree(int n)
{
    if (n < 0) throw domain_error("negative degree");
    if (n > max_exact_degree)
        throw domain_error("exact mode degree cap is " + std::to_string(max_exact_degree) + ", got " +
                           std::to_string(n));
}

template <class T>
void require_degree(const Polynomial<T>& p, int n, const char* family)
{
    if (p.degree() != n)
        throw domain_error(std::string(family) + ": degree drops below " + std::to_string(n) +
                           " for these parameters");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Jacobi P_n^{(gamma,delta)}(x) = (gamma+1)_n/n! 2F1(-n, n+gamma+delta+1; gamma+1; (1-x)/2)

template <class T>
T jacobi_eval(int n, const JacobiParams<T>& params, const T& x)
{
    return detail::jacobi_series<T, T>(n, params, T(1), (T(1) - x) / T(2));
}

inline Complex jacobi_eval(int n, const JacobiParams<Complex>& params, const Complex& x)
{
    return detail::narrow(jacobi_eval(n, detail::widen(params), detail::widen(x)));
}

template <class T>
Polynomial<T> jacobi_coeffs(int n, const JacobiParams<T>& params)
{
    const Polynomial<T> y{T(1) / T(2), T(-1) / T(2)};
    return detail::jacobi_series<T, Polynomial<T>>(n, params, Polynomial<T>::constant(T(1)), y);
}

/// Exact coefficients in x; degree exactly n.
inline ExactPoly jacobi_coeffs_exact(int n, const JacobiParams<GaussianRational>& params)
{
    detail::require_exact_degree(n);
    ExactPoly p = jacobi_coeffs(n, params);
    detail::require_degree(p, n, "jacobi");
    return p;
}

// ---------------------------------------------------------------------------
// Continuous Hahn
// p_n(x; a,b,c,d) = i^n (a+c)_n (a+d)_n / n! 3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1)

template <class T>
T chahn_eval(int n, const HahnParams<T>& params, const T& x)
{
    const T ix = imaginary_unit<T>() * x;
    return detail::chahn_series<T, T>(n, params, T(1), [&](int k) { return params.a + T(k) + ix; });
}

inline Complex chahn_eval(int n, const HahnParams<Complex>& params, const Complex& x)
{
    return detail::narrow(chahn_eval(n, detail::widen(params), detail::widen(x)));
}

template <class T>
Polynomial<T> chahn_coeffs(int n, const HahnParams<T>& params)
{
    return detail::chahn_series<T, Polynomial<T>>(n, params, Polynomial<T>::constant(T(1)), [&](int k) {
        return Polynomial<T>{params.a + T(k), imaginary_unit<T>()};
    });
}

/// Exact coefficients; leading coefficient is (n+a+b+c+d-1)_n / n!.
inline ExactPoly chahn_coeffs_exact(int n, const HahnParams<GaussianRational>& params)
{
    detail::require_exact_degree(n);
    ExactPoly p = chahn_coeffs(n, params);
    detail::require_degree(p, n, "continuous hahn");
    return p;
}

/// (n+a+b+c+d-1)_n / n!, the leading coefficient of p_n.
template <class T>
T chahn_leading_coefficient(int n, const HahnParams<T>& params)
{
    T lc = pochhammer(T(n) + params.sum() - T(1), n);
    for (int j = 2; j <= n; ++j) lc = lc / T(j);
    return lc;
}

/// Hahn parameters (alpha, delta-beta+1, gamma-alpha+1, beta) attached to
/// the weight (1-tanh)^alpha (1+tanh)^beta and Jacobi parameters (gamma, delta).
template <class T>
HahnParams<T> fourier_hahn_params(const T& alpha, const T& beta, const JacobiParams<T>& jacobi)
{
    return {alpha, jacobi.delta - beta + T(1), jacobi.gamma - alpha + T(1), beta};
}

// ---------------------------------------------------------------------------
// Pasternack F_n^m(x) = 3F2(-n, n+1, (1+m+x)/2; 1, m+1; 1); Bateman F_n = F_n^0.

template <class T>
T pasternack_eval(int n, const T& m, const T& x)
{
    const T base = (T(1) + m + x) / T(2);
    return detail::pasternack_series<T, T>(n, m, T(1), [&](int k) { return base + T(k); });
}

inline Complex pasternack_eval(int n, const Complex& m, const Complex& x)
{
    return detail::narrow(pasternack_eval(n, detail::widen(m), detail::widen(x)));
}

template <class T>
T bateman_eval(int n, const T& x)
{
    return pasternack_eval(n, T(0), x);
}

template <class T>
Polynomial<T> pasternack_coeffs(int n, const T& m)
{
    const T half = T(1) / T(2);
    return detail::pasternack_series<T, Polynomial<T>>(n, m, Polynomial<T>::constant(T(1)), [&](int k) {
        return Polynomial<T>{(T(1) + m) * half + T(k), half};
    });
}

inline ExactPoly pasternack_coeffs_exact(int n, const GaussianRational& m)
{
    detail::require_exact_degree(n);
    ExactPoly p = pasternack_coeffs(n, m);
    detail::require_degree(p, n, "pasternack");
    return p;
}

/// Exact check of (1+m)_n F_n^m(x) = (1-m)_n F_n^{-m}(x).
inline VerificationReport pasternack_reflection_check(int n, const GaussianRational& m)
{
    const std::string name = "pasternack_reflection(n=" + std::to_string(n) + ",m=" + m.to_string() + ")";
    return guarded(name, [&] {
        const ExactPoly lhs = pochhammer(GaussianRational(1) + m, n) * pasternack_coeffs_exact(n, m);
        const ExactPoly rhs = pochhammer(GaussianRational(1) - m, n) * pasternack_coeffs_exact(n, -m);
        return exact_report(name, lhs - rhs, "exact comparison of (1+m)_n F_n^m and (1-m)_n F_n^{-m}");
    });
}

} // namespace hahnlab

#endif
