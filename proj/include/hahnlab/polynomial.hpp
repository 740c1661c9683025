#ifndef HAHNLAB_POLYNOMIAL_HPP
#define HAHNLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hahnlab/gaussian_rational.hpp"

namespace hahnlab {

/// Dense univariate polynomial, coefficients in ascending order.
/// The zero polynomial has no coefficients and degree -1; otherwise the last
/// stored coefficient is nonzero.
template <class T>
class Polynomial {
public:
    using value_type = T;

    Polynomial() = default;

    explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

    Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

    static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

    static Polynomial monomial(T value, int degree)
    {
        std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
        c.back() = std::move(value);
        return Polynomial(std::move(c));
    }

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<T>& coefficients() const { return c_; }

    [[nodiscard]] T coefficient(int k) const
    {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : T(0);
    }

    [[nodiscard]] T leading_coefficient() const { return c_.empty() ? T(0) : c_.back(); }

    /// Horner evaluation; U may differ from T (e.g. exact coefficients at a double point).
    template <class U>
    [[nodiscard]] U evaluate(const U& x) const
    {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + convert<U>(*it);
        return acc;
    }

    [[nodiscard]] Polynomial derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    /// x -> p(s x).
    [[nodiscard]] Polynomial scaled_argument(const T& s) const
    {
        std::vector<T> out(c_);
        T power(1);
        for (auto& coef : out) {
            coef = coef * power;
            power = power * s;
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const T& s)
    {
        for (auto& coef : c_) coef = coef * s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (::hahnlab::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    template <class U>
    static U convert(const T& v)
    {
        if constexpr (std::is_same_v<U, T>)
            return v;
        else
            return U(to_complex(v));
    }

    void trim()
    {
        while (!c_.empty() && ::hahnlab::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

using ExactPoly = Polynomial<GaussianRational>;
using ComplexPoly = Polynomial<Complex>;

/// Coefficient-wise complex conjugate.
template <class T>
Polynomial<T> conj(const Polynomial<T>& p)
{
    std::vector<T> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.push_back(conj(v));
    return Polynomial<T>(std::move(c));
}

/// Sum of coefficient magnitudes: |p(x)| <= l1_norm(p) (1+|x|)^deg.
template <class T>
double coefficient_l1_norm(const Polynomial<T>& p)
{
    double s = 0.0;
    for (const auto& v : p.coefficients()) s += magnitude(v);
    return s;
}

inline ComplexPoly to_complex_poly(const ExactPoly& p)
{
    std::vector<Complex> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.push_back(v.to_complex());
    return ComplexPoly(std::move(c));
}

} // namespace hahnlab

#endif
