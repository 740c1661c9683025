#ifndef HAHNLAB_FORMAL_SERIES_HPP
#define HAHNLAB_FORMAL_SERIES_HPP

// Truncated power series in t with exact Gaussian-rational coefficients.

#include <algorithm>
#include <string>
#include <vector>

#include "hahnlab/errors.hpp"
#include "hahnlab/gaussian_rational.hpp"
#include "hahnlab/polynomial.hpp"

namespace hahnlab {

/// sum_{k <= order} c_k t^k + O(t^{order+1}). Binary operations truncate to the
/// smaller order; nothing ever extends it.
class FormalSeries {
public:
    using Q = GaussianRational;

    explicit FormalSeries(int order) : c_(checked_size(order), Q(0)) {}

    FormalSeries(std::vector<Q> coefficients, int order) : c_(checked_size(order), Q(0))
    {
        const std::size_t n = std::min(c_.size(), coefficients.size());
        std::copy_n(coefficients.begin(), n, c_.begin());
    }

    static FormalSeries constant(const Q& v, int order)
    {
        FormalSeries s(order);
        s.c_[0] = v;
        return s;
    }

    static FormalSeries monomial(const Q& v, int power, int order)
    {
        if (power < 0) throw domain_error("FormalSeries::monomial: negative power");
        FormalSeries s(order);
        if (power <= order) s.c_[static_cast<std::size_t>(power)] = v;
        return s;
    }

    /// (1 - t)^e = sum_k (-e)_k / k! t^k.
    static FormalSeries one_minus_t_power(const Q& e, int order)
    {
        FormalSeries s(order);
        Q term(1);
        for (int k = 0; k <= order; ++k) {
            s.c_[static_cast<std::size_t>(k)] = term;
            term = term * (Q(k) - e) / Q(k + 1);
        }
        return s;
    }

    [[nodiscard]] int order() const { return static_cast<int>(c_.size()) - 1; }

    [[nodiscard]] const Q& coefficient(int k) const
    {
        if (k < 0 || k > order())
            throw domain_error("FormalSeries: coefficient " + std::to_string(k) + " beyond truncation order " +
                               std::to_string(order()));
        return c_[static_cast<std::size_t>(k)];
    }

    void set_coefficient(int k, Q v)
    {
        if (k < 0 || k > order())
            throw domain_error("FormalSeries: coefficient " + std::to_string(k) + " beyond truncation order " +
                               std::to_string(order()));
        c_[static_cast<std::size_t>(k)] = std::move(v);
    }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Q& v) { return v.is_zero(); });
    }

    /// Truncation to a lower order.
    [[nodiscard]] FormalSeries truncated(int order) const
    {
        if (order > this->order()) throw domain_error("FormalSeries::truncated: cannot extend the order");
        return FormalSeries(c_, order);
    }

    /// Coefficients as a polynomial in t (for residual reports).
    [[nodiscard]] ExactPoly to_polynomial() const { return ExactPoly(c_); }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b)
    {
        FormalSeries s(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k < s.c_.size(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
        return s;
    }

    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b)
    {
        FormalSeries s(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k < s.c_.size(); ++k) s.c_[k] = a.c_[k] - b.c_[k];
        return s;
    }

    friend FormalSeries operator*(const Q& v, const FormalSeries& a)
    {
        FormalSeries s = a;
        for (auto& c : s.c_) c = v * c;
        return s;
    }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b)
    {
        FormalSeries s(std::min(a.order(), b.order()));
        const std::size_t n = s.c_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j) s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return s;
    }

    /// 1/a for a unit (nonzero constant term).
    [[nodiscard]] FormalSeries reciprocal() const
    {
        if (c_[0].is_zero()) throw domain_error("FormalSeries::reciprocal: constant term is zero");
        FormalSeries r(order());
        const Q inv = Q(1) / c_[0];
        r.c_[0] = inv;
        for (std::size_t k = 1; k < c_.size(); ++k) {
            Q acc(0);
            for (std::size_t j = 1; j <= k; ++j) acc = acc + c_[j] * r.c_[k - j];
            r.c_[k] = Q(0) - acc * inv;
        }
        return r;
    }

    /// f(c t).
    [[nodiscard]] FormalSeries scale_argument(const Q& c) const
    {
        FormalSeries s = *this;
        Q power(1);
        for (auto& v : s.c_) {
            v = v * power;
            power = power * c;
        }
        return s;
    }

    friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

private:
    static std::size_t checked_size(int order)
    {
        if (order < 0) throw domain_error("FormalSeries: negative truncation order");
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<Q> c_;
};

/// pFq(numer; denom; u) = sum_k prod (a)_k / (prod (b)_k k!) u^k for a series u
/// with zero constant term; the result has u's order.
inline FormalSeries hypergeometric_series(const std::vector<GaussianRational>& numer,
                                          const std::vector<GaussianRational>& denom, const FormalSeries& u)
{
    using Q = GaussianRational;
    if (!u.coefficient(0).is_zero()) throw domain_error("hypergeometric_series: argument needs zero constant term");
    FormalSeries sum = FormalSeries::constant(Q(1), u.order());
    FormalSeries power = FormalSeries::constant(Q(1), u.order());
    Q coef(1);
    for (int k = 1; k <= u.order(); ++k) {
        Q num(1);
        Q den(k);
        for (const Q& a : numer) num = num * (a + Q(k - 1));
        for (const Q& b : denom) den = den * (b + Q(k - 1));
        if (den.is_zero()) throw pole_error("hypergeometric_series: lower parameter is a nonpositive integer");
        coef = coef * num / den;
        if (coef.is_zero()) break; // terminating
        power = power * u;
        sum = sum + coef * power;
    }
    return sum;
}

} // namespace hahnlab

#endif
