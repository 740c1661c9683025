#ifndef HAHNLAB_GAUSSIAN_RATIONAL_HPP
#define HAHNLAB_GAUSSIAN_RATIONAL_HPP

#include <complex>
#include <concepts>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "hahnlab/errors.hpp"
#include "hahnlab/numerics.hpp"

namespace hahnlab {

/// Canonical "p/q" text of a rational; the denominator is always written.
inline std::string rational_string(const mpq_class& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p/q" or "p" (optionally signed) into a canonical rational.
inline mpq_class parse_rational(const std::string& text)
{
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw parse_error("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

/// Exact element of Q(i). Both parts are kept in lowest terms by GMP.
class GaussianRational {
public:
    GaussianRational() = default;

    template <std::integral I>
    GaussianRational(I value) : re_(static_cast<long>(value))
    {
    }

    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    static GaussianRational fraction(long num, long den)
    {
        if (den == 0) throw domain_error("fraction with zero denominator");
        return {mpq_class(num, den)};
    }

    [[nodiscard]] const mpq_class& re() const { return re_; }
    [[nodiscard]] const mpq_class& im() const { return im_; }

    [[nodiscard]] bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    [[nodiscard]] bool is_real() const { return sgn(im_) == 0; }

    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
    [[nodiscard]] mpq_class norm() const { return re_ * re_ + im_ * im_; }

    [[nodiscard]] Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Human-readable form in the CLI number grammar: "p/q", "p/q+r/si", "r/si".
    [[nodiscard]] std::string to_string() const
    {
        auto part = [](const mpq_class& q) {
            return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
        };
        if (is_real()) return part(re_);
        const mpq_class abs_im = abs(im_);
        const std::string imag = (abs_im == 1 ? std::string() : part(abs_im)) + "i";
        if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
        return part(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class s = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(s);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o)
    {
        if (o.is_zero()) throw pole_error("exact division by zero");
        const mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class s = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(s);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline bool is_zero(const GaussianRational& v) { return v.is_zero(); }
inline GaussianRational conj(const GaussianRational& v) { return v.conj(); }
inline Complex to_complex(const GaussianRational& v) { return v.to_complex(); }
inline double magnitude(const GaussianRational& v) { return std::abs(v.to_complex()); }

inline bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
inline Complex to_complex(const Complex& v) { return v; }
inline double magnitude(const Complex& v) { return std::abs(v); }

/// Imaginary unit for each supported scalar type.
template <class T>
T imaginary_unit();
template <>
inline Complex imaginary_unit<Complex>() { return imag_i; }
template <>
inline GaussianRational imaginary_unit<GaussianRational>() { return GaussianRational::i(); }

/// i^n for any integer n, exactly.
template <class T>
T power_of_i(int n)
{
    switch (((n % 4) + 4) % 4) {
    case 0: return T(1);
    case 1: return imaginary_unit<T>();
    case 2: return T(-1);
    default: return T(0) - imaginary_unit<T>();
    }
}

} // namespace hahnlab

#endif
