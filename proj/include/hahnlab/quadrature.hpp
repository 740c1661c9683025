#ifndef HAHNLAB_QUADRATURE_HPP
#define HAHNLAB_QUADRATURE_HPP

// Adaptive Gauss-Kronrod integration over the real line. The line is
// truncated to [-Z_left, Z_right] using a caller-supplied decay bound, then
// split into panels which are bisected globally (largest error first) until
// the summed error estimate meets the tolerance.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hahnlab/errors.hpp"
#include "hahnlab/numerics.hpp"

namespace hahnlab {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double truncation_margin = 2.0; // decades below abs_tol for the discarded tails
    int max_subdivisions = 2000;

    void validate() const
    {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw domain_error("quadrature tolerances must be positive");
        if (!(truncation_margin >= 0.0)) throw domain_error("truncation_margin must be nonnegative");
        if (max_subdivisions < 1) throw domain_error("max_subdivisions must be at least 1");
    }
};

/// |f(x)| <= amplitude (1+|x|)^power exp(-rate |x|) for |x| >= core on one side.
struct DecayBound {
    double amplitude = 1.0;
    double power = 0.0;
    double rate = 1.0;
    double core = 0.0;

    [[nodiscard]] double at(double r) const
    {
        return amplitude * std::exp(power * std::log1p(r) - rate * r);
    }

    /// Upper bound on the tail integral from r to infinity; valid for r >= 2 power / rate.
    [[nodiscard]] double tail(double r) const { return at(r) / rate * (power > 0.0 ? 2.0 : 1.0); }

    /// The product of two bounded functions.
    friend DecayBound operator*(const DecayBound& a, const DecayBound& b)
    {
        return {a.amplitude * b.amplitude, a.power + b.power, a.rate + b.rate, std::max(a.core, b.core)};
    }
};

struct Envelope {
    DecayBound left;  // x -> -infinity
    DecayBound right; // x -> +infinity

    static Envelope symmetric(const DecayBound& b) { return {b, b}; }

    friend Envelope operator*(const Envelope& a, const Envelope& b)
    {
        return {a.left * b.left, a.right * b.right};
    }
};

/// Multiplies the amplitude on both sides, e.g. by a polynomial's coefficient norm.
inline Envelope scaled(Envelope e, double factor, double extra_power = 0.0)
{
    e.left.amplitude *= factor;
    e.right.amplitude *= factor;
    e.left.power += extra_power;
    e.right.power += extra_power;
    return e;
}

struct QuadratureResult {
    Complex value;
    double error = 0.0;
    long evaluations = 0;
    int panels = 0;
    double left_radius = 0.0;
    double right_radius = 0.0;
};

/// Smallest radius (on a 1/(4 rate) grid) at which the bound's tail drops below target.
inline double truncation_radius(const DecayBound& b, double target)
{
    if (!(b.rate > 0.0) || !(b.amplitude >= 0.0))
        throw domain_error("truncation_radius: decay bound needs a positive rate");
    double r = std::max({b.core, 2.0 * b.power / b.rate, 0.0});
    const double step = 0.25 / b.rate;
    for (int k = 0; b.tail(r) >= target; ++k) {
        if (k > 1000000) throw quadrature_error("truncation_radius: decay bound never reaches the target");
        r += step;
    }
    return r;
}

namespace detail {

struct Panel {
    double a;
    double b;
    Complex value;
    double error;
    double floor; // roundoff level; panels at or below it are not split
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

// 21-point Kronrod rule with its embedded 10-point Gauss rule; nodes and
// weights come from Boost, the panel arithmetic is done here so the error
// estimate is on the panel's own scale.
template <class F>
Panel evaluate_panel(F& f, double a, double b, long& evaluations)
{
    using kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
    using gauss = boost::math::quadrature::gauss<double, 10>;
    const auto& x = kronrod::abscissa();
    const auto& wk = kronrod::weights();
    const auto& wg = gauss::weights();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const Complex f0 = f(mid);
    Complex k = f0 * wk[0];
    Complex g = 0.0;
    double l1 = std::abs(f0) * wk[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        const Complex fp = f(mid + half * x[i]);
        const Complex fm = f(mid - half * x[i]);
        k += (fp + fm) * wk[i];
        l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
        if (i % 2 == 1) g += (fp + fm) * wg[i / 2]; // Gauss nodes sit at odd indices
    }
    evaluations += 21;
    k *= half;
    g *= half;
    l1 *= half;
    const double err = std::abs(k - g);
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag()) || !std::isfinite(err))
        throw overflow_error("integrand is not finite on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * l1;
    return {a, b, k, std::max(err, floor), floor};
}

} // namespace detail

/// Integral of f over [a, b] by global adaptive bisection; panels start no
/// wider than max_width.
template <class F>
QuadratureResult integrate_interval(F&& f, double a, double b, const QuadratureConfig& config, double max_width)
{
    config.validate();
    if (!(b > a)) throw domain_error("integrate_interval: empty interval");
    QuadratureResult result;
    const int initial = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
    if (initial > config.max_subdivisions)
        throw quadrature_error("integrate: " + std::to_string(initial) + " initial panels exceed max_subdivisions");

    const auto wrapped = [&](double x) -> Complex { return f(x); };
    std::priority_queue<detail::Panel, std::vector<detail::Panel>, detail::PanelOrder> queue;
    std::vector<detail::Panel> settled;
    const double width = (b - a) / initial;
    for (int k = 0; k < initial; ++k) {
        const double lo = a + k * width;
        const double hi = k + 1 == initial ? b : a + (k + 1) * width;
        queue.push(detail::evaluate_panel(wrapped, lo, hi, result.evaluations));
    }

    // Running totals drive the stopping test only; the result is re-summed below.
    Complex total = 0.0;
    double error = 0.0;
    for (auto scan = queue; !scan.empty(); scan.pop()) {
        total += scan.top().value;
        error += scan.top().error;
    }
    int splits = 0;
    while (!queue.empty() && error > std::max(config.abs_tol, config.rel_tol * std::abs(total))) {
        detail::Panel worst = queue.top();
        queue.pop();
        if (worst.error <= worst.floor) {
            settled.push_back(worst);
            continue;
        }
        if (++splits > config.max_subdivisions)
            throw quadrature_error("integrate: no convergence after " + std::to_string(config.max_subdivisions) +
                                   " subdivisions (error estimate " + std::to_string(error) + ")");
        const double mid = 0.5 * (worst.a + worst.b);
        const detail::Panel left = detail::evaluate_panel(wrapped, worst.a, mid, result.evaluations);
        const detail::Panel right = detail::evaluate_panel(wrapped, mid, worst.b, result.evaluations);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    // Deterministic sum in order of position.
    while (!queue.empty()) {
        settled.push_back(queue.top());
        queue.pop();
    }
    std::sort(settled.begin(), settled.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    result.value = 0.0;
    result.error = 0.0;
    for (const auto& p : settled) {
        result.value += p.value;
        result.error += p.error;
    }
    result.panels = static_cast<int>(settled.size());
    return result;
}

/// Integral of f over the real line. The envelope bounds |f| away from the
/// origin; frequency is the angular frequency of any oscillatory factor, which
/// caps the initial panel width at pi/|frequency|.
template <class F>
QuadratureResult integrate_line(F&& f, const Envelope& envelope, const QuadratureConfig& config,
                                double frequency = 0.0)
{
    config.validate();
    const double target = config.abs_tol * std::pow(10.0, -config.truncation_margin);
    const double zl = truncation_radius(envelope.left, 0.5 * target);
    const double zr = truncation_radius(envelope.right, 0.5 * target);
    constexpr double default_width = 1.0;
    const double width = frequency != 0.0 ? std::min(default_width, pi / std::abs(frequency)) : default_width;
    QuadratureResult r = integrate_interval(std::forward<F>(f), -zl, zr, config, width);
    r.error += target;
    r.left_radius = zl;
    r.right_radius = zr;
    return r;
}

} // namespace hahnlab

#endif
