#ifndef HAHNLAB_REPORT_HPP
#define HAHNLAB_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "hahnlab/errors.hpp"
#include "hahnlab/polynomial.hpp"

namespace hahnlab {

enum class CheckStatus { pass, fail, error };

inline const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "error";
    }
}

struct QuadDiagnostics {
    long evaluations = 0;
    double estimated_error = 0.0;

    QuadDiagnostics& operator+=(const QuadDiagnostics& o)
    {
        evaluations += o.evaluations;
        estimated_error = std::max(estimated_error, o.estimated_error);
        return *this;
    }
};

/// Outcome of one named identity check.
struct VerificationReport {
    std::string name;
    CheckStatus status = CheckStatus::error;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    std::string details;
    QuadDiagnostics quad_diagnostics;

    [[nodiscard]] bool passed() const { return status == CheckStatus::pass; }
};

inline void to_json(nlohmann::json& j, const VerificationReport& r)
{
    j = nlohmann::json{{"name", r.name},
                       {"status", to_string(r.status)},
                       {"max_abs_err", r.max_abs_err},
                       {"max_rel_err", r.max_rel_err},
                       {"details", r.details},
                       {"quad_diagnostics",
                        {{"evaluations", r.quad_diagnostics.evaluations},
                         {"estimated_error", r.quad_diagnostics.estimated_error}}}};
}

/// Tolerances a numerical check is judged against.
struct CheckTolerance {
    double rel = 1e-8;
    double abs = 1e-10;
};

/// Report for an exact identity: pass iff the residual is the zero polynomial.
inline VerificationReport exact_report(std::string name, const ExactPoly& residual, std::string details = {})
{
    VerificationReport r;
    r.name = std::move(name);
    r.status = residual.is_zero() ? CheckStatus::pass : CheckStatus::fail;
    for (const auto& c : residual.coefficients()) r.max_abs_err = std::max(r.max_abs_err, magnitude(c));
    r.max_rel_err = r.max_abs_err;
    if (!residual.is_zero()) {
        for (int k = 0; k <= residual.degree(); ++k) {
            if (!residual.coefficient(k).is_zero()) {
                details += (details.empty() ? "" : "; ") + std::string("nonzero residual coefficient at power ") +
                           std::to_string(k) + ": " + residual.coefficient(k).to_string();
                break;
            }
        }
    }
    r.details = std::move(details);
    return r;
}

/// Numerical comparison: passes if the absolute error is within tol.abs or
/// the relative error within tol.rel.
inline VerificationReport compare_report(std::string name, Complex got, Complex expected, const CheckTolerance& tol,
                                         std::string details = {}, QuadDiagnostics diagnostics = {})
{
    VerificationReport r;
    r.name = std::move(name);
    r.max_abs_err = std::abs(got - expected);
    r.max_rel_err = std::abs(expected) > 0.0 ? r.max_abs_err / std::abs(expected) : r.max_abs_err;
    r.status = (r.max_abs_err <= tol.abs || r.max_rel_err <= tol.rel) ? CheckStatus::pass : CheckStatus::fail;
    r.details = std::move(details);
    r.quad_diagnostics = diagnostics;
    return r;
}

/// Short human-readable complex number for report names and details.
inline std::string short_complex(Complex z, int digits = 6)
{
    std::ostringstream os;
    os.precision(digits);
    // a part below the printed precision of the other is dropped
    const double floor = std::max(std::abs(z.real()), std::abs(z.imag())) * std::pow(10.0, -digits - 1);
    const double re = std::abs(z.real()) < floor ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < floor ? 0.0 : z.imag();
    if (re != 0.0 || im == 0.0) os << re;
    if (im != 0.0) os << (im < 0 ? "-" : (re != 0.0 ? "+" : "")) << std::abs(im) << "i";
    return os.str();
}

/// Runs fn; library errors become a report with status error.
template <class Fn>
VerificationReport guarded(const std::string& name, Fn&& fn)
{
    try {
        return std::forward<Fn>(fn)();
    } catch (const error& e) {
        VerificationReport r;
        r.name = name;
        r.status = CheckStatus::error;
        r.details = e.what();
        return r;
    }
}

} // namespace hahnlab

#endif
