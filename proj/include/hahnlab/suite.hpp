#ifndef HAHNLAB_SUITE_HPP
#define HAHNLAB_SUITE_HPP

// Named verification suites driving every check over fixed parameter grids.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hahnlab/identities.hpp"
#include "hahnlab/operator_calculus.hpp"
#include "hahnlab/orthogonality.hpp"
#include "hahnlab/polynomials.hpp"
#include "hahnlab/transforms.hpp"

namespace hahnlab {

struct SuiteConfig {
    QuadratureConfig quad;
    std::optional<double> rel_tol; // replaces each suite's default when set
    std::optional<double> abs_tol;

    [[nodiscard]] CheckTolerance tolerance(CheckTolerance defaults = {}) const
    {
        if (rel_tol) defaults.rel = *rel_tol;
        if (abs_tol) defaults.abs = *abs_tol;
        return defaults;
    }
};

using Reports = std::vector<VerificationReport>;

namespace suites {

using Q = GaussianRational;

inline Q frac(long p, long q) { return Q::fraction(p, q); }

inline Reports reflection(const SuiteConfig&)
{
    Reports out;
    for (const Q& m : {frac(1, 3), frac(1, 2), frac(-2, 5), frac(3, 7) + frac(1, 2) * Q::i()})
        for (int n = 0; n <= 12; ++n) out.push_back(pasternack_reflection_check(n, m));
    return out;
}

inline Reports operator_identities(const SuiteConfig&)
{
    Reports out;
    const Q h = frac(1, 2);
    for (const auto& [a, b] : std::vector<std::pair<Q, Q>>{{h, h}, {frac(3, 4), frac(5, 4)}, {frac(1, 3) + Q::i(), Q(2)}})
        for (int r = 0; r <= 8; ++r) out.push_back(shifted_operator_identity_check(a, b, r));
    struct Tuple {
        Q alpha, beta, gamma, delta;
    };
    for (const Tuple& t : {Tuple{h, h, Q(0), Q(0)}, Tuple{Q(1), h, frac(1, 3), frac(3, 4)},
                           Tuple{frac(3, 4) + frac(1, 4) * Q::i(), frac(3, 4) - frac(1, 4) * Q::i(), h, Q(2)}})
        for (int n = 0; n <= 8; ++n) out.push_back(hahn_operator_identity_check(n, t.alpha, t.beta, t.gamma, t.delta));
    for (const Q& m : {frac(1, 3), frac(1, 2), frac(-1, 4)})
        for (int n = 0; n <= 8; ++n) out.push_back(pasternack_operator_identity_check(n, m));
    return out;
}

inline Reports recurrence(const SuiteConfig&)
{
    Reports out;
    const Q h = frac(1, 2);
    for (const HahnParams<Q>& p : {HahnParams<Q>{h, h, h, h}, HahnParams<Q>{Q(1), frac(1, 3), frac(3, 4), frac(5, 4)},
                                   HahnParams<Q>{h + Q::i(), frac(2, 3), h - Q::i(), frac(2, 3)}})
        for (int n = 1; n <= 10; ++n) out.push_back(recurrence_check(n, p));
    return out;
}

inline std::vector<HahnTuple> hahn_tuples()
{
    const Q h = frac(1, 2);
    const Q q = frac(1, 4) * Q::i();
    return {{h, h, h, h},
            {Q(1), h, frac(3, 4), frac(5, 4)},
            {frac(1, 3), frac(2, 5), frac(7, 4), frac(1, 6)},
            {h + q, frac(3, 4) - q, h - q, frac(3, 4) + q},
            {Q(2), frac(1, 3), Q(1), frac(5, 2)}};
}

inline Reports contiguous(const SuiteConfig&)
{
    Reports out;
    for (int which : {1, 2})
        for (const auto& t : hahn_tuples())
            for (int n = 0; n <= 10; ++n) out.push_back(contiguous_check(which, n, t));
    return out;
}

inline Reports classical(const SuiteConfig&)
{
    Reports out;
    for (const auto which : {ClassicalIdentity::derivative, ClassicalIdentity::eq454})
        for (const auto& [g, d] : std::vector<std::pair<Q, Q>>{{frac(1, 3), frac(3, 4)}, {Q(2) + Q::i(), frac(-1, 2)}})
            for (int n = 0; n <= 12; ++n) out.push_back(jacobi_classical_check(which, n, g, d));
    return out;
}

inline Reports genfun(const SuiteConfig&)
{
    Reports out;
    constexpr int order = 12;
    for (int which : {1, 2})
        for (const auto& [g, d] : std::vector<std::pair<Q, Q>>{{Q(0), Q(0)}, {frac(1, 3), frac(3, 4)}})
            for (const Q& x : {frac(1, 3), frac(-2, 5), Q(3)}) out.push_back(genfun_jacobi_check(which, g, d, x, order));
    const auto tuples = hahn_tuples();
    for (int which : {1, 2})
        for (const auto& t : {tuples[0], tuples[1], tuples[3]})
            for (const Q& z : {frac(1, 4), frac(-3, 2), Q(2) + frac(1, 3) * Q::i()})
                out.push_back(genfun_chahn_check(which, t, z, order));
    return out;
}

inline std::vector<WeightedJacobi> transform_tuples()
{
    const Complex w{0.75, 0.5};
    return {{0, 0.5, 0.5, 0.0, 0.0},
            {0, 1.0, 0.75, 0.5, -0.25},
            {0, 2.0, 1.0, 1.5, 0.5},
            {0, 1.25, 1.25, 0.0, 0.0},
            {0, w, std::conj(w), Complex(0.5, 0.25), Complex(0.5, -0.25)}};
}

inline Reports fourier(const SuiteConfig& cfg)
{
    Reports out;
    for (auto f : transform_tuples())
        for (f.n = 0; f.n <= 8; ++f.n)
            for (double z : {0.0, 0.5, 1.0, 2.0, 5.0}) out.push_back(fourier_pair_check(f, z, cfg.quad, cfg.tolerance()));
    return out;
}

inline Reports mellin(const SuiteConfig& cfg)
{
    Reports out;
    for (auto f : transform_tuples())
        for (f.n = 0; f.n <= 8; ++f.n)
            for (double lambda : {0.0, 0.5, 1.0, 2.5}) out.push_back(mellin_pair_check(f, lambda, cfg.quad, cfg.tolerance()));
    return out;
}

inline Reports parseval(const SuiteConfig& cfg)
{
    Reports out;
    const auto t = transform_tuples();
    const CheckTolerance tol = cfg.tolerance();
    out.push_back(parseval_check({t[0], t[0]}, cfg.quad, tol));
    // alpha+a = beta+b = 1, gamma = delta = c = d = 0: Legendre orthogonality, n != m.
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m)
            out.push_back(parseval_check({{n, 0.5, 0.5, 0.0, 0.0}, {m, 0.5, 0.5, 0.0, 0.0}}, cfg.quad, tol));
    // Pasternack weight split as (1+m)/2 + (1-m)/2 on each side, F_n^m against F_p^{-m}.
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            out.push_back(parseval_check({{n, 2.0 / 3.0, 2.0 / 3.0, 0.0, 0.0}, {m, 1.0 / 3.0, 1.0 / 3.0, 0.0, 0.0}},
                                         cfg.quad, tol));
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto f = t[i];
        auto g = t[(i + 2) % t.size()];
        f.n = static_cast<int>(i) + 1;
        g.n = static_cast<int>(i % 3);
        out.push_back(parseval_check({f, g}, cfg.quad, tol));
    }
    return out;
}

/// Ten tuples with real parts in [1/4, 2] and imaginary parts in [-1, 1], from a fixed seed.
inline std::vector<std::array<Complex, 4>> barnes_tuples()
{
    std::mt19937_64 rng(20260512);
    const auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<std::array<Complex, 4>> out;
    for (int k = 0; k < 10; ++k) {
        std::array<Complex, 4> t;
        for (auto& v : t) v = {uniform(0.25, 2.0), uniform(-1.0, 1.0)};
        out.push_back(t);
    }
    return out;
}

inline Reports barnes(const SuiteConfig& cfg)
{
    Reports out;
    const CheckTolerance tol = cfg.tolerance({1e-9, 1e-10});
    for (const auto& t : barnes_tuples()) out.push_back(barnes_check(t[0], t[1], t[2], t[3], cfg.quad, tol));
    return out;
}

inline Reports chahn_gram(const SuiteConfig& cfg)
{
    const Complex w{0.5, 0.25};
    const Complex v{0.75, -0.25};
    const CheckTolerance tol = cfg.tolerance();
    return {chahn_gram_check(8, 0.5, 0.5, 0.5, 0.5, cfg.quad, tol),
            chahn_gram_check(8, 1.0, 0.5, 0.75, 1.25, cfg.quad, tol),
            chahn_gram_check(8, w, v, std::conj(w), std::conj(v), cfg.quad, tol)};
}

inline Reports bateman(const SuiteConfig& cfg)
{
    Reports out;
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= 10; ++m) out.push_back(bateman_ortho_check(n, m, cfg.quad, cfg.tolerance()));
    return out;
}

inline Reports pasternack(const SuiteConfig& cfg)
{
    Reports out;
    for (double m : {1.0 / 3.0, 0.5, 1e-8, 0.0}) // 1e-8 approaches the m -> 0 limit
        for (int n = 0; n <= 8; ++n)
            for (int p = 0; p <= 8; ++p) out.push_back(pasternack_ortho_check(n, p, m, cfg.quad, cfg.tolerance()));
    return out;
}

inline Reports biortho(const SuiteConfig& cfg)
{
    Reports out;
    for (int n = 0; n <= 8; ++n)
        for (int p = 0; p <= 8; ++p) out.push_back(pasternack_biortho_check(n, p, 1.0 / 3.0, cfg.quad, cfg.tolerance()));
    for (int n = 0; n <= 8; ++n) out.push_back(pasternack_reflection_check(n, frac(1, 3)));
    return out;
}

inline Reports jacobi_ortho(const SuiteConfig& cfg)
{
    Reports out;
    const CheckTolerance tol = cfg.tolerance({1e-9, 1e-10});
    for (const auto& [a, b] : std::vector<std::pair<Complex, Complex>>{
             {0.0, 0.0}, {-0.5, 0.5}, {2.5, 1.0}, {Complex(0.5, 1.0), Complex(0.5, -1.0)}})
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m) out.push_back(jacobi_ortho_check(n, m, a, b, cfg.quad, tol));
    return out;
}

} // namespace suites

struct Suite {
    std::string name;
    std::string description;
    std::function<Reports(const SuiteConfig&)> run;
};

inline const std::vector<Suite>& all_suites()
{
    static const std::vector<Suite> list = {
        {"reflection", "exact (1+m)_n F_n^m = (1-m)_n F_n^{-m}", suites::reflection},
        {"operator", "exact operator identities for weighted Jacobi functions", suites::operator_identities},
        {"recurrence", "exact three-term recurrence structure", suites::recurrence},
        {"contiguous", "exact contiguous relations", suites::contiguous},
        {"classical", "exact classical Jacobi identities", suites::classical},
        {"genfun", "exact generating functions as truncated series", suites::genfun},
        {"fourier", "Fourier transforms of weighted Jacobi functions", suites::fourier},
        {"mellin", "Mellin transforms against the Fourier route", suites::mellin},
        {"parseval", "Parseval identity between the x and z sides", suites::parseval},
        {"barnes", "Barnes' first lemma", suites::barnes},
        {"chahn-gram", "continuous Hahn Gram matrices", suites::chahn_gram},
        {"bateman", "Bateman orthogonality", suites::bateman},
        {"pasternack", "Pasternack orthogonality", suites::pasternack},
        {"biortho", "Pasternack biorthogonality", suites::biortho},
        {"jacobi-ortho", "Jacobi orthogonality with real and complex parameters", suites::jacobi_ortho},
    };
    return list;
}

/// Comma-separated suite names, or "all". Unknown names are a domain_error.
inline std::vector<const Suite*> select_suites(const std::string& filter)
{
    std::vector<std::string> names;
    std::stringstream ss(filter);
    for (std::string token; std::getline(ss, token, ',');)
        if (!token.empty()) names.push_back(token);
    if (names.empty()) throw domain_error("no suite selected");
    std::vector<const Suite*> out;
    for (const auto& s : all_suites()) {
        for (const auto& n : names) {
            if (n == "all" || n == s.name) {
                out.push_back(&s);
                break;
            }
        }
    }
    for (const auto& n : names) {
        if (n == "all") continue;
        bool known = false;
        for (const auto& s : all_suites()) known = known || s.name == n;
        if (!known) throw domain_error("unknown suite '" + n + "'");
    }
    return out;
}

} // namespace hahnlab

#endif
