#ifndef HAHNLAB_TESTS_EXACT_ORACLES_HPP
#define HAHNLAB_TESTS_EXACT_ORACLES_HPP

// Exact reference constructions built from three-term recurrences rather than
// hypergeometric sums.

#include <vector>

#include "hahnlab/polynomials.hpp"
#include "oracles.hpp"

namespace oracle {

using hahnlab::ExactPoly;
using Q = hahnlab::GaussianRational;

inline Q frac(long p, long q) { return Q::fraction(p, q); }
inline Q cplx(long p, long q, long r, long s) { return {mpq_class(p, q), mpq_class(r, s)}; }

inline Q factorial(int n)
{
    Q f(1);
    for (int j = 2; j <= n; ++j) f = f * Q(j);
    return f;
}

// Jacobi polynomials from the standard three-term recurrence in n.
inline ExactPoly jacobi_by_recurrence(int n, const Q& a, const Q& b)
{
    const ExactPoly x{Q(0), Q(1)};
    ExactPoly prev = ExactPoly::constant(Q(1));
    if (n == 0) return prev;
    ExactPoly cur = ExactPoly{(a - b) / Q(2), (a + b + Q(2)) / Q(2)};
    for (int k = 2; k <= n; ++k) {
        const Q kk(k);
        const Q s = Q(2) * kk + a + b;
        const Q lead = Q(2) * kk * (kk + a + b) * (s - Q(2));
        const ExactPoly lin{(s - Q(1)) * (a * a - b * b), (s - Q(1)) * s * (s - Q(2))};
        ExactPoly next = lin * cur - (Q(2) * (kk + a - Q(1)) * (kk + b - Q(1)) * s) * prev;
        next *= Q(1) / lead;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Normalised continuous Hahn 3F2 from the three-term recurrence
// (a+ix) q_n = A_n q_{n+1} - (A_n + C_n) q_n + C_n q_{n-1}.
inline std::vector<ExactPoly> hahn_3f2_by_recurrence(int nmax, const hahnlab::HahnParams<Q>& p)
{
    const Q s = p.sum();
    const ExactPoly shift{p.a, Q::i()};
    std::vector<ExactPoly> q{ExactPoly::constant(Q(1))};
    for (int n = 0; n < nmax; ++n) {
        const Q nn(n);
        const Q A = Q(0) - (nn + s - Q(1)) * (nn + p.a + p.c) * (nn + p.a + p.d) /
                               ((Q(2) * nn + s - Q(1)) * (Q(2) * nn + s));
        const Q C = n == 0 ? Q(0)
                           : nn * (nn + p.b + p.c - Q(1)) * (nn + p.b + p.d - Q(1)) /
                                 ((Q(2) * nn + s - Q(2)) * (Q(2) * nn + s - Q(1)));
        ExactPoly rhs = shift * q[static_cast<std::size_t>(n)] + (A + C) * q[static_cast<std::size_t>(n)];
        if (n > 0) rhs -= C * q[static_cast<std::size_t>(n - 1)];
        q.push_back((Q(1) / A) * rhs);
    }
    return q;
}

inline Q random_rational(Uniform& u)
{
    // Rationals in [1/4, 4].
    for (;;) {
        const long den = u.integer(1, 12);
        const long num = u.integer(1, 48);
        const Q v = frac(num, den);
        if (v.re() >= mpq_class(1, 4) && v.re() <= 4) return v;
    }
}

} // namespace oracle

#endif
