// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hahnlab/suite.hpp"

using hahnlab::Reports;
using hahnlab::VerificationReport;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    std::string suites;
    double budget_seconds; // 0: no runtime requirement
    std::function<std::string(const Reports&)> note;
};

std::string sci(double v)
{
    std::ostringstream os;
    os << std::setprecision(2) << std::scientific << v;
    return os.str();
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Worst diagonal relative error and off-diagonal absolute error over orthogonality reports.
std::string gram_note(const Reports& reports)
{
    double diag = 0.0;
    double off = 0.0;
    for (const auto& r : reports) {
        const auto n = r.name.find("n=");
        const auto m = r.name.find(r.name.find("p=") != std::string::npos ? "p=" : "m=", n + 2);
        if (n == std::string::npos || m == std::string::npos) continue;
        const int a = std::stoi(r.name.substr(n + 2));
        const int b = std::stoi(r.name.substr(m + 2));
        if (a == b) {
            diag = std::max(diag, r.max_rel_err);
        } else {
            off = std::max(off, r.max_abs_err);
        }
    }
    return "max diagonal rel err " + sci(diag) + ", max off-diagonal abs " + sci(off);
}

// A check passes on relative or absolute error; the smaller one is what it was judged by.
double judged_error(const VerificationReport& r) { return std::min(r.max_rel_err, r.max_abs_err); }

std::string max_rel_note(const Reports& reports)
{
    double worst = 0.0;
    for (const auto& r : reports) worst = std::max(worst, r.max_rel_err);
    return "max rel err " + sci(worst);
}

std::string biortho_note(const Reports& reports)
{
    std::string out = gram_note(reports);
    for (const auto& r : reports)
        if (starts_with(r.name, "pasternack_biortho(n=2,p=2")) out += "; diagonal n=p=2: " + r.details;
    return out;
}

std::string fourier_mellin_note(const Reports& reports)
{
    double fourier = 0.0;
    std::map<std::string, int> conventions;
    int mellin = 0;
    for (const auto& r : reports) {
        if (starts_with(r.name, "fourier")) fourier = std::max(fourier, judged_error(r));
        if (!starts_with(r.name, "mellin")) continue;
        ++mellin;
        const auto k = r.details.find("matching conventions: ");
        if (k != std::string::npos) ++conventions[r.details.substr(k + 22)];
    }
    std::string out = "Fourier max error (rel, abs where the transform vanishes) " + sci(fourier) +
                      "; Mellin matching conventions over " + std::to_string(mellin) + " checks:";
    for (const auto& [c, count] : conventions) out += " {" + c + "} x" + std::to_string(count);
    return out;
}

std::string exact_note(const Reports& reports)
{
    const bool all_zero =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.max_abs_err == 0.0; });
    return all_zero ? "all residuals exactly zero" : "nonzero residuals present";
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"AC1", "Bateman orthogonality n,m <= 10", "bateman", 30.0, gram_note},
        {"AC2", "Pasternack orthogonality m in {1/3, 1/2, 1e-8, 0}, n,p <= 8", "pasternack", 0.0, gram_note},
        {"AC3", "Pasternack biorthogonality m = 1/3, n,p <= 8", "biortho", 0.0, biortho_note},
        {"AC4", "continuous Hahn Gram matrices N = 8", "chahn-gram", 120.0, max_rel_note},
        {"AC5", "Barnes' first lemma, 10 random tuples", "barnes", 0.0, max_rel_note},
        {"AC6", "Fourier pairs and the Mellin route", "fourier,mellin", 0.0, fourier_mellin_note},
        {"AC7", "exact identity suite", "operator,reflection,recurrence,contiguous,genfun", 0.0, exact_note},
        {"AC8", "Jacobi orthogonality incl. alpha = 1/2+i, beta = 1/2-i", "jacobi-ortho", 0.0, gram_note},
    };

    const hahnlab::SuiteConfig config{};
    bool all_pass = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Reports reports;
        for (const auto* s : hahnlab::select_suites(c.suites)) {
            Reports part = s->run(config);
            reports.insert(reports.end(), part.begin(), part.end());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::vector<const VerificationReport*> bad;
        for (const auto& r : reports)
            if (!r.passed()) bad.push_back(&r);
        const bool in_budget = c.budget_seconds == 0.0 || seconds < c.budget_seconds;
        const bool pass = bad.empty() && !reports.empty() && in_budget;
        all_pass = all_pass && pass;

        std::ostringstream line;
        line << c.id << " " << (pass ? "PASS" : "FAIL") << " " << c.title << ": " << reports.size() - bad.size() << "/"
             << reports.size() << " checks, " << c.note(reports) << ", " << std::fixed << std::setprecision(2)
             << seconds << " s";
        if (c.budget_seconds > 0.0) line << " (budget " << c.budget_seconds << " s)";
        std::cout << line.str() << "\n";
        for (std::size_t k = 0; k < std::min<std::size_t>(bad.size(), 5); ++k)
            std::cout << "    " << hahnlab::to_string(bad[k]->status) << " " << bad[k]->name << ": " << bad[k]->details
                      << "\n";
        if (bad.size() > 5) std::cout << "    ... " << bad.size() - 5 << " more\n";
    }
    return all_pass ? 0 : 1;
}
