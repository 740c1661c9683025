#ifndef HAHNLAB_CLI_HPP
#define HAHNLAB_CLI_HPP

// Command-line front end. Exit codes: 0 pass, 1 verification failure, 2 usage or domain error.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hahnlab/orthogonality.hpp"
#include "hahnlab/parse.hpp"
#include "hahnlab/polynomials.hpp"
#include "hahnlab/suite.hpp"

namespace hahnlab {

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    bool seed_independent = true;
    std::vector<std::string> outputs;
    std::string timestamp; // not covered by the byte-identical rerun guarantee
};

inline void to_json(nlohmann::json& j, const RunManifest& m)
{
    j = nlohmann::json{{"command", m.command},
                       {"parameters", m.parameters},
                       {"seed_independent", m.seed_independent},
                       {"outputs", m.outputs},
                       {"timestamp", m.timestamp}};
}

namespace detail {

inline std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw domain_error("write to '" + path + "' failed");
}

inline void write_manifest(const std::string& out_path, RunManifest m)
{
    m.timestamp = utc_timestamp();
    m.outputs.push_back(out_path + ".manifest.json");
    write_text(out_path + ".manifest.json", nlohmann::json(m).dump(2) + "\n");
}

// Shortest round-trip form.
inline std::string shortest(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

inline std::string format_float(Complex z)
{
    if (z.imag() == 0.0) return shortest(z.real());
    const std::string im = shortest(std::abs(z.imag())) + "i";
    if (z.real() == 0.0) return (z.imag() < 0 ? "-" : "") + im;
    return shortest(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

inline double positive_double(const std::string& text, const std::string& what)
{
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !(v > 0.0))
        throw parse_error(what + " must be a positive number, got '" + text + "'");
    return v;
}

inline const std::string& required(const std::optional<std::string>& v, const std::string& flag,
                                   const std::string& family)
{
    if (!v) throw parse_error("eval " + family + " needs " + flag);
    return *v;
}

struct EvalArgs {
    std::string family;
    int n = 0;
    std::optional<std::string> gamma, delta, a, b, c, d, m;
    std::string x;
    std::string mode = "float";
};

template <class T>
T eval_family(const EvalArgs& e, T (*conv)(const GaussianRational&))
{
    const auto get = [&](const std::optional<std::string>& v, const char* flag) {
        return conv(parse_number(required(v, flag, e.family)));
    };
    const T x = conv(parse_number(e.x));
    if (e.family == "jacobi") return jacobi_eval(e.n, JacobiParams<T>{get(e.gamma, "--gamma"), get(e.delta, "--delta")}, x);
    if (e.family == "chahn")
        return chahn_eval(e.n, HahnParams<T>{get(e.a, "--a"), get(e.b, "--b"), get(e.c, "--c"), get(e.d, "--d")}, x);
    if (e.family == "pasternack") return pasternack_eval(e.n, get(e.m, "--m"), x);
    return bateman_eval(e.n, x);
}

inline int cmd_eval(const EvalArgs& e, std::ostream& out)
{
    if (e.n < 0 || e.n > max_exact_degree)
        throw domain_error("--n must lie in [0, " + std::to_string(max_exact_degree) + "]");
    if (e.mode == "exact") {
        out << eval_family<GaussianRational>(e, [](const GaussianRational& q) { return q; }).to_string() << "\n";
    } else {
        out << format_float(eval_family<Complex>(e, [](const GaussianRational& q) { return q.to_complex(); })) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::optional<std::string> out;
    std::optional<double> rel_tol, abs_tol;
};

inline int cmd_verify(const VerifyArgs& v, const QuadratureConfig& quad, std::ostream& out)
{
    const auto selected = select_suites(v.suite);
    SuiteConfig cfg{quad, v.rel_tol, v.abs_tol};

    std::vector<std::future<Reports>> jobs;
    for (const Suite* s : selected)
        jobs.push_back(std::async(std::launch::async, [s, &cfg] { return s->run(cfg); }));

    nlohmann::json all = nlohmann::json::array();
    std::size_t total = 0;
    std::size_t failed = 0;
    for (std::size_t k = 0; k < selected.size(); ++k) {
        const Reports reports = jobs[k].get();
        const auto bad = static_cast<std::size_t>(
            std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); }));
        out << selected[k]->name << ": " << reports.size() - bad << "/" << reports.size() << " passed\n";
        for (const auto& r : reports) {
            if (!r.passed()) out << "  " << to_string(r.status) << " " << r.name << ": " << r.details << "\n";
            all.push_back(r);
        }
        total += reports.size();
        failed += bad;
    }
    out << (failed == 0 ? "PASS" : "FAIL") << " " << total - failed << "/" << total << " checks\n";

    if (v.out) {
        write_text(*v.out, all.dump(2) + "\n");
        RunManifest m{"verify", {{"suite", v.suite}, {"quad_rel_tol", shortest(quad.rel_tol)}}, true, {*v.out}, {}};
        if (v.rel_tol) m.parameters["rel_tol"] = shortest(*v.rel_tol);
        if (v.abs_tol) m.parameters["abs_tol"] = shortest(*v.abs_tol);
        write_manifest(*v.out, m);
    }
    return failed == 0 ? 0 : 1;
}

struct GramArgs {
    int N = 0;
    std::string alpha, beta, a, b;
    std::string out;
    std::optional<double> rel_tol, abs_tol;
};

inline int cmd_gram(const GramArgs& g, const QuadratureConfig& quad, std::ostream& out)
{
    const Complex alpha = parse_complex(g.alpha);
    const Complex beta = parse_complex(g.beta);
    const Complex a = parse_complex(g.a);
    const Complex b = parse_complex(g.b);
    const GramResult result = chahn_gram(g.N, alpha, beta, a, b, quad);
    const CheckTolerance tol = SuiteConfig{quad, g.rel_tol, g.abs_tol}.tolerance();
    const VerificationReport r = gram_report(gram_name(g.N, alpha, beta, a, b), result, tol);

    std::ostringstream csv;
    write_gram_csv(csv, result);
    write_text(g.out, csv.str());
    nlohmann::json summary = gram_summary(result);
    summary["report"] = r;
    const std::string summary_path = g.out + ".summary.json";
    write_text(summary_path, summary.dump(2) + "\n");

    RunManifest m{"gram",
                  {{"N", std::to_string(g.N)},
                   {"alpha", g.alpha},
                   {"beta", g.beta},
                   {"a", g.a},
                   {"b", g.b},
                   {"rel_tol", shortest(tol.rel)},
                   {"abs_tol", shortest(tol.abs)},
                   {"quad_rel_tol", shortest(quad.rel_tol)}},
                  true,
                  {g.out, summary_path},
                  {}};
    write_manifest(g.out, m);

    out << to_string(r.status) << " " << r.name << ": " << r.details << "\n";
    return r.passed() ? 0 : 1;
}

inline int cmd_list(std::ostream& out)
{
    for (const auto& s : all_suites()) out << s.name << "\t" << s.description << "\n";
    return 0;
}

} // namespace detail

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"hahnlab: continuous Hahn, Pasternack and Jacobi function toolkit"};
    app.require_subcommand(1);

    detail::EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate a polynomial at one point");
    eval->add_option("family", ev.family, "jacobi | chahn | bateman | pasternack")
        ->required()
        ->check(CLI::IsMember({"jacobi", "chahn", "bateman", "pasternack"}));
    eval->add_option("--n", ev.n, "degree")->required();
    eval->add_option("--gamma", ev.gamma, "Jacobi gamma");
    eval->add_option("--delta", ev.delta, "Jacobi delta");
    eval->add_option("--a", ev.a, "continuous Hahn a");
    eval->add_option("--b", ev.b, "continuous Hahn b");
    eval->add_option("--c", ev.c, "continuous Hahn c");
    eval->add_option("--d", ev.d, "continuous Hahn d");
    eval->add_option("--m", ev.m, "Pasternack m");
    eval->add_option("--x", ev.x, "evaluation point")->required();
    eval->add_option("--mode", ev.mode, "float (default) or exact")->check(CLI::IsMember({"float", "exact"}));

    detail::VerifyArgs vf;
    std::optional<std::string> vf_rel, vf_abs;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", vf.suite, "comma-separated suite names, or all (see 'list')");
    verify->add_option("--out", vf.out, "JSON report path; a manifest is written next to it");
    verify->add_option("--rel-tol", vf_rel, "relative tolerance override");
    verify->add_option("--abs-tol", vf_abs, "absolute tolerance override");

    detail::GramArgs gr;
    std::optional<std::string> gr_rel, gr_abs;
    auto* gram = app.add_subcommand("gram", "continuous Hahn Gram matrix");
    gram->add_option("--N", gr.N, "matrix size")->required();
    gram->add_option("--alpha", gr.alpha)->required();
    gram->add_option("--beta", gr.beta)->required();
    gram->add_option("--a", gr.a)->required();
    gram->add_option("--b", gr.b)->required();
    gram->add_option("--out", gr.out, "CSV path")->required();
    gram->add_option("--rel-tol", gr_rel, "diagonal relative tolerance");
    gram->add_option("--abs-tol", gr_abs, "scaled off-diagonal tolerance");

    auto* list = app.add_subcommand("list", "list verification suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend()); // CLI11 consumes from the back
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        QuadratureConfig quad;
        if (const char* env = std::getenv("HAHNLAB_TOL")) quad.rel_tol = detail::positive_double(env, "HAHNLAB_TOL");
        const auto tol = [](const std::optional<std::string>& s, const char* flag) -> std::optional<double> {
            if (!s) return std::nullopt;
            return detail::positive_double(*s, flag);
        };
        if (*eval) return detail::cmd_eval(ev, out);
        if (*verify) {
            vf.rel_tol = tol(vf_rel, "--rel-tol");
            vf.abs_tol = tol(vf_abs, "--abs-tol");
            return detail::cmd_verify(vf, quad, out);
        }
        if (*gram) {
            gr.rel_tol = tol(gr_rel, "--rel-tol");
            gr.abs_tol = tol(gr_abs, "--abs-tol");
            return detail::cmd_gram(gr, quad, out);
        }
        if (*list) return detail::cmd_list(out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace hahnlab

#endif
