// Command-line front end: single-value evaluation (JSON), identity
// verification suites (JSON report array), and CSV table generation.
//
// Exit codes: 0 success / all identities pass; 1 at least one identity
// failed; 2 usage or domain error; 3 series non-convergence.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsf/deformed_exp.hpp"
#include "qsf/errors.hpp"
#include "qsf/matrix_elements.hpp"
#include "qsf/parallel.hpp"
#include "qsf/qseries.hpp"
#include "qsf/report.hpp"
#include "qsf/rogers_szego.hpp"
#include "qsf/scalar.hpp"
#include "qsf/suites.hpp"

namespace {

using qsf::Complex;
using json = nlohmann::ordered_json;

struct EvalResult {
    Complex value{0.0, 0.0};
    int terms_used = 1;
    bool converged = true;
    double est_error = 0.0;
};

EvalResult from_series(const qsf::SeriesEval& s) {
    return {s.value, s.terms_used, s.converged, s.est_error};
}

using ParamMap = std::map<std::string, double>;

double need(const ParamMap& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw qsf::DomainError("missing parameter --" + key);
    return it->second;
}

double get_or(const ParamMap& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

int need_int(const ParamMap& p, const std::string& key) {
    const double v = need(p, key);
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
        throw qsf::DomainError("parameter --" + key + " must be an integer");
    return static_cast<int>(r);
}

Complex cplx(const ParamMap& p, const std::string& key) {
    return {need(p, key), get_or(p, key + "-im", 0.0)};
}

struct ListArgs {
    std::vector<double> upper_q, lower_q, upper_p, lower_p;
};

EvalResult call_function(const std::string& fn, const ParamMap& p, const ListArgs& lists,
                         const qsf::SeriesPolicy& policy) {
    if (fn == "eq-mu")
        return from_series(qsf::eq_mu(cplx(p, "z"), need(p, "q"), need(p, "mu"), policy));
    if (fn == "epq-munu")
        return from_series(qsf::epq_munu(cplx(p, "z"), need(p, "p"), need(p, "q"),
                                         need(p, "mu"), need(p, "nu"), policy));
    if (fn == "rs") {
        const int n = need_int(p, "n");
        return {qsf::rs_eval(n, cplx(p, "y"), need(p, "q")), n + 1, true, 0.0};
    }
    if (fn == "q-jacobi-little") {
        const int n = need_int(p, "n");
        return {qsf::little_q_jacobi(n, cplx(p, "z"), Complex(need(p, "alpha")),
                                     Complex(need(p, "beta")), need(p, "q")),
                n + 1, true, 0.0};
    }
    if (fn == "q-jacobi-big") {
        const int n = need_int(p, "n");
        return {qsf::big_q_jacobi(n, cplx(p, "z"), Complex(need(p, "alpha")),
                                  Complex(need(p, "beta")), need(p, "q")),
                n + 1, true, 0.0};
    }
    if (fn == "hahn-exton")
        return from_series(
            qsf::hahn_exton_bessel(need_int(p, "n"), cplx(p, "z"), need(p, "q"), policy));
    if (fn == "q-bessel2")
        return from_series(
            qsf::q_bessel_2(need_int(p, "nu"), cplx(p, "x"), need(p, "q"), policy));
    if (fn == "q-laguerre") {
        const int n = need_int(p, "n");
        return {qsf::q_laguerre(n, need(p, "gamma"), cplx(p, "x"), need(p, "q")), n + 1,
                true, 0.0};
    }
    if (fn == "phi-rs" || fn == "phi-bibasic") {
        qsf::PhiSpec spec;
        for (double a : lists.upper_q) spec.upper_q.emplace_back(a, 0.0);
        for (double b : lists.lower_q) spec.lower_q.emplace_back(b, 0.0);
        for (double c : lists.upper_p) spec.upper_p.emplace_back(c, 0.0);
        for (double d : lists.lower_p) spec.lower_p.emplace_back(d, 0.0);
        spec.base_q = Complex(need(p, "base-q"));
        spec.argument = {need(p, "arg"), get_or(p, "arg-im", 0.0)};
        if (fn == "phi-bibasic") {
            spec.base_p = Complex(need(p, "base-p"));
            return from_series(qsf::phi_bibasic(spec, policy));
        }
        return from_series(qsf::phi_rs(spec, policy));
    }
    if (fn == "u-q") {
        const auto r = qsf::u_q(need_int(p, "m"), need_int(p, "n"),
                                Complex(need(p, "alpha")), Complex(need(p, "beta")),
                                need(p, "mu"), need(p, "nu"), need(p, "q"));
        return {r.value, std::min(need_int(p, "m"), need_int(p, "n")) + 1, true, 0.0};
    }
    if (fn == "u-pq") {
        const auto r = qsf::u_pq(need_int(p, "m"), need_int(p, "n"),
                                 Complex(need(p, "alpha")), Complex(need(p, "beta")),
                                 need(p, "mu"), need(p, "nu"), need(p, "p"), need(p, "q"));
        return {r.value, std::min(need_int(p, "m"), need_int(p, "n")) + 1, true, 0.0};
    }
    if (fn == "kernel-q") {
        const int n = need_int(p, "n");
        return {qsf::q_kernel_Q(n, cplx(p, "x"), need(p, "gamma"), need(p, "mu"),
                                need(p, "nu"), need(p, "q")),
                n + 1, true, 0.0};
    }
    if (fn == "kernel-l") {
        const int n = need_int(p, "n");
        return {qsf::pq_kernel_L(n, cplx(p, "x"), need_int(p, "gamma"), need(p, "mu"),
                                 need(p, "nu"), need(p, "p"), need(p, "q")),
                n + 1, true, 0.0};
    }
    throw qsf::DomainError("unknown function '" + fn + "'");
}

json value_json(const Complex& v) {
    return json{{"re", v.real()}, {"im", v.imag()}};
}

void print_error(const std::string& type, const std::string& message) {
    json j;
    j["error"] = json{{"type", type}, {"message", message}};
    std::cout << j.dump(2) << "\n";
}

// ------------------------------------------------------------------- table

struct Axis {
    std::string name;
    std::vector<double> values;
};

/// Grid syntax per axis: "a..b" (integer range, inclusive), "lo:hi:count"
/// (uniform grid), or a single number.
std::vector<double> parse_axis(const std::string& text) {
    const auto dotdot = text.find("..");
    if (dotdot != std::string::npos) {
        const long lo = std::stol(text.substr(0, dotdot));
        const long hi = std::stol(text.substr(dotdot + 2));
        if (hi < lo) throw qsf::DomainError("empty grid axis '" + text + "'");
        std::vector<double> v;
        for (long i = lo; i <= hi; ++i) v.push_back(static_cast<double>(i));
        return v;
    }
    const auto c1 = text.find(':');
    if (c1 != std::string::npos) {
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw qsf::DomainError("grid axis '" + text + "' needs lo:hi:count");
        const double lo = std::stod(text.substr(0, c1));
        const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        const long count = std::stol(text.substr(c2 + 1));
        if (count < 1) throw qsf::DomainError("empty grid axis '" + text + "'");
        std::vector<double> v;
        for (long i = 0; i < count; ++i)
            v.push_back(count == 1 ? lo
                                   : lo + (hi - lo) * static_cast<double>(i) /
                                         static_cast<double>(count - 1));
        return v;
    }
    return {std::stod(text)};
}

const std::map<std::string, std::vector<std::string>> kTableAxes = {
    {"eq-mu", {"z", "q", "mu"}},
    {"epq-munu", {"z", "p", "q", "mu", "nu"}},
    {"rs", {"n", "y", "q"}},
    {"q-jacobi-little", {"n", "z", "alpha", "beta", "q"}},
    {"q-jacobi-big", {"n", "z", "alpha", "beta", "q"}},
    {"hahn-exton", {"n", "z", "q"}},
    {"q-bessel2", {"nu", "x", "q"}},
    {"q-laguerre", {"n", "gamma", "x", "q"}},
    {"u-q", {"m", "n", "alpha", "beta", "mu", "nu", "q"}},
    {"u-pq", {"m", "n", "alpha", "beta", "mu", "nu", "p", "q"}},
    {"kernel-q", {"n", "x", "gamma", "mu", "nu", "q"}},
    {"kernel-l", {"n", "x", "gamma", "mu", "nu", "p", "q"}},
};

/// RFC-4180-style quoting; plain numbers never need it but keep it honest.
std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += "\"";
    return out;
}

int run_table(const std::string& fn, const std::map<std::string, std::string>& axis_args,
              const qsf::SeriesPolicy& policy) {
    auto it = kTableAxes.find(fn);
    if (it == kTableAxes.end())
        throw qsf::DomainError("function '" + fn + "' is not tabulable");
    const auto& axis_names = it->second;

    std::vector<Axis> axes;
    for (const auto& name : axis_names) {
        auto arg = axis_args.find(name);
        if (arg == axis_args.end())
            throw qsf::DomainError("missing grid axis --" + name + " for '" + fn + "'");
        axes.push_back({name, parse_axis(arg->second)});
        if (axes.back().values.empty())
            throw qsf::DomainError("empty grid axis --" + name);
    }

    std::string header;
    for (const auto& a : axes) header += csv_quote(a.name) + ",";
    header += "value_re,value_im";
    std::cout << header << "\n";

    // Row order is lexicographic over the axes: the first axis varies slowest.
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        ParamMap p;
        for (std::size_t i = 0; i < axes.size(); ++i)
            p[axes[i].name] = axes[i].values[idx[i]];
        const EvalResult r = call_function(fn, p, {}, policy);
        std::string row;
        for (std::size_t i = 0; i < axes.size(); ++i)
            row += qsf::to_decimal(axes[i].values[idx[i]]) + ",";
        row += qsf::to_decimal(r.value.real()) + "," + qsf::to_decimal(r.value.imag());
        std::cout << row << "\n";

        std::size_t k = axes.size();
        bool advanced = false;
        while (k > 0) {
            --k;
            if (++idx[k] < axes[k].values.size()) {
                advanced = true;
                break;
            }
            idx[k] = 0;
        }
        if (!advanced) return 0;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series special functions: evaluation, tables, identity verification"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = library default)");

    // ---- eval
    auto* ev = app.add_subcommand("eval", "evaluate one function; JSON on stdout");
    std::string ev_fn;
    ev->add_option("--fn", ev_fn, "function name")->required();
    std::map<std::string, double> ev_params;
    for (const char* key :
         {"z", "z-im", "q", "p", "mu", "nu", "y", "n", "m", "alpha", "beta", "gamma", "x",
          "x-im", "base-q", "base-p", "arg", "arg-im"}) {
        ev->add_option(
            "--" + std::string(key),
            [&ev_params, key = std::string(key)](const CLI::results_t& res) {
                ev_params[key] = std::stod(res[0]);
                return true;
            },
            "parameter " + std::string(key));
    }
    ListArgs ev_lists;
    ev->add_option("--upper", ev_lists.upper_q, "upper q-parameters")->delimiter(',');
    ev->add_option("--lower", ev_lists.lower_q, "lower q-parameters")->delimiter(',');
    ev->add_option("--upper-p", ev_lists.upper_p, "upper p-parameters")->delimiter(',');
    ev->add_option("--lower-p", ev_lists.lower_p, "lower p-parameters")->delimiter(',');
    double ev_rel_tol = 1e-14;
    int ev_max_terms = 10000;
    ev->add_option("--rel-tol", ev_rel_tol, "series tolerance");
    ev->add_option("--max-terms", ev_max_terms, "series term budget");

    // ---- verify
    auto* vf = app.add_subcommand("verify", "run an identity suite; JSON report array");
    std::string vf_suite;
    vf->add_option("--suite", vf_suite, "suite name")->required();
    std::uint64_t vf_seed = 12345;
    vf->add_option("--seed", vf_seed, "random draw seed");
    double vf_tol = -1.0;
    vf->add_option("--tol", vf_tol, "tolerance override");
    int vf_max_n = -1;
    vf->add_option("--max-n", vf_max_n, "depth override");
    bool vf_exact = false;
    vf->add_flag("--exact", vf_exact, "exact-rational backend where supported");

    // ---- table
    auto* tb = app.add_subcommand("table", "tabulate a function over a grid; CSV on stdout");
    std::string tb_fn;
    tb->add_option("--fn", tb_fn, "function name")->required();
    std::map<std::string, std::string> tb_axes;
    for (const char* key :
         {"z", "q", "p", "mu", "nu", "y", "n", "m", "alpha", "beta", "gamma", "x"}) {
        tb->add_option(
            "--" + std::string(key),
            [&tb_axes, key = std::string(key)](const CLI::results_t& res) {
                tb_axes[key] = res[0];
                return true;
            },
            "axis " + std::string(key) + " (value, a..b, or lo:hi:count)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help path
        print_error("usage", e.what());
        return 2;
    }

    if (threads > 0) qsf::par::set_threads(threads);

    try {
        if (ev->parsed()) {
            qsf::SeriesPolicy policy;
            policy.rel_tol = ev_rel_tol;
            policy.max_terms = ev_max_terms;
            const EvalResult r = call_function(ev_fn, ev_params, ev_lists, policy);
            json j;
            j["value"] = value_json(r.value);
            j["terms_used"] = r.terms_used;
            j["converged"] = r.converged;
            j["est_error"] = r.est_error;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (vf->parsed()) {
            qsf::SuiteOptions opts;
            opts.seed = vf_seed;
            if (vf_tol >= 0.0) opts.tol = vf_tol;
            if (vf_max_n > 0) opts.max_n = vf_max_n;
            if (vf_exact) opts.exact = true;
            opts.parallel = (threads != 1);
            const auto reports = qsf::run_suite(vf_suite, opts);
            std::cout << qsf::to_json_string(reports) << "\n";
            for (const auto& r : reports)
                if (!r.passed) return 1;
            return 0;
        }
        if (tb->parsed()) {
            qsf::SeriesPolicy policy;
            return run_table(tb_fn, tb_axes, policy);
        }
    } catch (const qsf::NonConvergence& e) {
        print_error("non-convergence", e.what());
        return 3;
    } catch (const qsf::DomainError& e) {
        print_error("domain", e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error("usage", e.what());
        return 2;
    }
    return 2;
}
