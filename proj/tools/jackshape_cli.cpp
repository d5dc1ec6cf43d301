// jackshape: command-line front end over the library.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jack/diagram.hpp"
#include "jack/ensembles.hpp"
#include "jack/errors.hpp"
#include "jack/io.hpp"
#include "jack/limit_shape.hpp"
#include "jack/paths.hpp"
#include "jack/sampler.hpp"
#include "jack/verify.hpp"

using namespace jack;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Q rational_flag(const std::string& s, const char* what)
{
    try {
        return parse_q(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("--") + what + ": expected p/q, got '" + s + "'");
    }
}

std::vector<Q> rational_list(const std::string& s, const char* what)
{
    if (s.empty()) return {};
    try {
        return parse_q_list(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("--") + what + ": expected a comma-separated list of p/q, got '" + s + "'");
    }
}

std::vector<int> int_list(const std::string& s, const char* what)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            int x = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(x);
        } catch (const std::exception&) {
            throw UsageError(std::string("--") + what + ": expected integers, got '" + s + "'");
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& content)
{
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << content;
}

std::string read_file(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

// JSON request fields fill in flags that were not given.
struct Request {
    json j;
    bool has(const char* k) const { return j.is_object() && j.contains(k); }
    std::string str(const char* k) const { return j.at(k).get<std::string>(); }
    std::string list(const char* k) const
    {
        std::string s;
        for (const auto& x : j.at(k)) {
            if (!s.empty()) s += ',';
            s += x.is_string() ? x.get<std::string>() : x.dump();
        }
        return s;
    }
};

Request load_request(const std::string& path)
{
    Request r;
    if (path.empty()) return r;
    try {
        r.j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid JSON input: ") + e.what());
    }
    return r;
}

void fill(std::string& flag, const CLI::Option* opt, const Request& req, const char* key, bool is_list = false)
{
    if (opt->count() == 0 && req.has(key)) flag = is_list ? req.list(key) : req.str(key);
}

void print_value(bool as_json, const std::string& value)
{
    if (as_json)
        std::cout << json{{"value", value}}.dump() << '\n';
    else
        std::cout << value << '\n';
}

void print_poly(bool as_json, const Poly& p)
{
    if (as_json)
        std::cout << poly_json(p).dump() << '\n';
    else
        std::cout << p.to_string() << '\n';
}

// Character-side vector for the conditional Thoma ensemble.
std::vector<Surd> surds(const std::vector<Q>& v) { return {v.begin(), v.end()}; }

Ensemble make_ensemble(const std::string& kind, const Q& alpha, int d, long k, const std::vector<Q>& v)
{
    if (kind == "plancherel") return Ensemble::plancherel(alpha, d);
    if (kind == "schur-weyl") return Ensemble::schur_weyl_k(alpha, d, k);
    if (kind == "conditional-thoma") {
        std::vector<Q> vv = v.empty() ? std::vector<Q>{1} : v;
        return Ensemble::conditional_thoma(alpha, d, surds(vv));
    }
    throw UsageError("unknown ensemble '" + kind + "' (plancherel, schur-weyl, conditional-thoma)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Jack-deformed random Young diagrams: exact formulas, sampling and limit shapes"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML config mirroring the flags; flags override it");

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    // moments
    auto* mom = app.add_subcommand("moments", "limit moment M_l(g, v)");
    int m_ell = 0;
    std::string m_g = "0", m_v = "1", m_input;
    bool m_planch = false, m_poly = false;
    auto* m_ell_opt = mom->add_option("--ell", m_ell, "moment order")->check(CLI::PositiveNumber);
    auto* m_g_opt = mom->add_option("--g", m_g, "g as p/q");
    auto* m_v_opt = mom->add_option("--v", m_v, "v_1,v_2,... as p/q");
    mom->add_flag("--plancherel", m_planch, "v = (1, 0, 0, ...)");
    mom->add_flag("--poly", m_poly, "print the polynomial in g, v_k instead");
    mom->add_option("--input", m_input, "JSON request {\"g\":..., \"v\":[...], \"ell\":...}");

    // finite-expectation
    auto* fe = app.add_subcommand("finite-expectation", "E[prod B_l(Lambda_(alpha;u))] and relatives");
    std::string f_lengths, f_alpha = "1", f_u = "1", f_v = "1", f_input;
    int f_d = 0;
    bool f_cum = false, f_poly = false;
    auto* f_len_opt = fe->add_option("--lengths", f_lengths, "l_1,...,l_n");
    auto* f_alpha_opt = fe->add_option("--alpha", f_alpha, "alpha as p/q");
    auto* f_u_opt = fe->add_option("--u", f_u, "u as p/q");
    auto* f_v_opt = fe->add_option("--v", f_v, "v_1,v_2,... as p/q");
    fe->add_option("--d", f_d, "fixed size (depoissonized, needs v_1 = 1)")->check(CLI::PositiveNumber);
    fe->add_flag("--cumulant", f_cum, "cumulant of the S observables instead");
    fe->add_flag("--poly", f_poly, "print the polynomial in a, b, v_k");
    fe->add_option("--input", f_input, "JSON request {\"lengths\":[...], \"alpha\":..., \"u\":..., \"v\":[...]}");

    // clt
    auto* clt = app.add_subcommand("clt", "Gaussian fluctuation mean and covariance");
    std::string c_kind = "mean", c_g = "0", c_gp = "0", c_v = "1";
    int c_k = 2, c_l = 2;
    bool c_poly = false;
    clt->add_option("--kind", c_kind, "mean or cov")->check(CLI::IsMember({"mean", "cov"}));
    clt->add_option("--ell,-k", c_k, "l for the mean, k for the covariance")->check(CLI::PositiveNumber);
    clt->add_option("--l", c_l, "second index of the covariance")->check(CLI::PositiveNumber);
    clt->add_option("--g", c_g, "g as p/q");
    clt->add_option("--gp", c_gp, "g' as p/q");
    clt->add_option("--v", c_v, "v_1,v_2,... as p/q");
    clt->add_flag("--poly", c_poly, "print the polynomial");

    // afp
    auto* afp = app.add_subcommand("afp", "fixed-size mean and covariance under the approximate factorization property");
    std::string a_kind = "mean", a_g = "0", a_gp = "0", a_v = "1", a_vp, a_vkl;
    int a_k = 2, a_l = 2;
    bool a_poly = false, a_depois = false;
    afp->add_option("--kind", a_kind, "mean or cov")->check(CLI::IsMember({"mean", "cov"}));
    afp->add_option("--ell,-k", a_k, "l for the mean, k for the covariance")->check(CLI::PositiveNumber);
    afp->add_option("--l", a_l, "second index of the covariance")->check(CLI::PositiveNumber);
    afp->add_option("--g", a_g, "g as p/q");
    afp->add_option("--gp", a_gp, "g' as p/q");
    afp->add_option("--v", a_v, "v_1 = 1, v_2, ... as p/q");
    afp->add_option("--vp", a_vp, "v'_1, v'_2, ... as p/q");
    afp->add_option("--vkl", a_vkl, "entries k:l=p/q separated by commas (k, l >= 2; others 0)");
    afp->add_flag("--poly", a_poly, "print the polynomial");
    afp->add_flag("--depoissonized", a_depois, "covariance of the conditioned Thoma characters");

    // sample
    auto* smp = app.add_subcommand("sample", "draw random diagrams");
    std::string s_ens = "plancherel", s_alpha = "1", s_v, s_method = "auto", s_out, s_csv, s_svg;
    int s_d = 10, s_n = 100;
    long s_k = 1;
    std::uint64_t s_seed = 1;
    double s_xmin = -3, s_xmax = 3;
    smp->add_option("--ensemble", s_ens, "plancherel, schur-weyl or conditional-thoma");
    smp->add_option("--alpha", s_alpha, "alpha as p/q");
    smp->add_option("--d", s_d, "size")->check(CLI::PositiveNumber);
    smp->add_option("--n", s_n, "number of draws")->check(CLI::NonNegativeNumber);
    smp->add_option("--seed", s_seed, "64-bit seed");
    smp->add_option("--k", s_k, "Schur-Weyl: N sqrt(alpha)")->check(CLI::PositiveNumber);
    smp->add_option("--v", s_v, "conditional Thoma: v_1 = 1, v_2, ... as p/q");
    smp->add_option("--method", s_method, "exact, growth or auto")->check(CLI::IsMember({"exact", "growth", "auto"}));
    smp->add_option("--out", s_out, "samples JSONL file");
    smp->add_option("--profile-csv", s_csv, "averaged scaled profile as x,omega CSV");
    smp->add_option("--profile-svg", s_svg, "averaged scaled profile as SVG");
    smp->add_option("--xmin", s_xmin, "profile window");
    smp->add_option("--xmax", s_xmax, "profile window");

    // limit-shape
    auto* lim = app.add_subcommand("limit-shape", "Plancherel staircase limit shape at g != 0");
    std::string l_g = "-1/4", l_csv, l_json, l_svg;
    int l_steps = 12, l_points = 401;
    double l_xmin = 0, l_xmax = 0;
    lim->add_option("--g", l_g, "g as p/q");
    lim->add_option("--steps", l_steps, "corners to compute")->check(CLI::PositiveNumber);
    lim->add_option("--csv", l_csv, "x,omega samples (- for stdout)");
    lim->add_option("--corners", l_json, "corner coordinates as JSON (- for stdout)");
    lim->add_option("--svg", l_svg, "SVG rendering");
    lim->add_option("--points", l_points, "grid points")->check(CLI::Range(2, 1000000));
    lim->add_option("--xmin", l_xmin, "window (default: around the computed corners)");
    lim->add_option("--xmax", l_xmax, "window");

    // bessel-zeros
    auto* bz = app.add_subcommand("bessel-zeros", "zeros in z of J_{-z/|g|}(2/|g|)");
    std::string b_g = "-1/4";
    int b_n = 3;
    double b_tol = 1e-12;
    bool b_edges = false;
    bz->add_option("--g", b_g, "g as p/q");
    bz->add_option("-n,--count", b_n, "number of zeros")->check(CLI::PositiveNumber);
    bz->add_option("--tol", b_tol, "bisection tolerance");
    bz->add_flag("--edges", b_edges, "also print the edge limits");

    // verify
    auto* ver = app.add_subcommand("verify", "run identity checks");
    std::string v_suite = "all";
    int v_d = 0;
    bool v_list = false;
    ver->add_option("--suite", v_suite, "suite name or all");
    ver->add_option("--d", v_d, "size bound override")->check(CLI::PositiveNumber);
    ver->add_flag("--list", v_list, "list suites");

    // render
    auto* ren = app.add_subcommand("render", "SVG of a limit shape and/or a profile CSV");
    std::string r_g, r_csv, r_out = "-", r_title;
    int r_steps = 12;
    double r_xmin = 0, r_xmax = 0;
    ren->add_option("--g", r_g, "draw the limit shape at this g");
    ren->add_option("--steps", r_steps, "limit shape corners")->check(CLI::PositiveNumber);
    ren->add_option("--csv", r_csv, "overlay an x,omega CSV");
    ren->add_option("--out", r_out, "SVG file (- for stdout)");
    ren->add_option("--title", r_title, "plot title");
    ren->add_option("--xmin", r_xmin, "window");
    ren->add_option("--xmax", r_xmax, "window");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*mom) {
            Request req = load_request(m_input);
            fill(m_g, m_g_opt, req, "g");
            fill(m_v, m_v_opt, req, "v", true);
            if (m_ell_opt->count() == 0 && req.has("ell")) m_ell = req.j.at("ell").get<int>();
            if (m_ell < 1) throw UsageError("--ell is required");
            if (m_planch) m_v = "1";
            if (m_poly) {
                print_poly(as_json, m_planch ? limit_moment_poly_normalized(m_ell).substitute(
                                                   [](int id) { return var::is_v(id) && var::v_index(id) >= 2; },
                                                   [](int) { return Poly(0); })
                                             : limit_moment_poly(m_ell));
                return 0;
            }
            print_value(as_json, limit_moment(m_ell, rational_flag(m_g, "g"), rational_list(m_v, "v")).to_string());
            return 0;
        }
        if (*fe) {
            Request req = load_request(f_input);
            fill(f_lengths, f_len_opt, req, "lengths", true);
            fill(f_alpha, f_alpha_opt, req, "alpha");
            fill(f_u, f_u_opt, req, "u");
            fill(f_v, f_v_opt, req, "v", true);
            auto L = int_list(f_lengths, "lengths");
            if (L.empty()) throw UsageError("--lengths is required");
            if (f_poly) {
                if (f_d) throw UsageError("--poly is not available with --d");
                print_poly(as_json, f_cum ? finite_cumulant_S_poly(L) : finite_expectation_poly(L));
                return 0;
            }
            Q alpha = rational_flag(f_alpha, "alpha"), u = rational_flag(f_u, "u");
            auto v = rational_list(f_v, "v");
            Q val;
            if (f_d) {
                if (f_cum) throw UsageError("--cumulant is not available with --d");
                val = depoissonized_expectation(L, f_d, alpha, u, v);
            } else {
                val = f_cum ? finite_cumulant_S(L, alpha, u, v) : finite_expectation(L, alpha, u, v);
            }
            print_value(as_json, to_string(val));
            return 0;
        }
        if (*clt) {
            auto v = rational_list(c_v, "v");
            if (c_kind == "mean") {
                if (c_poly) return print_poly(as_json, clt_mean_poly(c_k)), 0;
                print_value(as_json, clt_mean(c_k, rational_flag(c_g, "g"), rational_flag(c_gp, "gp"), v).to_string());
            } else {
                if (c_poly) return print_poly(as_json, clt_cov_poly(c_k, c_l)), 0;
                print_value(as_json, clt_cov(c_k, c_l, rational_flag(c_g, "g"), v).to_string());
            }
            return 0;
        }
        if (*afp) {
            auto v = rational_list(a_v, "v");
            if (a_kind == "mean") {
                if (a_poly) return print_poly(as_json, afp_mean_poly(a_k)), 0;
                print_value(as_json, to_string(afp_mean(a_k, rational_flag(a_g, "g"), rational_flag(a_gp, "gp"), v,
                                                        rational_list(a_vp, "vp"))));
                return 0;
            }
            if (a_poly) return print_poly(as_json, a_depois ? depoissonized_cov_poly(a_k, a_l) : afp_cov_poly(a_k, a_l)), 0;
            if (a_depois) {
                print_value(as_json, to_string(evaluate_path_poly(depoissonized_cov_poly(a_k, a_l), rational_flag(a_g, "g"),
                                                                  0, v)));
                return 0;
            }
            std::map<std::pair<int, int>, Q> table;
            std::stringstream ss(a_vkl);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto colon = tok.find(':'), eq = tok.find('=');
                if (colon == std::string::npos || eq == std::string::npos || eq < colon)
                    throw UsageError("--vkl: expected k:l=p/q, got '" + tok + "'");
                int k = std::stoi(tok.substr(0, colon)), l = std::stoi(tok.substr(colon + 1, eq - colon - 1));
                Q x = rational_flag(tok.substr(eq + 1), "vkl");
                table[{k, l}] = x;
                table[{l, k}] = x;
            }
            auto vkl = [&](int k, int l) -> Q {
                auto it = table.find({k, l});
                return it == table.end() ? Q(0) : it->second;
            };
            print_value(as_json, to_string(afp_cov(a_k, a_l, rational_flag(a_g, "g"), v, vkl)));
            return 0;
        }
        if (*smp) {
            Q alpha = rational_flag(s_alpha, "alpha");
            SampleRun run;
            bool growth = s_method == "growth" || (s_method == "auto" && s_d > ExactSampler::cap());
            if (growth) {
                if (s_ens != "plancherel") throw UsageError("the growth sampler only covers the plancherel ensemble");
                run = run_growth(alpha, s_d, s_seed, s_n);
            } else {
                run = run_exact(make_ensemble(s_ens, alpha, s_d, s_k, rational_list(s_v, "v")), s_seed, s_n);
            }
            if (!s_out.empty()) write_file(s_out, samples_jsonl(run));
            std::string csv;
            if (!s_csv.empty() || !s_svg.empty()) csv = profile_csv(run, s_xmin, s_xmax, 241);
            if (!s_csv.empty()) write_file(s_csv, csv);
            if (!s_svg.empty()) {
                SvgSeries prof = csv_series(csv);
                prof.color = "steelblue";
                write_file(s_svg, render_svg({prof}, s_xmin, s_xmax, 0, std::max(std::abs(s_xmin), std::abs(s_xmax)),
                                             run.ensemble + " alpha=" + to_string(alpha) + " d=" + std::to_string(s_d)));
            }
            std::vector<NamedObservable> obs{
                scaled_observable(Observable::fundamental, 2, alpha, s_d, "S2"),
                scaled_observable(Observable::boolean, 3, alpha, s_d, "B3"),
                scaled_observable(Observable::boolean, 4, alpha, s_d, "B4"),
                row_observable(0, s_d, "lambda1/d"),
                NamedObservable{"length/d", [d = s_d](const Partition& p) { return double(p.length()) / d; }},
            };
            auto st = empirical_stats(run, obs);
            if (as_json) {
                json j = {{"ensemble", run.ensemble}, {"alpha", to_string(alpha)}, {"d", s_d}, {"seed", s_seed},
                          {"count", s_n}, {"method", run.method}, {"stats", json::array()}};
                for (const auto& s : st)
                    j["stats"].push_back({{"name", s.name}, {"mean", std::stod(fmt_double(s.mean))},
                                          {"variance", std::stod(fmt_double(s.variance))}});
                std::cout << j.dump() << '\n';
            } else {
                std::printf("%s alpha=%s d=%d n=%d seed=%llu method=%s\n", run.ensemble.c_str(), to_string(alpha).c_str(),
                            s_d, s_n, static_cast<unsigned long long>(s_seed), run.method.c_str());
                std::printf("%-10s %-18s %-18s\n", "observable", "mean", "variance");
                for (const auto& s : st)
                    std::printf("%-10s %-18s %-18s\n", s.name.c_str(), fmt_double(s.mean).c_str(), fmt_double(s.variance).c_str());
            }
            return 0;
        }
        if (*lim) {
            Q g = rational_flag(l_g, "g");
            if (g == 0) throw UsageError("--g must be nonzero");
            auto s = plancherel_limit_shape(g, l_steps);
            double lo = l_xmin, hi = l_xmax;
            if (!(hi > lo)) {
                lo = std::min(s.minima.front(), s.maxima.front()) - 0.5;
                hi = std::max(s.minima.back(), s.maxima.back()) + 0.5;
            }
            if (!l_csv.empty()) write_file(l_csv, staircase_csv(s, lo, hi, l_points));
            if (!l_json.empty()) write_file(l_json, staircase_json(s).dump(2) + "\n");
            if (!l_svg.empty()) {
                auto ser = staircase_series(s, lo, hi);
                write_file(l_svg, render_svg({ser}, lo, hi, 0, std::max(std::abs(lo), std::abs(hi)), "g=" + to_string(g)));
            }
            if (l_csv.empty() && l_json.empty() && l_svg.empty()) {
                if (as_json) {
                    std::cout << staircase_json(s).dump() << '\n';
                } else {
                    std::printf("%-4s %-16s %-16s\n", "i", "minimum", "maximum");
                    for (std::size_t i = 0; i < s.minima.size(); ++i)
                        std::printf("%-4zu %-16s %-16s\n", i + 1, fmt_double(s.minima[i]).c_str(),
                                    fmt_double(s.maxima[i]).c_str());
                }
            }
            return 0;
        }
        if (*bz) {
            Q g = rational_flag(b_g, "g");
            auto z = bessel_order_zeros(g, b_n, b_tol);
            std::vector<double> e;
            if (b_edges) e = edge_limits(g, b_n, b_tol);
            if (as_json) {
                json j = {{"g", to_string(g)}, {"zeros", json::array()}};
                for (double x : z.zeros) j["zeros"].push_back(std::stod(fmt_double(x)));
                if (b_edges) {
                    j["edges"] = json::array();
                    for (double x : e) j["edges"].push_back(std::stod(fmt_double(x)));
                }
                std::cout << j.dump() << '\n';
            } else {
                for (std::size_t i = 0; i < z.zeros.size(); ++i) {
                    std::printf("l%zu %.9f", i + 1, z.zeros[i]);
                    if (b_edges) std::printf("  edge %.9f", e[i]);
                    std::printf("\n");
                }
            }
            return 0;
        }
        if (*ver) {
            if (v_list) {
                for (const auto& s : verify_suites())
                    std::printf("%-24s %-15s %s\n", s.name.c_str(), s.module.c_str(), s.anchor.c_str());
                return 0;
            }
            std::vector<std::string> names;
            if (v_suite == "all") {
                for (const auto& s : verify_suites()) names.push_back(s.name);
            } else {
                std::stringstream ss(v_suite);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!is_suite(tok)) throw UsageError("unknown suite '" + tok + "' (see verify --list)");
                    else names.push_back(tok);
            }
            VerifyOptions opt;
            opt.d = v_d;
            json out = json::array();
            std::string first_fail;
            for (const auto& n : names) {
                SuiteResult r = run_suite(n, opt);
                if (!r.pass && first_fail.empty()) first_fail = r.name + ": " + r.anchor + " (" + r.detail + ")";
                if (as_json)
                    out.push_back({{"suite", r.name}, {"anchor", r.anchor}, {"pass", r.pass}, {"detail", r.detail}});
                else
                    std::printf("%s  %-24s %s  [%s]\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.anchor.c_str(),
                                r.detail.c_str());
            }
            if (as_json) std::cout << out.dump(2) << '\n';
            if (!first_fail.empty()) {
                std::fprintf(stderr, "first failure: %s\n", first_fail.c_str());
                return 1;
            }
            return 0;
        }
        if (*ren) {
            std::vector<SvgSeries> series;
            double lo = r_xmin, hi = r_xmax;
            double dlo = 1e300, dhi = -1e300;
            if (!r_g.empty()) {
                Q g = rational_flag(r_g, "g");
                if (g == 0) throw UsageError("--g must be nonzero");
                auto s = plancherel_limit_shape(g, r_steps);
                dlo = std::min(s.minima.front(), s.maxima.front()) - 0.5;
                dhi = std::max(s.minima.back(), s.maxima.back()) + 0.5;
                double a = hi > lo ? lo : dlo, b = hi > lo ? hi : dhi;
                auto ser = staircase_series(s, a, b);
                ser.color = "crimson";
                series.push_back(ser);
            }
            if (!r_csv.empty()) {
                auto ser = csv_series(read_file(r_csv));
                if (ser.points.empty()) throw UsageError("no x,omega rows in " + r_csv);
                dlo = std::min(dlo, ser.points.front().first);
                dhi = std::max(dhi, ser.points.back().first);
                ser.color = "steelblue";
                series.push_back(ser);
            }
            if (series.empty()) throw UsageError("render needs --g and/or --csv");
            if (!(hi > lo)) {
                lo = dlo;
                hi = dhi;
            }
            write_file(r_out, render_svg(series, lo, hi, 0, std::max(std::abs(lo), std::abs(hi)), r_title));
            return 0;
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n\n%s", e.what(), app.help().c_str());
        return 2;
    } catch (const parameter_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
