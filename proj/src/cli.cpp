#include "tcheeger/cli.hpp"

#include "tcheeger/geometry.hpp"
#include "tcheeger/math_core.hpp"
#include "tcheeger/optimize.hpp"
#include "tcheeger/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

namespace tcheeger::cli {

namespace {

using json = nlohmann::ordered_json;

// All floating-point output uses 17 significant digits so values round-trip
// bit-exactly through the text formats.
std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

// Collected option values; presence flags are queried from CLI11 after the
// parse where the distinction matters.
struct Options {
    int n = 2;
    double q = 1.5;
    double q_min = 1.0;
    double q_max = 0.0;  // 0: default to just below the critical exponent
    double x = 0.0;
    int steps = 0;  // 0: per-command default
    double tol_x = kDefaultTolX;
    double tol_q = kDefaultTolQ;
    double tie_tol = kDefaultTieTol;
    std::uint64_t seed = 20240817;
    std::string out;
    std::string format = "csv";
    std::string claim;
    std::string config;
};

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Loads the key=value config file named by --config (or $TC_CONFIG when the
// flag is absent) into `o`.  Keys use the long option names of the active
// subcommand; explicitly passed flags always win, and keys that belong to
// other subcommands are ignored so one file can serve the whole tool.
// Returns the applied keys through `used`; nonzero on error.
int apply_config(CLI::App* sub, Options& o, std::set<std::string>& used,
                 std::ostream& err) {
    std::string path = o.config;
    bool from_env = false;
    if (path.empty()) {
        if (const char* env = std::getenv("TC_CONFIG"); env && *env) {
            path = env;
            from_env = true;
        }
    }
    if (path.empty()) return kOk;
    std::ifstream is(path);
    if (!is) {
        if (from_env) return kOk;  // optional fallback: missing file skipped
        err << "error: cannot open config file '" << path << "'\n";
        return kUsageError;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        line = trimmed(line);
        if (line.empty() || line[0] == '#' || line[0] == ';' ||
            line[0] == '[')  // tolerate comments and INI section headers
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            err << "error: " << path << ':' << lineno
                << ": expected key=value\n";
            return kUsageError;
        }
        const std::string key = trimmed(line.substr(0, eq));
        std::string val = trimmed(line.substr(eq + 1));
        if (val.size() >= 2 && (val.front() == '"' || val.front() == '\'') &&
            val.back() == val.front())
            val = val.substr(1, val.size() - 2);
        if (sub->get_option_no_throw("--" + key) == nullptr)
            continue;  // not an option of this subcommand
        if (sub->count("--" + key) > 0) continue;  // flag overrides file
        try {
            if (key == "n")
                o.n = std::stoi(val);
            else if (key == "q")
                o.q = std::stod(val);
            else if (key == "q-min")
                o.q_min = std::stod(val);
            else if (key == "q-max")
                o.q_max = std::stod(val);
            else if (key == "x")
                o.x = std::stod(val);
            else if (key == "steps")
                o.steps = std::stoi(val);
            else if (key == "tol-x")
                o.tol_x = std::stod(val);
            else if (key == "tol-q")
                o.tol_q = std::stod(val);
            else if (key == "tie-tol")
                o.tie_tol = std::stod(val);
            else if (key == "seed")
                o.seed = std::stoull(val);
            else if (key == "out")
                o.out = val;
            else if (key == "format")
                o.format = val;
            else if (key == "claim")
                o.claim = val;
            else
                continue;  // --config itself, or future options
        } catch (const std::exception&) {
            err << "error: " << path << ':' << lineno << ": bad value for '"
                << key << "': " << val << '\n';
            return kUsageError;
        }
        used.insert(key);
    }
    if (used.count("format") > 0 && o.format != "csv" && o.format != "json") {
        err << "error: " << path << ": format must be csv or json\n";
        return kUsageError;
    }
    return kOk;
}

template <typename Fn>
int with_output(const std::string& path, std::ostream& fallback,
                std::ostream& err, Fn writer) {
    if (path.empty()) {
        writer(fallback);
        return kOk;
    }
    std::ofstream ofs(path, std::ios::binary);
    if (!ofs) {
        err << "error: cannot open output file '" << path << "'\n";
        return kIoError;
    }
    writer(ofs);
    ofs.flush();
    if (!ofs) {
        err << "error: failed while writing '" << path << "'\n";
        return kIoError;
    }
    return kOk;
}

std::vector<double> linspace(double lo, double hi, int m) {
    std::vector<double> v;
    v.reserve(m);
    for (int i = 0; i < m; ++i)
        v.push_back(lo + (hi - lo) * static_cast<double>(i) /
                             (m > 1 ? m - 1 : 1));
    return v;
}

// Highest exponent used when a sweep runs up to the critical value; single
// --q requests stay strict instead (Exponent throws, exit code 2).
double sweep_q_cap(Dim n) { return n.critical_exponent() - 1e-9; }

const char* kind_name(StationaryKind k) {
    switch (k) {
        case StationaryKind::minimum: return "minimum";
        case StationaryKind::maximum: return "maximum";
        default: return "degenerate";
    }
}

// --- eval ------------------------------------------------------------------

struct EvalRow {
    int n;
    double q, x, f, dfdx, A, c;
};

EvalRow eval_row(Dim n, Exponent q, double x) {
    return EvalRow{n.n(),         q.q(), x, f(n, q, x), dfdx(n, q, x),
                   A(n, q, x), c(n, q, x)};
}

int cmd_eval(const Options& o, bool q_sweep, bool steps_given, bool x_given,
             std::ostream& out, std::ostream& err) {
    const Dim n(o.n);
    std::vector<EvalRow> rows;
    if (!q_sweep && steps_given && x_given) {
        err << "error: eval takes either --x (single point) or --steps "
               "(sweep over [0, X_max]), not both\n";
        return kUsageError;
    }
    if (q_sweep) {
        const int m = o.steps > 0 ? o.steps : 100;
        double hi = o.q_max > 0.0 ? o.q_max : sweep_q_cap(n);
        hi = std::min(hi, sweep_q_cap(n));  // sweeps clamp at the window edge
        for (double q : linspace(o.q_min, hi, m))
            rows.push_back(eval_row(n, Exponent(q, n), o.x));
    } else if (steps_given) {
        const int m = o.steps > 0 ? o.steps : 100;
        const Exponent q(o.q, n);
        for (double x : linspace(0.0, bracket_xmax(n, q), m))
            rows.push_back(eval_row(n, q, x));
    } else {
        rows.push_back(eval_row(n, Exponent(o.q, n), o.x));
    }
    return with_output(o.out, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json arr = json::array();
            for (const EvalRow& r : rows)
                arr.push_back({{"n", r.n},
                               {"q", r.q},
                               {"x", r.x},
                               {"f", r.f},
                               {"dfdx", r.dfdx},
                               {"A", r.A},
                               {"c", r.c}});
            os << arr.dump(2) << '\n';
        } else {
            os << "n,q,x,f,dfdx,A,c\n";
            for (const EvalRow& r : rows)
                os << r.n << ',' << g17(r.q) << ',' << g17(r.x) << ','
                   << g17(r.f) << ',' << g17(r.dfdx) << ',' << g17(r.A) << ','
                   << g17(r.c) << '\n';
        }
    });
}

// --- minimize --------------------------------------------------------------

int cmd_minimize(const Options& o, std::ostream& out, std::ostream& err) {
    const Dim n(o.n);
    const Exponent q(o.q, n);
    const MinimizationResult res = global_min(n, q, o.tol_x, o.tie_tol);
    const BallPairConfig cfg = x_to_radii(n, res.x_star);
    const double J = scale_invariant_optimum(n, q, res.f_star);
    return with_output(o.out, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json j{{"n", o.n},          {"q", o.q},
                   {"x_star", res.x_star}, {"f_star", res.f_star},
                   {"r1", cfg.r1},      {"r2", cfg.r2},
                   {"J", J}};
            j["tie"] = res.tie ? json(*res.tie) : json(nullptr);
            json pts = json::array();
            for (const StationaryPoint& p : res.stationary)
                pts.push_back({{"x", p.x},
                               {"f", p.f_value},
                               {"kind", kind_name(p.kind)}});
            j["stationary"] = pts;
            j["tol_x"] = o.tol_x;
            j["tie_tol"] = o.tie_tol;
            os << j.dump(2) << '\n';
        } else {
            os << "n,q,x_star,f_star,r1,r2,J,tie\n";
            os << o.n << ',' << g17(o.q) << ',' << g17(res.x_star) << ','
               << g17(res.f_star) << ',' << g17(cfg.r1) << ',' << g17(cfg.r2)
               << ',' << g17(J) << ','
               << (res.tie ? g17(*res.tie) : std::string()) << '\n';
        }
    });
}

// --- threshold -------------------------------------------------------------

int cmd_threshold(const Options& o, std::ostream& out, std::ostream& err) {
    const Dim n(o.n);
    const ThresholdResult th = threshold(n, o.tol_q, o.tie_tol);
    return with_output(o.out, out, err, [&](std::ostream& os) {
        if (o.format == "json") {
            json j{{"n", o.n},
                   {"q_tilde", th.q_tilde},
                   {"q_lo", th.q_lo},
                   {"q_hi", th.q_hi},
                   {"iterations", th.iterations},
                   {"minimizers", th.minimizers},
                   {"tol_q", o.tol_q}};
            os << j.dump(2) << '\n';
        } else {
            os << "n,q_tilde,q_lo,q_hi,iterations,x_tilde\n";
            os << o.n << ',' << g17(th.q_tilde) << ',' << g17(th.q_lo) << ','
               << g17(th.q_hi) << ',' << th.iterations << ','
               << (th.minimizers.size() > 1 ? g17(th.minimizers[1])
                                            : std::string())
               << '\n';
        }
    });
}

// --- figures ---------------------------------------------------------------

// Profile-curve figure: rows (n, q, x, f) over [0, X_max(q)] per exponent.
std::string profile_figure(Dim n, const std::vector<double>& qs, int steps) {
    std::string s = "n,q,x,f\n";
    for (double qv : qs) {
        const Exponent q(qv, n);
        const double X = bracket_xmax(n, q);
        for (int j = 0; j < steps; ++j) {
            const double x = X * j / (steps - 1);
            s += std::to_string(n.n()) + ',' + g17(qv) + ',' + g17(x) + ',' +
                 g17(f(n, q, x)) + '\n';
        }
    }
    return s;
}

// Minimiser-curve figure: rows (n, q, xbar, fbar) over a q-grid that is
// refined near the symmetry-breaking threshold so the jump (n >= 3) or the
// continuous onset (n = 2) is resolved to steps <= 3e-4 in q.
std::string minimizer_figure(Dim n, double q_tilde, int base_steps) {
    std::vector<double> qs =
        linspace(1.0, n.critical_exponent() - 1e-3, base_steps);
    for (double q = q_tilde - 0.012; q <= q_tilde + 0.012 + 1e-12;
         q += 2.5e-4) {
        if (q > 1.0 && q < n.critical_exponent() - 1e-9) qs.push_back(q);
    }
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end(),
                         [](double a, double b) { return b - a < 1e-12; }),
             qs.end());
    std::string s = "n,q,xbar,fbar\n";
    for (double qv : qs) {
        const MinimizationResult r = global_min(n, Exponent(qv, n));
        s += std::to_string(n.n()) + ',' + g17(qv) + ',' + g17(r.x_star) +
             ',' + g17(r.f_star) + '\n';
    }
    return s;
}

// Exponents showcasing the four phases of the n >= 3 family, located at
// runtime from the fold point q_sn (birth of the interior pair) and the
// threshold q~: increasing-only, metastable interior branch, interior branch
// global, origin unstable.
std::vector<double> regime_exponents(Dim n, double q_tilde) {
    const double invn = 1.0 / n.n();
    const double qbar = 1.0 + invn + invn * invn;
    double lo = 1.0 + invn, hi = qbar;
    for (int it = 0; it < 60 && hi - lo > 1e-11; ++it) {
        const double mid = 0.5 * (lo + hi);
        (stationary_points(n, Exponent(mid, n)).size() >= 2 ? hi : lo) = mid;
    }
    const double q_sn = 0.5 * (lo + hi);
    return {1.0 + invn, q_sn + 0.25 * (q_tilde - q_sn),
            q_tilde + 0.5 * (qbar - q_tilde),
            qbar + 0.5 * (n.critical_exponent() - qbar)};
}

int cmd_figures(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.format != "csv") {
        err << "error: figures emits CSV files only\n";
        return kUsageError;
    }
    if (o.n < 3) {
        err << "error: figures needs --n >= 3 for the fig2/fig4 family "
               "(fig1/fig3 are always n=2)\n";
        return kUsageError;
    }
    const Dim n2(2), nn(o.n);
    const int profile_steps = o.steps > 1 ? o.steps : 2001;
    const int curve_steps = o.steps > 1 ? o.steps : 400;

    const double qt2 = threshold(n2, o.tol_q, o.tie_tol).q_tilde;
    const double qtn = threshold(nn, o.tol_q, o.tie_tol).q_tilde;

    const std::map<std::string, std::string> files = {
        {"fig1.csv", profile_figure(n2, {1.5, 1.75, 1.8, 1.9}, profile_steps)},
        {"fig2.csv", profile_figure(nn, regime_exponents(nn, qtn),
                                    profile_steps)},
        {"fig3.csv", minimizer_figure(n2, qt2, curve_steps)},
        {"fig4.csv", minimizer_figure(nn, qtn, curve_steps)},
    };
    const std::string dir = o.out.empty() ? "." : o.out;
    for (const auto& [name, content] : files) {
        const std::string path = dir + "/" + name;
        std::ofstream ofs(path, std::ios::binary);
        if (!ofs) {
            err << "error: cannot open output file '" << path << "'\n";
            return kIoError;
        }
        ofs << content;
        ofs.flush();
        if (!ofs) {
            err << "error: failed while writing '" << path << "'\n";
            return kIoError;
        }
        out << path << '\n';
    }
    return kOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    ClaimParams params;
    params.seed = o.seed;
    std::vector<ClaimReport> reports;
    if (!o.claim.empty())
        reports.push_back(check_claim(o.claim, params));  // may throw
    else
        reports = check_all(params);

    bool all_passed = true;
    for (const ClaimReport& r : reports) all_passed = all_passed && r.passed;

    const int rc = with_output(o.out, out, err, [&](std::ostream& os) {
        if (o.format == "csv") {
            os << "claim_id,passed,params,details\n";
            for (const ClaimReport& r : reports)
                os << csv_quote(r.claim_id) << ','
                   << (r.passed ? "true" : "false") << ','
                   << csv_quote(r.params) << ',' << csv_quote(r.details)
                   << '\n';
        } else {
            json arr = json::array();
            for (const ClaimReport& r : reports)
                arr.push_back({{"claim_id", r.claim_id},
                               {"params", r.params},
                               {"passed", r.passed},
                               {"details", r.details},
                               {"counterexamples", r.counterexamples}});
            os << arr.dump(2) << '\n';
        }
    });
    if (rc != kOk) return rc;
    return all_passed ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "tcheeger: constrained (twisted) Cheeger optimisation for two-ball "
        "configurations"};
    app.require_subcommand(1);
    Options o;

    const auto add_common = [&](CLI::App* sub, bool with_q) {
        sub->add_option("--n", o.n, "ambient dimension (>= 2)")
            ->check(CLI::Range(2, 100000));
        if (with_q)
            sub->add_option("--q", o.q,
                            "twisting exponent, 1 <= q < n/(n-1)");
        sub->add_option("--out", o.out, "output file (default: stdout)");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--config", o.config,
                        "key=value config file (also via $TC_CONFIG)");
    };

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate the profile f and its derivatives");
    add_common(eval, true);
    eval->add_option("--x", o.x, "log-radius coordinate (default 0)");
    eval->add_option("--q-min", o.q_min, "sweep: lowest exponent");
    eval->add_option("--q-max", o.q_max,
                     "sweep: highest exponent (clamped below n/(n-1))");
    eval->add_option("--steps", o.steps, "sweep sample count")
        ->check(CLI::Range(2, 10000000));

    CLI::App* minimize = app.add_subcommand(
        "minimize", "global minimum of f(., q) over x >= 0");
    add_common(minimize, true);
    minimize->add_option("--tol-x", o.tol_x, "stationary-point refinement tolerance");
    minimize->add_option("--tie-tol", o.tie_tol,
                         "tie tolerance against the symmetric value");

    CLI::App* thresh = app.add_subcommand(
        "threshold", "symmetry-breaking threshold q~(n)");
    add_common(thresh, false);
    thresh->add_option("--tol-q", o.tol_q, "bisection tolerance in q");
    thresh->add_option("--tie-tol", o.tie_tol,
                       "tie tolerance for the phase predicate");

    CLI::App* figures = app.add_subcommand(
        "figures", "write fig1.csv..fig4.csv (profile and minimiser curves)");
    add_common(figures, false);
    figures->get_option("--n")->description(
        "dimension for fig2/fig4 (>= 3; fig1/fig3 are n=2)");
    figures->get_option("--out")->description(
        "output directory (default: current directory)");
    figures->add_option("--steps", o.steps,
                        "samples per curve (default 2001 profile / 400 curve)")
        ->check(CLI::Range(2, 10000000));
    figures->add_option("--tol-q", o.tol_q, "threshold tolerance");

    CLI::App* verify = app.add_subcommand(
        "verify", "re-check the registered numerical claims");
    add_common(verify, false);
    verify->add_option("--claim", o.claim,
                       "check a single claim id (default: all)");
    verify->add_option("--seed", o.seed, "seed for randomised sweeps");
    verify->get_option("--format")->description("output format (default json)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tcheeger");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    CLI::App* active = nullptr;
    for (CLI::App* sub : {eval, minimize, thresh, figures, verify})
        if (sub->parsed()) active = sub;
    std::set<std::string> cfg;
    if (active != nullptr) {
        const int rc = apply_config(active, o, cfg, err);
        if (rc != kOk) return rc;
    }

    const auto given = [&](const char* flag, const char* key) {
        return active->count(flag) > 0 || cfg.count(key) > 0;
    };
    try {
        if (*eval)
            return cmd_eval(o,
                            given("--q-min", "q-min") || given("--q-max",
                                                              "q-max"),
                            given("--steps", "steps"), given("--x", "x"), out,
                            err);
        if (*minimize) return cmd_minimize(o, out, err);
        if (*thresh) return cmd_threshold(o, out, err);
        if (*figures) {
            if (!given("--n", "n")) o.n = 3;
            return cmd_figures(o, out, err);
        }
        if (*verify) {
            if (!given("--format", "format")) o.format = "json";
            return cmd_verify(o, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const solver_error& e) {
        err << "solver error: " << e.what() << '\n';
        return kSolverError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace tcheeger::cli
