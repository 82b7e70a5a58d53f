#include "qh/cli.hpp"

#include "qh/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace qh {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    long n = 1;
    std::string n_range = "1..6";
    long ell = 0;
    std::optional<long> precision;
    std::optional<long> horizon;
    std::string source = "formula";
    std::optional<unsigned long> prime;
    std::string format = "text";
    std::string output_path;
    std::optional<size_t> max_steps;
    std::string suite = "all";
    bool trace = false;
    bool profile = false;
};

struct Outcome {
    std::string text;
    int code = exit_ok;
};

long env_precision() {
    const char* v = std::getenv("HM_DEFAULT_PRECISION");
    if (!v || !*v) return 32;
    char* end = nullptr;
    long p = std::strtol(v, &end, 10);
    if (*end || p < 1) throw UsageError("HM_DEFAULT_PRECISION must be a positive integer");
    return p;
}

void require_n(long n) {
    if (n < 1) throw UsageError("--n must be >= 1");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string describe(const CheckResult& c) {
    std::ostringstream os;
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.counterexample)
        os << " (j=" << c.counterexample->j << ": expected " << c.counterexample->expected << ", got "
           << c.counterexample->got << ")";
    else if (!c.detail.empty())
        os << " (" << c.detail << ")";
    return os.str();
}

std::string term_text(const HFractionTerm& t) {
    return "k=" + std::to_string(t.k) + " a=" + to_string(t.a) + " D=" + t.D.to_string();
}

Outcome cmd_series(const RunConfig& c) {
    require_n(c.n);
    if (c.ell < 0) throw UsageError("--ell must be >= 0");
    long N = c.precision ? *c.precision : env_precision();
    if (N < 1) throw UsageError("--prec must be >= 1");
    TruncatedSeries f = series_of_model(metallic_model(c.n), N + c.ell).tail(c.ell);
    if (c.format == "json") return {dump(series_json(c.n, c.ell, f))};
    if (c.format == "csv") {
        std::string s = "n,ell,i,coeff\n";
        for (long i = 0; i < f.precision(); ++i)
            s += std::to_string(c.n) + "," + std::to_string(c.ell) + "," + std::to_string(i) + "," +
                 csv_cell(to_string(f.coeff(i))) + "\n";
        return {s};
    }
    return {f.to_string() + "\n"};
}

Outcome cmd_hfrac(const RunConfig& c) {
    require_n(c.n);
    if (c.ell < 0 || c.ell > c.n + 1) throw UsageError("--ell must lie in 0..n+1 for the H-fraction");
    PeriodicHFraction h = metallic_hfraction(c.n, c.ell);
    std::optional<QuadraticExpansion> run;
    if (c.trace) {
        size_t steps = c.max_steps ? *c.max_steps : default_max_steps(c.n);
        run = hfraction_of_quadratic(shifted_metallic_model(c.n, c.ell).reduced(Domain::rationals()), steps);
    }
    std::optional<SupportProfile> prof;
    if (c.profile) prof = support_profile(h, h.offset() + h.period());

    if (c.format == "json") {
        Json j{{"n", c.n}, {"ell", c.ell}, {"fraction", hfraction_json(h)}};
        if (run) j["trace"] = trace_json(run->trace);
        if (prof) j["profile"] = profile_json(*prof);
        return {dump(j)};
    }
    if (c.format == "csv") {
        std::string s = "n,ell,part,index,k,a,v,D\n";
        auto row = [&](const std::string& part, size_t i, const HFractionTerm& t) {
            s += std::to_string(c.n) + "," + std::to_string(c.ell) + "," + part + "," + std::to_string(i) + "," +
                 std::to_string(t.k) + "," + csv_cell(to_string(t.a)) + "," + csv_cell(to_string(t.v)) + ",\"" +
                 t.D.to_string() + "\"\n";
        };
        row("head", 0, h.head);
        for (size_t i = 0; i < h.preamble.size(); ++i) row("preamble", i, h.preamble[i]);
        for (size_t i = 0; i < h.cycle.size(); ++i) row("cycle", i, h.cycle[i]);
        return {s};
    }
    std::ostringstream os;
    os << "Phi_" << c.n << " shift " << c.ell << ": offset " << h.offset() << ", period " << h.period() << "\n";
    os << "head " << term_text(h.head) << "\n";
    for (size_t i = 0; i < h.preamble.size(); ++i) os << "preamble[" << i << "] " << term_text(h.preamble[i]) << "\n";
    for (size_t i = 0; i < h.cycle.size(); ++i) os << "cycle[" << i << "] " << term_text(h.cycle[i]) << "\n";
    if (run)
        for (size_t j = 0; j < run->trace.size(); ++j) {
            const auto& t = run->trace[j];
            os << "step " << j << ": A=" << t.model.A.to_string() << "; B=" << t.model.B.to_string()
               << "; C=" << t.model.C.to_string() << " -> k=" << t.k << " a=" << to_string(t.a)
               << " D=" << t.D.to_string() << "\n";
        }
    if (prof) {
        os << "s:";
        for (long v : prof->s) os << ' ' << v;
        os << "\neps:";
        for (long v : prof->eps) os << ' ' << v;
        os << "\n";
    }
    return {os.str()};
}

Outcome cmd_hankel(const RunConfig& c) {
    require_n(c.n);
    if (c.ell < 0) throw UsageError("--ell must be >= 0");
    long horizon = c.horizon ? *c.horizon : 2 * metallic_period(c.n);
    if (horizon < 0) throw UsageError("--horizon must be >= 0");
    HankelSource src = parse_source(c.source);
    if (src != HankelSource::brute_force && c.ell > c.n + 1)
        throw UsageError("formula source needs --ell <= n+1; use --source brute");
    HankelReport r = hankel_sequence(c.n, c.ell, horizon, src);
    int code = r.all_pass() ? exit_ok : exit_check_failed;
    if (c.format == "json") return {dump(hankel_report_json(r)), code};
    if (c.format == "csv") return {hankel_report_csv(r), code};
    std::ostringstream os;
    os << "Phi_" << c.n << " shift " << c.ell << ", " << horizon << " values (" << to_string(src) << ")\n";
    for (size_t j = 0; j < r.values.size(); ++j) os << j << ' ' << r.values[j].get_str() << "\n";
    for (const auto& ch : r.checks) os << describe(ch) << "\n";
    return {os.str(), code};
}

Outcome cmd_verify(const RunConfig& c) {
    if (!is_suite(c.suite)) throw UsageError("unknown suite '" + c.suite + "'");
    auto [lo, hi] = parse_n_range(c.n_range);
    auto checks = run_suites(c.suite, lo, hi);
    bool ok = true;
    for (const auto& ch : checks) ok = ok && ch.pass;
    int code = ok ? exit_ok : exit_check_failed;
    if (c.format == "json") return {dump(verify_report_json(c.suite, lo, hi, checks)), code};
    if (c.format == "csv") return {verify_report_csv(checks), code};
    std::ostringstream os;
    size_t failed = 0;
    for (const auto& ch : checks) {
        os << describe(ch) << "\n";
        failed += !ch.pass;
    }
    os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return {os.str(), code};
}

Outcome cmd_modp(const RunConfig& c) {
    require_n(c.n);
    if (c.ell < 0) throw UsageError("--ell must be >= 0");
    if (!c.prime) throw UsageError("modp requires --p");
    if (!is_prime(*c.prime)) throw UsageError("--p must be prime, got " + std::to_string(*c.prime));
    size_t steps = c.max_steps ? *c.max_steps : default_max_steps(c.n);
    ModpReport r = modp_analysis(c.n, c.ell, *c.prime, steps);
    if (c.format == "json") return {dump(modp_report_json(r))};
    if (c.format == "csv") {
        std::ostringstream os;
        os << "n,ell,p,status,hfraction_preperiod,hfraction_period,hankel_preperiod,hankel_period\n";
        os << r.n << ',' << r.ell << ',' << r.p << ',' << to_string(r.status) << ',' << r.hfraction_preperiod << ','
           << r.hfraction_period << ',' << r.hankel_preperiod << ',' << r.hankel_period << "\n";
        return {os.str()};
    }
    std::ostringstream os;
    os << "Phi_" << r.n << " shift " << r.ell << " mod " << r.p << ": " << to_string(r.status);
    if (r.status == CycleStatus::no_cycle)
        os << " (inconclusive after " << r.max_steps << " steps)\n";
    else
        os << "\nH-fraction (preperiod, period) = (" << r.hfraction_preperiod << ", " << r.hfraction_period
           << ")\nHankel (preperiod, period) = (" << r.hankel_preperiod << ", " << r.hankel_period << ")\n";
    return {os.str()};
}

Outcome cmd_scan(const RunConfig& c) {
    require_n(c.n);
    if (c.ell < 0) throw UsageError("--ell must be >= 0");
    long horizon = c.horizon ? *c.horizon : 4 * c.n * (c.n + 1);
    if (horizon < 1) throw UsageError("--horizon must be >= 1");
    ScanReport r = conjecture_scan(c.n, c.ell, horizon);
    if (c.format == "json") return {dump(scan_report_json(r))};
    if (c.format == "csv") {
        HankelReport h{r.n, r.ell, r.horizon, HankelSource::brute_force, r.values, {}};
        return {hankel_report_csv(h)};
    }
    std::ostringstream os;
    os << "exploratory scan, Phi_" << r.n << " shift " << r.ell << ", " << r.horizon << " values\n"
       << "range [" << r.value_min.get_str() << ", " << r.value_max.get_str() << "], max |Delta| = "
       << r.max_abs.get_str() << "\n"
       << "within [-2,2]: " << (r.within_two ? "yes" : "no") << "\n"
       << "(anti)periodic on window: " << (r.antiperiodic_on_window ? "yes" : "no") << " (" << r.compared
       << " pairs)\n";
    return {os.str()};
}

}  // namespace

std::pair<long, long> parse_n_range(const std::string& s) {
    auto num = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad n range '" + s + "'");
        return std::stol(t);
    };
    auto dots = s.find("..");
    long lo, hi;
    if (dots == std::string::npos) {
        lo = hi = num(s);
    } else {
        lo = num(s.substr(0, dots));
        hi = num(s.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) throw UsageError("bad n range '" + s + "'");
    return {lo, hi};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-metallic numbers, H-fractions and Hankel determinants"};
    app.require_subcommand(1);
    RunConfig c;
    const std::vector<std::string> formats{"text", "json", "csv"};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember(formats));
        sub->add_option("--out", c.output_path, "write output to this file");
    };
    auto with_n = [&](CLI::App* sub) { sub->add_option("--n", c.n, "metallic index n >= 1"); };
    auto with_ell = [&](CLI::App* sub) { sub->add_option("--ell", c.ell, "shift l >= 0"); };

    auto* series = app.add_subcommand("series", "Taylor coefficients of Phi_n");
    with_n(series);
    with_ell(series);
    series->add_option("--prec", c.precision, "number of coefficients");
    common(series);

    auto* hfrac = app.add_subcommand("hfrac", "H-fraction of Phi_n^(l)");
    with_n(hfrac);
    with_ell(hfrac);
    hfrac->add_option("--max-steps", c.max_steps, "step cap for --trace");
    hfrac->add_flag("--trace", c.trace, "include the step-by-step run of the quadratic algorithm");
    hfrac->add_flag("--profile", c.profile, "include k, s and eps over one period");
    common(hfrac);

    auto* hankel = app.add_subcommand("hankel", "Hankel determinants of Phi_n^(l)");
    with_n(hankel);
    with_ell(hankel);
    hankel->add_option("--horizon", c.horizon, "number of values Delta_0..Delta_{horizon-1}");
    hankel->add_option("--source", c.source, "formula, brute or both");
    common(hankel);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", c.suite, "thmA, thmB, thmC, thmD, thm51, symmetries, baselines or all");
    verify->add_option("--n", c.n_range, "n or a range lo..hi");
    common(verify);

    auto* modp = app.add_subcommand("modp", "H-fraction and Hankel periods modulo a prime");
    with_n(modp);
    with_ell(modp);
    modp->add_option("--p", c.prime, "prime modulus");
    modp->add_option("--max-steps", c.max_steps, "step cap for the cycle search");
    common(modp);

    auto* scan = app.add_subcommand("scan", "exploratory scan of a shifted Hankel sequence");
    with_n(scan);
    with_ell(scan);
    scan->add_option("--horizon", c.horizon, "number of values");
    common(scan);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_usage;
    }

    Outcome o;
    try {
        if (*series) o = cmd_series(c);
        else if (*hfrac) o = cmd_hfrac(c);
        else if (*hankel) o = cmd_hankel(c);
        else if (*verify) o = cmd_verify(c);
        else if (*modp) o = cmd_modp(c);
        else o = cmd_scan(c);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_check_failed;
    }

    if (!c.output_path.empty()) {
        std::ofstream f(c.output_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << c.output_path << "\n";
            return exit_usage;
        }
        f << o.text;
    } else {
        out << o.text;
    }
    return o.code;
}

}  // namespace qh
