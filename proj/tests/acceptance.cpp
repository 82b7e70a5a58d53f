// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "golden.hpp"

#include "qh/io.hpp"
#include "qh/verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#ifndef QH_SCHEMA_DIR
#define QH_SCHEMA_DIR "schemas"
#endif

using namespace qh;

namespace {

// Collects the first few failure messages of a criterion.
struct Log {
    std::vector<std::string> failures;
    long checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
    void expect(const CheckResult& c) {
        std::string what = c.name;
        if (c.counterexample)
            what += " at j=" + std::to_string(c.counterexample->j) + " (expected " + c.counterexample->expected +
                    ", got " + c.counterexample->got + ")";
        expect(c.pass, what);
    }
    bool ok() const { return failures.empty(); }
};

std::string tag(long n, long l) { return "n=" + std::to_string(n) + " l=" + std::to_string(l); }

std::vector<mpz_class> z(const std::vector<long>& v) { return {v.begin(), v.end()}; }

// 1. Taylor coefficients
void taylor(Log& log) {
    for (long n : {1L, 2L, 5L, 10L}) {
        std::vector<long> g = golden::published_taylor(n);
        TruncatedSeries f = series_of_model(metallic_model(n), g.size());
        std::vector<Scalar> want(g.begin(), g.end());
        log.expect(f.coeffs() == want, "Taylor coefficients of Phi_" + std::to_string(n));
    }
}

// H-fraction term sequence read off the transition table, j = 0 .. 6n-4.
PeriodicHFraction fraction_from_transitions(long n) {
    std::vector<HFractionTerm> terms;
    for (long j = 0; j <= 6 * n - 4; ++j) {
        golden::Transition t = golden::transition(n, j);
        terms.push_back(make_hterm(t.k, t.a, t.D));
    }
    PeriodicHFraction h;
    h.domain = golden::QQ;
    h.head = terms[0];
    h.cycle.assign(terms.begin() + 1, terms.end());
    return h;
}

// 2. H-fractions
void hfractions(Log& log) {
    for (long n : {1L, 2L, 5L}) {
        QuadraticExpansion e = hfraction_of_quadratic(metallic_model(n), default_max_steps(n));
        auto g = golden::published_fraction(n);
        log.expect(e.status == CycleStatus::periodic, "Phi_" + std::to_string(n) + " periodic");
        log.expect(e.fraction.offset() == 1 && e.fraction.period() == g.cycle.size(),
                   "Phi_" + std::to_string(n) + " offset/period");
        log.expect(golden::matches_published(e.fraction, g, 1 + 3 * g.cycle.size()),
                   "Phi_" + std::to_string(n) + " published terms");
    }
    for (long n = 3; n <= 10; ++n) {
        QuadraticExpansion e = hfraction_of_quadratic(metallic_model(n), default_max_steps(n));
        std::string s = "Phi_" + std::to_string(n);
        log.expect(e.status == CycleStatus::periodic, s + " periodic");
        log.expect(e.fraction.offset() == 1, s + " offset 1");
        log.expect(e.fraction.period() == static_cast<size_t>(6 * n - 4), s + " period 6n-4");
        log.expect(e.fraction == expected_hfraction(n), s + " equals expected_hfraction");
        PeriodicHFraction table = fraction_from_transitions(n);
        size_t len = 1 + 2 * table.period();
        std::vector<HFractionTerm> got = e.fraction.unroll(len), want = table.unroll(len);
        bool same = true;
        for (size_t i = 0; i < len; ++i)
            same = same && got[i].k == want[i].k && got[i].a == want[i].a && got[i].D.reduced(golden::QQ) == want[i].D;
        log.expect(same, s + " equals the fraction read off the transition table");
    }
}

// 3. Trace of the quadratic algorithm for n = 5
void trace(Log& log) {
    using golden::qi;
    using golden::qpow;
    const long n = 5;
    QuadraticExpansion e = hfraction_of_quadratic(metallic_model(n), default_max_steps(n));
    log.expect(e.repeat_from == 1 && e.repeat_at == static_cast<size_t>(6 * n - 3), "repeat indices (1, 6n-3)");
    if (e.trace.size() != static_cast<size_t>(6 * n - 3)) {
        log.expect(false, "trace length 6n-3");
        return;
    }
    // rows j = 0 .. 6n-3; the last comes from one more step on the final model
    std::vector<TraceStep> rows = e.trace;
    AlgStepResult next = alg_step(e.trace.back().model);
    rows.push_back({next.next_model, 0, 0, Polynomial(golden::QQ)});
    AlgStepResult last = alg_step(next.next_model);
    rows.back().k = last.k;
    rows.back().a = last.a;
    rows.back().D = last.D;

    const Polynomial one = golden::P({1}), omq = golden::P({1, -1}), opq = golden::P({1, 1}), q = qpow(1);
    const Polynomial a5 = golden::ab(5);
    struct Row {
        long j, k, a;
        Polynomial D;
    };
    // rows printed explicitly in the published table, instantiated at n = 5
    std::vector<Row> printed{{0, 0, -1, omq},      {1, 3, 1, qi(5)},         {2, 0, 1, one},
                             {3, 0, 1, omq},       {10, 0, 1, opq},          {11, 3, 1, qi(5) - q},
                             {12, 0, 1, one},      {13, 4, -1, a5 + qpow(6)}, {14, 5, 1, a5},
                             {15, 4, 1, a5 + qpow(6)}, {16, 0, -1, one},     {17, 3, 1, qi(5) - q},
                             {18, 0, 1, opq},      {19, 0, 1, omq},          {23, 1, 1, one + qpow(2)},
                             {24, 2, 1, qi(4)},    {25, 0, 1, omq},          {26, 0, 1, one},
                             {27, 3, 1, qi(5)}};
    for (const auto& r : printed) {
        const TraceStep& t = rows[r.j];
        log.expect(t.k == r.k && t.a == r.a && t.D == r.D, "printed row j=" + std::to_string(r.j));
    }
    for (long j = 0; j <= 6 * n - 4; ++j) {
        golden::Transition t = golden::transition(n, j);
        log.expect(rows[j].model == t.model && rows[j].k == t.k && rows[j].a == t.a && rows[j].D == t.D,
                   "row j=" + std::to_string(j) + " against the closed definitions");
    }
    log.expect(rows[6 * n - 3].model == golden::transition(n, 1).model, "re-entry Q2^(3n+1) = Q1^(2)");
    log.expect(rows[6 * n - 3].model == rows[1].model, "re-entry model equals row 1");
}

// 4. Hankel golden lists
void hankel_golden(Log& log) {
    for (long n = 1; n <= 5; ++n) {
        std::vector<long> g = golden::published_hankel(n);
        log.expect(metallic_hankel_brute(n, 0, g.size()) == z(g), "Delta(Phi_" + std::to_string(n) + ")");
    }
    auto v1 = metallic_hankel_brute(1, 0, 24);
    bool anti = true;
    for (long j = 0; j + 4 < 24; ++j) anti = anti && v1[j + 4] == -v1[j];
    log.expect(anti, "Phi_1 antiperiod 4");
    auto v2 = metallic_hankel_brute(2, 0, 48);
    bool per = true;
    for (long j = 0; j + 12 < 48; ++j) per = per && v2[j + 12] == v2[j];
    log.expect(per, "Phi_2 period 12");
    for (long l = 1; l <= 4; ++l) {
        std::vector<long> g = golden::published_golden_shift(l);
        log.expect(metallic_hankel_brute(1, l, g.size()) == z(g), "Delta^(" + std::to_string(l) + ")(Phi_1)");
    }
}

// 5. Formula against brute force
void oracle(Log& log) {
    for (long n = 1; n <= 6; ++n)
        for (long l = 0; l <= n + 1; ++l) log.expect(check_oracle(n, l, 2 * n * (n + 1) + 2 * n + 3));
}

// 6. Values in {-1,0,1} and (anti)periodicity over two (anti)periods
void periodicity(Log& log) {
    for (long n = 1; n <= 8; ++n)
        for (long l = 0; l <= n + 1; ++l) log.expect(check_value_set_and_periodicity(n, l, 2, HankelSource::both));
}

// 7. Gale-Robinson over one (anti)period, Somos-4 for n = 1
void gale_robinson(Log& log) {
    for (long n = 1; n <= 8; ++n)
        for (long l = 0; l <= n + 1; ++l)
            log.expect(summarize_residuals("gale_robinson " + tag(n, l),
                                           check_gale_robinson(n, l, metallic_period(n), HankelSource::both)));
    log.expect(check_somos4_golden());
}

// 8. Contiguity
void contiguity_relations(Log& log) {
    for (long n = 1; n <= 8; ++n)
        for (long l = 0; l <= n; ++l) log.expect(check_contiguity(n, l, 4 * n * (n + 1), HankelSource::both));
    auto d0 = metallic_hankel_brute(5, 0, 60), d1 = metallic_hankel_brute(5, 1, 50),
         d2 = metallic_hankel_brute(5, 2, 40);
    bool ok = true;
    for (long j = 0; j < 40; ++j) {
        ok = ok && d1[j] == (j % 2 ? -d0[j + 6] : d0[j + 6]);
        ok = ok && d2[j] == (j % 2 ? d1[j + 6] : -d1[j + 6]);
        ok = ok && d2[j] == -d0[j + 12];
    }
    log.expect(ok, "n=5 instances Delta^(1)_j = (-1)^j Delta_{j+6}, Delta^(2)_j = -Delta_{j+12}");
}

// 9. Explicit values, profiles, and the n = 5 support sets
void explicit_values(Log& log) {
    for (long n = 3; n <= 8; ++n) {
        log.expect(explicit_first_period(n) == metallic_hankel_brute(n, 0, metallic_period(n)),
                   "explicit values n=" + std::to_string(n));
        for (const auto& c : check_explicit_values(n)) log.expect(c);
    }
    for (long n = 3; n <= 10; ++n)
        for (const auto& c : check_profile_identities(n)) log.expect(c);
    std::set<long> S[3] = {{0, 6, 12, 18, 24, 36, 46, 51, 56},
                           {1, 7, 13, 19, 25, 41, 47, 53, 59},
                           {5, 10, 15, 20, 30, 42, 48, 54, 60}};
    SupportProfile p = support_profile(expected_hfraction(5), 27);
    std::set<long> got[3];
    for (long q = 0; q <= 26; ++q) got[q % 3].insert(p.s[q]);
    for (int r = 0; r < 3; ++r) log.expect(got[r] == S[r], "support set S" + std::to_string(r) + " for n=5");
    auto brute = metallic_hankel_brute(5, 0, 61);
    for (long j = 0; j <= 60; ++j) {
        bool in = S[0].count(j) || S[1].count(j) || S[2].count(j);
        log.expect(in == (brute[j] != 0), "support of Delta(Phi_5) at j=" + std::to_string(j));
    }
}

// 10. Symmetries inside one period
void symmetries(Log& log) {
    for (long n = 3; n <= 10; ++n)
        for (const auto& c : check_hfraction_symmetries(n)) log.expect(c);
}

// 11. Catalan and Motzkin baselines
void baselines(Log& log) {
    for (const auto& c : baseline_catalan_motzkin()) log.expect(c);
}

// 12. Reduction modulo p
void modp(Log& log, std::string& note) {
    long periodic = 0, finite = 0, retried = 0;
    for (long n = 3; n <= 6; ++n)
        for (long l = 0; l <= n + 3; ++l)
            for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
                std::string s = tag(n, l) + " p=" + std::to_string(p);
                size_t cap = default_max_steps(n);
                ModpReport r = modp_analysis(n, l, p, cap);
                if (r.status == CycleStatus::no_cycle) {
                    ++retried;
                    r = modp_analysis(n, l, p, 4 * cap);
                }
                log.expect(r.status != CycleStatus::no_cycle, s + " cycle found within 4x the step cap");
                if (r.status == CycleStatus::no_cycle) continue;
                (r.status == CycleStatus::periodic ? periodic : finite) += 1;
                auto fp = modp_hankel_values(r, 61);
                auto exact = metallic_hankel_brute(n, l, 61);
                bool same = true;
                for (long j = 0; j <= 60; ++j) {
                    mpz_class e = exact[j] % mpz_class(p);
                    if (e < 0) e += p;
                    same = same && fp[j] == e.get_ui();
                }
                log.expect(same, s + " Delta mod p two ways");
            }
    note = std::to_string(periodic) + " periodic, " + std::to_string(finite) + " finite, " +
           std::to_string(retried) + " retried";
}

// Required keys, constants and primitive types of a report against its schema file.
bool matches_schema(const Json& doc, const std::string& schema_file, std::string& why) {
    std::ifstream in(std::string(QH_SCHEMA_DIR) + "/" + schema_file);
    if (!in) {
        why = "cannot open " + schema_file;
        return false;
    }
    Json schema = Json::parse(in);
    for (const auto& k : schema.at("required"))
        if (!doc.contains(k.get<std::string>())) {
            why = "missing key " + k.get<std::string>();
            return false;
        }
    const std::regex integer_string("^-?[0-9]+$");
    for (const auto& [key, prop] : schema.at("properties").items()) {
        if (!doc.contains(key)) continue;
        const Json& v = doc.at(key);
        if (prop.contains("const") && v != prop.at("const")) {
            why = key + " differs from its constant";
            return false;
        }
        std::string type = prop.value("type", "");
        bool ok = type.empty() || (type == "integer" && v.is_number_integer()) ||
                  (type == "boolean" && v.is_boolean()) || (type == "string" && v.is_string()) ||
                  (type == "array" && v.is_array()) || (type == "object" && v.is_object());
        if (prop.value("$ref", "").find("integer_string") != std::string::npos)
            ok = v.is_string() && std::regex_match(v.get<std::string>(), integer_string);
        if (type == "array" && prop.contains("items") &&
            prop.at("items").value("$ref", "").find("integer_string") != std::string::npos)
            for (const auto& x : v) ok = ok && x.is_string() && std::regex_match(x.get<std::string>(), integer_string);
        if (!ok) {
            why = key + " has the wrong type";
            return false;
        }
    }
    return true;
}

// 13. Exploratory scan
void scan(Log& log, std::string& note) {
    std::ostringstream os;
    for (long n = 3; n <= 6; ++n)
        for (long l : {n + 2, n + 3}) {
            ScanReport r = conjecture_scan(n, l, 4 * n * (n + 1));
            Json j = Json::parse(scan_report_json(r).dump());
            std::string why;
            log.expect(matches_schema(j, "scan_report.schema.json", why), "scan " + tag(n, l) + ": " + why);
            log.expect(j.at("values").size() == static_cast<size_t>(4 * n * (n + 1)), "scan " + tag(n, l) + " size");
            if (l == n + 2)
                os << "n=" << n << " l=n+2: within [-2,2] " << (r.within_two ? "yes" : "no") << ", antiperiodic "
                   << (r.antiperiodic_on_window ? "yes" : "no") << "; ";
            else
                os << "l=n+3: max |Delta| " << r.max_abs.get_str() << "; ";
        }
    note = os.str();
    if (note.size() >= 2) note.resize(note.size() - 2);
}

TruncatedSeries random_rational_series(std::mt19937& rng, long N) {
    std::uniform_int_distribution<long> coef(-4, 4), deg(1, 6);
    std::vector<Scalar> num(deg(rng) + 1), den(deg(rng) + 1);
    for (auto& x : num) x = coef(rng);
    for (auto& x : den) x = coef(rng);
    den[0] = 1;
    if (Polynomial(golden::QQ, num).is_zero()) num[0] = 1;
    return series_divide(TruncatedSeries::from_polynomial(Polynomial(golden::QQ, num), N),
                         TruncatedSeries::from_polynomial(Polynomial(golden::QQ, den), N));
}

// 14. Artin correspondence
void artin(Log& log) {
    for (long n = 1; n <= 10; ++n)
        for (long l = 0; l <= n + 1; ++l) {
            PeriodicHFraction h = metallic_hfraction(n, l);
            log.expect(artin_to_hf(hf_to_artin(h, 30)).terms == h.unroll(30), "round trip " + tag(n, l));
        }
    std::mt19937 rng(20250101);
    int done = 0;
    while (done < 50) {
        TruncatedSeries g = random_rational_series(rng, 48);
        if (g.zero_to_precision()) continue;
        HFractionPrefix greedy = greedy_hfraction(g, 500);
        HFractionPrefix via = artin_to_hf(artin_expand(g.shift_up(1), 500));
        log.expect(via.terms == greedy.terms && via.stop == greedy.stop,
                   "random series " + std::to_string(done) + ": Artin route equals greedy expansion");
        ++done;
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<void(Log&, std::string&)> run;
    };
    auto plain = [](void (*f)(Log&)) { return [f](Log& l, std::string&) { f(l); }; };
    std::vector<Criterion> all{
        {1, "Taylor coefficients of Phi_1, Phi_2, Phi_5, Phi_10", plain(taylor)},
        {2, "H-fractions of Phi_n, n = 1..10", plain(hfractions)},
        {3, "quadratic algorithm trace for n = 5", plain(trace)},
        {4, "brute-force Hankel lists and shifted rows of Phi_1", plain(hankel_golden)},
        {5, "formula equals brute force, n = 1..6", plain(oracle)},
        {6, "values in {-1,0,1} and (anti)periodicity, n = 1..8", plain(periodicity)},
        {7, "Gale-Robinson recurrence, n = 1..8, and Somos-4", plain(gale_robinson)},
        {8, "contiguity, n = 1..8", plain(contiguity_relations)},
        {9, "explicit values, profile identities, n = 5 support sets", plain(explicit_values)},
        {10, "numerator and denominator symmetries, n = 3..10", plain(symmetries)},
        {11, "Catalan and Motzkin baselines", plain(baselines)},
        {12, "cycles and Hankel values modulo p", modp},
        {13, "exploratory scan of the shifts n+2 and n+3", scan},
        {14, "Artin correspondence", plain(artin)},
    };

    int failed = 0;
    for (const auto& c : all) {
        Log log;
        std::string note;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(log, note);
        } catch (const std::exception& e) {
            log.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (log.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << log.checks
                  << " checks, " << std::fixed << std::setprecision(1) << secs << " s]";
        if (!note.empty()) std::cout << " " << note;
        std::cout << "\n";
        for (const auto& f : log.failures) std::cout << "    " << f << "\n";
        failed += !log.ok();
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << all.size() - failed << "/" << all.size() << "\n";
    return failed ? 1 : 0;
}
