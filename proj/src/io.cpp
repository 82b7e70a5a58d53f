#include "qh/io.hpp"

#include <sstream>
#include <stdexcept>

namespace qh {

Json scalar_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    Scalar x(j.get<std::string>(), 10);
    x.canonicalize();
    return x;
}

Json polynomial_json(const Polynomial& p) {
    Json out = Json::array();
    for (long i = 0; i <= p.degree(); ++i) out.push_back(scalar_json(p.coeff(i)));
    return out;
}

Polynomial polynomial_from_json(const Domain& d, const Json& j) {
    std::vector<Scalar> c;
    for (const auto& x : j) c.push_back(d.normalize(scalar_from_json(x)));
    return Polynomial(d, std::move(c));
}

Json domain_json(const Domain& d) {
    switch (d.kind()) {
    case Domain::Kind::integers: return Json{{"kind", "integers"}};
    case Domain::Kind::rationals: return Json{{"kind", "rationals"}};
    case Domain::Kind::prime_field: return Json{{"kind", "prime_field"}, {"p", d.modulus()}};
    }
    return Json();
}

Domain domain_from_json(const Json& j) {
    std::string k = j.at("kind");
    if (k == "integers") return Domain::integers();
    if (k == "rationals") return Domain::rationals();
    if (k == "prime_field") return Domain::prime_field(j.at("p").get<unsigned long>());
    throw std::invalid_argument("unknown domain kind '" + k + "'");
}

Json hterm_json(const HFractionTerm& t) {
    return Json{{"k", t.k}, {"a", scalar_json(t.a)}, {"v", scalar_json(t.v)}, {"D", polynomial_json(t.D)}};
}

HFractionTerm hterm_from_json(const Domain& d, const Json& j) {
    HFractionTerm t = make_hterm(j.at("k").get<long>(), scalar_from_json(j.at("a")),
                                 polynomial_from_json(d, j.at("D")));
    if (j.contains("v") && d.normalize(scalar_from_json(j.at("v"))) != t.v)
        throw std::invalid_argument("H-fraction term with v != -a");
    validate_hterm(t);
    return t;
}

Json hfraction_json(const PeriodicHFraction& h) {
    Json pre = Json::array(), cyc = Json::array();
    for (const auto& t : h.preamble) pre.push_back(hterm_json(t));
    for (const auto& t : h.cycle) cyc.push_back(hterm_json(t));
    return Json{{"delta", h.delta},
                {"domain", domain_json(h.domain)},
                {"head", hterm_json(h.head)},
                {"preamble", pre},
                {"cycle", cyc},
                {"offset", h.offset()},
                {"period", h.period()}};
}

PeriodicHFraction hfraction_from_json(const Json& j) {
    PeriodicHFraction h;
    h.domain = j.contains("domain") ? domain_from_json(j.at("domain")) : Domain::rationals();
    h.delta = j.value("delta", 2);
    if (h.delta != 2) throw std::invalid_argument("only delta = 2 is supported");
    h.head = hterm_from_json(h.domain, j.at("head"));
    for (const auto& t : j.at("preamble")) h.preamble.push_back(hterm_from_json(h.domain, t));
    for (const auto& t : j.at("cycle")) h.cycle.push_back(hterm_from_json(h.domain, t));
    return h;
}

Json profile_json(const SupportProfile& p) {
    return Json{{"k", p.k}, {"s", p.s}, {"eps", p.eps}, {"period_len", p.period_len}};
}

Json model_json(const QuadraticModel& m) {
    return Json{{"A", polynomial_json(m.A)}, {"B", polynomial_json(m.B)}, {"C", polynomial_json(m.C)}};
}

Json trace_json(const std::vector<TraceStep>& trace) {
    Json out = Json::array();
    for (size_t j = 0; j < trace.size(); ++j) {
        const auto& t = trace[j];
        out.push_back(Json{{"j", j},
                           {"model", model_json(t.model)},
                           {"k", t.k},
                           {"a", scalar_json(t.a)},
                           {"D", polynomial_json(t.D)}});
    }
    return out;
}

Json series_json(long n, long ell, const TruncatedSeries& f) {
    Json c = Json::array();
    for (const auto& x : f.coeffs()) c.push_back(scalar_json(x));
    return Json{{"n", n}, {"ell", ell}, {"precision", f.precision()}, {"coeffs", c}};
}

Json check_json(const CheckResult& c) {
    Json out{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (c.counterexample)
        out["counterexample"] =
            Json{{"j", c.counterexample->j}, {"expected", c.counterexample->expected}, {"got", c.counterexample->got}};
    return out;
}

namespace {

Json checks_json(const std::vector<CheckResult>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) out.push_back(check_json(c));
    return out;
}

Json values_json(const std::vector<mpz_class>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

}  // namespace

Json hankel_report_json(const HankelReport& r) {
    return Json{{"n", r.n},
                {"ell", r.ell},
                {"horizon", r.horizon},
                {"source", to_string(r.source)},
                {"values", values_json(r.values)},
                {"checks", checks_json(r.checks)},
                {"all_pass", r.all_pass()}};
}

Json verify_report_json(const std::string& suite, long n_lo, long n_hi, const std::vector<CheckResult>& checks) {
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.pass;
    return Json{{"suite", suite},
                {"n_min", n_lo},
                {"n_max", n_hi},
                {"checks", checks_json(checks)},
                {"all_pass", ok}};
}

Json modp_report_json(const ModpReport& r) {
    Json out{{"n", r.n},
             {"ell", r.ell},
             {"p", r.p},
             {"max_steps", r.max_steps},
             {"status", to_string(r.status)},
             {"fraction", hfraction_json(r.fraction)}};
    if (r.status == CycleStatus::no_cycle) {
        out["inconclusive"] = true;
    } else {
        out["inconclusive"] = false;
        out["hfraction_preperiod"] = r.hfraction_preperiod;
        out["hfraction_period"] = r.hfraction_period;
        out["hankel_preperiod"] = r.hankel_preperiod;
        out["hankel_period"] = r.hankel_period;
    }
    return out;
}

Json scan_report_json(const ScanReport& r) {
    return Json{{"label", "exploratory"},
                {"n", r.n},
                {"ell", r.ell},
                {"horizon", r.horizon},
                {"value_min", r.value_min.get_str()},
                {"value_max", r.value_max.get_str()},
                {"max_abs", r.max_abs.get_str()},
                {"within_two", r.within_two},
                {"antiperiodic_on_window", r.antiperiodic_on_window},
                {"compared_pairs", r.compared},
                {"values", values_json(r.values)}};
}

std::string csv_cell(const std::string& s) {
    if (!s.empty() && s[0] == '-') return "\"" + s + "\"";
    return s;
}

std::string hankel_report_csv(const HankelReport& r) {
    std::ostringstream os;
    os << "n,ell,j,delta,source\n";
    for (size_t j = 0; j < r.values.size(); ++j)
        os << r.n << ',' << r.ell << ',' << j << ',' << csv_cell(r.values[j].get_str()) << ',' << to_string(r.source)
           << '\n';
    return os.str();
}

std::string verify_report_csv(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    os << "name,pass,j,expected,got\n";
    for (const auto& c : checks) {
        os << '"' << c.name << "\"," << (c.pass ? "true" : "false") << ',';
        if (c.counterexample)
            os << c.counterexample->j << ",\"" << c.counterexample->expected << "\",\"" << c.counterexample->got
               << '"';
        else
            os << ",,";
        os << '\n';
    }
    return os.str();
}

}  // namespace qh
