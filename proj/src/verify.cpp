#include "qh/verify.hpp"

#include "qh/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qh {

namespace {

mpz_class to_integer(const Scalar& x) {
    if (x.get_den() != 1) throw std::domain_error("expected an integer Hankel value, got " + x.get_str());
    return x.get_num();
}

mpz_class sign_of(long e) { return e % 2 ? mpz_class(-1) : mpz_class(1); }

}  // namespace

// ---------------------------------------------------------------------------
// Brute force

Scalar hankel_bruteforce(const TruncatedSeries& f, long l, long j) {
    if (l < 0 || j < 0) throw std::invalid_argument("negative shift or order");
    const Domain& d = f.domain();
    if (j == 0) return d.from_int(1);
    long need = l + 2 * j - 1;
    if (f.precision() < need)
        throw std::domain_error("hankel_bruteforce: precision " + std::to_string(f.precision()) +
                                " too small, need " + std::to_string(need));
    ExactMatrix m(d, static_cast<size_t>(j));
    for (long a = 0; a < j; ++a)
        for (long b = 0; b < j; ++b) m.at(a, b) = f.coeff(a + b + l);
    return det_fraction_free(m);
}

long bruteforce_precision(long l, long horizon) { return std::max<long>(l + 2 * horizon, 1); }

std::vector<mpz_class> hankel_bruteforce_sequence(const TruncatedSeries& f, long l, long horizon) {
    if (horizon <= 0) return {};
    long dim = horizon - 1;
    long need = dim > 0 ? l + 2 * dim - 1 : 0;
    if (f.precision() < need)
        throw std::domain_error("hankel_bruteforce_sequence: precision " + std::to_string(f.precision()) +
                                " too small, need " + std::to_string(need));
    std::vector<std::vector<mpz_class>> m(dim, std::vector<mpz_class>(dim));
    for (long a = 0; a < dim; ++a)
        for (long b = 0; b < dim; ++b) m[a][b] = to_integer(f.coeff(a + b + l));
    return leading_principal_minors(m, static_cast<size_t>(dim));
}

std::string to_string(HankelSource s) {
    switch (s) {
    case HankelSource::formula: return "formula";
    case HankelSource::brute_force: return "brute_force";
    case HankelSource::both: return "both";
    }
    return "?";
}

HankelSource parse_source(const std::string& s) {
    if (s == "formula") return HankelSource::formula;
    if (s == "brute" || s == "brute_force") return HankelSource::brute_force;
    if (s == "both") return HankelSource::both;
    throw std::invalid_argument("unknown source '" + s + "' (expected formula, brute or both)");
}

bool HankelReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<mpz_class> metallic_hankel_formula(long n, long l, long horizon) {
    if (l < 0 || l > n + 1) throw std::invalid_argument("formula source needs 0 <= l <= n+1");
    auto vals = hankel_sequence_from_hfraction(metallic_hfraction(n, l), horizon);
    std::vector<mpz_class> out;
    out.reserve(vals.size());
    for (const auto& v : vals) out.push_back(to_integer(v));
    return out;
}

std::vector<mpz_class> metallic_hankel_brute(long n, long l, long horizon) {
    TruncatedSeries f = series_of_model(metallic_model(n), bruteforce_precision(l, horizon));
    return hankel_bruteforce_sequence(f, l, horizon);
}

CheckResult compare_sequences(const std::string& name, const std::vector<mpz_class>& expected,
                              const std::vector<mpz_class>& got) {
    CheckResult r{name, true, std::nullopt, ""};
    size_t n = std::max(expected.size(), got.size());
    for (size_t j = 0; j < n; ++j) {
        std::string e = j < expected.size() ? expected[j].get_str() : "<missing>";
        std::string g = j < got.size() ? got[j].get_str() : "<missing>";
        if (e != g) {
            r.pass = false;
            r.counterexample = Counterexample{static_cast<long>(j), e, g};
            break;
        }
    }
    r.detail = std::to_string(n) + " entries compared";
    return r;
}

HankelReport hankel_sequence(long n, long l, long horizon, HankelSource source) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (l < 0) throw std::invalid_argument("shift must be >= 0");
    if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
    HankelReport rep;
    rep.n = n;
    rep.ell = l;
    rep.horizon = horizon;
    rep.source = source;
    if (source == HankelSource::formula) {
        rep.values = metallic_hankel_formula(n, l, horizon);
    } else if (source == HankelSource::brute_force) {
        rep.values = metallic_hankel_brute(n, l, horizon);
    } else {
        auto f = metallic_hankel_formula(n, l, horizon);
        rep.values = metallic_hankel_brute(n, l, horizon);
        rep.checks.push_back(compare_sequences("formula_equals_brute_force", f, rep.values));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Checks

long metallic_period(long n) { return 2 * n * (n + 1); }

CheckResult value_set_and_periodicity(long n, const std::vector<mpz_class>& values, const std::string& name) {
    CheckResult r{name, true, std::nullopt, ""};
    for (size_t j = 0; j < values.size(); ++j) {
        if (abs(values[j]) > 1) {
            r.pass = false;
            r.counterexample = Counterexample{static_cast<long>(j), "value in {-1,0,1}", values[j].get_str()};
            return r;
        }
    }
    const long P = metallic_period(n);
    const mpz_class sgn = sign_of(n);
    long compared = 0;
    for (long j = 0; j + P < static_cast<long>(values.size()); ++j, ++compared) {
        mpz_class want = sgn * values[j];
        if (values[j + P] != want) {
            r.pass = false;
            r.counterexample = Counterexample{j + P, want.get_str(), values[j + P].get_str()};
            return r;
        }
    }
    r.detail = std::to_string(values.size()) + " values, " + std::to_string(compared) + " shifted pairs";
    return r;
}

CheckResult check_value_set_and_periodicity(long n, long l, long periods, HankelSource source) {
    if (periods < 1) throw std::invalid_argument("periods must be >= 1");
    long P = metallic_period(n);
    HankelReport rep = hankel_sequence(n, l, (periods + 1) * P, source);
    CheckResult r = value_set_and_periodicity(
        n, rep.values, "values_and_periodicity n=" + std::to_string(n) + " l=" + std::to_string(l));
    for (const auto& c : rep.checks)
        if (!c.pass) return c;
    return r;
}

std::vector<GaleRobinsonResidual> gale_robinson_residuals(long n, const std::vector<mpz_class>& v, long horizon) {
    if (static_cast<long>(v.size()) < horizon + 2 * n + 2)
        throw std::invalid_argument("gale_robinson_residuals: need " + std::to_string(horizon + 2 * n + 2) +
                                    " values");
    std::vector<GaleRobinsonResidual> out;
    for (long j = 0; j < horizon; ++j) {
        mpz_class g = v[j] * v[j + 2 * n + 2] - v[j + 1] * v[j + 2 * n + 1] + v[j + n + 1] * v[j + n + 1];
        out.push_back({j, g});
    }
    return out;
}

std::vector<GaleRobinsonResidual> check_gale_robinson(long n, long l, long horizon, HankelSource source) {
    HankelReport rep = hankel_sequence(n, l, horizon + 2 * n + 2, source);
    for (const auto& c : rep.checks)
        if (!c.pass) throw std::runtime_error("formula and brute force disagree at j=" +
                                              std::to_string(c.counterexample->j));
    return gale_robinson_residuals(n, rep.values, horizon);
}

CheckResult summarize_residuals(const std::string& name, const std::vector<GaleRobinsonResidual>& res) {
    CheckResult r{name, true, std::nullopt, std::to_string(res.size()) + " residuals"};
    for (const auto& g : res) {
        if (g.value != 0) {
            r.pass = false;
            r.counterexample = Counterexample{g.j, "0", g.value.get_str()};
            break;
        }
    }
    return r;
}

CheckResult contiguity(long n, long l, const std::vector<mpz_class>& lower, const std::vector<mpz_class>& upper,
                       long horizon) {
    if (static_cast<long>(lower.size()) < horizon + n + 2 || static_cast<long>(upper.size()) < horizon + 1)
        throw std::invalid_argument("contiguity: sequences too short");
    CheckResult r{"contiguity n=" + std::to_string(n) + " l=" + std::to_string(l), true, std::nullopt, ""};
    const long base = n * (n + 2 * l - 1) / 2;
    for (long j = 0; j <= horizon; ++j) {
        mpz_class want = sign_of(j + base) * lower[j + n + 1];
        if (upper[j] != want) {
            r.pass = false;
            r.counterexample = Counterexample{j, want.get_str(), upper[j].get_str()};
            return r;
        }
    }
    r.detail = std::to_string(horizon + 1) + " indices";
    return r;
}

CheckResult check_contiguity(long n, long l, long horizon, HankelSource source) {
    if (l < 0 || l > n) throw std::invalid_argument("contiguity needs 0 <= l <= n");
    auto lower = hankel_sequence(n, l, horizon + n + 2, source);
    auto upper = hankel_sequence(n, l + 1, horizon + 1, source);
    for (const auto* rep : {&lower, &upper})
        for (const auto& c : rep->checks)
            if (!c.pass) return c;
    return contiguity(n, l, lower.values, upper.values, horizon);
}

// ---------------------------------------------------------------------------
// Closed forms for the first (anti)period

int explicit_delta(long n, long p, SignClass cls) {
    if (n < 3) throw std::invalid_argument("explicit_delta requires n >= 3");
    const long h = n * (n - 1) / 2;
    long e;
    switch (cls) {
    case SignClass::c3p:
        if (p >= 0 && p <= n - 1)
            e = p * h + p * (p - 1) / 2;
        else if (p == n)
            e = n * (n + 1) * (n + 2) / 2;
        else if (p >= n + 1 && p <= 2 * n - 2)
            e = (p + 1) * h + n;
        else
            throw std::invalid_argument("explicit_delta: p out of range for class 3p");
        break;
    case SignClass::c3p1:
        if (p < 0 || p > 2 * n - 2) throw std::invalid_argument("explicit_delta: p out of range for class 3p+1");
        e = p * h + p * (p + 1) / 2;
        break;
    case SignClass::c3p2:
        if (p >= 0 && p <= n - 2)
            e = (p + 1) * h;
        else if (p == n - 1)
            e = n * (n - 1) * (n - 1) / 2;
        else if (p >= n && p <= 2 * n - 3)
            e = p * h + (p + 1) * (p + 2) / 2;
        else
            throw std::invalid_argument("explicit_delta: p out of range for class 3p+2");
        break;
    default:
        throw std::invalid_argument("explicit_delta: bad class");
    }
    return e % 2 ? -1 : 1;
}

long explicit_s(long n, long q) {
    if (n < 3) throw std::invalid_argument("explicit_s requires n >= 3");
    if (q < 0 || q > 6 * n - 5) throw std::invalid_argument("explicit_s: index out of range");
    const long p = q / 3;
    switch (q % 3) {
    case 0:
        if (p <= n - 1) return p * (n + 1);
        if (p == n) return (n + 1) * (n + 1);
        return 1 + (p + 3) * n;
    case 1:
        if (p <= n - 1) return 1 + p * (n + 1);
        return n + (p + 1) * (n + 1);
    default:
        if (p <= n - 2) return (p + 1) * n;
        if (p == n - 1) return n * (n + 1);
        return (p + 2) * (n + 1);
    }
}

std::vector<mpz_class> explicit_first_period(long n) {
    std::vector<mpz_class> out(metallic_period(n), 0);
    for (long q = 0; q <= 6 * n - 5; ++q) {
        SignClass cls = q % 3 == 0 ? SignClass::c3p : q % 3 == 1 ? SignClass::c3p1 : SignClass::c3p2;
        out.at(explicit_s(n, q)) = explicit_delta(n, q / 3, cls);
    }
    return out;
}

Membership support_membership(long n, long j) {
    if (n < 3) throw std::invalid_argument("support_membership requires n >= 3");
    if (j < 0) throw std::invalid_argument("negative index");
    const long P = metallic_period(n);
    if (j > P) j %= P;
    const long m1 = n + 1;
    if (j % m1 == 0) return {true, 1};
    if (j % m1 == 1 && j >= 1 && j <= n * n) return {true, 2};
    if (j % m1 == n && j >= n + m1 * m1 && j <= n + (2 * n - 1) * m1) return {true, 3};
    if (j % n == 0 && j >= n && j <= (n - 1) * n) return {true, 4};
    if (j % n == 1 && j >= 1 + (n + 4) * n && j <= 1 + (2 * n + 1) * n) return {true, 5};
    return {false, 0};
}

// ---------------------------------------------------------------------------
// Reduction modulo p

namespace {

unsigned long residue(const Scalar& x, unsigned long p) {
    mpz_class r = x.get_num() % mpz_class(p);
    if (r < 0) r += p;
    return r.get_ui();
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

unsigned long order_mod(unsigned long a, unsigned long p) {
    unsigned long x = a, k = 1;
    while (x != 1) {
        x = mulmod(x, a, p);
        ++k;
    }
    return k;
}

// Delta_j mod p for j < horizon from a periodic or finite fraction.
std::vector<unsigned long> walk_mod(const PeriodicHFraction& h, unsigned long p, long horizon) {
    std::vector<unsigned long> out(std::max<long>(horizon, 0), 0);
    if (horizon <= 0) return out;
    out[0] = 1;
    unsigned long delta = 1, V = 1;
    long s = 0;
    for (size_t i = 0;; ++i) {
        if (h.finite() && i >= h.length()) return out;
        const HFractionTerm& t = h.term(i);
        V = mulmod(V, residue(t.v, p), p);
        unsigned long mult = powmod(V, static_cast<unsigned long>(t.k + 1), p);
        if ((t.k * (t.k + 1) / 2) % 2) mult = (p - mult) % p;
        delta = mulmod(delta, mult, p);
        s += t.k + 1;
        if (s >= horizon) return out;
        out[s] = delta;
    }
}

}  // namespace

ModpReport modp_analysis(long n, long l, unsigned long p, size_t max_steps) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (l < 0) throw std::invalid_argument("shift must be >= 0");
    const Domain Fp = Domain::prime_field(p);
    ModpReport rep;
    rep.n = n;
    rep.ell = l;
    rep.p = p;
    rep.max_steps = max_steps;
    QuadraticModel m = iterated_shift_model(n, l).reduced(Fp);
    if (m.A.is_zero()) throw std::domain_error("model degenerates modulo p (A = 0)");
    QuadraticExpansion e = hfraction_of_quadratic(m, max_steps);
    rep.status = e.status;
    rep.fraction = e.fraction;
    const PeriodicHFraction& h = rep.fraction;
    if (e.status == CycleStatus::no_cycle) return rep;
    if (e.status == CycleStatus::finite) {
        rep.hfraction_preperiod = h.length();
        rep.hfraction_period = 0;
        long s = 0;
        for (size_t i = 0; i < h.length(); ++i) s += h.term(i).k + 1;
        rep.hankel_preperiod = s + 1;
        rep.hankel_period = 1;
        return rep;
    }
    rep.hfraction_preperiod = h.offset();
    rep.hfraction_period = h.period();

    // Past s_offset the multipliers (-1)^{k(k+1)/2} V^{k+1} repeat with period
    // L*ord(c), c the product of the cycle's v; their product M over that
    // window has finite order, which bounds the period of the Delta stream.
    const size_t o = h.offset(), L = h.period();
    long s_o = 0, S = 0;
    for (size_t i = 0; i < o; ++i) s_o += h.term(i).k + 1;
    unsigned long c = 1;
    for (const auto& t : h.cycle) {
        S += t.k + 1;
        c = mulmod(c, residue(t.v, p), p);
    }
    const unsigned long r1 = order_mod(c, p);
    unsigned long V = 1;
    for (size_t i = 0; i < o; ++i) V = mulmod(V, residue(h.term(i).v, p), p);
    unsigned long M = 1;
    for (size_t i = o; i < o + L * r1; ++i) {
        const HFractionTerm& t = h.term(i);
        V = mulmod(V, residue(t.v, p), p);
        unsigned long mult = powmod(V, static_cast<unsigned long>(t.k + 1), p);
        if ((t.k * (t.k + 1) / 2) % 2) mult = (p - mult) % p;
        M = mulmod(M, mult, p);
    }
    const unsigned long r2 = order_mod(M, p);
    const long T = S * static_cast<long>(r1 * r2);
    std::vector<unsigned long> x = walk_mod(h, p, s_o + 2 * T);

    long period = T;
    for (long d = 1; d <= T; ++d) {
        if (T % d) continue;
        bool ok = true;
        for (long j = s_o; j < s_o + T && ok; ++j) ok = x[j] == x[j + d];
        if (ok) {
            period = d;
            break;
        }
    }
    long pre = s_o;
    while (pre > 0 && x[pre - 1] == x[pre - 1 + period]) --pre;
    rep.hankel_preperiod = pre;
    rep.hankel_period = period;
    return rep;
}

std::vector<unsigned long> modp_hankel_values(const ModpReport& r, long horizon) {
    if (r.status == CycleStatus::no_cycle) {
        HFractionPrefix pre;
        pre.domain = r.fraction.domain;
        pre.terms = r.fraction.unroll(r.fraction.length());
        pre.stop = ExpansionStop::max_terms;
        auto vals = hankel_sequence_from_prefix(pre, horizon);
        std::vector<unsigned long> out;
        for (const auto& v : vals) out.push_back(residue(v, r.p));
        return out;
    }
    return walk_mod(r.fraction, r.p, horizon);
}

// ---------------------------------------------------------------------------
// Exploratory scan and baselines

ScanReport conjecture_scan(long n, long l, long horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    ScanReport rep;
    rep.n = n;
    rep.ell = l;
    rep.horizon = horizon;
    rep.values = metallic_hankel_brute(n, l, horizon);
    rep.value_min = *std::min_element(rep.values.begin(), rep.values.end());
    rep.value_max = *std::max_element(rep.values.begin(), rep.values.end());
    rep.max_abs = std::max(mpz_class(abs(rep.value_min)), mpz_class(abs(rep.value_max)));
    rep.within_two = rep.max_abs <= 2;
    const long P = metallic_period(n);
    const mpz_class sgn = sign_of(n);
    rep.antiperiodic_on_window = true;
    for (long j = 0; j + P < horizon; ++j, ++rep.compared)
        if (rep.values[j + P] != sgn * rep.values[j]) rep.antiperiodic_on_window = false;
    return rep;
}

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

mpz_class catalan_product(long j, long l) {
    mpq_class r = 1;
    for (long a = 1; a <= l - 1; ++a)
        for (long b = a; b <= l - 1; ++b) r *= mpq_class(2 * j + a + b, a + b);
    r.canonicalize();
    return to_integer(r);
}

}  // namespace

std::vector<CheckResult> baseline_catalan_motzkin() {
    const long H = 13;
    TruncatedSeries cat = catalan_series(bruteforce_precision(3, H));
    TruncatedSeries mot = motzkin_series(bruteforce_precision(3, H));
    std::vector<CheckResult> out;

    std::vector<mpz_class> ones(H, 1), lin, prod;
    for (long j = 0; j < H; ++j) {
        lin.push_back(j + 1);
        prod.push_back(catalan_product(j, 3));
    }
    out.push_back(compare_sequences("catalan_delta0", ones, hankel_bruteforce_sequence(cat, 0, H)));
    out.push_back(compare_sequences("catalan_delta1", ones, hankel_bruteforce_sequence(cat, 1, H)));
    out.push_back(compare_sequences("catalan_delta2", lin, hankel_bruteforce_sequence(cat, 2, H)));
    out.push_back(compare_sequences("catalan_delta3", prod, hankel_bruteforce_sequence(cat, 3, H)));

    out.push_back(compare_sequences("motzkin_delta0", ones, hankel_bruteforce_sequence(mot, 0, H)));
    auto m1 = hankel_bruteforce_sequence(mot, 1, H);
    std::vector<mpz_class> six;
    const long pattern[6] = {1, 1, 0, -1, -1, 0};
    for (long j = 0; j < H; ++j) six.push_back(pattern[j % 6]);
    out.push_back(compare_sequences("motzkin_delta1", six, m1));
    CheckResult somos{"motzkin_delta1_recurrence", true, std::nullopt, ""};
    for (long j = 0; j + 2 < H; ++j) {
        mpz_class res = m1[j + 2] * m1[j] - m1[j + 1] * m1[j + 1] + 1;
        if (res != 0) {
            somos.pass = false;
            somos.counterexample = Counterexample{j, "0", res.get_str()};
            break;
        }
    }
    somos.detail = std::to_string(H - 2) + " residuals";
    out.push_back(somos);
    out.push_back(compare_sequences("motzkin_delta2", ints({1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8}),
                                    hankel_bruteforce_sequence(mot, 2, 12)));
    out.push_back(compare_sequences("motzkin_delta3", ints({1, 4, 3, -6, -16, -10, 15, 36, 21, -28, -64, -36, 45}),
                                    hankel_bruteforce_sequence(mot, 3, 13)));
    return out;
}

}  // namespace qh

// ---------------------------------------------------------------------------
// Suites

namespace qh {

namespace {

CheckResult bool_check(const std::string& name, const std::vector<std::pair<long, bool>>& trials,
                       const std::string& expected = "identity holds") {
    CheckResult r{name, true, std::nullopt, std::to_string(trials.size()) + " indices"};
    for (const auto& [i, ok] : trials)
        if (!ok) {
            r.pass = false;
            r.counterexample = Counterexample{i, expected, "violated"};
            break;
        }
    return r;
}

std::string tag(long n) { return " n=" + std::to_string(n); }

}  // namespace

CheckResult check_hfraction_closed_form(long n) {
    CheckResult r{"hfraction_closed_form" + tag(n), true, std::nullopt, ""};
    QuadraticExpansion e = hfraction_of_quadratic(metallic_model(n, Domain::rationals()), default_max_steps(n));
    PeriodicHFraction want = expected_hfraction(n);
    const size_t L = n == 1 ? 3 : static_cast<size_t>(6 * n - 4);
    r.detail = "status " + to_string(e.status) + ", offset " + std::to_string(e.fraction.offset()) + ", period " +
               std::to_string(e.fraction.period());
    if (e.status != CycleStatus::periodic || e.fraction.offset() != 1 || e.fraction.period() != L) {
        r.pass = false;
        r.counterexample = Counterexample{0, "offset 1, period " + std::to_string(L), r.detail};
        return r;
    }
    for (size_t i = 0; i < 2 * L + 1; ++i) {
        if (e.fraction.term(i) != want.term(i)) {
            r.pass = false;
            r.counterexample = Counterexample{static_cast<long>(i), "closed-form term", "different term"};
            return r;
        }
    }
    return r;
}

std::vector<CheckResult> check_hfraction_symmetries(long n) {
    if (n < 3) throw std::invalid_argument("period symmetries need n >= 3");
    PeriodicHFraction h = hfraction_of_quadratic(metallic_model(n, Domain::rationals()), default_max_steps(n)).fraction;
    auto alpha = [&](long i) {
        return hterm_numerator(h.term(i), i ? h.term(i - 1).k : 0, i == 0);
    };
    auto beta = [&](long i) { return LaurentPoly(h.term(i).D); };
    LaurentPoly q(Polynomial::monomial(h.domain, 1, 1));
    std::vector<CheckResult> out;

    std::vector<std::pair<long, bool>> t;
    for (long i = 1; i <= 6 * n - 2; ++i) t.push_back({i, alpha(i) == alpha(6 * n - 1 - i)});
    out.push_back(bool_check("numerator_mirror_period" + tag(n), t));
    t.clear();
    for (long i = 1; i <= 6 * n - 3; ++i) t.push_back({i, beta(i) == beta(6 * n - 2 - i)});
    out.push_back(bool_check("denominator_mirror_period" + tag(n), t));

    t.clear();
    for (long i = 1; i <= 3 * n - 3; ++i) t.push_back({i, alpha(i) == alpha(3 * n - 2 - i)});
    out.push_back(bool_check("numerator_mirror_first_block" + tag(n), t));
    t.clear();
    t.push_back({0, beta(0) == beta(3 * n - 3) - q});
    for (long i = 1; i <= 3 * n - 4; ++i) {
        long chi = i % 3 == 0 ? 0 : i % 3 == 1 ? 1 : -1;
        LaurentPoly rhs = beta(3 * n - 3 - i);
        if (chi == 1) rhs = rhs + q;
        if (chi == -1) rhs = rhs - q;
        t.push_back({i, beta(i) == rhs});
    }
    out.push_back(bool_check("denominator_mirror_first_block" + tag(n), t));

    t.clear();
    for (long i = 1; i <= 3 * n - 3; ++i) t.push_back({i, alpha(i) == alpha(i + 3 * n + 1)});
    out.push_back(bool_check("numerator_half_period" + tag(n), t));
    return out;
}

std::vector<CheckResult> check_profile_identities(long n) {
    if (n < 3) throw std::invalid_argument("profile identities need n >= 3");
    PeriodicHFraction h = metallic_hfraction(n, 0);
    SupportProfile p = support_profile(h, 6 * n + 2);
    const auto& k = p.k;
    const auto& s = p.s;
    const auto& e = p.eps;
    std::vector<CheckResult> out;
    std::vector<std::pair<long, bool>> t;

    for (long i = 0; i <= 6 * n - 2; ++i) t.push_back({i, k[i] == k[6 * n - 2 - i]});
    out.push_back(bool_check("k_mirror" + tag(n), t));
    t.clear();
    for (long i = 0; i <= 3 * n - 3; ++i) t.push_back({i, k[i + 3 * n + 1] == k[i]});
    out.push_back(bool_check("k_translate" + tag(n), t));

    t.clear();
    const long s31 = n + (n + 1) * (n + 1);
    for (long j = 0; j <= 3 * n - 2; ++j) t.push_back({j, s[j + 3 * n + 1] == s[j] + s31 && s[3 * n + 1] == s31});
    out.push_back(bool_check("s_translate" + tag(n), t));
    t.clear();
    const long s61 = (2 * n + 1) * (n + 1);
    for (long j = 0; j <= 6 * n - 1; ++j) t.push_back({j, s[j] + s[6 * n - 1 - j] == s61 && s[6 * n - 1] == s61});
    out.push_back(bool_check("s_mirror" + tag(n), t));

    t.clear();
    const long e31 = n * (n + 1) * (2 * n + 1) / 6;
    for (long j = 0; j <= 3 * n - 2; ++j) t.push_back({j, e[j + 3 * n + 1] == e[j] + e31 && e[3 * n + 1] == e31});
    out.push_back(bool_check("eps_translate" + tag(n), t));
    t.clear();
    const long e61 = e31 + n * (n - 1) * (n - 2) / 3;
    for (long j = 0; j <= 6 * n - 1; ++j) t.push_back({j, e[j] + e[6 * n - 1 - j] == e61 && e[6 * n - 1] == e61});
    out.push_back(bool_check("eps_mirror" + tag(n), t));

    CheckResult end{"period_end_values" + tag(n), true, std::nullopt, ""};
    const long want_s = 2 * n * (n + 1), want_e = (2 * n - 1) * (n * n - n + 3) / 3;
    if (s[6 * n - 4] != want_s || e[6 * n - 4] != want_e) {
        end.pass = false;
        end.counterexample = Counterexample{6 * n - 4, std::to_string(want_s) + "," + std::to_string(want_e),
                                            std::to_string(s[6 * n - 4]) + "," + std::to_string(e[6 * n - 4])};
    }
    out.push_back(end);

    // explicit s_q agrees with the profile
    t.clear();
    for (long q = 0; q <= 6 * n - 5; ++q) t.push_back({q, explicit_s(n, q) == s[q]});
    out.push_back(bool_check("s_closed_form" + tag(n), t));
    return out;
}

std::vector<CheckResult> check_explicit_values(long n) {
    if (n < 3) throw std::invalid_argument("explicit values need n >= 3");
    const long P = metallic_period(n);
    const long support_end = 2 * n * (n + 2) + 1;
    auto brute = metallic_hankel_brute(n, 0, std::max(P, support_end) + 1);
    std::vector<CheckResult> out;
    std::vector<mpz_class> first(brute.begin(), brute.begin() + P);
    out.push_back(compare_sequences("explicit_first_period" + tag(n), explicit_first_period(n), first));

    const long m = (2 * n + 1) * (n + 1);
    auto formula = metallic_hankel_formula(n, 0, m + 1);
    const mpz_class sgn = sign_of(n * (n + 1) / 2);
    CheckResult sym{"reflection" + tag(n), true, std::nullopt, std::to_string(m + 1) + " indices"};
    for (long j = 0; j <= m; ++j) {
        if (formula[j] != sgn * formula[m - j]) {
            sym.pass = false;
            sym.counterexample = Counterexample{j, mpz_class(sgn * formula[m - j]).get_str(), formula[j].get_str()};
            break;
        }
    }
    out.push_back(sym);

    std::vector<std::pair<long, bool>> t;
    for (long j = 0; j <= support_end; ++j) t.push_back({j, support_membership(n, j).member == (brute[j] != 0)});
    out.push_back(bool_check("support_membership" + tag(n), t, "membership matches Delta_j != 0"));
    return out;
}

CheckResult check_somos4_golden() {
    CheckResult r{"somos4 n=1", true, std::nullopt, ""};
    long count = 0;
    for (long l = 0; l <= 2; ++l) {
        auto v = metallic_hankel_brute(1, l, 28);
        for (long j = 0; j + 4 < 28; ++j, ++count) {
            mpz_class res = v[j + 4] * v[j] - v[j + 3] * v[j + 1] + v[j + 2] * v[j + 2];
            if (res != 0) {
                r.pass = false;
                r.counterexample = Counterexample{j, "0", res.get_str()};
                r.detail = "shift " + std::to_string(l);
                return r;
            }
        }
    }
    r.detail = std::to_string(count) + " residuals over shifts 0..2";
    return r;
}

CheckResult check_oracle(long n, long l, long horizon) {
    CheckResult r = compare_sequences("formula_equals_brute_force" + tag(n) + " l=" + std::to_string(l),
                                      metallic_hankel_formula(n, l, horizon), metallic_hankel_brute(n, l, horizon));
    return r;
}

bool is_suite(const std::string& s) {
    for (const char* name : {"thmA", "thmB", "thmC", "thmD", "thm51", "symmetries", "baselines", "all"})
        if (s == name) return true;
    return false;
}

std::vector<CheckResult> run_suite(const std::string& suite, long n) {
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<CheckResult> out;
    auto add = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    const bool all = suite == "all";
    const long P = metallic_period(n);
    if (all || suite == "thmA") out.push_back(check_hfraction_closed_form(n));
    if (all || suite == "thmB")
        for (long l = 0; l <= n + 1; ++l) {
            out.push_back(check_value_set_and_periodicity(n, l, 2));
            out.push_back(check_oracle(n, l, P + 2 * n + 3));
        }
    if (all || suite == "thmC") {
        for (long l = 0; l <= n + 1; ++l)
            out.push_back(summarize_residuals("gale_robinson" + tag(n) + " l=" + std::to_string(l),
                                              check_gale_robinson(n, l, P)));
        if (n == 1) out.push_back(check_somos4_golden());
    }
    if (all || suite == "thmD")
        for (long l = 0; l <= n; ++l) out.push_back(check_contiguity(n, l, 4 * n * (n + 1)));
    if ((all || suite == "thm51") && n >= 3) {
        add(check_explicit_values(n));
        add(check_profile_identities(n));
    }
    if ((all || suite == "symmetries") && n >= 3) add(check_hfraction_symmetries(n));
    return out;
}

std::vector<CheckResult> run_suites(const std::string& suite, long n_lo, long n_hi) {
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
    std::vector<CheckResult> out;
    if (suite != "baselines")
        for (long n = n_lo; n <= n_hi; ++n) {
            auto v = run_suite(suite, n);
            out.insert(out.end(), v.begin(), v.end());
        }
    if (suite == "baselines" || suite == "all") {
        auto v = baseline_catalan_motzkin();
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace qh
