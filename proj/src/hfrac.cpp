#include "qh/hfrac.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace qh {

namespace {

Polynomial q_pow(const Domain& d, long k) { return Polynomial::monomial(d, 1, k); }
Polynomial cst(const Domain& d, long c) { return Polynomial::constant(d, d.from_int(c)); }

QuadraticModel to_field(const QuadraticModel& m) {
    if (m.domain().is_field()) return m;
    return m.reduced(Domain::rationals());
}

}  // namespace

AlgStepResult alg_step(const QuadraticModel& input) {
    QuadraticModel m = to_field(input);
    const Domain& d = m.domain();
    if (m.A.is_zero()) throw std::domain_error("alg_step: A = 0, the fraction has already terminated");
    m.validate();
    auto lt = *m.A.lowest_term();
    const long k = lt.k;
    const Scalar a = lt.a;

    // D from the first k+2 coefficients of a B/(A/q^k) - a c_1 q^{k+1}.
    TruncatedSeries Ared = TruncatedSeries::from_polynomial(m.A.shift_down(k), k + 2);
    TruncatedSeries ratio = TruncatedSeries::from_polynomial(m.B, k + 2) * series_invert(Ared);
    Polynomial D = ratio.to_polynomial().scaled(a) - Polynomial::monomial(d, d.mul(a, m.C.coeff(1)), k + 1);
    if (D.coeff(0) != 1) throw std::domain_error("alg_step: D(0) != 1, model is corrupted");

    const Scalar ainv = d.inv(a);
    Polynomial numA = -(D * D * m.A).scaled(ainv) + (m.B * D).shift_up(k) - m.C.scaled(a).shift_up(2 * k);
    Polynomial nextA;
    try {
        nextA = numA.shift_down(2 * k + 2);
    } catch (const std::domain_error&) {
        throw std::domain_error("alg_step: inexact division by q^" + std::to_string(2 * k + 2) + " in A*");
    }
    Polynomial nextB = (m.A * D).shift_down(k).scaled(d.mul(d.from_int(2), ainv)) - m.B;
    Polynomial nextC = -m.A.shift_up(2).scaled(ainv);
    return {{nextA, nextB, nextC}, k, a, D};
}

std::string to_string(CycleStatus s) {
    switch (s) {
    case CycleStatus::periodic: return "periodic";
    case CycleStatus::finite: return "finite";
    case CycleStatus::no_cycle: return "no_cycle";
    }
    return "?";
}

size_t default_max_steps(long n) { return static_cast<size_t>(12 * (6 * n - 4) + 24); }

QuadraticExpansion hfraction_of_quadratic(const QuadraticModel& input, size_t max_steps) {
    QuadraticModel m = to_field(input);
    m.validate();
    const Domain& d = m.domain();
    QuadraticExpansion out;
    std::unordered_map<std::string, size_t> seen;
    std::vector<HFractionTerm> terms;

    auto finish = [&](std::vector<HFractionTerm> pre, std::vector<HFractionTerm> cyc) {
        HFractionTerm head = terms.front();
        out.fraction = canonical_hfraction(d, head, std::move(pre), std::move(cyc));
    };

    for (size_t j = 0;; ++j) {
        if (m.A.is_zero()) {
            out.status = CycleStatus::finite;
            finish({terms.begin() + 1, terms.end()}, {});
            return out;
        }
        auto [it, fresh] = seen.emplace(m.key(), j);
        if (!fresh) {
            size_t p = it->second;
            out.status = CycleStatus::periodic;
            out.repeat_from = p;
            out.repeat_at = j;
            if (p >= 1) {
                finish({terms.begin() + 1, terms.begin() + p}, {terms.begin() + p, terms.end()});
            } else {
                std::vector<HFractionTerm> cyc(terms.begin() + 1, terms.end());
                cyc.push_back(terms.front());
                finish({}, std::move(cyc));
            }
            return out;
        }
        if (j >= max_steps) {
            out.status = CycleStatus::no_cycle;
            finish({terms.begin() + 1, terms.end()}, {});
            return out;
        }
        AlgStepResult r = alg_step(m);
        out.trace.push_back({m, r.k, r.a, r.D});
        terms.push_back(make_hterm(r.k, r.a, r.D));
        m = std::move(r.next_model);
    }
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

struct TemplateTerm {
    long sign;
    long exponent;
    Polynomial D;
};

// Head numerator 1 (k_0 = 0, a_0 = -1) followed by a cycle given by the
// numerators sign*q^exponent; k_j follows from exponent = k_{j-1} + k_j + 2.
PeriodicHFraction from_template(const Polynomial& head_den, const std::vector<TemplateTerm>& cyc) {
    const Domain& d = head_den.domain();
    HFractionTerm head = make_hterm(0, d.from_int(-1), head_den);
    std::vector<HFractionTerm> terms;
    long prev = 0;
    for (const auto& t : cyc) {
        long k = t.exponent - prev - 2;
        if (k < 0) throw std::logic_error("template numerator exponent too small");
        terms.push_back(make_hterm(k, d.from_int(t.sign), t.D));
        validate_hterm(terms.back());
        prev = k;
    }
    if (prev != 0) throw std::logic_error("template cycle does not close on k = 0");
    return canonical_hfraction(d, head, {}, std::move(terms));
}

}  // namespace

PeriodicHFraction block_hfraction(long n) {
    if (n < 2) throw std::invalid_argument("block_hfraction requires n >= 2");
    const Domain Q = Domain::rationals();
    Polynomial one = cst(Q, 1), q = q_pow(Q, 1);
    Polynomial br = angle_bracket(n, Q);
    auto qi = [&](long m) { return q_int(m, Q); };
    std::vector<TemplateTerm> c;
    for (long i = 0; i <= n - 3; ++i) {
        c.push_back({1, n - i, qi(n - i)});
        c.push_back({1, n, qi(i + 2) - q});
        c.push_back({1, i + 2, one - q});
    }
    c.push_back({1, 2, qi(2)});
    c.push_back({1, n, qi(n) - q});
    c.push_back({1, n, one});
    c.push_back({-1, n + 1, br + q_pow(Q, n + 1)});
    c.push_back({1, 2 * n + 1, br});
    c.push_back({1, 2 * n + 1, br + q_pow(Q, n + 1)});
    c.push_back({-1, n + 1, one});
    for (long i = 0; i <= n - 3; ++i) {
        c.push_back({1, n - i, qi(n - i) - q});
        c.push_back({1, n, qi(i + 2)});
        c.push_back({1, i + 2, one - q});
    }
    c.push_back({1, 2, one});
    return from_template(one - q, c);
}

PeriodicHFraction expected_hfraction(long n) {
    const Domain Q = Domain::rationals();
    if (n == 1) {
        return from_template(cst(Q, 1), {{-1, 2, Polynomial(Q, {1, 1})},
                                         {1, 3, Polynomial(Q, {1, 1, -1})},
                                         {1, 3, Polynomial(Q, {1, 1})}});
    }
    if (n == 2) {
        return from_template(Polynomial(Q, {1, -1}), {{1, 2, Polynomial(Q, {1, 1})},
                                                      {1, 2, cst(Q, 1)},
                                                      {1, 2, cst(Q, 1)},
                                                      {-1, 3, Polynomial(Q, {1, 0, 2})},
                                                      {1, 5, Polynomial(Q, {1, 0, 2, -1})},
                                                      {1, 5, Polynomial(Q, {1, 0, 2})},
                                                      {-1, 3, cst(Q, 1)},
                                                      {1, 2, cst(Q, 1)}});
    }
    if (n < 1) throw std::invalid_argument("expected_hfraction requires n >= 1");
    return block_hfraction(n);
}

QuadraticModel shift_model(const QuadraticModel& m, const Scalar& f0) {
    const Domain& d = m.domain();
    Scalar c = d.normalize(f0);
    Polynomial num = m.A + m.B.scaled(c) + m.C.scaled(d.mul(c, c));
    if (num.coeff(0) != 0) throw std::domain_error("shift_model: f0 is not the constant term of the root");
    QuadraticModel r{num.shift_down(1), m.B + m.C.scaled(d.mul(d.from_int(2), c)), m.C.shift_up(1)};
    Scalar b0 = r.B.coeff(0);
    if (b0 != 1) r = r.scaled(d.inv(b0));
    return r;
}

QuadraticModel shifted_metallic_model(long n, long l) {
    if (n < 1) throw std::invalid_argument("shifted_metallic_model requires n >= 1");
    if (l < 0 || l > n + 1) throw std::invalid_argument("shift l out of range 0..n+1");
    const Domain Z = Domain::integers();
    Polynomial one = cst(Z, 1);
    Polynomial qm1 = Polynomial(Z, {-1, 1});
    Polynomial tri = Polynomial(Z, {1, -1, 1});
    if (l == n + 1) {
        Polynomial Bn = -(tri + Polynomial(Z, {1, -3, 1}) * q_pow(Z, n));
        return {-q_pow(Z, n - 1), poly_divexact(Bn, qm1), q_pow(Z, n + 2)};
    }
    Polynomial An = q_pow(Z, l + 1) - tri * (q_pow(Z, n) - q_pow(Z, n - l) + one);
    Polynomial Bn = q_pow(Z, l + 1).scaled(2) - tri * (q_pow(Z, n) + one);
    return {poly_divexact(An, qm1 * qm1), poly_divexact(Bn, qm1), q_pow(Z, l + 1)};
}

QuadraticModel iterated_shift_model(long n, long l, Domain d) {
    QuadraticModel m = metallic_model(n, d);
    for (long i = 0; i < l; ++i) m = shift_model(m, d.neg(m.A.coeff(0)));
    return m;
}

long shift_cut(long n, long l) {
    if (l < 1 || l > n + 1) throw std::invalid_argument("shift l out of range 1..n+1");
    if (l <= n - 1) return 3 * l;
    return l == n ? 3 * n - 1 : 3 * n;
}

PeriodicHFraction hfraction_of_shift(long n, long l) {
    const long cut = shift_cut(n, l);
    PeriodicHFraction base = expected_hfraction(n);
    const Domain& d = base.domain;
    HFractionTerm head = base.term(cut);
    // The new head numerator is a q^k rather than a q^{k_prev + k + 2}.
    head = make_hterm(head.k, d.neg(head.a), head.D);
    std::vector<HFractionTerm> cyc;
    for (size_t i = 0; i < base.period(); ++i) cyc.push_back(base.term(cut + 1 + i));
    return canonical_hfraction(d, head, {}, std::move(cyc));
}

PeriodicHFraction metallic_hfraction(long n, long l) { return l == 0 ? expected_hfraction(n) : hfraction_of_shift(n, l); }

// ---------------------------------------------------------------------------
// Profiles and determinants

bool SupportProfile::contains(long j) const {
    for (long v : s) {
        if (v == j) return true;
        if (v > j) return false;
    }
    throw std::domain_error("support profile too short for j = " + std::to_string(j));
}

SupportProfile support_profile(const PeriodicHFraction& h, size_t horizon) {
    if (horizon < 1) throw std::invalid_argument("support_profile: horizon must be >= 1");
    SupportProfile p;
    p.period_len = h.period();
    auto terms = h.unroll(horizon);
    p.s.push_back(0);
    p.eps.push_back(0);
    for (const auto& t : terms) {
        p.k.push_back(t.k);
        p.s.push_back(p.s.back() + 1 + t.k);
        p.eps.push_back(p.eps.back() + t.k * (t.k + 1) / 2);
    }
    return p;
}

Scalar hankel_from_hfraction(const PeriodicHFraction& h, long j) {
    const Domain& d = h.domain;
    if (j < 0) throw std::invalid_argument("negative Hankel index");
    if (j == 0) return d.from_int(1);
    size_t need = static_cast<size_t>(j) + 1;
    if (h.finite() && need > h.length()) need = h.length();
    auto terms = h.unroll(need);
    std::vector<long> s{0};
    long eps = 0;
    for (size_t p = 0; p < terms.size(); ++p) {
        long sp = s.back() + 1 + terms[p].k;
        eps += terms[p].k * (terms[p].k + 1) / 2;
        s.push_back(sp);
        if (sp < j) continue;
        if (sp > j) return d.from_int(0);
        Scalar r = d.from_int(eps % 2 ? -1 : 1);
        for (size_t i = 0; i <= p; ++i) r = d.mul(r, d.pow(terms[i].v, static_cast<unsigned long>(sp - s[i])));
        return r;
    }
    if (h.finite()) return d.from_int(0);
    throw std::domain_error("H-fraction too short for Hankel index " + std::to_string(j));
}

namespace {

// Delta_{s_{p+1}} = Delta_{s_p} (-1)^{k_p(k_p+1)/2} (v_0 ... v_p)^{k_p+1}.
// get(p) returns nullptr past the last available term.
std::vector<Scalar> hankel_walk(const Domain& d, long horizon, const std::function<const HFractionTerm*(size_t)>& get,
                                bool exhausted_means_zero) {
    std::vector<Scalar> out(std::max<long>(horizon, 0), d.from_int(0));
    if (horizon <= 0) return out;
    out[0] = d.from_int(1);
    Scalar delta = d.from_int(1), V = d.from_int(1);
    long s = 0;
    for (size_t p = 0;; ++p) {
        const HFractionTerm* t = get(p);
        if (!t) {
            if (!exhausted_means_zero && s < horizon - 1)
                throw std::domain_error("H-fraction prefix certifies Hankel values only up to index " +
                                        std::to_string(s));
            return out;
        }
        V = d.mul(V, t->v);
        Scalar mult = d.pow(V, static_cast<unsigned long>(t->k + 1));
        if ((t->k * (t->k + 1) / 2) % 2) mult = d.neg(mult);
        delta = d.mul(delta, mult);
        s += t->k + 1;
        if (s >= horizon) return out;
        out[s] = delta;
    }
}

}  // namespace

std::vector<Scalar> hankel_sequence_from_hfraction(const PeriodicHFraction& h, long horizon) {
    return hankel_walk(
        h.domain, horizon,
        [&](size_t p) -> const HFractionTerm* {
            if (h.finite() && p >= h.length()) return nullptr;
            return &h.term(p);
        },
        true);
}

std::vector<Scalar> hankel_sequence_from_prefix(const HFractionPrefix& pre, long horizon) {
    return hankel_walk(
        pre.domain, horizon,
        [&](size_t p) -> const HFractionTerm* { return p < pre.terms.size() ? &pre.terms[p] : nullptr; },
        pre.complete());
}

}  // namespace qh
