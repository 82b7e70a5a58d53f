#include "qh/cfrac.hpp"

#include <algorithm>
#include <limits>

namespace qh {

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct Convergents {
    LaurentPoly p_prev, q_prev, p, q;
    long numerator_valuation = 0;
};

}  // namespace

TruncatedSeries eval_cf(const CFTermList& cf, long N) {
    const Domain& d = cf.domain;
    LaurentPoly one(Polynomial::constant(d, 1));
    Convergents cv{one, LaurentPoly(d), cf.lead.is_zero() ? LaurentPoly(d) : cf.lead, one};
    if (cf.preamble.empty() && cf.cycle.empty()) return laurent_ratio_to_series(cv.p, cv.q, N);

    auto push = [&](const CFTerm& t, size_t index) {
        if (t.den.is_zero()) throw CFEvalError("zero denominator", index);
        if (t.num.is_zero()) throw CFEvalError("zero numerator", index);
        LaurentPoly np = t.den * cv.p + t.num * cv.p_prev;
        LaurentPoly nq = t.den * cv.q + t.num * cv.q_prev;
        if (nq.is_zero()) throw CFEvalError("vanishing convergent denominator", index);
        cv.numerator_valuation += t.num.valuation();
        cv.p_prev = std::move(cv.p);
        cv.q_prev = std::move(cv.q);
        cv.p = std::move(np);
        cv.q = std::move(nq);
    };
    // Valuation of the difference between the last two convergents.
    auto gap = [&]() {
        if (cv.q_prev.is_zero()) return std::numeric_limits<long>::min();
        return cv.numerator_valuation - cv.q.valuation() - cv.q_prev.valuation();
    };

    size_t index = 0;
    for (const auto& t : cf.preamble) push(t, index++);
    if (!cf.periodic()) return laurent_ratio_to_series(cv.p, cv.q, N);

    const size_t max_passes = 4096;
    long previous_min = std::numeric_limits<long>::min();
    for (size_t pass = 0; pass < max_passes; ++pass) {
        long pass_min = std::numeric_limits<long>::max();
        for (const auto& t : cf.cycle) {
            push(t, index++);
            pass_min = std::min(pass_min, gap());
        }
        if (pass_min >= N && pass_min > previous_min) return laurent_ratio_to_series(cv.p, cv.q, N);
        previous_min = pass_min;
    }
    throw CFEvalError("continued fraction does not converge to the requested precision", index);
}

// ---------------------------------------------------------------------------
// H-fraction terms

HFractionTerm make_hterm(long k, const Scalar& a, Polynomial D) {
    const Domain& d = D.domain();
    HFractionTerm t{k, d.normalize(a), d.neg(a), std::move(D)};
    return t;
}

void validate_hterm(const HFractionTerm& t) {
    if (t.k < 0) throw std::invalid_argument("H-fraction term with negative k");
    if (t.a == 0) throw std::invalid_argument("H-fraction term with a = 0");
    if (t.D.coeff(0) != 1) throw std::invalid_argument("H-fraction term with D(0) != 1");
    if (t.D.degree() > t.k + 1) throw std::invalid_argument("H-fraction term with deg D > k + 1");
}

const HFractionTerm& PeriodicHFraction::term(size_t i) const {
    if (i == 0) return head;
    if (i <= preamble.size()) return preamble[i - 1];
    if (cycle.empty()) throw std::out_of_range("finite H-fraction has only " + std::to_string(length()) + " terms");
    return cycle[(i - 1 - preamble.size()) % cycle.size()];
}

std::vector<HFractionTerm> PeriodicHFraction::unroll(size_t count) const {
    if (finite()) count = std::min(count, length());
    std::vector<HFractionTerm> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(term(i));
    return out;
}

PeriodicHFraction canonical_hfraction(Domain d, HFractionTerm head, std::vector<HFractionTerm> preamble,
                                      std::vector<HFractionTerm> cycle) {
    size_t L = cycle.size();
    for (size_t p = 1; p < L; ++p) {
        if (L % p) continue;
        bool ok = true;
        for (size_t i = 0; i + p < L && ok; ++i) ok = cycle[i] == cycle[i + p];
        if (ok) {
            cycle.resize(p);
            break;
        }
    }
    while (!cycle.empty() && !preamble.empty() && preamble.back() == cycle.back()) {
        std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
        preamble.pop_back();
    }
    PeriodicHFraction h;
    h.domain = d;
    h.head = std::move(head);
    h.preamble = std::move(preamble);
    h.cycle = std::move(cycle);
    return h;
}

LaurentPoly hterm_numerator(const HFractionTerm& t, long prev_k, bool is_head) {
    const Domain& d = t.D.domain();
    if (is_head) return LaurentPoly(Polynomial::constant(d, d.neg(t.a)), t.k);
    return LaurentPoly(Polynomial::constant(d, t.a), prev_k + t.k + 2);
}

CFTermList to_cf_terms(const std::vector<HFractionTerm>& terms) {
    if (terms.empty()) throw std::invalid_argument("empty H-fraction");
    CFTermList cf;
    cf.domain = terms.front().D.domain();
    cf.lead = LaurentPoly(cf.domain);
    for (size_t i = 0; i < terms.size(); ++i)
        cf.preamble.push_back({hterm_numerator(terms[i], i ? terms[i - 1].k : 0, i == 0), LaurentPoly(terms[i].D)});
    return cf;
}

CFTermList to_cf_terms(const PeriodicHFraction& h) {
    std::vector<HFractionTerm> lead_terms{h.head};
    lead_terms.insert(lead_terms.end(), h.preamble.begin(), h.preamble.end());
    // The first cycle pass sees a different predecessor unless the k values match.
    if (!h.cycle.empty() && lead_terms.back().k != h.cycle.back().k)
        lead_terms.insert(lead_terms.end(), h.cycle.begin(), h.cycle.end());
    CFTermList cf = to_cf_terms(lead_terms);
    for (size_t i = 0; i < h.cycle.size(); ++i) {
        long prev = i ? h.cycle[i - 1].k : h.cycle.back().k;
        cf.cycle.push_back({hterm_numerator(h.cycle[i], prev, false), LaurentPoly(h.cycle[i].D)});
    }
    return cf;
}

std::string to_string(ExpansionStop s) {
    switch (s) {
    case ExpansionStop::remainder_zero: return "remainder_zero";
    case ExpansionStop::precision_exhausted: return "precision_exhausted";
    case ExpansionStop::max_terms: return "max_terms";
    }
    return "?";
}

HFractionPrefix greedy_hfraction(const TruncatedSeries& f, size_t max_terms) {
    const Domain& d = f.domain();
    if (!d.is_field()) return greedy_hfraction(f.reduced(Domain::rationals()), max_terms);
    if (f.zero_to_precision()) throw std::invalid_argument("greedy_hfraction: series is zero to precision");
    HFractionPrefix out;
    out.domain = d;
    TruncatedSeries cur = f;
    while (true) {
        if (out.terms.size() >= max_terms) {
            out.stop = ExpansionStop::max_terms;
            break;
        }
        auto lt = cur.lowest_term();
        if (!lt) {
            out.stop = ExpansionStop::remainder_zero;
            break;
        }
        long k = lt->k;
        if (cur.precision() < 2 * k + 2) {
            out.stop = ExpansionStop::precision_exhausted;
            break;
        }
        // v q^k / F = D - q^{k+2} F_next
        TruncatedSeries h = series_invert(cur.shift_down(k)).scaled(lt->a);
        Polynomial D = h.truncated(k + 2).to_polynomial();
        TruncatedSeries rest = h - TruncatedSeries::from_polynomial(D, h.precision());
        out.terms.push_back(make_hterm(k, d.neg(lt->a), D));
        out.precision_used += 2 * k + 2;
        cur = -rest.shift_down(k + 2);
        if (cur.precision() == 0) {
            out.stop = ExpansionStop::precision_exhausted;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Artin expansion and the dictionary

long ArtinQuotient::low() const {
    for (size_t r = 0; r < c.size(); ++r)
        if (c[r] != 0) return static_cast<long>(r);
    return -1;
}

RegularCF artin_expand(const TruncatedSeries& f, size_t max_quotients) {
    const Domain& d = f.domain();
    if (!d.is_field()) return artin_expand(f.reduced(Domain::rationals()), max_quotients);
    if (f.precision() == 0 || f.coeff(0) != 0) throw std::invalid_argument("artin_expand: f(0) must be 0");
    if (f.zero_to_precision()) throw std::invalid_argument("artin_expand: series is zero to precision");
    RegularCF out;
    out.domain = d;
    out.a0.c = {Scalar(0)};
    TruncatedSeries cur = f;
    while (true) {
        if (out.quotients.size() >= max_quotients) {
            out.stop = ExpansionStop::max_terms;
            break;
        }
        auto lt = cur.lowest_term();
        if (!lt) {
            out.stop = ExpansionStop::remainder_zero;
            break;
        }
        long v = lt->k;
        if (cur.precision() - v < v + 1) {
            out.stop = ExpansionStop::precision_exhausted;
            break;
        }
        TruncatedSeries w = series_invert(cur.shift_down(v));
        ArtinQuotient a;
        a.c.resize(v + 1);
        for (long r = 0; r <= v; ++r) a.c[r] = w.coeff(v - r);
        out.quotients.push_back(std::move(a));
        cur = w.tail(v + 1).shift_up(1);
        if (cur.precision() <= 1) {
            out.stop = ExpansionStop::precision_exhausted;
            break;
        }
    }
    return out;
}

RegularCF hf_to_artin(const std::vector<HFractionTerm>& terms, Domain d) {
    RegularCF out;
    out.domain = d;
    out.a0.c = {Scalar(0)};
    Scalar prev_c;
    for (size_t t = 0; t < terms.size(); ++t) {
        const HFractionTerm& h = terms[t];
        long m = h.k + 1;
        Scalar lead = t == 0 ? d.inv(h.v) : d.neg(d.inv(d.mul(h.v, prev_c)));
        ArtinQuotient a;
        a.c.resize(m + 1);
        for (long r = 0; r <= m; ++r) a.c[r] = d.mul(lead, h.D.coeff(m - r));
        out.quotients.push_back(std::move(a));
        prev_c = lead;
    }
    return out;
}

RegularCF hf_to_artin(const PeriodicHFraction& h, size_t count) {
    RegularCF r = hf_to_artin(h.unroll(count), h.domain);
    if (h.finite() && count >= h.length()) r.stop = ExpansionStop::remainder_zero;
    return r;
}

HFractionPrefix artin_to_hf(const RegularCF& r) {
    const Domain& d = r.domain;
    HFractionPrefix out;
    out.domain = d;
    out.stop = r.stop;
    Scalar prev_c;
    for (size_t j = 0; j < r.quotients.size(); ++j) {
        const ArtinQuotient& a = r.quotients[j];
        long m = a.m();
        if (m < 1 || a.c[m] == 0)
            throw std::invalid_argument("malformed Artin quotient at index " + std::to_string(j + 1));
        const Scalar& lead = a.c[m];
        std::vector<Scalar> D(m + 1);
        for (long i = 0; i <= m; ++i) D[i] = d.div(a.c[m - i], lead);
        Scalar v = j == 0 ? d.inv(lead) : d.neg(d.inv(d.mul(prev_c, lead)));
        out.terms.push_back(make_hterm(m - 1, d.neg(v), Polynomial(d, std::move(D))));
        out.precision_used += 2 * m;
        prev_c = lead;
    }
    return out;
}

}  // namespace qh
