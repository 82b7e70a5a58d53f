#pragma once

#include "qh/laurent.hpp"
#include "qh/polynomial.hpp"
#include "qh/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

// ---------------------------------------------------------------------------
// Generic continued fractions
//   lead + num_0/(den_0 + num_1/(den_1 + ...))
// with an optional cycle repeated forever after the preamble.

struct CFTerm {
    LaurentPoly num;
    LaurentPoly den;
};

struct CFTermList {
    Domain domain = Domain::integers();
    LaurentPoly lead;
    std::vector<CFTerm> preamble;
    std::vector<CFTerm> cycle;

    bool periodic() const { return !cycle.empty(); }
};

// Raised for ill-posed or non-convergent fractions; term is the offending index.
class CFEvalError : public std::domain_error {
public:
    CFEvalError(const std::string& what, size_t term) : std::domain_error(what), term_(term) {}
    size_t term() const { return term_; }

private:
    size_t term_;
};

TruncatedSeries eval_cf(const CFTermList& cf, long N);

// ---------------------------------------------------------------------------
// Hankel continued fractions (H-fractions)
//   F = v_0 q^{k_0}/(D_0 - v_1 q^{k_0+k_1+2}/(D_1 - v_2 q^{k_1+k_2+2}/(D_2 - ...)))
// A term stores a = -v as produced by the quadratic algorithm, so the head
// numerator is -a_0 q^{k_0} and the later ones are a_j q^{k_{j-1}+k_j+2}.

struct HFractionTerm {
    long k = 0;
    Scalar a;
    Scalar v;
    Polynomial D;

    bool operator==(const HFractionTerm& o) const { return k == o.k && a == o.a && v == o.v && D == o.D; }
    bool operator!=(const HFractionTerm& o) const { return !(*this == o); }
};

HFractionTerm make_hterm(long k, const Scalar& a, Polynomial D);
// Checks a != 0, D(0) = 1, deg D <= k + 1.
void validate_hterm(const HFractionTerm& t);

struct PeriodicHFraction {
    Domain domain = Domain::integers();
    int delta = 2;
    HFractionTerm head;
    std::vector<HFractionTerm> preamble;
    std::vector<HFractionTerm> cycle;

    bool finite() const { return cycle.empty(); }
    size_t offset() const { return 1 + preamble.size(); }
    size_t period() const { return cycle.size(); }
    // Number of terms when finite.
    size_t length() const { return 1 + preamble.size(); }
    // Term i of the full sequence: 0 is the head.
    const HFractionTerm& term(size_t i) const;
    std::vector<HFractionTerm> unroll(size_t count) const;
    bool operator==(const PeriodicHFraction& o) const {
        return domain == o.domain && delta == o.delta && head == o.head && preamble == o.preamble &&
               cycle == o.cycle;
    }
    bool operator!=(const PeriodicHFraction& o) const { return !(*this == o); }
};

// Shortest preamble and shortest period describing head, preamble, cycle...
PeriodicHFraction canonical_hfraction(Domain d, HFractionTerm head, std::vector<HFractionTerm> preamble,
                                      std::vector<HFractionTerm> cycle);

// Numerator of term i given the k of term i-1 (ignored for the head).
LaurentPoly hterm_numerator(const HFractionTerm& t, long prev_k, bool is_head);
CFTermList to_cf_terms(const PeriodicHFraction& h);
CFTermList to_cf_terms(const std::vector<HFractionTerm>& terms);

enum class ExpansionStop { remainder_zero, precision_exhausted, max_terms };
std::string to_string(ExpansionStop s);

struct HFractionPrefix {
    Domain domain = Domain::integers();
    std::vector<HFractionTerm> terms;
    ExpansionStop stop = ExpansionStop::precision_exhausted;
    // Input coefficients consumed by the emitted terms: sum of 2k_j + 2.
    long precision_used = 0;

    bool complete() const { return stop == ExpansionStop::remainder_zero; }
};

HFractionPrefix greedy_hfraction(const TruncatedSeries& f, size_t max_terms);

// ---------------------------------------------------------------------------
// Artin expansion f = 1/(a_1(1/q) + 1/(a_2(1/q) + ...)) for f(0) = 0.

struct ArtinQuotient {
    // c[r] is the coefficient of q^{-r}, r = 0..m; c[m] != 0 and m >= 1.
    std::vector<Scalar> c;

    long m() const { return static_cast<long>(c.size()) - 1; }
    long low() const;
    bool operator==(const ArtinQuotient& o) const { return c == o.c; }
};

struct RegularCF {
    Domain domain = Domain::integers();
    ArtinQuotient a0;  // polynomial part; zero for f(0) = 0
    std::vector<ArtinQuotient> quotients;
    ExpansionStop stop = ExpansionStop::precision_exhausted;
};

RegularCF artin_expand(const TruncatedSeries& f, size_t max_quotients);
// Quotients of q*G for the H-fraction of G, one per term.
RegularCF hf_to_artin(const std::vector<HFractionTerm>& terms, Domain d);
RegularCF hf_to_artin(const PeriodicHFraction& h, size_t count);
// Inverse of hf_to_artin; throws std::invalid_argument on a constant quotient.
HFractionPrefix artin_to_hf(const RegularCF& r);

}  // namespace qh
