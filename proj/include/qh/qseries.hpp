#pragma once

#include "qh/laurent.hpp"
#include "qh/polynomial.hpp"
#include "qh/series.hpp"

#include <string>
#include <vector>

namespace qh {

// [n]_q = (1 - q^n)/(1 - q). For n < 0 the result has negative powers.
LaurentPoly q_integer(long n, Domain d = Domain::integers());
// Polynomial form for n >= 0.
Polynomial q_int(long n, Domain d = Domain::integers());
// [n]_{q^{-1}} = q^{1-n} [n]_q.
LaurentPoly q_integer_reciprocal(long n, Domain d = Domain::integers());
// <n>_q = q[n]_q + (1 + q^n)(1 - q), n >= 2.
Polynomial angle_bracket(long n, Domain d = Domain::integers());

// A + B F + C F^2 = 0 with A != 0, B(0) = 1, C != 0, C(0) = 0.
struct QuadraticModel {
    Polynomial A, B, C;

    const Domain& domain() const { return A.domain(); }
    // Throws std::invalid_argument naming the violated condition.
    void validate() const;
    bool satisfies_conditions() const;
    QuadraticModel reduced(const Domain& d) const { return {A.reduced(d), B.reduced(d), C.reduced(d)}; }
    QuadraticModel scaled(const Scalar& s) const { return {A.scaled(s), B.scaled(s), C.scaled(s)}; }
    bool operator==(const QuadraticModel& o) const { return A == o.A && B == o.B && C == o.C; }
    bool operator!=(const QuadraticModel& o) const { return !(*this == o); }
    // Exact textual key, used for cycle detection.
    std::string key() const;
};

QuadraticModel metallic_model(long n, Domain d = Domain::integers());

// The unique root F with A + B F + C F^2 = O(q^N).
TruncatedSeries series_of_model(const QuadraticModel& m, long N);
// A + B F + C F^2 truncated to the precision of F.
TruncatedSeries model_residual(const QuadraticModel& m, const TruncatedSeries& f);

// Regular continued fraction of a nonnegative rational: a0; a1, ..., ak.
std::vector<mpz_class> regular_cf(const mpq_class& x);
// [x]_q for x >= 0 rational, expanded to precision N.
TruncatedSeries q_rational(const mpq_class& x, long N);

TruncatedSeries catalan_series(long N);
TruncatedSeries motzkin_series(long N);

}  // namespace qh
