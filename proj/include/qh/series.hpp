#pragma once

#include "qh/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qh {

// f_0 + f_1 q + ... + f_{N-1} q^{N-1} + O(q^N). Coefficients at index >= N
// are unknown. A series is only ever "zero to precision", never zero.
class TruncatedSeries {
public:
    TruncatedSeries(Domain d, std::vector<Scalar> coeffs, long precision);
    TruncatedSeries(Domain d, std::vector<Scalar> coeffs);
    static TruncatedSeries from_polynomial(const Polynomial& p, long precision);
    static TruncatedSeries zero(Domain d, long precision);

    const Domain& domain() const { return dom_; }
    long precision() const { return static_cast<long>(c_.size()); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    // Throws std::out_of_range when i >= precision.
    const Scalar& coeff(long i) const;

    // Lowest nonzero term, or nullopt when zero to precision.
    std::optional<LowestTerm> lowest_term() const;
    bool zero_to_precision() const { return !lowest_term().has_value(); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Scalar& s) const;

    // Multiplication by q^k raises the precision by k.
    TruncatedSeries shift_up(long k) const;
    // Division by q^k lowers the precision by k; the dropped terms must vanish.
    TruncatedSeries shift_down(long k) const;
    TruncatedSeries truncated(long n) const;
    // Coefficients f_l, f_{l+1}, ...; the series F^{(l)} of a shift by l.
    TruncatedSeries tail(long l) const;
    TruncatedSeries reduced(const Domain& d) const;
    Polynomial to_polynomial() const { return Polynomial(dom_, c_); }

    bool operator==(const TruncatedSeries& o) const { return dom_ == o.dom_ && c_ == o.c_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Domain dom_;
    std::vector<Scalar> c_;
};

// Requires F(0) != 0.
TruncatedSeries series_invert(const TruncatedSeries& f);
// num / den where den may have positive valuation v; the result loses v
// orders of precision and num must vanish below v.
TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den);

}  // namespace qh
