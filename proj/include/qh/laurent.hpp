#pragma once

#include "qh/polynomial.hpp"
#include "qh/series.hpp"

#include <string>
#include <vector>

namespace qh {

// q^shift * poly, kept with poly(0) != 0 unless zero.
class LaurentPoly {
public:
    explicit LaurentPoly(Domain d = Domain::rationals()) : poly_(d) {}
    LaurentPoly(Polynomial p, long shift = 0);

    const Domain& domain() const { return poly_.domain(); }
    const Polynomial& poly() const { return poly_; }
    long shift() const { return shift_; }
    bool is_zero() const { return poly_.is_zero(); }
    bool is_polynomial() const { return is_zero() || shift_ >= 0; }
    long valuation() const { return shift_; }
    Polynomial to_polynomial() const;
    Scalar coeff(long e) const { return poly_.coeff(e - shift_); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const { return LaurentPoly(-poly_, shift_); }
    LaurentPoly shifted(long k) const { return LaurentPoly(poly_, shift_ + k); }

    bool operator==(const LaurentPoly& o) const { return poly_ == o.poly_ && shift_ == o.shift_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    void normalize();
    Polynomial poly_;
    long shift_ = 0;
};

// Expand num/den as a power series to precision N. Throws when the quotient
// has negative valuation.
TruncatedSeries laurent_ratio_to_series(const LaurentPoly& num, const LaurentPoly& den, long N);

}  // namespace qh
