#include "qh/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace qh {

LaurentPoly::LaurentPoly(Polynomial p, long shift) : poly_(std::move(p)), shift_(shift) { normalize(); }

void LaurentPoly::normalize() {
    auto lt = poly_.lowest_term();
    if (!lt) {
        shift_ = 0;
        return;
    }
    if (lt->k > 0) {
        poly_ = poly_.shift_down(lt->k);
        shift_ += lt->k;
    }
}

Polynomial LaurentPoly::to_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("Laurent polynomial has negative powers: " + to_string());
    return poly_.shift_up(shift_);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long s = std::min(shift_, o.shift_);
    return LaurentPoly(poly_.shift_up(shift_ - s) + o.poly_.shift_up(o.shift_ - s), s);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly(domain());
    return LaurentPoly(poly_ * o.poly_, shift_ + o.shift_);
}

std::string LaurentPoly::to_string() const {
    if (shift_ == 0) return poly_.to_string();
    return "q^" + std::to_string(shift_) + "*(" + poly_.to_string() + ")";
}

TruncatedSeries laurent_ratio_to_series(const LaurentPoly& num, const LaurentPoly& den, long N) {
    if (den.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
    const Domain& d = den.domain();
    if (num.is_zero()) return TruncatedSeries::zero(d, N);
    long e = num.shift() - den.shift();
    if (e < 0) throw std::domain_error("quotient has negative valuation " + std::to_string(e));
    long m = std::max<long>(N - e, 0);
    TruncatedSeries p = TruncatedSeries::from_polynomial(num.poly(), m);
    TruncatedSeries q = TruncatedSeries::from_polynomial(den.poly(), m);
    return (p * series_invert(q)).shift_up(e).truncated(N);
}

}  // namespace qh
