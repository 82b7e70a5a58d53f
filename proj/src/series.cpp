#include "qh/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qh {

TruncatedSeries::TruncatedSeries(Domain d, std::vector<Scalar> coeffs, long precision) : dom_(d) {
    if (precision < 0) throw std::invalid_argument("negative precision");
    coeffs.resize(static_cast<size_t>(precision));
    c_ = std::move(coeffs);
    for (auto& x : c_) x = dom_.normalize(x);
}

TruncatedSeries::TruncatedSeries(Domain d, std::vector<Scalar> coeffs)
    : TruncatedSeries(d, coeffs, static_cast<long>(coeffs.size())) {}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, long precision) {
    return TruncatedSeries(p.domain(), p.coeffs(), precision);
}

TruncatedSeries TruncatedSeries::zero(Domain d, long precision) { return TruncatedSeries(d, {}, precision); }

const Scalar& TruncatedSeries::coeff(long i) const {
    if (i < 0 || i >= precision())
        throw std::out_of_range("coefficient " + std::to_string(i) + " beyond precision " +
                                std::to_string(precision()));
    return c_[i];
}

std::optional<LowestTerm> TruncatedSeries::lowest_term() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return LowestTerm{static_cast<long>(i), c_[i]};
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (dom_ != o.dom_) throw std::invalid_argument("mixed coefficient domains");
    long n = std::min(precision(), o.precision());
    std::vector<Scalar> r(n);
    for (long i = 0; i < n; ++i) r[i] = dom_.add(c_[i], o.c_[i]);
    return TruncatedSeries(dom_, std::move(r), n);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (dom_ != o.dom_) throw std::invalid_argument("mixed coefficient domains");
    long n = std::min(precision(), o.precision());
    std::vector<Scalar> r(n);
    for (long i = 0; i < n; ++i) r[i] = dom_.sub(c_[i], o.c_[i]);
    return TruncatedSeries(dom_, std::move(r), n);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (dom_ != o.dom_) throw std::invalid_argument("mixed coefficient domains");
    long n = std::min(precision(), o.precision());
    std::vector<Scalar> r(n);
    for (long i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; i + j < n; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return TruncatedSeries(dom_, std::move(r), n);
}

TruncatedSeries TruncatedSeries::operator-() const { return scaled(Scalar(-1)); }

TruncatedSeries TruncatedSeries::scaled(const Scalar& s) const {
    std::vector<Scalar> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return TruncatedSeries(dom_, std::move(r), precision());
}

TruncatedSeries TruncatedSeries::shift_up(long k) const {
    if (k < 0) return shift_down(-k);
    std::vector<Scalar> r(static_cast<size_t>(k));
    r.insert(r.end(), c_.begin(), c_.end());
    return TruncatedSeries(dom_, std::move(r), precision() + k);
}

TruncatedSeries TruncatedSeries::shift_down(long k) const {
    if (k < 0) return shift_up(-k);
    if (k > precision()) throw std::domain_error("shift beyond precision");
    for (long i = 0; i < k; ++i)
        if (c_[i] != 0) throw std::domain_error("series not divisible by q^" + std::to_string(k));
    return TruncatedSeries(dom_, std::vector<Scalar>(c_.begin() + k, c_.end()), precision() - k);
}

TruncatedSeries TruncatedSeries::truncated(long n) const {
    if (n > precision()) throw std::domain_error("requested precision " + std::to_string(n) + " exceeds " +
                                                 std::to_string(precision()));
    return TruncatedSeries(dom_, std::vector<Scalar>(c_.begin(), c_.begin() + n), n);
}

TruncatedSeries TruncatedSeries::tail(long l) const {
    if (l > precision()) throw std::domain_error("shift beyond precision");
    return TruncatedSeries(dom_, std::vector<Scalar>(c_.begin() + l, c_.end()), precision() - l);
}

TruncatedSeries TruncatedSeries::reduced(const Domain& d) const { return TruncatedSeries(d, c_, precision()); }

std::string TruncatedSeries::to_string() const {
    std::string s = Polynomial(dom_, c_).to_string();
    return s + " + O(q^" + std::to_string(precision()) + ")";
}

TruncatedSeries series_invert(const TruncatedSeries& f) {
    const Domain& d = f.domain();
    long n = f.precision();
    if (n == 0) return f;
    if (f.coeff(0) == 0) throw std::domain_error("series_invert: constant term is zero");
    Scalar inv0 = d.inv(f.coeff(0));
    std::vector<Scalar> g(n);
    g[0] = inv0;
    for (long i = 1; i < n; ++i) {
        Scalar s = 0;
        for (long j = 1; j <= i; ++j)
            if (f.coeffs()[j] != 0) s += f.coeffs()[j] * g[i - j];
        g[i] = d.mul(d.neg(d.normalize(s)), inv0);
    }
    return TruncatedSeries(d, std::move(g), n);
}

TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den) {
    auto lt = den.lowest_term();
    if (!lt) throw std::domain_error("series_divide: divisor is zero to precision");
    long v = lt->k;
    TruncatedSeries u = den.shift_down(v);
    TruncatedSeries nn = num.shift_down(v);
    return nn * series_invert(u);
}

}  // namespace qh
