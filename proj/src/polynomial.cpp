#include "qh/polynomial.hpp"

#include <stdexcept>

namespace qh {

namespace {

void require_same(const Domain& a, const Domain& b) {
    if (a != b) throw std::invalid_argument("mixed coefficient domains: " + a.name() + " and " + b.name());
}

}  // namespace

Polynomial::Polynomial(Domain d, std::vector<Scalar> coeffs) : dom_(d), c_(std::move(coeffs)) {
    for (auto& x : c_) x = dom_.normalize(x);
    trim();
}

Polynomial::Polynomial(Domain d, std::initializer_list<long> coeffs) : dom_(d) {
    for (long v : coeffs) c_.push_back(dom_.from_int(v));
    trim();
}

Polynomial Polynomial::constant(Domain d, const Scalar& c) { return Polynomial(d, std::vector<Scalar>{c}); }

Polynomial Polynomial::monomial(Domain d, const Scalar& c, long k) {
    if (k < 0) throw std::invalid_argument("negative exponent in monomial");
    std::vector<Scalar> v(static_cast<size_t>(k) + 1);
    v[k] = c;
    return Polynomial(d, std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar Polynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Scalar(0);
    return c_[i];
}

std::optional<LowestTerm> Polynomial::lowest_term() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return LowestTerm{static_cast<long>(i), c_[i]};
    return std::nullopt;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same(dom_, o.dom_);
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = dom_.add(coeff(i), o.coeff(i));
    Polynomial p(dom_);
    p.c_ = std::move(r);
    p.trim();
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same(dom_, o.dom_);
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = dom_.sub(coeff(i), o.coeff(i));
    Polynomial p(dom_);
    p.c_ = std::move(r);
    p.trim();
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same(dom_, o.dom_);
    Polynomial p(dom_);
    if (is_zero() || o.is_zero()) return p;
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    for (auto& x : r) x = dom_.normalize(x);
    p.c_ = std::move(r);
    p.trim();
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(dom_);
    p.c_.reserve(c_.size());
    for (auto& x : c_) p.c_.push_back(dom_.neg(x));
    return p;
}

Polynomial Polynomial::scaled(const Scalar& s) const {
    Polynomial p(dom_);
    Scalar sn = dom_.normalize(s);
    for (auto& x : c_) p.c_.push_back(dom_.mul(x, sn));
    p.trim();
    return p;
}

Polynomial operator*(const Scalar& s, const Polynomial& p) { return p.scaled(s); }

Polynomial Polynomial::shift_up(long k) const {
    if (k < 0) return shift_down(-k);
    Polynomial p(dom_);
    if (is_zero()) return p;
    p.c_.assign(static_cast<size_t>(k), Scalar(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

Polynomial Polynomial::shift_down(long k) const {
    if (k < 0) return shift_up(-k);
    for (long i = 0; i < k && i < static_cast<long>(c_.size()); ++i)
        if (c_[i] != 0) throw std::domain_error("polynomial not divisible by q^" + std::to_string(k));
    Polynomial p(dom_);
    if (k < static_cast<long>(c_.size())) p.c_.assign(c_.begin() + k, c_.end());
    return p;
}

Polynomial Polynomial::truncated(long n) const {
    Polynomial p(dom_);
    if (n <= 0) return p;
    p.c_.assign(c_.begin(), c_.begin() + std::min<long>(n, static_cast<long>(c_.size())));
    p.trim();
    return p;
}

Polynomial Polynomial::reduced(const Domain& d) const { return Polynomial(d, c_); }

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        Scalar c = dom_.lift(c_[i]);
        if (c == 0) continue;
        bool negative = c < 0;
        Scalar mag = negative ? Scalar(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string m = qh::to_string(mag);
        if (i == 0) {
            out += m;
            continue;
        }
        if (mag != 1) out += m + "*";
        out += i == 1 ? "q" : "q^" + std::to_string(i);
    }
    return out;
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& num, const Polynomial& den) {
    require_same(num.domain(), den.domain());
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    const Domain& d = num.domain();
    std::vector<Scalar> rem(num.coeffs().begin(), num.coeffs().end());
    long dd = den.degree();
    long nd = num.degree();
    std::vector<Scalar> quo(nd >= dd ? static_cast<size_t>(nd - dd + 1) : 0);
    const Scalar& lead = den.coeffs().back();
    for (long i = nd; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Scalar f = d.div(rem[i], lead);
        quo[i - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] = d.sub(rem[i - dd + j], d.mul(f, den.coeffs()[j]));
    }
    return {Polynomial(d, std::move(quo)), Polynomial(d, std::move(rem))};
}

Polynomial poly_divexact(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = poly_divrem(num, den);
    if (!r.is_zero())
        throw std::domain_error("inexact division of " + num.to_string() + " by " + den.to_string());
    return q;
}

}  // namespace qh
