#pragma once

#include "qh/domain.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qh {

struct LowestTerm {
    long k;
    Scalar a;
};

// Dense polynomial in q. coeffs()[i] is the coefficient of q^i; trailing
// zeros are stripped so the zero polynomial has no coefficients.
class Polynomial {
public:
    explicit Polynomial(Domain d = Domain::rationals()) : dom_(d) {}
    Polynomial(Domain d, std::vector<Scalar> coeffs);
    Polynomial(Domain d, std::initializer_list<long> coeffs);

    static Polynomial constant(Domain d, const Scalar& c);
    static Polynomial monomial(Domain d, const Scalar& c, long k);

    const Domain& domain() const { return dom_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(long i) const;
    std::optional<LowestTerm> lowest_term() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& s) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Multiply by q^k.
    Polynomial shift_up(long k) const;
    // Divide by q^k; throws if a coefficient below k is nonzero.
    Polynomial shift_down(long k) const;
    // Keep the terms of degree < n.
    Polynomial truncated(long n) const;
    // Same coefficients reinterpreted over another domain (reduction mod p).
    Polynomial reduced(const Domain& d) const;

    bool operator==(const Polynomial& o) const { return dom_ == o.dom_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Ascending powers, e.g. "1 - q + 2*q^3".
    std::string to_string() const;

private:
    void trim();
    Domain dom_;
    std::vector<Scalar> c_;
};

Polynomial operator*(const Scalar& s, const Polynomial& p);

// num = quotient*den + remainder with deg(remainder) < deg(den).
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& num, const Polynomial& den);
// Quotient of an exact division; throws std::domain_error otherwise.
Polynomial poly_divexact(const Polynomial& num, const Polynomial& den);

}  // namespace qh
