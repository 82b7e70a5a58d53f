#include "qh/domain.hpp"

#include <stdexcept>

namespace qh {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Domain Domain::integers() { return Domain(Kind::integers, 0); }
Domain Domain::rationals() { return Domain(Kind::rationals, 0); }

Domain Domain::prime_field(unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return Domain(Kind::prime_field, p);
}

Scalar Domain::normalize(const Scalar& x) const {
    switch (kind_) {
    case Kind::rationals:
        return x;
    case Kind::integers:
        if (x.get_den() != 1) throw std::domain_error("non-integral value " + to_string(x) + " over the integers");
        return x;
    case Kind::prime_field: {
        mpz_class m(p_);
        mpz_class num = x.get_num() % m;
        if (num < 0) num += m;
        if (x.get_den() == 1) return Scalar(num);
        mpz_class den = x.get_den() % m;
        if (den < 0) den += m;
        mpz_class di;
        if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::domain_error("denominator divisible by p=" + std::to_string(p_));
        mpz_class r = (num * di) % m;
        return Scalar(r);
    }
    }
    return x;
}

Scalar Domain::add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
Scalar Domain::sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
Scalar Domain::mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
Scalar Domain::neg(const Scalar& a) const { return normalize(-a); }

Scalar Domain::inv(const Scalar& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (kind_ == Kind::prime_field) {
        mpz_class m(p_), r;
        mpz_class v = a.get_num();
        mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        return Scalar(r);
    }
    Scalar r = 1 / a;
    r.canonicalize();
    return normalize(r);
}

Scalar Domain::div(const Scalar& a, const Scalar& b) const {
    if (b == 0) throw std::domain_error("division by zero");
    if (kind_ == Kind::prime_field) return mul(a, inv(b));
    Scalar r = a / b;
    r.canonicalize();
    return normalize(r);
}

Scalar Domain::pow(const Scalar& a, unsigned long e) const {
    Scalar result = from_int(1), base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

Scalar Domain::lift(const Scalar& a) const {
    if (kind_ != Kind::prime_field) return a;
    if (a.get_num() * 2 > mpz_class(p_)) return a - Scalar(mpz_class(p_));
    return a;
}

std::string Domain::name() const {
    switch (kind_) {
    case Kind::integers: return "ZZ";
    case Kind::rationals: return "QQ";
    case Kind::prime_field: return "GF(" + std::to_string(p_) + ")";
    }
    return "?";
}

std::string to_string(const Scalar& x) { return x.get_str(); }

}  // namespace qh
