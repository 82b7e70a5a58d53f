#pragma once

#include <gmpxx.h>

#include <string>

namespace qh {

// Every coefficient is stored as a GMP rational. Over F_p the value is kept
// as the canonical residue in [0, p).
using Scalar = mpq_class;

class Domain {
public:
    enum class Kind { integers, rationals, prime_field };

    static Domain integers();
    static Domain rationals();
    // Throws std::invalid_argument when p is not prime.
    static Domain prime_field(unsigned long p);

    Kind kind() const { return kind_; }
    unsigned long modulus() const { return p_; }
    bool is_field() const { return kind_ != Kind::integers; }
    bool is_prime_field() const { return kind_ == Kind::prime_field; }

    Scalar normalize(const Scalar& x) const;
    Scalar from_int(long v) const { return normalize(Scalar(v)); }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    // Over the integers this throws unless the quotient is integral.
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar inv(const Scalar& a) const;
    Scalar pow(const Scalar& a, unsigned long e) const;

    // Signed representative used for display: residues above p/2 print negative.
    Scalar lift(const Scalar& a) const;

    std::string name() const;

    bool operator==(const Domain& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Domain& o) const { return !(*this == o); }

private:
    Domain(Kind k, unsigned long p) : kind_(k), p_(p) {}
    Kind kind_;
    unsigned long p_;
};

bool is_prime(unsigned long p);

// Decimal rendering, e.g. "-3" or "5/2".
std::string to_string(const Scalar& x);

}  // namespace qh
