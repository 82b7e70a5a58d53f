#include "qh/qseries.hpp"

#include <stdexcept>

namespace qh {

LaurentPoly q_integer(long n, Domain d) {
    if (n >= 0) return LaurentPoly(q_int(n, d));
    // (1 - q^n)/(1 - q) = -q^n [-n]_q
    return LaurentPoly(-q_int(-n, d), n);
}

Polynomial q_int(long n, Domain d) {
    if (n < 0) throw std::invalid_argument("q_int: negative argument, use q_integer");
    return Polynomial(d, std::vector<Scalar>(static_cast<size_t>(n), Scalar(1)));
}

LaurentPoly q_integer_reciprocal(long n, Domain d) { return q_integer(n, d).shifted(1 - n); }

Polynomial angle_bracket(long n, Domain d) {
    if (n < 2) throw std::invalid_argument("angle_bracket requires n >= 2");
    Polynomial q = Polynomial::monomial(d, 1, 1);
    Polynomial one = Polynomial::constant(d, 1);
    return q * q_int(n, d) + (one + Polynomial::monomial(d, 1, n)) * (one - q);
}

void QuadraticModel::validate() const {
    if (A.domain() != B.domain() || A.domain() != C.domain())
        throw std::invalid_argument("quadratic model mixes coefficient domains");
    if (A.is_zero()) throw std::invalid_argument("quadratic model: A is zero");
    if (B.coeff(0) != 1) throw std::invalid_argument("quadratic model: B(0) != 1");
    if (C.is_zero()) throw std::invalid_argument("quadratic model: C is zero");
    if (C.coeff(0) != 0) throw std::invalid_argument("quadratic model: C(0) != 0");
}

bool QuadraticModel::satisfies_conditions() const {
    try {
        validate();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::string QuadraticModel::key() const {
    std::string k;
    for (const Polynomial* p : {&A, &B, &C}) {
        for (const auto& c : p->coeffs()) {
            k += c.get_str();
            k += ',';
        }
        k += '|';
    }
    return k;
}

QuadraticModel metallic_model(long n, Domain d) {
    if (n < 1) throw std::invalid_argument("metallic_model requires n >= 1");
    Polynomial q = Polynomial::monomial(d, 1, 1);
    Polynomial one = Polynomial::constant(d, 1);
    Polynomial B = (one + Polynomial::monomial(d, 1, n)) * (one - q) - q * q_int(n, d);
    return {Polynomial::constant(d, -1), B, q};
}

TruncatedSeries series_of_model(const QuadraticModel& m, long N) {
    m.validate();
    const Domain& d = m.domain();
    std::vector<Scalar> f(N), sq(N);
    for (long k = 0; k < N; ++k) {
        Scalar acc = m.A.coeff(k);
        for (long i = 0; i < k; ++i) {
            Scalar b = m.B.coeff(k - i);
            if (b != 0) acc += b * f[i];
            Scalar c = m.C.coeff(k - i);
            if (c != 0) acc += c * sq[i];
        }
        f[k] = d.neg(d.normalize(acc));
        Scalar s = 0;
        for (long i = 0; i <= k; ++i) s += f[i] * f[k - i];
        sq[k] = d.normalize(s);
    }
    return TruncatedSeries(d, std::move(f), N);
}

TruncatedSeries model_residual(const QuadraticModel& m, const TruncatedSeries& f) {
    long N = f.precision();
    auto A = TruncatedSeries::from_polynomial(m.A, N);
    auto B = TruncatedSeries::from_polynomial(m.B, N);
    auto C = TruncatedSeries::from_polynomial(m.C, N);
    return A + B * f + C * f * f;
}

std::vector<mpz_class> regular_cf(const mpq_class& x) {
    if (x < 0) throw std::invalid_argument("regular_cf: negative input not supported");
    std::vector<mpz_class> out;
    mpz_class num = x.get_num(), den = x.get_den();
    while (den != 0) {
        mpz_class a = num / den;
        out.push_back(a);
        mpz_class r = num - a * den;
        num = den;
        den = r;
    }
    return out;
}

TruncatedSeries q_rational(const mpq_class& x, long N) {
    Domain Z = Domain::integers();
    std::vector<mpz_class> a = regular_cf(x);
    auto to_long = [](const mpz_class& v) {
        if (!v.fits_slong_p()) throw std::invalid_argument("partial quotient too large");
        return v.get_si();
    };
    // Bottom-up: the tail after step i is P/Q.
    LaurentPoly P(Z), Q(Polynomial::constant(Z, 1));
    for (size_t i = a.size() - 1; i >= 1; --i) {
        long prev = to_long(a[i - 1]);
        long cur = to_long(a[i]);
        bool odd = i % 2 == 1;
        LaurentPoly alpha(Polynomial::constant(Z, 1), odd ? prev : -prev);
        LaurentPoly beta = odd ? q_integer_reciprocal(cur, Z) : q_integer(cur, Z);
        LaurentPoly nP = alpha * Q;
        LaurentPoly nQ = beta * Q + P;
        P = nP;
        Q = nQ;
    }
    LaurentPoly lead = q_integer(to_long(a[0]), Z);
    return laurent_ratio_to_series(lead * Q + P, Q, N);
}

TruncatedSeries catalan_series(long N) {
    if (N < 1) throw std::invalid_argument("precision must be >= 1");
    std::vector<Scalar> c(N);
    mpz_class b;
    for (long i = 0; i < N; ++i) {
        mpz_bin_uiui(b.get_mpz_t(), 2 * i, i);
        c[i] = Scalar(mpz_class(b / (i + 1)));
    }
    return TruncatedSeries(Domain::integers(), std::move(c), N);
}

TruncatedSeries motzkin_series(long N) {
    if (N < 1) throw std::invalid_argument("precision must be >= 1");
    TruncatedSeries g = catalan_series(N);
    std::vector<Scalar> m(N);
    mpz_class b;
    for (long n = 0; n < N; ++n) {
        mpz_class s = 0;
        for (long k = 0; 2 * k <= n; ++k) {
            mpz_bin_uiui(b.get_mpz_t(), n, 2 * k);
            s += b * g.coeff(k).get_num();
        }
        m[n] = Scalar(s);
    }
    return TruncatedSeries(Domain::integers(), std::move(m), N);
}

}  // namespace qh
