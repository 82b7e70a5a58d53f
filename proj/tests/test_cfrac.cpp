#include "qh/cfrac.hpp"
#include "qh/hfrac.hpp"

#include <doctest.h>

#include <random>

using namespace qh;

namespace {

const Domain QQ = Domain::rationals();

LaurentPoly lp(std::initializer_list<long> c, long shift = 0) { return LaurentPoly(Polynomial(QQ, c), shift); }

TruncatedSeries random_rational_series(std::mt19937& rng, long N) {
    std::uniform_int_distribution<long> coef(-3, 3), deg(1, 5);
    std::vector<Scalar> num(deg(rng) + 1), den(deg(rng) + 1);
    for (auto& x : num) x = coef(rng);
    for (auto& x : den) x = coef(rng);
    den[0] = 1;
    if (Polynomial(QQ, num).is_zero()) num[0] = 1;
    return series_divide(TruncatedSeries::from_polynomial(Polynomial(QQ, num), N),
                         TruncatedSeries::from_polynomial(Polynomial(QQ, den), N));
}

}  // namespace

TEST_CASE("eval_cf reproduces the metallic series") {
    for (long n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const long N = 60;
        TruncatedSeries f = eval_cf(to_cf_terms(expected_hfraction(n)), N).reduced(QQ);
        CHECK(f == series_of_model(metallic_model(n), N).reduced(QQ));
        for (long l = 1; l <= n + 1; ++l) {
            TruncatedSeries g = eval_cf(to_cf_terms(hfraction_of_shift(n, l)), N).reduced(QQ);
            CHECK(g == series_of_model(metallic_model(n), N + l).tail(l).reduced(QQ));
        }
    }
}

TEST_CASE("eval_cf on the Catalan fraction") {
    // C = 1/(1 - q/(1 - q/(1 - ...)))
    CFTermList cf;
    cf.domain = QQ;
    cf.lead = LaurentPoly(QQ);
    cf.preamble = {{lp({1}), lp({1})}};
    cf.cycle = {{lp({-1}, 1), lp({1})}};
    CHECK(eval_cf(cf, 12) == catalan_series(12).reduced(QQ));

    CFTermList bad = cf;
    bad.preamble[0].den = LaurentPoly(QQ);
    CHECK_THROWS_AS(eval_cf(bad, 5), CFEvalError);

    // 1/(1 + 1/(1 + ...)) has no power-series limit
    CFTermList stuck;
    stuck.domain = QQ;
    stuck.lead = LaurentPoly(QQ);
    stuck.cycle = {{lp({1}), lp({1})}};
    try {
        eval_cf(stuck, 5);
        FAIL("expected divergence");
    } catch (const CFEvalError& e) {
        CHECK(e.term() > 0);
    }
}

TEST_CASE("greedy expansion matches the quadratic algorithm") {
    for (long n = 1; n <= 6; ++n) {
        for (long l = 0; l <= n + 1; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            PeriodicHFraction h = metallic_hfraction(n, l);
            // a little more than one period plus the head
            const long N = 4 * n * (n + 1) + 4 * n + 12;
            TruncatedSeries f = series_of_model(metallic_model(n), N + l).tail(l);
            HFractionPrefix p = greedy_hfraction(f, 1000);
            CHECK(p.stop != ExpansionStop::max_terms);
            REQUIRE(p.terms.size() >= h.offset() + h.period());
            CHECK(p.terms == h.unroll(p.terms.size()));
            // more precision only appends terms
            HFractionPrefix longer = greedy_hfraction(series_of_model(metallic_model(n), N + 40 + l).tail(l), 1000);
            REQUIRE(longer.terms.size() > p.terms.size());
            CHECK(std::equal(p.terms.begin(), p.terms.end(), longer.terms.begin()));
        }
    }
}

TEST_CASE("greedy expansion of Catalan and Motzkin gives J-fractions") {
    HFractionPrefix c = greedy_hfraction(catalan_series(40), 100);
    REQUIRE(c.terms.size() >= 10);
    CHECK(c.terms[0] == make_hterm(0, -1, Polynomial(QQ, {1, -1})));
    for (size_t i = 1; i < c.terms.size(); ++i) CHECK(c.terms[i] == make_hterm(0, -1, Polynomial(QQ, {1, -2})));

    HFractionPrefix m = greedy_hfraction(motzkin_series(40), 100);
    for (const auto& t : m.terms) CHECK(t == make_hterm(0, -1, Polynomial(QQ, {1, -1})));

    HFractionPrefix c2 = artin_to_hf(artin_expand(catalan_series(41).shift_up(1).truncated(41), 100));
    CHECK(c2.terms == c.terms);

    RegularCF r = hf_to_artin(m.terms, QQ);
    for (const auto& a : r.quotients) CHECK(a.m() == 1);
}

TEST_CASE("polynomial input gives a finite fraction") {
    // 1 + q = 1/(1 - q + q^2/(1 + q))
    HFractionPrefix p = greedy_hfraction(TruncatedSeries(QQ, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}), 20);
    CHECK(p.stop == ExpansionStop::remainder_zero);
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms[0] == make_hterm(0, -1, Polynomial(QQ, {1, -1})));
    CHECK(p.terms[1] == make_hterm(0, 1, Polynomial(QQ, {1, 1})));
    CHECK(eval_cf(to_cf_terms(p.terms), 10) == TruncatedSeries(QQ, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(p.precision_used == 4);
    CHECK_THROWS(greedy_hfraction(TruncatedSeries::zero(QQ, 5), 3));
}

TEST_CASE("hterm validation") {
    CHECK_THROWS(validate_hterm(make_hterm(0, 0, Polynomial(QQ, {1}))));
    CHECK_THROWS(validate_hterm(make_hterm(0, 1, Polynomial(QQ, {2}))));
    CHECK_THROWS(validate_hterm(make_hterm(0, 1, Polynomial(QQ, {1, 0, 1}))));
    CHECK_NOTHROW(validate_hterm(make_hterm(1, 1, Polynomial(QQ, {1, 0, 1}))));
}

TEST_CASE("artin_expand examples") {
    // q/(1-q) = 1/(q^{-1} - 1)
    TruncatedSeries f = series_divide(TruncatedSeries(QQ, {0, 1, 0, 0, 0, 0, 0, 0}),
                                      TruncatedSeries(QQ, {1, -1, 0, 0, 0, 0, 0, 0}));
    RegularCF r = artin_expand(f, 10);
    CHECK(r.stop == ExpansionStop::remainder_zero);
    REQUIRE(r.quotients.size() == 1);
    CHECK(r.quotients[0].c == std::vector<Scalar>{-1, 1});

    // q^2 has a single quotient q^{-2}
    RegularCF s = artin_expand(TruncatedSeries(QQ, {0, 0, 1, 0, 0, 0}), 10);
    REQUIRE(s.quotients.size() == 1);
    CHECK(s.quotients[0].c == std::vector<Scalar>{0, 0, 1});
    CHECK(s.quotients[0].low() == 2);

    CHECK_THROWS(artin_expand(TruncatedSeries(QQ, {1, 1}), 3));
    RegularCF bad;
    bad.domain = QQ;
    bad.quotients.push_back({{Scalar(3)}});
    CHECK_THROWS_AS(artin_to_hf(bad), std::invalid_argument);
}

TEST_CASE("Artin round trip on metallic fractions") {
    for (long n = 1; n <= 8; ++n) {
        for (long l = 0; l <= n + 1; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            PeriodicHFraction h = metallic_hfraction(n, l);
            RegularCF r = hf_to_artin(h, 30);
            CHECK(artin_to_hf(r).terms == h.unroll(30));
            // the quotients are those of q * Phi_n^{(l)}
            long N = 2;
            for (const auto& t : h.unroll(30)) N += 2 * t.k + 2;
            TruncatedSeries g = series_of_model(metallic_model(n), N + l).tail(l).reduced(QQ);
            RegularCF direct = artin_expand(g.shift_up(1), 30);
            REQUIRE(direct.quotients.size() == 30);
            CHECK(direct.quotients == hf_to_artin(h.unroll(30), QQ).quotients);
        }
    }
}

TEST_CASE("Artin route agrees with the greedy expansion on random rational series") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        CAPTURE(trial);
        TruncatedSeries g = random_rational_series(rng, 40);
        if (g.zero_to_precision()) continue;
        HFractionPrefix greedy = greedy_hfraction(g, 200);
        HFractionPrefix via = artin_to_hf(artin_expand(g.shift_up(1), 200));
        CHECK(via.terms == greedy.terms);
        CHECK(via.stop == greedy.stop);
        // the emitted terms reproduce the series on the consumed coefficients
        if (!greedy.terms.empty()) {
            long used = std::min(greedy.precision_used, g.precision());
            CHECK(eval_cf(to_cf_terms(greedy.terms), used) == g.truncated(used));
        }
    }
}
