#pragma once

#include "qh/hfrac.hpp"
#include "qh/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qh {

// Delta^{(l)}_j(F): determinant of the j x j matrix (f_{a+b+l}).
Scalar hankel_bruteforce(const TruncatedSeries& f, long l, long j);
// Delta^{(l)}_0 .. Delta^{(l)}_{horizon-1} of an integer series.
std::vector<mpz_class> hankel_bruteforce_sequence(const TruncatedSeries& f, long l, long horizon);
// Smallest precision that hankel_bruteforce_sequence accepts.
long bruteforce_precision(long l, long horizon);

enum class HankelSource { formula, brute_force, both };
std::string to_string(HankelSource s);
HankelSource parse_source(const std::string& s);

struct Counterexample {
    long j;
    std::string expected;
    std::string got;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    std::string detail;
};

struct HankelReport {
    long n = 0;
    long ell = 0;
    long horizon = 0;
    HankelSource source = HankelSource::formula;
    std::vector<mpz_class> values;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

// Phi_n^{(l)} Hankel values. The formula source needs l <= n+1.
std::vector<mpz_class> metallic_hankel_formula(long n, long l, long horizon);
std::vector<mpz_class> metallic_hankel_brute(long n, long l, long horizon);
HankelReport hankel_sequence(long n, long l, long horizon, HankelSource source);

// Compare two sequences entry by entry; the first mismatch is recorded.
CheckResult compare_sequences(const std::string& name, const std::vector<mpz_class>& expected,
                              const std::vector<mpz_class>& got);

long metallic_period(long n);

CheckResult check_value_set_and_periodicity(long n, long l, long periods,
                                            HankelSource source = HankelSource::formula);
// Same check on given values: entries in {-1,0,1} and Delta_{j+P} = (-1)^n Delta_j for j + P < size.
CheckResult value_set_and_periodicity(long n, const std::vector<mpz_class>& values, const std::string& name);

struct GaleRobinsonResidual {
    long j;
    mpz_class value;
};

// Gamma_j = D_j D_{j+2n+2} - D_{j+1} D_{j+2n+1} + D_{j+n+1}^2 for j < horizon.
std::vector<GaleRobinsonResidual> gale_robinson_residuals(long n, const std::vector<mpz_class>& values, long horizon);
std::vector<GaleRobinsonResidual> check_gale_robinson(long n, long l, long horizon,
                                                      HankelSource source = HankelSource::formula);
CheckResult summarize_residuals(const std::string& name, const std::vector<GaleRobinsonResidual>& r);

// Delta^{(l+1)}_j = (-1)^{j + n(n+2l-1)/2} Delta^{(l)}_{j+n+1} for j <= horizon.
CheckResult contiguity(long n, long l, const std::vector<mpz_class>& lower, const std::vector<mpz_class>& upper,
                       long horizon);
CheckResult check_contiguity(long n, long l, long horizon, HankelSource source = HankelSource::formula);

enum class SignClass { c3p, c3p1, c3p2 };
// Closed-form nonzero value Delta_{s_q} for q = 3p, 3p+1, 3p+2 (n >= 3).
int explicit_delta(long n, long p, SignClass cls);
// Closed-form s_q for 0 <= q <= 6n-5.
long explicit_s(long n, long q);
// Delta_0 .. Delta_{2n(n+1)-1} assembled from the two closed forms above.
std::vector<mpz_class> explicit_first_period(long n);

struct Membership {
    bool member;
    int condition;  // 1..5 for (i)..(v), 0 when not a member
};
Membership support_membership(long n, long j);

struct ModpReport {
    long n = 0;
    long ell = 0;
    unsigned long p = 0;
    size_t max_steps = 0;
    CycleStatus status = CycleStatus::no_cycle;
    size_t hfraction_preperiod = 0;
    size_t hfraction_period = 0;
    long hankel_preperiod = 0;
    long hankel_period = 0;
    PeriodicHFraction fraction;
};

ModpReport modp_analysis(long n, long l, unsigned long p, size_t max_steps);
// Delta_j mod p for j < horizon from the F_p fraction of the report.
std::vector<unsigned long> modp_hankel_values(const ModpReport& r, long horizon);

struct ScanReport {
    long n = 0;
    long ell = 0;
    long horizon = 0;
    mpz_class value_min;
    mpz_class value_max;
    mpz_class max_abs;
    bool within_two = false;
    bool antiperiodic_on_window = false;
    long compared = 0;
    std::vector<mpz_class> values;
};

ScanReport conjecture_scan(long n, long l, long horizon);

std::vector<CheckResult> baseline_catalan_motzkin();

// Algorithm Q on Phi_n reproduces expected_hfraction(n), offset 1, period 6n-4.
CheckResult check_hfraction_closed_form(long n);
// Symmetries of numerators and denominators inside one period (n >= 3).
std::vector<CheckResult> check_hfraction_symmetries(long n);
// Symmetries of k, s and eps over the first period and their end values (n >= 3).
std::vector<CheckResult> check_profile_identities(long n);
// Explicit first period, Delta_j = (-1)^{n(n+1)/2} Delta_{(2n+1)(n+1)-j}, and
// support membership against brute force (n >= 3).
std::vector<CheckResult> check_explicit_values(long n);
// Formula and brute force agree on Delta_0 .. Delta_{horizon-1}.
CheckResult check_oracle(long n, long l, long horizon);
// Somos-4 for the first three Hankel sequences of Phi_1.
CheckResult check_somos4_golden();

// Suites: thmA, thmB, thmC, thmD, thm51, symmetries, baselines, all.
// run_suite covers the n-dependent part; thm51 and symmetries return nothing
// below n = 3. run_suites loops over n and adds the baselines once.
std::vector<CheckResult> run_suite(const std::string& suite, long n);
std::vector<CheckResult> run_suites(const std::string& suite, long n_lo, long n_hi);
bool is_suite(const std::string& suite);

}  // namespace qh
