#pragma once

#include "qh/cfrac.hpp"
#include "qh/qseries.hpp"

#include <string>
#include <vector>

namespace qh {

struct AlgStepResult {
    QuadraticModel next_model;
    long k;
    Scalar a;
    Polynomial D;
};

// One step of the quadratic H-fraction algorithm:
//   (k, a)  lowest term of A
//   D       deg <= k+1, a q^k B/A - a c_1 q^{k+1} = D + O(q^{k+2})
//   A* = (-D^2 A/a + B D q^k - C a q^{2k}) / q^{2k+2}
//   B* = 2 A D/(a q^k) - B
//   C* = -A q^2/a
// The root F of the input satisfies F = -a q^k/(D - q^{k+2} F*), with F* the
// root of the returned model. Integer models are lifted to the rationals.
// A returned model with A* = 0 means the fraction ends there.
AlgStepResult alg_step(const QuadraticModel& m);

enum class CycleStatus { periodic, finite, no_cycle };
std::string to_string(CycleStatus s);

struct TraceStep {
    QuadraticModel model;
    long k;
    Scalar a;
    Polynomial D;
};

struct QuadraticExpansion {
    CycleStatus status = CycleStatus::no_cycle;
    PeriodicHFraction fraction;  // canonical; partial prefix when no_cycle
    std::vector<TraceStep> trace;
    // Indices p < p' of the first repeated model, when periodic.
    size_t repeat_from = 0;
    size_t repeat_at = 0;
};

size_t default_max_steps(long n);
QuadraticExpansion hfraction_of_quadratic(const QuadraticModel& m, size_t max_steps);

// Closed-form H-fraction of Phi_n: hardcoded for n = 1, 2 and built from the
// U/V/W blocks for n >= 3.
PeriodicHFraction expected_hfraction(long n);
// The block construction itself, valid for n >= 2.
PeriodicHFraction block_hfraction(long n);

// Model of (F - f0)/q for the root F of m, whose constant term must be f0.
QuadraticModel shift_model(const QuadraticModel& m, const Scalar& f0);
// Closed-form model of Phi_n^{(l)} for 0 <= l <= n+1.
QuadraticModel shifted_metallic_model(long n, long l);
// Model of Phi_n^{(l)} for any l >= 0 by repeated shifting.
QuadraticModel iterated_shift_model(long n, long l, Domain d = Domain::integers());

// Number of leading terms of the Phi_n fraction dropped for the shift l.
long shift_cut(long n, long l);
// H-fraction of Phi_n^{(l)}, 1 <= l <= n+1, cut from the fraction of Phi_n.
PeriodicHFraction hfraction_of_shift(long n, long l);
// Phi_n itself for l = 0, hfraction_of_shift otherwise.
PeriodicHFraction metallic_hfraction(long n, long l);

struct SupportProfile {
    std::vector<long> k;    // k_0 .. k_{h-1}
    std::vector<long> s;    // s_0 .. s_h
    std::vector<long> eps;  // eps_0 .. eps_h
    size_t period_len = 0;

    bool contains(long j) const;
};

SupportProfile support_profile(const PeriodicHFraction& h, size_t horizon);

// Delta_j of the series with this H-fraction.
Scalar hankel_from_hfraction(const PeriodicHFraction& h, long j);
// Delta_0 .. Delta_{horizon-1}.
std::vector<Scalar> hankel_sequence_from_hfraction(const PeriodicHFraction& h, long horizon);
// Same for a prefix; throws std::domain_error past the certified range.
std::vector<Scalar> hankel_sequence_from_prefix(const HFractionPrefix& p, long horizon);

}  // namespace qh
