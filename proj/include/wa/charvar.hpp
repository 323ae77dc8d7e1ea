#pragma once

#include "wa/fan.hpp"

namespace wa {

// The characteristic ideal Gr^omega L of the cyclic module W/L, carried as
// the symbol generators produced by a weighted GB run together with their
// commutative reduced GB under the reference order.
struct CharIdeal {
    Weight omega;
    std::vector<Poly> gens;
    std::vector<Poly> reduced_gb;
};

CharIdeal char_ideal(const std::vector<WeylElement>& gens, const Weight& omega);

// Total-degree leading-form ideal of Gr^omega L: generators of
// Gr^(1,..,1) Gr^omega L, whose variety is the critical cone.
std::vector<Poly> critical_cone_ideal(const std::vector<WeylElement>& gens, const Weight& omega);

// Stabilization bound gamma_nu: exact (via the universal GB) for n = 1,
// otherwise the sup of deg^nu over the union of reduced GBs on the integer
// grid with entries <= 7 — an explicit universal set proxy.
int64_t gamma_bound(const std::vector<WeylElement>& gens, const Weight& nu);

// One instance of the stabilization equality:
//   Gr^nu Gr^omega L == Gr^{nu + s*omega} L  (as ideals of K[X,Y]).
bool stabilization_check(const std::vector<WeylElement>& gens, const Weight& nu,
                         const Weight& omega, int64_t s);

struct StabilizationReport {
    Weight nu;
    Weight omega;
    int64_t gamma_bound = 0;
    int64_t range_lo = 1, range_hi = 0; // s checked in [range_lo, range_hi]
    int64_t onset = 0;                  // smallest s from which equality holds through range_hi
    bool all_pass_beyond_gamma = false; // the theorem-level assertion
};

// Checks s in [1, gamma_bound + tail] for each omega; equality must hold for
// every s > gamma_bound (theorem), earlier onsets are recorded as empirical
// kappa data.
std::vector<StabilizationReport> verify_stabilization(const std::vector<WeylElement>& gens,
                                                      const Weight& nu,
                                                      const std::vector<Weight>& omegas,
                                                      int64_t tail);

// max over the supplied omegas of (onset - 1): an estimate of kappa_nu over
// a finite weight set, not the true kappa (which quantifies over all of
// Omega).
int64_t kappa_hat(const std::vector<WeylElement>& gens, const Weight& nu,
                  const std::vector<Weight>& omegas, int64_t tail);

// Krull dimension of K[X,Y]/Gr^omega L; nullopt encodes -infinity (improper
// L, zero quotient ring).
std::optional<int> dim_char_variety(const std::vector<WeylElement>& gens, const Weight& omega);

// True iff dim_char_variety agrees across all supplied omegas.
bool dimension_constancy(const std::vector<WeylElement>& gens, const std::vector<Weight>& omegas);

} // namespace wa
