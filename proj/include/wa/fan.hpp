#pragma once

#include "wa/groebner.hpp"

namespace wa {

// Slope w2/w1 in [0, inf]; inf is the flag, value ignored when set.
struct Slope {
    Q value = 0;
    bool inf = false;

    bool operator==(const Slope& o) const { return inf == o.inf && (inf || value == o.value); }
    bool operator<(const Slope& o) const {
        if (inf) return false;
        if (o.inf) return true;
        return value < o.value;
    }
};

// Integer weight in Omega representing a rational slope exactly.
Weight slope_weight(const Slope& s);

struct SlopeCone {
    Slope lower, upper;
    bool lower_closed = false, upper_closed = false;
    GroebnerBasis gb;                // reduced, under lex refined by an interior weight
    std::vector<Poly> initial_gens;  // Gr^omega L for every omega in the cone

    bool degenerate() const { return lower == upper; }
};

struct FanDecomposition {
    std::vector<SlopeCone> cones; // ordered, disjoint, covering [0, inf]
};

struct UniversalBasis {
    std::vector<WeylElement> elements;
};

// Exact fan for n=1: breakpoint slopes harvested from every support seen
// during GB runs (re-harvested to a fixed point), open intervals certified
// by identical reduced GBs at two interior samples, adjacent cones with
// equal initial ideals merged.
FanDecomposition fan_1d(const std::vector<WeylElement>& gens);

size_t classify_region(const FanDecomposition& fan, const Weight& omega);

UniversalBasis ugb(const std::vector<WeylElement>& gens);

// count = number of distinct initial ideals across cones; bound_C is the
// finiteness bound prod_u 2^{#supp(u)} over a universal basis.
struct ChiResult {
    int count = 0;
    Z bound_C;
};
ChiResult chi(const std::vector<WeylElement>& gens);

Z bound_C_of(const std::vector<WeylElement>& universal);

// sup of deg^nu over the given universal basis (an upper bound for the
// infimum over all universal bases).
int64_t gamma_of_basis(const std::vector<WeylElement>& universal, const Weight& nu);

// gamma for n=1 via the constructed UGB.
int64_t gamma_1d(const std::vector<WeylElement>& gens, const Weight& nu);

// All weights in Omega with entries in [0, bound], lexicographic order.
std::vector<Weight> region_grid(int n, int bound);

// n >= 2 fallback: distinct initial ideals over the integer grid, an
// explicit lower bound on chi with no completeness certificate.
struct GridClass {
    Weight omega;
    size_t class_id;
};
std::vector<GridClass> grid_sample(const std::vector<WeylElement>& gens, int bound);

// Union of reduced GBs over the grid: a gamma proxy for n >= 2 (documented
// as "supplied" universal set; exact only when it happens to be universal).
std::vector<WeylElement> grid_basis_union(const std::vector<WeylElement>& gens, int bound);

} // namespace wa
