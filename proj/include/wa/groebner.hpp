#pragma once

#include <optional>
#include <set>
#include <vector>

#include "wa/poly.hpp"

namespace wa {

// One division/Buchberger engine for both rings. The Weyl case is safe to
// drive with commutative-style S-pairs because leading exponents are
// multiplicative under any normal ordering (commutator terms have
// componentwise-smaller exponents).
struct Ring {
    enum Kind { Weyl, Commutative } kind = Weyl;
    int n = 1;

    El mul(const El& a, const El& b) const {
        return kind == Weyl ? weyl_mul(a, b) : comm_mul(a, b);
    }
};

struct GroebnerBasis {
    std::vector<El> elements; // sorted ascending by leading exponent
    Order order;
    bool reduced = false;
};

// One recorded division step: f -= coef * x^shift * g_index.
struct QuotientStep {
    size_t g_index;
    Exp shift;
    Q coef;
};

std::pair<Exp, Q> leading_term(const Order& order, const El& f);

// Full normal form: no term of the remainder is divisible by any leading
// exponent of G. Division steps are appended to *steps when provided.
El reduce(const El& f, const std::vector<El>& G, const Order& order, const Ring& ring,
          std::vector<QuotientStep>* steps = nullptr);

El s_element(const El& f, const El& g, const Order& order, const Ring& ring);

// Buchberger with normal selection strategy (smallest lcm first).
// When seen != nullptr, every intermediate basis element is recorded there
// (the fan module harvests tie slopes from these supports).
GroebnerBasis buchberger(const std::vector<El>& gens, const Order& order, const Ring& ring,
                         std::vector<El>* seen = nullptr);

GroebnerBasis reduce_basis(const GroebnerBasis& B, const Ring& ring);

// Convenience: buchberger + reduce_basis.
GroebnerBasis reduced_gb(const std::vector<El>& gens, const Order& order, const Ring& ring,
                         std::vector<El>* seen = nullptr);

bool ideal_equal(const std::vector<El>& A, const std::vector<El>& B, const Order& order, const Ring& ring);

// sigma^omega of a (base)_omega-Groebner basis of the left ideal; the
// result is a base-Groebner basis of Gr^omega L.
std::vector<Poly> initial_ideal_weyl(const std::vector<El>& gens, const Weight& omega, const Order& base);

// tau^nu analogue for commutative ideals; any nu in N_0^{2n} is allowed.
std::vector<Poly> initial_ideal_comm(const std::vector<Poly>& gens, const Weight& nu, const Order& base);

// Krull dimension of K[X,Y]/<monomials>: the largest variable subset S such
// that no generator's support lies inside S. Returns nullopt for the zero
// ring (some generator is a unit), reported as -inf by callers.
std::optional<int> krull_dim_quotient(const std::vector<Exp>& monomial_gens, int vars);

} // namespace wa
