#pragma once

#include "wa/element.hpp"

namespace wa {

// Polynomial in K[X_1..X_n], the module the Weyl algebra acts on.
struct PolyX {
    int n = 1;
    std::map<std::vector<int32_t>, Q> t;

    bool operator==(const PolyX&) const = default;
};

inline PolyX px_monomial(int n, const std::vector<int32_t>& alpha, const Q& c = Q(1)) {
    PolyX p{n, {}};
    if (c != 0) p.t[alpha] = c;
    return p;
}

// Operator composition in canonical form. Closed normal-form product:
//   xi^a d^b * xi^c d^d = sum_k prod_i k_i! C(b_i,k_i) C(c_i,k_i)
//                                xi^{a+c-k} d^{b+d-k},
// derived from the Heisenberg rules and certified against apply().
El weyl_mul(const El& u, const El& v);

// Commutative product on the same term representation.
El comm_mul(const El& u, const El& v);

// The defining action: xi_i is multiplication by X_i, d_i is d/dX_i.
// Serves as the independent multiplication oracle.
PolyX apply(const El& w, const PolyX& p);

inline Deg deg_omega(const Weight& omega, const El& w) { return deg_el(omega, w); }

// sigma^omega: top-weight terms of w read as a commutative polynomial.
inline Poly symbol(const Weight& omega, const El& w) { return top_form(omega, w); }

} // namespace wa
