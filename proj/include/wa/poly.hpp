#pragma once

#include "wa/weyl.hpp"

namespace wa {

// K[X,Y] operations. Poly shares the exponent layout with WeylElement
// (lambda entries index X, mu entries index Y), so these are thin names
// over the shared term-map machinery.

inline Poly padd(const Poly& p, const Poly& q) { return add(p, q); }
inline Poly pmul(const Poly& p, const Poly& q) { return comm_mul(p, q); }

// Initial form by nu-weight (the commutative symbol map tau^nu).
inline Poly tau_initial(const Weight& nu, const Poly& p) { return top_form(nu, p); }

inline Deg deg_nu(const Weight& nu, const Poly& p) { return deg_el(nu, p); }

} // namespace wa
