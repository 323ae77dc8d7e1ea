#pragma once

#include <map>
#include <string>

#include "wa/order.hpp"
#include "wa/rational.hpp"

namespace wa {

// Degree value that may be -infinity (degree of the zero element).
struct Deg {
    bool finite = false;
    int64_t value = 0;

    static Deg neg_inf() { return Deg{}; }
    static Deg of(int64_t v) { return Deg{true, v}; }

    bool operator==(const Deg&) const = default;
};

// A finite K-linear combination of exponent pairs. Used both for Weyl
// algebra elements in canonical form (basis xi^lambda d^mu) and for
// commutative polynomials in K[X,Y]; only the multiplication differs.
// std::map keys iterate in a fixed structural order, so printing,
// hashing and serialization are reproducible.
struct El {
    int n = 1;                 // arity: exponents have 2n entries
    std::map<Exp, Q> t;        // no zero coefficients stored

    bool is_zero() const { return t.empty(); }
    bool operator==(const El& o) const { return n == o.n && t == o.t; }
};

using WeylElement = El;
using Poly = El;

inline El el_zero(int n) { return El{n, {}}; }

inline El el_const(int n, const Q& c) {
    El e{n, {}};
    if (c != 0) e.t[Exp(2 * n, 0)] = c;
    return e;
}

inline El el_term(int n, const Exp& ex, const Q& c) {
    El e{n, {}};
    if (c != 0) e.t[ex] = c;
    return e;
}

inline void add_term(El& e, const Exp& ex, const Q& c) {
    auto it = e.t.find(ex);
    if (it == e.t.end()) {
        if (c != 0) e.t.emplace(ex, c);
    } else {
        it->second += c;
        if (it->second == 0) e.t.erase(it);
    }
}

inline El add(const El& u, const El& v) {
    if (u.n != v.n) throw std::invalid_argument("arity mismatch in add");
    El r = u;
    for (const auto& [ex, c] : v.t) add_term(r, ex, c);
    return r;
}

inline El scale(const El& u, const Q& c) {
    El r{u.n, {}};
    if (c == 0) return r;
    for (const auto& [ex, co] : u.t) r.t[ex] = co * c;
    return r;
}

inline El sub(const El& u, const El& v) { return add(u, scale(v, Q(-1))); }

inline Deg deg_el(const Weight& nu, const El& e) {
    Deg d = Deg::neg_inf();
    for (const auto& [ex, c] : e.t) {
        int64_t w = weight_dot(nu, ex);
        if (!d.finite || w > d.value) d = Deg::of(w);
    }
    return d;
}

// Sum of the terms attaining the maximal nu-weight; 0 for the zero element.
// For a Weyl element this is sigma^omega transported along Phi (exponent
// data unchanged); for a Poly it is the initial form tau^nu.
inline El top_form(const Weight& nu, const El& e) {
    El r{e.n, {}};
    Deg d = deg_el(nu, e);
    if (!d.finite) return r;
    for (const auto& [ex, c] : e.t)
        if (weight_dot(nu, ex) == d.value) r.t[ex] = c;
    return r;
}

// Univariate-style text form, variables named by caller. weyl=true prints
// x1..xn/d1..dn (x, d when n=1), otherwise X/Y.
std::string el_str(const El& e, bool weyl);

} // namespace wa
