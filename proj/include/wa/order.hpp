#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wa {

// Exponent pair (lambda, mu) flattened into 2n entries: lambda first, mu last.
// The same layout serves X/Y exponents of commutative polynomials, so symbol
// maps are re-taggings of term maps rather than conversions.
using Exp = std::vector<int32_t>;

// Weight vector in N_0^{2n}. Entries are bounded to 2^31-1 at parse time;
// dot products are taken in 64-bit with an overflow guard.
using Weight = std::vector<int64_t>;

enum class Cmp { Less, Equal, Greater };

inline int64_t weight_dot(const Weight& w, const Exp& e) {
    if (w.size() != e.size()) throw std::invalid_argument("weight/exponent arity mismatch");
    int64_t acc = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        int64_t term = w[i] * (int64_t)e[i];
        if (w[i] != 0 && term / w[i] != (int64_t)e[i]) throw std::overflow_error("weight degree overflow");
        if (acc > std::numeric_limits<int64_t>::max() - term) throw std::overflow_error("weight degree overflow");
        acc += term;
    }
    return acc;
}

// Normal ordering: compare by each refinement weight in list order
// (outermost first, smaller dot product = Less), then by lexicographic
// comparison along the variable priority permutation.
struct Order {
    std::vector<Weight> refinements;
    std::vector<int> perm; // priority order over the 2n variables; empty = identity

    static Order lex() { return Order{}; }

    static Order lex_reversed(int two_n) {
        Order o;
        o.perm.resize(two_n);
        for (int i = 0; i < two_n; ++i) o.perm[i] = two_n - 1 - i;
        return o;
    }
};

inline Order refine(const Order& o, const Weight& nu) {
    Order r = o;
    r.refinements.insert(r.refinements.begin(), nu);
    return r;
}

inline Cmp cmp(const Order& o, const Exp& a, const Exp& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent arity mismatch");
    for (const Weight& w : o.refinements) {
        int64_t da = weight_dot(w, a), db = weight_dot(w, b);
        if (da < db) return Cmp::Less;
        if (da > db) return Cmp::Greater;
    }
    if (o.perm.empty()) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return Cmp::Less;
            if (a[i] > b[i]) return Cmp::Greater;
        }
        return Cmp::Equal;
    }
    if (o.perm.size() != a.size()) throw std::invalid_argument("order permutation arity mismatch");
    for (int i : o.perm) {
        if (a[i] < b[i]) return Cmp::Less;
        if (a[i] > b[i]) return Cmp::Greater;
    }
    return Cmp::Equal;
}

inline int64_t weight_degree(const Weight& nu, const Exp& e) { return weight_dot(nu, e); }

// The natural polynomial region Omega: every conjugate pair (w_i, w_{n+i})
// sums positively.
inline bool is_in_region(const Weight& omega) {
    if (omega.size() % 2 != 0) throw std::invalid_argument("weight length must be even");
    size_t n = omega.size() / 2;
    for (size_t i = 0; i < n; ++i)
        if (omega[i] + omega[n + i] <= 0) return false;
    return true;
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool exp_divides(const Exp& d, const Exp& e) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > e[i]) return false;
    return true;
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

} // namespace wa
