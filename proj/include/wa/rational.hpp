#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace wa {

// Exact rational scalar. mpq_class does the heavy lifting; the helpers
// below exist because mpq_class(p, q) does NOT canonicalize on its own.
using Q = mpq_class;
using Z = mpz_class;

inline Q make_q(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Q r(num, den);
    r.canonicalize();
    return r;
}

inline Q make_q(const Z& num, const Z& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Q r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q". Throws on malformed input.
inline Q parse_q(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Q(Z(s));
        Z num(s.substr(0, slash));
        Z den(s.substr(slash + 1));
        return make_q(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string q_str(const Q& r) { return r.get_str(); }

inline Z factorial_z(unsigned long k) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline Z binomial_z(unsigned long n, unsigned long k) {
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace wa
