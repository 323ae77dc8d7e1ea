#pragma once

#include <random>
#include <string>
#include <vector>

#include "wa/charvar.hpp"
#include "wa/parse.hpp"
#include "wa/weyl.hpp"

namespace th {

inline wa::WeylElement W(const std::string& s, int n = 1) { return wa::parse_weyl(s, n); }
inline wa::Poly P(const std::string& s, int n = 1) { return wa::parse_poly(s, n); }

struct CorpusIdeal {
    std::string name;
    int n;
    std::vector<wa::WeylElement> gens;
};

// The standing test corpus: Airy, Euler+1, a third-order operator, a
// two-generator ideal, the improper ideal, and one two-variable ideal.
inline std::vector<CorpusIdeal> corpus() {
    return {
        {"airy", 1, {W("d^2 - x")}},
        {"euler", 1, {W("x*d + 1")}},
        {"order3", 1, {W("d^3 - x*d - 1")}},
        {"pair", 1, {W("x^2*d - 1"), W("d^2")}},
        {"improper", 1, {W("x"), W("d")}},
        {"two_var", 2, {W("d1^2 - x2", 2), W("d2", 2)}},
    };
}

inline std::vector<CorpusIdeal> corpus_1d() {
    std::vector<CorpusIdeal> out;
    for (auto& c : corpus())
        if (c.n == 1) out.push_back(c);
    return out;
}

// Random element with bounded support/exponents and small rational
// coefficients; never returns zero unless allow_zero.
inline wa::El random_el(std::mt19937_64& rng, int n, int max_terms = 6, int max_exp = 5,
                        bool allow_zero = false) {
    std::uniform_int_distribution<int> nterms(1, max_terms), expd(0, max_exp);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    for (;;) {
        wa::El e = wa::el_zero(n);
        int k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            wa::Exp ex(2 * n);
            for (auto& v : ex) v = expd(rng);
            wa::add_term(e, ex, wa::make_q(num(rng), den(rng)));
        }
        if (allow_zero || !e.is_zero()) return e;
    }
}

inline wa::Weight random_weight(std::mt19937_64& rng, int n, int max_entry = 6,
                                bool in_region = false) {
    std::uniform_int_distribution<int> d(0, max_entry);
    for (;;) {
        wa::Weight w(2 * n);
        for (auto& v : w) v = d(rng);
        if (!in_region || wa::is_in_region(w)) return w;
    }
}

inline wa::Order random_order(std::mt19937_64& rng, int n) {
    wa::Order o = rng() % 2 ? wa::Order::lex() : wa::Order::lex_reversed(2 * n);
    int refinements = 1 + (int)(rng() % 2);
    for (int i = 0; i < refinements; ++i) o = wa::refine(o, random_weight(rng, n, 9));
    return o;
}

// exponent monomial ideals equal: mutual divisibility of generators
inline bool monomial_ideal_equal(const std::vector<wa::Exp>& A, const std::vector<wa::Exp>& B) {
    auto covered = [](const std::vector<wa::Exp>& gens, const wa::Exp& e) {
        for (const wa::Exp& g : gens)
            if (wa::exp_divides(g, e)) return true;
        return false;
    };
    for (const wa::Exp& a : A)
        if (!covered(B, a)) return false;
    for (const wa::Exp& b : B)
        if (!covered(A, b)) return false;
    return true;
}

} // namespace th
