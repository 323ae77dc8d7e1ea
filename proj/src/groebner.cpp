#include "wa/groebner.hpp"

#include <algorithm>
#include <deque>

namespace wa {

std::pair<Exp, Q> leading_term(const Order& order, const El& f) {
    if (f.is_zero()) throw std::invalid_argument("leading term of zero");
    auto it = f.t.begin();
    const Exp* best = &it->first;
    const Q* bc = &it->second;
    for (++it; it != f.t.end(); ++it)
        if (cmp(order, it->first, *best) == Cmp::Greater) { best = &it->first; bc = &it->second; }
    return {*best, *bc};
}

El reduce(const El& f, const std::vector<El>& G, const Order& order, const Ring& ring,
          std::vector<QuotientStep>* steps) {
    std::vector<std::pair<Exp, Q>> leads;
    leads.reserve(G.size());
    for (const El& g : G) leads.push_back(leading_term(order, g));

    El r = f;
    for (;;) {
        // the order-greatest still-reducible term of r
        const Exp* target = nullptr;
        size_t gi = 0;
        for (const auto& [ex, c] : r.t) {
            size_t j = 0;
            for (; j < leads.size(); ++j)
                if (exp_divides(leads[j].first, ex)) break;
            if (j == leads.size()) continue;
            if (!target || cmp(order, ex, *target) == Cmp::Greater) { target = &ex; gi = j; }
        }
        if (!target) return r;
        Exp shift = exp_sub(*target, leads[gi].first);
        Q coef = r.t.at(*target) / leads[gi].second;
        if (steps) steps->push_back({gi, shift, coef});
        El m = el_term(r.n, shift, coef);
        r = sub(r, ring.mul(m, G[gi]));
    }
}

El s_element(const El& f, const El& g, const Order& order, const Ring& ring) {
    auto [lf, cf] = leading_term(order, f);
    auto [lg, cg] = leading_term(order, g);
    Exp l = exp_lcm(lf, lg);
    El mf = el_term(f.n, exp_sub(l, lf), Q(1) / cf);
    El mg = el_term(g.n, exp_sub(l, lg), Q(1) / cg);
    return sub(ring.mul(mf, f), ring.mul(mg, g));
}

namespace {

El make_monic(const El& f, const Order& order) {
    auto [le, lc] = leading_term(order, f);
    (void)le;
    return scale(f, Q(1) / lc);
}

} // namespace

GroebnerBasis buchberger(const std::vector<El>& gens, const Order& order, const Ring& ring,
                         std::vector<El>* seen) {
    std::vector<El> B;
    for (const El& g : gens)
        if (!g.is_zero()) B.push_back(make_monic(g, order));
    if (seen) seen->insert(seen->end(), B.begin(), B.end());

    struct Pair {
        Exp lcm;
        size_t i, j;
    };
    std::vector<Pair> pending;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            auto li = leading_term(order, B[i]).first;
            auto lj = leading_term(order, B[j]).first;
            pending.push_back({exp_lcm(li, lj), i, j});
        }
    };
    for (size_t j = 1; j < B.size(); ++j) push_pairs(j);

    while (!pending.empty()) {
        // normal strategy: order-smallest lcm first, index pair as tiebreak
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            Cmp c = cmp(order, pending[k].lcm, pending[best].lcm);
            if (c == Cmp::Less ||
                (c == Cmp::Equal &&
                 std::tie(pending[k].i, pending[k].j) < std::tie(pending[best].i, pending[best].j)))
                best = k;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + best);

        El s = s_element(B[p.i], B[p.j], order, ring);
        El r = reduce(s, B, order, ring);
        if (r.is_zero()) continue;
        B.push_back(make_monic(r, order));
        if (seen) seen->push_back(B.back());
        push_pairs(B.size() - 1);
    }
    return GroebnerBasis{std::move(B), order, false};
}

GroebnerBasis reduce_basis(const GroebnerBasis& Bin, const Ring& ring) {
    std::vector<El> B = Bin.elements;
    const Order& order = Bin.order;

    // drop elements whose leading exponent is divisible by another's
    for (;;) {
        bool changed = false;
        for (size_t i = 0; i < B.size() && !changed; ++i) {
            Exp li = leading_term(order, B[i]).first;
            for (size_t j = 0; j < B.size(); ++j) {
                if (i == j) continue;
                Exp lj = leading_term(order, B[j]).first;
                if (exp_divides(lj, li)) {
                    B.erase(B.begin() + i);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) break;
    }

    // full autoreduction of tails
    for (;;) {
        bool changed = false;
        for (size_t i = 0; i < B.size(); ++i) {
            std::vector<El> others;
            for (size_t j = 0; j < B.size(); ++j)
                if (j != i) others.push_back(B[j]);
            if (others.empty()) break;
            El r = reduce(B[i], others, order, ring);
            if (r.is_zero()) {
                B.erase(B.begin() + i);
                changed = true;
                break;
            }
            El m = make_monic(r, order);
            if (!(m == B[i])) {
                B[i] = m;
                changed = true;
            }
        }
        if (!changed) break;
    }

    for (El& b : B) b = make_monic(b, order);
    std::sort(B.begin(), B.end(), [&](const El& a, const El& b) {
        return cmp(order, leading_term(order, a).first, leading_term(order, b).first) == Cmp::Less;
    });
    return GroebnerBasis{std::move(B), order, true};
}

GroebnerBasis reduced_gb(const std::vector<El>& gens, const Order& order, const Ring& ring,
                         std::vector<El>* seen) {
    return reduce_basis(buchberger(gens, order, ring, seen), ring);
}

bool ideal_equal(const std::vector<El>& A, const std::vector<El>& B, const Order& order, const Ring& ring) {
    GroebnerBasis ga = reduced_gb(A, order, ring);
    GroebnerBasis gb = reduced_gb(B, order, ring);
    return ga.elements == gb.elements;
}

std::vector<Poly> initial_ideal_weyl(const std::vector<El>& gens, const Weight& omega, const Order& base) {
    if (!is_in_region(omega)) throw std::invalid_argument("omega outside the region Omega");
    Ring ring{Ring::Weyl, gens.empty() ? 1 : gens.front().n};
    GroebnerBasis B = reduced_gb(gens, refine(base, omega), ring);
    std::vector<Poly> out;
    out.reserve(B.elements.size());
    for (const El& b : B.elements) out.push_back(symbol(omega, b));
    return out;
}

std::vector<Poly> initial_ideal_comm(const std::vector<Poly>& gens, const Weight& nu, const Order& base) {
    Ring ring{Ring::Commutative, gens.empty() ? 1 : gens.front().n};
    GroebnerBasis B = reduced_gb(gens, refine(base, nu), ring);
    std::vector<Poly> out;
    out.reserve(B.elements.size());
    for (const El& b : B.elements) out.push_back(tau_initial(nu, b));
    return out;
}

std::optional<int> krull_dim_quotient(const std::vector<Exp>& monomial_gens, int vars) {
    for (const Exp& m : monomial_gens) {
        bool constant = true;
        for (int32_t e : m)
            if (e != 0) { constant = false; break; }
        if (constant) return std::nullopt; // unit in the ideal: zero ring
    }
    int best = -1;
    for (uint32_t mask = 0; mask < (1u << vars); ++mask) {
        bool ok = true;
        for (const Exp& m : monomial_gens) {
            bool inside = true;
            for (int v = 0; v < vars; ++v)
                if (m[v] != 0 && !(mask & (1u << v))) { inside = false; break; }
            if (inside) { ok = false; break; }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

} // namespace wa
