#include "wa/weyl.hpp"

#include <sstream>

namespace wa {

namespace {

// Enumerates k with 0 <= k_i <= min(b_i, c_i) and accumulates the
// normal-form summands of xi^a d^b * xi^c d^d into out.
void mul_term_pair(int n, const Exp& e1, const Exp& e2, const Q& coef, El& out) {
    std::vector<int32_t> kmax(n);
    for (int i = 0; i < n; ++i) kmax[i] = std::min(e1[n + i], e2[i]);
    std::vector<int32_t> k(n, 0);
    for (;;) {
        Z factor = 1;
        for (int i = 0; i < n; ++i) {
            factor *= factorial_z(k[i]);
            factor *= binomial_z(e1[n + i], k[i]);
            factor *= binomial_z(e2[i], k[i]);
        }
        Exp ex(2 * n);
        for (int i = 0; i < n; ++i) {
            ex[i] = e1[i] + e2[i] - k[i];
            ex[n + i] = e1[n + i] + e2[n + i] - k[i];
        }
        add_term(out, ex, coef * Q(factor));
        int i = 0;
        while (i < n && k[i] == kmax[i]) k[i++] = 0;
        if (i == n) break;
        ++k[i];
    }
}

} // namespace

El weyl_mul(const El& u, const El& v) {
    if (u.n != v.n) throw std::invalid_argument("arity mismatch in weyl_mul");
    El r{u.n, {}};
    for (const auto& [e1, c1] : u.t)
        for (const auto& [e2, c2] : v.t)
            mul_term_pair(u.n, e1, e2, c1 * c2, r);
    return r;
}

El comm_mul(const El& u, const El& v) {
    if (u.n != v.n) throw std::invalid_argument("arity mismatch in comm_mul");
    El r{u.n, {}};
    for (const auto& [e1, c1] : u.t)
        for (const auto& [e2, c2] : v.t)
            add_term(r, exp_add(e1, e2), c1 * c2);
    return r;
}

PolyX apply(const El& w, const PolyX& p) {
    if (w.n != p.n) throw std::invalid_argument("arity mismatch in apply");
    int n = w.n;
    PolyX r{n, {}};
    for (const auto& [ex, c] : w.t) {
        for (const auto& [alpha, pc] : p.t) {
            // d^mu(x^alpha) vanishes unless alpha >= mu; otherwise multiply
            // by the falling factorial and shift by lambda - mu.
            bool ok = true;
            Z fall = 1;
            std::vector<int32_t> beta(n);
            for (int i = 0; i < n; ++i) {
                int32_t mu = ex[n + i];
                if (alpha[i] < mu) { ok = false; break; }
                for (int32_t j = 0; j < mu; ++j) fall *= (alpha[i] - j);
                beta[i] = alpha[i] - mu + ex[i];
            }
            if (!ok) continue;
            Q coef = c * pc * Q(fall);
            auto it = r.t.find(beta);
            if (it == r.t.end()) {
                if (coef != 0) r.t.emplace(beta, coef);
            } else {
                it->second += coef;
                if (it->second == 0) r.t.erase(it);
            }
        }
    }
    return r;
}

std::string el_str(const El& e, bool weyl) {
    if (e.t.empty()) return "0";
    int n = e.n;
    std::ostringstream os;
    bool first = true;
    for (auto it = e.t.rbegin(); it != e.t.rend(); ++it) {
        const auto& ex = it->first;
        Q a = it->second;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        auto put = [&](const char* base, int idx, int32_t p) {
            if (p == 0) return;
            if (any_var) vars << "*";
            vars << base;
            if (n > 1) vars << (idx + 1);
            if (p > 1) vars << "^" << p;
            any_var = true;
        };
        for (int i = 0; i < n; ++i) put(weyl ? "x" : "X", i, ex[i]);
        for (int i = 0; i < n; ++i) put(weyl ? "d" : "Y", i, ex[n + i]);
        if (!any_var) {
            os << q_str(a);
        } else {
            if (a != 1) os << q_str(a) << "*";
            os << vars.str();
        }
    }
    return os.str();
}

} // namespace wa
