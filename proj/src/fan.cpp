#include "wa/fan.hpp"

#include <algorithm>
#include <set>

namespace wa {

namespace {

const Order kRefOrder = Order::lex();

bool el_less(const El& a, const El& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.t < b.t;
}

// Scale so the reference-lex leading coefficient is 1: elements that agree
// up to a scalar (the same element made monic for different cone orders)
// collapse to one representative in universal bases.
El ref_normalize(const El& e) {
    if (e.is_zero()) return e;
    return scale(e, Q(1) / leading_term(Order::lex(), e).second);
}

// Reduced commutative GB under the reference order: canonical signature of
// an ideal of K[X,Y].
std::vector<El> ideal_signature(const std::vector<Poly>& gens, int n) {
    Ring ring{Ring::Commutative, n};
    return reduced_gb(gens, kRefOrder, ring).elements;
}

// Tie slopes of a support: omega.(e - e') = 0 with omega = (w1, w2) gives
// slope w2/w1 = -dl/dm when dl and dm have opposite signs.
void harvest_slopes(const El& e, std::set<Q>& out) {
    std::vector<Exp> sup;
    for (const auto& [ex, c] : e.t) sup.push_back(ex);
    for (size_t i = 0; i < sup.size(); ++i)
        for (size_t j = i + 1; j < sup.size(); ++j) {
            int64_t dl = sup[i][0] - sup[j][0];
            int64_t dm = sup[i][1] - sup[j][1];
            if (dl == 0 || dm == 0) continue; // ties only on the boundary rays
            if ((dl > 0) == (dm > 0)) continue;
            Q slope = make_q(Z(-dl), Z(dm));
            if (slope > 0) out.insert(slope);
        }
}

struct Piece {
    bool is_point = false;
    Slope lo, hi;           // for points lo == hi
    GroebnerBasis gb;
    std::vector<Poly> initial;
    std::vector<El> signature;
};

Weight interior_weight(const Slope& a, const Slope& b) {
    // a rational weight strictly between a and b (b possibly infinite)
    Q s = b.inf ? Q(a.value + 1) : Q(a.value + (b.value - a.value) / 3);
    return Weight{int64_t(s.get_den().get_si()), int64_t(s.get_num().get_si())};
}

Weight interior_weight2(const Slope& a, const Slope& b) {
    Q s = b.inf ? Q(a.value + 2) : Q(a.value + (b.value - a.value) * 2 / 3);
    return Weight{int64_t(s.get_den().get_si()), int64_t(s.get_num().get_si())};
}

} // namespace

Weight slope_weight(const Slope& s) {
    if (s.inf) return Weight{0, 1};
    return Weight{int64_t(s.value.get_den().get_si()), int64_t(s.value.get_num().get_si())};
}

FanDecomposition fan_1d(const std::vector<WeylElement>& gens) {
    int n = gens.empty() ? 1 : gens.front().n;
    if (n != 1) throw std::invalid_argument("fan_1d requires n = 1");
    Ring ring{Ring::Weyl, 1};

    std::set<Q> breaks;
    for (const El& g : gens) harvest_slopes(g, breaks);

    // refine the breakpoint set until GB runs on every piece stop
    // producing new tie slopes
    std::vector<Piece> pieces;
    for (int round = 0;; ++round) {
        if (round > 64) throw std::runtime_error("fan_1d: breakpoint refinement did not stabilize");
        pieces.clear();
        std::vector<Slope> pts;
        pts.push_back(Slope{Q(0), false});
        for (const Q& b : breaks) pts.push_back(Slope{b, false});
        pts.push_back(Slope{Q(0), true});

        std::set<Q> found = breaks;
        auto run = [&](const Weight& w, std::vector<El>* seenp) {
            GroebnerBasis B = reduced_gb(gens, refine(kRefOrder, w), ring, seenp);
            if (seenp)
                for (const El& e : *seenp) harvest_slopes(e, found);
            return B;
        };

        bool grew = false;
        for (size_t i = 0; i < pts.size() && !grew; ++i) {
            // point piece
            {
                std::vector<El> seen;
                Weight w = slope_weight(pts[i]);
                GroebnerBasis B = run(w, &seen);
                Piece p;
                p.is_point = true;
                p.lo = p.hi = pts[i];
                p.gb = B;
                for (const El& b : B.elements) p.initial.push_back(symbol(w, b));
                p.signature = ideal_signature(p.initial, 1);
                pieces.push_back(std::move(p));
            }
            if (found != breaks) { breaks = found; grew = true; break; }
            if (i + 1 == pts.size()) break;
            // open interval piece
            {
                std::vector<El> seen1, seen2;
                Weight w1 = interior_weight(pts[i], pts[i + 1]);
                Weight w2 = interior_weight2(pts[i], pts[i + 1]);
                GroebnerBasis B1 = run(w1, &seen1);
                GroebnerBasis B2 = run(w2, &seen2);
                if (found != breaks) { breaks = found; grew = true; break; }
                if (!(B1.elements == B2.elements))
                    throw std::runtime_error("fan_1d: interval samples disagree after tie harvesting");
                Piece p;
                p.lo = pts[i];
                p.hi = pts[i + 1];
                p.gb = B1;
                for (const El& b : B1.elements) p.initial.push_back(symbol(w1, b));
                p.signature = ideal_signature(p.initial, 1);
                pieces.push_back(std::move(p));
            }
        }
        if (!grew) break;
    }

    // assemble cones, merging adjacent pieces with equal initial ideals
    FanDecomposition fan;
    for (Piece& p : pieces) {
        SlopeCone c;
        c.lower = p.lo;
        c.upper = p.hi;
        c.lower_closed = p.is_point;
        c.upper_closed = p.is_point;
        c.gb = p.gb;
        c.initial_gens = p.initial;
        fan.cones.push_back(std::move(c));
    }
    // merge pass using signatures
    std::vector<std::vector<El>> sigs;
    for (Piece& p : pieces) sigs.push_back(p.signature);
    FanDecomposition merged;
    std::vector<std::vector<El>> msigs;
    for (size_t i = 0; i < fan.cones.size(); ++i) {
        if (!merged.cones.empty() && msigs.back() == sigs[i]) {
            SlopeCone& prev = merged.cones.back();
            prev.upper = fan.cones[i].upper;
            prev.upper_closed = fan.cones[i].upper_closed;
            // prefer interval (interior) gb data when available
            if (!fan.cones[i].degenerate()) {
                prev.gb = fan.cones[i].gb;
                prev.initial_gens = fan.cones[i].initial_gens;
            }
        } else {
            merged.cones.push_back(fan.cones[i]);
            msigs.push_back(sigs[i]);
        }
    }
    return merged;
}

size_t classify_region(const FanDecomposition& fan, const Weight& omega) {
    if (omega.size() != 2 || !is_in_region(omega)) throw std::invalid_argument("omega must lie in Omega, n = 1");
    Slope s;
    if (omega[0] == 0) s.inf = true;
    else s.value = make_q(Z(omega[1]), Z(omega[0]));
    for (size_t i = 0; i < fan.cones.size(); ++i) {
        const SlopeCone& c = fan.cones[i];
        bool above_lo = c.lower < s || (c.lower_closed && c.lower == s);
        bool below_hi = s < c.upper || (c.upper_closed && s == c.upper);
        if (above_lo && below_hi) return i;
    }
    throw std::logic_error("classify_region: slope not covered by fan");
}

UniversalBasis ugb(const std::vector<WeylElement>& gens) {
    int n = gens.empty() ? 1 : gens.front().n;
    if (n != 1) throw std::invalid_argument("ugb requires n = 1 (use grid_basis_union)");
    Ring ring{Ring::Weyl, 1};
    FanDecomposition fan = fan_1d(gens);

    auto less = [](const El& a, const El& b) { return el_less(a, b); };
    std::set<El, decltype(less)> out(less);
    for (const SlopeCone& c : fan.cones)
        for (const El& b : c.gb.elements) out.insert(ref_normalize(b));
    for (Weight w : {Weight{1, 0}, Weight{0, 1}}) {
        for (Order base : {Order::lex(), Order::lex_reversed(2)}) {
            GroebnerBasis B = reduced_gb(gens, refine(base, w), ring);
            for (const El& b : B.elements) out.insert(ref_normalize(b));
        }
    }
    return UniversalBasis{std::vector<El>(out.begin(), out.end())};
}

Z bound_C_of(const std::vector<WeylElement>& universal) {
    Z b = 1;
    for (const El& u : universal) b <<= u.t.size();
    return b;
}

ChiResult chi(const std::vector<WeylElement>& gens) {
    FanDecomposition fan = fan_1d(gens);
    std::vector<std::vector<El>> sigs;
    for (const SlopeCone& c : fan.cones) {
        std::vector<El> s = reduced_gb(c.initial_gens, kRefOrder, Ring{Ring::Commutative, 1}).elements;
        if (std::find(sigs.begin(), sigs.end(), s) == sigs.end()) sigs.push_back(s);
    }
    ChiResult r;
    r.count = (int)sigs.size();
    r.bound_C = bound_C_of(ugb(gens).elements);
    return r;
}

int64_t gamma_of_basis(const std::vector<WeylElement>& universal, const Weight& nu) {
    int64_t g = 0;
    for (const El& u : universal) {
        Deg d = deg_el(nu, u);
        if (d.finite && d.value > g) g = d.value;
    }
    return g;
}

int64_t gamma_1d(const std::vector<WeylElement>& gens, const Weight& nu) {
    return gamma_of_basis(ugb(gens).elements, nu);
}

namespace {

void enum_weights(int pos, int dims, int bound, Weight& cur, std::vector<Weight>& out) {
    if (pos == dims) {
        if (is_in_region(cur)) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= bound; ++v) {
        cur[pos] = v;
        enum_weights(pos + 1, dims, bound, cur, out);
    }
}

} // namespace

std::vector<Weight> region_grid(int n, int bound) {
    Weight cur(2 * n, 0);
    std::vector<Weight> grid;
    enum_weights(0, 2 * n, bound, cur, grid);
    return grid;
}

std::vector<GridClass> grid_sample(const std::vector<WeylElement>& gens, int bound) {
    int n = gens.empty() ? 1 : gens.front().n;
    std::vector<Weight> grid = region_grid(n, bound);

    std::vector<std::vector<El>> sigs;
    std::vector<GridClass> out;
    for (const Weight& w : grid) {
        std::vector<Poly> in = initial_ideal_weyl(gens, w, kRefOrder);
        std::vector<El> sig = ideal_signature(in, n);
        size_t id = 0;
        for (; id < sigs.size(); ++id)
            if (sigs[id] == sig) break;
        if (id == sigs.size()) sigs.push_back(sig);
        out.push_back(GridClass{w, id});
    }
    return out;
}

std::vector<WeylElement> grid_basis_union(const std::vector<WeylElement>& gens, int bound) {
    int n = gens.empty() ? 1 : gens.front().n;
    Ring ring{Ring::Weyl, n};
    std::vector<Weight> grid = region_grid(n, bound);

    auto less = [](const El& a, const El& b) { return el_less(a, b); };
    std::set<El, decltype(less)> out(less);
    for (const Weight& w : grid) {
        GroebnerBasis B = reduced_gb(gens, refine(kRefOrder, w), ring);
        for (const El& b : B.elements) out.insert(ref_normalize(b));
    }
    return std::vector<El>(out.begin(), out.end());
}

} // namespace wa
