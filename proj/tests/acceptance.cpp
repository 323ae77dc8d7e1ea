// End-to-end acceptance suite: one line per criterion, nonzero exit if any
// asserted criterion fails. Conjecture-level checks (criterion 10) report
// violations without failing the run.

#include <cstdio>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "wa/experiment.hpp"

using namespace wa;
using th::W;

namespace {

int g_failures = 0;

void report(int idx, const char* title, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d (%s): %s%s%s\n", idx, title, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++g_failures;
}

const Order kLex = Order::lex();

// --- 1: closed product formula vs the action on monomials ------------------

bool oracle_pairs(std::mt19937_64& rng, int n, int count, int max_total_deg) {
    std::vector<std::vector<int32_t>> alphas;
    if (n == 1) {
        for (int32_t a = 0; a <= max_total_deg; ++a) alphas.push_back({a});
    } else {
        for (int32_t a = 0; a <= max_total_deg; ++a)
            for (int32_t b = 0; a + b <= max_total_deg; ++b) alphas.push_back({a, b});
    }
    for (int i = 0; i < count; ++i) {
        El u = th::random_el(rng, n, 6, 5), v = th::random_el(rng, n, 6, 5);
        El uv = weyl_mul(u, v);
        for (const auto& alpha : alphas) {
            PolyX m = px_monomial(n, alpha);
            if (!(apply(uv, m) == apply(u, apply(v, m)))) return false;
        }
    }
    return true;
}

void criterion1() {
    std::mt19937_64 rng(1001);
    bool ok = oracle_pairs(rng, 1, 500, 8) && oracle_pairs(rng, 2, 100, 8);
    report(1, "product/action oracle", ok);
}

// --- 2: degree laws --------------------------------------------------------

void criterion2() {
    std::mt19937_64 rng(1002);
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        int n = i % 5 == 0 ? 2 : 1;
        El u = th::random_el(rng, n, 4, 4), v = th::random_el(rng, n, 4, 4);
        Weight w = th::random_weight(rng, n, 6);
        Deg du = deg_el(w, u), dv = deg_el(w, v);
        int64_t mx = std::max(du.value, dv.value);
        Deg ds = deg_el(w, add(u, v));
        if (ds.finite && ds.value > mx) ok = false;
        if (du.value != dv.value && !(ds == Deg::of(mx))) ok = false;
        if (!(deg_el(w, weyl_mul(u, v)) == Deg::of(du.value + dv.value))) ok = false;

        Weight wr = th::random_weight(rng, n, 6, true);
        int64_t drop = wr[0] + wr[n];
        for (int j = 1; j < n; ++j) drop = std::min(drop, wr[j] + wr[n + j]);
        Deg dc = deg_el(wr, sub(weyl_mul(u, v), weyl_mul(v, u)));
        if (dc.finite && dc.value > deg_el(wr, u).value + deg_el(wr, v).value - drop) ok = false;
    }
    report(2, "degree laws", ok);
}

// --- 3: GB soundness -------------------------------------------------------

void criterion3() {
    std::mt19937_64 rng(1003);
    bool ok = true;
    for (const th::CorpusIdeal& ci : th::corpus()) {
        Ring ring{Ring::Weyl, ci.n};
        for (const Order& o : {Order::lex(), Order::lex_reversed(2 * ci.n),
                               refine(Order::lex(), Weight(2 * ci.n, 1))}) {
            GroebnerBasis B = reduced_gb(ci.gens, o, ring);
            for (size_t i = 0; i < B.elements.size() && ok; ++i)
                for (size_t j = i + 1; j < B.elements.size() && ok; ++j)
                    if (!reduce(s_element(B.elements[i], B.elements[j], o, ring), B.elements, o,
                                ring)
                             .is_zero())
                        ok = false;
            for (int t = 0; t < 100 && ok; ++t) {
                El w = el_zero(ci.n);
                for (const El& g : ci.gens)
                    w = add(w, ring.mul(th::random_el(rng, ci.n, 3, 3), g));
                if (!reduce(w, B.elements, o, ring).is_zero()) ok = false;
            }
        }
    }
    report(3, "basis soundness", ok);
}

// --- 4: stabilization theorem ---------------------------------------------

std::vector<Weight> nu_set(int n) {
    if (n == 1) return {{1, 1}, {0, 1}, {1, 0}, {2, 3}};
    return {{1, 1, 1, 1}, {0, 0, 1, 1}};
}

void criterion4() {
    bool ok = true;
    std::string detail;
    for (const th::CorpusIdeal& ci : th::corpus()) {
        std::vector<Weight> grid = region_grid(ci.n, 7);
        for (const Weight& nu : nu_set(ci.n)) {
            for (const StabilizationReport& r : verify_stabilization(ci.gens, nu, grid, 5))
                if (!r.all_pass_beyond_gamma) {
                    ok = false;
                    if (detail.empty()) detail = "first failure on " + ci.name;
                }
        }
    }
    report(4, "graded stabilization", ok, detail);
}

// --- 5: dimension constancy ------------------------------------------------

void criterion5() {
    bool ok = true;
    for (const th::CorpusIdeal& ci : th::corpus())
        if (!dimension_constancy(ci.gens, region_grid(ci.n, 7))) ok = false;
    if (dim_char_variety({W("d^2 - x")}, Weight{1, 1}) != 1) ok = false;
    report(5, "dimension constancy", ok);
}

// --- 6: total-degree corollaries ------------------------------------------

void criterion6() {
    bool ok = true;
    for (const th::CorpusIdeal& ci : th::corpus()) {
        Ring comm{Ring::Commutative, ci.n};
        Weight ones(2 * ci.n, 1);
        // a (1,..,1)-initial ideal is its own total-degree leading-form ideal
        std::vector<Poly> g = char_ideal(ci.gens, ones).gens;
        if (!ideal_equal(g, initial_ideal_comm(g, ones, kLex), kLex, comm)) ok = false;

        // the critical cone is the characteristic ideal far along ones+s*omega
        int64_t gamma = gamma_bound(ci.gens, ones);
        for (const Weight& w : region_grid(ci.n, 7)) {
            std::vector<Poly> cone = critical_cone_ideal(ci.gens, w);
            for (int64_t s = gamma + 1; s <= gamma + 5 && ok; ++s) {
                Weight shifted(2 * ci.n);
                for (size_t i = 0; i < shifted.size(); ++i) shifted[i] = 1 + s * w[i];
                if (!ideal_equal(cone, char_ideal(ci.gens, shifted).gens, kLex, comm)) ok = false;
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    report(6, "critical cone corollaries", ok);
}

// --- 7: finiteness bound and fan/brute-force agreement ---------------------

void criterion7() {
    bool ok = true;
    Ring comm{Ring::Commutative, 1};
    for (const th::CorpusIdeal& ci : th::corpus_1d()) {
        ChiResult r = chi(ci.gens);
        if (Z(r.count) > r.bound_C) ok = false;
        FanDecomposition fan = fan_1d(ci.gens);
        for (const Weight& w : region_grid(1, 12)) {
            const SlopeCone& c = fan.cones[classify_region(fan, w)];
            if (!ideal_equal(initial_ideal_weyl(ci.gens, w, kLex), c.initial_gens, kLex, comm)) {
                ok = false;
                break;
            }
        }
    }
    report(7, "class-count bound and fan agreement", ok);
}

// --- 8: universal basis under random orders --------------------------------

void criterion8() {
    std::mt19937_64 rng(1008);
    bool ok = true;
    Ring ring{Ring::Weyl, 1};
    for (const th::CorpusIdeal& ci : th::corpus_1d()) {
        UniversalBasis u = ugb(ci.gens);
        for (int t = 0; t < 50 && ok; ++t) {
            Order o = th::random_order(rng, 1);
            GroebnerBasis fresh = reduced_gb(ci.gens, o, ring);
            std::vector<Exp> lu, lf;
            for (const El& e : u.elements) lu.push_back(leading_term(o, e).first);
            for (const El& e : fresh.elements) lf.push_back(leading_term(o, e).first);
            if (!th::monomial_ideal_equal(lu, lf)) ok = false;
        }
    }
    report(8, "universal basis", ok);
}

// --- 9: half-line incidence experiment -------------------------------------

void criterion9() {
    ExperimentResult r = halfline_cones(3, 17, 100);
    int degenerate = 0;
    for (const ColourClass& c : r.classes) degenerate += c.degenerate;
    std::set<std::array<int64_t, 2>> lower;
    for (const ColourClass& c : r.classes)
        if (c.vertex[0] > c.vertex[1]) lower.insert(c.vertex);
    std::set<std::array<int64_t, 2>> expected{
        {1, 0}, {2, 1}, {3, 1}, {4, 1}, {3, 2}, {5, 2}, {4, 3}, {5, 3}};
    bool ok = r.classes.size() == 17 && degenerate == 9 && lower == expected;
    std::ostringstream d;
    d << "classes=" << r.classes.size() << " degenerate=" << degenerate
      << " (window=17, s_max=100)";
    report(9, "incidence cones", ok, d.str());
}

// --- 10: conjecture and Fibonacci reports (never fail the suite) -----------

void criterion10() {
    bool all_satisfied = true;
    std::ostringstream d;
    for (const th::CorpusIdeal& ci : th::corpus_1d()) {
        ConjectureReport r = conjecture_report(ci.gens);
        if (!r.satisfied) {
            all_satisfied = false;
            d << " VIOLATION " << ci.name << " chi=" << r.chi << " bound=" << r.bound.get_str();
        }
    }
    d << (all_satisfied ? "class-count bound holds on the corpus;" : ";");
    d << " fibonacci vs 2^s0:";
    for (int s0 = 0; s0 <= 8; ++s0) {
        size_t count = fibonacci_vertex_set(s0).size();
        size_t pow2 = size_t(1) << s0;
        if (count != pow2) d << " s0=" << s0 << ":" << count << "!=" << pow2;
    }
    report(10, "conjecture reports", true, d.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
