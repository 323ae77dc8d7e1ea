#include "wa/charvar.hpp"

#include <algorithm>

namespace wa {

namespace {

const Order kRefOrder = Order::lex();

int arity_of(const std::vector<El>& gens) { return gens.empty() ? 1 : gens.front().n; }

Weight all_ones(int n) { return Weight(2 * n, 1); }

Weight nu_plus_s_omega(const Weight& nu, const Weight& omega, int64_t s) {
    Weight w(nu.size());
    for (size_t i = 0; i < nu.size(); ++i) w[i] = nu[i] + s * omega[i];
    return w;
}

} // namespace

CharIdeal char_ideal(const std::vector<WeylElement>& gens, const Weight& omega) {
    CharIdeal ci;
    ci.omega = omega;
    ci.gens = initial_ideal_weyl(gens, omega, kRefOrder);
    Ring ring{Ring::Commutative, arity_of(gens)};
    ci.reduced_gb = reduced_gb(ci.gens, kRefOrder, ring).elements;
    return ci;
}

std::vector<Poly> critical_cone_ideal(const std::vector<WeylElement>& gens, const Weight& omega) {
    CharIdeal ci = char_ideal(gens, omega);
    return initial_ideal_comm(ci.gens, all_ones(arity_of(gens)), kRefOrder);
}

int64_t gamma_bound(const std::vector<WeylElement>& gens, const Weight& nu) {
    if (arity_of(gens) == 1) return gamma_1d(gens, nu);
    return gamma_of_basis(grid_basis_union(gens, 7), nu);
}

bool stabilization_check(const std::vector<WeylElement>& gens, const Weight& nu,
                         const Weight& omega, int64_t s) {
    int n = arity_of(gens);
    CharIdeal ci = char_ideal(gens, omega);
    std::vector<Poly> lhs = initial_ideal_comm(ci.gens, nu, kRefOrder);
    std::vector<Poly> rhs = initial_ideal_weyl(gens, nu_plus_s_omega(nu, omega, s), kRefOrder);
    return ideal_equal(lhs, rhs, kRefOrder, Ring{Ring::Commutative, n});
}

std::vector<StabilizationReport> verify_stabilization(const std::vector<WeylElement>& gens,
                                                      const Weight& nu,
                                                      const std::vector<Weight>& omegas,
                                                      int64_t tail) {
    int n = arity_of(gens);
    Ring comm{Ring::Commutative, n};
    int64_t gamma = gamma_bound(gens, nu);
    int64_t hi = gamma + tail;

    std::vector<StabilizationReport> out;
    out.reserve(omegas.size());
    for (const Weight& omega : omegas) {
        CharIdeal ci = char_ideal(gens, omega);
        std::vector<El> lhs_sig =
            reduced_gb(initial_ideal_comm(ci.gens, nu, kRefOrder), kRefOrder, comm).elements;

        StabilizationReport rep;
        rep.nu = nu;
        rep.omega = omega;
        rep.gamma_bound = gamma;
        rep.range_lo = 1;
        rep.range_hi = hi;

        int64_t last_fail = 0;
        for (int64_t s = 1; s <= hi; ++s) {
            std::vector<El> rhs_sig =
                reduced_gb(initial_ideal_weyl(gens, nu_plus_s_omega(nu, omega, s), kRefOrder),
                           kRefOrder, comm)
                    .elements;
            if (!(rhs_sig == lhs_sig)) last_fail = s;
        }
        rep.onset = last_fail + 1;
        rep.all_pass_beyond_gamma = last_fail <= gamma;
        out.push_back(std::move(rep));
    }
    return out;
}

int64_t kappa_hat(const std::vector<WeylElement>& gens, const Weight& nu,
                  const std::vector<Weight>& omegas, int64_t tail) {
    int64_t k = 0;
    for (const StabilizationReport& r : verify_stabilization(gens, nu, omegas, tail))
        k = std::max(k, r.onset - 1);
    return k;
}

std::optional<int> dim_char_variety(const std::vector<WeylElement>& gens, const Weight& omega) {
    int n = arity_of(gens);
    CharIdeal ci = char_ideal(gens, omega);
    std::vector<Exp> leads;
    leads.reserve(ci.reduced_gb.size());
    for (const Poly& g : ci.reduced_gb) leads.push_back(leading_term(kRefOrder, g).first);
    return krull_dim_quotient(leads, 2 * n);
}

bool dimension_constancy(const std::vector<WeylElement>& gens, const std::vector<Weight>& omegas) {
    if (omegas.empty()) throw std::invalid_argument("dimension_constancy needs at least one weight");
    std::optional<int> first = dim_char_variety(gens, omegas.front());
    for (size_t i = 1; i < omegas.size(); ++i)
        if (dim_char_variety(gens, omegas[i]) != first) return false;
    return true;
}

} // namespace wa
