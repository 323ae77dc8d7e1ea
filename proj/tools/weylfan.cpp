#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wa/json_io.hpp"
#include "wa/parse.hpp"

using namespace wa;

namespace {

struct CommonOpts {
    int n = 1;
    std::string order = "lex";
    std::string file;
    std::vector<std::string> exprs;
    uint64_t seed = 20240817; // accepted everywhere for reproducible scripting
};

void add_common(CLI::App* cmd, CommonOpts& o, bool wants_gens = true) {
    cmd->add_option("--n", o.n, "arity (number of xi/d pairs)")->check(CLI::PositiveNumber);
    cmd->add_option("--order", o.order, "base order: lex | revlex | weight chain \"w1,w2;v1,v2\"");
    cmd->add_option("--seed", o.seed, "seed for randomized runs");
    if (wants_gens) {
        cmd->add_option("--file", o.file, "read generators from file (one per line, # comments)");
        cmd->add_option("exprs", o.exprs, "generator expressions");
    }
}

Weight parse_weight_str(const std::string& s, int two_n) {
    Weight w;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw std::invalid_argument("empty weight entry in '" + s + "'");
            w.push_back(std::stoll(cur));
            cur.clear();
        } else cur += c;
    }
    if ((int)w.size() != two_n)
        throw std::invalid_argument("weight '" + s + "' has " + std::to_string(w.size()) +
                                    " entries, expected " + std::to_string(two_n));
    for (int64_t v : w)
        if (v < 0) throw std::invalid_argument("weight entries must be non-negative");
    return w;
}

Order parse_order_str(const std::string& s, int two_n) {
    if (s == "lex") return Order::lex();
    if (s == "revlex") return Order::lex_reversed(two_n);
    Order o = Order::lex();
    std::string cur;
    std::vector<Weight> chain;
    for (char c : s + ";") {
        if (c == ';') {
            if (!cur.empty()) chain.push_back(parse_weight_str(cur, two_n));
            cur.clear();
        } else cur += c;
    }
    if (chain.empty()) throw std::invalid_argument("bad order spec '" + s + "'");
    o.refinements = chain; // listed outermost first
    return o;
}

std::vector<WeylElement> load_generators(const CommonOpts& o) {
    std::vector<std::string> texts = o.exprs;
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw std::runtime_error("cannot open " + o.file);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (!blank) texts.push_back(line);
        }
    }
    std::vector<WeylElement> gens;
    for (const std::string& t : texts) {
        WeylElement e = parse_weyl(t, o.n);
        if (!e.is_zero()) gens.push_back(e);
    }
    return gens;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string dim_str(const std::optional<int>& d) {
    return d ? std::to_string(*d) : std::string("-inf");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Groebner engine for Weyl algebras under weight orders"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string weight_s, nu_s, format = "json";
    int grid = 7;
    int64_t s_val = 1, tail = 5, smax = 100;
    int s0 = 3, window = 17;

    auto* c_gb = app.add_subcommand("gb", "reduced Groebner basis of the left ideal");
    add_common(c_gb, o);
    c_gb->add_option("--weight", weight_s, "weight refinement omega");

    auto* c_in = app.add_subcommand("in", "initial (characteristic) ideal Gr^omega");
    add_common(c_in, o);
    c_in->add_option("--weight", weight_s, "omega in Omega")->required();

    auto* c_fan = app.add_subcommand("fan", "slope fan of initial ideals (n=1)");
    add_common(c_fan, o);
    c_fan->add_option("--format", format, "json");

    auto* c_ugb = app.add_subcommand("ugb", "universal Groebner basis (n=1)");
    add_common(c_ugb, o);

    auto* c_chi = app.add_subcommand("chi", "number of distinct initial ideals (n=1)");
    add_common(c_chi, o);

    auto* c_gamma = app.add_subcommand("gamma", "stabilization degree bound gamma_nu");
    add_common(c_gamma, o);
    c_gamma->add_option("--nu", nu_s, "weight nu")->required();

    auto* c_cv = app.add_subcommand("charvar", "characteristic ideal with its reduced GB");
    add_common(c_cv, o);
    c_cv->add_option("--weight", weight_s, "omega in Omega")->required();

    auto* c_cone = app.add_subcommand("cone", "critical cone ideal (total-degree leading forms)");
    add_common(c_cone, o);
    c_cone->add_option("--weight", weight_s, "omega in Omega")->required();

    auto* c_stab = app.add_subcommand("stab", "verify Gr^nu Gr^omega = Gr^{nu+s*omega} over a grid");
    add_common(c_stab, o);
    c_stab->add_option("--nu", nu_s, "weight nu")->required();
    c_stab->add_option("--grid", grid, "grid bound for omega entries");
    c_stab->add_option("--tail", tail, "check s up to gamma + tail");
    c_stab->add_option("--weight", weight_s, "single omega instead of the grid");

    auto* c_dim = app.add_subcommand("dim", "Krull dimension of K[X,Y]/Gr^omega (or -inf)");
    add_common(c_dim, o);
    c_dim->add_option("--weight", weight_s, "omega in Omega");
    c_dim->add_option("--grid", grid, "check constancy over the grid instead");

    auto* c_exp = app.add_subcommand("experiment", "half-line incidence cones in the weight plane");
    add_common(c_exp, o, false);
    c_exp->add_option("--s0", s0, "per-line threshold scale");
    c_exp->add_option("--window", window, "window extent");
    c_exp->add_option("--smax", smax, "parameter cutoff");
    c_exp->add_option("--format", format, "json | csv | svg");

    auto* c_parse = app.add_subcommand("parse-check", "parse and reprint in canonical form");
    add_common(c_parse, o);

    bool dim_use_grid = false;
    c_dim->callback([&] { dim_use_grid = c_dim->count("--grid") > 0 || weight_s.empty(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        int two_n = 2 * o.n;
        Order base = parse_order_str(o.order, two_n);

        if (c_gb->parsed()) {
            std::vector<WeylElement> gens = load_generators(o);
            Order ord = weight_s.empty() ? base : refine(base, parse_weight_str(weight_s, two_n));
            GroebnerBasis B = reduced_gb(gens, ord, Ring{Ring::Weyl, o.n});
            print_json({{"n", o.n}, {"basis", basis_json(B.elements)}});
        } else if (c_in->parsed()) {
            std::vector<WeylElement> gens = load_generators(o);
            std::vector<Poly> I = initial_ideal_weyl(gens, parse_weight_str(weight_s, two_n), base);
            print_json({{"n", o.n}, {"initial", basis_json(I)}});
        } else if (c_fan->parsed()) {
            print_json(fan_json(fan_1d(load_generators(o))));
        } else if (c_ugb->parsed()) {
            print_json({{"n", o.n}, {"basis", basis_json(ugb(load_generators(o)).elements)}});
        } else if (c_chi->parsed()) {
            ChiResult c = chi(load_generators(o));
            json j{{"chi", c.count}};
            if (c.bound_C.fits_ulong_p()) j["bound_C"] = c.bound_C.get_ui();
            else j["bound_C"] = c.bound_C.get_str();
            std::cout << j.dump() << "\n";
        } else if (c_gamma->parsed()) {
            std::cout << gamma_bound(load_generators(o), parse_weight_str(nu_s, two_n)) << "\n";
        } else if (c_cv->parsed()) {
            CharIdeal ci = char_ideal(load_generators(o), parse_weight_str(weight_s, two_n));
            print_json({{"omega", ci.omega},
                        {"generators", basis_json(ci.gens)},
                        {"reduced_gb", basis_json(ci.reduced_gb)}});
        } else if (c_cone->parsed()) {
            std::vector<Poly> C = critical_cone_ideal(load_generators(o), parse_weight_str(weight_s, two_n));
            print_json({{"generators", basis_json(C)}});
        } else if (c_stab->parsed()) {
            std::vector<WeylElement> gens = load_generators(o);
            Weight nu = parse_weight_str(nu_s, two_n);
            std::vector<Weight> omegas;
            if (!weight_s.empty()) omegas.push_back(parse_weight_str(weight_s, two_n));
            else omegas = region_grid(o.n, grid);
            std::vector<StabilizationReport> reports = verify_stabilization(gens, nu, omegas, tail);
            print_json(stab_json(reports));
            for (const StabilizationReport& r : reports)
                if (!r.all_pass_beyond_gamma) return 1;
        } else if (c_dim->parsed()) {
            std::vector<WeylElement> gens = load_generators(o);
            if (!dim_use_grid) {
                std::cout << dim_str(dim_char_variety(gens, parse_weight_str(weight_s, two_n))) << "\n";
            } else {
                std::vector<Weight> omegas = region_grid(o.n, grid);
                if (!dimension_constancy(gens, omegas)) {
                    std::cerr << "dimension varies across the grid\n";
                    return 1;
                }
                std::cout << dim_str(dim_char_variety(gens, omegas.front())) << "\n";
            }
        } else if (c_exp->parsed()) {
            ExperimentResult r = halfline_cones(s0, window, smax);
            if (format == "json") print_json(experiment_json(r));
            else std::cout << emit_figure(r, format);
        } else if (c_parse->parsed()) {
            std::vector<std::string> texts = o.exprs;
            for (const std::string& t : texts) std::cout << el_str(parse_weyl(t, o.n), true) << "\n";
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
