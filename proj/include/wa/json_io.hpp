#pragma once

#include <json.hpp>

#include "wa/charvar.hpp"
#include "wa/experiment.hpp"

namespace wa {

using nlohmann::json;

// term: {"l": lambda, "m": mu, "c": "p/q"}; element: leading term first
// under plain lex so output bytes are stable.
inline json element_json(const El& e) {
    json terms = json::array();
    for (auto it = e.t.rbegin(); it != e.t.rend(); ++it) {
        const Exp& ex = it->first;
        json l = json::array(), m = json::array();
        for (int i = 0; i < e.n; ++i) l.push_back(ex[i]);
        for (int i = 0; i < e.n; ++i) m.push_back(ex[e.n + i]);
        terms.push_back({{"l", l}, {"m", m}, {"c", q_str(it->second)}});
    }
    return terms;
}

inline json basis_json(const std::vector<El>& basis) {
    json a = json::array();
    for (const El& e : basis) a.push_back(element_json(e));
    return a;
}

inline json slope_json(const Slope& s) {
    return s.inf ? json("inf") : json(s.value.get_str());
}

inline json fan_json(const FanDecomposition& fan) {
    json cones = json::array();
    for (const SlopeCone& c : fan.cones) {
        cones.push_back({{"lower", slope_json(c.lower)},
                         {"upper", slope_json(c.upper)},
                         {"lower_closed", c.lower_closed},
                         {"upper_closed", c.upper_closed},
                         {"basis", basis_json(c.gb.elements)},
                         {"initial", basis_json(c.initial_gens)}});
    }
    return {{"cones", cones}};
}

inline json stab_json(const std::vector<StabilizationReport>& reports) {
    json a = json::array();
    for (const StabilizationReport& r : reports) {
        a.push_back({{"nu", r.nu},
                     {"omega", r.omega},
                     {"gamma", r.gamma_bound},
                     {"range", {r.range_lo, r.range_hi}},
                     {"onset", r.onset},
                     {"pass", r.all_pass_beyond_gamma}});
    }
    return a;
}

inline json experiment_json(const ExperimentResult& r) {
    json classes = json::array();
    int degenerate = 0;
    for (const ColourClass& c : r.classes) {
        if (c.degenerate) ++degenerate;
        classes.push_back({{"id", c.id},
                           {"size", c.members.size()},
                           {"degenerate", c.degenerate},
                           {"vertex", {c.vertex[0], c.vertex[1]}},
                           {"slope_lo", slope_json(c.slope_lo)},
                           {"slope_hi", slope_json(c.slope_hi)}});
    }
    return {{"s0", r.s0},
            {"window", r.window},
            {"s_max", r.s_max},
            {"half_lines", r.lines.size()},
            {"class_count", r.classes.size()},
            {"degenerate_count", degenerate},
            {"classes", classes}};
}

} // namespace wa
