#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "wa/fan.hpp"

namespace wa {

// Half-line nu + s*omega in the weight plane, points taken for s > s_min.
// omega is stored primitive (gcd of the entries is 1) and lies in Omega.
struct HalfLine {
    std::array<int64_t, 2> nu;
    std::array<int64_t, 2> omega;
    int64_t s_min = 0;
};

struct ColourClass {
    int id = 0;
    std::vector<size_t> members; // indices into the half-line list, sorted
    std::array<int64_t, 2> vertex{0, 0};
    Slope slope_lo, slope_hi; // extremal member directions
    bool degenerate = false;  // all members lie on one line
};

struct ExperimentResult {
    int s0 = 0;
    int window = 0;
    int64_t s_max = 0;
    std::vector<HalfLine> lines;
    std::vector<ColourClass> classes; // sorted by vertex, then direction
};

// Incidence-colouring experiment on the weight plane.
//
// Enumerates half-lines nu + s*omega with nu in [0,window]^2 and primitive
// omega with entries <= window. Each line carries the threshold
// s_min = s0 * max(nu): points are taken for s_min < s <= s_max, so lines
// based further out start proportionally later, and only lines whose first
// integer point nu + (s_min+1)*omega lies inside the window are kept.
// Two half-lines are incident when their open-bounded segments share a
// point (exact rational intersection; collinear overlap counts). Colour
// classes are the connected components of the incidence graph.
ExperimentResult halfline_cones(int s0, int window = 17, int64_t s_max = 100);

// Literal enumeration of the pairs satisfying
//   (a) F(1) <= x1 <= F(2+s0), (b) F(0) <= x2 <= F(1+s0),
//   (c) gcd(x1,x2) = 1,        (d) x1 > x2,
// with F the Fibonacci sequence (F(0)=0, F(1)=1).
std::vector<std::array<int64_t, 2>> fibonacci_vertex_set(int s0);

// chi(L) <= 2^{1+gamma(L)} + 1, reported and never asserted.
struct ConjectureReport {
    int chi = 0;
    int64_t gamma = 0;
    Z bound;
    bool satisfied = false;
};
ConjectureReport conjecture_report(const std::vector<WeylElement>& gens);

// CSV (class_id, degenerate, vertex, direction bounds) or a standalone SVG
// with one painted wedge per class.
std::string emit_figure(const ExperimentResult& r, const std::string& format);

} // namespace wa
