#include "wa/experiment.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wa {

namespace {

int64_t cross2(int64_t ax, int64_t ay, int64_t bx, int64_t by) { return ax * by - ay * bx; }

// num / cr in the half-open interval (lo, hi], without dividing
bool ratio_in(int64_t num, int64_t cr, int64_t lo, int64_t hi) {
    if (cr > 0) return lo * cr < num && num <= hi * cr;
    return hi * cr <= num && num < lo * cr;
}

// open-bounded segments {nu + s*omega : s_min < s <= s_max} share a point?
bool incident(const HalfLine& A, const HalfLine& B, int64_t s_max) {
    int64_t dx = B.nu[0] - A.nu[0], dy = B.nu[1] - A.nu[1];
    int64_t cr = cross2(A.omega[0], A.omega[1], B.omega[0], B.omega[1]);
    if (cr != 0) {
        int64_t snum = cross2(dx, dy, B.omega[0], B.omega[1]); // s = snum/cr on A
        int64_t tnum = cross2(dx, dy, A.omega[0], A.omega[1]); // t = tnum/cr on B
        return ratio_in(snum, cr, A.s_min, s_max) && ratio_in(tnum, cr, B.s_min, s_max);
    }
    // primitive directions in the closed first quadrant: parallel means equal
    if (A.omega != B.omega) return false;
    if (cross2(dx, dy, A.omega[0], A.omega[1]) != 0) return false; // distinct parallels
    // B's parameter t maps to s = t + k on A's line
    int64_t k = A.omega[0] != 0 ? dx / A.omega[0] : dy / A.omega[1];
    int64_t lo = std::max(A.s_min, B.s_min + k);
    int64_t hi = std::min(s_max, s_max + k);
    return lo < hi;
}

struct UnionFind {
    std::vector<size_t> p;
    explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), size_t(0)); }
    size_t find(size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(size_t a, size_t b) { p[find(a)] = find(b); }
};

Slope dir_slope(const std::array<int64_t, 2>& w) {
    Slope s;
    if (w[0] == 0) s.inf = true;
    else s.value = make_q(Z(w[1]), Z(w[0]));
    return s;
}

} // namespace

ExperimentResult halfline_cones(int s0, int window, int64_t s_max) {
    if (window < 1) throw std::invalid_argument("window must be positive");
    if (s0 < 0) throw std::invalid_argument("s0 must be non-negative");

    ExperimentResult r;
    r.s0 = s0;
    r.window = window;
    r.s_max = s_max;

    // primitive directions in Omega with entries <= window
    std::vector<std::array<int64_t, 2>> dirs;
    for (int64_t wx = 0; wx <= window; ++wx)
        for (int64_t wy = 0; wy <= window; ++wy) {
            if (wx + wy == 0) continue;
            if (std::gcd(wx, wy) != 1) continue;
            dirs.push_back({wx, wy});
        }

    for (int64_t nx = 0; nx <= window; ++nx)
        for (int64_t ny = 0; ny <= window; ++ny) {
            int64_t T = (int64_t)s0 * std::max(nx, ny);
            if (T + 1 > s_max) continue;
            for (const auto& d : dirs) {
                // keep only lines whose first integer point is in the window
                int64_t fx = nx + (T + 1) * d[0], fy = ny + (T + 1) * d[1];
                if (fx > window || fy > window) continue;
                r.lines.push_back(HalfLine{{nx, ny}, d, T});
            }
        }

    UnionFind uf(r.lines.size());
    for (size_t i = 0; i < r.lines.size(); ++i)
        for (size_t j = i + 1; j < r.lines.size(); ++j)
            if (uf.find(i) != uf.find(j) && incident(r.lines[i], r.lines[j], s_max))
                uf.unite(i, j);

    std::vector<std::vector<size_t>> groups;
    {
        std::vector<int> idx(r.lines.size(), -1);
        for (size_t i = 0; i < r.lines.size(); ++i) {
            size_t root = uf.find(i);
            if (idx[root] < 0) {
                idx[root] = (int)groups.size();
                groups.emplace_back();
            }
            groups[idx[root]].push_back(i);
        }
    }

    for (auto& g : groups) {
        ColourClass c;
        c.members = g; // already ascending
        const HalfLine& first = r.lines[g.front()];
        bool collinear = true;
        std::array<int64_t, 2> vtx{INT64_MAX, INT64_MAX};
        c.slope_lo = c.slope_hi = dir_slope(first.omega);
        for (size_t id : g) {
            const HalfLine& L = r.lines[id];
            int64_t fx = L.nu[0] + (L.s_min + 1) * L.omega[0];
            int64_t fy = L.nu[1] + (L.s_min + 1) * L.omega[1];
            vtx[0] = std::min(vtx[0], fx);
            vtx[1] = std::min(vtx[1], fy);
            Slope s = dir_slope(L.omega);
            if (s < c.slope_lo) c.slope_lo = s;
            if (c.slope_hi < s) c.slope_hi = s;
            if (L.omega != first.omega ||
                cross2(L.nu[0] - first.nu[0], L.nu[1] - first.nu[1], first.omega[0], first.omega[1]) != 0)
                collinear = false;
        }
        c.vertex = vtx;
        c.degenerate = collinear;
        r.classes.push_back(std::move(c));
    }

    std::sort(r.classes.begin(), r.classes.end(), [](const ColourClass& a, const ColourClass& b) {
        if (a.vertex != b.vertex) return a.vertex < b.vertex;
        if (!(a.slope_lo == b.slope_lo)) return a.slope_lo < b.slope_lo;
        return a.slope_hi < b.slope_hi;
    });
    for (size_t i = 0; i < r.classes.size(); ++i) r.classes[i].id = (int)i;
    return r;
}

std::vector<std::array<int64_t, 2>> fibonacci_vertex_set(int s0) {
    std::vector<int64_t> F{0, 1};
    while ((int)F.size() < s0 + 3) F.push_back(F[F.size() - 1] + F[F.size() - 2]);
    std::vector<std::array<int64_t, 2>> out;
    for (int64_t x1 = F[1]; x1 <= F[2 + s0]; ++x1)
        for (int64_t x2 = F[0]; x2 <= F[1 + s0]; ++x2) {
            if (std::gcd(x1, x2) != 1) continue;
            if (!(x1 > x2)) continue;
            out.push_back({x1, x2});
        }
    return out;
}

ConjectureReport conjecture_report(const std::vector<WeylElement>& gens) {
    ConjectureReport rep;
    ChiResult c = chi(gens);
    rep.chi = c.count;
    rep.gamma = gamma_1d(gens, Weight{1, 1});
    rep.bound = (Z(1) << (1 + rep.gamma)) + 1;
    rep.satisfied = rep.chi <= rep.bound;
    return rep;
}

namespace {

std::string slope_str(const Slope& s) {
    return s.inf ? "inf" : s.value.get_str();
}

// fixed-point decimal with 3 places, exact geometry stays rational upstream
std::string svg_num(const Q& q) {
    Z scaled = (q.get_num() * 1000) / q.get_den();
    Z whole = scaled / 1000, frac = scaled % 1000;
    if (frac < 0) frac = -frac;
    std::ostringstream os;
    if (scaled < 0 && whole == 0) os << '-';
    os << whole.get_str() << '.' << std::string(3 - frac.get_str().size(), '0') << frac.get_str();
    return os.str();
}

// clip the ray v + t*dir (t >= 0) to the window square; empty when the ray
// leaves immediately
bool clip_ray(const std::array<int64_t, 2>& v, const Slope& s, int64_t W, Q& ex, Q& ey) {
    int64_t dx = s.inf ? 0 : s.value.get_den().get_si();
    int64_t dy = s.inf ? 1 : s.value.get_num().get_si();
    Q t(-1);
    if (dx > 0) t = make_q(Z(W - v[0]), Z(dx));
    if (dy > 0) {
        Q ty = make_q(Z(W - v[1]), Z(dy));
        if (t < 0 || ty < t) t = ty;
    }
    if (t < 0) return false;
    ex = Q(v[0]) + t * dx;
    ey = Q(v[1]) + t * dy;
    return true;
}

} // namespace

std::string emit_figure(const ExperimentResult& r, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "class_id,degenerate,vertex_x,vertex_y,slope_lo,slope_hi\n";
        for (const ColourClass& c : r.classes)
            os << c.id << ',' << (c.degenerate ? 1 : 0) << ',' << c.vertex[0] << ',' << c.vertex[1]
               << ',' << slope_str(c.slope_lo) << ',' << slope_str(c.slope_hi) << '\n';
        return os.str();
    }
    if (format != "svg") throw std::invalid_argument("figure format must be csv or svg");

    const int64_t W = r.window > 0 ? r.window : 17;
    const int unit = 40, pad = unit;
    int64_t side = W * unit + 2 * pad;
    auto px = [&](const Q& x) { return svg_num(Q(pad) + x * unit); };
    auto py = [&](const Q& y) { return svg_num(Q(pad) + (Q(W) - y) * unit); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << side << ' ' << side
       << "\">\n";
    os << "<rect width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
    for (int64_t g = 0; g <= W; ++g) {
        os << "<line x1=\"" << px(Q(g)) << "\" y1=\"" << py(Q(0)) << "\" x2=\"" << px(Q(g))
           << "\" y2=\"" << py(Q(W)) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        os << "<line x1=\"" << px(Q(0)) << "\" y1=\"" << py(Q(g)) << "\" x2=\"" << px(Q(W))
           << "\" y2=\"" << py(Q(g)) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    for (const ColourClass& c : r.classes) {
        const char* tone = c.id % 2 == 0 ? "#7fb3d5" : "#f5b041";
        Q lx, ly, hx, hy;
        bool has_lo = clip_ray(c.vertex, c.slope_lo, W, lx, ly);
        bool has_hi = clip_ray(c.vertex, c.slope_hi, W, hx, hy);
        if (c.degenerate || !has_lo || !has_hi) {
            if (has_lo)
                os << "<line x1=\"" << px(Q(c.vertex[0])) << "\" y1=\"" << py(Q(c.vertex[1]))
                   << "\" x2=\"" << px(lx) << "\" y2=\"" << py(ly)
                   << "\" stroke=\"" << tone << "\" stroke-width=\"3\"/>\n";
        } else {
            os << "<polygon points=\"" << px(Q(c.vertex[0])) << ',' << py(Q(c.vertex[1])) << ' '
               << px(lx) << ',' << py(ly) << ' ' << px(hx) << ',' << py(hy)
               << "\" fill=\"" << tone << "\" fill-opacity=\"0.6\" stroke=\"" << tone << "\"/>\n";
        }
        os << "<circle cx=\"" << px(Q(c.vertex[0])) << "\" cy=\"" << py(Q(c.vertex[1]))
           << "\" r=\"4\" fill=\"#333333\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace wa
