#include "stillife/voronoi.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace stillife {

EpsNorm eps_norm(const PlanePoint& v) {
    Rational a = abs(v.first), b = abs(v.second);
    if (a < b) std::swap(a, b);
    return {a, b};
}

int eps_compare(const PlanePoint& u, const PlanePoint& v) {
    EpsNorm a = eps_norm(u), b = eps_norm(v);
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

PlanePoint Triangle::centroid() const {
    // Vertices of the 8 triangles, doubled so they stay integral: square
    // corners (0,0),(2,0),(2,2),(0,2), edge midpoints, center (1,1).
    static const std::array<std::array<std::array<int, 2>, 3>, 8> tri2 = {{
        {{{0, 0}, {1, 0}, {1, 1}}},
        {{{1, 0}, {2, 0}, {1, 1}}},
        {{{2, 0}, {2, 1}, {1, 1}}},
        {{{2, 1}, {2, 2}, {1, 1}}},
        {{{2, 2}, {1, 2}, {1, 1}}},
        {{{1, 2}, {0, 2}, {1, 1}}},
        {{{0, 2}, {0, 1}, {1, 1}}},
        {{{0, 1}, {0, 0}, {1, 1}}},
    }};
    if (octant < 0 || octant > 7) throw std::invalid_argument("octant out of range");
    if (anchor.size() != 2) throw std::invalid_argument("triangle anchor must be 2-D");
    const auto& t = tri2[octant];
    int sx = t[0][0] + t[1][0] + t[2][0];
    int sy = t[0][1] + t[1][1] + t[2][1];
    // centroid = anchor + (sx, sy)/6 after undoing the doubling
    Rational x = ratio(6 * anchor[0] + sx, 6);
    Rational y = ratio(6 * anchor[1] + sy, 6);
    return {x, y};
}

TorusPattern augment_isolated(const TorusPattern& p) {
    if (p.dimension() != 2) throw std::invalid_argument("augmentation needs a 2-D torus");
    if (p.dims()[0] % 3 != 0 || p.dims()[1] % 3 != 0)
        throw std::invalid_argument("augmentation needs dims divisible by 3");
    TorusPattern q = p;
    for (int by = 0; by < p.dims()[1]; by += 3) {
        for (int bx = 0; bx < p.dims()[0]; bx += 3) {
            bool occupied = false;
            for (int dy = 0; dy < 3 && !occupied; ++dy)
                for (int dx = 0; dx < 3; ++dx)
                    if (p.contains({bx + dx, by + dy})) {
                        occupied = true;
                        break;
                    }
            if (!occupied) q.set({bx + 1, by + 1}, true);
        }
    }
    return q;
}

namespace {

// eps-nearest site to z among explicit plane candidates; TieError on an
// exact (major, minor) tie between distinct plane points.
std::pair<int, int> nearest_site(const PlanePoint& z, const std::vector<std::pair<int, int>>& sites,
                                 const char* context) {
    bool have = false, tie = false;
    EpsNorm best{0, 0};
    std::pair<int, int> who{0, 0};
    for (const auto& [cx, cy] : sites) {
        PlanePoint d{Rational(cx) - z.first, Rational(cy) - z.second};
        EpsNorm n = eps_norm(d);
        if (!have || n < best) {
            have = true;
            best = n;
            who = {cx, cy};
            tie = false;
        } else if (n == best) {
            tie = true;
        }
    }
    if (!have) throw std::invalid_argument(std::string(context) + ": no candidate site");
    if (tie) throw TieError(std::string(context) + ": two sites equidistant from a centroid");
    return who;
}

}  // namespace

Coord owner(const Triangle& t, const TorusPattern& p) {
    if (p.dimension() != 2) throw std::invalid_argument("ownership needs a 2-D torus");
    PlanePoint z = t.centroid();
    // The square [anchor, anchor+1]^2 has some live plane cell within
    // l-infinity distance 3 (augmentation guarantee), i.e. within the window
    // [anchor-3, anchor+4]; anything outside [anchor-4, anchor+5] is farther
    // than that from every point of the square and can never win.
    std::vector<std::pair<int, int>> sites;
    for (int cy = t.anchor[1] - 4; cy <= t.anchor[1] + 5; ++cy)
        for (int cx = t.anchor[0] - 4; cx <= t.anchor[0] + 5; ++cx)
            if (p.contains({cx, cy})) sites.emplace_back(cx, cy);
    auto [wx, wy] = nearest_site(z, sites, "owner");
    return p.reduce({wx, wy});
}

std::map<Coord, CellArea> cell_areas(const TorusPattern& p) {
    if (p.dimension() != 2) throw std::invalid_argument("cell areas need a 2-D torus");
    std::map<Coord, CellArea> areas;
    for (const Coord& c : p.cells()) areas[c] = CellArea{0};
    for (int ay = 0; ay < p.dims()[1]; ++ay) {
        for (int ax = 0; ax < p.dims()[0]; ++ax) {
            for (int oct = 0; oct < 8; ++oct) {
                Coord w = owner(Triangle{{ax, ay}, oct}, p);
                ++areas.at(w).eighths;
            }
        }
    }
    return areas;
}

CellArea cell_area(const TorusPattern& p, const Coord& x) {
    auto areas = cell_areas(p);
    auto it = areas.find(p.reduce(x));
    if (it == areas.end()) throw std::invalid_argument("cell_area of a dead cell");
    return it->second;
}

LocalConfig local_config(const TorusPattern& p, const Coord& x) {
    if (p.dimension() != 2) throw std::invalid_argument("local config needs a 2-D torus");
    LocalConfig cfg;
    for (const Coord& o : moore8().offsets)
        if (p.contains({x[0] + o[0], x[1] + o[1]})) cfg.insert(o);
    return cfg;
}

CellArea narrow_cell_area(const LocalConfig& cfg) {
    std::vector<std::pair<int, int>> sites{{0, 0}};
    for (const Coord& o : cfg) {
        if (o.size() != 2 || std::max(std::abs(o[0]), std::abs(o[1])) != 1)
            throw std::invalid_argument("config offsets must be the 8 unit-square neighbors");
        sites.emplace_back(o[0], o[1]);
    }
    // The 2x2 square centered on the origin splits into the 32 triangles of
    // its four unit squares; only the origin and its occupied neighbors can
    // own any of them.
    long long own = 0;
    for (int ax = -1; ax <= 0; ++ax) {
        for (int ay = -1; ay <= 0; ++ay) {
            for (int oct = 0; oct < 8; ++oct) {
                PlanePoint z = Triangle{{ax, ay}, oct}.centroid();
                auto w = nearest_site(z, sites, "narrow_cell_area");
                if (w.first == 0 && w.second == 0) ++own;
            }
        }
    }
    return CellArea{own};
}

int alpha0(const LocalConfig& cfg) {
    return static_cast<int>(narrow_cell_area(cfg).eighths) - 16;
}

long long alpha(const TorusPattern& p, const Coord& x) {
    return cell_area(p, x).eighths - 16;
}

namespace {

LocalConfig canonical_config(const LocalConfig& cfg) {
    // Orbit minimum over the 8 symmetries of the square.
    static const std::array<std::array<int, 4>, 8> mats = {{
        {{1, 0, 0, 1}},
        {{0, -1, 1, 0}},
        {{-1, 0, 0, -1}},
        {{0, 1, -1, 0}},
        {{1, 0, 0, -1}},
        {{-1, 0, 0, 1}},
        {{0, 1, 1, 0}},
        {{0, -1, -1, 0}},
    }};
    LocalConfig best;
    bool have = false;
    for (const auto& m : mats) {
        LocalConfig img;
        for (const Coord& o : cfg)
            img.insert({m[0] * o[0] + m[1] * o[1], m[2] * o[0] + m[3] * o[1]});
        if (!have || img < best) {
            best = img;
            have = true;
        }
    }
    return best;
}

}  // namespace

std::optional<std::string> classify_config(const LocalConfig& cfg) {
    if (cfg.size() > 3) return std::nullopt;
    static const std::vector<std::pair<std::string, LocalConfig>> reference = {
        {"isolated", {}},
        {"orth1", {{1, 0}}},
        {"diag1", {{1, 1}}},
        {"L", {{-1, 0}, {1, 0}}},
        {"L'", {{0, 1}, {1, 0}}},
        {"M", {{1, 1}, {-1, 0}}},
        {"M'", {{1, 1}, {1, 0}}},
        {"N", {{-1, 1}, {1, -1}}},
        {"N'", {{1, 1}, {1, -1}}},
        {"A", {{0, 1}, {-1, 0}, {1, 0}}},
        {"B", {{1, 1}, {-1, 0}, {1, 0}}},
        {"C", {{0, 1}, {-1, 0}, {1, -1}}},
        {"C'", {{-1, 1}, {0, 1}, {1, 0}}},
        {"C''", {{0, 1}, {1, 1}, {1, 0}}},
        {"D", {{-1, 1}, {1, 1}, {1, -1}}},
        {"E", {{-1, 1}, {0, 1}, {1, -1}}},
        {"F", {{-1, 1}, {1, 1}, {0, -1}}},
        {"F'", {{-1, 1}, {1, 1}, {1, 0}}},
        {"F''", {{-1, 1}, {0, 1}, {1, 1}}},
    };
    LocalConfig canon = canonical_config(cfg);
    for (const auto& [label, ref] : reference) {
        if (canonical_config(ref) == canon) return label;
    }
    return std::nullopt;  // unreachable: the 19 orbits cover all sizes 0..3
}

}  // namespace stillife
