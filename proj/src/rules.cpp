#include "stillife/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace stillife {

MaxDegree::MaxDegree(Neighborhood nb_, int n_) : nb(std::move(nb_)), n(n_) {
    if (n < 0) throw std::invalid_argument("degree cap must be nonnegative");
}

WeightBound::WeightBound(std::map<Coord, Rational> w_, Rational c_, int dim)
    : w(std::move(w_)), c(std::move(c_)), dimension(dim) {
    if (dim < 1) throw std::invalid_argument("weight bound dimension must be >= 1");
    for (const auto& [o, wt] : w) {
        (void)wt;
        if (static_cast<int>(o.size()) != dim)
            throw std::invalid_argument("weight support offset dimension mismatch");
        if (std::all_of(o.begin(), o.end(), [](int v) { return v == 0; }))
            throw std::invalid_argument("weight support must exclude the zero offset");
    }
}

AllowedLocalSets::AllowedLocalSets(int dim, int r_, std::set<std::set<Coord>> family_)
    : dimension(dim), r(r_), family(std::move(family_)) {
    if (dim < 1) throw std::invalid_argument("allowed-local-sets dimension must be >= 1");
    if (r < 1) throw std::invalid_argument("allowed-local-sets radius must be >= 1");
    for (const auto& member : family) {
        for (const Coord& o : member) {
            if (static_cast<int>(o.size()) != dim)
                throw std::invalid_argument("family offset dimension mismatch");
            int linf = 0;
            bool zero = true;
            for (int v : o) {
                linf = std::max(linf, std::abs(v));
                if (v != 0) zero = false;
            }
            if (zero) throw std::invalid_argument("family members list nonzero offsets only");
            if (linf > r) throw std::invalid_argument("family offset outside the radius-r ball");
        }
    }
}

int constraint_dimension(const Constraint& con) {
    return std::visit(
        [](const auto& c) -> int {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, MaxDegree>)
                return c.nb.dimension;
            else
                return c.dimension;
        },
        con);
}

namespace {

// Lists every offset o with 0 < l-infinity(o) <= r, in lexicographic order.
std::vector<Coord> ball_offsets(int dim, int r) {
    std::vector<Coord> out;
    Coord o(dim, -r);
    while (true) {
        if (std::any_of(o.begin(), o.end(), [](int v) { return v != 0; })) out.push_back(o);
        int i = 0;
        while (i < dim && o[i] == r) o[i++] = -r;
        if (i == dim) break;
        ++o[i];
    }
    return out;
}

bool cell_ok(const TorusPattern& p, const Coord& x, const Constraint& con) {
    if (const auto* md = std::get_if<MaxDegree>(&con))
        return neighbor_count(p, x, md->nb) <= md->n;
    if (const auto* wb = std::get_if<WeightBound>(&con)) {
        Rational sum = 0;
        Coord y(x.size());
        for (const auto& [o, wt] : wb->w) {
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + o[i];
            if (p.contains(y)) sum += wt;
        }
        return sum <= wb->c;
    }
    const auto& als = std::get<AllowedLocalSets>(con);
    std::set<Coord> live;
    Coord y(x.size());
    for (const Coord& o : ball_offsets(als.dimension, als.r)) {
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + o[i];
        if (p.contains(y)) live.insert(o);
    }
    return als.family.count(live) > 0;
}

}  // namespace

SatisfiesResult satisfies(const TorusPattern& p, const Constraint& con) {
    if (constraint_dimension(con) != p.dimension())
        throw std::invalid_argument("constraint dimension mismatch");
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.area()); ++i) {
        if (!p.contains_index(i)) continue;
        Coord x = p.cell_at(i);
        if (!cell_ok(p, x, con)) return {false, x};
    }
    return {true, std::nullopt};
}

TorusPattern life_step(const TorusPattern& p) {
    if (p.dimension() != 2) throw std::invalid_argument("life step needs a 2-D torus");
    TorusPattern q(p.dims());
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.area()); ++i) {
        Coord x = p.cell_at(i);
        int n = neighbor_count(p, x, moore8());
        bool alive = p.contains_index(i) ? (n == 2 || n == 3) : (n == 3);
        if (alive) q.set_index(i, true);
    }
    return q;
}

StillLifeReport still_life_report(const TorusPattern& p) {
    if (p.dimension() != 2) throw std::invalid_argument("still-life check needs a 2-D torus");
    StillLifeReport rep{true, true, true, {}, {}, {}};
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.area()); ++i) {
        Coord x = p.cell_at(i);
        int n = neighbor_count(p, x, moore8());
        if (p.contains_index(i)) {
            if (n < 2) {
                rep.cond2 = false;
                rep.violators2.push_back(x);
            }
            if (n > 3) {
                rep.cond3 = false;
                rep.violators3.push_back(x);
            }
        } else if (n == 3) {
            rep.cond1 = false;
            rep.violators1.push_back(x);
        }
    }
    return rep;
}

bool is_still_life(const TorusPattern& p) { return still_life_report(p).all(); }

std::optional<int> oscillator_period(const TorusPattern& p, int max_steps) {
    if (p.dimension() != 2) throw std::invalid_argument("oscillator check needs a 2-D torus");
    if (max_steps < 1) return std::nullopt;
    TorusPattern q = p;
    for (int t = 1; t <= max_steps; ++t) {
        q = life_step(q);
        if (q == p) return t;
    }
    return std::nullopt;
}

Rational phase_average_density(const TorusPattern& p, int max_steps) {
    auto period = oscillator_period(p, max_steps);
    if (!period) throw std::invalid_argument("pattern does not return to itself in budget");
    Rational sum = 0;
    TorusPattern q = p;
    for (int t = 0; t < *period; ++t) {
        sum += density(q);
        q = life_step(q);
    }
    Rational avg = sum / *period;
    avg.canonicalize();
    return avg;
}

FiniteGrid::FiniteGrid(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) throw std::invalid_argument("grid dims must be positive");
    bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

FiniteGrid FiniteGrid::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows needs at least one row");
    FiniteGrid g(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int y = 0; y < g.height_; ++y) {
        if (static_cast<int>(rows[y].size()) != g.width_)
            throw std::invalid_argument("ragged rows in from_rows");
        for (int x = 0; x < g.width_; ++x) {
            if (rows[y][x] == '#') g.set(x, y, true);
        }
    }
    return g;
}

bool FiniteGrid::in_bounds(int x1, int x2) const {
    return 0 <= x1 && x1 < width_ && 0 <= x2 && x2 < height_;
}

bool FiniteGrid::contains(int x1, int x2) const {
    return in_bounds(x1, x2) && bits_[static_cast<std::size_t>(x2) * width_ + x1];
}

void FiniteGrid::set(int x1, int x2, bool v) {
    if (!in_bounds(x1, x2)) throw std::out_of_range("grid cell out of bounds");
    auto& b = bits_[static_cast<std::size_t>(x2) * width_ + x1];
    if (b != static_cast<std::uint8_t>(v)) {
        b = static_cast<std::uint8_t>(v);
        count_ += v ? 1 : -1;
    }
}

int FiniteGrid::window_neighbor_count(int x1, int x2) const {
    int n = 0;
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (contains(x1 + dx, x2 + dy)) ++n;
        }
    }
    return n;
}

InteriorReport interior_still_life_check(const FiniteGrid& g) {
    if (g.width() < 3 || g.height() < 3)
        throw std::invalid_argument("window too small for any interior cell");
    InteriorReport rep{true, true, true, {}, {}, {}};
    for (int y = 1; y <= g.height() - 2; ++y) {
        for (int x = 1; x <= g.width() - 2; ++x) {
            int n = g.window_neighbor_count(x, y);
            if (g.contains(x, y)) {
                if (n < 2) {
                    rep.cond2 = false;
                    rep.violators2.emplace_back(x, y);
                }
                if (n > 3) {
                    rep.cond3 = false;
                    rep.violators3.emplace_back(x, y);
                }
            } else if (n == 3) {
                rep.cond1 = false;
                rep.violators1.emplace_back(x, y);
            }
        }
    }
    return rep;
}

}  // namespace stillife
