#pragma once

#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "stillife/core.hpp"

namespace stillife {

// x in S may have at most n live neighbors (n > |offsets| is vacuous but legal).
struct MaxDegree {
    Neighborhood nb;
    int n;
    MaxDegree(Neighborhood nb_, int n_);
};

// At every x in S, sum of w(o) over live x+o must stay <= c. Weights may be
// negative; the support never contains the zero offset.
struct WeightBound {
    std::map<Coord, Rational> w;
    Rational c;
    int dimension;
    WeightBound(std::map<Coord, Rational> w_, Rational c_, int dim);
};

// At every x in S, the set of live nonzero offsets within l-infinity radius r
// must be one of the listed families' members.
struct AllowedLocalSets {
    int dimension;
    int r;
    std::set<std::set<Coord>> family;
    AllowedLocalSets(int dim, int r_, std::set<std::set<Coord>> family_);
};

using Constraint = std::variant<MaxDegree, WeightBound, AllowedLocalSets>;

int constraint_dimension(const Constraint& con);

struct SatisfiesResult {
    bool ok;
    std::optional<Coord> violator;  // first live cell breaking the constraint
};

// Checks the constraint at every live cell (and only there).
SatisfiesResult satisfies(const TorusPattern& p, const Constraint& con);

// One synchronous update: survive on 2 or 3 live neighbors, birth on exactly
// 3. Two-dimensional tori with the 8-cell neighborhood only.
TorusPattern life_step(const TorusPattern& p);

struct StillLifeReport {
    bool cond1;  // no dead cell has exactly 3 live neighbors
    bool cond2;  // every live cell has at least 2 live neighbors
    bool cond3;  // every live cell has at most 3 live neighbors
    std::vector<Coord> violators1, violators2, violators3;
    bool all() const { return cond1 && cond2 && cond3; }
};

StillLifeReport still_life_report(const TorusPattern& p);
bool is_still_life(const TorusPattern& p);

// Least p* <= max_steps with step^{p*}(p) = p, if any.
std::optional<int> oscillator_period(const TorusPattern& p, int max_steps);

// Mean density over one full cycle; throws std::invalid_argument when p does
// not return to itself within max_steps updates.
Rational phase_average_density(const TorusPattern& p, int max_steps = 1024);

// Finite window onto the plane; (0,0) is one corner, x2 = row index.
class FiniteGrid {
public:
    FiniteGrid(int width, int height);
    static FiniteGrid from_rows(const std::vector<std::string>& rows);

    int width() const { return width_; }
    int height() const { return height_; }
    long long count() const { return count_; }
    bool contains(int x1, int x2) const;  // false outside the window
    bool in_bounds(int x1, int x2) const;
    void set(int x1, int x2, bool v);  // throws out_of_range beyond the window

    // Live neighbor count using only in-window cells.
    int window_neighbor_count(int x1, int x2) const;

    bool operator==(const FiniteGrid& o) const {
        return width_ == o.width_ && height_ == o.height_ && bits_ == o.bits_;
    }

private:
    int width_, height_;
    std::vector<std::uint8_t> bits_;
    long long count_ = 0;
};

// Judges conditions only at cells whose whole 3x3 neighborhood lies inside
// the window (positions 1..width-2 x 1..height-2); the surrounding frame is
// treated as unknown plane, not as dead cells.
struct InteriorReport {
    bool cond1, cond2, cond3;
    std::vector<std::pair<int, int>> violators1, violators2, violators3;
    bool all() const { return cond1 && cond2 && cond3; }
};

InteriorReport interior_still_life_check(const FiniteGrid& g);

}  // namespace stillife
