#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "stillife/core.hpp"

namespace stillife {

// A plane point with exact rational coordinates.
using PlanePoint = std::pair<Rational, Rational>;

// Distance gauge max(|v1|,|v2|) + eps*min(|v1|,|v2|) with eps infinitesimal;
// realized exactly as the lexicographic pair (major, minor).
struct EpsNorm {
    Rational major, minor;
    bool operator==(const EpsNorm& o) const { return major == o.major && minor == o.minor; }
    bool operator<(const EpsNorm& o) const {
        return major < o.major || (major == o.major && minor < o.minor);
    }
};

EpsNorm eps_norm(const PlanePoint& v);
// -1, 0, +1 comparing |u| against |v| in the gauge above.
int eps_compare(const PlanePoint& u, const PlanePoint& v);

// One of the 8 isosceles triangles tiling the unit square [anchor, anchor+1]^2:
// vertices at square corners, edge midpoints, and the square center, each of
// area 1/8. Octants number counterclockwise from the anchor corner's
// bottom-left half-edge.
struct Triangle {
    Coord anchor;  // 2-D lattice point, the square's low corner
    int octant;    // 0..7
    PlanePoint centroid() const;
};

// Two sites exactly equidistant from a triangle centroid. The tiling argument
// says bisectors lie on triangle edges, so this should never fire; it is kept
// as a hard runtime probe of that claim rather than an arbitrary tie-break.
struct TieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adds the center of every aligned 3x3 block (anchored at multiples of 3)
// that contains no live cell. Afterwards every plane point is within
// l-infinity distance 3 of the pattern; added cells are isolated, so the
// maximum degree cannot grow. Dims must be divisible by 3 (re-tile first).
TorusPattern augment_isolated(const TorusPattern& p);

// The unique live plane cell eps-closest to the triangle's centroid, reduced
// onto the torus. Requires every plane point within distance 3 of the
// pattern; candidates are scanned within l-infinity distance 4 of the
// triangle's square, which the distance-3 guarantee makes sufficient.
Coord owner(const Triangle& t, const TorusPattern& p);

struct CellArea {
    long long eighths;  // area is eighths/8
    Rational area() const {
        Rational r = ratio(eighths, 8);
        r.canonicalize();
        return r;
    }
    bool operator==(const CellArea& o) const { return eighths == o.eighths; }
};

// Area owned by x's orbit: triangles over one fundamental domain whose owner
// reduces to x. Summed over all live cells this partitions the whole domain.
CellArea cell_area(const TorusPattern& p, const Coord& x);
std::map<Coord, CellArea> cell_areas(const TorusPattern& p);

// The set of occupied 8-neighborhood offsets around a cell.
using LocalConfig = std::set<Coord>;

LocalConfig local_config(const TorusPattern& p, const Coord& x);

// Area of the part of the cell of the origin inside the 2x2 square centered
// on it, competing only against the occupied neighbor offsets (farther sites
// cannot cut into that square).
CellArea narrow_cell_area(const LocalConfig& cfg);

// alpha0 = 8*(narrow area - 2); alpha = 8*(full area - 2). alpha0 <= alpha.
int alpha0(const LocalConfig& cfg);
long long alpha(const TorusPattern& p, const Coord& x);

// Label of cfg's orbit under the 8 square symmetries, for configs of at most
// 3 occupied offsets; one of isolated, orth1, diag1, L, L', M, M', N, N',
// A, B, C, C', C'', D, E, F, F', F''. Absent when |cfg| > 3.
std::optional<std::string> classify_config(const LocalConfig& cfg);

}  // namespace stillife
