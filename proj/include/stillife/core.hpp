#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stillife/rational.hpp"

namespace stillife {

// A lattice point or an offset vector; length = ambient dimension k >= 1.
using Coord = std::vector<int>;

std::string coord_str(const Coord& x);  // "(x1,x2,...)"

// Finite symmetric set of nonzero offsets. Validated on construction:
// no zero offset, pairwise distinct, closed under negation.
struct Neighborhood {
    int dimension;
    std::vector<Coord> offsets;
    std::string name;

    Neighborhood(int dim, std::vector<Coord> offs, std::string nm);
    int size() const { return static_cast<int>(offsets.size()); }
    bool operator==(const Neighborhood& o) const;
};

const Neighborhood& moore8();
const Neighborhood& vonneumann4();
// Triangular lattice on integer coordinates (a, b) <-> a + b*rho with
// rho^2 = -1 - rho; the six units give the offset set below.
const Neighborhood& tri6();
Neighborhood unit(int k);
// "moore8" | "vn4" | "tri6" | "unit:k"
std::optional<Neighborhood> neighborhood_by_name(const std::string& name);

// Periodic lattice subset represented on its rectangular quotient torus.
// Cells are stored reduced mod dims; linear index is coordinate-0-fastest,
// so for k = 2 index = x1 + W*x2 (row-major in rows of constant x2).
class TorusPattern {
public:
    explicit TorusPattern(std::vector<int> dims);
    TorusPattern(std::vector<int> dims, const std::vector<Coord>& cells);
    static TorusPattern from_rows(const std::vector<std::string>& rows);

    int dimension() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    long long area() const { return area_; }
    long long count() const { return count_; }
    bool empty() const { return count_ == 0; }

    Coord reduce(const Coord& x) const;
    std::size_t index_of(const Coord& x) const;  // reduces mod dims
    Coord cell_at(std::size_t idx) const;
    bool contains(const Coord& x) const { return bits_[index_of(x)] != 0; }
    bool contains_index(std::size_t idx) const { return bits_[idx] != 0; }
    void set(const Coord& x, bool v);
    void set_index(std::size_t idx, bool v);

    std::vector<Coord> cells() const;  // ascending linear index

    bool operator==(const TorusPattern& o) const {
        return dims_ == o.dims_ && bits_ == o.bits_;
    }

private:
    std::vector<int> dims_;
    std::vector<std::uint8_t> bits_;
    long long area_ = 0;
    long long count_ = 0;
};

// Number of offsets o with (x+o) mod dims in the pattern. Counting is per
// offset (multiset semantics): two offsets landing on the same torus cell
// both count. This equals the neighbor count of the infinite periodic
// extension at every torus size.
int neighbor_count(const TorusPattern& p, const Coord& x, const Neighborhood& nb);

// Max over live cells of neighbor_count; 0 for the empty pattern.
int max_degree(const TorusPattern& p, const Neighborhood& nb);

Rational density(const TorusPattern& p);

TorusPattern complement(const TorusPattern& p);
TorusPattern translate(const TorusPattern& p, const Coord& t);
// Negates coordinate `axis` (mod the torus).
TorusPattern flip_axis(const TorusPattern& p, int axis);
// (x1,x2) -> (x2,x1); k = 2 with square dims only.
TorusPattern transpose(const TorusPattern& p);
// (x1,x2) -> (-x2,x1); k = 2 with square dims only.
TorusPattern rotate90(const TorusPattern& p);

// Repeats p over a larger torus; every target dim must be a positive
// multiple of the source dim.
TorusPattern tile(const TorusPattern& p, const std::vector<int>& dims);

}  // namespace stillife
