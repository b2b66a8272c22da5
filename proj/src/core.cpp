#include "stillife/core.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace stillife {

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    bool digits = false, slash = false, denom_digits = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (slash || !digits) return std::nullopt;
            slash = true;
        } else if (c >= '0' && c <= '9') {
            (slash ? denom_digits : digits) = true;
        } else {
            return std::nullopt;
        }
    }
    if (!digits || (slash && !denom_digits)) return std::nullopt;
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        return std::nullopt;
    }
    Rational r(q);
    mpq_clear(q);
    r.canonicalize();
    return r;
}

std::string coord_str(const Coord& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x[i]);
    }
    return s + ")";
}

Neighborhood::Neighborhood(int dim, std::vector<Coord> offs, std::string nm)
    : dimension(dim), offsets(std::move(offs)), name(std::move(nm)) {
    if (dim < 1) throw std::invalid_argument("neighborhood dimension must be >= 1");
    std::set<Coord> seen;
    for (const Coord& o : offsets) {
        if (static_cast<int>(o.size()) != dim)
            throw std::invalid_argument("offset dimension mismatch in neighborhood " + name);
        if (std::all_of(o.begin(), o.end(), [](int v) { return v == 0; }))
            throw std::invalid_argument("zero offset in neighborhood " + name);
        if (!seen.insert(o).second)
            throw std::invalid_argument("duplicate offset in neighborhood " + name);
    }
    for (const Coord& o : offsets) {
        Coord neg(o.size());
        for (std::size_t i = 0; i < o.size(); ++i) neg[i] = -o[i];
        if (!seen.count(neg))
            throw std::invalid_argument("neighborhood " + name + " not closed under negation");
    }
}

bool Neighborhood::operator==(const Neighborhood& o) const {
    if (dimension != o.dimension || offsets.size() != o.offsets.size()) return false;
    std::set<Coord> a(offsets.begin(), offsets.end());
    std::set<Coord> b(o.offsets.begin(), o.offsets.end());
    return a == b;
}

const Neighborhood& moore8() {
    static const Neighborhood nb(2,
                                 {{-1, -1},
                                  {0, -1},
                                  {1, -1},
                                  {-1, 0},
                                  {1, 0},
                                  {-1, 1},
                                  {0, 1},
                                  {1, 1}},
                                 "moore8");
    return nb;
}

const Neighborhood& vonneumann4() {
    static const Neighborhood nb(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, "vn4");
    return nb;
}

const Neighborhood& tri6() {
    static const Neighborhood nb(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}},
                                 "tri6");
    return nb;
}

Neighborhood unit(int k) {
    if (k < 1) throw std::invalid_argument("unit(k) needs k >= 1");
    std::vector<Coord> offs;
    for (int i = 0; i < k; ++i) {
        for (int s : {1, -1}) {
            Coord o(k, 0);
            o[i] = s;
            offs.push_back(o);
        }
    }
    return Neighborhood(k, std::move(offs), "unit:" + std::to_string(k));
}

std::optional<Neighborhood> neighborhood_by_name(const std::string& name) {
    if (name == "moore8") return moore8();
    if (name == "vn4") return vonneumann4();
    if (name == "tri6") return tri6();
    if (name.rfind("unit:", 0) == 0) {
        try {
            int k = std::stoi(name.substr(5));
            if (k >= 1) return unit(k);
        } catch (...) {
        }
    }
    return std::nullopt;
}

TorusPattern::TorusPattern(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("torus needs at least one dimension");
    area_ = 1;
    for (int d : dims_) {
        if (d < 1) throw std::invalid_argument("torus dims must be positive");
        area_ *= d;
    }
    bits_.assign(static_cast<std::size_t>(area_), 0);
}

TorusPattern::TorusPattern(std::vector<int> dims, const std::vector<Coord>& cells)
    : TorusPattern(std::move(dims)) {
    for (const Coord& c : cells) set(c, true);
}

TorusPattern TorusPattern::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows needs at least one row");
    int w = static_cast<int>(rows[0].size());
    int h = static_cast<int>(rows.size());
    TorusPattern p({w, h});
    for (int y = 0; y < h; ++y) {
        if (static_cast<int>(rows[y].size()) != w)
            throw std::invalid_argument("ragged rows in from_rows");
        for (int x = 0; x < w; ++x) {
            if (rows[y][x] == '#') p.set({x, y}, true);
        }
    }
    return p;
}

Coord TorusPattern::reduce(const Coord& x) const {
    if (x.size() != dims_.size())
        throw std::invalid_argument("cell dimension mismatch: " + coord_str(x));
    Coord r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        int d = dims_[i];
        r[i] = ((x[i] % d) + d) % d;
    }
    return r;
}

std::size_t TorusPattern::index_of(const Coord& x) const {
    Coord r = reduce(x);
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        idx += stride * static_cast<std::size_t>(r[i]);
        stride *= static_cast<std::size_t>(dims_[i]);
    }
    return idx;
}

Coord TorusPattern::cell_at(std::size_t idx) const {
    Coord x(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        x[i] = static_cast<int>(idx % static_cast<std::size_t>(dims_[i]));
        idx /= static_cast<std::size_t>(dims_[i]);
    }
    return x;
}

void TorusPattern::set(const Coord& x, bool v) { set_index(index_of(x), v); }

void TorusPattern::set_index(std::size_t idx, bool v) {
    if (bits_[idx] != static_cast<std::uint8_t>(v)) {
        bits_[idx] = static_cast<std::uint8_t>(v);
        count_ += v ? 1 : -1;
    }
}

std::vector<Coord> TorusPattern::cells() const {
    std::vector<Coord> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out.push_back(cell_at(i));
    }
    return out;
}

int neighbor_count(const TorusPattern& p, const Coord& x, const Neighborhood& nb) {
    if (nb.dimension != p.dimension())
        throw std::invalid_argument("neighborhood dimension mismatch");
    Coord y(x.size());
    int n = 0;
    for (const Coord& o : nb.offsets) {
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + o[i];
        if (p.contains(y)) ++n;
    }
    return n;
}

int max_degree(const TorusPattern& p, const Neighborhood& nb) {
    int best = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.area()); ++i) {
        if (!p.contains_index(i)) continue;
        best = std::max(best, neighbor_count(p, p.cell_at(i), nb));
    }
    return best;
}

Rational density(const TorusPattern& p) {
    Rational r = ratio(p.count(), p.area());
    r.canonicalize();
    return r;
}

TorusPattern complement(const TorusPattern& p) {
    TorusPattern q(p.dims());
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.area()); ++i)
        q.set_index(i, !p.contains_index(i));
    return q;
}

TorusPattern translate(const TorusPattern& p, const Coord& t) {
    if (static_cast<int>(t.size()) != p.dimension())
        throw std::invalid_argument("translation dimension mismatch");
    TorusPattern q(p.dims());
    for (const Coord& c : p.cells()) {
        Coord d(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) d[i] = c[i] + t[i];
        q.set(d, true);
    }
    return q;
}

TorusPattern flip_axis(const TorusPattern& p, int axis) {
    if (axis < 0 || axis >= p.dimension()) throw std::invalid_argument("flip axis out of range");
    TorusPattern q(p.dims());
    for (Coord c : p.cells()) {
        c[axis] = -c[axis];
        q.set(c, true);
    }
    return q;
}

TorusPattern transpose(const TorusPattern& p) {
    if (p.dimension() != 2 || p.dims()[0] != p.dims()[1])
        throw std::invalid_argument("transpose needs a square 2-D torus");
    TorusPattern q(p.dims());
    for (const Coord& c : p.cells()) q.set({c[1], c[0]}, true);
    return q;
}

TorusPattern rotate90(const TorusPattern& p) {
    if (p.dimension() != 2 || p.dims()[0] != p.dims()[1])
        throw std::invalid_argument("rotate90 needs a square 2-D torus");
    TorusPattern q(p.dims());
    for (const Coord& c : p.cells()) q.set({-c[1], c[0]}, true);
    return q;
}

TorusPattern tile(const TorusPattern& p, const std::vector<int>& dims) {
    if (static_cast<int>(dims.size()) != p.dimension())
        throw std::invalid_argument("tile dimension mismatch");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < p.dims()[i] || dims[i] % p.dims()[i] != 0)
            throw std::invalid_argument("tile dims must be multiples of pattern dims");
    }
    TorusPattern q(dims);
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(q.area()); ++idx) {
        Coord c = q.cell_at(idx);
        if (p.contains(c)) q.set_index(idx, true);
    }
    return q;
}

}  // namespace stillife
