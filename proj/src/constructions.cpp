#include "stillife/constructions.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "../src/gallery_data.hpp"

namespace stillife {

namespace {

std::vector<std::string> text_rows(const char* text) {
    std::vector<std::string> rows;
    std::string cur;
    for (const char* p = text; *p; ++p) {
        if (*p == '\n') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur += *p;
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    return rows;
}

TorusPattern by_residue(std::vector<int> dims, const std::function<bool(const Coord&)>& live) {
    TorusPattern p(std::move(dims));
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.area()); ++i) {
        if (live(p.cell_at(i))) p.set_index(i, true);
    }
    return p;
}

TorusPattern gallery_torus(const std::string& name) {
    const GalleryItem& item = gallery_item(name);
    if (!item.torus) throw std::logic_error(name + " has no torus form");
    return *item.torus;
}

int require_param(const std::vector<int>& params, std::size_t i, const char* name) {
    if (params.size() <= i)
        throw std::invalid_argument(std::string(name) + ": missing parameter");
    return params[i];
}

}  // namespace

TorusPattern generate(const std::string& name, const std::vector<int>& params) {
    if (name == "stripes")
        return by_residue({2, 1}, [](const Coord& x) { return x[0] % 2 == 0; });
    if (name == "isolated_quarter")
        return by_residue({2, 2}, [](const Coord& x) { return x[0] == 0 && x[1] == 0; });
    if (name == "dominoes_third")
        return by_residue({3, 2}, [](const Coord& x) { return x[0] != 0 && x[1] == 0; });
    if (name == "chicken_wire") return gallery_torus("chicken_wire");
    if (name == "mod5_stripe")
        return by_residue({5, 5}, [](const Coord& x) { return (x[0] + 2 * x[1]) % 5 >= 2; });
    if (name == "alt_three_fifths") return gallery_torus("densest_deg4_alt");
    if (name == "cubic13")
        return by_residue({13, 13}, [](const Coord& x) {
            int r = (2 * x[0] + 3 * x[1]) % 13;
            return r != 1 && r != 5 && r != 8 && r != 12;  // excludes +-1, +-5
        });
    if (name == "mod5_complement")
        return by_residue({5, 5}, [](const Coord& x) { return (x[0] + 2 * x[1]) % 5 != 0; });
    if (name == "mod3_complement")
        return by_residue({3, 3}, [](const Coord& x) { return x[0] != 0 || x[1] != 0; });
    if (name == "full")
        return by_residue({1, 1}, [](const Coord&) { return true; });
    if (name == "block_lattice") {
        int m = require_param(params, 0, "block_lattice");
        int n = require_param(params, 1, "block_lattice");
        if (m < 3 || n < 3) throw std::invalid_argument("block_lattice needs m, n >= 3");
        return by_residue({m, n},
                          [](const Coord& x) { return x[0] <= 1 && x[1] <= 1; });
    }
    if (name == "checkerboard")
        return by_residue({2, 2}, [](const Coord& x) { return x[0] % 2 == x[1] % 2; });
    if (name == "vn_wire") return gallery_torus("densest_vn4_deg1_wire");
    if (name == "vn_two_thirds")
        return by_residue({3, 3}, [](const Coord& x) { return x[0] % 3 != x[1] % 3; });
    if (name == "tri_third")
        return by_residue({3, 3}, [](const Coord& x) { return (x[0] + x[1]) % 3 == 0; });
    if (name == "tri_domino")
        return by_residue({5, 5}, [](const Coord& x) { return (x[0] + 2 * x[1]) % 5 <= 1; });
    if (name == "tri_half")
        return by_residue({1, 2}, [](const Coord& x) { return x[1] % 2 == 0; });
    if (name == "tri_two_thirds")
        return by_residue({3, 3}, [](const Coord& x) { return (x[0] + x[1]) % 3 != 0; });
    if (name == "tri_three_quarters")
        return by_residue({2, 2}, [](const Coord& x) { return x[0] != 0 || x[1] != 0; });
    if (name == "tri_six_sevenths")
        return by_residue({7, 7}, [](const Coord& x) { return (x[0] + 2 * x[1]) % 7 != 0; });
    if (name == "zk_checkerboard") {
        int k = require_param(params, 0, "zk_checkerboard");
        if (k < 1) throw std::invalid_argument("zk_checkerboard needs k >= 1");
        return by_residue(std::vector<int>(k, 2), [](const Coord& x) {
            int s = 0;
            for (int v : x) s += v;
            return s % 2 == 0;
        });
    }
    if (name == "zk_mod_complement") {
        int k = require_param(params, 0, "zk_mod_complement");
        if (k < 1) throw std::invalid_argument("zk_mod_complement needs k >= 1");
        int mod = 2 * k + 1;
        return by_residue(std::vector<int>(k, mod), [mod](const Coord& x) {
            long long s = 0;
            for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<long long>(i + 1) * x[i];
            return s % mod != 0;
        });
    }
    if (name == "hamming_complement") {
        int l = require_param(params, 0, "hamming_complement");
        if (l != 2 && l != 3) throw std::invalid_argument("hamming_complement needs l in {2,3}");
        int m = (1 << l) - 1;
        // Codeword test: syndrome = XOR of the column values i+1 over set
        // bits; columns enumerate all nonzero l-bit vectors.
        return by_residue(std::vector<int>(m, 2), [](const Coord& x) {
            int syndrome = 0;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i]) syndrome ^= static_cast<int>(i + 1);
            return syndrome != 0;
        });
    }
    if (name == "venetian_blinds")
        return by_residue({8, 4}, [](const Coord& x) { return x[0] % 4 <= 1; });
    if (name == "blinds6")
        return by_residue({8, 8}, [](const Coord& x) { return x[0] % 8 <= 1; });
    if (name == "blinker")
        return TorusPattern({5, 5}, {{2, 1}, {2, 2}, {2, 3}});
    if (name == "lightspeed_wire7")
        return TorusPattern::from_rows(text_rows(wire_torus_text()));
    throw std::invalid_argument("unknown construction: " + name);
}

const std::vector<NamedConstruction>& registry() {
    static const std::vector<NamedConstruction> entries = {
        {"isolated_quarter", {}, ratio(1, 4), 0, moore8()},
        {"dominoes_third", {}, ratio(1, 3), 1, moore8()},
        {"stripes", {}, ratio(1, 2), 2, moore8()},
        {"chicken_wire", {}, ratio(1, 2), 3, moore8()},
        {"mod5_stripe", {}, ratio(3, 5), 4, moore8()},
        {"alt_three_fifths", {}, ratio(3, 5), 4, moore8()},
        {"cubic13", {}, ratio(9, 13), 5, moore8()},
        {"mod5_complement", {}, ratio(4, 5), 6, moore8()},
        {"mod3_complement", {}, ratio(8, 9), 7, moore8()},
        {"full", {}, ratio(1), 8, moore8()},
        {"block_lattice", {3, 3}, ratio(4, 9), 3, moore8()},
        {"venetian_blinds", {}, ratio(1, 2), 5, moore8()},
        {"blinds6", {}, ratio(1, 4), 5, moore8()},
        {"blinker", {}, ratio(3, 25), 2, moore8()},
        {"lightspeed_wire7", {}, ratio(26, 63), 4, moore8()},
        {"checkerboard", {}, ratio(1, 2), 0, vonneumann4()},
        {"vn_wire", {}, ratio(1, 2), 1, vonneumann4()},
        {"vn_two_thirds", {}, ratio(2, 3), 2, vonneumann4()},
        {"zk_mod_complement", {2}, ratio(4, 5), 3, unit(2)},
        {"full", {}, ratio(1), 4, vonneumann4()},
        {"tri_third", {}, ratio(1, 3), 0, tri6()},
        {"tri_domino", {}, ratio(2, 5), 1, tri6()},
        {"tri_half", {}, ratio(1, 2), 2, tri6()},
        {"tri_two_thirds", {}, ratio(2, 3), 3, tri6()},
        {"tri_three_quarters", {}, ratio(3, 4), 4, tri6()},
        {"tri_six_sevenths", {}, ratio(6, 7), 5, tri6()},
        {"full", {}, ratio(1), 6, tri6()},
        {"zk_checkerboard", {3}, ratio(1, 2), 0, unit(3)},
        {"zk_mod_complement", {3}, ratio(6, 7), 5, unit(3)},
        {"hamming_complement", {2}, ratio(3, 4), 4, unit(3)},
        {"hamming_complement", {3}, ratio(7, 8), 12, unit(7)},
    };
    return entries;
}

std::vector<std::string> construction_names() {
    std::set<std::string> seen;
    std::vector<std::string> names;
    for (const auto& e : registry()) {
        if (seen.insert(e.name).second) names.push_back(e.name);
    }
    return names;
}

namespace {

bool dims_tile(const std::vector<int>& small, const std::vector<int>& big) {
    if (small.size() != big.size()) return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (big[i] % small[i] != 0) return false;
    return true;
}

}  // namespace

std::optional<TorusPattern> best_known(const std::vector<int>& dims, const Neighborhood& nb,
                                       int n) {
    std::optional<TorusPattern> best;
    for (const auto& e : registry()) {
        if (!(e.nb == nb) || e.expected_degree > n) continue;
        TorusPattern p = generate(e.name, e.params);
        if (!dims_tile(p.dims(), dims)) continue;
        TorusPattern tiled = tile(p, dims);
        if (!satisfies(tiled, MaxDegree(nb, n)).ok) continue;  // defensive; tiling preserves degree
        if (!best || tiled.count() > best->count()) best = std::move(tiled);
    }
    return best;
}

std::optional<TorusPattern> best_known_still(const std::vector<int>& dims) {
    std::optional<TorusPattern> best;
    auto consider = [&](const TorusPattern& p) {
        if (!dims_tile(p.dims(), dims)) return;
        TorusPattern tiled = tile(p, dims);
        if (!is_still_life(tiled)) return;
        if (!best || tiled.count() > best->count()) best = std::move(tiled);
    };
    for (const auto& e : registry()) {
        if (!(e.nb == moore8())) continue;
        consider(generate(e.name, e.params));
    }
    if (dims.size() == 2 && dims[0] >= 3 && dims[1] >= 3)
        consider(generate("block_lattice", {dims[0], dims[1]}));
    return best;
}

const std::vector<GalleryItem>& gallery() {
    static const std::vector<GalleryItem> items = [] {
        std::vector<GalleryItem> out;
        for (const RawGalleryEntry& raw : raw_gallery()) {
            GalleryItem item{raw.name, *neighborhood_by_name(raw.nb), std::nullopt,
                             std::nullopt, raw.note};
            if (raw.grid) item.window = FiniteGrid::from_rows(text_rows(raw.grid));
            if (raw.torus) item.torus = TorusPattern::from_rows(text_rows(raw.torus));
            out.push_back(std::move(item));
        }
        return out;
    }();
    return items;
}

const GalleryItem& gallery_item(const std::string& name) {
    // densest_deg3 aliases the degree-2 entry: the best known density for
    // both caps is 1/2 and the exhibited pattern is the same stripes.
    std::string key = (name == "densest_deg3") ? "densest_deg2" : name;
    for (const GalleryItem& item : gallery())
        if (item.name == key) return item;
    throw std::invalid_argument("unknown gallery entry: " + name);
}

std::vector<std::string> gallery_names() {
    std::vector<std::string> names;
    for (const GalleryItem& item : gallery()) names.push_back(item.name);
    return names;
}

}  // namespace stillife
