#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stillife/core.hpp"
#include "stillife/rules.hpp"

namespace stillife {

// A catalogued generator instance together with the density and maximum
// degree its pattern must reproduce (tests enforce both exactly).
struct NamedConstruction {
    std::string name;
    std::vector<int> params;
    Rational expected_density;
    int expected_degree;
    Neighborhood nb;
};

// Builds the named pattern on its minimal rectangular torus (or the
// documented small multiple). Parameterized names: block_lattice(m,n),
// zk_checkerboard(k), zk_mod_complement(k), hamming_complement(l in {2,3}).
// Throws std::invalid_argument for unknown names or bad parameters.
TorusPattern generate(const std::string& name, const std::vector<int>& params = {});

const std::vector<NamedConstruction>& registry();
std::vector<std::string> construction_names();

// Densest registry pattern under the given neighborhood with degree <= n
// whose torus tiles dims; used as a branch-and-bound warm start.
std::optional<TorusPattern> best_known(const std::vector<int>& dims, const Neighborhood& nb,
                                       int n);
// Densest catalogued pattern that is a still life on dims.
std::optional<TorusPattern> best_known_still(const std::vector<int>& dims);

// Patterns transcribed from printed figures: a finite window, and where the
// figure is exactly periodic, a torus extract of one period.
struct GalleryItem {
    std::string name;
    Neighborhood nb;
    std::optional<FiniteGrid> window;
    std::optional<TorusPattern> torus;
    std::string note;
};

const std::vector<GalleryItem>& gallery();
const GalleryItem& gallery_item(const std::string& name);  // throws on unknown name
std::vector<std::string> gallery_names();

}  // namespace stillife
