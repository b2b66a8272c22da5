#pragma once

#include <stdexcept>
#include <vector>

#include "stillife/core.hpp"
#include "stillife/rules.hpp"

namespace stillife {

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchResult {
    Rational best_value;  // density of the witness
    TorusPattern witness;
    long long nodes_explored;
    bool proven_optimal;  // false when the node budget ran out first
};

// Exact maximum density over torus patterns on dims satisfying con.
// Branch-and-bound in row-major cell order; for MaxDegree the analytic
// density bound caps the achievable cell count, so reaching that cap proves
// optimality without exhausting the tree. Warm-started from the catalogued
// constructions when one tiles dims. On budget exhaustion the incumbent is
// returned with proven_optimal = false, never a wrong claim.
SearchResult max_density(const std::vector<int>& dims, const Constraint& con,
                         long long node_budget = 400'000'000);

struct SubsetSearchResult {
    Rational best_value;
    std::vector<int> witness;             // row-major cell indices in the box
    std::vector<std::vector<int>> optima; // all maximizers found, capped
    bool optima_complete;                 // false if the cap or budget cut collection short
    long long nodes_explored;
    bool proven_optimal;
};

// Max of sum(weights over T) for T inside the W x H box whose cells each
// have at most n in-box neighbors. When collect_cap > 0 a second pass
// gathers maximizers (up to the cap) without disturbing the exact maximum.
SubsetSearchResult max_weighted_subset(int box_w, int box_h,
                                       const std::vector<Rational>& weights,
                                       const Neighborhood& nb, int n,
                                       long long node_budget = 2'000'000'000,
                                       int collect_cap = 0);

// Maximum density of patterns on dims that are fixed by the transition map:
// at most 3 live neighbors is enforced incrementally during search, the
// other two conditions once a cell's neighborhood is fully decided.
SearchResult max_still_life_density(const std::vector<int>& dims,
                                    long long node_budget = 400'000'000);

// Every maximum-density witness, reduced modulo translations and the point
// symmetries compatible with dims (axis sign flips always; axis swaps when
// the swapped dims agree). Throws BudgetExhausted if the search or the
// witness count overruns.
std::vector<TorusPattern> enumerate_optima(const std::vector<int>& dims, const Constraint& con,
                                           long long node_budget = 400'000'000,
                                           std::size_t max_witnesses = 200'000);

}  // namespace stillife
