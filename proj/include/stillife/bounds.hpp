#pragma once

#include <string>
#include <vector>

#include "stillife/core.hpp"

namespace stillife {

// Handshake bound s/(2s - n) for degree <= n under a size-s symmetric
// neighborhood; requires 0 <= n <= s.
Rational double_count_bound(int s, int n);

// 6/(14 - n): the 8-neighbor double count sharpened by the fact that when
// every live cell has < 4 live neighbors, dead cells see at most 6 live
// ones. Requires 0 <= n <= 3 (the premise fails above 3).
Rational refined_moore_bound(int n);

// 1/(4 - n): every 8-neighborhood cell of a degree-n-capped pattern owns
// gauge-nearest area at least 4 - n. Requires 0 <= n <= 3.
Rational voronoi_bound(int n);

struct BoundResult {
    Rational bound;
    std::string method;  // "double_count" | "refined" | "voronoi" | "trivial"
};

// Minimum applicable analytic bound; refinements apply to the 8-cell
// neighborhood only. Degrees >= the neighborhood size fall back to 1.
BoundResult bound_suite(const Neighborhood& nb, int n);

// Nonnegative weights on a W x H box certifying: every subset whose in-box
// degree stays <= n has weight at most D times the total. By averaging over
// translates this bounds the density of any degree-capped pattern by D.
struct WeightCertificate {
    int box_w, box_h;
    std::vector<Rational> weights;  // row-major, index x + box_w * y
    Neighborhood nb;
    int n;
    Rational D;

    WeightCertificate(int w, int h, std::vector<Rational> wts, Neighborhood nb_, int n_,
                      Rational d);
    Rational total() const;
};

struct CertificateCheck {
    bool valid;                                   // max_weight <= D * total
    Rational max_weight;                          // exact maximum M
    Rational total_weight;                        // sum of all box weights
    std::vector<std::vector<int>> tight_subsets;  // maximizers found, capped
};

// In-box degree (neighbors outside the box ignored) relaxes the plane
// constraint, so a certificate passing here is valid in the plane sense.
// Throws BudgetExhausted instead of ever returning a wrong verdict.
CertificateCheck verify_certificate(const WeightCertificate& cert,
                                    long long node_budget = 2'000'000'000);

// M / total: the least D the given weights support. Requires the certificate
// to verify at its stated D; throws std::invalid_argument otherwise.
Rational averaging_bound(const WeightCertificate& cert, long long node_budget = 2'000'000'000);

struct LpOptimum {
    Rational D;
    std::vector<Rational> weights;  // row-major on the box, sums to 1
    int cut_rounds;
};

// Exact minimum over nonnegative box weights summing to 1 of the largest
// admissible-subset weight. Cutting-plane loop: solve the master program on
// the cuts found so far, then ask the subset search for a violated one;
// stops when the heaviest admissible subset no longer exceeds the master
// optimum.
LpOptimum optimal_weights_lp(int box_w, int box_h, const Neighborhood& nb, int n,
                             long long node_budget = 2'000'000'000);

// Text form: `cert n <n> D <p>/<q>`, then `box W H`, then H rows of W
// whitespace-separated nonnegative rationals. 8-cell neighborhood implied.
WeightCertificate parse_certificate(const std::string& text);
WeightCertificate load_certificate(const std::string& path);
std::string serialize(const WeightCertificate& cert);

}  // namespace stillife
