#pragma once

#include <string>

#include "json.hpp"
#include "stillife/bounds.hpp"
#include "stillife/core.hpp"
#include "stillife/rules.hpp"
#include "stillife/search.hpp"

namespace stillife {

// One command's answer: exit status, the text report (no trailing newline),
// and a JSON object mirroring the text field for field.
struct Report {
    int status = 0;
    std::string text;
    nlohmann::json data;
};

// Lowest-terms "p" or "p/q".
std::string rational_str(const Rational& r);

Report report_still_check(const TorusPattern& p);
Report report_degree_check(const TorusPattern& p, const Neighborhood& nb, int n);
Report report_interior_check(const FiniteGrid& g);
Report report_density(const TorusPattern& p);
Report report_grid_density(const FiniteGrid& g);
Report report_evolve(const TorusPattern& p, int steps);
Report report_period(const TorusPattern& p, int max_steps);
Report report_certificate(const WeightCertificate& cert, const CertificateCheck& chk);
Report report_lp(int box_w, int box_h, int n, const LpOptimum& lp);
Report report_bound_suite(const Neighborhood& nb, int n, const BoundResult& b);
Report report_search(const SearchResult& r);
// Per-cell gauge areas of the augmented pattern as TSV; `added` is how many
// isolated cells the augmentation introduced.
Report report_voronoi(const TorusPattern& augmented, int added);

}  // namespace stillife
