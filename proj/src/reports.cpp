#include "stillife/reports.hpp"

#include <sstream>

#include "stillife/pattern_io.hpp"
#include "stillife/voronoi.hpp"

namespace stillife {

using nlohmann::json;

std::string rational_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return to_string(c);
}

namespace {

json coord_json(const Coord& c) {
    json a = json::array();
    for (int v : c) a.push_back(v);
    return a;
}

json coords_json(const std::vector<Coord>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(coord_json(c));
    return a;
}

std::string coord_list_str(const std::vector<Coord>& cs, std::size_t cap = 4) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cs.size() && i < cap; ++i) {
        if (i) out << " ";
        out << coord_str(cs[i]);
    }
    if (cs.size() > cap) out << " ...";
    return out.str();
}

// Integers print bare; non-integers are parenthesized so a ratio of two
// values stays readable.
std::string int_or_paren(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return "(" + to_string(c) + ")";
}

}  // namespace

Report report_still_check(const TorusPattern& p) {
    StillLifeReport rep = still_life_report(p);
    Report out;
    out.status = rep.all() ? 0 : 1;
    std::ostringstream text;
    if (rep.all()) {
        text << "still life: yes, density " << rational_str(density(p));
    } else {
        text << "still life: no";
        if (!rep.cond1) text << "\nbirths at: " << coord_list_str(rep.violators1);
        if (!rep.cond2) text << "\nstarvation at: " << coord_list_str(rep.violators2);
        if (!rep.cond3) text << "\novercrowding at: " << coord_list_str(rep.violators3);
    }
    out.text = text.str();
    out.data = json{{"command", "check"},
                    {"mode", "still-life"},
                    {"still_life", rep.all()},
                    {"density", rational_str(density(p))},
                    {"births", coords_json(rep.violators1)},
                    {"starvation", coords_json(rep.violators2)},
                    {"overcrowding", coords_json(rep.violators3)}};
    return out;
}

Report report_degree_check(const TorusPattern& p, const Neighborhood& nb, int n) {
    SatisfiesResult sat = satisfies(p, Constraint(MaxDegree(nb, n)));
    int d = max_degree(p, nb);
    Report out;
    out.status = sat.ok ? 0 : 1;
    std::ostringstream text;
    if (sat.ok)
        text << "degree cap " << n << ": satisfied, max degree " << d << ", density "
             << rational_str(density(p));
    else
        text << "degree cap " << n << ": violated at " << coord_str(*sat.violator)
             << ", max degree " << d;
    out.text = text.str();
    out.data = json{{"command", "check"},
                    {"mode", "degree"},
                    {"cap", n},
                    {"neighborhood", nb.name},
                    {"satisfied", sat.ok},
                    {"max_degree", d},
                    {"density", rational_str(density(p))}};
    if (!sat.ok) out.data["violator"] = coord_json(*sat.violator);
    return out;
}

Report report_interior_check(const FiniteGrid& g) {
    InteriorReport rep = interior_still_life_check(g);
    Report out;
    out.status = rep.all() ? 0 : 1;
    auto pair_list = [](const std::vector<std::pair<int, int>>& v) {
        json a = json::array();
        for (auto& [x, y] : v) a.push_back(json::array({x, y}));
        return a;
    };
    std::ostringstream text;
    if (rep.all()) {
        text << "interior still life: yes (" << (g.width() - 2) << "x" << (g.height() - 2)
             << " interior)";
    } else {
        text << "interior still life: no";
        auto emit = [&text](const char* what, const std::vector<std::pair<int, int>>& v) {
            if (v.empty()) return;
            text << "\n" << what << " at:";
            for (std::size_t i = 0; i < v.size() && i < 4; ++i)
                text << " (" << v[i].first << "," << v[i].second << ")";
            if (v.size() > 4) text << " ...";
        };
        emit("births", rep.violators1);
        emit("starvation", rep.violators2);
        emit("overcrowding", rep.violators3);
    }
    out.text = text.str();
    out.data = json{{"command", "check"},
                    {"mode", "interior"},
                    {"interior_still_life", rep.all()},
                    {"births", pair_list(rep.violators1)},
                    {"starvation", pair_list(rep.violators2)},
                    {"overcrowding", pair_list(rep.violators3)}};
    return out;
}

Report report_density(const TorusPattern& p) {
    Report out;
    out.text = "density " + rational_str(density(p)) + " (" + std::to_string(p.count()) + " of " +
               std::to_string(p.area()) + " cells)";
    out.data = json{{"command", "density"},
                    {"density", rational_str(density(p))},
                    {"live", p.count()},
                    {"cells", p.area()}};
    return out;
}

Report report_grid_density(const FiniteGrid& g) {
    long long cells = static_cast<long long>(g.width()) * g.height();
    Rational d = ratio(g.count(), cells);
    d.canonicalize();
    Report out;
    out.text = "window density " + rational_str(d) + " (" + std::to_string(g.count()) + " of " +
               std::to_string(cells) + " cells)";
    out.data = json{{"command", "density"},
                    {"window_density", rational_str(d)},
                    {"live", g.count()},
                    {"cells", cells}};
    return out;
}

Report report_evolve(const TorusPattern& p, int steps) {
    TorusPattern q = p;
    for (int i = 0; i < steps; ++i) q = life_step(q);
    Report out;
    out.text = "! after " + std::to_string(steps) + " steps, density " +
               rational_str(density(q)) + "\n" + serialize(q);
    while (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
    out.data = json{{"command", "evolve"},
                    {"steps", steps},
                    {"density", rational_str(density(q))},
                    {"pattern", serialize(q)}};
    return out;
}

Report report_period(const TorusPattern& p, int max_steps) {
    std::optional<int> period = oscillator_period(p, max_steps);
    Report out;
    if (!period) {
        out.status = 1;
        out.text = "no period within " + std::to_string(max_steps) + " steps";
        out.data = json{{"command", "period"}, {"period", nullptr}, {"max_steps", max_steps}};
        return out;
    }
    std::vector<std::string> phase_densities;
    TorusPattern q = p;
    Rational sum(0);
    for (int i = 0; i < *period; ++i) {
        Rational d = density(q);
        sum += d;
        phase_densities.push_back(rational_str(d));
        q = life_step(q);
    }
    Rational avg = sum / *period;
    avg.canonicalize();
    std::ostringstream text;
    text << "period " << *period << ", phase densities";
    for (const auto& s : phase_densities) text << " " << s;
    text << ", average " << rational_str(avg);
    out.text = text.str();
    out.data = json{{"command", "period"},
                    {"period", *period},
                    {"phase_densities", phase_densities},
                    {"average", rational_str(avg)}};
    return out;
}

Report report_certificate(const WeightCertificate& cert, const CertificateCheck& chk) {
    Report out;
    out.status = chk.valid ? 0 : 1;
    out.text = "max weight " + int_or_paren(chk.max_weight) + "/" +
               int_or_paren(chk.total_weight) + " ≤ " + rational_str(cert.D) + ": " +
               (chk.valid ? "valid" : "invalid");
    Rational ratio_ = chk.max_weight / chk.total_weight;
    ratio_.canonicalize();
    json tight = json::array();
    for (const auto& t : chk.tight_subsets) tight.push_back(t);
    out.data = json{{"command", "bound"},
                    {"mode", "verify"},
                    {"max_weight", rational_str(chk.max_weight)},
                    {"total_weight", rational_str(chk.total_weight)},
                    {"D", rational_str(cert.D)},
                    {"valid", chk.valid},
                    {"certified_density", rational_str(ratio_)},
                    {"tight_subsets", tight}};
    return out;
}

Report report_lp(int box_w, int box_h, int n, const LpOptimum& lp) {
    Report out;
    std::ostringstream text;
    text << "optimal D = " << rational_str(lp.D) << " on " << box_w << "x" << box_h
         << " box, degree cap " << n << ", " << lp.cut_rounds << " rounds";
    json rows = json::array();
    for (int y = 0; y < box_h; ++y) {
        json row = json::array();
        text << "\n";
        for (int x = 0; x < box_w; ++x) {
            const Rational& w = lp.weights[static_cast<std::size_t>(y) * box_w + x];
            if (x) text << " ";
            text << rational_str(w);
            row.push_back(rational_str(w));
        }
        rows.push_back(row);
    }
    out.text = text.str();
    out.data = json{{"command", "bound"},
                    {"mode", "lp"},
                    {"box", json::array({box_w, box_h})},
                    {"n", n},
                    {"D", rational_str(lp.D)},
                    {"rounds", lp.cut_rounds},
                    {"weights", rows}};
    return out;
}

Report report_bound_suite(const Neighborhood& nb, int n, const BoundResult& b) {
    Report out;
    out.text = "density bound " + rational_str(b.bound) + " via " + b.method + " (" + nb.name +
               ", degree cap " + std::to_string(n) + ")";
    out.data = json{{"command", "bound"},
                    {"mode", "suite"},
                    {"neighborhood", nb.name},
                    {"n", n},
                    {"bound", rational_str(b.bound)},
                    {"method", b.method}};
    return out;
}

Report report_search(const SearchResult& r) {
    Report out;
    std::ostringstream text;
    if (r.proven_optimal) {
        text << "max density " << rational_str(r.best_value);
    } else {
        out.status = 3;
        text << "budget exhausted, incumbent density " << rational_str(r.best_value)
             << " and no better found";
    }
    text << "\n! nodes " << r.nodes_explored << "\n" << serialize(r.witness);
    out.text = text.str();
    while (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
    out.data = json{{"command", "search"},
                    {"density", rational_str(r.best_value)},
                    {"proven_optimal", r.proven_optimal},
                    {"nodes", r.nodes_explored},
                    {"witness", serialize(r.witness)}};
    return out;
}

Report report_voronoi(const TorusPattern& augmented, int added) {
    auto areas = cell_areas(augmented);
    Report out;
    std::ostringstream text;
    text << "! augmented: " << added << " cells added\n";
    text << "x1\tx2\tarea\talpha\tconfig";
    json cells = json::array();
    Rational total(0);
    for (const auto& [cell, area] : areas) {
        long long a = alpha(augmented, cell);
        auto label = classify_config(local_config(augmented, cell));
        text << "\n"
             << cell[0] << "\t" << cell[1] << "\t" << rational_str(area.area()) << "\t" << a
             << "\t" << (label ? *label : "-");
        total += area.area();
        cells.push_back(json{{"x1", cell[0]},
                             {"x2", cell[1]},
                             {"area", rational_str(area.area())},
                             {"alpha", a},
                             {"config", label ? json(*label) : json(nullptr)}});
    }
    total.canonicalize();
    out.text = text.str();
    out.data = json{{"command", "voronoi"},
                    {"added_cells", added},
                    {"total_area", rational_str(total)},
                    {"cells", cells}};
    return out;
}

}  // namespace stillife
