#include "stillife/bounds.hpp"

#include <fstream>
#include <sstream>

#include "stillife/pattern_io.hpp"
#include "stillife/search.hpp"
#include "stillife/simplex.hpp"

namespace stillife {

Rational double_count_bound(int s, int n) {
    if (s < 1) throw std::invalid_argument("neighborhood size must be positive");
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    if (n > s) throw std::invalid_argument("degree exceeds the neighborhood size");
    return ratio(s, 2LL * s - n);
}

Rational refined_moore_bound(int n) {
    if (n < 0 || n > 3) throw std::invalid_argument("refined bound needs 0 <= n <= 3");
    return ratio(6, 14 - n);
}

Rational voronoi_bound(int n) {
    if (n < 0 || n > 3) throw std::invalid_argument("area bound needs 0 <= n <= 3");
    return ratio(1, 4 - n);
}

BoundResult bound_suite(const Neighborhood& nb, int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    if (n >= nb.size()) return {ratio(1), "trivial"};
    BoundResult best{double_count_bound(nb.size(), n), "double_count"};
    if (nb == moore8() && n <= 3) {
        Rational r = refined_moore_bound(n);
        if (r < best.bound) best = {r, "refined"};
        Rational v = voronoi_bound(n);
        if (v < best.bound) best = {v, "voronoi"};
    }
    return best;
}

WeightCertificate::WeightCertificate(int w, int h, std::vector<Rational> wts, Neighborhood nb_,
                                     int n_, Rational d)
    : box_w(w), box_h(h), weights(std::move(wts)), nb(std::move(nb_)), n(n_), D(std::move(d)) {
    if (box_w < 1 || box_h < 1) throw std::invalid_argument("box dims must be positive");
    if (nb.dimension != 2) throw std::invalid_argument("certificate box is 2-D");
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    if (weights.size() != static_cast<std::size_t>(box_w) * box_h)
        throw std::invalid_argument("weight count does not match the box");
    bool positive = false;
    for (auto& wt : weights) {
        wt.canonicalize();
        if (wt < 0) throw std::invalid_argument("weights must be nonnegative");
        if (wt > 0) positive = true;
    }
    if (!positive) throw std::invalid_argument("weights must not all vanish");
    D.canonicalize();
}

Rational WeightCertificate::total() const {
    Rational t(0);
    for (const auto& w : weights) t += w;
    return t;
}

CertificateCheck verify_certificate(const WeightCertificate& cert, long long node_budget) {
    SubsetSearchResult r = max_weighted_subset(cert.box_w, cert.box_h, cert.weights, cert.nb,
                                               cert.n, node_budget, 16);
    if (!r.proven_optimal)
        throw BudgetExhausted("certificate box too large for the configured search budget");
    Rational total = cert.total();
    CertificateCheck out;
    out.max_weight = r.best_value;
    out.total_weight = total;
    out.valid = (r.best_value <= cert.D * total);
    out.tight_subsets = std::move(r.optima);
    return out;
}

Rational averaging_bound(const WeightCertificate& cert, long long node_budget) {
    CertificateCheck chk = verify_certificate(cert, node_budget);
    if (!chk.valid) throw std::invalid_argument("certificate does not verify at its stated D");
    Rational d = chk.max_weight / chk.total_weight;
    d.canonicalize();
    return d;
}

LpOptimum optimal_weights_lp(int box_w, int box_h, const Neighborhood& nb, int n,
                             long long node_budget) {
    if (box_w < 1 || box_h < 1) throw std::invalid_argument("box dims must be positive");
    int n_cells = box_w * box_h;
    // Seed cut: the heaviest admissible subset under uniform weights.
    std::vector<std::vector<int>> cuts;
    {
        std::vector<Rational> uniform(n_cells, ratio(1, n_cells));
        SubsetSearchResult r = max_weighted_subset(box_w, box_h, uniform, nb, n, node_budget);
        if (!r.proven_optimal) throw BudgetExhausted("seed separation exceeded the node budget");
        cuts.push_back(r.witness);
    }
    int rounds = 0;
    while (true) {
        ++rounds;
        // Master: minimize D over w >= 0, slack >= 0 with
        //   sum_{x in T} w_x - D + slack_T = 0  (one row per cut)
        //   sum_x w_x = 1
        // Variables: w_0..w_{N-1}, D, slack_1..slack_m.
        std::size_t m = cuts.size();
        std::size_t nv = static_cast<std::size_t>(n_cells) + 1 + m;
        std::vector<std::vector<Rational>> A(m + 1, std::vector<Rational>(nv, Rational(0)));
        std::vector<Rational> b(m + 1, Rational(0));
        std::vector<Rational> c(nv, Rational(0));
        for (std::size_t k = 0; k < m; ++k) {
            for (int i : cuts[k]) A[k][i] = 1;
            A[k][n_cells] = -1;
            A[k][n_cells + 1 + k] = 1;
        }
        for (int i = 0; i < n_cells; ++i) A[m][i] = 1;
        b[m] = 1;
        c[n_cells] = 1;
        LpSolution sol = solve_equality_lp(A, b, c);
        std::vector<Rational> w(sol.x.begin(), sol.x.begin() + n_cells);
        Rational d_star = sol.value;
        d_star.canonicalize();

        SubsetSearchResult sep = max_weighted_subset(box_w, box_h, w, nb, n, node_budget);
        if (!sep.proven_optimal) throw BudgetExhausted("separation exceeded the node budget");
        if (sep.best_value <= d_star) {
            for (auto& wi : w) wi.canonicalize();
            return {d_star, std::move(w), rounds};
        }
        cuts.push_back(sep.witness);
    }
}

namespace {

// Content lines of a certificate file: blank and '!' lines skipped,
// 1-based numbering retained for error messages.
std::vector<std::pair<int, std::string>> cert_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t end = line.find_last_not_of(" \t");
        line = (end == std::string::npos) ? "" : line.substr(0, end + 1);
        if (line.empty() || line[0] == '!') continue;
        out.emplace_back(no, line);
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int_tok(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

Rational parse_rat_tok(const std::string& tok, int line) {
    auto r = parse_rational(tok);
    if (!r) throw ParseError(line, "expected a rational, got '" + tok + "'");
    return *r;
}

}  // namespace

WeightCertificate parse_certificate(const std::string& text) {
    auto lines = cert_lines(text);
    if (lines.size() < 2) throw ParseError(1, "certificate needs a header and a box line");
    {
        auto [no, s] = lines[0];
        auto toks = tokens_of(s);
        if (toks.size() != 5 || toks[0] != "cert" || toks[1] != "n" || toks[3] != "D")
            throw ParseError(no, "expected 'cert n <n> D <p>/<q>'");
    }
    int n = parse_int_tok(tokens_of(lines[0].second)[2], lines[0].first);
    Rational D = parse_rat_tok(tokens_of(lines[0].second)[4], lines[0].first);
    auto box_toks = tokens_of(lines[1].second);
    if (box_toks.size() != 3 || box_toks[0] != "box")
        throw ParseError(lines[1].first, "expected 'box W H'");
    int w = parse_int_tok(box_toks[1], lines[1].first);
    int h = parse_int_tok(box_toks[2], lines[1].first);
    if (w < 1 || h < 1) throw ParseError(lines[1].first, "box dims must be positive");
    if (lines.size() != static_cast<std::size_t>(h) + 2)
        throw ParseError(lines.back().first,
                         "expected " + std::to_string(h) + " weight rows after the box line");
    std::vector<Rational> weights;
    weights.reserve(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        auto [no, s] = lines[static_cast<std::size_t>(y) + 2];
        auto toks = tokens_of(s);
        if (toks.size() != static_cast<std::size_t>(w))
            throw ParseError(no, "expected " + std::to_string(w) + " weights in this row");
        for (const auto& t : toks) {
            Rational r = parse_rat_tok(t, no);
            if (r < 0) throw ParseError(no, "weights must be nonnegative");
            weights.push_back(std::move(r));
        }
    }
    try {
        return WeightCertificate(w, h, std::move(weights), moore8(), n, std::move(D));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].first, e.what());
    }
}

WeightCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_certificate(ss.str());
}

std::string serialize(const WeightCertificate& cert) {
    std::ostringstream out;
    out << "cert n " << cert.n << " D " << to_string(cert.D) << "\n";
    out << "box " << cert.box_w << " " << cert.box_h << "\n";
    for (int y = 0; y < cert.box_h; ++y) {
        for (int x = 0; x < cert.box_w; ++x) {
            if (x) out << " ";
            out << to_string(cert.weights[static_cast<std::size_t>(y) * cert.box_w + x]);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace stillife
