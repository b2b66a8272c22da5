// End-to-end acceptance checks. Each numbered criterion prints exactly one
// PASS/FAIL line with the measured values; the process exits nonzero if any
// line fails. Comparisons are exact rational equalities, zero tolerance.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stillife/bounds.hpp"
#include "stillife/constructions.hpp"
#include "stillife/pattern_io.hpp"
#include "stillife/rules.hpp"
#include "stillife/search.hpp"
#include "stillife/voronoi.hpp"

using namespace stillife;
using Clock = std::chrono::steady_clock;

namespace {

const std::filesystem::path kData = STILLIFE_DATA_DIR;

int g_failures = 0;

void report(int id, bool pass, const std::string& detail, Clock::time_point t0) {
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream line;
    line.precision(1);
    line << id << ": " << (pass ? "PASS" : "FAIL") << " - " << detail << " [" << std::fixed << secs
         << "s]";
    std::cout << line.str() << std::endl;
    if (!pass) ++g_failures;
}

template <class F>
void criterion(int id, F body) {
    auto t0 = Clock::now();
    try {
        auto [pass, detail] = body();
        report(id, pass, detail, t0);
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what(), t0);
    }
}

// ---- 1: the nine density-record constructions ------------------------------

std::pair<bool, std::string> construction_table() {
    const std::vector<std::pair<std::string, Rational>> rows = {
        {"isolated_quarter", ratio(1, 4)}, {"dominoes_third", ratio(1, 3)},
        {"stripes", ratio(1, 2)},          {"chicken_wire", ratio(1, 2)},
        {"mod5_stripe", ratio(3, 5)},      {"cubic13", ratio(9, 13)},
        {"mod5_complement", ratio(4, 5)},  {"mod3_complement", ratio(8, 9)},
        {"full", ratio(1)},
    };
    bool ok = true;
    std::ostringstream bad;
    for (int n = 0; n < 9; ++n) {
        TorusPattern p = generate(rows[n].first);
        Rational d = density(p);
        int deg = max_degree(p, moore8());
        if (d != rows[n].second || deg != n) {
            ok = false;
            bad << rows[n].first << " gave " << to_string(d) << " at degree " << deg << "; ";
        }
    }
    return {ok, ok ? "nine patterns hit densities 1/4,1/3,1/2,1/2,3/5,9/13,4/5,8/9,1 at degrees "
                     "0..8 exactly"
                   : bad.str()};
}

// ---- 2: closed-form bound formulas ------------------------------------------

std::pair<bool, std::string> bound_formulas() {
    bool ok = true;
    std::ostringstream bad;
    auto expect = [&](const Rational& got, const Rational& want, const std::string& what) {
        if (got != want) {
            ok = false;
            bad << what << " gave " << to_string(got) << " not " << to_string(want) << "; ";
        }
    };
    for (int n = 0; n <= 8; ++n) expect(double_count_bound(8, n), ratio(8, 16 - n), "s=8");
    for (int n = 0; n <= 4; ++n) expect(double_count_bound(4, n), ratio(4, 8 - n), "s=4");
    for (int n = 0; n <= 6; ++n) expect(double_count_bound(6, n), ratio(6, 12 - n), "s=6");
    for (int k = 1; k <= 5; ++k)
        for (int n = 0; n <= 2 * k; ++n)
            expect(double_count_bound(2 * k, n), ratio(2 * k, 4 * k - n), "s=2k");
    expect(double_count_bound(8, 6), ratio(4, 5), "8,6");
    expect(double_count_bound(6, 5), ratio(6, 7), "6,5");
    expect(refined_moore_bound(3), ratio(6, 11), "refined(3)");
    expect(refined_moore_bound(2), ratio(1, 2), "refined(2)");
    expect(refined_moore_bound(0), ratio(3, 7), "refined(0)");
    for (int n = 0; n <= 3; ++n) expect(voronoi_bound(n), ratio(1, 4 - n), "voronoi");
    return {ok, ok ? "handshake family s/(2s-n) on all four neighborhoods, sharpened 6/(14-n), "
                     "and area bound 1/(4-n) all match their closed forms"
                   : bad.str()};
}

// ---- 3: narrow-cell area offsets over all low-degree configurations ---------

std::pair<bool, std::string> narrow_area_table() {
    const std::map<std::string, int> want = {
        {"isolated", 16}, {"orth1", 8}, {"diag1", 12}, {"L", 0},  {"L'", 2},  {"M", 4},
        {"M'", 7},        {"N", 8},     {"N'", 8},      {"A", -4}, {"B", -1},  {"C", -2},
        {"C'", 1},        {"C''", 2},   {"D", 4},       {"E", 3},  {"F", 0},   {"F'", 3},
        {"F''", 6}};
    const std::vector<Coord>& offs = moore8().offsets;
    bool ok = true;
    std::ostringstream bad;
    int n_cfg = 0;
    std::map<std::string, int> seen;
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) > 3) continue;
        LocalConfig cfg;
        for (int i = 0; i < 8; ++i)
            if (mask >> i & 1) cfg.insert(offs[i]);
        ++n_cfg;
        auto label = classify_config(cfg);
        if (!label) {
            ok = false;
            bad << "unclassified mask " << mask << "; ";
            continue;
        }
        ++seen[*label];
        int a0 = alpha0(cfg);  // computed from triangle ownership, not looked up
        auto it = want.find(*label);
        if (it == want.end() || a0 != it->second) {
            ok = false;
            bad << *label << " gave " << a0 << "; ";
        }
    }
    if (n_cfg != 93 || seen.size() != want.size()) {
        ok = false;
        bad << n_cfg << " configs over " << seen.size() << " orbits; ";
    }
    return {ok, ok ? "all 93 configurations with at most 3 occupied offsets reproduce the 19 "
                     "tabulated area offsets (16 labeled plus 16/8/12) by triangle ownership"
                   : bad.str()};
}

// ---- 4: shipped weight certificates ------------------------------------------

std::pair<bool, std::string> shipped_certificates() {
    bool ok = true;
    std::ostringstream out;
    struct Want {
        const char* file;
        int n;
        Rational D, total, max_w;
    };
    const std::vector<Want> wants = {
        {"fib.cert", 4, ratio(5, 8), ratio(168), ratio(105)},
        {"deg5.cert", 5, ratio(149, 212), ratio(212), ratio(149)},
    };
    for (const Want& w : wants) {
        WeightCertificate cert = load_certificate((kData / "certs" / w.file).string());
        if (cert.n != w.n || cert.D != w.D) {
            ok = false;
            out << w.file << " header mismatch; ";
            continue;
        }
        CertificateCheck chk = verify_certificate(cert);
        if (!chk.valid || chk.total_weight != w.total || chk.max_weight != w.max_w ||
            averaging_bound(cert) != w.max_w / w.total) {
            ok = false;
            out << w.file << ": M " << to_string(chk.max_weight) << " of "
                << to_string(chk.total_weight) << " valid=" << chk.valid << "; ";
        }
    }
    return {ok, ok ? "6x6 certificates verify exactly: M=105, total=168, D=5/8 and M=149, "
                     "total=212, D=149/212"
                   : out.str()};
}

// ---- 5: optimal weights by exact linear programming --------------------------

std::pair<bool, std::string> lp_reproduction() {
    bool ok = true;
    std::ostringstream out;
    LpOptimum tiny = optimal_weights_lp(2, 2, moore8(), 0);
    if (tiny.D != ratio(1, 4)) {
        ok = false;
        out << "2x2 n=0 gave " << to_string(tiny.D) << "; ";
    }
    std::vector<Rational> d;
    for (int N : {2, 3, 4}) d.push_back(optimal_weights_lp(N, N, moore8(), 4).D);
    if (!(d[0] >= d[1] && d[1] >= d[2] && d[2] >= ratio(3, 5))) {
        ok = false;
        out << "n=4 chain " << to_string(d[0]) << " " << to_string(d[1]) << " " << to_string(d[2])
            << " violates monotonicity or the 3/5 floor; ";
    }
    if (ok)
        out << "2x2 n=0 optimum exactly 1/4; n=4 optima " << to_string(d[0]) << " >= "
            << to_string(d[1]) << " >= " << to_string(d[2]) << " >= 3/5";
    return {ok, out.str()};
}

// ---- 6: search against theory -------------------------------------------------

std::pair<bool, std::string> search_vs_theory() {
     const long long kBudget = 400'000'000;  // stated node budget for every search below
    struct Pin {
        std::vector<int> dims;
        int n;
        Rational want;
    };
    const std::vector<Pin> pins = {
        {{4, 4}, 0, ratio(1, 4)}, {{6, 6}, 1, ratio(1, 3)}, {{4, 4}, 2, ratio(1, 2)},
        {{5, 5}, 6, ratio(4, 5)}, {{3, 3}, 7, ratio(8, 9)},
    };
    bool ok = true;
    std::ostringstream out;
    for (const Pin& pin : pins) {
        SearchResult r = max_density(pin.dims, Constraint(MaxDegree(moore8(), pin.n)), kBudget);
        Rational cap = bound_suite(moore8(), pin.n).bound;
        if (!r.proven_optimal || r.best_value != pin.want || r.best_value > cap) {
            ok = false;
            out << "degree " << pin.n << " gave " << to_string(r.best_value)
                << (r.proven_optimal ? "" : " unproven") << "; ";
        }
    }
    SearchResult still = max_still_life_density({4, 4}, kBudget);
    if (!still.proven_optimal || still.best_value != ratio(1, 2)) {
        ok = false;
        out << "4x4 stable maximum gave " << to_string(still.best_value) << "; ";
    }
    SearchResult deg3 = max_density({6, 6}, Constraint(MaxDegree(moore8(), 3)), kBudget);
    if (deg3.proven_optimal) {
        if (deg3.best_value != ratio(1, 2)) {
            ok = false;
            out << "6x6 degree-3 optimum " << to_string(deg3.best_value) << "; ";
        } else if (ok) {
            out << "five density pins proved optimal and within analytic bounds; 4x4 stable "
                   "maximum 1/2; 6x6 degree-3 maximum proved 1/2 in "
                << deg3.nodes_explored << " nodes (budget " << kBudget << ")";
        }
    } else {
        // degraded form: exhaustive proof did not fit the budget
        bool degraded_ok = deg3.best_value == ratio(1, 2);
        if (!degraded_ok) ok = false;
        out << (degraded_ok ? "6x6 degree-3 search hit the node budget: incumbent = 1/2 and no "
                              "better found (degraded check)"
                            : "6x6 degree-3 search hit the budget below density 1/2");
    }
    return {ok, out.str()};
}

// ---- 7: transcribed figure gallery ---------------------------------------------

std::pair<bool, std::string> gallery_verification() {
    const std::vector<std::string> windows = {
        "chicken_wire", "dozens",    "octets", "onion_bulbs_2", "onion_rings_3", "square_waves",
        "tv_static",    "dcc_onions", "hoey_1", "hoey_2",        "moore_pattern"};
    const std::vector<std::string> tori = {"chicken_wire",  "dozens",        "octets",
                                           "onion_bulbs_2", "onion_rings_3", "square_waves"};
    bool ok = true;
    std::ostringstream out;
    for (const std::string& name : windows) {
        const GalleryItem& item = gallery_item(name);
        if (!item.window || !interior_still_life_check(*item.window).all()) {
            ok = false;
            out << name << " window failed interior verification; ";
        }
    }
    for (const std::string& name : tori) {
        const GalleryItem& item = gallery_item(name);
        if (!item.torus || !is_still_life(*item.torus) || density(*item.torus) != ratio(1, 2)) {
            ok = false;
            out << name << " torus not stable at 1/2; ";
        }
    }
    // negative control: the deliberately damaged copy must be caught
    const GalleryItem& bad = gallery_item("fig5b_perturbed");
    if (!bad.window || interior_still_life_check(*bad.window).all()) {
        ok = false;
        out << "perturbed control was not caught; ";
    }
    return {ok, ok ? "11 transcribed windows verify on their interiors; the 6 periodic ones are "
                     "stable on their tori at density exactly 1/2; perturbed control caught"
                   : out.str()};
}

// ---- 8: oscillators --------------------------------------------------------------

std::pair<bool, std::string> oscillators() {
    bool ok = true;
    std::ostringstream out;

    TorusPattern blinker = generate("blinker");
    if (oscillator_period(blinker, 8) != std::optional<int>(2)) {
        ok = false;
        out << "blinker period wrong; ";
    }
    TorusPattern venetian = generate("venetian_blinds");
    if (oscillator_period(venetian, 8) != std::optional<int>(2) ||
        phase_average_density(venetian) != ratio(1, 2)) {
        ok = false;
        out << "two-phase blinds not period 2 at average 1/2; ";
    }
    TorusPattern wire = generate("lightspeed_wire7");
    if (oscillator_period(wire, 16) != std::optional<int>(7)) {
        ok = false;
        out << "signal wire period wrong; ";
    }

    TorusPattern blinds = generate("blinds6");
    auto period = oscillator_period(blinds, 16);
    int heavy = 0;
    TorusPattern phase = blinds;
    for (int i = 0; i < (period ? *period : 0); ++i) {
        if (density(phase) == ratio(3, 4)) ++heavy;
        phase = life_step(phase);
    }
    Rational avg = period ? phase_average_density(blinds) : ratio(0);
    if (period != std::optional<int>(6) || heavy != 2) {
        ok = false;
        out << "six-phase blinds period/heavy-phase count wrong; ";
    }
    if (avg != ratio(1, 2)) {
        // Exact computation: the six phases have densities
        // 1/4,1/4,3/4,1/4,1/4,3/4, so the cycle mean is 5/12. The required
        // value 1/2 is the two-phase pattern's average and is unattainable
        // here; reported as measured rather than adjusted.
        ok = false;
        out << "six-phase blinds cycle average is " << to_string(avg)
            << ", not 1/2 (its two heavy phases are 3/4, the other four are 1/4); ";
    }
    if (ok)
        out << "blinker period 2, two-phase blinds period 2 averaging 1/2, six-phase blinds "
               "period 6 with two 3/4 phases, signal wire period 7";
    return {ok, out.str()};
}

// ---- 9: generator re-verification on enlarged tori --------------------------------

std::pair<bool, std::string> tiled_brute_force() {
    bool ok = true;
    std::ostringstream out;
    int n_checked = 0;
    long long biggest = 0;
    for (const NamedConstruction& e : registry()) {
        bool other_lattice = e.nb == vonneumann4() || e.nb == tri6();
        bool named = e.name.rfind("zk_", 0) == 0 || e.name.rfind("hamming_", 0) == 0;
        if (!other_lattice && !named) continue;
        TorusPattern p = generate(e.name, e.params);
        std::vector<int> big;
        for (int d : p.dims()) big.push_back(static_cast<int>(std::lcm(d, 4)));
        TorusPattern t = tile(p, big);
        biggest = std::max(biggest, t.area());
        ++n_checked;
        if (density(t) != e.expected_density || max_degree(t, e.nb) != e.expected_degree) {
            ok = false;
            out << e.name << " drifted on the enlarged torus; ";
        }
    }
    if (n_checked < 16) {
        ok = false;
        out << "only " << n_checked << " generators found; ";
    }
    if (ok)
        out << n_checked
            << " generators keep their density/degree pairs on width-multiple-of-4 tori "
               "(largest re-verified torus "
            << biggest << " cells, scanned cell by cell)";
    return {ok, out.str()};
}

// ---- 10: randomized property suites -------------------------------------------------

std::pair<bool, std::string> property_suites() {
    std::mt19937 rng(20260814u);  // fixed seed: failures must reproduce
    bool ok = true;
    std::ostringstream out;

    // (a) owned areas partition the torus on augmented patterns
    int no_aug_trials = 0;
    const std::vector<std::vector<int>> all_dims = {{6, 6}, {9, 6}, {6, 9}, {9, 9}};
    const double fills[] = {0.15, 0.3, 0.5};
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const std::vector<int>& dims = all_dims[trial % all_dims.size()];
        double fill = fills[trial % 3];
        TorusPattern p(dims);
        std::bernoulli_distribution live(fill);
        for (std::size_t i = 0; i < static_cast<std::size_t>(p.area()); ++i)
            p.set_index(i, live(rng));
        TorusPattern aug = augment_isolated(p);
        auto areas = cell_areas(aug);
        long long eighths = 0;
        for (const auto& [cell, area] : areas) {
            eighths += area.eighths;
            if (area.eighths <= 0) ok = false;
        }
        if (eighths != 8 * aug.area() || static_cast<long long>(areas.size()) != aug.count())
            ok = false;
        if (!ok) out << "area partition failed on trial " << trial << "; ";

        // (b) reciprocity needs no augmentation: mean owned area = 1/density
        if (aug.count() == p.count() && p.count() > 0) {
            ++no_aug_trials;
            Rational mean = ratio(eighths, 8 * p.count());
            if (mean * density(p) != ratio(1)) {
                ok = false;
                out << "reciprocity failed on trial " << trial << "; ";
            }
        }
    }
    if (no_aug_trials < 20) {
        ok = false;
        out << "only " << no_aug_trials << " unaugmented trials; ";
    }

    // (c) stability is exactly fixed-point-ness; every tenth pattern starts
    // from a catalogued stable form with up to two random flips so the
    // equivalence is hit from both sides
    int stills = 0;
    const TorusPattern seeds[] = {tile(generate("block_lattice", {3, 3}), {6, 6}),
                                  generate("block_lattice", {6, 6}),
                                  tile(generate("stripes"), {6, 6})};
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        TorusPattern p({6, 6});
        if (trial % 10 == 0) {
            p = seeds[trial % 3];
            int flips = trial % 3;
            for (int f = 0; f < flips; ++f) {
                auto i = rng() % 36;
                p.set_index(i, !p.contains_index(i));
            }
        } else {
            std::bernoulli_distribution live(0.2 + 0.4 * (trial % 3) / 2.0);
            for (std::size_t i = 0; i < 36; ++i) p.set_index(i, live(rng));
        }
        bool still = is_still_life(p);
        if (still != (life_step(p) == p)) {
            ok = false;
            out << "stability/fixed-point mismatch on trial " << trial << "; ";
        }
        stills += still;
    }

    // (d) per-offset neighbor counts survive torus refinement
    const std::vector<Neighborhood> nbs = {moore8(), vonneumann4(), tri6(), unit(2)};
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::vector<int> dims = (trial % 2) ? std::vector<int>{4, 3} : std::vector<int>{3, 5};
        TorusPattern p(dims);
        std::bernoulli_distribution live(0.4);
        for (std::size_t i = 0; i < static_cast<std::size_t>(p.area()); ++i)
            p.set_index(i, live(rng));
        TorusPattern q = tile(p, {2 * dims[0], 2 * dims[1]});
        const Neighborhood& nb = nbs[trial % nbs.size()];
        for (int x = 0; x < dims[0] && ok; ++x)
            for (int y = 0; y < dims[1]; ++y) {
                Coord base = {x, y};
                Coord copy = {x + dims[0], y + dims[1]};
                int want = neighbor_count(p, base, nb);
                if (neighbor_count(q, base, nb) != want || neighbor_count(q, copy, nb) != want) {
                    ok = false;
                    out << "refinement changed a count on trial " << trial << "; ";
                    break;
                }
            }
    }

    if (ok)
        out << "area partition on 100 augmented patterns (" << no_aug_trials
            << " needing no augmentation, reciprocity exact), stability = fixed point on 1000 "
               "patterns ("
            << stills << " stable), counts invariant under torus doubling, seed 20260814";
    return {ok, out.str()};
}

}  // namespace

int main() {
    criterion(1, construction_table);
    criterion(2, bound_formulas);
    criterion(3, narrow_area_table);
    criterion(4, shipped_certificates);
    criterion(5, lp_reproduction);
    criterion(6, search_vs_theory);
    criterion(7, gallery_verification);
    criterion(8, oscillators);
    criterion(9, tiled_brute_force);
    criterion(10, property_suites);
    if (g_failures)
        std::cout << g_failures << " criterion(s) failed" << std::endl;
    else
        std::cout << "all criteria passed" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
