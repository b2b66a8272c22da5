#include "stillife/search.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "stillife/bounds.hpp"
#include "stillife/constructions.hpp"

namespace stillife {

namespace {

// Neighbor index lists with multiplicity (two offsets landing on the same
// torus cell appear twice; an offset landing back on the cell lists the cell
// itself), matching the per-offset counting of the core module.
std::vector<std::vector<int>> torus_neighbor_lists(const std::vector<int>& dims,
                                                   const Neighborhood& nb) {
    TorusPattern probe(dims);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(probe.area()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Coord x = probe.cell_at(i);
        Coord y(x.size());
        out[i].reserve(nb.offsets.size());
        for (const Coord& o : nb.offsets) {
            for (std::size_t d = 0; d < x.size(); ++d) y[d] = x[d] + o[d];
            out[i].push_back(static_cast<int>(probe.index_of(y)));
        }
    }
    return out;
}

std::vector<std::vector<int>> box_neighbor_lists(int w, int h, const Neighborhood& nb) {
    if (nb.dimension != 2) throw std::invalid_argument("box search needs a 2-D neighborhood");
    std::vector<std::vector<int>> out(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            auto& lst = out[static_cast<std::size_t>(y) * w + x];
            for (const Coord& o : nb.offsets) {
                int xx = x + o[0], yy = y + o[1];
                if (0 <= xx && xx < w && 0 <= yy && yy < h)
                    lst.push_back(yy * w + xx);
            }
        }
    }
    return out;
}

// Branch and bound over cells in index order, include branch first.
// Feasibility: every cell keeps at most `cap` live neighbors. Maximizes the
// total weight; admissibility is downward closed, so outside of collection
// mode cells of nonpositive weight are never included.
template <class W>
struct DegreeSearch {
    int n_cells = 0;
    int cap = 0;
    const std::vector<std::vector<int>>* nbr = nullptr;
    std::vector<W> w;
    std::vector<W> suffix;  // suffix sums of the positive weights
    W best{};
    std::vector<int> best_set;
    bool best_updated = false;
    long long nodes = 0;
    long long budget = LLONG_MAX;
    bool exhausted = false;
    bool has_stop = false;  // terminate once best reaches stop_at (proven cap)
    W stop_at{};
    bool collecting = false;  // keep ties, gather every leaf matching best
    std::size_t collect_cap = 0;
    std::vector<std::vector<int>> found;
    bool collection_complete = true;

    std::vector<int> deg;
    std::vector<char> inc;
    std::vector<int> cur;

    void prepare() {
        suffix.assign(n_cells + 1, W{});
        for (int i = n_cells - 1; i >= 0; --i)
            suffix[i] = suffix[i + 1] + (w[i] > W{} ? w[i] : W{});
        deg.assign(n_cells, 0);
        inc.assign(n_cells, 0);
        cur.clear();
    }

    void run() {
        prepare();
        rec(0, W{});
    }

    bool try_include(int i) {
        inc[i] = 1;
        for (int j : (*nbr)[i]) ++deg[j];
        bool ok = deg[i] <= cap;
        if (ok) {
            for (int j : (*nbr)[i]) {
                if (inc[j] && deg[j] > cap) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) undo_include(i);
        return ok;
    }

    void undo_include(int i) {
        for (int j : (*nbr)[i]) --deg[j];
        inc[i] = 0;
    }

    void rec(int i, W cur_w) {
        if (exhausted) return;
        if (has_stop && !(best < stop_at)) return;
        if (++nodes > budget) {
            exhausted = true;
            collection_complete = false;
            return;
        }
        if (i == n_cells) {
            if (best < cur_w) {
                best = cur_w;
                best_set = cur;
                best_updated = true;
            }
            if (collecting && cur_w == best) {
                if (found.size() >= collect_cap) {
                    collection_complete = false;
                    exhausted = true;
                } else {
                    found.push_back(cur);
                }
            }
            return;
        }
        W potential = cur_w + suffix[i];
        if (collecting ? (potential < best) : !(best < potential)) return;
        if ((collecting || w[i] > W{}) && try_include(i)) {
            cur.push_back(i);
            rec(i + 1, cur_w + w[i]);
            cur.pop_back();
            undo_include(i);
        }
        rec(i + 1, cur_w);
    }
};

// Still-life search: live cells keep 2..3 live neighbors, dead cells never
// exactly 3. The upper cap prunes during descent; the other two conditions
// are decided the moment a cell's whole neighborhood is fixed.
struct StillSearch {
    int n_cells = 0;
    const std::vector<std::vector<int>>* nbr = nullptr;
    std::vector<std::vector<int>> closure;  // cells whose neighborhood completes at index i
    long long best = 0;
    std::vector<int> best_set;
    bool best_updated = false;
    long long nodes = 0;
    long long budget = LLONG_MAX;
    bool exhausted = false;
    long long stop_at = LLONG_MAX;
    bool collecting = false;
    std::size_t collect_cap = 0;
    std::vector<std::vector<int>> found;
    bool collection_complete = true;

    std::vector<int> deg;
    std::vector<char> inc;
    std::vector<int> cur;

    void prepare() {
        closure.assign(n_cells, {});
        for (int c = 0; c < n_cells; ++c) {
            int last = c;
            for (int j : (*nbr)[c]) last = std::max(last, j);
            closure[last].push_back(c);
        }
        deg.assign(n_cells, 0);
        inc.assign(n_cells, 0);
        cur.clear();
    }

    void run() {
        prepare();
        rec(0, 0);
    }

    bool closed_ok(int i) const {
        for (int c : closure[i]) {
            if (inc[c]) {
                if (deg[c] < 2 || deg[c] > 3) return false;
            } else if (deg[c] == 3) {
                return false;
            }
        }
        return true;
    }

    void rec(int i, long long cnt) {
        if (exhausted) return;
        if (best >= stop_at) return;
        if (++nodes > budget) {
            exhausted = true;
            collection_complete = false;
            return;
        }
        if (i == n_cells) {
            if (cnt > best) {
                best = cnt;
                best_set = cur;
                best_updated = true;
            }
            if (collecting && cnt == best) {
                if (found.size() >= collect_cap) {
                    collection_complete = false;
                    exhausted = true;
                } else {
                    found.push_back(cur);
                }
            }
            return;
        }
        long long potential = cnt + (n_cells - i);
        if (collecting ? (potential < best) : (potential <= best)) return;
        // include
        inc[i] = 1;
        for (int j : (*nbr)[i]) ++deg[j];
        bool ok = deg[i] <= 3;
        if (ok) {
            for (int j : (*nbr)[i]) {
                if (inc[j] && deg[j] > 3) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && closed_ok(i)) {
            cur.push_back(i);
            rec(i + 1, cnt + 1);
            cur.pop_back();
        }
        for (int j : (*nbr)[i]) --deg[j];
        inc[i] = 0;
        // exclude
        if (closed_ok(i)) rec(i + 1, cnt);
    }
};

TorusPattern pattern_from_indices(const std::vector<int>& dims, const std::vector<int>& idx) {
    TorusPattern p(dims);
    for (int i : idx) p.set_index(static_cast<std::size_t>(i), true);
    return p;
}

long long analytic_cell_cap(const Neighborhood& nb, int n, long long area) {
    Rational bound = bound_suite(nb, n).bound;
    mpz_class cap =
        (bound.get_num() * static_cast<long>(area)) / bound.get_den();  // floor, all parts >= 0
    return cap.get_si();
}

// ---- generic engines for the non-degree constraints ----

struct GenericResult {
    long long best = 0;
    std::vector<int> best_set;
    bool best_updated = false;
    long long nodes = 0;
    bool exhausted = false;
};

// WeightBound search. With nonnegative weights the running sums only grow,
// so a live cell passing the limit prunes immediately; with mixed signs only
// leaves can be judged.
GenericResult weightbound_search(const std::vector<int>& dims, const WeightBound& con,
                                 long long warm, std::vector<int> warm_set,
                                 long long node_budget) {
    TorusPattern probe(dims);
    int n_cells = static_cast<int>(probe.area());
    bool nonneg = true;
    for (const auto& [o, wt] : con.w)
        if (wt < 0) nonneg = false;
    // rev[i]: cells whose sum moves when i turns live, with the step weight.
    std::vector<std::vector<std::pair<int, const Rational*>>> rev(n_cells);
    for (int i = 0; i < n_cells; ++i) {
        Coord x = probe.cell_at(i);
        Coord y(x.size());
        for (const auto& [o, wt] : con.w) {
            for (std::size_t d = 0; d < y.size(); ++d) y[d] = x[d] - o[d];
            rev[i].emplace_back(static_cast<int>(probe.index_of(y)), &wt);
        }
    }
    GenericResult res;
    res.best = warm;
    res.best_set = std::move(warm_set);
    std::vector<Rational> wsum(n_cells, Rational(0));
    std::vector<char> inc(n_cells, 0);
    std::vector<int> cur;

    std::function<void(int, long long)> rec = [&](int i, long long cnt) {
        if (res.exhausted) return;
        if (++res.nodes > node_budget) {
            res.exhausted = true;
            return;
        }
        if (i == n_cells) {
            if (cnt <= res.best) return;
            if (!nonneg) {
                for (int c = 0; c < n_cells; ++c)
                    if (inc[c] && wsum[c] > con.c) return;
            }
            res.best = cnt;
            res.best_set = cur;
            res.best_updated = true;
            return;
        }
        if (cnt + (n_cells - i) <= res.best) return;
        // include branch
        bool ok = !(nonneg && wsum[i] > con.c);
        if (ok) {
            inc[i] = 1;
            for (auto& [j, wt] : rev[i]) {
                wsum[j] += *wt;
                if (nonneg && inc[j] && wsum[j] > con.c) ok = false;
            }
            if (ok) {
                cur.push_back(i);
                rec(i + 1, cnt + 1);
                cur.pop_back();
            }
            for (auto& [j, wt] : rev[i]) wsum[j] -= *wt;
            inc[i] = 0;
        }
        rec(i + 1, cnt);
    };
    rec(0, 0);
    return res;
}

GenericResult allowed_search(const std::vector<int>& dims, const AllowedLocalSets& con,
                             long long warm, std::vector<int> warm_set, long long node_budget) {
    TorusPattern probe(dims);
    int n_cells = static_cast<int>(probe.area());
    // Offsets of the radius-r ball, their torus targets per cell, and the
    // index after which each cell's whole ball is decided.
    std::vector<Coord> offs;
    {
        Coord o(dims.size(), -con.r);
        while (true) {
            if (std::any_of(o.begin(), o.end(), [](int v) { return v != 0; })) offs.push_back(o);
            std::size_t d = 0;
            while (d < o.size() && o[d] == con.r) o[d++] = -con.r;
            if (d == o.size()) break;
            ++o[d];
        }
    }
    std::vector<std::vector<int>> targets(n_cells);
    std::vector<std::vector<int>> closure(n_cells);
    for (int i = 0; i < n_cells; ++i) {
        Coord x = probe.cell_at(i);
        Coord y(x.size());
        int last = i;
        for (const Coord& o : offs) {
            for (std::size_t d = 0; d < y.size(); ++d) y[d] = x[d] + o[d];
            int t = static_cast<int>(probe.index_of(y));
            targets[i].push_back(t);
            last = std::max(last, t);
        }
        closure[last].push_back(i);
    }
    GenericResult res;
    res.best = warm;
    res.best_set = std::move(warm_set);
    std::vector<char> inc(n_cells, 0);
    std::vector<int> cur;

    auto closed_ok = [&](int i) {
        for (int c : closure[i]) {
            if (!inc[c]) continue;
            std::set<Coord> live;
            for (std::size_t t = 0; t < offs.size(); ++t)
                if (inc[targets[c][t]]) live.insert(offs[t]);
            if (!con.family.count(live)) return false;
        }
        return true;
    };
    std::function<void(int, long long)> rec = [&](int i, long long cnt) {
        if (res.exhausted) return;
        if (++res.nodes > node_budget) {
            res.exhausted = true;
            return;
        }
        if (i == n_cells) {
            if (cnt > res.best) {
                res.best = cnt;
                res.best_set = cur;
                res.best_updated = true;
            }
            return;
        }
        if (cnt + (n_cells - i) <= res.best) return;
        inc[i] = 1;
        if (closed_ok(i)) {
            cur.push_back(i);
            rec(i + 1, cnt + 1);
            cur.pop_back();
        }
        inc[i] = 0;
        if (closed_ok(i)) rec(i + 1, cnt);
    };
    rec(0, 0);
    return res;
}

}  // namespace

SearchResult max_density(const std::vector<int>& dims, const Constraint& con,
                         long long node_budget) {
    if (constraint_dimension(con) != static_cast<int>(dims.size()))
        throw std::invalid_argument("constraint dimension does not match dims");
    TorusPattern empty(dims);
    long long area = empty.area();

    TorusPattern warm = empty;
    if (const auto* md = std::get_if<MaxDegree>(&con)) {
        if (auto w = best_known(dims, md->nb, md->n)) warm = *w;
    } else if (std::holds_alternative<AllowedLocalSets>(con)) {
        // no catalogue for these; empty start
    }
    if (!satisfies(warm, con).ok) warm = empty;

    SearchResult out{ratio(0), warm, 0, true};

    if (const auto* md = std::get_if<MaxDegree>(&con)) {
        long long cap = analytic_cell_cap(md->nb, md->n, area);
        if (warm.count() > cap) throw std::logic_error("warm start beats the analytic bound");
        if (warm.count() < cap) {
            auto nbr = torus_neighbor_lists(dims, md->nb);
            DegreeSearch<long long> eng;
            eng.n_cells = static_cast<int>(area);
            eng.cap = md->n;
            eng.nbr = &nbr;
            eng.w.assign(eng.n_cells, 1);
            eng.best = warm.count();
            eng.budget = node_budget;
            eng.has_stop = true;
            eng.stop_at = cap;
            eng.run();
            out.nodes_explored = eng.nodes;
            out.proven_optimal = !eng.exhausted;
            if (eng.best_updated) out.witness = pattern_from_indices(dims, eng.best_set);
        }
    } else if (const auto* wb = std::get_if<WeightBound>(&con)) {
        GenericResult r = weightbound_search(dims, *wb, warm.count(), {}, node_budget);
        out.nodes_explored = r.nodes;
        out.proven_optimal = !r.exhausted;
        if (r.best_updated) out.witness = pattern_from_indices(dims, r.best_set);
    } else {
        const auto& als = std::get<AllowedLocalSets>(con);
        GenericResult r = allowed_search(dims, als, warm.count(), {}, node_budget);
        out.nodes_explored = r.nodes;
        out.proven_optimal = !r.exhausted;
        if (r.best_updated) out.witness = pattern_from_indices(dims, r.best_set);
    }

    if (!satisfies(out.witness, con).ok)
        throw std::logic_error("search produced a witness violating its constraint");
    out.best_value = density(out.witness);
    return out;
}

SearchResult max_still_life_density(const std::vector<int>& dims, long long node_budget) {
    if (dims.size() != 2) throw std::invalid_argument("still-life search needs a 2-D torus");
    TorusPattern warm(dims);
    if (auto w = best_known_still(dims)) warm = *w;

    TorusPattern empty(dims);
    long long area = empty.area();
    // Still lifes have degree <= 3, so the degree-3 analytic cap applies.
    long long cap = analytic_cell_cap(moore8(), 3, area);

    SearchResult out{ratio(0), warm, 0, true};
    if (warm.count() < cap) {
        auto nbr = torus_neighbor_lists(dims, moore8());
        StillSearch eng;
        eng.n_cells = static_cast<int>(area);
        eng.nbr = &nbr;
        eng.best = warm.count();
        eng.budget = node_budget;
        eng.stop_at = cap;
        eng.run();
        out.nodes_explored = eng.nodes;
        out.proven_optimal = !eng.exhausted;
        if (eng.best_updated) out.witness = pattern_from_indices(dims, eng.best_set);
    }
    if (!is_still_life(out.witness) && out.witness.count() > 0)
        throw std::logic_error("still-life search produced a non-still witness");
    out.best_value = density(out.witness);
    return out;
}

SubsetSearchResult max_weighted_subset(int box_w, int box_h, const std::vector<Rational>& weights,
                                       const Neighborhood& nb, int n, long long node_budget,
                                       int collect_cap) {
    if (box_w < 1 || box_h < 1) throw std::invalid_argument("box dims must be positive");
    if (weights.size() != static_cast<std::size_t>(box_w) * box_h)
        throw std::invalid_argument("weight count does not match the box");
    if (n < 0) throw std::invalid_argument("degree cap must be nonnegative");
    auto nbr = box_neighbor_lists(box_w, box_h, nb);
    int n_cells = box_w * box_h;

    // Integer fast path: scale by the common denominator when every scaled
    // weight stays far from overflow even summed across the box.
    mpz_class lcm = 1;
    for (const auto& w : weights) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den_mpz_t());
    bool int_path = mpz_fits_slong_p(lcm.get_mpz_t()) != 0;
    std::vector<long long> scaled(n_cells, 0);
    if (int_path) {
        mpz_class limit = mpz_class(1) << 50;
        for (int i = 0; i < n_cells && int_path; ++i) {
            mpz_class s = weights[i].get_num() * (lcm / weights[i].get_den());
            if (abs(s) * n_cells > limit)
                int_path = false;
            else
                scaled[i] = s.get_si();
        }
    }

    SubsetSearchResult out;
    out.optima_complete = true;
    Rational scale(lcm, 1);

    auto finish = [&](auto& eng, long long phase1_nodes) {
        out.nodes_explored = phase1_nodes;
        if (collect_cap > 0) {
            auto collect = eng;  // copy configuration, rerun in collection mode
            collect.collecting = true;
            collect.collect_cap = static_cast<std::size_t>(collect_cap);
            collect.best = eng.best;
            collect.best_updated = false;
            collect.nodes = 0;
            collect.exhausted = false;
            collect.collection_complete = true;
            collect.budget = std::min(node_budget, 4 * phase1_nodes + 1'000'000);
            collect.run();
            out.optima = std::move(collect.found);
            out.optima_complete = collect.collection_complete;
            out.nodes_explored += collect.nodes;
        }
    };

    if (int_path) {
        DegreeSearch<long long> eng;
        eng.n_cells = n_cells;
        eng.cap = n;
        eng.nbr = &nbr;
        eng.w = scaled;
        eng.budget = node_budget;
        eng.run();
        out.best_value = ratio(eng.best) / scale;
        out.best_value.canonicalize();
        out.witness = eng.best_set;
        out.proven_optimal = !eng.exhausted;
        finish(eng, eng.nodes);
    } else {
        DegreeSearch<Rational> eng;
        eng.n_cells = n_cells;
        eng.cap = n;
        eng.nbr = &nbr;
        eng.w = weights;
        eng.budget = node_budget;
        eng.run();
        out.best_value = eng.best;
        out.best_value.canonicalize();
        out.witness = eng.best_set;
        out.proven_optimal = !eng.exhausted;
        finish(eng, eng.nodes);
    }
    return out;
}

namespace {

std::vector<std::uint8_t> bits_of(const TorusPattern& p) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(p.area()));
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = p.contains_index(i) ? 1 : 0;
    return bits;
}

// All coordinate maps y_i = +-x_perm(i) with dims[perm(i)] == dims[i]:
// exactly the point symmetries that act on this torus.
std::vector<std::pair<std::vector<int>, std::vector<int>>> torus_symmetries(
    const std::vector<int>& dims) {
    std::size_t k = dims.size();
    std::vector<int> axes(k);
    std::iota(axes.begin(), axes.end(), 0);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> syms;
    std::sort(axes.begin(), axes.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < k; ++i)
            if (dims[axes[i]] != dims[i]) ok = false;
        if (!ok) continue;
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> signs(k);
            for (std::size_t i = 0; i < k; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
            syms.emplace_back(axes, signs);
        }
    } while (std::next_permutation(axes.begin(), axes.end()));
    return syms;
}

std::vector<std::uint8_t> canonical_form(const TorusPattern& p,
                                         const std::vector<std::pair<std::vector<int>,
                                                                     std::vector<int>>>& syms) {
    const auto& dims = p.dims();
    std::size_t k = dims.size();
    std::vector<std::uint8_t> best;
    TorusPattern probe(dims);
    for (const auto& [perm, signs] : syms) {
        TorusPattern q(dims);
        for (const Coord& c : p.cells()) {
            Coord y(k);
            for (std::size_t i = 0; i < k; ++i) y[i] = signs[i] * c[perm[i]];
            q.set(y, true);
        }
        for (std::size_t t = 0; t < static_cast<std::size_t>(p.area()); ++t) {
            TorusPattern r = translate(q, probe.cell_at(t));
            auto bits = bits_of(r);
            if (best.empty() || bits < best) best = std::move(bits);
        }
    }
    return best;
}

}  // namespace

std::vector<TorusPattern> enumerate_optima(const std::vector<int>& dims, const Constraint& con,
                                           long long node_budget, std::size_t max_witnesses) {
    SearchResult opt = max_density(dims, con, node_budget);
    if (!opt.proven_optimal) throw BudgetExhausted("optimum not proven within the node budget");
    long long target = opt.witness.count();
    long long area = opt.witness.area();

    std::vector<std::vector<int>> raw;
    if (const auto* md = std::get_if<MaxDegree>(&con)) {
        auto nbr = torus_neighbor_lists(dims, md->nb);
        DegreeSearch<long long> eng;
        eng.n_cells = static_cast<int>(area);
        eng.cap = md->n;
        eng.nbr = &nbr;
        eng.w.assign(eng.n_cells, 1);
        eng.best = target;
        eng.budget = node_budget;
        eng.collecting = true;
        eng.collect_cap = max_witnesses;
        eng.run();
        if (!eng.collection_complete)
            throw BudgetExhausted("witness enumeration exceeded the budget");
        raw = std::move(eng.found);
    } else {
        // Generic: walk all subsets of the target size, keep the feasible ones.
        std::vector<int> cur;
        std::vector<char> inc(static_cast<std::size_t>(area), 0);
        long long nodes = 0;
        int n_cells = static_cast<int>(area);
        std::function<void(int, long long)> rec = [&](int i, long long cnt) {
            if (++nodes > node_budget) throw BudgetExhausted("witness enumeration budget");
            if (cnt > target || cnt + (n_cells - i) < target) return;
            if (i == n_cells) {
                TorusPattern p = pattern_from_indices(dims, cur);
                if (satisfies(p, con).ok) {
                    if (raw.size() >= max_witnesses)
                        throw BudgetExhausted("too many optimal witnesses");
                    raw.push_back(cur);
                }
                return;
            }
            cur.push_back(i);
            rec(i + 1, cnt + 1);
            cur.pop_back();
            rec(i + 1, cnt);
        };
        rec(0, 0);
    }

    auto syms = torus_symmetries(dims);
    if (syms.size() * static_cast<std::size_t>(area) * area > 2'000'000'000ull)
        throw BudgetExhausted("symmetry reduction too large for these dims");
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<TorusPattern> reps;
    for (const auto& idx : raw) {
        TorusPattern p = pattern_from_indices(dims, idx);
        auto canon = canonical_form(p, syms);
        if (seen.insert(canon).second) {
            TorusPattern rep(dims);
            for (std::size_t i = 0; i < canon.size(); ++i)
                if (canon[i]) rep.set_index(i, true);
            reps.push_back(std::move(rep));
        }
    }
    return reps;
}

}  // namespace stillife
