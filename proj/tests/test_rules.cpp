#include <random>

#include "doctest.h"
#include "stillife/constructions.hpp"
#include "stillife/core.hpp"
#include "stillife/rules.hpp"

using namespace stillife;

namespace {

TorusPattern random_pattern(std::mt19937& rng, std::vector<int> dims, double fill = 0.5) {
    TorusPattern p(std::move(dims));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.area()); ++i)
        p.set_index(i, u(rng) < fill);
    return p;
}

}  // namespace

TEST_CASE("constraint construction guards") {
    CHECK_THROWS_AS(MaxDegree(moore8(), -1), std::invalid_argument);
    CHECK_NOTHROW(MaxDegree(moore8(), 12));  // vacuous but legal
    CHECK_THROWS_AS(WeightBound({{{0, 0}, ratio(1)}}, ratio(1), 2), std::invalid_argument);
    CHECK_NOTHROW(WeightBound({{{1, 0}, ratio(-1)}, {{-1, 0}, ratio(2)}}, ratio(1), 2));
    CHECK_THROWS_AS(AllowedLocalSets(2, 1, {{{{0, 0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(AllowedLocalSets(2, 1, {{{{2, 0}}}}), std::invalid_argument);  // outside r
    CHECK_NOTHROW(AllowedLocalSets(2, 1, {{}, {{{1, 0}}}}));
}

TEST_CASE("satisfies checks live cells only") {
    TorusPattern stripes = TorusPattern::from_rows({"#.#.", "#.#.", "#.#.", "#.#."});
    CHECK(satisfies(stripes, Constraint(MaxDegree(moore8(), 2))).ok);
    auto r = satisfies(stripes, Constraint(MaxDegree(moore8(), 1)));
    CHECK(!r.ok);
    CHECK(r.violator.has_value());
    // dead cells see 6 live neighbors here, but only live cells are judged
    CHECK(satisfies(stripes, Constraint(MaxDegree(moore8(), 8))).ok);

    // weight bound with all-ones weights reproduces the degree cap
    std::map<Coord, Rational> ones;
    for (const Coord& o : moore8().offsets) ones[o] = ratio(1);
    std::mt19937 rng(814001);
    for (int t = 0; t < 200; ++t) {
        TorusPattern p = random_pattern(rng, {5, 4});
        for (int n = 0; n <= 8; ++n) {
            bool deg = satisfies(p, Constraint(MaxDegree(moore8(), n))).ok;
            bool wb = satisfies(p, Constraint(WeightBound(ones, ratio(n), 2))).ok;
            CHECK(deg == wb);
        }
    }
}

TEST_CASE("allowed local sets can encode a degree cap") {
    std::set<std::set<Coord>> small;
    std::vector<Coord> offs = moore8().offsets;
    for (unsigned m = 0; m < 256; ++m) {
        if (__builtin_popcount(m) > 2) continue;
        std::set<Coord> s;
        for (int i = 0; i < 8; ++i)
            if (m >> i & 1) s.insert(offs[i]);
        small.insert(s);
    }
    Constraint als(AllowedLocalSets(2, 1, small));
    Constraint deg(MaxDegree(moore8(), 2));
    std::mt19937 rng(814002);
    for (int t = 0; t < 200; ++t) {
        TorusPattern p = random_pattern(rng, {4, 4});
        CHECK(satisfies(p, als).ok == satisfies(p, deg).ok);
    }
}

TEST_CASE("life step on a small torus") {
    // blinker arms {(-1,0),(0,0),(1,0)} on a 5x5 torus rotate to a vertical triple
    TorusPattern p({5, 5}, {{-1, 0}, {0, 0}, {1, 0}});
    TorusPattern expect({5, 5}, {{0, -1}, {0, 0}, {0, 1}});
    CHECK(life_step(p) == expect);
    CHECK(life_step(expect) == p);
    CHECK_THROWS_AS(life_step(TorusPattern({3})), std::invalid_argument);
}

TEST_CASE("life step commutes with torus symmetries") {
    std::mt19937 rng(814003);
    for (int t = 0; t < 100; ++t) {
        TorusPattern p = random_pattern(rng, {6, 6});
        CHECK(life_step(translate(p, {2, 5})) == translate(life_step(p), {2, 5}));
        CHECK(life_step(flip_axis(p, 0)) == flip_axis(life_step(p), 0));
        CHECK(life_step(transpose(p)) == transpose(life_step(p)));
        CHECK(life_step(rotate90(p)) == rotate90(life_step(p)));
    }
}

TEST_CASE("still life iff fixed point") {
    std::mt19937 rng(814004);
    for (int t = 0; t < 1000; ++t) {
        TorusPattern p = random_pattern(rng, {6, 6}, 0.35);
        CHECK(is_still_life(p) == (life_step(p) == p));
    }
    // a 2x2 block is the classic still life
    TorusPattern block({5, 5}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    auto rep = still_life_report(block);
    CHECK(rep.all());
    // lone cell starves
    TorusPattern lone({5, 5}, {{2, 2}});
    auto rep2 = still_life_report(lone);
    CHECK(!rep2.cond2);
    CHECK(rep2.violators2 == std::vector<Coord>{{2, 2}});
    CHECK(rep2.cond3);
}

TEST_CASE("oscillator periods and phase averages") {
    TorusPattern blinker = generate("blinker");
    CHECK(oscillator_period(blinker, 10) == 2);
    CHECK(phase_average_density(blinker) == ratio(3, 25));

    TorusPattern venetian = generate("venetian_blinds");
    CHECK(oscillator_period(venetian, 10) == 2);
    CHECK(phase_average_density(venetian) == ratio(1, 2));

    TorusPattern blinds6 = generate("blinds6");
    CHECK(oscillator_period(blinds6, 10) == 6);
    // phases: 1/4 1/4 3/4 1/4 1/4 3/4, mean 5/12
    TorusPattern q = blinds6;
    int heavy = 0;
    for (int i = 0; i < 6; ++i) {
        if (density(q) == ratio(3, 4)) ++heavy;
        q = life_step(q);
    }
    CHECK(heavy == 2);
    CHECK(phase_average_density(blinds6) == ratio(5, 12));

    TorusPattern wire = generate("lightspeed_wire7");
    CHECK(oscillator_period(wire, 10) == 7);
    CHECK(phase_average_density(wire) == ratio(26, 63));

    // still life has period 1
    TorusPattern cw = *gallery_item("chicken_wire").torus;
    CHECK(oscillator_period(cw, 10) == 1);

    // a lone cell dies and never returns
    TorusPattern lone({5, 5}, {{2, 2}});
    CHECK(!oscillator_period(lone, 50));
    CHECK_THROWS_AS(phase_average_density(lone, 50), std::invalid_argument);
}

TEST_CASE("finite grid and interior verification") {
    FiniteGrid g = FiniteGrid::from_rows({"....", ".##.", ".##.", "...."});
    CHECK(g.width() == 4);
    CHECK(g.height() == 4);
    CHECK(g.count() == 4);
    CHECK(g.contains(1, 1));
    CHECK(!g.contains(0, 0));
    CHECK(!g.contains(-1, 2));  // outside is dead, not an error
    CHECK(g.window_neighbor_count(1, 1) == 3);
    CHECK(g.window_neighbor_count(0, 0) == 1);
    CHECK_THROWS_AS(g.set(4, 0, true), std::out_of_range);
    CHECK(interior_still_life_check(g).all());

    // the same block pushed into a corner: its cells leave the interior,
    // so nothing is judged and the check passes vacuously
    FiniteGrid h = FiniteGrid::from_rows({"##..", "##..", "....", "...."});
    CHECK(interior_still_life_check(h).all());

    // interior dead cell with exactly 3 live neighbors fails
    FiniteGrid b = FiniteGrid::from_rows({".....", ".###.", ".....", "....."});
    auto rep = interior_still_life_check(b);
    CHECK(!rep.all());
    CHECK(!rep.cond1);
    CHECK_THROWS_AS(interior_still_life_check(FiniteGrid(2, 5)), std::invalid_argument);
}
