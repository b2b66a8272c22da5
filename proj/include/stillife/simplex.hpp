#pragma once

#include <stdexcept>
#include <vector>

#include "stillife/rational.hpp"

namespace stillife {

struct LpInfeasible : std::runtime_error {
    LpInfeasible() : std::runtime_error("linear program is infeasible") {}
};
struct LpUnbounded : std::runtime_error {
    LpUnbounded() : std::runtime_error("linear program is unbounded") {}
};

struct LpSolution {
    Rational value;
    std::vector<Rational> x;
};

// min c.x subject to A x = b, x >= 0, everything exact. Dense two-phase
// tableau with Bland's rule (first positive reduced cost enters; ratio ties
// leave by lowest basis index), so cycling is impossible.
LpSolution solve_equality_lp(const std::vector<std::vector<Rational>>& A,
                             const std::vector<Rational>& b,
                             const std::vector<Rational>& c);

}  // namespace stillife
