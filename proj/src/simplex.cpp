#include "stillife/simplex.hpp"

namespace stillife {

namespace {

class Tableau {
public:
    Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b)
        : m_(A.size()), nv_(A[0].size()), ncols_(nv_ + m_) {
        T_.assign(m_, std::vector<Rational>(ncols_, 0));
        b_ = b;
        basis_.resize(m_);
        in_basis_.assign(ncols_, false);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < nv_; ++j) T_[i][j] = A[i][j];
            T_[i][nv_ + i] = 1;  // artificial
            if (b_[i] < 0) {
                for (auto& v : T_[i]) v = -v;
                b_[i] = -b_[i];
            }
            basis_[i] = nv_ + i;
            in_basis_[nv_ + i] = true;
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        Rational pv = T_[pr][pc];
        for (auto& v : T_[pr]) v /= pv;
        b_[pr] /= pv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == pr || T_[i][pc] == 0) continue;
            Rational f = T_[i][pc];
            for (std::size_t j = 0; j < ncols_; ++j) T_[i][j] -= f * T_[pr][j];
            b_[i] -= f * b_[pr];
        }
        in_basis_[basis_[pr]] = false;
        in_basis_[pc] = true;
        basis_[pr] = pc;
    }

    // Bland: enter at the first non-basic column (among the first `allowed`)
    // with positive reduced cost; leave at the minimum ratio, ties broken by
    // lowest basis index. Anticycling is what makes exact termination safe.
    void run(const std::vector<Rational>& costs, std::size_t allowed) {
        while (true) {
            std::vector<Rational> y(m_);
            for (std::size_t i = 0; i < m_; ++i) y[i] = costs[basis_[i]];
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (in_basis_[j]) continue;
                Rational red = -costs[j];
                for (std::size_t i = 0; i < m_; ++i)
                    if (T_[i][j] != 0) red += y[i] * T_[i][j];
                if (red > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols_) return;
            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (T_[i][enter] > 0) {
                    Rational r = b_[i] / T_[i][enter];
                    if (leave == m_ || r < best_ratio ||
                        (r == best_ratio && basis_[i] < basis_[leave]))
                    {
                        best_ratio = r;
                        leave = i;
                    }
                }
            }
            if (leave == m_) throw LpUnbounded();
            pivot(leave, enter);
        }
    }

    std::size_t rows() const { return m_; }
    std::size_t vars() const { return nv_; }
    std::size_t cols() const { return ncols_; }
    std::size_t basis(std::size_t i) const { return basis_[i]; }
    const Rational& rhs(std::size_t i) const { return b_[i]; }
    const Rational& at(std::size_t i, std::size_t j) const { return T_[i][j]; }

private:
    std::size_t m_, nv_, ncols_;
    std::vector<std::vector<Rational>> T_;
    std::vector<Rational> b_;
    std::vector<std::size_t> basis_;
    std::vector<char> in_basis_;
};

}  // namespace

LpSolution solve_equality_lp(const std::vector<std::vector<Rational>>& A,
                             const std::vector<Rational>& b,
                             const std::vector<Rational>& c) {
    if (A.empty() || A.size() != b.size() || c.size() != A[0].size())
        throw std::invalid_argument("lp shape mismatch");
    for (const auto& row : A)
        if (row.size() != c.size()) throw std::invalid_argument("ragged lp rows");

    Tableau t(A, b);
    std::size_t m = t.rows(), nv = t.vars();

    // Phase 1: minimize the artificial sum.
    std::vector<Rational> phase1(t.cols(), 0);
    for (std::size_t j = nv; j < t.cols(); ++j) phase1[j] = 1;
    t.run(phase1, t.cols());
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis(i) >= nv && t.rhs(i) != 0) throw LpInfeasible();
    // Drive leftover zero-level artificials out where an original column can
    // replace them; rows with no such column are redundant and stay put.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis(i) < nv) continue;
        for (std::size_t j = 0; j < nv; ++j) {
            if (t.at(i, j) != 0) {
                t.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2: the real objective, artificials barred from entering.
    std::vector<Rational> phase2(t.cols(), 0);
    for (std::size_t j = 0; j < nv; ++j) phase2[j] = c[j];
    t.run(phase2, nv);

    LpSolution sol;
    sol.x.assign(nv, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis(i) < nv) sol.x[t.basis(i)] = t.rhs(i);
    sol.value = 0;
    for (std::size_t j = 0; j < nv; ++j) sol.value += c[j] * sol.x[j];
    sol.value.canonicalize();
    for (auto& v : sol.x) v.canonicalize();
    return sol;
}

}  // namespace stillife
