#include "lpcert/lp.hpp"

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace lpcert {

namespace {

constexpr std::size_t knone = std::numeric_limits<std::size_t>::max();

// Row-major simplex tableau; each row carries its right-hand side as the
// trailing entry. rhs stays >= 0 throughout.
struct Tableau {
    std::size_t m = 0;
    std::size_t ncols = 0;
    std::vector<RVector> t;            // m rows of ncols + 1 entries
    std::vector<std::size_t> basis;    // basis[i] = column basic in row i
    std::vector<char> in_basis;        // ncols flags

    Tableau(std::size_t rows, std::size_t cols)
        : m(rows), ncols(cols), t(rows, zeros(cols + 1)), basis(rows, knone),
          in_basis(cols, 0) {}

    Rational& rhs(std::size_t i) { return t[i][ncols]; }
    const Rational& rhs(std::size_t i) const { return t[i][ncols]; }

    void set_basis(std::size_t i, std::size_t j) {
        basis[i] = j;
        in_basis[j] = 1;
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rational piv = t[pr][pc];
        for (std::size_t j = 0; j <= ncols; ++j) {
            if (t[pr][j] != 0) t[pr][j] /= piv;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            const Rational f = t[i][pc];
            for (std::size_t j = 0; j <= ncols; ++j) {
                if (t[pr][j] != 0) t[i][j] -= f * t[pr][j];
            }
        }
        in_basis[basis[pr]] = 0;
        set_basis(pr, pc);
    }
};

enum class StepResult { kOptimal, kUnbounded };

// Bland's rule: entering column is the lowest-index improving one among
// columns [0, entering_limit); leaving row breaks ratio ties by lowest basic
// index. Guarantees termination.
StepResult run_simplex(Tableau& tab, const RVector& cost, std::size_t entering_limit,
                       std::size_t& unbounded_col) {
    for (;;) {
        std::size_t enter = knone;
        for (std::size_t j = 0; j < entering_limit; ++j) {
            if (tab.in_basis[j]) continue;
            Rational r = cost[j];
            for (std::size_t i = 0; i < tab.m; ++i) {
                const Rational& cb = cost[tab.basis[i]];
                if (cb != 0 && tab.t[i][j] != 0) r -= cb * tab.t[i][j];
            }
            if (r > 0) {
                enter = j;
                break;
            }
        }
        if (enter == knone) return StepResult::kOptimal;

        std::size_t leave = knone;
        Rational best;
        for (std::size_t i = 0; i < tab.m; ++i) {
            const Rational& a = tab.t[i][enter];
            if (a <= 0) continue;
            Rational ratio = tab.rhs(i) / a;
            if (leave == knone || ratio < best ||
                (ratio == best && tab.basis[i] < tab.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == knone) {
            unbounded_col = enter;
            return StepResult::kUnbounded;
        }
        tab.pivot(leave, enter);
    }
}

}  // namespace

void LpProblem::validate() const {
    if (A.cols() < 1) throw PreconditionError("LpProblem: at least one variable required");
    if (b.size() != A.rows()) {
        throw PreconditionError("LpProblem: b has length " + std::to_string(b.size()) +
                                ", expected " + std::to_string(A.rows()));
    }
    if (p.size() != A.cols()) {
        throw PreconditionError("LpProblem: p has length " + std::to_string(p.size()) +
                                ", expected " + std::to_string(A.cols()));
    }
}

SolveOutcome solve(const LpProblem& prob) {
    prob.validate();
    const std::size_t m = prob.num_constraints();
    const std::size_t n = prob.num_variables();

    // Flip rows with negative rhs so phase 1 starts feasible.
    std::vector<int> sgn(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (prob.b[i] < 0) sgn[i] = -1;
    }

    // Phase 1: maximize minus the sum of one artificial per row. Artificial
    // columns never re-enter once they leave, which keeps each one attached
    // to its own row while basic.
    Tableau tab(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (prob.A(i, j) != 0) tab.t[i][j] = sgn[i] * prob.A(i, j);
        }
        tab.t[i][n + i] = 1;
        tab.rhs(i) = sgn[i] * prob.b[i];
        tab.set_basis(i, n + i);
    }
    RVector cost1 = zeros(n + m);
    for (std::size_t i = 0; i < m; ++i) cost1[n + i] = -1;

    std::size_t ucol = knone;
    run_simplex(tab, cost1, n, ucol);  // objective <= 0, never unbounded

    Rational v1(0);
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) v1 -= tab.rhs(i);
    }

    if (v1 < 0) {
        // Dual of phase 1 yields the witness: solve B^T w = c_B over the
        // basis columns of [S A | I], then undo the row flips.
        RMatrix bt(m, m);
        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t c = tab.basis[k];
            if (c < n) {
                for (std::size_t i = 0; i < m; ++i) bt(k, i) = sgn[i] * prob.A(i, c);
            } else {
                bt(k, c - n) = 1;
            }
        }
        RVector cb(m, Rational(0));
        for (std::size_t k = 0; k < m; ++k) {
            if (tab.basis[k] >= n) cb[k] = -1;
        }
        auto w = solve_exact(bt, cb);
        if (!w) throw InternalError("solve: singular phase-1 basis");
        RVector witness(m);
        for (std::size_t i = 0; i < m; ++i) witness[i] = -(sgn[i] * (*w)[i]);
        SolveOutcome out = Infeasible{std::move(witness)};
        if (!verify_outcome(prob, out)) throw InternalError("solve: infeasibility witness failed re-check");
        return out;
    }

    // Feasible. Drive leftover artificials out of the basis; rows that offer
    // no original pivot are redundant and get dropped.
    std::vector<char> dropped(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        std::size_t pc = knone;
        for (std::size_t j = 0; j < n; ++j) {
            if (!tab.in_basis[j] && tab.t[i][j] != 0) {
                pc = j;
                break;
            }
        }
        if (pc == knone) {
            dropped[i] = 1;
        } else {
            tab.pivot(i, pc);  // rhs is 0 here, so feasibility is untouched
        }
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m; ++i) {
        if (!dropped[i]) kept.push_back(i);
    }

    // Phase 2 runs on the kept rows with the artificial columns sliced away.
    Tableau t2(kept.size(), n);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j) t2.t[k][j] = tab.t[kept[k]][j];
        t2.rhs(k) = tab.rhs(kept[k]);
        t2.set_basis(k, tab.basis[kept[k]]);
    }

    StepResult res = run_simplex(t2, prob.p, n, ucol);

    if (res == StepResult::kUnbounded) {
        RVector ray = zeros(n);
        ray[ucol] = 1;
        for (std::size_t k = 0; k < t2.m; ++k) {
            if (t2.t[k][ucol] != 0) ray[t2.basis[k]] = -t2.t[k][ucol];
        }
        SolveOutcome out = Unbounded{std::move(ray)};
        if (!verify_outcome(prob, out)) throw InternalError("solve: unbounded ray failed re-check");
        return out;
    }

    RVector x = zeros(n);
    for (std::size_t k = 0; k < t2.m; ++k) x[t2.basis[k]] = t2.rhs(k);

    // Dual: solve B^T y' = p_B over the kept flipped rows, then undo flips;
    // dropped rows carry zero multipliers.
    const std::size_t kk = kept.size();
    RMatrix bt(kk, kk);
    for (std::size_t a = 0; a < kk; ++a) {
        const std::size_t c = t2.basis[a];
        for (std::size_t r = 0; r < kk; ++r) bt(a, r) = sgn[kept[r]] * prob.A(kept[r], c);
    }
    RVector pb(kk);
    for (std::size_t a = 0; a < kk; ++a) pb[a] = prob.p[t2.basis[a]];
    auto yprime = solve_exact(bt, pb);
    if (!yprime) throw InternalError("solve: singular phase-2 basis");
    RVector y = zeros(m);
    for (std::size_t r = 0; r < kk; ++r) y[kept[r]] = sgn[kept[r]] * (*yprime)[r];

    Rational value = dot(prob.p, x);
    SolveOutcome out = Optimal{PrimalSolution{std::move(x), std::move(value)}, DualSolution{std::move(y)}};
    if (!verify_outcome(prob, out)) throw InternalError("solve: optimality certificate failed re-check");
    return out;
}

}  // namespace lpcert
