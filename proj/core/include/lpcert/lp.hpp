#pragma once

#include "lpcert/errors.hpp"
#include "lpcert/linalg.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace lpcert {

// Standard form: maximize p.x subject to A x = b, x >= 0.
struct LpProblem {
    RMatrix A;
    RVector b;
    RVector p;

    std::size_t num_constraints() const noexcept { return A.rows(); }
    std::size_t num_variables() const noexcept { return A.cols(); }

    // Shape consistency and at least one variable.
    void validate() const;

    friend bool operator==(const LpProblem&, const LpProblem&) = default;
};

struct PrimalSolution {
    RVector x;
    Rational value;

    friend bool operator==(const PrimalSolution&, const PrimalSolution&) = default;
};

struct DualSolution {
    RVector y;

    friend bool operator==(const DualSolution&, const DualSolution&) = default;
};

struct Optimal {
    PrimalSolution primal;
    DualSolution dual;

    friend bool operator==(const Optimal&, const Optimal&) = default;
};

// witness w satisfies w^T A <= 0 componentwise and w.b > 0.
struct Infeasible {
    RVector witness;

    friend bool operator==(const Infeasible&, const Infeasible&) = default;
};

// ray r satisfies A r = 0, r >= 0, r != 0, p.r > 0.
struct Unbounded {
    RVector ray;

    friend bool operator==(const Unbounded&, const Unbounded&) = default;
};

using SolveOutcome = std::variant<Optimal, Infeasible, Unbounded>;

// Exact two-phase simplex under Bland's rule. Every outcome carries an exact
// certificate and is re-verified before being returned; identical inputs give
// identical outcomes.
SolveOutcome solve(const LpProblem& prob);

// Exact re-check of an outcome's certificate against the problem data.
bool verify_outcome(const LpProblem& prob, const SolveOutcome& outcome);

// True iff x_j > 0 implies (y^T A)_j = p_j for every j. Demands x primal
// feasible and y dual feasible first, reporting which side fails.
bool complementary_slackness_check(const LpProblem& prob, const RVector& x, const RVector& y);

struct ConvexWeights {
    std::vector<Rational> alpha;  // alpha >= 0, sum 1, combination reproduces the target

    friend bool operator==(const ConvexWeights&, const ConvexWeights&) = default;
};

// q.point + beta <= 0 for every point while q.target + beta > 0; q != 0.
struct Separator {
    RVector q;
    Rational beta;

    friend bool operator==(const Separator&, const Separator&) = default;
};

using SeparationResult = std::variant<ConvexWeights, Separator>;

// Writes target as a convex combination of the given points, or else returns
// a strictly separating affine functional. Both verdicts are re-checked
// exactly before being returned. The point list must be nonempty and of
// uniform dimension.
SeparationResult farkas_separate(const RVector& target, const std::vector<RVector>& points);

}  // namespace lpcert
