#pragma once

#include "lpcert/lp.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace lpcert {

// Basic feasible point: support columns are linearly independent.
struct BasicSolution {
    RVector x;
    std::vector<std::size_t> support;  // ascending, 0-based

    friend bool operator==(const BasicSolution&, const BasicSolution&) = default;
};

// Deduplicated, sorted lexicographically by x.
struct VertexSet {
    std::vector<BasicSolution> vertices;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

inline constexpr std::size_t kMaxEnumerationColumns = 30;

// All basic feasible solutions of {A x = b, x >= 0}; empty when the system is
// infeasible. Refuses more than kMaxEnumerationColumns columns.
VertexSet enumerate_basic(const RMatrix& A, const RVector& b);

// Thrown when an operation needs an optimal point but the problem has none;
// carries what solve() found instead.
class NotOptimalError : public PreconditionError {
public:
    NotOptimalError(const std::string& what, SolveOutcome outcome)
        : PreconditionError(what), outcome(std::move(outcome)) {}

    SolveOutcome outcome;
};

// The basic optimal solutions, i.e. the vertices of the optimal face.
// Throws NotOptimalError when the problem is infeasible or unbounded.
VertexSet enumerate_basic_optimal(const LpProblem& prob);

struct Bounded {
    friend bool operator==(const Bounded&, const Bounded&) = default;
};

struct UnboundedRay {
    RVector ray;  // A ray = 0, ray >= 0, ray != 0

    friend bool operator==(const UnboundedRay&, const UnboundedRay&) = default;
};

using BoundednessVerdict = std::variant<Bounded, UnboundedRay>;

// Thrown when boundedness is asked of an infeasible system.
class InfeasibleSystemError : public PreconditionError {
public:
    InfeasibleSystemError(const std::string& what, RVector witness)
        : PreconditionError(what), witness(std::move(witness)) {}

    RVector witness;
};

// Decides whether {A x = b, x >= 0} is bounded; a negative verdict carries a
// recession ray as its certificate.
BoundednessVerdict is_bounded(const RMatrix& A, const RVector& b);

// True iff x is a vertex of {A x = b, x >= 0}. Demands x feasible.
bool is_extreme(const RMatrix& A, const RVector& b, const RVector& x);

}  // namespace lpcert
