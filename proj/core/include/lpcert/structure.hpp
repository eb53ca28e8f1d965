#pragma once

#include "lpcert/vertices.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace lpcert {

struct ZeroSet {
    std::vector<std::size_t> indices;  // ascending, 0-based

    friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
};

// Indices where the point vanishes. Demands a nonnegative input.
ZeroSet zero_set(const RVector& xbar);

struct Unique {
    friend bool operator==(const Unique&, const Unique&) = default;
};

// witness h satisfies A h = 0, h >= 0 off the support of the tested point,
// h != 0, p.h >= 0: adding a small multiple of h gives another optimum.
struct NotUnique {
    RVector witness;

    friend bool operator==(const NotUnique&, const NotUnique&) = default;
};

using UniquenessVerdict = std::variant<Unique, NotUnique>;

// Decides whether xbar is the only optimal solution. Demands xbar optimal.
UniquenessVerdict decide_unique(const LpProblem& prob, const PrimalSolution& xbar);

// Thrown by the alternative-form uniqueness test when the tested point's
// support columns are dependent; decide_unique handles that case.
class NotBasicError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Uniqueness via the zero-set direction problem: maximize the mass a feasible
// direction can place on the zero coordinates of xbar. Demands xbar optimal
// and basic. Agrees with decide_unique wherever both apply.
UniquenessVerdict appa_alternative_test(const LpProblem& prob, const PrimalSolution& xbar);

struct NonsubCertificate {
    RVector bstar;  // A xstar
    RVector ybar;   // dual optimum shared by the original and restricted problems

    friend bool operator==(const NonsubCertificate&, const NonsubCertificate&) = default;
};

// Checks that xstar, supported inside an optimal xbar, is itself optimal for
// the problem with right-hand side A xstar, and hands back the shared dual
// certificate. Demands xbar optimal and support(xstar) inside support(xbar).
NonsubCertificate nonsub_verify(const LpProblem& prob, const PrimalSolution& xbar,
                                const RVector& xstar);

struct PerturbationResult {
    bool holds;                         // objective tilt p + delta q keeps xbar optimal
    std::optional<RVector> unbounded_ray;  // set when the tilted problem is unbounded

    friend bool operator==(const PerturbationResult&, const PerturbationResult&) = default;
};

// Whether xbar stays optimal after tilting the objective to p + delta q.
// Demands xbar optimal, q != 0, delta > 0.
PerturbationResult perturbation_holds(const LpProblem& prob, const PrimalSolution& xbar,
                                      const RVector& q, const Rational& delta);

// Thrown when a decomposition needs a bounded feasible set; carries the
// recession ray that disproves boundedness.
class UnboundedFeasibleSetError : public PreconditionError {
public:
    UnboundedFeasibleSetError(const std::string& what, RVector ray)
        : PreconditionError(what), ray(std::move(ray)) {}

    RVector ray;
};

// Thrown when a point claimed optimal misses the optimal value; carries the
// exact gap.
class ValueGapError : public PreconditionError {
public:
    ValueGapError(const std::string& what, Rational gap)
        : PreconditionError(what), gap(std::move(gap)) {}

    Rational gap;
};

struct FaceDecomposition {
    VertexSet vertices;             // the basic optimal solutions
    std::vector<Rational> weights;  // one per vertex; >= 0, sum 1

    friend bool operator==(const FaceDecomposition&, const FaceDecomposition&) = default;
};

// Writes an optimal point as a convex combination of the basic optimal
// solutions. Demands a bounded feasible set and a feasible point attaining
// the optimal value.
FaceDecomposition optimal_face_decompose(const LpProblem& prob, const RVector& point);

struct IntervalData {
    RMatrix lower;  // entrywise lower bounds on A
    RMatrix upper;  // entrywise upper bounds on A

    friend bool operator==(const IntervalData&, const IntervalData&) = default;
};

struct IntervalCheck {
    bool holds;
    std::optional<std::size_t> violating_row;  // 0-based, set when holds is false

    friend bool operator==(const IntervalCheck&, const IntervalCheck&) = default;
};

// For every row of A that x satisfies with equality, checks that the interval
// endpoints bracket the right-hand side: lower.x <= b <= upper.x. Demands
// lower <= A <= upper entrywise and x >= 0.
IntervalCheck check_interval_relaxation(const RMatrix& A, const IntervalData& bounds,
                                        const RVector& b, const RVector& x);

}  // namespace lpcert
