#include "lpcert/vertices.hpp"

#include <set>
#include <string>
#include <utility>

namespace lpcert {

namespace {

// Depth-first walk over independent column subsets in lexicographic order.
// Every basic solution's support is an independent set, so testing each
// subset's unique solve covers all of them; dependent subsets cannot regain
// independence by growing, which justifies the prune.
void collect_basic(const RMatrix& A, const RVector& b, std::vector<std::size_t>& subset,
                   std::size_t next, std::set<RVector>& found) {
    if (auto z = solve_exact(A.select_columns(subset), b)) {
        bool nonneg = true;
        for (const auto& c : *z) {
            if (c < 0) {
                nonneg = false;
                break;
            }
        }
        if (nonneg) {
            RVector x = zeros(A.cols());
            for (std::size_t k = 0; k < subset.size(); ++k) x[subset[k]] = (*z)[k];
            found.insert(std::move(x));
        }
    }
    for (std::size_t j = next; j < A.cols(); ++j) {
        subset.push_back(j);
        if (columns_independent(A, subset)) collect_basic(A, b, subset, j + 1, found);
        subset.pop_back();
    }
}

}  // namespace

VertexSet enumerate_basic(const RMatrix& A, const RVector& b) {
    if (A.cols() > kMaxEnumerationColumns) {
        throw CapacityError("enumerate_basic: " + std::to_string(A.cols()) +
                            " columns exceed the limit of " +
                            std::to_string(kMaxEnumerationColumns));
    }
    if (b.size() != A.rows()) throw PreconditionError("enumerate_basic: dimension mismatch");

    std::set<RVector> found;
    std::vector<std::size_t> subset;
    collect_basic(A, b, subset, 0, found);

    VertexSet vs;
    for (const auto& x : found) {
        vs.vertices.push_back(BasicSolution{x, support(x)});
    }
    return vs;
}

VertexSet enumerate_basic_optimal(const LpProblem& prob) {
    SolveOutcome out = solve(prob);
    const auto* opt = std::get_if<Optimal>(&out);
    if (opt == nullptr) {
        throw NotOptimalError("enumerate_basic_optimal: problem has no optimal solution",
                              std::move(out));
    }
    VertexSet all = enumerate_basic(prob.A, prob.b);
    VertexSet best;
    for (auto& v : all.vertices) {
        if (dot(prob.p, v.x) == opt->primal.value) best.vertices.push_back(std::move(v));
    }
    if (best.vertices.empty()) {
        throw InternalError("enumerate_basic_optimal: optimal value attained by no vertex");
    }
    return best;
}

BoundednessVerdict is_bounded(const RMatrix& A, const RVector& b) {
    if (b.size() != A.rows()) throw PreconditionError("is_bounded: dimension mismatch");
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();

    {
        LpProblem feas{A, b, zeros(n)};
        SolveOutcome out = solve(feas);
        if (const auto* inf = std::get_if<Infeasible>(&out)) {
            throw InfeasibleSystemError("is_bounded: the system is infeasible", inf->witness);
        }
    }

    // Normalized recession cone: maximize the coordinate sum of A r = 0,
    // r >= 0, subject to sum r + s = 1. Positive optimum exposes a ray.
    LpProblem cone;
    cone.A = RMatrix(m + 1, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) cone.A(i, j) = A(i, j);
    }
    for (std::size_t j = 0; j <= n; ++j) cone.A(m, j) = 1;
    cone.b = zeros(m);
    cone.b.push_back(Rational(1));
    cone.p = ones(n);
    cone.p.push_back(Rational(0));

    SolveOutcome out = solve(cone);
    const auto* opt = std::get_if<Optimal>(&out);
    if (opt == nullptr) throw InternalError("is_bounded: recession problem must be solvable");
    if (opt->primal.value == 0) return Bounded{};

    RVector ray(opt->primal.x.begin(), opt->primal.x.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero_vector(ray) || !is_nonnegative(ray) || !is_zero_vector(matvec(A, ray))) {
        throw InternalError("is_bounded: recession ray failed re-check");
    }
    return UnboundedRay{std::move(ray)};
}

bool is_extreme(const RMatrix& A, const RVector& b, const RVector& x) {
    if (x.size() != A.cols() || b.size() != A.rows()) {
        throw PreconditionError("is_extreme: dimension mismatch");
    }
    if (!is_nonnegative(x) || matvec(A, x) != b) {
        throw PreconditionError("is_extreme: point is not feasible");
    }
    return columns_independent(A, support(x));
}

}  // namespace lpcert
