#include "lpcert/structure.hpp"

#include <limits>
#include <string>
#include <utility>

namespace lpcert {

namespace {

constexpr std::size_t knone = std::numeric_limits<std::size_t>::max();

// Validates xbar as a feasible point with a consistent value, then proves its
// optimality with an independent solve. Returns the solver's certificate.
Optimal require_optimal(const LpProblem& prob, const PrimalSolution& xbar, const std::string& ctx) {
    prob.validate();
    if (xbar.x.size() != prob.num_variables()) {
        throw PreconditionError(ctx + ": xbar has wrong length");
    }
    if (!is_nonnegative(xbar.x) || matvec(prob.A, xbar.x) != prob.b) {
        throw PreconditionError(ctx + ": xbar is not feasible");
    }
    if (dot(prob.p, xbar.x) != xbar.value) {
        throw PreconditionError(ctx + ": xbar.value disagrees with p.x");
    }
    SolveOutcome out = solve(prob);
    auto* opt = std::get_if<Optimal>(&out);
    if (opt == nullptr) {
        throw NotOptimalError(ctx + ": the problem has no optimal solution", std::move(out));
    }
    if (opt->primal.value != xbar.value) {
        throw NotOptimalError(ctx + ": xbar is not optimal", std::move(out));
    }
    return std::move(*opt);
}

// Direction problems constrain a vector h that is sign-free on some
// coordinates and nonnegative on the rest. Free coordinates are encoded as
// differences of two standard variables.
struct SplitVars {
    std::vector<std::size_t> pos;  // column holding the nonnegative part of h_j
    std::vector<std::size_t> neg;  // column of the negated part; knone when h_j >= 0
    std::size_t count = 0;

    static SplitVars make(const std::vector<char>& is_free) {
        SplitVars sv;
        sv.pos.resize(is_free.size());
        sv.neg.assign(is_free.size(), knone);
        for (std::size_t j = 0; j < is_free.size(); ++j) {
            sv.pos[j] = sv.count++;
            if (is_free[j]) sv.neg[j] = sv.count++;
        }
        return sv;
    }

    // A coefficient row over h, rendered over the standard columns plus
    // `extra` trailing columns left at zero.
    RVector embed(const RVector& coef, std::size_t extra) const {
        RVector row = zeros(count + extra);
        for (std::size_t j = 0; j < coef.size(); ++j) {
            if (coef[j] == 0) continue;
            row[pos[j]] = coef[j];
            if (neg[j] != knone) row[neg[j]] = -coef[j];
        }
        return row;
    }

    RVector recover(const RVector& xstd) const {
        RVector h(pos.size());
        for (std::size_t j = 0; j < pos.size(); ++j) {
            h[j] = xstd[pos[j]];
            if (neg[j] != knone) h[j] -= xstd[neg[j]];
        }
        return h;
    }
};

// Re-check for a non-uniqueness witness against the tested point.
void require_direction_witness(const LpProblem& prob, const RVector& xbar_x, const RVector& h) {
    if (is_zero_vector(h)) throw InternalError("uniqueness: zero witness");
    if (!is_zero_vector(matvec(prob.A, h))) throw InternalError("uniqueness: witness leaves the kernel");
    if (dot(prob.p, h) < 0) throw InternalError("uniqueness: witness lowers the objective");
    for (std::size_t j = 0; j < h.size(); ++j) {
        if (xbar_x[j] == 0 && h[j] < 0) {
            throw InternalError("uniqueness: witness negative off the support");
        }
    }
}

}  // namespace

ZeroSet zero_set(const RVector& xbar) {
    if (!is_nonnegative(xbar)) throw PreconditionError("zero_set: point must be nonnegative");
    ZeroSet z;
    for (std::size_t j = 0; j < xbar.size(); ++j) {
        if (xbar[j] == 0) z.indices.push_back(j);
    }
    return z;
}

UniquenessVerdict decide_unique(const LpProblem& prob, const PrimalSolution& xbar) {
    require_optimal(prob, xbar, "decide_unique");
    const std::size_t n = prob.num_variables();
    const std::vector<std::size_t> supp = support(xbar.x);

    // Dependent support columns already yield a kernel direction confined to
    // the support; both signed shifts of xbar stay feasible along it.
    if (!columns_independent(prob.A, supp)) {
        auto basis = null_space_basis(prob.A.select_columns(supp));
        if (basis.empty()) throw InternalError("decide_unique: dependent support with empty kernel");
        RVector h = zeros(n);
        for (std::size_t k = 0; k < supp.size(); ++k) h[supp[k]] = basis.front()[k];
        if (dot(prob.p, h) < 0) h = scaled(h, Rational(-1));
        require_direction_witness(prob, xbar.x, h);
        return NotUnique{std::move(h)};
    }

    // Any second optimum differs along a direction h with A h = 0, h >= 0 off
    // the support, and positive mass there. Normalizing that mass to one makes
    // the search a plain solve; the best objective tilt decides the verdict.
    std::vector<char> is_free(n, 0);
    for (std::size_t j : supp) is_free[j] = 1;
    const SplitVars sv = SplitVars::make(is_free);

    LpProblem dir;
    dir.A = RMatrix(prob.num_constraints() + 1, sv.count);
    for (std::size_t i = 0; i < prob.num_constraints(); ++i) {
        RVector row = sv.embed(prob.A.row(i), 0);
        for (std::size_t c = 0; c < sv.count; ++c) dir.A(i, c) = row[c];
    }
    RVector mass = zeros(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_free[j]) mass[j] = 1;
    }
    RVector mass_row = sv.embed(mass, 0);
    for (std::size_t c = 0; c < sv.count; ++c) dir.A(prob.num_constraints(), c) = mass_row[c];
    dir.b = zeros(prob.num_constraints());
    dir.b.push_back(Rational(1));
    dir.p = sv.embed(prob.p, 0);

    SolveOutcome out = solve(dir);
    if (std::get_if<Infeasible>(&out) != nullptr) return Unique{};
    const auto* opt = std::get_if<Optimal>(&out);
    if (opt == nullptr) throw InternalError("decide_unique: direction problem cannot be unbounded");
    if (opt->primal.value < 0) return Unique{};

    RVector h = sv.recover(opt->primal.x);
    require_direction_witness(prob, xbar.x, h);
    return NotUnique{std::move(h)};
}

UniquenessVerdict appa_alternative_test(const LpProblem& prob, const PrimalSolution& xbar) {
    require_optimal(prob, xbar, "appa_alternative_test");
    const std::size_t n = prob.num_variables();
    const std::size_t m = prob.num_constraints();
    const std::vector<std::size_t> supp = support(xbar.x);
    if (!columns_independent(prob.A, supp)) {
        throw NotBasicError(
            "appa_alternative_test: support columns are dependent; decide_unique covers "
            "non-basic points");
    }

    // Maximize the mass q.h on the zero set over directions with A h = 0 and
    // p.h = 0, normalized by q.h + s = 1. The optimum is 0 or 1; positive
    // mass exposes a second optimum.
    std::vector<char> is_free(n, 0);
    for (std::size_t j : supp) is_free[j] = 1;
    const SplitVars sv = SplitVars::make(is_free);

    RVector q = zeros(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (xbar.x[j] == 0) q[j] = 1;
    }

    LpProblem dir;
    dir.A = RMatrix(m + 2, sv.count + 1);
    for (std::size_t i = 0; i < m; ++i) {
        RVector row = sv.embed(prob.A.row(i), 1);
        for (std::size_t c = 0; c < sv.count + 1; ++c) dir.A(i, c) = row[c];
    }
    RVector prow = sv.embed(prob.p, 1);
    for (std::size_t c = 0; c < sv.count + 1; ++c) dir.A(m, c) = prow[c];
    RVector qrow = sv.embed(q, 1);
    qrow[sv.count] = 1;  // slack
    for (std::size_t c = 0; c < sv.count + 1; ++c) dir.A(m + 1, c) = qrow[c];
    dir.b = zeros(m + 1);
    dir.b.push_back(Rational(1));
    dir.p = sv.embed(q, 1);

    SolveOutcome out = solve(dir);
    const auto* opt = std::get_if<Optimal>(&out);
    if (opt == nullptr) {
        throw InternalError("appa_alternative_test: normalized direction problem must be solvable");
    }
    if (opt->primal.value == 0) return Unique{};
    if (opt->primal.value != 1) {
        throw InternalError("appa_alternative_test: normalized optimum outside {0, 1}");
    }
    RVector std_part(opt->primal.x.begin(),
                     opt->primal.x.begin() + static_cast<std::ptrdiff_t>(sv.count));
    RVector h = sv.recover(std_part);
    require_direction_witness(prob, xbar.x, h);
    return NotUnique{std::move(h)};
}

NonsubCertificate nonsub_verify(const LpProblem& prob, const PrimalSolution& xbar,
                                const RVector& xstar) {
    Optimal opt = require_optimal(prob, xbar, "nonsub_verify");
    const RVector& ybar = opt.dual.y;

    if (xstar.size() != prob.num_variables()) {
        throw PreconditionError("nonsub_verify: xstar has wrong length");
    }
    if (!is_nonnegative(xstar)) throw PreconditionError("nonsub_verify: xstar must be nonnegative");
    for (std::size_t j = 0; j < xstar.size(); ++j) {
        if (xstar[j] > 0 && xbar.x[j] == 0) {
            throw PreconditionError("nonsub_verify: xstar is positive at coordinate " +
                                    std::to_string(j + 1) + " outside the support of xbar");
        }
    }

    RVector bstar = matvec(prob.A, xstar);
    const Rational vstar = dot(prob.p, xstar);

    // The shared dual certificate: ybar stays feasible (same A, p), and its
    // slack vanishes on the support of xstar because that sits inside the
    // support of xbar.
    RVector ya = vecmat(ybar, prob.A);
    for (std::size_t j = 0; j < xstar.size(); ++j) {
        if (xstar[j] > 0 && ya[j] != prob.p[j]) {
            throw InternalError("nonsub_verify: dual slack fails to vanish on the support");
        }
    }
    if (dot(ybar, bstar) != vstar) {
        throw InternalError("nonsub_verify: dual value mismatch on the restricted problem");
    }

    // Independent cross-check: the restricted problem must report the same
    // optimal value.
    LpProblem restricted{prob.A, bstar, prob.p};
    SolveOutcome rout = solve(restricted);
    const auto* ropt = std::get_if<Optimal>(&rout);
    if (ropt == nullptr || ropt->primal.value != vstar) {
        throw InternalError("nonsub_verify: restricted problem disagrees with the certificate");
    }

    return NonsubCertificate{std::move(bstar), ybar};
}

PerturbationResult perturbation_holds(const LpProblem& prob, const PrimalSolution& xbar,
                                      const RVector& q, const Rational& delta) {
    if (q.size() != prob.num_variables()) {
        throw PreconditionError("perturbation_holds: q has wrong length");
    }
    if (is_zero_vector(q)) throw PreconditionError("perturbation_holds: q must be nonzero");
    if (delta <= 0) throw PreconditionError("perturbation_holds: delta must be positive");
    require_optimal(prob, xbar, "perturbation_holds");

    LpProblem tilted{prob.A, prob.b, add(prob.p, scaled(q, delta))};
    SolveOutcome out = solve(tilted);
    if (const auto* opt = std::get_if<Optimal>(&out)) {
        return PerturbationResult{opt->primal.value == dot(tilted.p, xbar.x), std::nullopt};
    }
    if (auto* unb = std::get_if<Unbounded>(&out)) {
        return PerturbationResult{false, std::move(unb->ray)};
    }
    throw InternalError("perturbation_holds: tilted problem infeasible despite a feasible point");
}

FaceDecomposition optimal_face_decompose(const LpProblem& prob, const RVector& point) {
    prob.validate();
    if (point.size() != prob.num_variables()) {
        throw PreconditionError("optimal_face_decompose: point has wrong length");
    }

    BoundednessVerdict bounded = is_bounded(prob.A, prob.b);
    if (auto* ray = std::get_if<UnboundedRay>(&bounded)) {
        std::string what =
            "optimal_face_decompose: the feasible set is unbounded along the ray " +
            to_string(ray->ray);
        throw UnboundedFeasibleSetError(what, std::move(ray->ray));
    }

    if (!is_nonnegative(point) || matvec(prob.A, point) != prob.b) {
        throw PreconditionError("optimal_face_decompose: point is not feasible");
    }

    SolveOutcome out = solve(prob);
    const auto* opt = std::get_if<Optimal>(&out);
    if (opt == nullptr) {
        throw InternalError("optimal_face_decompose: bounded nonempty problem must be solvable");
    }
    Rational gap = opt->primal.value - dot(prob.p, point);
    if (gap != 0) {
        std::string what =
            "optimal_face_decompose: point misses the optimal value by " + to_string(gap);
        throw ValueGapError(what, std::move(gap));
    }

    VertexSet face = enumerate_basic_optimal(prob);
    std::vector<RVector> pts;
    pts.reserve(face.vertices.size());
    for (const auto& v : face.vertices) pts.push_back(v.x);

    SeparationResult sep = farkas_separate(point, pts);
    auto* weights = std::get_if<ConvexWeights>(&sep);
    if (weights == nullptr) {
        throw InternalError(
            "optimal_face_decompose: a separator excluded an optimal point from the hull of "
            "the basic optima");
    }
    return FaceDecomposition{std::move(face), std::move(weights->alpha)};
}

IntervalCheck check_interval_relaxation(const RMatrix& A, const IntervalData& bounds,
                                        const RVector& b, const RVector& x) {
    if (bounds.lower.rows() != A.rows() || bounds.lower.cols() != A.cols() ||
        bounds.upper.rows() != A.rows() || bounds.upper.cols() != A.cols()) {
        throw PreconditionError("check_interval_relaxation: bound shapes differ from A");
    }
    if (b.size() != A.rows() || x.size() != A.cols()) {
        throw PreconditionError("check_interval_relaxation: dimension mismatch");
    }
    if (!is_nonnegative(x)) {
        throw PreconditionError("check_interval_relaxation: x must be nonnegative");
    }
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (bounds.lower(i, j) > A(i, j) || A(i, j) > bounds.upper(i, j)) {
                throw PreconditionError("check_interval_relaxation: entry (" +
                                        std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                        ") of A escapes its interval");
            }
        }
    }

    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (dot(A.row(i), x) != b[i]) continue;
        if (dot(bounds.lower.row(i), x) > b[i] || dot(bounds.upper.row(i), x) < b[i]) {
            return IntervalCheck{false, i};
        }
    }
    return IntervalCheck{true, std::nullopt};
}

}  // namespace lpcert
