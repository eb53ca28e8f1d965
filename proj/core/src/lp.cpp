#include "lpcert/lp.hpp"

#include <string>
#include <utility>

namespace lpcert {

namespace {

bool verify_optimal(const LpProblem& prob, const Optimal& opt) {
    const RVector& x = opt.primal.x;
    const RVector& y = opt.dual.y;
    if (x.size() != prob.num_variables() || y.size() != prob.num_constraints()) return false;
    if (!is_nonnegative(x)) return false;
    if (matvec(prob.A, x) != prob.b) return false;
    if (dot(prob.p, x) != opt.primal.value) return false;
    RVector ya = vecmat(y, prob.A);
    for (std::size_t j = 0; j < ya.size(); ++j) {
        if (ya[j] < prob.p[j]) return false;
    }
    return dot(y, prob.b) == opt.primal.value;
}

bool verify_infeasible(const LpProblem& prob, const Infeasible& inf) {
    if (inf.witness.size() != prob.num_constraints()) return false;
    RVector wa = vecmat(inf.witness, prob.A);
    for (const auto& c : wa) {
        if (c > 0) return false;
    }
    return dot(inf.witness, prob.b) > 0;
}

bool verify_unbounded(const LpProblem& prob, const Unbounded& unb) {
    const RVector& r = unb.ray;
    if (r.size() != prob.num_variables()) return false;
    if (!is_nonnegative(r) || is_zero_vector(r)) return false;
    if (!is_zero_vector(matvec(prob.A, r))) return false;
    return dot(prob.p, r) > 0;
}

}  // namespace

bool verify_outcome(const LpProblem& prob, const SolveOutcome& outcome) {
    prob.validate();
    return std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Optimal>) return verify_optimal(prob, o);
            else if constexpr (std::is_same_v<T, Infeasible>) return verify_infeasible(prob, o);
            else return verify_unbounded(prob, o);
        },
        outcome);
}

bool complementary_slackness_check(const LpProblem& prob, const RVector& x, const RVector& y) {
    prob.validate();
    if (x.size() != prob.num_variables()) {
        throw PreconditionError("complementary_slackness_check: x has wrong length");
    }
    if (y.size() != prob.num_constraints()) {
        throw PreconditionError("complementary_slackness_check: y has wrong length");
    }
    if (!is_nonnegative(x) || matvec(prob.A, x) != prob.b) {
        throw PreconditionError("complementary_slackness_check: primal side infeasible");
    }
    RVector ya = vecmat(y, prob.A);
    for (std::size_t j = 0; j < ya.size(); ++j) {
        if (ya[j] < prob.p[j]) {
            throw PreconditionError(
                "complementary_slackness_check: dual side infeasible at column " +
                std::to_string(j + 1));
        }
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] > 0 && ya[j] != prob.p[j]) return false;
    }
    return true;
}

SeparationResult farkas_separate(const RVector& target, const std::vector<RVector>& points) {
    if (points.empty()) {
        throw PreconditionError("farkas_separate: point list must be nonempty");
    }
    const std::size_t d = target.size();
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (points[k].size() != d) {
            throw PreconditionError("farkas_separate: point " + std::to_string(k + 1) +
                                    " has dimension " + std::to_string(points[k].size()) +
                                    ", expected " + std::to_string(d));
        }
    }

    // Feasibility of {alpha >= 0, sum alpha = 1, sum alpha point_k = target}
    // decides membership; its infeasibility witness is the separator.
    const std::size_t k = points.size();
    LpProblem lp;
    lp.A = RMatrix(d + 1, k);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < d; ++i) lp.A(i, c) = points[c][i];
        lp.A(d, c) = 1;
    }
    lp.b = target;
    lp.b.push_back(Rational(1));
    lp.p = zeros(k);

    SolveOutcome out = solve(lp);
    if (const auto* opt = std::get_if<Optimal>(&out)) {
        ConvexWeights w{opt->primal.x};
        Rational total(0);
        RVector combo = zeros(d);
        for (std::size_t c = 0; c < k; ++c) {
            if (w.alpha[c] < 0) throw InternalError("farkas_separate: negative weight");
            total += w.alpha[c];
            if (w.alpha[c] != 0) combo = add(combo, scaled(points[c], w.alpha[c]));
        }
        if (total != 1 || combo != target) {
            throw InternalError("farkas_separate: weights failed re-check");
        }
        return w;
    }
    const auto* inf = std::get_if<Infeasible>(&out);
    if (inf == nullptr) throw InternalError("farkas_separate: membership system cannot be unbounded");

    RVector q(inf->witness.begin(), inf->witness.begin() + static_cast<std::ptrdiff_t>(d));
    Rational beta = inf->witness[d];
    for (const auto& pt : points) {
        if (dot(q, pt) + beta > 0) throw InternalError("farkas_separate: separator failed re-check");
    }
    if (dot(q, target) + beta <= 0) throw InternalError("farkas_separate: separator failed re-check");
    if (is_zero_vector(q)) throw InternalError("farkas_separate: zero separator");
    return Separator{std::move(q), std::move(beta)};
}

}  // namespace lpcert
