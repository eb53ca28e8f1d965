#include <lpcert/errors.hpp>
#include <lpcert/generate.hpp>
#include <lpcert/lp.hpp>
#include <lpcert/vertices.hpp>

#include <doctest.h>

#include "test_util.hpp"

using namespace lpcert;

namespace {

// Independent restatement of the certificate conditions, so the suite does not
// lean on the library's own verify_outcome.
bool check_outcome_by_hand(const LpProblem& prob, const SolveOutcome& out) {
    if (const auto* opt = std::get_if<Optimal>(&out)) {
        const RVector& x = opt->primal.x;
        const RVector& y = opt->dual.y;
        if (!is_nonnegative(x) || matvec(prob.A, x) != prob.b) return false;
        if (dot(prob.p, x) != opt->primal.value) return false;
        RVector yA = vecmat(y, prob.A);
        for (std::size_t j = 0; j < yA.size(); ++j) {
            if (yA[j] < prob.p[j]) return false;
        }
        return dot(y, prob.b) == opt->primal.value;
    }
    if (const auto* inf = std::get_if<Infeasible>(&out)) {
        RVector wA = vecmat(inf->witness, prob.A);
        for (const auto& e : wA) {
            if (e > 0) return false;
        }
        return dot(inf->witness, prob.b) > 0;
    }
    const auto& unb = std::get<Unbounded>(out);
    if (!is_nonnegative(unb.ray) || is_zero_vector(unb.ray)) return false;
    if (!is_zero_vector(matvec(prob.A, unb.ray))) return false;
    return dot(prob.p, unb.ray) > 0;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("problem validation") {
    LpProblem long_b{RMatrix({{Rational(1)}}), {Rational(1), Rational(2)}, {Rational(1)}};
    CHECK_THROWS_AS(long_b.validate(), PreconditionError);
    LpProblem long_p{RMatrix({{Rational(1)}}), {Rational(1)}, {Rational(1), Rational(2)}};
    CHECK_THROWS_AS(long_p.validate(), PreconditionError);
    LpProblem no_vars{RMatrix(1, 0), {Rational(1)}, {}};
    CHECK_THROWS_AS(no_vars.validate(), PreconditionError);
}

TEST_CASE("solve on worked examples") {
    {
        LpProblem prob{RMatrix({{Rational(1), Rational(0)}}),
                       {Rational(1)},
                       {Rational(1), Rational(0)}};
        auto out = solve(prob);
        auto* opt = std::get_if<Optimal>(&out);
        REQUIRE(opt != nullptr);
        CHECK(opt->primal.x == RVector({Rational(1), Rational(0)}));
        CHECK(opt->primal.value == Rational(1));
    }
    {
        LpProblem prob{RMatrix({{Rational(1)}}), {Rational(0)}, {Rational(1)}};
        auto out = solve(prob);
        auto* opt = std::get_if<Optimal>(&out);
        REQUIRE(opt != nullptr);
        CHECK(opt->primal.x == RVector({Rational(0)}));
        CHECK(opt->primal.value == Rational(0));
    }
    {
        LpProblem prob{RMatrix({{Rational(1), Rational(1)}}),
                       {Rational(1)},
                       {Rational(2), Rational(1)}};
        auto out = solve(prob);
        auto* opt = std::get_if<Optimal>(&out);
        REQUIRE(opt != nullptr);
        CHECK(opt->primal.x == RVector({Rational(1), Rational(0)}));
        CHECK(opt->primal.value == Rational(2));
        CHECK(opt->dual.y == RVector({Rational(2)}));
    }
}

TEST_CASE("infeasible problems emit a Farkas witness") {
    LpProblem prob{RMatrix({{Rational(1), Rational(1)}}),
                   {Rational(-1)},
                   {Rational(0), Rational(0)}};
    auto out = solve(prob);
    REQUIRE(std::holds_alternative<Infeasible>(out));
    CHECK(check_outcome_by_hand(prob, out));
    CHECK(verify_outcome(prob, out));
}

TEST_CASE("unbounded problems emit a certifying ray") {
    LpProblem prob{RMatrix({{Rational(1), Rational(-1)}}),
                   {Rational(0)},
                   {Rational(1), Rational(0)}};
    auto out = solve(prob);
    REQUIRE(std::holds_alternative<Unbounded>(out));
    CHECK(check_outcome_by_hand(prob, out));
    CHECK(verify_outcome(prob, out));
}

TEST_CASE("complementary slackness on worked examples") {
    LpProblem prob{RMatrix({{Rational(1), Rational(1)}}),
                   {Rational(1)},
                   {Rational(2), Rational(1)}};
    CHECK(complementary_slackness_check(prob, {Rational(1), Rational(0)}, {Rational(2)}));
    CHECK(!complementary_slackness_check(prob, {Rational(0), Rational(1)}, {Rational(2)}));

    LpProblem zero{RMatrix({{Rational(1), Rational(1)}}),
                   {Rational(0)},
                   {Rational(2), Rational(1)}};
    CHECK(complementary_slackness_check(zero, {Rational(0), Rational(0)}, {Rational(2)}));
}

TEST_CASE("complementary slackness rejects infeasible arguments") {
    LpProblem prob{RMatrix({{Rational(1), Rational(1)}}),
                   {Rational(1)},
                   {Rational(2), Rational(1)}};
    // x infeasible (wrong right-hand side), then y dual-infeasible.
    CHECK_THROWS_AS(
        complementary_slackness_check(prob, {Rational(1), Rational(1)}, {Rational(2)}),
        PreconditionError);
    CHECK_THROWS_AS(
        complementary_slackness_check(prob, {Rational(1), Rational(0)}, {Rational(0)}),
        PreconditionError);
}

TEST_CASE("farkas_separate on worked examples") {
    {
        auto r = farkas_separate({Rational(1, 2), Rational(1, 2)},
                                 {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
        auto* w = std::get_if<ConvexWeights>(&r);
        REQUIRE(w != nullptr);
        CHECK(w->alpha == std::vector<Rational>({Rational(1, 2), Rational(1, 2)}));
    }
    {
        auto r = farkas_separate({Rational(1), Rational(0)}, {{Rational(1), Rational(0)}});
        auto* w = std::get_if<ConvexWeights>(&r);
        REQUIRE(w != nullptr);
        CHECK(w->alpha == std::vector<Rational>({Rational(1)}));
    }
    {
        RVector target{Rational(1), Rational(1)};
        std::vector<RVector> points{{Rational(1), Rational(0)}};
        auto r = farkas_separate(target, points);
        auto* s = std::get_if<Separator>(&r);
        REQUIRE(s != nullptr);
        Rational at_target = dot(s->q, target) + s->beta;
        CHECK(at_target > 0);
        for (const auto& pt : points) {
            Rational at_point = dot(s->q, pt) + s->beta;
            CHECK(at_point <= 0);
        }
        CHECK(!is_zero_vector(s->q));
    }
    CHECK_THROWS_AS(farkas_separate({Rational(1)}, {}), PreconditionError);
    CHECK_THROWS_AS(farkas_separate({Rational(1)}, {{Rational(1), Rational(2)}}),
                    PreconditionError);
}

TEST_CASE("weak duality against sampled feasible points") {
    std::mt19937_64 gen(21);
    int optimal_seen = 0;
    for (int i = 0; i < 30; ++i) {
        auto prob = generate_random_lp(100 + i, testutil::draw(gen, 1, 3),
                                       testutil::draw(gen, 2, 6));
        auto out = solve(prob);
        auto* opt = std::get_if<Optimal>(&out);
        if (opt == nullptr) continue;
        ++optimal_seen;
        Rational dual_value = dot(opt->dual.y, prob.b);
        auto vs = enumerate_basic(prob.A, prob.b);
        REQUIRE(!vs.vertices.empty());
        // Vertices and their midpoints sample the feasible set.
        for (const auto& v : vs.vertices) {
            CHECK(dot(prob.p, v.x) <= dual_value);
        }
        for (std::size_t a = 0; a + 1 < vs.vertices.size(); ++a) {
            RVector mid = scaled(add(vs.vertices[a].x, vs.vertices[a + 1].x), Rational(1, 2));
            CHECK(dot(prob.p, mid) <= dual_value);
        }
    }
    CHECK(optimal_seen > 0);
}

TEST_CASE("every outcome self-certifies on random instances") {
    std::mt19937_64 gen(22);
    int optimal = 0, infeasible = 0, unbounded = 0;
    for (int i = 0; i < 100; ++i) {
        auto prob = generate_random_lp(300 + i, testutil::draw(gen, 1, 3),
                                       testutil::draw(gen, 2, 6));
        if (i % 2 == 1) {
            // Feasibility is by construction; break it half the time.
            for (auto& e : prob.b) e = e - Rational(7);
        }
        auto out = solve(prob);
        CHECK(check_outcome_by_hand(prob, out));
        CHECK(verify_outcome(prob, out));
        if (std::holds_alternative<Optimal>(out)) ++optimal;
        if (std::holds_alternative<Infeasible>(out)) ++infeasible;
        if (std::holds_alternative<Unbounded>(out)) ++unbounded;
    }
    CHECK(optimal > 0);
    CHECK(infeasible > 0);
    CHECK(unbounded > 0);
}

TEST_CASE("solving is deterministic") {
    std::mt19937_64 gen(23);
    for (int i = 0; i < 20; ++i) {
        auto prob = generate_random_lp(500 + i, testutil::draw(gen, 1, 3),
                                       testutil::draw(gen, 2, 6));
        CHECK(solve(prob) == solve(prob));
    }
}

}  // TEST_SUITE
