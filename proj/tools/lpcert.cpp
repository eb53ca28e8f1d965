// Command-line front door: parse problem files, dispatch to the library, emit
// JSON certificates on stdout and a one-line summary on stderr.
//
// Exit codes: 0 for positive verdicts, 2 for in-band negative verdicts
// (not unique, infeasible, unbounded, a failed check), 1 for errors. Errors
// are reported as a structured JSON document on stderr.

#include <lpcert/birkhoff.hpp>
#include <lpcert/generate.hpp>
#include <lpcert/json_io.hpp>
#include <lpcert/lp.hpp>
#include <lpcert/structure.hpp>
#include <lpcert/vertices.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>

namespace {

using namespace lpcert;

// Every command writes exactly one JSON document.
void emit(const Json& doc, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        write_json_file(output_path, doc);
    }
}

void summarize(const std::string& line) { std::cerr << line << "\n"; }

int report_error(const std::string& type, const std::string& message, Json extra = Json::object()) {
    Json doc{{"kind", "error"}, {"type", type}, {"message", message}};
    for (auto& [key, value] : extra.items()) doc[key] = std::move(value);
    std::cerr << doc.dump(2) << "\n";
    return 1;
}

// Vector files hold either a bare JSON array or an object with an "x" field.
RVector vector_file(const std::string& path) {
    Json j = load_json_file(path);
    if (j.is_array()) return vector_from_json(j);
    if (j.is_object() && j.contains("x")) return vector_from_json(j.at("x"));
    throw ParseError("vector file '" + path + "' must hold a JSON array or an object with \"x\"");
}

PrimalSolution primal_file(const LpProblem& prob, const std::string& path) {
    RVector x = vector_file(path);
    if (x.size() != prob.num_variables()) {
        throw ParseError("vector file '" + path + "' has " + std::to_string(x.size()) +
                         " entries; the problem has " + std::to_string(prob.num_variables()) +
                         " variables");
    }
    return PrimalSolution{x, dot(prob.p, x)};
}

struct CommonOpts {
    std::string input;
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool input_required = true) {
    auto* in = cmd->add_option("--input", opts.input, "Input JSON file");
    if (input_required) in->required();
    cmd->add_option("--output", opts.output, "Write the JSON document here instead of stdout");
}

int run_solve(const CommonOpts& opts) {
    LpProblem prob = lp_problem_from_json(load_json_file(opts.input));
    SolveOutcome out = solve(prob);
    emit(to_json(out), opts.output);
    if (const auto* opt = std::get_if<Optimal>(&out)) {
        summarize("optimal: value " + to_string(opt->primal.value));
        return 0;
    }
    summarize(std::holds_alternative<Infeasible>(out) ? "infeasible" : "unbounded");
    return 2;
}

int run_vertices(const CommonOpts& opts) {
    Json j = load_json_file(opts.input);
    // Enumeration needs only the constraints, so "p" is optional here.
    RMatrix A = matrix_from_json(j.contains("A") ? j.at("A")
                                                 : throw ParseError("vertices: missing \"A\""));
    if (!j.contains("b")) throw ParseError("vertices: missing \"b\"");
    RVector b = vector_from_json(j.at("b"));
    VertexSet vs = enumerate_basic(A, b);
    emit(to_json(vs), opts.output);
    summarize(std::to_string(vs.vertices.size()) + " basic feasible solutions");
    return 0;
}

int run_unique(const CommonOpts& opts, const std::string& xbar_path, bool alternative) {
    LpProblem prob = lp_problem_from_json(load_json_file(opts.input));
    PrimalSolution xbar = primal_file(prob, xbar_path);
    UniquenessVerdict verdict =
        alternative ? appa_alternative_test(prob, xbar) : decide_unique(prob, xbar);
    emit(to_json(verdict), opts.output);
    if (std::holds_alternative<Unique>(verdict)) {
        summarize("unique optimal solution");
        return 0;
    }
    summarize("not unique: a second optimum lies along the witness direction");
    return 2;
}

int run_nonsub(const CommonOpts& opts, const std::string& xbar_path, const std::string& xstar_path) {
    LpProblem prob = lp_problem_from_json(load_json_file(opts.input));
    PrimalSolution xbar = primal_file(prob, xbar_path);
    RVector xstar = vector_file(xstar_path);
    NonsubCertificate cert = nonsub_verify(prob, xbar, xstar);
    emit(to_json(cert), opts.output);
    summarize("verified: the restricted problem shares the dual certificate");
    return 0;
}

int run_perturb(const CommonOpts& opts, const std::string& xbar_path, const std::string& q_path,
                const std::string& delta_text) {
    LpProblem prob = lp_problem_from_json(load_json_file(opts.input));
    PrimalSolution xbar = primal_file(prob, xbar_path);
    RVector q = vector_file(q_path);
    Rational delta = parse_rational(delta_text);
    PerturbationResult res = perturbation_holds(prob, xbar, q, delta);
    emit(to_json(res), opts.output);
    summarize(res.holds ? "still optimal after the tilt" : "optimality lost after the tilt");
    return res.holds ? 0 : 2;
}

int run_face(const CommonOpts& opts, const std::string& point_path) {
    LpProblem prob = lp_problem_from_json(load_json_file(opts.input));
    RVector point = vector_file(point_path);
    FaceDecomposition face = optimal_face_decompose(prob, point);
    emit(to_json(face), opts.output);
    summarize("convex combination of " + std::to_string(face.vertices.vertices.size()) +
              " basic optimal solutions");
    return 0;
}

int run_ds_perturb(const CommonOpts& opts, const std::string& delta_text) {
    DoublyStochastic ds = ds_from_json(load_json_file(opts.input));
    FractionalCycle cycle = find_fractional_cycle(ds);
    Rational e0 = epsilon0(ds, cycle);
    Rational eps = delta_text.empty() ? Rational(e0 / 2) : parse_rational(delta_text);
    auto [q1, q2] = perturb_pair(ds, cycle, eps);
    Json doc{{"cycle", to_json(cycle)},
             {"epsilon0", to_json(e0)},
             {"eps", to_json(eps)},
             {"q1", to_json(q1)},
             {"q2", to_json(q2)}};
    emit(doc, opts.output);
    summarize("midpoint of two doubly stochastic matrices, step " + to_string(eps));
    return 0;
}

int run_bvn(const CommonOpts& opts) {
    DoublyStochastic ds = ds_from_json(load_json_file(opts.input));
    BvnDecomposition dec = bvn_decompose(ds);
    emit(to_json(dec), opts.output);
    summarize("convex combination of " + std::to_string(dec.terms.size()) +
              " permutation matrices");
    return 0;
}

int run_verify_ds_vertices(const CommonOpts& opts, std::uint64_t n) {
    bool holds = verify_vertex_set(static_cast<std::size_t>(n));
    Json doc{{"n", n}, {"holds", holds}};
    emit(doc, opts.output);
    summarize(holds ? "vertices are exactly the permutation matrices"
                    : "vertex set mismatch");
    return holds ? 0 : 2;
}

int run_interval_check(const CommonOpts& opts) {
    Json j = load_json_file(opts.input);
    for (const char* field : {"A", "lower", "upper", "b", "x"}) {
        if (!j.contains(field)) {
            throw ParseError(std::string("interval-check: missing \"") + field + "\"");
        }
    }
    RMatrix A = matrix_from_json(j.at("A"));
    IntervalData bounds{matrix_from_json(j.at("lower")), matrix_from_json(j.at("upper"))};
    RVector b = vector_from_json(j.at("b"));
    RVector x = vector_from_json(j.at("x"));
    IntervalCheck check = check_interval_relaxation(A, bounds, b, x);
    emit(to_json(check), opts.output);
    summarize(check.holds ? "every active row brackets its right-hand side"
                          : "bracketing fails at row " +
                                std::to_string(*check.violating_row + 1));
    return check.holds ? 0 : 2;
}

int run_generate_lp(const CommonOpts& opts, std::uint64_t seed, std::uint64_t m, std::uint64_t n) {
    LpProblem prob = generate_random_lp(seed, static_cast<std::size_t>(m),
                                        static_cast<std::size_t>(n));
    emit(to_json(prob), opts.output);
    summarize("feasible problem, " + std::to_string(m) + " constraints, " + std::to_string(n) +
              " variables");
    return 0;
}

int run_generate_ds(const CommonOpts& opts, std::uint64_t seed, std::uint64_t n) {
    DoublyStochastic ds = generate_random_ds(seed, static_cast<std::size_t>(n));
    emit(to_json(ds), opts.output);
    summarize("doubly stochastic matrix, n = " + std::to_string(n));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational linear programming certificates"};
    app.require_subcommand(1);

    int exit_code = 0;

    CommonOpts solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "Solve max p.x s.t. Ax = b, x >= 0 exactly");
    add_common(solve_cmd, solve_opts);
    solve_cmd->callback([&] { exit_code = run_solve(solve_opts); });

    CommonOpts vert_opts;
    auto* vert_cmd = app.add_subcommand("vertices", "Enumerate basic feasible solutions");
    add_common(vert_cmd, vert_opts);
    vert_cmd->callback([&] { exit_code = run_vertices(vert_opts); });

    CommonOpts unique_opts;
    std::string unique_xbar;
    auto* unique_cmd = app.add_subcommand("unique", "Decide whether an optimum is unique");
    add_common(unique_cmd, unique_opts);
    unique_cmd->add_option("--xbar", unique_xbar, "Optimal point JSON file")->required();
    unique_cmd->callback([&] { exit_code = run_unique(unique_opts, unique_xbar, false); });

    CommonOpts appa_opts;
    std::string appa_xbar;
    auto* appa_cmd =
        app.add_subcommand("appa", "Uniqueness via the zero-set direction problem (basic points)");
    add_common(appa_cmd, appa_opts);
    appa_cmd->add_option("--xbar", appa_xbar, "Optimal point JSON file")->required();
    appa_cmd->callback([&] { exit_code = run_unique(appa_opts, appa_xbar, true); });

    CommonOpts nonsub_opts;
    std::string nonsub_xbar, nonsub_xstar;
    auto* nonsub_cmd = app.add_subcommand(
        "nonsub", "Verify a sub-support point solves its own right-hand side");
    add_common(nonsub_cmd, nonsub_opts);
    nonsub_cmd->add_option("--xbar", nonsub_xbar, "Optimal point JSON file")->required();
    nonsub_cmd->add_option("--xstar", nonsub_xstar, "Sub-support point JSON file")->required();
    nonsub_cmd->callback(
        [&] { exit_code = run_nonsub(nonsub_opts, nonsub_xbar, nonsub_xstar); });

    CommonOpts perturb_opts;
    std::string perturb_xbar, perturb_q, perturb_delta;
    auto* perturb_cmd =
        app.add_subcommand("perturb", "Check optimality under the tilted objective p + delta q");
    add_common(perturb_cmd, perturb_opts);
    perturb_cmd->add_option("--xbar", perturb_xbar, "Optimal point JSON file")->required();
    perturb_cmd->add_option("--q", perturb_q, "Direction JSON file")->required();
    perturb_cmd->add_option("--delta", perturb_delta, "Positive rational step")->required();
    perturb_cmd->callback(
        [&] { exit_code = run_perturb(perturb_opts, perturb_xbar, perturb_q, perturb_delta); });

    CommonOpts face_opts;
    std::string face_point;
    auto* face_cmd = app.add_subcommand(
        "face", "Write an optimal point as a convex combination of basic optima");
    add_common(face_cmd, face_opts);
    face_cmd->add_option("--point", face_point, "Optimal point JSON file")->required();
    face_cmd->callback([&] { exit_code = run_face(face_opts, face_point); });

    CommonOpts dsp_opts;
    std::string dsp_delta;
    auto* dsp_cmd = app.add_subcommand(
        "ds-perturb", "Split a fractional doubly stochastic matrix into a midpoint pair");
    add_common(dsp_cmd, dsp_opts);
    dsp_cmd->add_option("--delta", dsp_delta,
                        "Step size in (0, epsilon0); defaults to epsilon0/2");
    dsp_cmd->callback([&] { exit_code = run_ds_perturb(dsp_opts, dsp_delta); });

    CommonOpts bvn_opts;
    auto* bvn_cmd = app.add_subcommand(
        "bvn", "Decompose a doubly stochastic matrix into permutation matrices");
    add_common(bvn_cmd, bvn_opts);
    bvn_cmd->callback([&] { exit_code = run_bvn(bvn_opts); });

    CommonOpts vds_opts;
    std::uint64_t vds_n = 0;
    auto* vds_cmd = app.add_subcommand(
        "verify-ds-vertices",
        "Check the doubly stochastic polytope's vertices are the permutation matrices");
    add_common(vds_cmd, vds_opts, /*input_required=*/false);
    vds_cmd->add_option("--n", vds_n, "Matrix size")->required();
    vds_cmd->callback([&] { exit_code = run_verify_ds_vertices(vds_opts, vds_n); });

    CommonOpts ic_opts;
    auto* ic_cmd = app.add_subcommand(
        "interval-check", "Check interval bracketing on the rows a point satisfies exactly");
    add_common(ic_cmd, ic_opts);
    ic_cmd->callback([&] { exit_code = run_interval_check(ic_opts); });

    auto* gen_cmd = app.add_subcommand("generate", "Emit deterministic pseudo-random instances");
    gen_cmd->require_subcommand(1);

    CommonOpts glp_opts;
    std::uint64_t glp_seed = 0, glp_m = 0, glp_n = 0;
    auto* glp_cmd = gen_cmd->add_subcommand("random-lp", "Feasible-by-construction problem");
    add_common(glp_cmd, glp_opts, /*input_required=*/false);
    glp_cmd->add_option("--seed", glp_seed, "Seed")->required();
    glp_cmd->add_option("--m", glp_m, "Constraint count")->required();
    glp_cmd->add_option("--n", glp_n, "Variable count")->required();
    glp_cmd->callback([&] { exit_code = run_generate_lp(glp_opts, glp_seed, glp_m, glp_n); });

    CommonOpts gds_opts;
    std::uint64_t gds_seed = 0, gds_n = 0;
    auto* gds_cmd =
        gen_cmd->add_subcommand("random-ds", "Convex combination of random permutations");
    add_common(gds_cmd, gds_opts, /*input_required=*/false);
    gds_cmd->add_option("--seed", gds_seed, "Seed")->required();
    gds_cmd->add_option("--n", gds_n, "Matrix size")->required();
    gds_cmd->callback([&] { exit_code = run_generate_ds(gds_opts, gds_seed, gds_n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const NotOptimalError& e) {
        return report_error("precondition", e.what(), Json{{"outcome", to_json(e.outcome)}});
    } catch (const InfeasibleSystemError& e) {
        return report_error("precondition", e.what(), Json{{"witness", to_json(e.witness)}});
    } catch (const UnboundedFeasibleSetError& e) {
        return report_error("precondition", e.what(), Json{{"ray", to_json(e.ray)}});
    } catch (const ValueGapError& e) {
        return report_error("precondition", e.what(), Json{{"gap", to_json(e.gap)}});
    } catch (const ParseError& e) {
        return report_error("parse", e.what());
    } catch (const CapacityError& e) {
        return report_error("capacity", e.what());
    } catch (const PreconditionError& e) {
        return report_error("precondition", e.what());
    } catch (const InternalError& e) {
        return report_error("internal", e.what());
    } catch (const Error& e) {
        return report_error("error", e.what());
    } catch (const std::exception& e) {
        return report_error("error", e.what());
    }
    return exit_code;
}
