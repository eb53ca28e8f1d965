// End-to-end checks for the command-line tool: exit codes, JSON documents on
// stdout, structured errors on stderr, determinism of the generators.
//
// argv[1] is the path to the built executable. Each invocation runs through
// the shell with stdout/stderr captured to files in a scratch directory.

#include <lpcert/json_io.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

// Variadic so brace initializers with commas survive the preprocessor.
#define CHECK(...)                                                               \
    do {                                                                         \
        if (!(__VA_ARGS__)) {                                                    \
            ++failures;                                                          \
            std::cerr << "FAILED at " << __FILE__ << ":" << __LINE__ << ": "     \
                      << #__VA_ARGS__ << "\n";                                   \
        }                                                                        \
    } while (0)

std::string g_cli;
std::string g_dir;

void write_file(const std::string& name, const std::string& text) {
    std::ofstream out(g_dir + "/" + name);
    out << text;
    if (!out) {
        std::cerr << "cannot write " << name << "\n";
        std::exit(2);
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

// Runs the tool with the scratch directory as cwd so input files resolve by name.
RunResult run(const std::string& args) {
    const std::string out_path = g_dir + "/stdout.txt";
    const std::string err_path = g_dir + "/stderr.txt";
    const std::string command = "cd '" + g_dir + "' && '" + g_cli + "' " + args + " > '" +
                                out_path + "' 2> '" + err_path + "'";
    int status = std::system(command.c_str());
    RunResult res;
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    return res;
}

using namespace lpcert;

// Non-throwing parse: a command that emitted garbage fails its checks instead
// of aborting the whole suite (a null document fails every comparison).
Json parse(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        ++failures;
        std::cerr << "FAILED: expected a JSON document, got: " << text.substr(0, 120) << "\n";
        return Json();
    }
    return j;
}

void test_solve() {
    write_file("p_opt.json", R"({"A": [[1, 1]], "b": [1], "p": [2, 1]})");
    RunResult res = run("solve --input p_opt.json");
    CHECK(res.code == 0);
    SolveOutcome out = solve_outcome_from_json(parse(res.out));
    const auto* opt = std::get_if<Optimal>(&out);
    CHECK(opt != nullptr);
    if (opt != nullptr) {
        CHECK(opt->primal.x == RVector{Rational(1), Rational(0)});
        CHECK(opt->primal.value == Rational(2));
        CHECK(opt->dual.y == RVector{Rational(2)});
    }
    CHECK(res.err.find("optimal") != std::string::npos);

    // x1 + x2 = -1 has no nonnegative solution: in-band negative, exit 2.
    write_file("p_inf.json", R"({"A": [[1, 1]], "b": [-1], "p": [1, 1]})");
    res = run("solve --input p_inf.json");
    CHECK(res.code == 2);
    CHECK(std::holds_alternative<Infeasible>(solve_outcome_from_json(parse(res.out))));

    write_file("p_unb.json", R"({"A": [[1, -1]], "b": [0], "p": [1, 1]})");
    res = run("solve --input p_unb.json");
    CHECK(res.code == 2);
    CHECK(std::holds_alternative<Unbounded>(solve_outcome_from_json(parse(res.out))));

    // --output moves the document into a file; stdout stays empty.
    res = run("solve --input p_opt.json --output solved.json");
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    CHECK(solve_outcome_from_json(load_json_file(g_dir + "/solved.json")) == out);
}

void test_vertices() {
    write_file("tri.json", R"({"A": [[1, 1, 1]], "b": [1]})");  // "p" not needed
    RunResult res = run("vertices --input tri.json");
    CHECK(res.code == 0);
    VertexSet vs = vertex_set_from_json(parse(res.out));
    CHECK(vs.vertices.size() == 3);

    write_file("empty.json", R"({"A": [[1, 1]], "b": [-1], "p": [0, 0]})");
    res = run("vertices --input empty.json");
    CHECK(res.code == 0);  // an empty vertex set is still a successful enumeration
    CHECK(vertex_set_from_json(parse(res.out)).vertices.empty());
}

void test_unique() {
    // One constraint x1 = 1 with objective (1, 0): every (1, t) is optimal.
    write_file("ray.json", R"({"A": [[1, 0]], "b": [1], "p": [1, 0]})");
    write_file("xbar10.json", R"([1, 0])");
    RunResult res = run("unique --input ray.json --xbar xbar10.json");
    CHECK(res.code == 2);
    UniquenessVerdict verdict = uniqueness_from_json(parse(res.out));
    const auto* nu = std::get_if<NotUnique>(&verdict);
    CHECK(nu != nullptr);
    if (nu != nullptr) CHECK(nu->witness == RVector{Rational(0), Rational(1)});

    write_file("strict.json", R"({"A": [[1, 1]], "b": [1], "p": [2, 1]})");
    res = run("unique --input strict.json --xbar xbar10.json");
    CHECK(res.code == 0);
    CHECK(std::holds_alternative<Unique>(uniqueness_from_json(parse(res.out))));

    // Same decision through the zero-set direction problem.
    res = run("appa --input strict.json --xbar xbar10.json");
    CHECK(res.code == 0);
    CHECK(std::holds_alternative<Unique>(uniqueness_from_json(parse(res.out))));

    // Non-basic anchor: support columns dependent, structured precondition error.
    write_file("dep.json", R"({"A": [[1, 1]], "b": [1], "p": [0, 0]})");
    write_file("mid.json", R"(["1/2", "1/2"])");
    res = run("appa --input dep.json --xbar mid.json");
    CHECK(res.code == 1);
    Json err = parse(res.err);
    CHECK(err["kind"] == "error");
    CHECK(err["type"] == "precondition");

    // A non-optimal anchor is an error, not a verdict, and carries the outcome.
    write_file("xbar01.json", R"([0, 1])");
    res = run("unique --input strict.json --xbar xbar01.json");
    CHECK(res.code == 1);
    err = parse(res.err);
    CHECK(err["type"] == "precondition");
    CHECK(err.contains("outcome"));
}

void test_nonsub() {
    write_file("ns.json", R"({"A": [[1, 1]], "b": [1], "p": [1, 1]})");
    write_file("ns_xbar.json", R"(["1/2", "1/2"])");
    write_file("ns_xstar.json", R"(["1/4", 0])");
    RunResult res = run("nonsub --input ns.json --xbar ns_xbar.json --xstar ns_xstar.json");
    CHECK(res.code == 0);
    NonsubCertificate cert = nonsub_from_json(parse(res.out));
    CHECK(cert.bstar == RVector{Rational(1, 4)});

    // Support escaping the anchor's support is a precondition error.
    write_file("bad_xstar.json", R"([0, 2])");
    write_file("ns2_xbar.json", R"([1, 0])");
    write_file("ns2.json", R"({"A": [[1, 1]], "b": [1], "p": [2, 1]})");
    res = run("nonsub --input ns2.json --xbar ns2_xbar.json --xstar bad_xstar.json");
    CHECK(res.code == 1);
    CHECK(parse(res.err)["type"] == "precondition");
}

void test_perturb() {
    write_file("pt.json", R"({"A": [[1, 1]], "b": [1], "p": [2, 1]})");
    write_file("pt_xbar.json", R"([1, 0])");
    write_file("pt_q.json", R"([-1, 0])");
    RunResult res = run("perturb --input pt.json --xbar pt_xbar.json --q pt_q.json --delta 1/2");
    CHECK(res.code == 0);
    CHECK(perturbation_from_json(parse(res.out)).holds);

    res = run("perturb --input pt.json --xbar pt_xbar.json --q pt_q.json --delta 2");
    CHECK(res.code == 2);
    CHECK(!perturbation_from_json(parse(res.out)).holds);

    res = run("perturb --input pt.json --xbar pt_xbar.json --q pt_q.json --delta 0");
    CHECK(res.code == 1);  // delta must be positive
}

void test_face() {
    write_file("seg.json", R"({"A": [[1, 1]], "b": [1], "p": [1, 1]})");
    write_file("seg_mid.json", R"(["1/2", "1/2"])");
    RunResult res = run("face --input seg.json --point seg_mid.json");
    CHECK(res.code == 0);
    FaceDecomposition face = face_from_json(parse(res.out));
    CHECK(face.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    // Unbounded feasible set: structured error naming the recession ray.
    write_file("rayp.json", R"({"A": [[1, 0]], "b": [1], "p": [1, 0]})");
    write_file("y11.json", R"([1, 1])");
    res = run("face --input rayp.json --point y11.json");
    CHECK(res.code == 1);
    Json err = parse(res.err);
    CHECK(err["type"] == "precondition");
    CHECK(err["ray"] == Json::array({"0", "1"}));

    // A feasible but sub-optimal point: the exact value gap is reported.
    write_file("seg_bad.json", R"({"A": [[1, 1]], "b": [1], "p": [2, 1]})");
    res = run("face --input seg_bad.json --point seg_mid.json");
    CHECK(res.code == 1);
    err = parse(res.err);
    CHECK(err["type"] == "precondition");
    CHECK(err["gap"] == "1/2");
}

void test_ds_perturb() {
    write_file("half.json",
               R"({"n": 2, "entries": [["1/2", "1/2"], ["1/2", "1/2"]]})");
    RunResult res = run("ds-perturb --input half.json --delta 1/4");
    CHECK(res.code == 0);
    Json doc = parse(res.out);
    CHECK(doc["cycle"]["pairs"] == Json::parse(R"([[1,1],[1,2],[2,2],[2,1]])"));
    CHECK(doc["epsilon0"] == "1/2");
    DoublyStochastic q1 = ds_from_json(doc["q1"]);
    DoublyStochastic q2 = ds_from_json(doc["q2"]);
    CHECK(q1(0, 0) == Rational(1, 4));
    CHECK(q2(0, 0) == Rational(3, 4));

    // Without --delta the step defaults to half the ceiling.
    res = run("ds-perturb --input half.json");
    CHECK(res.code == 0);
    CHECK(parse(res.out)["eps"] == "1/4");

    write_file("id2.json", R"({"n": 2, "entries": [["1", "0"], ["0", "1"]]})");
    res = run("ds-perturb --input id2.json");
    CHECK(res.code == 1);  // permutation matrices have no fractional entry
    CHECK(parse(res.err)["type"] == "precondition");
}

void test_bvn() {
    write_file("half.json",
               R"({"n": 2, "entries": [["1/2", "1/2"], ["1/2", "1/2"]]})");
    RunResult res = run("bvn --input half.json");
    CHECK(res.code == 0);
    BvnDecomposition dec = bvn_from_json(parse(res.out));
    CHECK(dec.terms.size() == 2);
    for (const BvnTerm& term : dec.terms) CHECK(term.weight == Rational(1, 2));

    write_file("broken.json", R"({"n": 2, "entries": [["1/2", "1/2"], ["1/2"]]})");
    res = run("bvn --input broken.json");
    CHECK(res.code == 1);
    CHECK(parse(res.err)["type"] == "parse");

    write_file("notjson.json", "{");
    res = run("bvn --input notjson.json");
    CHECK(res.code == 1);
    CHECK(parse(res.err)["type"] == "parse");
}

void test_verify_ds_vertices() {
    RunResult res = run("verify-ds-vertices --n 3");
    CHECK(res.code == 0);
    Json doc = parse(res.out);
    CHECK(doc["n"] == 3);
    CHECK(doc["holds"] == true);

    res = run("verify-ds-vertices --n 4");
    CHECK(res.code == 1);
    CHECK(parse(res.err)["type"] == "capacity");
}

void test_interval_check() {
    write_file("iv_pass.json", R"({
        "A": [[1, 1]], "lower": [[0, 0]], "upper": [[2, 2]],
        "b": [1], "x": [1, 0]})");
    RunResult res = run("interval-check --input iv_pass.json");
    CHECK(res.code == 0);
    CHECK(interval_check_from_json(parse(res.out)).holds);

    // Active row whose interval endpoints cannot bracket the right-hand side.
    write_file("iv_fail.json", R"({
        "A": [[1]], "lower": [[2]], "upper": [[3]],
        "b": [1], "x": [1]})");
    res = run("interval-check --input iv_fail.json");
    CHECK(res.code == 1);  // lower > A: malformed interval data, not a verdict
    CHECK(parse(res.err)["type"] == "precondition");

    // Row 2 is slack at x, so its (non-bracketing) interval is never consulted.
    write_file("iv_slack.json", R"({
        "A": [[1], [1]], "lower": [[0], [0]], "upper": [[1], [1]],
        "b": [1, 5], "x": [1]})");
    res = run("interval-check --input iv_slack.json");
    CHECK(res.code == 0);
    CHECK(interval_check_from_json(parse(res.out)).holds);
}

void test_generate() {
    RunResult a = run("generate random-lp --seed 7 --m 2 --n 4");
    RunResult b = run("generate random-lp --seed 7 --m 2 --n 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // byte-identical determinism
    LpProblem prob = lp_problem_from_json(parse(a.out));
    CHECK(prob.A.rows() == 2);
    CHECK(prob.A.cols() == 4);

    RunResult c = run("generate random-lp --seed 8 --m 2 --n 4");
    CHECK(c.out != a.out);

    RunResult ds = run("generate random-ds --seed 1 --n 3");
    CHECK(ds.code == 0);
    CHECK(ds_from_json(parse(ds.out)).n() == 3);

    RunResult over = run("generate random-ds --seed 1 --n 40");
    CHECK(over.code == 1);
    CHECK(parse(over.err)["type"] == "capacity");
}

void test_cli_errors() {
    RunResult res = run("solve");  // missing --input
    CHECK(res.code == 1);

    res = run("no-such-command");
    CHECK(res.code == 1);

    res = run("solve --input does_not_exist.json");
    CHECK(res.code == 1);
    CHECK(parse(res.err)["type"] == "parse");

    res = run("--help");
    CHECK(res.code == 0);
    CHECK(res.out.find("solve") != std::string::npos);
}

void guard(const char* name, void (*test)()) {
    try {
        test();
    } catch (const std::exception& e) {
        ++failures;
        std::cerr << "FAILED: " << name << " threw: " << e.what() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <path-to-cli>\n";
        return 2;
    }
    char* cli = realpath(argv[1], nullptr);  // the harness changes directory per run
    if (cli == nullptr) {
        std::cerr << "cannot resolve " << argv[1] << "\n";
        return 2;
    }
    g_cli = cli;
    free(cli);

    char tmpl[] = "/tmp/lpcert_cli_XXXXXX";
    char* dir = mkdtemp(tmpl);
    if (dir == nullptr) {
        std::cerr << "mkdtemp failed\n";
        return 2;
    }
    g_dir = dir;

    guard("solve", test_solve);
    guard("vertices", test_vertices);
    guard("unique", test_unique);
    guard("nonsub", test_nonsub);
    guard("perturb", test_perturb);
    guard("face", test_face);
    guard("ds-perturb", test_ds_perturb);
    guard("bvn", test_bvn);
    guard("verify-ds-vertices", test_verify_ds_vertices);
    guard("interval-check", test_interval_check);
    guard("generate", test_generate);
    guard("cli errors", test_cli_errors);

    if (failures == 0) {
        std::cout << "cli: all checks passed\n";
        return 0;
    }
    std::cout << "cli: " << failures << " check(s) failed\n";
    return 1;
}
