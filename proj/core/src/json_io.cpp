#include "lpcert/json_io.hpp"

#include <fstream>
#include <utility>

namespace lpcert {

namespace {

const Json& require_field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

std::string require_kind(const Json& j, const char* what) {
    const Json& k = require_field(j, "kind", what);
    if (!k.is_string()) throw ParseError(std::string(what) + ": \"kind\" must be a string");
    return k.get<std::string>();
}

// 1-based on the wire, 0-based in memory.
Json indices_to_json(const std::vector<std::size_t>& idx) {
    Json arr = Json::array();
    for (std::size_t j : idx) arr.push_back(j + 1);
    return arr;
}

std::vector<std::size_t> indices_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an index array");
    std::vector<std::size_t> out;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long long>() < 1) {
            throw ParseError(std::string(what) + ": indices must be integers >= 1");
        }
        out.push_back(static_cast<std::size_t>(e.get<long long>()) - 1);
    }
    return out;
}

bool bool_field(const Json& j, const char* key, const char* what) {
    const Json& f = require_field(j, key, what);
    if (!f.is_boolean()) throw ParseError(std::string(what) + ": \"" + key + "\" must be a boolean");
    return f.get<bool>();
}

}  // namespace

Json to_json(const Rational& r) {
    return Json(to_string(r));
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("rational: expected a \"p/q\" string or an integer, got " +
                     std::string(j.type_name()));
}

Json to_json(const RVector& v) {
    Json arr = Json::array();
    for (const auto& c : v) arr.push_back(to_json(c));
    return arr;
}

RVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("vector: expected an array");
    RVector out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

Json to_json(const RMatrix& m) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(to_json(m.row(i)));
    return arr;
}

RMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
    std::vector<RVector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw ParseError("matrix: ragged rows");
    }
    RMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
    }
    return m;
}

Json to_json(const LpProblem& prob) {
    return Json{{"A", to_json(prob.A)}, {"b", to_json(prob.b)}, {"p", to_json(prob.p)}};
}

LpProblem lp_problem_from_json(const Json& j) {
    LpProblem prob;
    prob.A = matrix_from_json(require_field(j, "A", "problem"));
    prob.b = vector_from_json(require_field(j, "b", "problem"));
    prob.p = vector_from_json(require_field(j, "p", "problem"));
    try {
        prob.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("problem: ") + e.what());
    }
    return prob;
}

Json to_json(const SolveOutcome& outcome) {
    if (const auto* opt = std::get_if<Optimal>(&outcome)) {
        return Json{{"kind", "optimal"},
                    {"x", to_json(opt->primal.x)},
                    {"value", to_json(opt->primal.value)},
                    {"y", to_json(opt->dual.y)}};
    }
    if (const auto* inf = std::get_if<Infeasible>(&outcome)) {
        return Json{{"kind", "infeasible"}, {"witness", to_json(inf->witness)}};
    }
    const auto& unb = std::get<Unbounded>(outcome);
    return Json{{"kind", "unbounded"}, {"ray", to_json(unb.ray)}};
}

SolveOutcome solve_outcome_from_json(const Json& j) {
    const std::string kind = require_kind(j, "outcome");
    if (kind == "optimal") {
        return Optimal{PrimalSolution{vector_from_json(require_field(j, "x", "outcome")),
                                      rational_from_json(require_field(j, "value", "outcome"))},
                       DualSolution{vector_from_json(require_field(j, "y", "outcome"))}};
    }
    if (kind == "infeasible") {
        return Infeasible{vector_from_json(require_field(j, "witness", "outcome"))};
    }
    if (kind == "unbounded") {
        return Unbounded{vector_from_json(require_field(j, "ray", "outcome"))};
    }
    throw ParseError("outcome: unknown kind \"" + kind + "\"");
}

Json to_json(const VertexSet& vs) {
    Json arr = Json::array();
    for (const auto& v : vs.vertices) {
        arr.push_back(Json{{"x", to_json(v.x)}, {"support", indices_to_json(v.support)}});
    }
    return Json{{"vertices", arr}};
}

VertexSet vertex_set_from_json(const Json& j) {
    const Json& arr = require_field(j, "vertices", "vertex set");
    if (!arr.is_array()) throw ParseError("vertex set: \"vertices\" must be an array");
    VertexSet vs;
    for (const auto& e : arr) {
        BasicSolution bs;
        bs.x = vector_from_json(require_field(e, "x", "vertex"));
        bs.support = indices_from_json(require_field(e, "support", "vertex"), "vertex");
        vs.vertices.push_back(std::move(bs));
    }
    return vs;
}

Json to_json(const BoundednessVerdict& verdict) {
    if (std::holds_alternative<Bounded>(verdict)) return Json{{"kind", "bounded"}};
    return Json{{"kind", "unbounded"}, {"ray", to_json(std::get<UnboundedRay>(verdict).ray)}};
}

BoundednessVerdict boundedness_from_json(const Json& j) {
    const std::string kind = require_kind(j, "boundedness");
    if (kind == "bounded") return Bounded{};
    if (kind == "unbounded") {
        return UnboundedRay{vector_from_json(require_field(j, "ray", "boundedness"))};
    }
    throw ParseError("boundedness: unknown kind \"" + kind + "\"");
}

Json to_json(const UniquenessVerdict& verdict) {
    if (std::holds_alternative<Unique>(verdict)) return Json{{"kind", "unique"}};
    return Json{{"kind", "not_unique"},
                {"witness", to_json(std::get<NotUnique>(verdict).witness)}};
}

UniquenessVerdict uniqueness_from_json(const Json& j) {
    const std::string kind = require_kind(j, "uniqueness");
    if (kind == "unique") return Unique{};
    if (kind == "not_unique") {
        return NotUnique{vector_from_json(require_field(j, "witness", "uniqueness"))};
    }
    throw ParseError("uniqueness: unknown kind \"" + kind + "\"");
}

Json to_json(const NonsubCertificate& cert) {
    return Json{{"bstar", to_json(cert.bstar)}, {"ybar", to_json(cert.ybar)}};
}

NonsubCertificate nonsub_from_json(const Json& j) {
    return NonsubCertificate{vector_from_json(require_field(j, "bstar", "certificate")),
                             vector_from_json(require_field(j, "ybar", "certificate"))};
}

Json to_json(const PerturbationResult& res) {
    Json out{{"holds", res.holds}};
    if (res.unbounded_ray) out["unbounded_ray"] = to_json(*res.unbounded_ray);
    return out;
}

PerturbationResult perturbation_from_json(const Json& j) {
    PerturbationResult res{bool_field(j, "holds", "perturbation"), std::nullopt};
    if (j.contains("unbounded_ray")) res.unbounded_ray = vector_from_json(j.at("unbounded_ray"));
    return res;
}

Json to_json(const FaceDecomposition& face) {
    Json weights = Json::array();
    for (const auto& w : face.weights) weights.push_back(to_json(w));
    return Json{{"vertices", to_json(face.vertices)["vertices"]}, {"weights", weights}};
}

FaceDecomposition face_from_json(const Json& j) {
    FaceDecomposition face;
    face.vertices = vertex_set_from_json(j);
    const Json& weights = require_field(j, "weights", "decomposition");
    if (!weights.is_array()) throw ParseError("decomposition: \"weights\" must be an array");
    for (const auto& w : weights) face.weights.push_back(rational_from_json(w));
    if (face.weights.size() != face.vertices.vertices.size()) {
        throw ParseError("decomposition: weights and vertices differ in length");
    }
    return face;
}

Json to_json(const IntervalCheck& check) {
    Json out{{"holds", check.holds}};
    if (check.violating_row) out["violating_row"] = *check.violating_row + 1;
    return out;
}

IntervalCheck interval_check_from_json(const Json& j) {
    IntervalCheck check{bool_field(j, "holds", "interval check"), std::nullopt};
    if (j.contains("violating_row")) {
        const Json& r = j.at("violating_row");
        if (!r.is_number_integer() || r.get<long long>() < 1) {
            throw ParseError("interval check: \"violating_row\" must be an integer >= 1");
        }
        check.violating_row = static_cast<std::size_t>(r.get<long long>()) - 1;
    }
    return check;
}

Json to_json(const SeparationResult& sep) {
    if (const auto* w = std::get_if<ConvexWeights>(&sep)) {
        Json alpha = Json::array();
        for (const auto& a : w->alpha) alpha.push_back(to_json(a));
        return Json{{"kind", "weights"}, {"alpha", alpha}};
    }
    const auto& s = std::get<Separator>(sep);
    return Json{{"kind", "separator"}, {"q", to_json(s.q)}, {"beta", to_json(s.beta)}};
}

SeparationResult separation_from_json(const Json& j) {
    const std::string kind = require_kind(j, "separation");
    if (kind == "weights") {
        ConvexWeights w;
        const Json& alpha = require_field(j, "alpha", "separation");
        if (!alpha.is_array()) throw ParseError("separation: \"alpha\" must be an array");
        for (const auto& a : alpha) w.alpha.push_back(rational_from_json(a));
        return w;
    }
    if (kind == "separator") {
        return Separator{vector_from_json(require_field(j, "q", "separation")),
                         rational_from_json(require_field(j, "beta", "separation"))};
    }
    throw ParseError("separation: unknown kind \"" + kind + "\"");
}

Json to_json(const DoublyStochastic& ds) {
    return Json{{"n", ds.n()}, {"entries", to_json(ds.matrix())}};
}

DoublyStochastic ds_from_json(const Json& j) {
    const Json& njson = require_field(j, "n", "doubly stochastic matrix");
    if (!njson.is_number_integer() || njson.get<long long>() < 1) {
        throw ParseError("doubly stochastic matrix: \"n\" must be a positive integer");
    }
    RMatrix m = matrix_from_json(require_field(j, "entries", "doubly stochastic matrix"));
    if (m.rows() != njson.get<std::size_t>() || m.cols() != njson.get<std::size_t>()) {
        throw ParseError("doubly stochastic matrix: \"entries\" shape disagrees with \"n\"");
    }
    try {
        return DoublyStochastic(std::move(m));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("doubly stochastic matrix: ") + e.what());
    }
}

Json to_json(const FractionalCycle& cycle) {
    Json pairs = Json::array();
    for (const auto& [r, c] : cycle.pairs) pairs.push_back(Json::array({r + 1, c + 1}));
    return Json{{"pairs", pairs}};
}

FractionalCycle cycle_from_json(const Json& j) {
    const Json& pairs = require_field(j, "pairs", "cycle");
    if (!pairs.is_array()) throw ParseError("cycle: \"pairs\" must be an array");
    FractionalCycle cycle;
    for (const auto& e : pairs) {
        std::vector<std::size_t> pair = indices_from_json(e, "cycle");
        if (pair.size() != 2) throw ParseError("cycle: each pair must hold two indices");
        cycle.pairs.emplace_back(pair[0], pair[1]);
    }
    return cycle;
}

Json to_json(const BvnDecomposition& bvn) {
    Json terms = Json::array();
    for (const auto& t : bvn.terms) {
        terms.push_back(
            Json{{"weight", to_json(t.weight)}, {"sigma", indices_to_json(t.perm.sigma)}});
    }
    return Json{{"terms", terms}};
}

BvnDecomposition bvn_from_json(const Json& j) {
    const Json& terms = require_field(j, "terms", "decomposition");
    if (!terms.is_array()) throw ParseError("decomposition: \"terms\" must be an array");
    BvnDecomposition bvn;
    for (const auto& t : terms) {
        BvnTerm term;
        term.weight = rational_from_json(require_field(t, "weight", "decomposition term"));
        term.perm.sigma = indices_from_json(require_field(t, "sigma", "decomposition term"),
                                            "decomposition term");
        bvn.terms.push_back(std::move(term));
    }
    return bvn;
}

Json to_json(const ZeroSet& zs) {
    return Json{{"indices", indices_to_json(zs.indices)}};
}

ZeroSet zero_set_from_json(const Json& j) {
    return ZeroSet{indices_from_json(require_field(j, "indices", "zero set"), "zero set")};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << doc.dump(2) << '\n';
}

}  // namespace lpcert
