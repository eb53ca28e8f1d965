#pragma once

#include "lpcert/birkhoff.hpp"
#include "lpcert/lp.hpp"
#include "lpcert/structure.hpp"
#include "lpcert/vertices.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace lpcert {

// All serialization is exact: rationals travel as "p/q" strings (plain "p"
// when the denominator is one; bare JSON integers are accepted on input) and
// index sets are 1-based on the wire. Every *_from_json rejects malformed
// documents with ParseError; every emitted document round-trips.

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const RVector& v);
Json to_json(const RMatrix& m);
Rational rational_from_json(const Json& j);
RVector vector_from_json(const Json& j);
RMatrix matrix_from_json(const Json& j);

// {"A": [[...]], "b": [...], "p": [...]}
Json to_json(const LpProblem& prob);
LpProblem lp_problem_from_json(const Json& j);

// {"kind": "optimal", "x": [...], "value": ..., "y": [...]} |
// {"kind": "infeasible", "witness": [...]} | {"kind": "unbounded", "ray": [...]}
Json to_json(const SolveOutcome& outcome);
SolveOutcome solve_outcome_from_json(const Json& j);

// {"vertices": [{"x": [...], "support": [1-based...]}, ...]}
Json to_json(const VertexSet& vs);
VertexSet vertex_set_from_json(const Json& j);

// {"kind": "bounded"} | {"kind": "unbounded", "ray": [...]}
Json to_json(const BoundednessVerdict& verdict);
BoundednessVerdict boundedness_from_json(const Json& j);

// {"kind": "unique"} | {"kind": "not_unique", "witness": [...]}
Json to_json(const UniquenessVerdict& verdict);
UniquenessVerdict uniqueness_from_json(const Json& j);

// {"bstar": [...], "ybar": [...]}
Json to_json(const NonsubCertificate& cert);
NonsubCertificate nonsub_from_json(const Json& j);

// {"holds": bool} plus "unbounded_ray" when present
Json to_json(const PerturbationResult& res);
PerturbationResult perturbation_from_json(const Json& j);

// {"vertices": ..., "weights": [...]}
Json to_json(const FaceDecomposition& face);
FaceDecomposition face_from_json(const Json& j);

// {"holds": bool} plus 1-based "violating_row" when present
Json to_json(const IntervalCheck& check);
IntervalCheck interval_check_from_json(const Json& j);

// {"kind": "weights", "alpha": [...]} | {"kind": "separator", "q": [...], "beta": ...}
Json to_json(const SeparationResult& sep);
SeparationResult separation_from_json(const Json& j);

// {"n": int, "entries": [[...]]}
Json to_json(const DoublyStochastic& ds);
DoublyStochastic ds_from_json(const Json& j);

// {"pairs": [[row, col], ...]} with 1-based indices
Json to_json(const FractionalCycle& cycle);
FractionalCycle cycle_from_json(const Json& j);

// {"terms": [{"weight": ..., "sigma": [1-based images]}, ...]}
Json to_json(const BvnDecomposition& bvn);
BvnDecomposition bvn_from_json(const Json& j);

// {"indices": [1-based...]}
Json to_json(const ZeroSet& zs);
ZeroSet zero_set_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

}  // namespace lpcert
