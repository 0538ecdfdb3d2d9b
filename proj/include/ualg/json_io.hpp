#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "ualg/checks.hpp"
#include "ualg/special_terms.hpp"

namespace ualg {

using nlohmann::json;

/// {"name": str, "size": int, "operations": [{"symbol","arity","table"}]}
FiniteAlgebra algebra_from_json(const json& j);
json algebra_to_json(const FiniteAlgebra& a);

/// S-expression form: ["x", 0] or ["ap", "+", [...], [...]]
Term term_from_json(const json& j);
json term_to_json(const Term& t);

/// {"blocks": [[int,...],...]} covering 0..n-1 exactly once.
Congruence congruence_from_json(const json& j, int n);
json congruence_to_json(const Congruence& c);

/// Sorted list of [a,b,c,d] quadruples.
json tupleset_to_json(const TupleSet4& s);

/// {"vertices":[{"id","color","children"}], "root":0}
MaltsevTree tree_from_json(const json& j);
/// Vertex id -> [f, g] term pairs, plus "p".
TermFamily family_from_json(const json& j);

json trace_to_json(const CommutatorTrace& trace, const Congruence& alpha,
                   const Congruence& beta);

json report_to_json(const CheckReport& r, bool include_timing = false);

/// Reads and parses a JSON file; throws ParseError with the path on failure.
json load_json_file(const std::string& path);

}  // namespace ualg
