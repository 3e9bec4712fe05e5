#pragma once

// JSON encodings. Rationals are always "p/q" strings; matrices are arrays of
// rows; polynomials map exponent strings such as "2,0,1" to coefficients.

#include <json.hpp>

#include <vector>

#include "lagrel/invariants.hpp"
#include "lagrel/wgrs.hpp"

namespace lagrel::io {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const Polynomial& p);
/// {"form": gram, "space": basis of L}.
Json to_json(const LinearRelation& l);
/// {"form": gram, "components": [basis of L, ...]}.
Json to_json(const LagrangianEquivalenceRelation& r);
/// {"gram": gram, "roots": [...]}.
Json to_json(const RootSystem& rs);

/// Accepts "p/q" strings and JSON integers. Throws ParseError.
Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j, std::size_t expected_size);
/// Rows of equal length `cols`; an empty array is a 0 x cols matrix.
Matrix matrix_from_json(const Json& j, std::size_t cols);
/// Square gram matrix; throws PreconditionError if degenerate or asymmetric.
FormPtr form_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j, std::size_t num_vars);

/// Relation spanned by the rows of `j` in V x V, or {"graph": g} for the
/// graph of a matrix, or {"idempotent": rows spanning V0} for E_{V0}.
LinearRelation relation_from_json(const FormPtr& form, const Json& j);

/// Input file with generators: {"form": gram, "generators": [relation, ...]}.
struct RelationFile {
  FormPtr form;
  std::vector<LinearRelation> generators;
};

RelationFile relation_file_from_json(const Json& j);
LagrangianEquivalenceRelation equivalence_relation_from_json(const Json& j);
RootSystem root_system_from_json(const Json& j);

/// Parses text, mapping JSON syntax errors to ParseError.
Json parse(const std::string& text);

}  // namespace lagrel::io
