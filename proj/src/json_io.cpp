#include "lagrel/json_io.hpp"

#include <sstream>

#include "lagrel/error.hpp"

namespace lagrel::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string exponent_key(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

Exponent parse_exponent(const std::string& key, std::size_t num_vars) {
  Exponent e;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed exponent \"" + key + "\"");
    e.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  if (e.size() != num_vars) throw ParseError("exponent \"" + key + "\" has the wrong length");
  return e;
}

}  // namespace

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vector(i)));
  return out;
}

Json to_json(const Subspace& s) { return to_json(s.basis()); }

Json to_json(const Polynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[exponent_key(e)] = to_json(c);
  return out;
}

Json to_json(const LinearRelation& l) {
  return Json{{"form", to_json(l.form().gram())}, {"space", to_json(l.space())}};
}

Json to_json(const LagrangianEquivalenceRelation& r) {
  Json comps = Json::array();
  for (const auto& l : r.components()) comps.push_back(to_json(l.space()));
  return Json{{"form", to_json(r.form().gram())}, {"components", comps}};
}

Json to_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (const auto& v : rs.roots()) roots.push_back(to_json(v));
  return Json{{"gram", to_json(rs.form().gram())}, {"roots", roots}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw ParseError("expected a rational string \"p/q\", got " + j.dump());
}

Vector vector_from_json(const Json& j, std::size_t expected_size) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  if (j.size() != expected_size)
    throw ParseError("expected a vector of length " + std::to_string(expected_size) + ", got " +
                     std::to_string(j.size()));
  Vector out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) throw ParseError("expected an array of rows, got " + j.dump());
  Matrix out(0, cols);
  for (const auto& row : j) out.append_row(vector_from_json(row, cols));
  return out;
}

FormPtr form_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("gram matrix must be an array of rows");
  return make_form(BilinearForm(matrix_from_json(j, j.size())));
}

Polynomial polynomial_from_json(const Json& j, std::size_t num_vars) {
  if (!j.is_object()) throw ParseError("polynomial must be an object");
  Polynomial p(num_vars);
  for (const auto& [key, value] : j.items()) p.add_term(parse_exponent(key, num_vars), rational_from_json(value));
  return p;
}

LinearRelation relation_from_json(const FormPtr& form, const Json& j) {
  const std::size_t n = form->dim();
  if (j.is_object() && j.contains("graph"))
    return LinearRelation::graph(form, matrix_from_json(j.at("graph"), n));
  if (j.is_object() && j.contains("idempotent"))
    return idempotent_for(form, Subspace(n, matrix_from_json(j.at("idempotent"), n)));
  const Json& rows = j.is_object() ? field(j, "space") : j;
  return LinearRelation(form, Subspace(2 * n, matrix_from_json(rows, 2 * n)));
}

RelationFile relation_file_from_json(const Json& j) {
  RelationFile out;
  out.form = form_from_json(field(j, "form"));
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw ParseError("\"generators\" must be an array");
  for (const auto& g : gens) out.generators.push_back(relation_from_json(out.form, g));
  return out;
}

LagrangianEquivalenceRelation equivalence_relation_from_json(const Json& j) {
  auto form = form_from_json(field(j, "form"));
  const Json& comps = field(j, "components");
  if (!comps.is_array()) throw ParseError("\"components\" must be an array");
  std::vector<LinearRelation> out;
  for (const auto& c : comps) out.push_back(relation_from_json(form, c));
  return LagrangianEquivalenceRelation(form, std::move(out));
}

RootSystem root_system_from_json(const Json& j) {
  auto form = form_from_json(field(j, "gram"));
  const Json& roots = field(j, "roots");
  if (!roots.is_array()) throw ParseError("\"roots\" must be an array");
  std::vector<Vector> out;
  for (const auto& r : roots) out.push_back(vector_from_json(r, form->dim()));
  return RootSystem(form, std::move(out));
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace lagrel::io
