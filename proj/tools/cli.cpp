#include "lagrel/cli.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "lagrel/error.hpp"
#include "lagrel/invariants.hpp"
#include "lagrel/json_io.hpp"
#include "lagrel/verify.hpp"
#include "lagrel/version.hpp"

namespace lagrel {

namespace {

using io::Json;
using io::to_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Json header() {
  return Json{{"tool", "lagrel"},
              {"version", kVersion},
              {"conventions",
               {{"B", "B((v,w),(v',w')) = <v|v'> - <w|w'>"},
                {"E_V0", "{(v, v + w) : v in V0, w in V0^perp}"},
                {"compose", "compose(L, L') = L' o L"},
                {"rationals", "p/q strings in lowest terms"},
                {"monomials", "exponent vectors, graded lexicographic order"}}}};
}

struct Input {
  std::string kind;  // "generators", "components" or "root_system"
  std::string digest;
  Json json;
};

Input load(const std::string& path) {
  const std::string text = read_file(path);
  Input in{"", sha256_hex(text), io::parse(text)};
  if (!in.json.is_object()) throw ParseError("input must be a JSON object");
  if (in.json.contains("roots")) in.kind = "root_system";
  else if (in.json.contains("generators")) in.kind = "generators";
  else if (in.json.contains("components")) in.kind = "components";
  else throw ParseError("input needs \"roots\", \"generators\" or \"components\"");
  return in;
}

LagrangianEquivalenceRelation relation_of(const Input& in, const ClosureConfig& cfg) {
  if (in.kind == "root_system") return build_relation(io::root_system_from_json(in.json), cfg);
  if (in.kind == "generators") {
    auto file = io::relation_file_from_json(in.json);
    return closure(file.form, file.generators, cfg);
  }
  auto r = io::equivalence_relation_from_json(in.json);
  if (!is_closed(r)) throw PreconditionError("components are not closed under composition and inverse");
  return r;
}

Json histogram_json(const LagrangianEquivalenceRelation& r) {
  Json out = Json::object();
  for (const auto& [a, count] : atypicality_histogram(r)) out[std::to_string(a)] = count;
  return out;
}

Json subspaces_json(const std::vector<Subspace>& list) {
  Json out = Json::array();
  for (const auto& s : list) out.push_back(to_json(s));
  return out;
}

Json separation_json(const SeparationResult& res) {
  Json out{{"equivalent", res.equivalent}, {"exhausted", res.exhausted}, {"certificate", nullptr}};
  if (res.certificate)
    out["certificate"] = Json{{"invariant", to_json(res.certificate->invariant)},
                              {"degree", res.certificate->degree},
                              {"value_x", to_json(res.certificate->value_x)},
                              {"value_y", to_json(res.certificate->value_y)}};
  return out;
}

Json discriminant_json(const DiscriminantPolynomial& t) {
  return Json{{"T", to_json(t.t)},
              {"degree", t.degree},
              {"squared", t.squared},
              {"hyperplanes", subspaces_json(t.hyperplanes)}};
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ParseError("cannot write \"" + out_path + "\"");
  file << text;
}

struct Options {
  std::string file, out_path, suite, family, x, y, v, v_prime;
  std::uint32_t degree = 4, dmax = 6;
  std::size_t max_components = ClosureConfig{}.max_components;
  std::size_t root = 0;
  std::uint64_t seed = 20240501;
  int m = 0, n = 0;

  ClosureConfig closure_config() const {
    ClosureConfig cfg;
    cfg.max_components = max_components;
    return cfg;
  }
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const Input in = load(o.file);
  const auto r = relation_of(in, o.closure_config());
  Json report = header();
  report["input"] = Json{{"sha256", in.digest}, {"kind", in.kind}};
  report["n"] = r.n();
  report["num_components"] = r.size();
  report["weyl_order"] = weyl_group(r).size();
  report["atypicality_histogram"] = histogram_json(r);
  report["special_coisotropics"] = special_coisotropics(r).size();
  report["discriminant"] = subspaces_json(discriminant(r));
  const auto reg = is_one_regular(r);
  report["one_regular"] = reg.holds;
  report["one_regular_witness"] = reg.witness ? to_json(*reg.witness) : Json(nullptr);
  const auto semi = is_semiregular(r);
  report["semiregular"] = semi.holds;
  if (!semi.holds) report["semiregular_diagnostic"] = semi.diagnostic;
  Json dims = Json::array();
  for (std::uint32_t d = 0; d <= o.degree; ++d) dims.push_back(invariant_space(r, d).dim());
  report["invariant_dims"] = dims;
  if (reg.holds && reg.witness) report["discriminant_polynomial"] = discriminant_json(discriminant_polynomial(r));
  if (!o.x.empty() || !o.y.empty()) {
    auto res = separate(r, parse_vector(o.x), parse_vector(o.y), o.dmax);
    report["separation"] = separation_json(res);
  }
  emit(report, o.out_path, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto report = run_suite(o.suite, o.seed);
  Json props = Json::array();
  for (const auto& p : report.properties) {
    Json entry{{"property", p.name}, {"checked", p.checked}, {"failed", p.failed}};
    if (p.failed) entry["first_failure"] = p.first_failure;
    props.push_back(entry);
  }
  Json j = header();
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["passed"] = report.ok();
  j["properties"] = props;
  emit(j, o.out_path, out);
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const Input in = load(o.file);
  const auto r = relation_of(in, o.closure_config());
  Json degrees = Json::array();
  for (std::uint32_t d = 0; d <= o.degree; ++d) {
    const auto piece = invariant_space(r, d);
    Json basis = Json::array();
    for (const auto& f : piece.basis()) basis.push_back(to_json(f));
    degrees.push_back(Json{{"degree", d}, {"dim", piece.dim()}, {"basis", basis}});
  }
  Json j = header();
  j["input"] = Json{{"sha256", in.digest}, {"kind", in.kind}};
  j["num_vars"] = r.n();
  j["degrees"] = degrees;
  emit(j, o.out_path, out);
  return kExitOk;
}

int cmd_separate(const Options& o, std::ostream& out) {
  const Input in = load(o.file);
  const auto r = relation_of(in, o.closure_config());
  Json j = header();
  j["input"] = Json{{"sha256", in.digest}, {"kind", in.kind}};
  j["x"] = to_json(parse_vector(o.x));
  j["y"] = to_json(parse_vector(o.y));
  j["dmax"] = o.dmax;
  j["separation"] = separation_json(separate(r, parse_vector(o.x), parse_vector(o.y), o.dmax));
  emit(j, o.out_path, out);
  return kExitOk;
}

int cmd_discriminant(const Options& o, std::ostream& out) {
  const Input in = load(o.file);
  const auto r = relation_of(in, o.closure_config());
  Json j = header();
  j["input"] = Json{{"sha256", in.digest}, {"kind", in.kind}};
  j["discriminant"] = subspaces_json(discriminant(r));
  if (discriminant(r).empty()) j["discriminant_polynomial"] = nullptr;
  else j["discriminant_polynomial"] = discriminant_json(discriminant_polynomial(r));
  emit(j, o.out_path, out);
  return kExitOk;
}

RootSystem load_root_system(const std::string& path) {
  const Input in = load(path);
  if (in.kind != "root_system") throw ParseError("expected a root system file {\"gram\", \"roots\"}");
  return io::root_system_from_json(in.json);
}

int cmd_wgrs_build(const Options& o, std::ostream& out) {
  emit(to_json(catalog(o.family, {o.m, o.n})), o.out_path, out);
  return kExitOk;
}

int cmd_wgrs_validate(const Options& o, std::ostream& out) {
  const auto diags = validate(load_root_system(o.file));
  Json list = Json::array();
  for (const auto& d : diags)
    list.push_back(Json{{"axiom", d.axiom}, {"i", d.i}, {"j", d.j}, {"message", d.message}});
  Json j = header();
  j["valid"] = diags.empty();
  j["diagnostics"] = list;
  emit(j, o.out_path, out);
  return diags.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_wgrs_relation(const Options& o, std::ostream& out) {
  const auto rs = load_root_system(o.file);
  const auto r = build_relation(rs, o.closure_config());
  Json j = header();
  j["num_components"] = r.size();
  j["weyl_order"] = weyl_group(r).size();
  j["atypicality_histogram"] = histogram_json(r);
  j["relation"] = to_json(r);
  emit(j, o.out_path, out);
  return kExitOk;
}

int cmd_wgrs_reduce(const Options& o, std::ostream& out) {
  const auto rs = load_root_system(o.file);
  if (o.root >= rs.size()) throw PreconditionError("--root index out of range");
  emit(to_json(reduce_by_root(rs, rs.roots()[o.root])), o.out_path, out);
  return kExitOk;
}

int cmd_wgrs_classes(const Options& o, std::ostream& out) {
  const auto rs = load_root_system(o.file);
  const auto witness = class_membership(rs, parse_vector(o.v), parse_vector(o.v_prime));
  Json j = header();
  j["related"] = witness.has_value();
  j["witness"] = nullptr;
  if (witness) {
    Json reps = Json::array();
    for (const auto& r : witness->s.reps) reps.push_back(to_json(r));
    j["witness"] = Json{{"w", to_json(witness->w.matrix())},
                        {"isoset", reps},
                        {"coefficients", to_json(witness->coefficients)}};
  }
  emit(j, o.out_path, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Lagrangian equivalence relations and root systems", "lagrel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto relation_input = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Relation file (generators or components) or root system file")
        ->required();
    sub->add_option("--max-components", o.max_components, "Closure component bound");
    sub->add_option("--out", o.out_path, "Write JSON here instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "Closure, regularity and invariant dimensions");
  relation_input(analyze);
  analyze->add_option("--degree", o.degree, "Highest invariant degree")->capture_default_str();
  analyze->add_option("--dmax", o.dmax, "Highest separation degree")->capture_default_str();
  analyze->add_option("--x", o.x, "Point x for a separation query, e.g. 1,0");
  analyze->add_option("--y", o.y, "Point y for a separation query");
  analyze->callback([&] { action = cmd_analyze; });

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", o.suite, "monoid, wgrs, invariants, reduction or product")->required();
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--out", o.out_path, "Write JSON here instead of stdout");
  verify->callback([&] { action = cmd_verify; });

  auto* invariants = app.add_subcommand("invariants", "Bases of homogeneous invariants");
  relation_input(invariants);
  invariants->add_option("--degree", o.degree, "Highest degree")->capture_default_str();
  invariants->callback([&] { action = cmd_invariants; });

  auto* sep = app.add_subcommand("separate", "Search for an invariant separating two points");
  relation_input(sep);
  sep->add_option("--x", o.x, "Point x, e.g. 1,0")->required();
  sep->add_option("--y", o.y, "Point y")->required();
  sep->add_option("--dmax", o.dmax, "Highest degree searched")->capture_default_str();
  sep->callback([&] { action = cmd_separate; });

  auto* disc = app.add_subcommand("discriminant", "Discriminant subspaces and polynomial");
  relation_input(disc);
  disc->callback([&] { action = cmd_discriminant; });

  auto* wgrs = app.add_subcommand("wgrs", "Root system tools");
  wgrs->require_subcommand(1);
  auto* build = wgrs->add_subcommand("build", "Catalog root system, e.g. `wgrs build gl 2 1`");
  build->add_option("family", o.family, "gl or osp")->required();
  build->add_option("m", o.m, "First parameter")->required();
  build->add_option("n", o.n, "Second parameter")->required();
  build->add_option("--out", o.out_path, "Write JSON here instead of stdout");
  build->callback([&] { action = cmd_wgrs_build; });

  auto* validate_cmd = wgrs->add_subcommand("validate", "Check the root system axioms");
  validate_cmd->add_option("file", o.file, "Root system file")->required();
  validate_cmd->add_option("--out", o.out_path, "Write JSON here instead of stdout");
  validate_cmd->callback([&] { action = cmd_wgrs_validate; });

  auto* relation = wgrs->add_subcommand("relation", "Equivalence relation of a root system");
  relation->add_option("file", o.file, "Root system file")->required();
  relation->add_option("--max-components", o.max_components, "Closure component bound");
  relation->add_option("--out", o.out_path, "Write JSON here instead of stdout");
  relation->callback([&] { action = cmd_wgrs_relation; });

  auto* reduce_cmd = wgrs->add_subcommand("reduce", "Reduce by an isotropic root");
  reduce_cmd->add_option("file", o.file, "Root system file")->required();
  reduce_cmd->add_option("--root", o.root, "Index of the isotropic root in the file")->required();
  reduce_cmd->add_option("--out", o.out_path, "Write JSON here instead of stdout");
  reduce_cmd->callback([&] { action = cmd_wgrs_reduce; });

  auto* classes = wgrs->add_subcommand("classes", "Decide whether v and v' are equivalent");
  classes->add_option("file", o.file, "Root system file")->required();
  classes->add_option("--v", o.v, "Vector v")->required();
  classes->add_option("--vprime", o.v_prime, "Vector v'")->required();
  classes->add_option("--out", o.out_path, "Write JSON here instead of stdout");
  classes->callback([&] { action = cmd_wgrs_classes; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    return action(o, out);
  } catch (const BoundExceeded& e) {
    err << "error: closure bound exceeded: " << e.what() << "\n";
    return kExitBoundExceeded;
  } catch (const InvariantViolation& e) {
    err << "error: internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace lagrel
