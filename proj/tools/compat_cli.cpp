// Batch front end: one JSON document on stdout, a short summary on stderr.
// Exit status 0 when every check passes, 1 when one fails, 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "compat/json_io.hpp"

using namespace compat;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field_spec = "rational";
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  Field field() const { return Field::from_spec(field_spec); }
};

// "-" or empty reads stdin; text starting with '{' or '[' is inline JSON.
Json load(const std::string& source) {
  std::string text;
  std::string where = source;
  if (source.empty() || source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    where = "<stdin>";
  } else if (source.front() == '{' || source.front() == '[') {
    text = source;
    where = "<inline>";
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot open " + source);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Report line and column rather than the raw byte offset.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw UsageError(where + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Vector parse_list(const std::string& text, const Field& field) {
  Vector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(field.parse(item));
  return out;
}

int emit(Json doc, bool passed, const std::string& summary) {
  doc["passed"] = passed;
  std::cout << doc.dump(2) << "\n";
  std::cerr << (passed ? "ok: " : "FAILED: ") << summary << "\n";
  return passed ? kPass : kFail;
}

std::string describe(const Residual& r) {
  if (r.vanishes) return r.identity + " holds";
  std::string w;
  for (auto x : r.witness) w += (w.empty() ? "" : ",") + std::to_string(x + 1);
  return r.identity + " fails at (" + w + ")";
}

std::string describe(const IdentityReport& r) {
  const Residual* bad = r.first_failure();
  return bad ? describe(*bad) : "all " + std::to_string(r.families.size()) + " identity families hold";
}

Json compatibility_json(const CompatibilityReport& r) {
  Json j;
  j["star"] = residual_to_json(r.star);
  j["circle"] = residual_to_json(r.circle);
  j["mixed"] = residual_to_json(r.mixed);
  return j;
}

std::string describe(const CompatibilityReport& r) {
  for (const Residual* x : {&r.star, &r.circle, &r.mixed})
    if (!x->vanishes) return describe(*x);
  return "compatible";
}

IdentityReport append(IdentityReport r, Residual extra) {
  r.families.push_back(std::move(extra));
  return r;
}

// {"presentation": ..., "representation": ...} or a bare presentation.
std::pair<const Json*, const Json*> split_bundle(const Json& doc) {
  if (doc.is_object() && doc.contains("presentation"))
    return {&doc["presentation"], doc.contains("representation") ? &doc["representation"] : nullptr};
  return {&doc, nullptr};
}

int verify_pencil(const Options& o, const std::string& input) {
  const Json doc = load(input);
  const Field field = document_field(doc, o.field());
  const auto report = check_compatibility(pencil_from_json(doc, field, "$"));
  Json out = document("compatibility-report", field);
  out["checks"] = compatibility_json(report);
  return emit(out, report.compatible(), describe(report));
}

int deform(const Options& o, const std::string& input) {
  const Json doc = load(input);
  const Field field = document_field(doc, o.field());
  const auto star = structure_from_json(doc.contains("star") ? doc["star"] : Json(), field, "$.star");
  const Matrix r = matrix_from_json(doc.contains("r") ? doc["r"] : Json(), field, "$.r");
  if (r.rows() != star.dim() || r.cols() != star.dim()) throw SchemaError("$.r: operator does not match the algebra");
  const auto result = verified_deform(star, r);
  Json out = document("pencil", field);
  out["pencil"] = pencil_to_json({star, result.circle});
  out["checks"] = compatibility_json(result.report);
  return emit(out, result.report.compatible(), describe(result.report));
}

int extract_tensors(const Options& o, const std::string& input) {
  const Json doc = load(input);
  const Field field = document_field(doc, o.field());
  const auto pres = presentation_from_json(doc, field, "$");
  Json out = document("m-tensors", field);
  MExtraction ex;
  try {
    ex = extract_m_tensors(pres);
  } catch (const std::domain_error& e) {
    out["error"] = e.what();
    return emit(out, false, e.what());
  }
  MPresentation m;
  m.tensors = ex.tensors;
  const auto identities = append(check_tensor_identities(ex.tensors), ex.consistency);
  out["minimized"] = ex.minimized;
  out["presentation"] = mpresentation_to_json(m);
  out["representation"] = presentation_to_json(ex.presentation);
  out["checks"] = report_to_json(identities);
  return emit(out, identities.consistent(), describe(identities));
}

int verify_mstructure(const Options& o, const std::string& input) {
  const Json doc = load(input);
  const Field field = document_field(doc, o.field());
  const auto [pj, rj] = split_bundle(doc);
  const auto m = mpresentation_from_json(*pj, field, "$.presentation");
  IdentityReport report = check_consistency(m);
  report.families.push_back(check_K_central(m));
  std::mt19937_64 rng(o.seed);
  report.families.push_back(pm_sampled_associativity(to_pm(m), rng, o.samples, 2));
  if (rj)
    for (auto& f : validate_representation(m, presentation_from_json(*rj, field, "$.representation")).families)
      report.families.push_back(f);
  Json out = document("mstructure-report", field);
  out["checks"] = report_to_json(report);
  return emit(out, report.consistent(), describe(report));
}

int build_cyclic(const Options& o, std::size_t p, const std::string& s_text) {
  Field field = o.field();
  if (field.exact()) field = Field::cyclotomic(static_cast<int>(p + 1));
  const auto m = cyclic_mstructure(p, field);
  const auto rep = cyclic_representation(p, field.parse(s_text), field);
  Json out = document("mstructure", field);
  out["presentation"] = mpresentation_to_json(m);
  out["representation"] = presentation_to_json(rep);
  const auto report = validate_representation(m, rep);
  return emit(out, report.consistent(), describe(report));
}

int build_comma(const Options& o, const std::string& input) {
  const Json doc = load(input);
  const Field field = document_field(doc, o.field());
  const auto data = commutative_from_json(doc, field, "$");
  const auto conditions = commutative_data_residual(data);
  Json out = document("mstructure", field);
  if (!conditions.consistent()) {
    out["checks"] = report_to_json(conditions);
    return emit(out, false, describe(conditions));
  }
  const auto built = commutative_a_structure(data);
  out["presentation"] = mpresentation_to_json(built.presentation);
  out["b_algebra"] = structure_to_json(built.b_algebra);
  const auto report = append(check_consistency(built.presentation), check_K_central(built.presentation));
  out["checks"] = report_to_json(report);
  return emit(out, report.consistent(), describe(report));
}

int classify_comma(const Options& o, const std::string& input) {
  const Json doc = load(input);
  const Field field = document_field(doc, o.field());
  const auto data = commutative_from_json(doc, field, "$");
  const auto conditions = commutative_data_residual(data);
  Json out = document("commutative-classification", field);
  out["checks"] = report_to_json(conditions);
  if (!conditions.consistent()) return emit(out, false, describe(conditions));
  const auto c = classify_commutative_a(data);
  const auto built = commutative_a_structure(data);
  out["class"] = to_string(c.tag);
  out["class_count"] = c.class_count;
  if (c.tau) out["tau"] = scalar_to_json(*c.tau);
  Json b;
  b["dim"] = built.b_algebra.dim();
  b["semisimple"] = is_semisimple(built.b_algebra);
  b["center_dim"] = center_dimension(built.b_algebra);
  out["b_algebra"] = b;
  return emit(out, true, to_string(c.tag));
}

int build_a2k1(const Options& o, std::size_t k, std::size_t m, const std::string& lambda_text,
               const std::string& weight_text, const std::string& s_text) {
  CyclicPMData data;
  data.k = k;
  data.field = o.field().exact() ? Field::cyclotomic(static_cast<int>(k)) : o.field();
  if (lambda_text.empty()) {
    for (std::size_t x = 0; x < m; ++x) data.lambda.push_back(Scalar(static_cast<long>(x + 2)));
  } else {
    data.lambda = parse_list(lambda_text, data.field);
  }
  data.weights = weight_text.empty() ? Vector(data.lambda.size(), Scalar(1)) : parse_list(weight_text, data.field);
  if (data.lambda.size() != m || data.weights.size() != m)
    throw UsageError("--lambda and --weights need exactly m entries");
  const auto pres = cyclic_pmstructure(data);
  const auto rep = cyclic_pm_representation(data, data.field.parse(s_text));
  Json out = document("pmstructure", data.field);
  out["presentation"] = pmpresentation_to_json(pres);
  out["representation"] = pmrepresentation_to_json(rep);
  const auto report = pm_validate_representation(pres, rep);
  return emit(out, report.consistent(), describe(report));
}

int verify_pmstructure(const Options& o, const std::string& input) {
  const Json doc = load(input);
  const Field field = document_field(doc, o.field());
  const auto [pj, rj] = split_bundle(doc);
  const auto pres = pmpresentation_from_json(*pj, field, "$.presentation");
  IdentityReport report = pm_check_consistency(pres);
  report.families.push_back(pm_check_K_central(pres));
  std::mt19937_64 rng(o.seed);
  report.families.push_back(pm_sampled_associativity(pres, rng, o.samples, 2));
  if (rj)
    for (auto& f :
         pm_validate_representation(pres, pmrepresentation_from_json(*rj, pres, field, "$.representation")).families)
      report.families.push_back(f);
  Json out = document("pmstructure-report", field);
  out["checks"] = report_to_json(report);
  return emit(out, report.consistent(), describe(report));
}

Json classification_json(const MultiplicityMatrix& a) {
  Json j;
  j["admissible"] = false;
  const auto c = classify(a);
  if (!c) return j;
  j["admissible"] = true;
  j["diagram"] = diagram_name(c->id);
  j["family"] = family_tag(c->id.family);
  if (c->id.k) j["k"] = c->id.k;
  j["transposed"] = c->id.transposed;
  j["m"] = c->dims.m;
  j["n"] = c->dims.n;
  return j;
}

int classify_matrix(const Options& o, const std::string& input) {
  const Json doc = load(input);
  const auto a = multiplicity_from_json(doc.is_object() && doc.contains("matrix") ? doc["matrix"] : doc, "$");
  Json out = document("diagram", o.field());
  out["matrix"] = multiplicity_to_json(a);
  const auto decomposition = is_decomposable(a);
  out["decomposable"] = decomposition.decomposable;
  out["classification"] = classification_json(a);
  const bool ok = out["classification"]["admissible"].get<bool>();
  return emit(out, ok, ok ? out["classification"]["diagram"].get<std::string>() : "not admissible");
}

int catalog_cmd(const Options& o, const std::string& family_text, std::size_t k) {
  DynkinFamily family;
  try {
    family = parse_family(family_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto entry = catalog(family, k);
  Json out = document("diagram", o.field());
  out["diagram"] = diagram_name({family, k, false});
  out["matrix"] = multiplicity_to_json(entry.matrix);
  out["m"] = entry.dims.m;
  out["n"] = entry.dims.n;
  const bool psd = is_positive_semidefinite(gram_matrix(entry.matrix));
  out["admissible"] = is_admissible(entry.matrix);
  out["gram_psd"] = psd;
  return emit(out, out["admissible"].get<bool>() && psd, out["diagram"].get<std::string>());
}

int poisson_check(const Options& o, const std::string& input, std::size_t n) {
  const Json doc = load(input);
  const Field field = document_field(doc, o.field());
  const auto pencil = pencil_from_json(doc, field, "$");
  const auto b1 = build_bracket(pencil.star, n);
  const auto b2 = build_bracket(pencil.circle, n);
  IdentityReport report;
  report.families = {jacobi_residual(b1), jacobi_residual(b2), poisson_compatibility(b1, b2)};
  report.families[0].identity = "Jacobi (first bracket)";
  report.families[1].identity = "Jacobi (second bracket)";
  Json out = document("poisson-report", field);
  out["dim"] = b1.dim();
  out["checks"] = report_to_json(report);
  return emit(out, report.consistent(), describe(report));
}

int extend_poly(const Options& o, const std::string& input, const std::string& q_text) {
  const Json doc = load(input);
  const Field field = document_field(doc, o.field());
  const auto pencil = pencil_from_json(doc, field, "$");
  const auto q = parse_list(q_text, field);
  if (q.size() < 2) throw UsageError("--q needs at least two coefficients");
  const auto product = polynomial_extension(pencil, q);
  const auto assoc = associator_residual(product);
  Json out = document("structure", field);
  out["structure"] = structure_to_json(product);
  out["checks"] = Json::array({residual_to_json(assoc)});
  return emit(out, assoc.vanishes, describe(assoc));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatible associative products: construction and verification"};
  app.set_version_flag("--version", std::string(kSchemaVersion));
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field_spec, "rational, cyclotomic:N or float:TOL")->capture_default_str();
  app.add_option("--seed", o.seed, "seed of the sampled checks")->capture_default_str();
  app.add_option("--samples", o.samples, "number of sampled triples")->capture_default_str();

  std::string input = "-";
  std::string s_text = "7", lambda_text, weight_text, q_text, family_text;
  std::size_t p = 2, k = 2, m = 2, n = 2;
  std::function<int()> run;

  auto with_input = [&](const char* name, const char* help, std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "JSON file, inline JSON, or - for stdin");
    sub->callback([&run, fn] { run = fn; });
    return sub;
  };
  with_input("verify-pencil", "check that a pair of products is compatible", [&] { return verify_pencil(o, input); });
  with_input("deform", "second product from {\"star\", \"r\"}", [&] { return deform(o, input); });
  with_input("extract-tensors", "structure tensors of a matrix presentation", [&] { return extract_tensors(o, input); });
  with_input("verify-mstructure", "check a one-block presentation and optional representation", [&] { return verify_mstructure(o, input); });
  with_input("build-comma", "presentation from commutative data {u, v, q}", [&] { return build_comma(o, input); });
  with_input("classify-comma", "classify commutative data {u, v, q}", [&] { return classify_comma(o, input); });
  with_input("verify-pmstructure", "check a block presentation and optional representation", [&] { return verify_pmstructure(o, input); });
  with_input("classify-matrix", "identify a matrix of multiplicities", [&] { return classify_matrix(o, input); });
  auto* poisson = with_input("poisson-check", "Jacobi and compatibility of the induced brackets", [&] { return poisson_check(o, input, n); });
  poisson->add_option("--n", n, "matrix size")->capture_default_str();
  auto* extend = with_input("extend-poly", "polynomial extension of a compatible pair", [&] { return extend_poly(o, input, q_text); });
  extend->add_option("--q", q_text, "coefficients q0,q1,...,qm")->required();

  auto* cyclic = app.add_subcommand("build-cyclic", "cyclic one-block structure and its representation");
  cyclic->add_option("--p", p, "number of generators")->capture_default_str();
  cyclic->add_option("--s", s_text, "scale of the diagonal matrix")->capture_default_str();
  cyclic->callback([&] { run = [&] { return build_cyclic(o, p, s_text); }; });

  auto* a2k1 = app.add_subcommand("build-a2k1", "cyclic block structure and its representation");
  a2k1->add_option("--k", k, "order of the root of unity")->capture_default_str();
  a2k1->add_option("--m", m, "number of blocks")->capture_default_str();
  a2k1->add_option("--lambda", lambda_text, "comma-separated lambda (default 2,3,...)");
  a2k1->add_option("--weights", weight_text, "comma-separated weights (default all 1)");
  a2k1->add_option("--s", s_text, "scale of the diagonal matrix")->capture_default_str();
  a2k1->callback([&] { run = [&] { return build_a2k1(o, k, m, lambda_text, weight_text, s_text); }; });

  auto* cat = app.add_subcommand("catalog", "matrix of multiplicities of an affine diagram");
  cat->add_option("family", family_text, "A1, A2k-1, D4, D2k, D2k-1, E6, E7 or E8")->required();
  cat->add_option("--k", k, "parameter of the series")->capture_default_str();
  cat->callback([&] { run = [&] { return catalog_cmd(o, family_text, k); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
