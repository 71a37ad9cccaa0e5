#include <doctest.h>

#include <string>

#include "compat/dynkin.hpp"
#include "compat/json_io.hpp"
#include "compat/mstructure.hpp"
#include "compat/pencil.hpp"
#include "compat/pmstructure.hpp"
#include "compat/poisson.hpp"
#include "support.hpp"

using namespace compat;

namespace {

const Field Q = Field::rationals();

// Serializes, reparses the text, and reads the value back.
template <class ToJson, class FromJson>
auto text_round_trip(const ToJson& to, const FromJson& from) {
  return from(Json::parse(to().dump()));
}

std::string schema_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("fields and scalars") {
    for (const Field& f : {Field::rationals(), Field::cyclotomic(5), Field::floating(1e-8)}) {
      const Field back = field_from_json(Json::parse(field_to_json(f).dump()));
      CHECK(back.describe() == f.describe());
    }
    const Field c3 = Field::cyclotomic(3);
    const Scalar z = c3.root() * Scalar::fraction(-3, 2) + Scalar::fraction(1, 4);
    CHECK(scalar_from_json(scalar_to_json(z), c3, "x") == z);
    CHECK(scalar_from_json(Json(7), Q, "x") == Scalar(7));
    CHECK(scalar_to_json(Scalar::fraction(-6, 4)) == Json("-3/2"));
    const auto doc = document("pencil", c3);
    CHECK(doc["schema"] == kSchemaVersion);
    CHECK(doc["kind"] == "pencil");
    CHECK(document_field(doc, Q).describe() == c3.describe());
    CHECK(document_field(Json::object(), Q).describe() == Q.describe());
  }

  TEST_CASE("structure constants are sparse, sorted and 1-based") {
    const auto sc = matrix_algebra(2);
    const Json j = structure_to_json(sc);
    CHECK(j["dim"] == 4);
    CHECK(j["c"].size() == 8);
    CHECK(j["c"][0] == Json::parse(R"([1, 1, 1, "1"])"));
    for (std::size_t n = 1; n < j["c"].size(); ++n) {
      const auto& prev = j["c"][n - 1];
      const auto& cur = j["c"][n];
      CHECK(std::vector<long>{prev[0], prev[1], prev[2]} < std::vector<long>{cur[0], cur[1], cur[2]});
    }
    CHECK(text_round_trip([&] { return j; }, [](const Json& x) { return structure_from_json(x, Q, "sc"); }) == sc);
  }

  TEST_CASE("pencils and presentations") {
    const std::vector<Scalar> p{1, 3, -2}, q{2, -1, 5};
    const auto pen = diagonal_pencil(p, q, Scalar::fraction(1, 3));
    const auto pen2 = pencil_from_json(Json::parse(pencil_to_json(pen).dump()), Q, "pencil");
    CHECK(pen2.star == pen.star);
    CHECK(pen2.circle == pen.circle);

    const Field c3 = Field::cyclotomic(3);
    const auto rep = cyclic_representation(2, Scalar(7), c3);
    const auto rep2 = presentation_from_json(Json::parse(presentation_to_json(rep).dump()), c3, "rep");
    CHECK(rep2.n == rep.n);
    CHECK(rep2.a == rep.a);
    CHECK(rep2.b == rep.b);
    CHECK(rep2.c == rep.c);

    for (bool actions : {false, true}) {
      auto m = cyclic_mstructure(2, c3);
      if (actions) m = with_centrality_actions(m);
      const auto back = mpresentation_from_json(Json::parse(mpresentation_to_json(m).dump()), c3, "m");
      CHECK(back.has_c_actions == m.has_c_actions);
      CHECK(back.tensors.phi == m.tensors.phi);
      CHECK(back.tensors.psi == m.tensors.psi);
      CHECK(back.tensors.mu == m.tensors.mu);
      CHECK(back.tensors.lambda == m.tensors.lambda);
      CHECK(back.tensors.t == m.tensors.t);
      if (actions) {
        CHECK(back.act_a == m.act_a);
        CHECK(back.act_b == m.act_b);
        CHECK(back.unit_a == m.unit_a);
        CHECK(back.unit_b == m.unit_b);
      }
    }
  }

  TEST_CASE("PM presentation with representation") {
    CyclicPMData d;
    d.k = 2;
    d.field = Field::cyclotomic(2);
    d.lambda = {2, 3};
    d.weights = {1, Scalar::fraction(2, 3)};
    const auto pres = cyclic_pmstructure(d);
    const auto rep = cyclic_pm_representation(d, Scalar(7));
    const auto pres2 = pmpresentation_from_json(Json::parse(pmpresentation_to_json(pres).dump()), d.field, "pm");
    CHECK(pres2 == pres);
    CHECK(pres2.has_c_actions() == pres.has_c_actions());
    const auto rep2 = pmrepresentation_from_json(Json::parse(pmrepresentation_to_json(rep).dump()), pres2, d.field, "rep");
    CHECK(rep2.dims == rep.dims);
    CHECK(rep2.c == rep.c);
    CHECK(rep2.a == rep.a);
    CHECK(rep2.b == rep.b);
    CHECK(testing::all_vanish(pm_validate_representation(pres2, rep2)));
  }

  TEST_CASE("commutative data, multiplicity matrices and brackets") {
    CommutativeData cd{{1, 2}, {0, 0}, Matrix::from_rows({{0, -1}, {3, 0}})};
    const auto cd2 = commutative_from_json(Json::parse(commutative_to_json(cd).dump()), Q, "data");
    CHECK(cd2.u == cd.u);
    CHECK(cd2.v == cd.v);
    CHECK(cd2.q == cd.q);

    const auto e6 = catalog(DynkinFamily::e6, 0).matrix;
    CHECK(multiplicity_from_json(Json::parse(multiplicity_to_json(e6).dump()), "a") == e6);

    const auto b = build_bracket(matrix_algebra(1), 2);
    const Json bj = bracket_to_json(b);
    CHECK(bj["dim"] == 4);
    for (const auto& e : bj["gamma"]) CHECK(e[1].get<long>() < e[2].get<long>());
  }

  TEST_CASE("residual reports") {
    Residual ok;
    ok.identity = "x";
    CHECK_FALSE(residual_to_json(ok).contains("witness"));
    Residual bad;
    bad.identity = "y";
    bad.absorb(Scalar(2), {0, 3});
    const Json j = residual_to_json(bad);
    CHECK(j["vanishes"] == false);
    CHECK(j["witness"] == Json::parse("[1, 4]"));
    IdentityReport r;
    r.families = {ok, bad};
    CHECK(report_to_json(r).size() == 2);
  }

  TEST_CASE("schema errors carry a path") {
    CHECK(schema_message([] { structure_from_json(Json::parse(R"({"dim": 2})"), Q, "sc"); }) ==
          "sc: missing key 'c'");
    CHECK(schema_message([] { structure_from_json(Json::parse(R"({"dim": 2, "c": [[1, 3, 1, "1"]]})"), Q, "sc"); }) ==
          "sc.c[0][1]: index out of range 1..2");
    CHECK(schema_message([] { structure_from_json(Json::parse(R"({"dim": 2, "c": [[1, 1, "1"]]})"), Q, "sc"); }) ==
          "sc.c[0]: expected 3 indices and a scalar");
    CHECK(schema_message([] { structure_from_json(Json::parse(R"({"dim": -1, "c": []})"), Q, "sc"); }) ==
          "sc.dim: expected a nonnegative integer");
    CHECK(schema_message([] { field_from_json(Json::parse(R"({"kind": "p-adic"})")); }) ==
          "field.kind: expected \"cyclotomic\" or \"float\"");
    CHECK(schema_message([] { matrix_from_json(Json::parse(R"([["1", "2"], ["3"]])"), Q, "m"); }) ==
          "m: ragged matrix");
    CHECK_FALSE(schema_message([] { scalar_from_json(Json("1/0"), Q, "s"); }).empty());
    CHECK_FALSE(schema_message([] { scalar_from_json(Json(true), Q, "s"); }).empty());
    CHECK_FALSE(schema_message([] {
                  pencil_from_json(Json::parse(R"({"star": {"dim": 1, "c": []}, "circle": {"dim": 2, "c": []}})"), Q,
                                   "p");
                }).empty());
  }
}
