#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>

#include "kco/operator_io.hpp"
#include "kco/report.hpp"

using namespace kco;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("kco_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("operator save/load round trips") {
  TempDir tmp;
  const std::vector<KahlerCurvature> corpus = {
      model_cpn(3), model_cp_k_flat(4, 2), model_n2_from_mu(6, 0, 0, 8, -1, -1),
      random_kahler(3, 5150)};
  int idx = 0;
  for (const auto& R : corpus) {
    for (auto repr : {OperatorRepresentation::HermitianSym2,
                      OperatorRepresentation::UOperator}) {
      const std::string p =
          (tmp.path / ("op" + std::to_string(idx++) + ".json")).string();
      OperatorMetadata meta;
      meta.text["name"] = "fixture";
      save_operator(R, p, repr, meta);
      const KahlerCurvature back = load_operator(p);
      CHECK((back.operator_matrix() - R.operator_matrix())
                .cwiseAbs()
                .maxCoeff() < 1e-12 * std::max(1.0, R.norm_sq()));
      CHECK((back.hermitian() - R.hermitian()).cwiseAbs().maxCoeff() <
            1e-12 * std::max(1.0, R.hermitian().cwiseAbs().maxCoeff()));
    }
  }

  // spectrum survives the round trip
  const std::string p = (tmp.path / "cpn3.json").string();
  save_operator(model_cpn(3), p);
  const Spectrum sp = spectrum(load_operator(p));
  for (int i = 0; i < 8; ++i) CHECK(sp.values[i] == doctest::Approx(2.0));
  CHECK(sp.values[8] == doctest::Approx(8.0));
}

TEST_CASE("schema and validation errors") {
  CHECK_THROWS_AS(parse_operator("not json"), SchemaError);
  CHECK_THROWS_AS(parse_operator("{}"), SchemaError);
  CHECK_THROWS_AS(
      parse_operator(R"({"format":"kco-v2","n":2,"representation":"u_operator","matrix":[]})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_operator(R"({"format":"kco-v1","n":0,"representation":"u_operator","matrix":[]})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_operator(R"({"format":"kco-v1","n":2,"representation":"nope"})"),
      SchemaError);

  // truncated matrix
  CHECK_THROWS_AS(
      parse_operator(R"({"format":"kco-v1","n":2,"representation":"u_operator","matrix":[1,2,3]})"),
      SizeMismatch);

  // asymmetric operator payload
  {
    std::string m = R"({"format":"kco-v1","n":2,"representation":"u_operator","matrix":[)";
    for (int i = 0; i < 16; ++i) m += (i == 1 ? "1," : "0,");
    m.back() = ']';
    m += "}";
    CHECK_THROWS_AS(parse_operator(m), NonHermitianInput);
  }

  // symmetric but Bianchi violating
  {
    std::string m = R"({"format":"kco-v1","n":2,"representation":"u_operator","matrix":[)";
    for (int i = 0; i < 16; ++i) m += (i == 0 ? "1," : "0,");
    m.back() = ']';
    m += "}";
    bool caught = false;
    try {
      parse_operator(m);
    } catch (const BianchiViolation& e) {
      caught = e.defect > 0;
    }
    CHECK(caught);
  }

  // duplicate hermitian entry
  CHECK_THROWS_AS(
      parse_operator(
          R"({"format":"kco-v1","n":2,"representation":"hermitian_sym2",
              "entries":[{"i":1,"k":1,"j":1,"l":1,"re":1,"im":0},
                         {"i":1,"k":1,"j":1,"l":1,"re":1,"im":0}]})"),
      SchemaError);

  // non-Hermitian entries
  CHECK_THROWS_AS(
      parse_operator(
          R"({"format":"kco-v1","n":2,"representation":"hermitian_sym2",
              "entries":[{"i":1,"k":1,"j":1,"l":2,"re":1,"im":0}]})"),
      NonHermitianInput);
}

TEST_CASE("reports are deterministic and carry the expected content") {
  const KahlerCurvature R = model_cpn(2);
  ReportOptions opt;
  opt.seed = 99;
  opt.trials = 300;
  const ReportDocument a = build_report(R, opt);
  const ReportDocument b = build_report(R, opt);
  CHECK(a.json_text == b.json_text);
  CHECK(a.text == b.text);

  const auto j = nlohmann::json::parse(a.json_text);
  CHECK(j["format"] == "kco-report-v1");
  CHECK(j["n"] == 2);
  CHECK(j["conditions"]["cpn_cohomology"]["satisfied"] == true);
  CHECK(j["conditions"]["tachibana"]["satisfied"] == true);
  CHECK(j["norms"]["scal"].get<double>() == doctest::Approx(24.0));
  CHECK(j["ricci"]["einstein"] == true);
  CHECK(j["sampled_min_orthogonal_bisectional"]["value"].get<double>() > 0.0);

  bool h11_equals_one = false;
  for (const auto& row : j["hodge"]) {
    if (row["p"] == 1 && row["q"] == 1) {
      h11_equals_one = row["status"] == "EQUALS_ONE";
    }
  }
  CHECK(h11_equals_one);

  // kappa/diameter variant carries the estimate fields and the footnote
  ReportOptions opt2 = opt;
  opt2.kappa = -1.0;
  opt2.diameter = 1.0;
  const auto j2 =
      nlohmann::json::parse(build_report(model_n2_from_mu(6, 0, 0, 8, -1, -1),
                                         opt2)
                                .json_text);
  bool found_estimate = false;
  for (const auto& row : j2["hodge"]) {
    if (row.contains("binomial_cap")) found_estimate = true;
  }
  CHECK(found_estimate);
  bool found_note = false;
  for (const auto& w : j2["warnings"]) {
    if (w.get<std::string>().find("not computed") != std::string::npos) {
      found_note = true;
    }
  }
  CHECK(found_note);
}
