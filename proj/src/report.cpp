#include "kco/report.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>
#include <sstream>

#include "kco/operator_io.hpp"

namespace kco {

namespace {
using nlohmann::json;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream ss;
  ss << std::hex << h;
  return ss.str();
}

ReportDocument build_report(const KahlerCurvature& R, const ReportOptions& opt) {
  const int n = R.n();
  json j;
  j["format"] = "kco-report-v1";
  j["n"] = n;
  j["input_digest"] = fnv1a_hex(serialize_operator(R));
  j["seed"] = opt.seed;

  const Spectrum sp = spectrum(R);
  {
    json arr = json::array();
    for (Eigen::Index i = 0; i < sp.values.size(); ++i) arr.push_back(sp.values[i]);
    j["spectrum"] = std::move(arr);
  }

  const CurvatureDecomposition dec = decompose(R);
  j["norms"] = {{"norm_sq", R.norm_sq()},
                {"scal", dec.scal},
                {"ric0_norm_sq", dec.ric0_norm_sq},
                {"r_ring_norm_sq", dec.r_ring_norm_sq},
                {"r0_norm_sq", dec.r0_norm_sq},
                {"bochner_norm_sq", dec.bochner_norm_sq},
                {"hat_norm_sq", hat_norm_sq(R)}};

  const Eigen::MatrixXd ric = ricci(R);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> res(ric);
  const double ric_min = res.eigenvalues().minCoeff();
  const double ric_max = res.eigenvalues().maxCoeff();
  const bool einstein = dec.ric0_norm_sq <= 1e-18 * std::max(1.0, ric.squaredNorm());
  j["ricci"] = {{"min_eigenvalue", ric_min},
                {"max_eigenvalue", ric_max},
                {"einstein", einstein}};

  std::vector<std::string> warnings;

  const HodgeReport hr =
      hodge_report(sp, n, opt.kappa, opt.diameter, ric_min);

  json cond;
  cond["cpn_cohomology"] = {{"margin", hr.cpn_cohomology_margin},
                            {"satisfied", hr.cpn_cohomology_flag}};
  cond["ricci_proxy"] = {{"value", hr.ricci_proxy},
                         {"positive", hr.ricci_proxy > 0.0}};
  const TachibanaResult tach_strict = tachibana_condition(sp, n, true);
  const TachibanaResult tach = tachibana_condition(sp, n, false);
  cond["tachibana"] = {{"margin", tach.margin},
                       {"satisfied", tach.satisfied},
                       {"satisfied_strict", tach_strict.satisfied},
                       {"boundary", tach.boundary},
                       {"below_stated_range", tach.below_stated_range}};
  if (tach.boundary) warnings.push_back("tachibana condition margin is on the boundary");
  j["conditions"] = std::move(cond);

  {
    json table = json::array();
    for (const auto& e : hr.entries) {
      json row = {{"p", e.p},       {"q", e.q},
                  {"status", to_string(e.status)},
                  {"route", e.route},
                  {"margin", e.margin},
                  {"boundary", e.boundary}};
      if (e.binomial_cap) row["binomial_cap"] = *e.binomial_cap;
      if (e.exponent_argument) row["exponent_argument"] = *e.exponent_argument;
      table.push_back(std::move(row));
      if (e.boundary && e.p + e.q <= n) {
        warnings.push_back("hodge condition at (" + std::to_string(e.p) + "," +
                           std::to_string(e.q) + ") is on the boundary");
      }
    }
    j["hodge"] = std::move(table);
  }

  if (n == 2) {
    const auto iso = isotropic_curvatures_n2(R);
    j["isotropic_n2"] = {{"r1313", iso.r1313},
                         {"r1414", iso.r1414},
                         {"r2323", iso.r2323},
                         {"r2424", iso.r2424},
                         {"r1234", iso.r1234},
                         {"combinations", iso.combinations},
                         {"min_isotropic", iso.min_isotropic}};
  }

  const double mob = min_orthogonal_bisectional(R, opt.trials, opt.seed);
  j["sampled_min_orthogonal_bisectional"] = {{"value", mob},
                                             {"trials", opt.trials}};
  warnings.push_back(
      "sampled bisectional minimum is a heuristic upper bound on the true "
      "minimum");
  if (opt.kappa && opt.diameter) {
    warnings.push_back(
        "dimension estimate reports the binomial cap and exponent argument "
        "only; the multiplicative constant C(n, kappa D^2) is not computed");
  }
  j["warnings"] = warnings;

  ReportDocument doc;
  doc.json_text = j.dump(2) + "\n";

  std::ostringstream t;
  t << "kahler curvature operator report (n = " << n << ")\n";
  t << "  input digest   : " << j["input_digest"].get<std::string>() << "\n";
  t << "  spectrum       :";
  for (Eigen::Index i = 0; i < sp.values.size(); ++i) t << " " << sp.values[i];
  t << "\n";
  t << "  scal           : " << dec.scal << "\n";
  t << "  |Ric0|^2       : " << dec.ric0_norm_sq << (einstein ? "  (Einstein)" : "")
    << "\n";
  t << "  |Rring|^2      : " << dec.r_ring_norm_sq << "\n";
  t << "  |B|^2          : " << dec.bochner_norm_sq << "\n";
  t << "  |R^u|^2        : " << j["norms"]["hat_norm_sq"].get<double>() << "\n";
  t << "  cpn cohomology : margin " << hr.cpn_cohomology_margin << " -> "
    << (hr.cpn_cohomology_flag ? "satisfied" : "not satisfied") << "\n";
  t << "  ricci proxy    : " << hr.ricci_proxy
    << (hr.ricci_proxy > 0 ? " (positive)" : "")
    << "  operator Ricci min " << ric_min << "\n";
  t << "  tachibana      : margin " << tach.margin << " -> "
    << (tach.satisfied ? "satisfied" : "not satisfied")
    << (tach.below_stated_range ? " [stated for n >= 4]" : "") << "\n";
  t << "  hodge statuses (p rows, q cols):\n";
  for (int p = 0; p <= n; ++p) {
    t << "    ";
    for (int q = 0; q <= n; ++q) {
      const auto& e = hr.at(p, q);
      const char* s = to_string(e.status);
      t << s[0] << s[1];  // two-letter code
      t << " ";
    }
    t << "\n";
  }
  t << "  (VA vanishes, EQ equals one, PA parallel only, NO no conclusion)\n";
  t << "  sampled min orthogonal bisectional: " << mob << " (" << opt.trials
    << " trials, heuristic)\n";
  if (n == 2) {
    const auto iso = isotropic_curvatures_n2(R);
    t << "  isotropic (n=2): min over frames " << iso.min_isotropic
      << ", components " << iso.r1313 << " " << iso.r1414 << " " << iso.r2323
      << " " << iso.r2424 << ", r1234 " << iso.r1234 << "\n";
  }
  doc.text = t.str();
  return doc;
}

}  // namespace kco
