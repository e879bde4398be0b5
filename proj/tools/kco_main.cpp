#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "kco/bochner.hpp"
#include "kco/characters.hpp"
#include "kco/operator_io.hpp"
#include "kco/report.hpp"
#include "kco/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int cmd_spectrum(const std::string& input, bool json_out) {
  const kco::KahlerCurvature R = kco::load_operator(input);
  const kco::Spectrum sp = kco::spectrum(R);
  if (json_out) {
    std::cout << "{\"n\": " << R.n() << ", \"spectrum\": [";
    for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << sp.values[i];
    }
    std::cout << "]}\n";
  } else {
    std::cout << "n = " << R.n() << "\nspectrum:";
    for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
      std::cout << " " << sp.values[i];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_report(const std::string& input, const std::string& out_path,
               bool json_out, std::optional<double> kappa,
               std::optional<double> diameter, std::uint64_t seed, int trials) {
  if (kappa && *kappa > 0) {
    std::cerr << "error: --kappa must be <= 0\n";
    return kExitUsage;
  }
  if (diameter && !kappa) {
    std::cerr << "error: --diameter requires --kappa\n";
    return kExitUsage;
  }
  if (diameter && *diameter <= 0) {
    std::cerr << "error: --diameter must be positive\n";
    return kExitUsage;
  }
  const kco::KahlerCurvature R = kco::load_operator(input);
  kco::ReportOptions opt;
  opt.kappa = kappa;
  opt.diameter = diameter;
  opt.seed = seed;
  opt.trials = trials;
  const kco::ReportDocument doc = kco::build_report(R, opt);
  const std::string& payload = json_out ? doc.json_text : doc.text;
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open '" << out_path << "'\n";
      return kExitUsage;
    }
    f << payload;
  }
  return kExitOk;
}

int cmd_model(const std::string& name, int n, int k, double epsilon,
              std::uint64_t seed, const std::string& out,
              const std::string& repr_name) {
  kco::OperatorRepresentation repr =
      repr_name == "u_operator" ? kco::OperatorRepresentation::UOperator
                                : kco::OperatorRepresentation::HermitianSym2;
  kco::OperatorMetadata meta;
  meta.text["name"] = name;
  kco::KahlerCurvature R;
  if (name == "cpn") {
    R = kco::model_cpn(n);
  } else if (name == "cpk_flat") {
    R = kco::model_cp_k_flat(n, k);
    meta.numbers["k"] = k;
  } else if (name == "example_2pos") {
    R = kco::model_n2_from_mu(6, 0, 0, 6 + 2 * epsilon, -epsilon, -epsilon);
    meta.numbers["epsilon"] = epsilon;
  } else if (name == "example_optimality") {
    R = kco::model_n2_from_mu(3, 0, 0, -1, 1, 3);
  } else if (name == "random") {
    R = kco::random_kahler(n, seed);
    meta.numbers["seed"] = static_cast<double>(seed);
  } else if (name == "zero") {
    R = kco::KahlerCurvature::from_hermitian(
        n, Eigen::MatrixXcd::Zero(kco::sym_pair_dim(n), kco::sym_pair_dim(n)));
  } else {
    std::cerr << "error: unknown model '" << name
              << "' (cpn, cpk_flat, example_2pos, example_optimality, random,"
                 " zero)\n";
    return kExitUsage;
  }
  kco::save_operator(R, out, repr, meta);
  std::cout << "wrote " << out << " (n = " << R.n() << ")\n";
  return kExitOk;
}

int cmd_verify(int nmax, std::uint64_t seed) {
  const auto results = kco::run_verification(nmax, seed);
  std::size_t keyw = 0;
  for (const auto& r : results) keyw = std::max(keyw, r.key.size());
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.pass;
    std::printf("%-4s %-*s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL",
                static_cast<int>(keyw), r.key.c_str(), r.seconds,
                r.detail.c_str());
  }
  std::printf("%s (nmax = %d)\n", ok ? "all checks passed" : "FAILURES present",
              nmax);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_characters(int n, int p, int q, int samples, std::uint64_t seed,
                   double tol) {
  if (p < 0 || p > n || q < 0 || q > n) {
    std::cerr << "error: need 0 <= p,q <= n\n";
    return kExitUsage;
  }
  bool ok = true;
  for (int k = 0; k <= std::min(p, q); ++k) {
    const auto sig = kco::chi_pq_k_signature(n, p, q, k);
    double worst = 0.0;
    for (int t = 0; t < samples; ++t) {
      const kco::TorusPoint tp =
          kco::random_torus_point(n, kco::Rng::derive(seed, k * 100000 + t));
      const kco::cplx lhs = kco::chi_pq_k(tp, p, q, k);
      const kco::cplx rhs =
          sig ? kco::weyl_character(*sig, tp) : kco::cplx(0.0, 0.0);
      worst = std::max(worst,
                       std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    ok = ok && worst <= tol;
    std::cout << "(p,q,k) = (" << p << "," << q << "," << k
              << ")  dim = " << kco::dim_pqk(n, p, q, k) << "  signature = ";
    if (sig) {
      std::cout << "[";
      for (std::size_t i = 0; i < sig->size(); ++i) {
        if (i) std::cout << ",";
        std::cout << (*sig)[i];
      }
      std::cout << "]";
    } else {
      std::cout << "(zero module)";
    }
    std::cout << "  weyl-vs-telescoped rel residual = " << worst << "\n";
  }
  double worst_tau = 0.0;
  for (int t = 0; t < samples; ++t) {
    const kco::TorusPoint tp =
        kco::random_torus_point(n, kco::Rng::derive(seed, 999000 + t));
    for (int a = 0; a <= n + 1; ++a) {
      for (int b = a + 1; b <= n + 1; ++b) {
        worst_tau = std::max(worst_tau, kco::verify_tau_identity(tp, a, b));
      }
    }
  }
  ok = ok && worst_tau <= tol;
  std::cout << "tau two-formula residual (all 0 <= a < b <= n+1): " << worst_tau
            << "\n";
  std::cout << (ok ? "PASS" : "FAIL") << " at tolerance " << tol << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kco: algebraic Kahler curvature operators - spectra, decompositions,"
      " positivity conditions and the numerical identity suite"};
  app.require_subcommand(1);

  std::string input, out, name, repr_name = "hermitian_sym2";
  bool json_out = false;
  int n = 2, k = 0, p = 0, q = 0, nmax = 4, trials = 2000, samples = 50;
  double epsilon = 1.0, tol = 1e-6;
  std::uint64_t seed = 1;
  std::optional<double> kappa, diameter;

  auto* sp = app.add_subcommand("spectrum", "eigenvalues of an operator file");
  sp->add_option("--input", input, "kco-v1 operator file")->required();
  sp->add_flag("--json", json_out, "machine-readable output");

  auto* rp = app.add_subcommand("report", "full condition report");
  rp->add_option("--input", input, "kco-v1 operator file")->required();
  rp->add_option("--out", out, "write to file instead of stdout");
  rp->add_flag("--json", json_out, "machine-readable output");
  rp->add_option("--kappa", kappa, "lower bound level (<= 0)");
  rp->add_option("--diameter", diameter, "diameter bound (> 0)");
  rp->add_option("--seed", seed, "sampling seed");
  rp->add_option("--trials", trials, "bisectional sampling trials");

  auto* md = app.add_subcommand("model", "write a model operator file");
  md->add_option("--name", name,
                 "cpn | cpk_flat | example_2pos | example_optimality | random"
                 " | zero")
      ->required();
  md->add_option("--n", n, "complex dimension");
  md->add_option("--k", k, "projective factor dimension (cpk_flat)");
  md->add_option("--epsilon", epsilon, "family parameter (example_2pos)");
  md->add_option("--seed", seed, "seed (random)");
  md->add_option("--out", out, "output path")->required();
  md->add_option("--representation", repr_name,
                 "hermitian_sym2 (default) or u_operator");

  auto* vf = app.add_subcommand("verify", "run the numerical identity suite");
  vf->add_option("--nmax", nmax, "largest complex dimension (default 4)");
  vf->add_option("--seed", seed, "master seed");

  auto* ch = app.add_subcommand("characters", "character identities at (n,p,q)");
  ch->add_option("--n", n, "complex dimension")->required();
  ch->add_option("--p", p, "holomorphic degree")->required();
  ch->add_option("--q", q, "antiholomorphic degree")->required();
  ch->add_option("--samples", samples, "torus points per identity");
  ch->add_option("--seed", seed, "sampling seed");
  ch->add_option("--tol", tol, "pass/fail tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(input, json_out);
    if (rp->parsed()) {
      return cmd_report(input, out, json_out, kappa, diameter, seed, trials);
    }
    if (md->parsed()) {
      return cmd_model(name, n, k, epsilon, seed, out, repr_name);
    }
    if (vf->parsed()) return cmd_verify(nmax, seed);
    if (ch->parsed()) {
      return cmd_characters(n, p, q, samples, seed, tol);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
