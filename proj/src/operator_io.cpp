#include "kco/operator_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace kco {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "kco-v1";
constexpr const char* kBasisOrder = "Rij_lex,Iij_lex,Iii_asc";

json require_field(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) throw SchemaError(field, "missing required field");
  return *it;
}

}  // namespace

std::string serialize_operator(const KahlerCurvature& R,
                               OperatorRepresentation repr,
                               const OperatorMetadata& meta) {
  json j;
  j["format"] = kFormat;
  j["n"] = R.n();
  j["basis_order"] = kBasisOrder;
  if (repr == OperatorRepresentation::HermitianSym2) {
    j["representation"] = "hermitian_sym2";
    json entries = json::array();
    const int n = R.n();
    const auto& H = R.hermitian();
    for (int i = 1; i <= n; ++i) {
      for (int k = i; k <= n; ++k) {
        for (int jj = 1; jj <= n; ++jj) {
          for (int l = jj; l <= n; ++l) {
            const cplx v = H(sym_pair_rank(n, i - 1, k - 1),
                             sym_pair_rank(n, jj - 1, l - 1));
            if (v == cplx(0.0, 0.0)) continue;
            entries.push_back({{"i", i},
                               {"k", k},
                               {"j", jj},
                               {"l", l},
                               {"re", v.real()},
                               {"im", v.imag()}});
          }
        }
      }
    }
    j["entries"] = std::move(entries);
  } else {
    j["representation"] = "u_operator";
    const auto& M = R.operator_matrix();
    json mat = json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
      for (Eigen::Index c = 0; c < M.cols(); ++c) mat.push_back(M(r, c));
    }
    j["matrix"] = std::move(mat);
  }
  if (!meta.text.empty() || !meta.numbers.empty()) {
    json m = json::object();
    for (const auto& [k, v] : meta.text) m[k] = v;
    for (const auto& [k, v] : meta.numbers) m[k] = v;
    j["metadata"] = std::move(m);
  }
  return j.dump(2) + "\n";
}

void save_operator(const KahlerCurvature& R, const std::string& path,
                   OperatorRepresentation repr, const OperatorMetadata& meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SizeMismatch("save_operator: cannot open '" + path + "'");
  out << serialize_operator(R, repr, meta);
}

KahlerCurvature parse_operator(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("<document>", e.what());
  }
  if (!j.is_object()) throw SchemaError("<document>", "expected a JSON object");

  const json fmt = require_field(j, "format");
  if (!fmt.is_string() || fmt.get<std::string>() != kFormat) {
    throw SchemaError("format", "expected \"" + std::string(kFormat) + "\"");
  }
  const json jn = require_field(j, "n");
  if (!jn.is_number_integer() || jn.get<int>() < 1) {
    throw SchemaError("n", "expected a positive integer");
  }
  const int n = jn.get<int>();
  if (auto it = j.find("basis_order"); it != j.end()) {
    if (!it->is_string() || it->get<std::string>() != kBasisOrder) {
      throw SchemaError("basis_order", "expected \"" + std::string(kBasisOrder) + "\"");
    }
  }
  const json repr = require_field(j, "representation");
  if (!repr.is_string()) throw SchemaError("representation", "expected a string");
  const std::string r = repr.get<std::string>();

  if (r == "hermitian_sym2") {
    const json entries = require_field(j, "entries");
    if (!entries.is_array()) throw SchemaError("entries", "expected an array");
    const int N = sym_pair_dim(n);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(N, N);
    Eigen::MatrixXd seen = Eigen::MatrixXd::Zero(N, N);
    int pos = 0;
    for (const auto& e : entries) {
      const std::string where = "entries[" + std::to_string(pos++) + "]";
      if (!e.is_object()) throw SchemaError(where, "expected an object");
      for (const char* f : {"i", "k", "j", "l"}) {
        if (!e.contains(f) || !e[f].is_number_integer()) {
          throw SchemaError(where + "." + f, "expected an integer");
        }
      }
      const int i = e["i"].get<int>(), k = e["k"].get<int>();
      const int jj = e["j"].get<int>(), l = e["l"].get<int>();
      if (i < 1 || k < i || k > n) throw SchemaError(where, "need 1 <= i <= k <= n");
      if (jj < 1 || l < jj || l > n) throw SchemaError(where, "need 1 <= j <= l <= n");
      for (const char* f : {"re", "im"}) {
        if (!e.contains(f) || !e[f].is_number()) {
          throw SchemaError(where + "." + f, "expected a number");
        }
      }
      const int row = sym_pair_rank(n, i - 1, k - 1);
      const int col = sym_pair_rank(n, jj - 1, l - 1);
      if (seen(row, col) != 0.0) throw SchemaError(where, "duplicate entry");
      seen(row, col) = 1.0;
      H(row, col) = cplx(e["re"].get<double>(), e["im"].get<double>());
    }
    return KahlerCurvature::from_hermitian(n, H);  // NonHermitianInput on bad data
  }

  if (r == "u_operator") {
    const json mat = require_field(j, "matrix");
    if (!mat.is_array()) throw SchemaError("matrix", "expected an array");
    const long long want = static_cast<long long>(n) * n * n * n;
    if (static_cast<long long>(mat.size()) != want) {
      throw SizeMismatch("matrix: expected " + std::to_string(want) +
                         " row-major entries, got " + std::to_string(mat.size()));
    }
    Eigen::MatrixXd M(n * n, n * n);
    long long pos = 0;
    for (const auto& v : mat) {
      if (!v.is_number()) throw SchemaError("matrix", "expected numbers");
      M(pos / (n * n), pos % (n * n)) = v.get<double>();
      ++pos;
    }
    return KahlerCurvature::from_operator_matrix(n, M);  // Bianchi validated
  }

  throw SchemaError("representation",
                    "expected \"hermitian_sym2\" or \"u_operator\"");
}

KahlerCurvature load_operator(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SizeMismatch("load_operator: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_operator(ss.str());
}

}  // namespace kco
