#pragma once

#include <map>
#include <string>

#include "kco/curvature.hpp"

namespace kco {

// File format "kco-v1". Two payloads:
//   representation "hermitian_sym2": entries {i,k,j,l,re,im} of the Hermitian
//     form on Sym^2 C^n, 1-based indices with i <= k and j <= l; both
//     triangles are written, missing entries are zero.
//   representation "u_operator": flat row-major real n^2 x n^2 matrix over
//     the u(n) basis in the order Rij_lex, Iij_lex, Iii_asc; validated for
//     symmetry and the first Bianchi identity on load.
enum class OperatorRepresentation { HermitianSym2, UOperator };

struct OperatorMetadata {
  std::map<std::string, std::string> text;    // e.g. name
  std::map<std::string, double> numbers;      // e.g. epsilon, mu parameters
};

KahlerCurvature load_operator(const std::string& path);
KahlerCurvature parse_operator(const std::string& json_text);

void save_operator(const KahlerCurvature& R, const std::string& path,
                   OperatorRepresentation repr = OperatorRepresentation::HermitianSym2,
                   const OperatorMetadata& meta = {});
std::string serialize_operator(const KahlerCurvature& R,
                               OperatorRepresentation repr = OperatorRepresentation::HermitianSym2,
                               const OperatorMetadata& meta = {});

}  // namespace kco
