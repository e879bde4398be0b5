#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kco/bochner.hpp"

namespace kco {

struct ReportOptions {
  std::optional<double> kappa;     // <= 0
  std::optional<double> diameter;  // > 0, requires kappa
  std::uint64_t seed = 1;
  int trials = 2000;  // bisectional sampling budget
};

// Deterministic for a fixed (operator, options) pair: all randomness is
// drawn from the seed.
struct ReportDocument {
  std::string json_text;
  std::string text;
};

ReportDocument build_report(const KahlerCurvature& R, const ReportOptions& opt);

// FNV-1a 64-bit digest (hex) used to identify report inputs.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace kco
