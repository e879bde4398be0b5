#pragma once

#include <cstdint>
#include <vector>

namespace kco {

// C(n, k); 0 outside the valid range.
long long binomial(int n, int k);

// All strictly increasing k-subsets of {1, ..., n} in lexicographic order.
const std::vector<std::vector<int>>& subsets_lex(int n, int k);

// Lexicographic rank of a strictly increasing subset of {1, ..., n}.
long long subset_rank(int n, const std::vector<int>& s);

// Merges two strictly increasing sequences. Returns the sign of the
// permutation sorting their concatenation, or 0 on a repeated index.
// `merged` (optional) receives the sorted union.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b,
               std::vector<int>* merged = nullptr);

}  // namespace kco
