#include "kco/multiindex.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace kco {

long long binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

namespace {

std::vector<std::vector<int>> build_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    // advance to the lexicographic successor
    int t = k - 1;
    while (t >= 0 && cur[t] == n - (k - 1 - t)) --t;
    if (t < 0) break;
    ++cur[t];
    for (int s = t + 1; s < k; ++s) cur[s] = cur[s - 1] + 1;
  }
  return out;
}

}  // namespace

const std::vector<std::vector<int>>& subsets_lex(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, build_subsets(n, k)).first;
  }
  return it->second;
}

long long subset_rank(int n, const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  long long rank = 0;
  int prev = 0;
  for (int t = 0; t < k; ++t) {
    if (s[t] <= prev || s[t] > n) {
      throw std::invalid_argument("subset_rank: indices must be strictly increasing in 1..n");
    }
    for (int v = prev + 1; v < s[t]; ++v) {
      rank += binomial(n - v, k - 1 - t);
    }
    prev = s[t];
  }
  return rank;
}

int merge_sign(const std::vector<int>& a, const std::vector<int>& b,
               std::vector<int>* merged) {
  std::size_t i = 0, j = 0;
  long long inversions = 0;
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining elements of a
      inversions += static_cast<long long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  if (merged) *merged = std::move(out);
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace kco
