#include <doctest.h>

#include "kco/multiindex.hpp"

using namespace kco;

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
}

TEST_CASE("subsets are lexicographic and ranks invert them") {
  const auto& s = subsets_lex(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == std::vector<int>{1, 2});
  CHECK(s[1] == std::vector<int>{1, 3});
  CHECK(s.back() == std::vector<int>{3, 4});
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(subset_rank(4, s[i]) == static_cast<long long>(i));
  }
  CHECK(subsets_lex(3, 0).size() == 1);
  CHECK(subsets_lex(3, 0).front().empty());
}

TEST_CASE("merge signs count transpositions") {
  std::vector<int> m;
  CHECK(merge_sign({1, 3}, {2}, &m) == -1);
  CHECK(m == std::vector<int>{1, 2, 3});
  CHECK(merge_sign({1, 2}, {3, 4}, &m) == 1);
  CHECK(merge_sign({2}, {1}, &m) == -1);
  CHECK(merge_sign({1, 2}, {2, 3}) == 0);
  CHECK(merge_sign({}, {5}, &m) == 1);
}
