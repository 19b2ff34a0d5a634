#include <doctest.h>

#include <set>

#include "characters.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using namespace kmchar;

namespace {

std::vector<Int> coeffs(const QSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }
std::vector<Int> ints(std::vector<long> c) { return {c.begin(), c.end()}; }

std::vector<int> complement(int m, std::set<int> excluded) {
  std::set<int> ex;
  for (int e : excluded) ex.insert(((e % m) + m) % m);
  std::vector<int> out;
  for (int r = 0; r < m; ++r)
    if (!ex.count(r)) out.push_back(r);
  return out;
}

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("homogeneous specialization") {
  CHECK(coeffs(homogeneous_char({AlgebraLabel::A2_1, {3, 0, 0}}, 3)) == ints({1, 8, 44, 192}));
  CHECK(coeffs(homogeneous_char({AlgebraLabel::A1_1, {1, 0}}, 3)) == ints({1, 3, 4, 7}));
  CHECK_THROWS_AS(homogeneous_char({AlgebraLabel::A1_1, {0, 1}}, 3), Error);
  CHECK_THROWS_AS(homogeneous_char({AlgebraLabel::A2_2, {1, 1}}, 3), Error);
}

TEST_CASE("Weyl-Kac quotient against congruence products at small order") {
  const QSeries wk = wk_specialized_char({AlgebraLabel::A1_1, {0, 1}}, {1, 2}, 5);
  CHECK(coeffs(wk) == ints({1, 0, 1, 1, 1, 1}));
  CHECK(wk == product_char(AlgebraLabel::A1_1, 1, 0, 5));
  CHECK(coeffs(wk_specialized_char({AlgebraLabel::A1_1, {0, 1}}, {1, 2}, 30)) ==
        oracle::partition_counts(30, 12, {2, 3, 9, 10}));
}

TEST_CASE("characters reject bad input") {
  CHECK_THROWS_AS(wk_specialized_char({AlgebraLabel::A1_1, {0, 1}}, {0, 2}, 5), Error);
  CHECK_THROWS_AS(wk_specialized_char({AlgebraLabel::A1_1, {0, 1}}, {1, 2, 3}, 5), Error);
  CHECK_THROWS_AS(make_weight(AlgebraLabel::A1_1, {-1, 2}), Error);
  CHECK_THROWS_AS(product_spec_A1(2, 3), Error);
}

TEST_CASE("product specs") {
  CHECK(product_spec_A1(1, 0) == ProductSpec{{{12, {2, 3, 9, 10}, -1}}});
  CHECK(product_spec_A1(1, 1) == ProductSpec{{{12, {2, 10}, 1}, {12, complement(12, {0, 6, 2, -2, 4, -4}), -1}}});
  CHECK(product_spec_A1(2, 0) == ProductSpec{{{16, complement(16, {0, 8, 1, 15, 7, 9, 6, 10}), -1}}});
  CHECK(product_spec_A1(2, 0).factors[0].residues == std::vector<int>{2, 3, 4, 5, 11, 12, 13, 14});
  CHECK(product_spec_A1(4, 3) == ProductSpec{{{24, {4, 20}, 1}, {24, complement(24, {0, 12, 4, -4, 8, -8}), -1}}});
  CHECK(product_spec_A2(1, 0) == ProductSpec{{{6, {1, 5}, -1}, {12, {2, 3, 9, 10}, -1}}});
  for (int k = 1; k <= 6; ++k)
    for (int k0 = 0; k0 <= k; ++k0) {
      auto a2 = product_spec_A2(k, k0);
      REQUIRE_FALSE(a2.factors.empty());
      CHECK(a2.factors.front() == p_factor());
      a2.factors.erase(a2.factors.begin());
      CHECK(a2 == product_spec_A1(k, k0));
      CHECK(is_exceptional(k, k0) == (3 * k0 == 2 * k + 1));
    }
  CHECK(is_exceptional(1, 1));
  CHECK(is_exceptional(4, 3));
  CHECK_FALSE(is_exceptional(2, 1));
  // k = 0 leaves an empty product
  CHECK(product_spec_A1(0, 0).factors.empty());
}

TEST_CASE("exceptional product expands like its factors") {
  // k = 1, k0 = 1: prod_{n = +-2 mod 12} (1 - q^n) / prod_{n odd} (1 - q^n)
  const int N = 30;
  std::vector<std::pair<int, int>> plus;
  for (int n = 1; n <= N; ++n)
    if (n % 12 == 2 || n % 12 == 10) plus.push_back({n, 1});
  const auto expect = convolve(oracle::finite_product(plus, N), oracle::partition_counts(N, 2, {1}));
  CHECK(coeffs(product_char(AlgebraLabel::A1_1, 1, 1, N)) == expect);
  CHECK(coeffs(wk_specialized_char({AlgebraLabel::A1_1, {1, 0}}, {1, 2}, N)) == expect);
}

TEST_CASE("duality at order 40") {
  for (int k : {1, 3}) {
    const auto r = verify_duality(k, 40, 2);
    CHECK(r.ok());
    REQUIRE(r.entries.size() == static_cast<std::size_t>(k + 1));
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      const auto& e = r.entries[i];
      CHECK(e.k0 == static_cast<int>(i));
      CHECK(e.sides.max_abs_diff == 0);
      CHECK(e.sides.compared_order == 40);
      CHECK(e.lhs_product.equal);
      CHECK(e.rhs_product.equal);
    }
  }
  const QSeries a = product_char(AlgebraLabel::A1_1, 2, 1, 20);
  CHECK(compare(a, a).max_abs_diff == 0);
}

TEST_CASE("duality reports do not depend on the thread count") {
  const auto one = verify_duality(2, 30, 1);
  const auto four = verify_duality(2, 30, 4);
  REQUIRE(one.entries.size() == four.entries.size());
  for (std::size_t i = 0; i < one.entries.size(); ++i) {
    CHECK(one.entries[i].lhs == four.entries[i].lhs);
    CHECK(one.entries[i].rhs == four.entries[i].rhs);
  }
}

TEST_CASE("vacuum graded dimension") {
  const QSeries v = vacuum_graded_dim(1, 0, 24);
  CHECK(v.grain() == 6);
  CHECK(v.coefficient(Rat(0)) == 1);
  CHECK(v == substitute_power(wk_specialized_char({AlgebraLabel::A1_1, {0, 1}}, {1, 2}, 24), rat(1, 6)));
  CHECK(check_vacuum_duality(2, 1, 36).equal);
  const QSeries trivial = vacuum_graded_dim(0, 0, 30);
  for (std::size_t j = 0; j < trivial.size(); ++j) CHECK(trivial.coefficients()[j] == (j == 0 ? 1 : 0));
}

TEST_CASE("character coefficients are nonnegative") {
  for (const auto& w : level_weights(AlgebraLabel::A2_1, 2)) {
    const QSeries s = wk_specialized_char(w, {1, 1, 1}, 25);
    for (const auto& c : s.coefficients()) CHECK(c >= 0);
    CHECK(s.coefficient(Rat(0)) == 1);
  }
  for (const auto& w : level_weights(AlgebraLabel::A2_2, 5)) {
    const QSeries s = wk_specialized_char(w, {2, 1}, 25);
    for (const auto& c : s.coefficients()) CHECK(c >= 0);
  }
}
