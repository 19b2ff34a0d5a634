#include <doctest.h>

#include <functional>
#include <map>

#include "appendix.hpp"
#include "errors.hpp"

using namespace kmchar;

namespace {

std::vector<Int> coeffs(const QSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }
std::vector<Int> ints(std::vector<long> c) { return {c.begin(), c.end()}; }

struct lattice_term {
  int e, a, b;  // (uvw)^e v^a w^b
};
using group_fn = std::function<std::vector<lattice_term>(int, int)>;

// Plain lattice sum of the four string-function groups, with no bookkeeping
// beyond a wide (m, n) box. Returns every monomial of total degree <= N,
// including any with negative exponents.
std::map<Exponents, Int> lattice_sum(const StringFunctionSet& sf, const std::array<group_fn, 4>& groups, int N) {
  const QSeries* fns[4] = {&sf.sf1, &sf.sf2, &sf.sf3, &sf.sf4};
  std::map<Exponents, Int> acc;
  for (int g = 0; g < 4; ++g)
    for (int m = -12; m <= 12; ++m)
      for (int n = -12; n <= 12; ++n)
        for (const auto& t : groups[g](m, n))
          for (std::size_t j = 0; j < fns[g]->size(); ++j) {
            const int e = t.e + static_cast<int>(j);
            const Exponents x{e, e + t.a, e + t.b};
            if (x[0] + x[1] + x[2] <= N) acc[x] += fns[g]->coefficients()[j];
          }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

int quad(int m, int n) { return m * m + n * n - m * n; }

std::vector<lattice_term> g1(int m, int n) { return {{3 * quad(m, n), -3 * m, -3 * n}}; }

std::vector<lattice_term> g2(int m, int n) {
  const int q = quad(m, n), p = 2 * m - n, r = 2 * n - m, s = m + n;
  return {{3 * q - p, 1 - 3 * m, -3 * n}, {3 * q + p, -1 - 3 * m, -3 * n}, {3 * q - r, -3 * m, 1 - 3 * n},
          {3 * q + r, -3 * m, -1 - 3 * n}, {3 * q - s, 1 - 3 * m, 1 - 3 * n}, {3 * q + s, -1 - 3 * m, -1 - 3 * n}};
}

std::vector<lattice_term> g3_skewed(int m, int n) {
  return {{3 * (quad(m, n) - m - n) + 2, 1 + 3 * (2 * n - m), -1 + 3 * n}};
}

std::vector<lattice_term> g3_mirrored(int m, int n) { return {{3 * (quad(m, n) + m - n) + 2, 1 + 3 * m, -1 + 3 * n}}; }

std::vector<lattice_term> g4(int m, int n) { return {{3 * (quad(m, n) + m - n) + 2, -1 - 3 * m, 1 - 3 * n}}; }

}  // namespace

TEST_CASE("level 3 vacuum character") {
  const MSeries a = char_level3(10);
  const MSeries b = char_level3(14);
  CHECK(a.coefficient({0, 0, 0}) == 1);
  CHECK(a.coefficient({1, 0, 0}) == 1);
  CHECK(b.coefficient({1, 0, 0}) == 1);
  CHECK(a.coefficient({0, 1, 0}) == 0);
  for (const auto& [e, c] : a.terms()) {
    CHECK(c > 0);
    CHECK(b.coefficient(e) == c);
  }
}

TEST_CASE("string functions") {
  const auto sf = extract_string_functions(char_level3(15), 4);
  CHECK(sf.sf1.coefficient(Rat(0)) == 1);
  CHECK(sf.sf2.coefficient(Rat(0)) == 0);
  CHECK(sf.sf2.coefficient(Rat(1)) == 1);
  CHECK(sf.sf2.order() == 5);
  for (const QSeries* f : {&sf.sf1, &sf.sf2, &sf.sf3, &sf.sf4})
    for (const auto& c : f->coefficients()) CHECK(c >= 0);
  const auto again = extract_string_functions(char_level3(18), 4);
  CHECK(again.sf2 == sf.sf2);
  CHECK(again.sf4 == sf.sf4);
  CHECK_THROWS_AS(extract_string_functions(char_level3(14), 4), Error);
}

TEST_CASE("theta assembly reproduces the character") {
  const MSeries chv = char_level3(15);
  const auto sf = extract_string_functions(chv, 4);
  const MSeries theta = theta_assembly(sf, 12);
  const auto cmp = compare(theta, char_level3(12));
  CHECK(cmp.equal);
  CHECK(cmp.compared_order == 12);

  // truncation coherence
  const MSeries lower = theta_assembly(sf, 8);
  CHECK(compare(lower, theta.truncated(8)).equal);
  CHECK(lower.order() == 8);

  // the (0,0) term of the first group is sf1 along the diagonal
  for (int k = 0; k <= 4; ++k) CHECK(theta.coefficient({k, k, k}) == *sf.sf1.coefficient(Rat(k)));
}

TEST_CASE("independent lattice sum: mirrored third group works, skewed variant does not") {
  const auto sf = extract_string_functions(char_level3(15), 4);
  const int N = 12;
  const MSeries chv = char_level3(N);
  std::map<Exponents, Int> direct;
  for (const auto& [e, c] : chv.terms()) direct[e] = c;

  auto mirrored = lattice_sum(sf, {g1, g2, g3_mirrored, g4}, N);
  CHECK(mirrored == direct);

  auto skewed = lattice_sum(sf, {g1, g2, g3_skewed, g4}, N);
  CHECK(skewed != direct);
  REQUIRE(skewed.count({-1, 3, 1}));
  CHECK(skewed.at({-1, 3, 1}) == 1);
}

TEST_CASE("reference series") {
  const QSeries a2 = specialize_411(20);
  CHECK(a2.grain() == 6);
  for (int j = 0; j <= 7; ++j) CHECK(a2.coefficient(rat(j, 6)) == ints({1, 0, 0, 0, 1, 2, 2, 2})[j]);
  CHECK(a2.coefficient(rat(20, 6)) == 46);

  CHECK(coeffs(homogeneous_level3(3)) == ints({1, 8, 44, 192}));
  const QSeries omega = vacuum_dim_level3(3);
  CHECK(coeffs(omega) == ints({1, 6, 27, 98}));

  const TraceSpec a3 = omega30_trace(4);
  CHECK(a3.prefactor() == rat(-1, 12));
  CHECK(coeffs(a3.body) == ints({1, 0, 3, 8, 16}));

  const TraceSpec a4 = a1_level1_trace(3);
  CHECK(a4.prefactor() == rat(-1, 24));
  CHECK(coeffs(a4.body) == ints({1, 3, 4, 7}));

  const TraceSpec a5 = tensor_square_trace(3);
  CHECK(a5.prefactor() == 2 * a4.prefactor());
  CHECK(coeffs(a5.body) == ints({1, 6, 17, 38}));
  CHECK(a5.body == mul(a4.body, a4.body));
}

TEST_CASE("nonisomorphy") {
  const auto rows = nonisomorphy_report();
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) REQUIRE(r.first_difference.has_value());
  CHECK(rows[0].first_difference->exponent == 1);
  CHECK(rows[0].first_difference->lhs == 0);
  CHECK(rows[0].first_difference->rhs == 3);
  CHECK(rows[1].first_difference->rhs == 6);
  const TraceSpec t = omega30_trace(4);
  CHECK(compare(t.series(), t.series()).equal);
}

TEST_CASE("appendix report") {
  const auto r = appendix_report(12);
  CHECK(r.ok());
  CHECK(r.theta.equal);
  CHECK(r.square_ok);
  CHECK(r.prefactor_consistent);
  CHECK(r.checks.size() == 6);
}
