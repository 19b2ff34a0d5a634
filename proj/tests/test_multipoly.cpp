#include <doctest.h>

#include <random>

#include "algebra.hpp"
#include "errors.hpp"
#include "multipoly.hpp"

using namespace kmchar;

namespace {

MSeries from_terms(std::vector<int> weights, int order, std::vector<std::pair<Exponents, long>> terms) {
  MSeries m(std::move(weights), order);
  for (const auto& [e, c] : terms) m.add_term(e, Int(c));
  return m;
}

std::vector<Int> coeffs(const QSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

MSeries a2_denominator(int order) {
  const auto& alg = algebra(AlgebraLabel::A2_1);
  const std::vector<int> rho{1, 1, 1}, s{1, 1, 1};
  MSeries d({1, 1, 1}, order);
  for (const auto& p : weyl_orbit(alg, rho, s, order)) d.add_term({p.cvec[0], p.cvec[1], p.cvec[2]}, Int(p.parity));
  return d;
}

}  // namespace

TEST_CASE("products of small polynomials") {
  const MSeries a = from_terms({1, 1}, 4, {{{0, 0, 0}, 1}, {{1, 0, 0}, 1}});
  const MSeries b = from_terms({1, 1}, 4, {{{0, 0, 0}, 1}, {{0, 1, 0}, 1}});
  const MSeries p = m_mul(a, b);
  CHECK(p.term_count() == 4);
  CHECK(p.coefficient({1, 1, 0}) == 1);
  CHECK(p.coefficient({2, 0, 0}) == 0);
  const MSeries one = MSeries::one({1, 1}, 4);
  CHECK(m_mul(a, one).terms() == a.terms());
  CHECK(m_add(a, b).coefficient({0, 0, 0}) == 2);
  CHECK_THROWS_AS(m_mul(a, MSeries::one({1, 2}, 4)), Error);
}

TEST_CASE("storage respects the weighted truncation") {
  MSeries m({4, 1, 1}, 5);
  m.add_term({1, 1, 0}, 3);
  m.add_term({1, 1, 1}, 3);  // degree 6, dropped
  CHECK(m.term_count() == 1);
  CHECK_THROWS_AS(m.coefficient({1, 1, 1}), Error);
  m.add_term({1, 1, 0}, -3);
  CHECK(m.term_count() == 0);
}

TEST_CASE("denominator of A2(1) times its inverse is one") {
  const MSeries d = a2_denominator(12);
  const MSeries inv = m_invert(d);
  const MSeries prod = m_mul(d, inv);
  REQUIRE(prod.term_count() == 1);
  CHECK(prod.coefficient({0, 0, 0}) == 1);
  CHECK_THROWS_AS(m_invert(from_terms({1, 1}, 3, {{{0, 0, 0}, 2}})), Error);
}

TEST_CASE("inverse round trip on random unit series") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    MSeries a({1, 2, 1}, 7);
    a.add_term({0, 0, 0}, trial % 2 ? 1 : -1);
    for (int t = 0; t < 6; ++t) {
      const Exponents e{static_cast<int>(rng() % 4), static_cast<int>(rng() % 3), static_cast<int>(rng() % 4)};
      if (e != Exponents{0, 0, 0}) a.add_term(e, Int(static_cast<long>(rng() % 9) - 4));
    }
    CHECK(m_invert(m_invert(a)).terms() == a.terms());
  }
}

TEST_CASE("specialize") {
  const MSeries a = from_terms({1, 1, 1}, 4, {{{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{0, 1, 1}, 1}});
  const QSeries s = specialize(a, {1, 1, 1});
  CHECK(s.coefficient(Rat(0)) == 1);
  CHECK(s.coefficient(Rat(1)) == 1);
  CHECK(s.coefficient(Rat(2)) == 1);
  CHECK(s.coefficient(Rat(3)) == 0);
  CHECK_THROWS_AS(specialize(a, {1, 0, 0}), Error);
  CHECK_THROWS_AS(specialize(a, {1, 1}), Error);

  // homomorphism on a product
  const MSeries b = from_terms({1, 1, 1}, 4, {{{0, 0, 0}, 1}, {{0, 0, 1}, -2}});
  CHECK(specialize(m_mul(a, b), {2, 1, 1}) == mul(specialize(a, {2, 1, 1}), specialize(b, {2, 1, 1})));
}

TEST_CASE("collect_degree_zero keeps v^0 w^0 after u -> q/(vw)") {
  const MSeries a = from_terms({1, 1, 1}, 9, {{{1, 1, 1}, 1}, {{2, 1, 1}, 5}, {{2, 2, 2}, 4}, {{0, 0, 0}, 1}});
  const QSeries s = collect_degree_zero(a);
  CHECK(s.order() == 3);
  CHECK(coeffs(s) == std::vector<Int>{1, 1, 4, 0});
}

TEST_CASE("grade_by_variable") {
  const MSeries a = from_terms({1, 1}, 6, {{{0, 0, 0}, 1}, {{1, 2, 0}, 2}, {{1, 0, 0}, 1}, {{2, 3, 0}, 7}});
  const QSeries s = grade_by_variable(a, 0, 2);
  CHECK(coeffs(s) == std::vector<Int>{1, 3, 7});
}
