#pragma once

// Truncated series in the formal exponentials u = e^{-alpha_0},
// v = e^{-alpha_1}, w = e^{-alpha_2} (two variables for rank-two algebras).
//
// A monomial u^c0 v^c1 w^c2 has weighted degree sum_i weights[i] * c_i and
// is known iff that degree is <= order. Storage is a dense box indexed by
// the exponent tuple; each axis is bounded by order / weights[i].

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qseries.hpp"
#include "rational.hpp"

namespace kmchar {

using Exponents = std::array<int, 3>;

class MSeries {
 public:
  MSeries(std::vector<int> weights, int order);

  static MSeries one(std::vector<int> weights, int order);

  int nvars() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  int order() const { return order_; }

  int degree(const Exponents& e) const;
  bool known(const Exponents& e) const;
  // Zero for known-but-absent monomials; throws InsufficientOrder beyond order.
  const Int& coefficient(const Exponents& e) const;
  // Terms beyond the truncation order are silently dropped.
  void add_term(const Exponents& e, const Int& c);

  // Nonzero terms, sorted lexicographically by exponent tuple.
  std::vector<std::pair<Exponents, Int>> terms() const;
  std::size_t term_count() const;

  MSeries truncated(int order) const;

 private:
  std::size_t index(const Exponents& e) const;

  std::vector<int> weights_;
  int order_;
  std::vector<std::size_t> extent_;
  std::vector<std::size_t> stride_;
  std::vector<Int> dense_;

  friend MSeries m_mul(const MSeries&, const MSeries&);
  friend MSeries m_invert(const MSeries&);
};

// Both throw IncompatibleTruncation when the weight vectors differ.
MSeries m_add(const MSeries& a, const MSeries& b);
MSeries m_mul(const MSeries& a, const MSeries& b);
// Constant term must be +-1 (NonUnitLeadingCoefficient otherwise).
MSeries m_invert(const MSeries& a);

// F_s: e^{-alpha_i} -> q^{s_i}, s strictly positive. The result is known up
// to one less than the smallest s-degree of any monomial outside the
// truncation cone.
QSeries specialize(const MSeries& a, const std::vector<int>& s);

// Grades by the exponent of a single variable. The caller supplies the
// grade through which every contributing monomial is known to be stored.
QSeries grade_by_variable(const MSeries& a, int var, int known_order);

// u -> q v^{-1} w^{-1}, then keeps the v^0 w^0 part as a series in q.
QSeries collect_degree_zero(const MSeries& a);

}  // namespace kmchar
