#pragma once

// Specialized and unspecialized characters of standard modules, computed
// from the Weyl-Kac quotient and, for the A1^(1) / A2^(2) families, from
// congruence products. The two routes are independent of one another.

#include <optional>
#include <vector>

#include "algebra.hpp"
#include "multipoly.hpp"
#include "qseries.hpp"

namespace kmchar {

// F_s(e^{-Lambda} ch L(Lambda)) to q^N; s strictly positive.
QSeries wk_specialized_char(const HighestWeight& lam, const std::vector<int>& s, int N);

// e^{-Lambda} ch L(Lambda) truncated at weighted degree N.
MSeries wk_character(const HighestWeight& lam, const std::vector<int>& weights, int N);

// Total degree sum_i c_i that the unspecialized character must reach for
// every monomial with c_0 <= n to be stored. Untwisted algebras, Lambda =
// level * Lambda_0 only.
int homogeneous_total_degree(AlgebraLabel label, int level, int n);

// F_(1,0,...,0): grading by the exponent of e^{-alpha_0}, to q^n.
QSeries homogeneous_char(const HighestWeight& lam, int n);

// prod_{n = +-1 mod 6} (1 - q^n)^{-1}
ProductFactor p_factor();
QSeries p_series(const Rat& order);

ProductSpec product_spec_A1(int k, int k0);
ProductSpec product_spec_A2(int k, int k0);
bool is_exceptional(int k, int k0);

// Evaluates the product formula for the character of the A1^(1) module
// (k0, k - k0) at s = (1,2) or the A2^(2) module (k0, 2k+1-2k0) at s = (1,1).
QSeries product_char(AlgebraLabel label, int k, int k0, int N);

struct DualityEntry {
  int k0 = 0;
  QSeries lhs;             // A1^(1) character, Weyl-Kac
  QSeries rhs;             // P(q)^{-1} times the A2^(2) character, Weyl-Kac
  SeriesComparison sides;  // lhs vs rhs
  SeriesComparison lhs_product;  // lhs vs its congruence product
  SeriesComparison rhs_product;  // A2^(2) character vs its congruence product
  bool ok() const { return sides.equal && lhs_product.equal && rhs_product.equal; }
};

struct DualityReport {
  int k = 0;
  int order = 0;
  std::vector<DualityEntry> entries;
  bool ok() const;
};

// Evaluates every k0 in 0..k, spreading the work over `jobs` threads. The
// entries are always ordered by k0.
DualityReport verify_duality(int k, int N, int jobs = 1);

// Graded dimension of the vacuum space of the level 2k+1 A2^(2) module
// (k0, 2k+1-2k0), in powers of q^{1/6}, known to q^{N/6}. k = 0 is allowed.
QSeries vacuum_graded_dim(int k, int k0, int N);

// Compares vacuum_graded_dim with the (1,2)-specialized A1^(1) character
// under q -> q^{1/6}.
SeriesComparison check_vacuum_duality(int k, int k0, int N);

}  // namespace kmchar
