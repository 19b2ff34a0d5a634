#pragma once

// Truncated univariate formal series
//
//     sum_j c_j q^(shift + j/grain),   known for exponents <= order.
//
// Coefficients beyond `order` are unknown rather than zero; every binary
// operation keeps the pessimistic (smaller) truncation. The shift's
// denominator always divides the grain.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rational.hpp"

namespace kmchar {

// prod_{n >= 1, n mod modulus in residues} (1 - q^n)^exponent
struct ProductFactor {
  int modulus = 1;
  std::vector<int> residues;
  int exponent = -1;

  bool operator==(const ProductFactor&) const = default;
};

struct ProductSpec {
  std::vector<ProductFactor> factors;

  bool operator==(const ProductSpec&) const = default;
};

class QSeries {
 public:
  // Entries missing from `coeffs` (relative to the known range) are zero;
  // entries beyond `order` are dropped.
  QSeries(std::int64_t grain, Rat shift, Rat order, std::vector<Int> coeffs);

  static QSeries zero(const Rat& order);
  static QSeries one(const Rat& order);
  // Integer-exponent polynomial (grain 1, shift 0) known to `order`.
  static QSeries polynomial(std::vector<Int> coeffs, const Rat& order);

  std::int64_t grain() const { return grain_; }
  const Rat& shift() const { return shift_; }
  const Rat& order() const { return order_; }
  std::span<const Int> coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Rat exponent(std::size_t index) const;
  // nullopt for exponents above the truncation order; off-lattice exponents
  // inside the known range are zero.
  std::optional<Int> coefficient(const Rat& exponent) const;

  // Same series on a finer lattice; `grain` must be a multiple of grain().
  QSeries rescaled(std::int64_t grain) const;
  QSeries truncated(const Rat& order) const;
  // Smallest grain that still represents the shift and every nonzero term.
  QSeries reduced() const;

 private:
  std::int64_t grain_;
  Rat shift_;
  Rat order_;
  std::vector<Int> coeffs_;
};

// Number of lattice points shift + j/grain that are <= order.
std::size_t lattice_count(std::int64_t grain, const Rat& shift, const Rat& order);

QSeries add(const QSeries& a, const QSeries& b);
QSeries negate(const QSeries& a);
QSeries subtract(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Int& factor);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries power(const QSeries& a, int exponent);
// Throws NonUnitLeadingCoefficient unless the coefficient at q^shift is +-1.
QSeries invert(const QSeries& a);
// q -> q^p, p > 0.
QSeries substitute_power(const QSeries& a, const Rat& p);
// Multiplication by q^r.
QSeries shift_exponent(const QSeries& a, const Rat& r);

// Expands the congruence product to q^order by successive single-factor
// updates; only n <= order contribute.
QSeries eta_like_product(const ProductSpec& spec, const Rat& order);

struct Mismatch {
  Rat exponent;
  Int lhs;
  Int rhs;
};

struct SeriesComparison {
  bool equal = true;
  Rat compared_order;
  std::optional<Mismatch> first_mismatch;
  Int max_abs_diff;
};

// Compares coefficients on the common known range (up to the smaller order).
SeriesComparison compare(const QSeries& a, const QSeries& b);

// Same truncation order and equal coefficients.
bool operator==(const QSeries& a, const QSeries& b);

}  // namespace kmchar
