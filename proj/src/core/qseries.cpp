#include "qseries.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace kmchar {

std::size_t lattice_count(std::int64_t grain, const Rat& shift, const Rat& order) {
  if (order < shift) return 0;
  Rat span = (order - shift) * Rat(grain);
  return static_cast<std::size_t>(to_i64(floor_rat(span))) + 1;
}

namespace {

// Coefficients of `a` laid out on the lattice base + i/grain, i < len.
// Requires grain % a.grain() == 0 and (a.shift() - base) * grain a
// nonnegative integer.
std::vector<Int> expand_to(const QSeries& a, std::int64_t grain, const Rat& base,
                           std::size_t len) {
  std::vector<Int> out(len);
  const std::int64_t stride = grain / a.grain();
  Rat off = (a.shift() - base) * Rat(grain);
  const std::int64_t offset = to_i64(off.get_num());
  auto c = a.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::int64_t idx = offset + static_cast<std::int64_t>(j) * stride;
    if (idx >= static_cast<std::int64_t>(len)) break;
    out[static_cast<std::size_t>(idx)] = c[j];
  }
  return out;
}

}  // namespace

QSeries::QSeries(std::int64_t grain, Rat shift, Rat order, std::vector<Int> coeffs)
    : grain_(grain), shift_(std::move(shift)), order_(std::move(order)) {
  if (grain_ <= 0) fail(ErrorCode::InvalidArgument, "grain must be positive");
  shift_.canonicalize();
  order_.canonicalize();
  const std::int64_t folded = lcm64(grain_, denominator_i64(shift_));
  if (folded != grain_) {
    const std::int64_t stride = folded / grain_;
    std::vector<Int> spread;
    if (!coeffs.empty()) spread.resize((coeffs.size() - 1) * stride + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) spread[j * stride] = std::move(coeffs[j]);
    coeffs = std::move(spread);
    grain_ = folded;
  }
  coeffs.resize(lattice_count(grain_, shift_, order_));
  coeffs_ = std::move(coeffs);
}

QSeries QSeries::zero(const Rat& order) { return QSeries(1, Rat(0), order, {}); }

QSeries QSeries::one(const Rat& order) { return QSeries(1, Rat(0), order, {Int(1)}); }

QSeries QSeries::polynomial(std::vector<Int> coeffs, const Rat& order) {
  return QSeries(1, Rat(0), order, std::move(coeffs));
}

Rat QSeries::exponent(std::size_t index) const {
  return shift_ + rat(static_cast<long>(index), static_cast<long>(grain_));
}

std::optional<Int> QSeries::coefficient(const Rat& e) const {
  if (e > order_) return std::nullopt;
  if (e < shift_) return Int(0);
  Rat pos = (e - shift_) * Rat(grain_);
  if (pos.get_den() != 1) return Int(0);
  auto j = static_cast<std::size_t>(to_i64(pos.get_num()));
  return j < coeffs_.size() ? coeffs_[j] : Int(0);
}

QSeries QSeries::rescaled(std::int64_t grain) const {
  if (grain <= 0 || grain % grain_ != 0)
    fail(ErrorCode::InvalidArgument, "rescale target must be a multiple of the grain");
  return QSeries(grain, shift_, order_,
                 expand_to(*this, grain, shift_, lattice_count(grain, shift_, order_)));
}

QSeries QSeries::truncated(const Rat& order) const {
  Rat o = std::min(order, order_);
  std::vector<Int> c(coeffs_.begin(),
                     coeffs_.begin() + std::min(coeffs_.size(), lattice_count(grain_, shift_, o)));
  return QSeries(grain_, shift_, o, std::move(c));
}

QSeries QSeries::reduced() const {
  std::int64_t t = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) t = std::gcd(t, static_cast<std::int64_t>(j));
  const std::int64_t f = std::gcd(t, grain_ / denominator_i64(shift_));
  if (f <= 1) return *this;
  std::vector<Int> c;
  for (std::size_t j = 0; j < coeffs_.size(); j += static_cast<std::size_t>(f)) c.push_back(coeffs_[j]);
  return QSeries(grain_ / f, shift_, order_, std::move(c));
}

QSeries add(const QSeries& a, const QSeries& b) {
  const std::int64_t grain = lcm64(a.grain(), b.grain());
  const Rat shift = std::min(a.shift(), b.shift());
  const Rat order = std::min(a.order(), b.order());
  const std::size_t len = lattice_count(grain, shift, order);
  auto x = expand_to(a, grain, shift, len);
  auto y = expand_to(b, grain, shift, len);
  for (std::size_t i = 0; i < len; ++i) x[i] += y[i];
  return QSeries(grain, shift, order, std::move(x));
}

QSeries negate(const QSeries& a) { return scale(a, Int(-1)); }

QSeries subtract(const QSeries& a, const QSeries& b) { return add(a, negate(b)); }

QSeries scale(const QSeries& a, const Int& factor) {
  std::vector<Int> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& v : c) v *= factor;
  return QSeries(a.grain(), a.shift(), a.order(), std::move(c));
}

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::int64_t grain = lcm64(a.grain(), b.grain());
  const Rat shift = a.shift() + b.shift();
  const Rat order = std::min(a.order() + b.shift(), b.order() + a.shift());
  const std::size_t len = lattice_count(grain, shift, order);
  auto x = expand_to(a, grain, a.shift(), std::min(len, lattice_count(grain, a.shift(), a.order())));
  auto y = expand_to(b, grain, b.shift(), std::min(len, lattice_count(grain, b.shift(), b.order())));
  std::vector<std::size_t> ynz;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (y[j] != 0) ynz.push_back(j);
  std::vector<Int> out(len);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j : ynz) {
      if (i + j >= len) break;
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return QSeries(grain, shift, order, std::move(out));
}

QSeries power(const QSeries& a, int exponent) {
  if (exponent < 0) return power(invert(a), -exponent);
  QSeries result = QSeries(1, Rat(0), a.order() + Rat(exponent - 1) * a.shift(), {Int(1)});
  QSeries base = a;
  bool first = true;
  while (exponent > 0) {
    if (exponent & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

QSeries invert(const QSeries& a) {
  auto c = a.coefficients();
  if (c.empty() || (c[0] != 1 && c[0] != -1))
    fail(ErrorCode::NonUnitLeadingCoefficient,
         "leading coefficient must be +1 or -1 to invert over the integers");
  const Int& lead = c[0];
  std::vector<Int> out(c.size());
  out[0] = lead;
  Int acc;
  for (std::size_t n = 1; n < c.size(); ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (c[k] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), c[k].get_mpz_t(), out[n - k].get_mpz_t());
    }
    out[n] = -lead * acc;
  }
  return QSeries(a.grain(), -a.shift(), a.order() - 2 * a.shift(), std::move(out));
}

QSeries substitute_power(const QSeries& a, const Rat& p) {
  if (p <= 0) fail(ErrorCode::InvalidArgument, "substitution power must be positive");
  const std::int64_t num = to_i64(p.get_num());
  const std::int64_t den = to_i64(p.get_den());
  auto c = a.coefficients();
  std::vector<Int> spread;
  if (!c.empty()) spread.resize((c.size() - 1) * num + 1);
  for (std::size_t j = 0; j < c.size(); ++j) spread[j * num] = c[j];
  return QSeries(a.grain() * den, a.shift() * p, a.order() * p, std::move(spread));
}

QSeries shift_exponent(const QSeries& a, const Rat& r) {
  return QSeries(a.grain(), a.shift() + r, a.order() + r,
                 std::vector<Int>(a.coefficients().begin(), a.coefficients().end()));
}

QSeries eta_like_product(const ProductSpec& spec, const Rat& order) {
  const std::size_t len = lattice_count(1, Rat(0), order);
  std::vector<Int> c(len);
  if (len > 0) c[0] = 1;
  for (const auto& f : spec.factors) {
    if (f.modulus < 1) fail(ErrorCode::InvalidArgument, "product modulus must be >= 1");
    if (f.exponent != 1 && f.exponent != -1)
      fail(ErrorCode::InvalidArgument, "product exponent must be +1 or -1");
    std::vector<char> allowed(static_cast<std::size_t>(f.modulus), 0);
    for (int r : f.residues) allowed[static_cast<std::size_t>(((r % f.modulus) + f.modulus) % f.modulus)] = 1;
    for (std::size_t n = 1; n < len; ++n) {
      if (!allowed[n % static_cast<std::size_t>(f.modulus)]) continue;
      if (f.exponent == 1) {
        for (std::size_t i = len - 1; i >= n; --i) c[i] -= c[i - n];
      } else {
        for (std::size_t i = n; i < len; ++i) c[i] += c[i - n];
      }
    }
  }
  return QSeries(1, Rat(0), order, std::move(c));
}

SeriesComparison compare(const QSeries& a, const QSeries& b) {
  SeriesComparison out;
  const std::int64_t grain = lcm64(a.grain(), b.grain());
  const Rat shift = std::min(a.shift(), b.shift());
  out.compared_order = std::min(a.order(), b.order());
  const std::size_t len = lattice_count(grain, shift, out.compared_order);
  auto x = expand_to(a, grain, shift, len);
  auto y = expand_to(b, grain, shift, len);
  out.max_abs_diff = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (x[i] == y[i]) continue;
    Int d = abs(x[i] - y[i]);
    if (d > out.max_abs_diff) out.max_abs_diff = d;
    if (out.equal) {
      out.equal = false;
      out.first_mismatch =
          Mismatch{shift + rat(static_cast<long>(i), static_cast<long>(grain)), x[i], y[i]};
    }
  }
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.order() == b.order() && compare(a, b).equal;
}

}  // namespace kmchar
