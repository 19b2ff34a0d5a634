#include "multipoly.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace kmchar {

namespace {

void require_same_weights(const MSeries& a, const MSeries& b) {
  if (a.weights() != b.weights())
    fail(ErrorCode::IncompatibleTruncation, "multivariate series have different degree weights");
}

// All exponent tuples in the truncation cone, by increasing weighted degree.
std::vector<Exponents> cone(const std::vector<int>& w, int order) {
  std::vector<Exponents> out;
  const int n = static_cast<int>(w.size());
  Exponents e{0, 0, 0};
  for (e[0] = 0; w[0] * e[0] <= order; ++e[0])
    for (e[1] = 0; w[0] * e[0] + w[1] * e[1] <= order; ++e[1]) {
      if (n == 2) {
        out.push_back({e[0], e[1], 0});
        continue;
      }
      for (e[2] = 0; w[0] * e[0] + w[1] * e[1] + w[2] * e[2] <= order; ++e[2]) out.push_back(e);
    }
  auto deg = [&](const Exponents& x) {
    int d = 0;
    for (int i = 0; i < n; ++i) d += w[i] * x[i];
    return d;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const Exponents& x, const Exponents& y) { return deg(x) < deg(y); });
  return out;
}

}  // namespace

MSeries::MSeries(std::vector<int> weights, int order) : weights_(std::move(weights)), order_(order) {
  if (weights_.size() != 2 && weights_.size() != 3)
    fail(ErrorCode::InvalidArgument, "multivariate series need 2 or 3 variables");
  for (int w : weights_)
    if (w <= 0) fail(ErrorCode::InvalidArgument, "degree weights must be positive");
  if (order_ < 0) fail(ErrorCode::InvalidArgument, "truncation order must be nonnegative");
  std::size_t total = 1;
  extent_.resize(weights_.size());
  stride_.resize(weights_.size());
  for (std::size_t i = weights_.size(); i-- > 0;) {
    extent_[i] = static_cast<std::size_t>(order_ / weights_[i]) + 1;
    stride_[i] = total;
    total *= extent_[i];
  }
  dense_.resize(total);
}

MSeries MSeries::one(std::vector<int> weights, int order) {
  MSeries m(std::move(weights), order);
  m.add_term({0, 0, 0}, Int(1));
  return m;
}

int MSeries::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * e[i];
  return d;
}

bool MSeries::known(const Exponents& e) const {
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (e[i] < 0) return false;
  return degree(e) <= order_;
}

std::size_t MSeries::index(const Exponents& e) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) idx += static_cast<std::size_t>(e[i]) * stride_[i];
  return idx;
}

const Int& MSeries::coefficient(const Exponents& e) const {
  if (!known(e)) fail(ErrorCode::InsufficientOrder, "monomial lies beyond the truncation order");
  return dense_[index(e)];
}

void MSeries::add_term(const Exponents& e, const Int& c) {
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (e[i] < 0) fail(ErrorCode::InvalidArgument, "negative exponent outside the substitution step");
  if (degree(e) > order_) return;
  dense_[index(e)] += c;
}

std::vector<std::pair<Exponents, Int>> MSeries::terms() const {
  // Row-major layout with the last variable fastest is lexicographic order.
  std::vector<std::pair<Exponents, Int>> out;
  const std::size_t n = weights_.size();
  for (std::size_t idx = 0; idx < dense_.size(); ++idx) {
    if (dense_[idx] == 0) continue;
    Exponents e{0, 0, 0};
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = static_cast<int>(rest / stride_[i]);
      rest %= stride_[i];
    }
    out.emplace_back(e, dense_[idx]);
  }
  return out;
}

std::size_t MSeries::term_count() const {
  return static_cast<std::size_t>(std::count_if(dense_.begin(), dense_.end(), [](const Int& c) { return c != 0; }));
}

MSeries MSeries::truncated(int order) const {
  MSeries out(weights_, std::min(order, order_));
  for (const auto& [e, c] : terms()) out.add_term(e, c);
  return out;
}

MSeries m_add(const MSeries& a, const MSeries& b) {
  require_same_weights(a, b);
  MSeries out(a.weights(), std::min(a.order(), b.order()));
  for (const auto& [e, c] : a.terms()) out.add_term(e, c);
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

MSeries m_mul(const MSeries& a, const MSeries& b) {
  require_same_weights(a, b);
  MSeries out(a.weights(), std::min(a.order(), b.order()));
  const int n = a.nvars();
  auto at = a.terms();
  auto bt = b.terms();
  std::stable_sort(bt.begin(), bt.end(),
                   [&](const auto& x, const auto& y) { return b.degree(x.first) < b.degree(y.first); });
  std::vector<int> bdeg;
  bdeg.reserve(bt.size());
  for (const auto& t : bt) bdeg.push_back(b.degree(t.first));
  for (const auto& [ea, ca] : at) {
    const int budget = out.order() - a.degree(ea);
    if (budget < 0) continue;
    for (std::size_t j = 0; j < bt.size() && bdeg[j] <= budget; ++j) {
      Exponents e{0, 0, 0};
      for (int i = 0; i < n; ++i) e[i] = ea[i] + bt[j].first[i];
      mpz_addmul(out.dense_[out.index(e)].get_mpz_t(), ca.get_mpz_t(), bt[j].second.get_mpz_t());
    }
  }
  return out;
}

MSeries m_invert(const MSeries& a) {
  const Int& lead = a.coefficient({0, 0, 0});
  if (lead != 1 && lead != -1)
    fail(ErrorCode::NonUnitLeadingCoefficient, "constant term must be +1 or -1");
  const int n = a.nvars();
  std::vector<std::pair<Exponents, Int>> at;
  for (auto& t : a.terms())
    if (t.first != Exponents{0, 0, 0}) at.push_back(std::move(t));
  MSeries out(a.weights(), a.order());
  Int acc;
  for (const auto& m : cone(a.weights(), a.order())) {
    if (m == Exponents{0, 0, 0}) {
      out.dense_[0] = lead;
      continue;
    }
    acc = 0;
    for (const auto& [t, c] : at) {
      Exponents r{0, 0, 0};
      bool fits = true;
      for (int i = 0; i < n && fits; ++i) {
        r[i] = m[i] - t[i];
        fits = r[i] >= 0;
      }
      if (!fits) continue;
      const Int& br = out.dense_[out.index(r)];
      if (br != 0) mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), br.get_mpz_t());
    }
    out.dense_[out.index(m)] = -lead * acc;
  }
  return out;
}

QSeries specialize(const MSeries& a, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != a.nvars())
    fail(ErrorCode::InvalidArgument, "specialization length must match the number of variables");
  for (int x : s)
    if (x <= 0) fail(ErrorCode::InvalidArgument, "specialization entries must be strictly positive");
  const auto& w = a.weights();
  const int n = a.nvars();
  int known = a.order();
  if (w != s) {
    // Smallest s-degree of a monomial with weighted degree > order. A
    // minimizer drops back into the cone when any coordinate is lowered, so
    // it has weighted degree <= order + max(w).
    const int wmax = *std::max_element(w.begin(), w.end());
    int best = -1;
    for (const auto& e : cone(w, a.order() + wmax)) {
      int wd = 0, sd = 0;
      for (int i = 0; i < n; ++i) {
        wd += w[i] * e[i];
        sd += s[i] * e[i];
      }
      if (wd > a.order() && (best < 0 || sd < best)) best = sd;
    }
    known = best - 1;
  }
  std::vector<Int> c(static_cast<std::size_t>(known) + 1);
  for (const auto& [e, v] : a.terms()) {
    int sd = 0;
    for (int i = 0; i < n; ++i) sd += s[i] * e[i];
    if (sd <= known) c[static_cast<std::size_t>(sd)] += v;
  }
  return QSeries::polynomial(std::move(c), Rat(known));
}

QSeries grade_by_variable(const MSeries& a, int var, int known_order) {
  if (var < 0 || var >= a.nvars()) fail(ErrorCode::InvalidArgument, "variable index out of range");
  if (known_order < 0) fail(ErrorCode::InsufficientOrder, "no grade is completely stored");
  std::vector<Int> c(static_cast<std::size_t>(known_order) + 1);
  for (const auto& [e, v] : a.terms())
    if (e[var] <= known_order) c[static_cast<std::size_t>(e[var])] += v;
  return QSeries::polynomial(std::move(c), Rat(known_order));
}

QSeries collect_degree_zero(const MSeries& a) {
  if (a.nvars() != 3) fail(ErrorCode::InvalidArgument, "degree-zero collection needs three variables");
  // Transient Laurent image: (q-power, v-power, w-power).
  std::map<Exponents, Int> laurent;
  for (const auto& [e, c] : a.terms()) laurent[{e[0], e[1] - e[0], e[2] - e[0]}] += c;
  const auto& w = a.weights();
  const int known = a.order() / (w[0] + w[1] + w[2]);
  std::vector<Int> out(static_cast<std::size_t>(known) + 1);
  for (const auto& [e, c] : laurent)
    if (e[1] == 0 && e[2] == 0 && e[0] <= known) out[static_cast<std::size_t>(e[0])] += c;
  return QSeries::polynomial(std::move(out), Rat(known));
}

}  // namespace kmchar
