#include "characters.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "parallel.hpp"

namespace kmchar {

namespace {

void check_spec(const AlgebraDesc& alg, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != alg.rank)
    fail(ErrorCode::InvalidArgument, "specialization for " + alg.name + " needs " + std::to_string(alg.rank) + " entries");
  for (int x : s)
    if (x <= 0) fail(ErrorCode::InvalidArgument, "specialization entries must be strictly positive");
}

std::vector<int> plus_rho(const std::vector<int>& coords) {
  std::vector<int> out = coords;
  for (int& x : out) ++x;
  return out;
}

QSeries orbit_sum(const AlgebraDesc& alg, const std::vector<int>& lr, const std::vector<int>& s, int N) {
  std::vector<Int> c(static_cast<std::size_t>(N) + 1);
  for (const auto& p : weyl_orbit(alg, lr, s, N)) {
    long d = 0;
    for (std::size_t i = 0; i < s.size(); ++i) d += static_cast<long>(s[i]) * p.cvec[i];
    c[static_cast<std::size_t>(d)] += p.parity;
  }
  return QSeries::polynomial(std::move(c), Rat(N));
}

MSeries orbit_msum(const AlgebraDesc& alg, const std::vector<int>& lr, const std::vector<int>& w, int N) {
  MSeries m(w, N);
  for (const auto& p : weyl_orbit(alg, lr, w, N)) {
    Exponents e{0, 0, 0};
    for (std::size_t i = 0; i < p.cvec.size(); ++i) e[i] = p.cvec[i];
    m.add_term(e, Int(p.parity));
  }
  return m;
}

std::vector<int> complement(int modulus, const std::vector<int>& excluded) {
  std::set<int> ex;
  for (int r : excluded) ex.insert(((r % modulus) + modulus) % modulus);
  std::vector<int> out;
  for (int r = 0; r < modulus; ++r)
    if (!ex.count(r)) out.push_back(r);
  return out;
}

void check_pair(int k, int k0) {
  if (k < 0 || k0 < 0 || k0 > k) fail(ErrorCode::InvalidArgument, "need k >= 0 and 0 <= k0 <= k");
}

}  // namespace

QSeries wk_specialized_char(const HighestWeight& lam, const std::vector<int>& s, int N) {
  const auto& alg = algebra(lam.algebra);
  check_spec(alg, s);
  if (N < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
  QSeries num = orbit_sum(alg, plus_rho(lam.coords), s, N);
  QSeries den = orbit_sum(alg, std::vector<int>(static_cast<std::size_t>(alg.rank), 1), s, N);
  return mul(num, invert(den));
}

MSeries wk_character(const HighestWeight& lam, const std::vector<int>& weights, int N) {
  const auto& alg = algebra(lam.algebra);
  check_spec(alg, weights);
  if (N < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
  MSeries num = orbit_msum(alg, plus_rho(lam.coords), weights, N);
  MSeries den = orbit_msum(alg, std::vector<int>(static_cast<std::size_t>(alg.rank), 1), weights, N);
  return m_mul(num, m_invert(den));
}

int homogeneous_total_degree(AlgebraLabel label, int level, int n) {
  if (level < 1 || n < 0) fail(ErrorCode::InvalidArgument, "need level >= 1 and n >= 0");
  // A weight kL0 - c0 d + b of L(kL0) has |b|^2 <= 2 k c0, where b is the
  // finite part sum_i x_i alpha_i; its total degree is c0 * h - sum_i x_i.
  const long bound = 2L * level * n;
  long r = 0;
  while ((r + 1) * (r + 1) <= bound) ++r;
  ++r;
  long best = 0;
  switch (label) {
    case AlgebraLabel::A1_1:
      for (long x = -r; x <= r; ++x)
        if (2 * x * x <= bound) best = std::max(best, -x);
      return static_cast<int>(2L * n + best);
    case AlgebraLabel::A2_1:
      for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y)
          if (2 * x * x - 2 * x * y + 2 * y * y <= bound) best = std::max(best, -x - y);
      return static_cast<int>(3L * n + best);
    case AlgebraLabel::A2_2:
      break;
  }
  fail(ErrorCode::InvalidArgument, "homogeneous grading is only available for untwisted algebras");
}

QSeries homogeneous_char(const HighestWeight& lam, int n) {
  const auto& alg = algebra(lam.algebra);
  if (alg.twist != 1) fail(ErrorCode::InvalidArgument, "homogeneous grading is only available for untwisted algebras");
  for (std::size_t i = 1; i < lam.coords.size(); ++i)
    if (lam.coords[i] != 0)
      fail(ErrorCode::InvalidArgument, "homogeneous grading is only implemented for multiples of Lambda_0");
  const int total = homogeneous_total_degree(lam.algebra, lam.level(), n);
  MSeries ch = wk_character(lam, std::vector<int>(static_cast<std::size_t>(alg.rank), 1), total);
  return grade_by_variable(ch, 0, n);
}

ProductFactor p_factor() { return ProductFactor{6, {1, 5}, -1}; }

QSeries p_series(const Rat& order) { return eta_like_product(ProductSpec{{p_factor()}}, order); }

bool is_exceptional(int k, int k0) { return 3 * k0 == 2 * k + 1; }

ProductSpec product_spec_A1(int k, int k0) {
  check_pair(k, k0);
  const int m = 4 * (k + 2);
  const int half = 2 * (k + 2);
  ProductSpec spec;
  if (is_exceptional(k, k0)) {
    const int t = half / 3;
    spec.factors.push_back({m, {t, m - t}, 1});
    spec.factors.push_back({m, complement(m, {0, half, t, -t, 2 * t, -2 * t}), -1});
  } else {
    const int a = k0 + 1, b = 2 * k - k0 + 3, c = 2 * (k - k0 + 1);
    spec.factors.push_back({m, complement(m, {0, half, a, -a, b, -b, c, -c}), -1});
  }
  std::erase_if(spec.factors, [](const ProductFactor& f) { return f.residues.empty(); });
  return spec;
}

ProductSpec product_spec_A2(int k, int k0) {
  ProductSpec spec = product_spec_A1(k, k0);
  spec.factors.insert(spec.factors.begin(), p_factor());
  return spec;
}

QSeries product_char(AlgebraLabel label, int k, int k0, int N) {
  switch (label) {
    case AlgebraLabel::A1_1: return eta_like_product(product_spec_A1(k, k0), Rat(N));
    case AlgebraLabel::A2_2: return eta_like_product(product_spec_A2(k, k0), Rat(N));
    case AlgebraLabel::A2_1: break;
  }
  fail(ErrorCode::InvalidArgument, "no product formula for a2_1");
}

bool DualityReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const DualityEntry& e) { return e.ok(); });
}

DualityReport verify_duality(int k, int N, int jobs) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "duality needs k >= 1");
  if (N < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
  const QSeries p_inv = invert(p_series(Rat(N)));

  auto one = [&](int k0) {
    QSeries lhs = wk_specialized_char({AlgebraLabel::A1_1, {k0, k - k0}}, {1, 2}, N);
    QSeries a2 = wk_specialized_char({AlgebraLabel::A2_2, {k0, 2 * k + 1 - 2 * k0}}, {1, 1}, N);
    QSeries rhs = mul(p_inv, a2);
    DualityEntry e{k0, lhs, rhs, compare(lhs, rhs), compare(lhs, product_char(AlgebraLabel::A1_1, k, k0, N)),
                   compare(a2, product_char(AlgebraLabel::A2_2, k, k0, N))};
    return e;
  };

  std::vector<std::optional<DualityEntry>> slots(static_cast<std::size_t>(k) + 1);
  parallel_for(k + 1, jobs, [&](int k0) { slots[static_cast<std::size_t>(k0)] = one(k0); });

  DualityReport report{k, N, {}};
  for (auto& s : slots) report.entries.push_back(std::move(*s));
  return report;
}

QSeries vacuum_graded_dim(int k, int k0, int N) {
  check_pair(k, k0);
  if (N < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
  const Rat sixth = rat(1, 6);
  QSeries a2 = wk_specialized_char({AlgebraLabel::A2_2, {k0, 2 * k + 1 - 2 * k0}}, {1, 1}, N);
  return mul(substitute_power(a2, sixth), invert(substitute_power(p_series(Rat(N)), sixth)));
}

SeriesComparison check_vacuum_duality(int k, int k0, int N) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "need k >= 1");
  QSeries a1 = wk_specialized_char({AlgebraLabel::A1_1, {k0, k - k0}}, {1, 2}, N);
  return compare(vacuum_graded_dim(k, k0, N), substitute_power(a1, rat(1, 6)));
}

}  // namespace kmchar
