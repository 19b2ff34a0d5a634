#include "algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "errors.hpp"

namespace kmchar {

int AlgebraDesc::coxeter() const { return std::accumulate(marks.begin(), marks.end(), 0); }

const AlgebraDesc& algebra(AlgebraLabel label) {
  static const AlgebraDesc a11{AlgebraLabel::A1_1, "a1_1", 2, {{2, -2}, {-2, 2}}, {1, 1}, {1, 1}, 1, 2};
  static const AlgebraDesc a21{AlgebraLabel::A2_1, "a2_1", 3,
                               {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}},
                               {1, 1, 1}, {1, 1, 1}, 1, 3};
  static const AlgebraDesc a22{AlgebraLabel::A2_2, "a2_2", 2, {{2, -1}, {-4, 2}}, {1, 2}, {2, 1}, 2, 3};
  switch (label) {
    case AlgebraLabel::A1_1: return a11;
    case AlgebraLabel::A2_1: return a21;
    case AlgebraLabel::A2_2: return a22;
  }
  fail(ErrorCode::InvalidArgument, "unknown algebra");
}

const std::array<AlgebraLabel, 3>& all_algebras() {
  static const std::array<AlgebraLabel, 3> all{AlgebraLabel::A1_1, AlgebraLabel::A2_1, AlgebraLabel::A2_2};
  return all;
}

AlgebraLabel parse_algebra_label(std::string_view name) {
  for (auto label : all_algebras())
    if (algebra(label).name == name) return label;
  fail(ErrorCode::InvalidArgument, "unknown algebra '" + std::string(name) + "' (expected a1_1, a2_1 or a2_2)");
}

int HighestWeight::level() const {
  const auto& alg = kmchar::algebra(algebra);
  int level = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) level += alg.comarks[i] * coords[i];
  return level;
}

HighestWeight make_weight(AlgebraLabel label, std::vector<int> coords) {
  const auto& alg = algebra(label);
  if (static_cast<int>(coords.size()) != alg.rank)
    fail(ErrorCode::InvalidArgument, "weight for " + alg.name + " needs " + std::to_string(alg.rank) + " coordinates");
  for (int c : coords)
    if (c < 0) fail(ErrorCode::InvalidArgument, "weight coordinates must be nonnegative");
  return HighestWeight{label, std::move(coords)};
}

std::vector<HighestWeight> level_weights(AlgebraLabel label, int level) {
  if (level < 1) fail(ErrorCode::InvalidArgument, "level must be >= 1");
  std::vector<HighestWeight> out;
  switch (label) {
    case AlgebraLabel::A1_1:
      for (int k0 = 0; k0 <= level; ++k0) out.push_back({label, {k0, level - k0}});
      break;
    case AlgebraLabel::A2_1:
      for (int k0 = 0; k0 <= level; ++k0)
        for (int k1 = 0; k0 + k1 <= level; ++k1) out.push_back({label, {k0, k1, level - k0 - k1}});
      break;
    case AlgebraLabel::A2_2:
      if (level % 2 == 0)
        fail(ErrorCode::UnsupportedLevelParity, "a2_2 weights are only parameterized at odd levels 2k+1");
      for (int k0 = 0; 2 * k0 <= level; ++k0) out.push_back({label, {k0, level - 2 * k0}});
      break;
  }
  return out;
}

std::vector<OrbitPoint> weyl_orbit(const AlgebraDesc& alg, std::span<const int> lam_plus_rho,
                                   std::span<const int> s, int max_degree) {
  const auto n = static_cast<std::size_t>(alg.rank);
  if (lam_plus_rho.size() != n || s.size() != n)
    fail(ErrorCode::InvalidArgument, "orbit data must have one entry per simple root");
  for (int x : lam_plus_rho)
    if (x <= 0) fail(ErrorCode::NonRegularWeight, "Lambda + rho must have strictly positive coordinates");
  for (int x : s)
    if (x <= 0) fail(ErrorCode::InvalidArgument, "orbit degrees need a strictly positive specialization");

  auto degree = [&](const std::vector<int>& c) {
    long d = 0;
    for (std::size_t i = 0; i < n; ++i) d += static_cast<long>(s[i]) * c[i];
    return d;
  };

  std::map<std::vector<int>, int> seen;
  std::deque<std::vector<int>> queue;
  std::vector<int> origin(n, 0);
  seen.emplace(origin, 1);
  queue.push_back(origin);
  while (!queue.empty()) {
    std::vector<int> c = std::move(queue.front());
    queue.pop_front();
    const int parity = seen.at(c);
    for (std::size_t j = 0; j < n; ++j) {
      // mu(h_j) for mu = (Lambda + rho) - sum_i c_i alpha_i.
      long mu = lam_plus_rho[j];
      for (std::size_t i = 0; i < n; ++i) mu -= static_cast<long>(c[i]) * alg.gcm[j][i];
      std::vector<int> next = c;
      next[j] += static_cast<int>(mu);
      if (next[j] < 0 || degree(next) > max_degree) continue;
      auto [it, inserted] = seen.emplace(next, -parity);
      if (!inserted) {
        if (it->second != -parity)
          fail(ErrorCode::ParityConflict, "orbit point reached with conflicting determinant");
        continue;
      }
      queue.push_back(std::move(next));
    }
  }

  std::vector<OrbitPoint> out;
  out.reserve(seen.size());
  for (auto& [c, p] : seen) out.push_back({c, p});
  std::stable_sort(out.begin(), out.end(),
                   [&](const OrbitPoint& a, const OrbitPoint& b) { return degree(a.cvec) < degree(b.cvec); });
  return out;
}

ConformalData conformal_scalars(int k, int k0) {
  if (k < 1 || k0 < 0 || k0 > k) fail(ErrorCode::InvalidArgument, "need k >= 1 and 0 <= k0 <= k");
  const long K = k, K0 = k0;
  ConformalData d;
  d.c1 = rat(3 * K, K + 2);
  d.c1_tilde = d.c1 - rat(8 * K, 3);
  d.c = rat(4 * (2 * K + 1), K + 2);
  d.c2 = d.c - 2;
  if (d.c2 != 2 * d.c1) fail(ErrorCode::IdentityViolation, "c2 != 2 c1");
  d.h = rat(3 * K0 * K0 - 2 * K0 * K - K * K + 2 * K0 - 2 * K, 12 * (K + 2));
  d.h_nu = rat(9 * K0 * K0 - 6 * K0 * K + K * K + 6 * K0 + 2 * K, 36 * (K + 2));
  d.lam = rat(18 * K0 * K0 - 12 * K0 * K + 2 * K * K + 12 * K0 + 31 * K, 144 * (K + 2));
  return d;
}

AnomalyTriple anomaly_identities(int k, int k0) {
  const auto d = conformal_scalars(k, k0);
  const long K = k, K0 = k0;
  AnomalyTriple t{d.h - d.c1_tilde / 24, d.h_nu - d.c1 / 24, d.lam - d.c2 / 24};
  t.shifted.canonicalize();
  t.twisted.canonicalize();
  t.vacuum.canonicalize();
  const Rat closed = rat(18 * K0 * K0 - 12 * K0 * K + 2 * K * K + 12 * K0 - 5 * K, 72 * (K + 2));
  if (t.shifted != closed || t.twisted != closed)
    fail(ErrorCode::IdentityViolation, "anomaly exponents of the shifted and twisted traces disagree");
  if (t.vacuum != t.twisted / 2)
    fail(ErrorCode::IdentityViolation, "vacuum-space anomaly is not half the twisted one");
  return t;
}

Rat heisenberg_l0_scalar() { return rat(5, 72); }

Rat L0_top_eigenvalue(int k, int k0) {
  const auto d = conformal_scalars(k, k0);
  const long K = k, K0 = k0;
  Rat v = rat(18 * K0 * K0 - 12 * K0 * K + 2 * K * K + 12 * K0 + 41 * K + 20, 144 * (K + 2));
  Rat rest = v - heisenberg_l0_scalar();
  rest.canonicalize();
  if (rest != d.lam) fail(ErrorCode::IdentityViolation, "L(0) top eigenvalue minus 5/72 is not the vacuum lowest weight");
  return v;
}

}  // namespace kmchar
