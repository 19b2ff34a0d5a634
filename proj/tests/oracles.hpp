#pragma once

// Slow, independent reference computations used to pin library output.

#include <map>
#include <set>
#include <vector>

#include "qseries.hpp"

namespace oracle {

using kmchar::Int;
using kmchar::Rat;

// Series as an exponent -> coefficient map, exact rationals throughout.
using sparse = std::map<Rat, Int>;

inline sparse to_sparse(const kmchar::QSeries& s) {
  sparse out;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s.coefficients()[j] != 0) out[s.exponent(j)] = s.coefficients()[j];
  return out;
}

inline sparse naive_mul(const sparse& a, const sparse& b, const Rat& order) {
  sparse out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Rat e = ea + eb;
      if (e <= order) out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Number of partitions of n into parts from `parts` (repetition allowed).
inline Int partitions(int n, const std::vector<int>& parts, std::size_t from = 0) {
  if (n == 0) return 1;
  Int total = 0;
  for (std::size_t i = from; i < parts.size(); ++i)
    if (parts[i] <= n) total += partitions(n - parts[i], parts, i);
  return total;
}

inline std::vector<Int> partition_counts(int order, int modulus, const std::set<int>& residues) {
  std::vector<int> parts;
  for (int p = 1; p <= order; ++p)
    if (residues.count(p % modulus)) parts.push_back(p);
  std::vector<Int> out;
  for (int n = 0; n <= order; ++n) out.push_back(partitions(n, parts));
  return out;
}

// prod over (n, e) of (1 - q^n)^e with e >= 0, by repeated polynomial
// multiplication, truncated at q^order.
inline std::vector<Int> finite_product(const std::vector<std::pair<int, int>>& factors, int order) {
  std::vector<Int> poly(order + 1);
  poly[0] = 1;
  for (const auto& [n, e] : factors)
    for (int rep = 0; rep < e; ++rep)
      for (int d = order; d >= n; --d) poly[d] -= poly[d - n];
  return poly;
}

// Power series in x whose coefficients are polynomials in t.
using tpoly = std::vector<Rat>;
using flow_series = std::vector<tpoly>;  // index = power of x

inline tpoly tp_mul(const tpoly& a, const tpoly& b) {
  if (a.empty() || b.empty()) return {};
  tpoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline void tp_add(tpoly& a, const tpoly& b, const Rat& scale = 1) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
}

// The x^d coefficient of the flow has t-degree below d; anything above is
// dropped, which leaves the x-adic fixed point unchanged.
inline void clip(flow_series& f) {
  for (std::size_t d = 0; d < f.size(); ++d)
    if (f[d].size() > d) f[d].resize(d);
}

inline flow_series fs_mul(const flow_series& a, const flow_series& b, int order) {
  flow_series out(order + 1);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) tp_add(out[i + j], tp_mul(a[i], b[j]));
  clip(out);
  return out;
}

// Time-one flow of dx/dt = -sum_j C_j x^{j+1}, found by Picard iteration
// phi <- x + int_0^t V(phi) in the ring Q[t][[x]], then evaluated at t = 1.
// Only coefficients through x^order are returned.
inline std::vector<Rat> picard_flow(const std::vector<Rat>& C, int order) {
  flow_series phi(order + 1);
  phi[1] = {Rat(1)};
  for (int iter = 0; iter < order + 1; ++iter) {
    flow_series field(order + 1);
    flow_series pw = phi;  // phi^{j+1}, starting at j = 0
    for (std::size_t j = 0; j < C.size(); ++j) {
      pw = fs_mul(pw, phi, order);
      for (int d = 0; d <= order; ++d) tp_add(field[d], pw[d], -C[j]);
    }
    flow_series next(order + 1);
    next[1] = {Rat(1)};
    for (int d = 0; d <= order; ++d) {
      tpoly integral(field[d].size() + 1);
      for (std::size_t i = 0; i < field[d].size(); ++i) integral[i + 1] = field[d][i] / Rat(static_cast<long>(i + 1));
      tp_add(next[d], integral);
    }
    clip(next);
    phi = std::move(next);
  }
  std::vector<Rat> out(order + 1);
  for (int d = 0; d <= order; ++d)
    for (const auto& c : phi[d]) out[d] += c;
  for (auto& r : out) r.canonicalize();
  return out;
}

}  // namespace oracle
