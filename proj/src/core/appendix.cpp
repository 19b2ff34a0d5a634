#include "appendix.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "algebra.hpp"
#include "characters.hpp"
#include "errors.hpp"

namespace kmchar {

namespace {

const std::vector<int> kUnit{1, 1, 1};

// (uvw)^e v^a w^b
struct LatticeMonomial {
  int e, a, b;
  int degree() const { return 3 * e + a + b; }
};

std::vector<LatticeMonomial> group_terms(int g, int m, int n) {
  const int q = m * m + n * n - m * n;
  switch (g) {
    case 0:
      return {{3 * q, -3 * m, -3 * n}};
    case 1: {
      const int p = 2 * m - n, r = 2 * n - m, s = m + n;
      return {{3 * q - p, 1 - 3 * m, -3 * n},     {3 * q + p, -1 - 3 * m, -3 * n},
              {3 * q - r, -3 * m, 1 - 3 * n},     {3 * q + r, -3 * m, -1 - 3 * n},
              {3 * q - s, 1 - 3 * m, 1 - 3 * n},  {3 * q + s, -1 - 3 * m, -1 - 3 * n}};
    }
    case 2:
      // Image of the last group under the diagram symmetry v <-> w, which
      // swaps 3L0 - 2a0 - a1 and 3L0 - 2a0 - a2. The variant with exponent
      // 3(Q - m - n) + 2 and v^{1 + 3(2n - m)} leaves u^{-1} v^3 w behind at
      // (m, n) = (1, 1).
      return {{3 * (q + m - n) + 2, 1 + 3 * m, -1 + 3 * n}};
    default:
      return {{3 * (q + m - n) + 2, -1 - 3 * m, 1 - 3 * n}};
  }
}

// Every lattice degree is at least 9Q - 12(|m| + |n|) - 2 >= 4.5 r^2 - 24 r - 2
// with r = max(|m|, |n|), increasing for r >= 3. The radius also covers the
// minimum of each group, which is attained within |m|, |n| <= 6.
int lattice_radius(int N) {
  int r = 7;
  while (9L * r * r - 48L * r - 4 <= 2L * N) ++r;
  return r;
}

QSeries fock_inverse(int n) {
  return eta_like_product(ProductSpec{{{1, {0}, 1}, {1, {0}, 1}}}, Rat(n));
}

ReferenceCheck make_check(std::string name, QSeries computed, std::vector<std::pair<Rat, Int>> expected,
                          std::optional<Rat> prefactor = std::nullopt,
                          std::optional<Rat> expected_prefactor = std::nullopt) {
  ReferenceCheck c{std::move(name), std::move(computed), std::move(prefactor), std::move(expected_prefactor),
                   std::move(expected), std::nullopt, true};
  if (c.prefactor != c.expected_prefactor) c.ok = false;
  for (const auto& [e, v] : c.expected) {
    auto got = c.computed.coefficient(e);
    if (!got) fail(ErrorCode::InsufficientOrder, c.name + ": reference exponent beyond the computed order");
    if (*got != v) {
      c.ok = false;
      if (!c.first_mismatch) c.first_mismatch = Mismatch{e, *got, v};
    }
  }
  return c;
}

std::vector<std::pair<Rat, Int>> integer_grades(std::initializer_list<long> coeffs, long den = 1) {
  std::vector<std::pair<Rat, Int>> out;
  long j = 0;
  for (long c : coeffs) out.emplace_back(rat(j++, den), Int(c));
  return out;
}

}  // namespace

HighestWeight level3_vacuum_weight() { return {AlgebraLabel::A2_1, {3, 0, 0}}; }

MSeries char_level3(int N) {
  if (N < 1) fail(ErrorCode::InvalidArgument, "total degree must be >= 1");
  return wk_character(level3_vacuum_weight(), kUnit, N);
}

StringFunctionSet extract_string_functions(const MSeries& chv, int D) {
  if (chv.weights() != kUnit) fail(ErrorCode::InvalidArgument, "string functions need unit degree weights");
  if (D < 0) fail(ErrorCode::InvalidArgument, "string function order must be nonnegative");
  if (chv.order() < 3 * D + 3) fail(ErrorCode::InsufficientOrder, "character order must be at least 3D + 3");
  std::vector<Int> s1, s2(1), s3, s4;
  for (int k = 0; k <= D; ++k) {
    s1.push_back(chv.coefficient({k, k, k}));
    s2.push_back(chv.coefficient({k + 1, k, k}));
    s3.push_back(chv.coefficient({k + 2, k, k + 1}));
    s4.push_back(chv.coefficient({k + 2, k + 1, k}));
  }
  return {QSeries::polynomial(std::move(s1), Rat(D)), QSeries::polynomial(std::move(s2), Rat(D + 1)),
          QSeries::polynomial(std::move(s3), Rat(D)), QSeries::polynomial(std::move(s4), Rat(D))};
}

MSeries theta_assembly(const StringFunctionSet& sf, int N) {
  if (N < 1) fail(ErrorCode::InvalidArgument, "total degree must be >= 1");
  const QSeries* fns[4] = {&sf.sf1, &sf.sf2, &sf.sf3, &sf.sf4};
  for (const auto* f : fns)
    if (f->grain() != 1 || f->shift() != 0) fail(ErrorCode::InvalidArgument, "string functions are integer power series");
  const int R = lattice_radius(N);

  int known = N;
  std::map<Exponents, Int> acc;
  for (int g = 0; g < 4; ++g) {
    const QSeries& f = *fns[g];
    const long fo = to_i64(floor_rat(f.order()));
    int min_deg = INT_MAX;
    for (int m = -R; m <= R; ++m)
      for (int n = -R; n <= R; ++n)
        for (const auto& t : group_terms(g, m, n)) {
          min_deg = std::min(min_deg, t.degree());
          for (std::size_t j = 0; j < f.size(); ++j) {
            const int deg = t.degree() + 3 * static_cast<int>(j);
            if (deg > N || f.coefficients()[j] == 0) continue;
            const int e = t.e + static_cast<int>(j);
            acc[{e, e + t.a, e + t.b}] += f.coefficients()[j];
          }
        }
    known = static_cast<int>(std::min<long>(known, 3 * (fo + 1) + min_deg - 1));
  }
  if (known < 0) fail(ErrorCode::InsufficientOrder, "string functions are too short for any known degree");

  MSeries out(kUnit, known);
  for (const auto& [e, c] : acc) {
    if (c == 0) continue;
    if (e[0] + e[1] + e[2] > known) continue;
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
      fail(ErrorCode::IdentityViolation, "a monomial with a negative exponent survived the lattice sum");
    out.add_term(e, c);
  }
  return out;
}

MComparison compare(const MSeries& a, const MSeries& b) {
  if (a.weights() != b.weights()) fail(ErrorCode::IncompatibleTruncation, "multivariate series have different degree weights");
  MComparison out;
  out.compared_order = std::min(a.order(), b.order());
  std::map<Exponents, std::pair<Int, Int>> merged;
  for (const auto& [e, c] : a.terms())
    if (a.degree(e) <= out.compared_order) merged[e].first = c;
  for (const auto& [e, c] : b.terms())
    if (b.degree(e) <= out.compared_order) merged[e].second = c;
  for (const auto& [e, p] : merged) {
    if (p.first == p.second) continue;
    out.equal = false;
    out.first_mismatch = std::make_pair(e, p);
    break;
  }
  return out;
}

QSeries specialize_411(int N) {
  const std::vector<int> s{4, 1, 1};
  MSeries ch = wk_character(level3_vacuum_weight(), s, N);
  return substitute_power(specialize(ch, s), rat(1, 6));
}

QSeries homogeneous_level3(int n) { return homogeneous_char(level3_vacuum_weight(), n); }

QSeries vacuum_dim_level3(int n) { return mul(homogeneous_level3(n), fock_inverse(n)); }

TraceSpec omega30_trace(int N) {
  if (N < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
  // Degree zero in v and w after the substitution keeps exactly the (uvw)^k
  // monomials, so total degree 3N suffices.
  const int D = N;
  MSeries theta = theta_assembly(extract_string_functions(char_level3(3 * D + 3), D), 3 * N);
  QSeries body = mul(collect_degree_zero(theta), fock_inverse(N));
  return {conformal_scalars(1, 0).c2, Rat(0), body};
}

TraceSpec a1_level1_trace(int N) {
  return {conformal_scalars(1, 0).c1, Rat(0), homogeneous_char({AlgebraLabel::A1_1, {1, 0}}, N)};
}

TraceSpec tensor_square_trace(int N) {
  TraceSpec a = a1_level1_trace(N);
  return {2 * a.central_charge, Rat(0), mul(a.body, a.body)};
}

std::vector<NonIsomorphy> nonisomorphy_report() {
  const int N = 4;
  const QSeries a3 = omega30_trace(N).body;
  const QSeries a4 = a1_level1_trace(N).body;
  const QSeries a5 = tensor_square_trace(N).body;
  std::vector<NonIsomorphy> out;
  auto add = [&](std::string l, std::string r, const QSeries& x, const QSeries& y) {
    auto c = compare(x, y);
    out.push_back({std::move(l), std::move(r), c.compared_order, c.first_mismatch});
  };
  add("vacuum_algebra", "a1_level1", a3, a4);
  add("vacuum_algebra", "a1_level1_squared", a3, a5);
  return out;
}

bool AppendixReport::ok() const {
  return theta.equal && square_ok && prefactor_consistent &&
         std::all_of(checks.begin(), checks.end(), [](const ReferenceCheck& c) { return c.ok; });
}

AppendixReport appendix_report(int theta_order) {
  if (theta_order < 1) fail(ErrorCode::InvalidArgument, "order must be >= 1");
  AppendixReport r;
  r.order = theta_order;
  const int D = (theta_order + 2) / 3;
  const MSeries chv = char_level3(3 * D + 3);
  r.theta = compare(theta_assembly(extract_string_functions(chv, D), theta_order), chv.truncated(theta_order));
  if (r.theta.compared_order < theta_order) r.theta.equal = false;

  auto a2_expected = integer_grades({1, 0, 0, 0, 1, 2, 2, 2}, 6);
  a2_expected.emplace_back(rat(20, 6), Int(46));
  r.checks.push_back(make_check("specialization_411", specialize_411(20), std::move(a2_expected)));
  r.checks.push_back(make_check("homogeneous_level3", homogeneous_level3(3), integer_grades({1, 8, 44, 192})));
  r.checks.push_back(make_check("vacuum_space_level3", vacuum_dim_level3(3), integer_grades({1, 6, 27, 98})));

  const TraceSpec a3 = omega30_trace(4);
  const TraceSpec a4 = a1_level1_trace(3);
  const TraceSpec a5 = tensor_square_trace(3);
  r.checks.push_back(make_check("vacuum_algebra_trace", a3.body, integer_grades({1, 0, 3, 8, 16}), a3.prefactor(),
                                rat(-1, 12)));
  r.checks.push_back(make_check("a1_level1_trace", a4.body, integer_grades({1, 3, 4, 7}), a4.prefactor(), rat(-1, 24)));
  r.checks.push_back(make_check("a1_level1_squared_trace", a5.body, integer_grades({1, 6, 17, 38}), a5.prefactor(),
                                rat(-1, 12)));

  r.square_ok = a5.body == mul(a4.body, a4.body);
  Rat expected_pre = -conformal_scalars(1, 0).c2 / 24;
  expected_pre.canonicalize();
  r.prefactor_consistent = a3.prefactor() == expected_pre;
  r.nonisomorphy = nonisomorphy_report();
  return r;
}

}  // namespace kmchar
