#include "selftest.hpp"

#include <map>
#include <random>
#include <sstream>

#include "errors.hpp"
#include "parallel.hpp"

namespace kmchar {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

QSeries random_series(Rng& rng, bool unit_lead = false) {
  static const int grains[] = {1, 2, 3, 6};
  const int grain = grains[uniform(rng, 0, 3)];
  const Rat shift = rat(uniform(rng, -3 * grain, 3 * grain), grain);
  const int len = uniform(rng, 1, 10);
  std::vector<Int> c;
  for (int i = 0; i < len; ++i) c.emplace_back(uniform(rng, -5, 5));
  if (unit_lead) c[0] = uniform(rng, 0, 1) ? 1 : -1;
  return QSeries(grain, shift, shift + rat(len - 1, grain), std::move(c));
}

MSeries random_mseries(Rng& rng, const std::vector<int>& w, int order, bool unit_const = false) {
  MSeries m(w, order);
  const int n = static_cast<int>(w.size());
  const int terms = uniform(rng, 1, 8);
  for (int t = 0; t < terms; ++t) {
    Exponents e{0, 0, 0};
    for (int i = 0; i < n; ++i) e[i] = uniform(rng, 0, order / w[i]);
    m.add_term(e, Int(uniform(rng, -4, 4)));
  }
  if (unit_const) {
    const Int& c0 = m.coefficient({0, 0, 0});
    m.add_term({0, 0, 0}, Int((uniform(rng, 0, 1) ? 1 : -1) - c0));
  }
  return m;
}

std::string describe(const QSeries& s) {
  std::ostringstream out;
  out << "grain " << s.grain() << " shift " << short_fraction(s.shift()) << " [";
  for (std::size_t j = 0; j < s.size(); ++j) out << (j ? " " : "") << s.coefficients()[j].get_str();
  out << "]";
  return out.str();
}

template <class Body>
PropertyResult run_law(const std::string& law, int cases, Rng& rng, Body&& body) {
  PropertyResult r{law, cases, 0, {}};
  for (int i = 0; i < cases; ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = body(rng, why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!ok) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + why;
    }
  }
  return r;
}

HighestWeight random_weight(Rng& rng) {
  const AlgebraLabel label = all_algebras()[static_cast<std::size_t>(uniform(rng, 0, 2))];
  int level = uniform(rng, 1, 4);
  if (label == AlgebraLabel::A2_2 && level % 2 == 0) --level;
  const auto ws = level_weights(label, level);
  return ws[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ws.size()) - 1))];
}

}  // namespace

std::vector<PropertyResult> run_property_suites(int cases, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;

  out.push_back(run_law("add_commutative", cases, rng, [](Rng& g, std::string& why) {
    QSeries a = random_series(g), b = random_series(g);
    why = describe(a) + " + " + describe(b);
    return add(a, b) == add(b, a);
  }));
  out.push_back(run_law("add_associative", cases, rng, [](Rng& g, std::string& why) {
    QSeries a = random_series(g), b = random_series(g), c = random_series(g);
    why = describe(a) + ", " + describe(b) + ", " + describe(c);
    return add(add(a, b), c) == add(a, add(b, c));
  }));
  out.push_back(run_law("mul_commutative", cases, rng, [](Rng& g, std::string& why) {
    QSeries a = random_series(g), b = random_series(g);
    why = describe(a) + " * " + describe(b);
    return mul(a, b) == mul(b, a);
  }));
  out.push_back(run_law("mul_associative", cases, rng, [](Rng& g, std::string& why) {
    QSeries a = random_series(g), b = random_series(g), c = random_series(g);
    why = describe(a) + ", " + describe(b) + ", " + describe(c);
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  }));
  out.push_back(run_law("distributive", cases, rng, [](Rng& g, std::string& why) {
    QSeries a = random_series(g), b = random_series(g), c = random_series(g);
    why = describe(a) + ", " + describe(b) + ", " + describe(c);
    return mul(a, add(b, c)) == add(mul(a, b), mul(a, c));
  }));
  out.push_back(run_law("substitution_multiplicative", cases, rng, [](Rng& g, std::string& why) {
    QSeries a = random_series(g), b = random_series(g);
    const Rat p = rat(uniform(g, 1, 4), uniform(g, 1, 6));
    why = describe(a) + ", " + describe(b) + " at q^" + short_fraction(p);
    return substitute_power(mul(a, b), p) == mul(substitute_power(a, p), substitute_power(b, p));
  }));
  out.push_back(run_law("invert_two_sided", cases, rng, [](Rng& g, std::string& why) {
    QSeries a = random_series(g, true);
    why = describe(a);
    QSeries inv = invert(a);
    QSeries unit(1, Rat(0), a.order() - a.shift(), {Int(1)});
    return mul(a, inv) == unit && mul(inv, a) == unit && invert(inv) == a;
  }));
  out.push_back(run_law("specialization_multiplicative", cases, rng, [](Rng& g, std::string& why) {
    const int n = uniform(g, 2, 3);
    std::vector<int> w, s;
    for (int i = 0; i < n; ++i) {
      w.push_back(uniform(g, 1, 3));
      s.push_back(uniform(g, 1, 4));
    }
    const int order = uniform(g, 3, 10);
    MSeries a = random_mseries(g, w, order), b = random_mseries(g, w, order);
    why = "weights/s of size " + std::to_string(n) + ", order " + std::to_string(order);
    QSeries lhs = specialize(m_mul(a, b), s);
    QSeries rhs = mul(specialize(a, s), specialize(b, s));
    auto c = compare(lhs, rhs);
    return c.equal && lhs.order() == rhs.order();
  }));
  out.push_back(run_law("multivariate_invert_round_trip", cases, rng, [](Rng& g, std::string& why) {
    const int n = uniform(g, 2, 3);
    std::vector<int> w;
    for (int i = 0; i < n; ++i) w.push_back(uniform(g, 1, 3));
    const int order = uniform(g, 2, 9);
    MSeries a = random_mseries(g, w, order, true);
    why = "order " + std::to_string(order);
    MSeries inv = m_invert(a);
    MSeries one = MSeries::one(w, order);
    return compare(m_mul(a, inv), one).equal && compare(m_invert(inv), a).equal;
  }));
  out.push_back(run_law("character_coefficients_nonnegative", cases, rng, [](Rng& g, std::string& why) {
    HighestWeight lam = random_weight(g);
    std::vector<int> s;
    for (int i = 0; i < algebra(lam.algebra).rank; ++i) s.push_back(uniform(g, 1, 3));
    why = weight_json(lam).dump();
    QSeries ch = wk_specialized_char(lam, s, 14);
    if (ch.coefficients()[0] != 1) return false;
    for (const auto& c : ch.coefficients())
      if (c < 0) return false;
    return true;
  }));
  out.push_back(run_law("orbit_parity_consistent", cases, rng, [](Rng& g, std::string& why) {
    const AlgebraDesc& alg = algebra(all_algebras()[static_cast<std::size_t>(uniform(g, 0, 2))]);
    const auto n = static_cast<std::size_t>(alg.rank);
    std::vector<int> lr, s;
    for (std::size_t i = 0; i < n; ++i) {
      lr.push_back(uniform(g, 1, 4));
      s.push_back(uniform(g, 1, 3));
    }
    const int N = uniform(g, 4, 30);
    why = alg.name + " order " + std::to_string(N);
    const auto pts = weyl_orbit(alg, lr, s, N);
    std::map<std::vector<int>, int> seen;
    for (const auto& p : pts)
      if (!seen.emplace(p.cvec, p.parity).second) return false;
    if (seen[std::vector<int>(n, 0)] != 1) return false;
    // Every simple reflection moves each point, flips parity, and stays
    // inside the set whenever its image is within the degree bound.
    for (const auto& p : pts)
      for (std::size_t j = 0; j < n; ++j) {
        long mu = lr[j];
        for (std::size_t i = 0; i < n; ++i) mu -= static_cast<long>(p.cvec[i]) * alg.gcm[j][i];
        if (mu == 0) return false;
        std::vector<int> q = p.cvec;
        q[j] += static_cast<int>(mu);
        long d = 0;
        for (std::size_t i = 0; i < n; ++i) d += static_cast<long>(s[i]) * q[i];
        if (q[j] < 0 || d > N) continue;
        auto it = seen.find(q);
        if (it == seen.end() || it->second != -p.parity) return false;
      }
    return true;
  }));
  return out;
}

CriterionResult criterion_appendix_411() {
  CriterionResult r{1, "specialization (4,1,1) of the level-3 A2^(1) vacuum character", false, {}};
  const QSeries s = specialize_411(20);
  const long expected[] = {1, 0, 0, 0, 1, 2, 2, 2};
  bool ok = true;
  for (long j = 0; j < 8; ++j) ok = ok && s.coefficient(rat(j, 6)) == Int(expected[j]);
  ok = ok && s.coefficient(rat(20, 6)) == Int(46);
  r.passed = ok;
  r.detail = "q^{j/6}, j<=7: " + std::string(ok ? "match" : "differ") + "; q^{20/6} = " +
             s.coefficient(rat(20, 6)).value_or(Int(-1)).get_str();
  return r;
}

CriterionResult criterion_homogeneous() {
  CriterionResult r{2, "homogeneous specialization and vacuum-space quotient", false, {}};
  const QSeries f = homogeneous_level3(3);
  const QSeries v = vacuum_dim_level3(3);
  r.passed = f == QSeries::polynomial({1, 8, 44, 192}, Rat(3)) && v == QSeries::polynomial({1, 6, 27, 98}, Rat(3));
  r.detail = describe(f) + "; " + describe(v);
  return r;
}

CriterionResult criterion_traces_level1() {
  CriterionResult r{3, "vacuum-algebra trace vs V_1(A1^(1)) and its tensor square", false, {}};
  const TraceSpec a3 = omega30_trace(4);
  const TraceSpec a4 = a1_level1_trace(3);
  const TraceSpec a5 = tensor_square_trace(3);
  const bool ok3 = a3.prefactor() == rat(-1, 12) && a3.body == QSeries::polynomial({1, 0, 3, 8, 16}, Rat(4));
  const bool ok4 = a4.prefactor() == rat(-1, 24) && a4.body == QSeries::polynomial({1, 3, 4, 7}, Rat(3));
  const bool ok5 = a5.prefactor() == rat(-1, 12) && a5.body == QSeries::polynomial({1, 6, 17, 38}, Rat(3)) &&
                   a5.body == mul(a4.body, a4.body);
  r.passed = ok3 && ok4 && ok5;
  r.detail = describe(a3.body) + "; " + describe(a4.body) + "; " + describe(a5.body);
  return r;
}

CriterionResult criterion_duality(int jobs) {
  CriterionResult r{4, "duality between A1^(1) level k and A2^(2) level 2k+1, order 60", true, {}};
  int entries = 0;
  for (int k = 1; k <= 4; ++k) {
    const auto rep = verify_duality(k, 60, jobs);
    for (const auto& e : rep.entries) {
      ++entries;
      if (!e.ok()) {
        r.passed = false;
        if (r.detail.empty()) r.detail = "first failure at k=" + std::to_string(k) + " k0=" + std::to_string(e.k0) + "; ";
      }
    }
  }
  r.detail += std::to_string(entries) + " (k, k0) pairs checked against both routes";
  return r;
}

CriterionResult criterion_product_formulas(int jobs) {
  CriterionResult r{5, "congruence products vs Weyl-Kac, order 50", true, {}};
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= 3; ++k)
    for (int k0 = 0; k0 <= k; ++k0) pairs.emplace_back(k, k0);
  pairs.emplace_back(4, 3);
  std::vector<char> ok(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), jobs, [&](int i) {
    const auto [k, k0] = pairs[static_cast<std::size_t>(i)];
    const int N = 50;
    auto a1 = compare(wk_specialized_char({AlgebraLabel::A1_1, {k0, k - k0}}, {1, 2}, N),
                      product_char(AlgebraLabel::A1_1, k, k0, N));
    auto a2 = compare(wk_specialized_char({AlgebraLabel::A2_2, {k0, 2 * k + 1 - 2 * k0}}, {1, 1}, N),
                      product_char(AlgebraLabel::A2_2, k, k0, N));
    ok[static_cast<std::size_t>(i)] = a1.equal && a2.equal && a1.compared_order == N && a2.compared_order == N;
  });
  int exceptional = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (is_exceptional(pairs[i].first, pairs[i].second)) ++exceptional;
    if (!ok[i]) {
      r.passed = false;
      r.detail += "mismatch at k=" + std::to_string(pairs[i].first) + " k0=" + std::to_string(pairs[i].second) + "; ";
    }
  }
  r.detail += std::to_string(pairs.size()) + " pairs, " + std::to_string(exceptional) + " exceptional";
  return r;
}

CriterionResult criterion_trace_chain(int jobs) {
  CriterionResult r{6, "q-trace identity chain and anomaly identities", false, {}};
  const TraceReport rep = trace_report(1, 3, -1, 30, jobs);
  bool anomalies = true;
  try {
    for (int k = 1; k <= 50; ++k)
      for (int k0 = 0; k0 <= k; ++k0) {
        anomaly_identities(k, k0);
        L0_top_eigenvalue(k, k0);
      }
  } catch (const Error&) {
    anomalies = false;
  }
  r.passed = rep.ok() && anomalies;
  r.detail = std::to_string(rep.checks.size()) + " trace identities " + (rep.ok() ? "hold" : "FAIL") +
             "; anomaly identities for k<=50 " + (anomalies ? "hold" : "FAIL");
  return r;
}

CriterionResult criterion_delta2() {
  CriterionResult r{7, "conjugation constants C_j", false, {}};
  const auto C = delta2_constants(9);
  const auto f = delta2_forward(C, 10);
  bool round_trip = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Rat want = i == 1 ? Rat(1) : i == 2 ? rat(1, 2) : Rat(0);
    round_trip = round_trip && f[i] == want;
  }
  r.passed = C[0] == rat(-1, 2) && C[1] == rat(1, 4) && round_trip;
  r.detail = "C1 = " + short_fraction(C[0]) + ", C2 = " + short_fraction(C[1]) + ", round trip to x^10 " +
             (round_trip ? "exact" : "FAILS");
  return r;
}

CriterionResult criterion_theta() {
  CriterionResult r{8, "string-function / theta decomposition, total degree 12", false, {}};
  const int N = 12;
  const int D = (N + 2) / 3;
  const MSeries chv = char_level3(3 * D + 3);
  const MSeries theta = theta_assembly(extract_string_functions(chv, D), N);
  const auto c = compare(theta, chv.truncated(N));
  r.passed = c.equal && c.compared_order == N;
  r.detail = std::to_string(chv.truncated(N).term_count()) + " monomials compared through degree " +
             std::to_string(c.compared_order);
  return r;
}

CriterionResult criterion_properties(int cases, std::uint64_t seed) {
  CriterionResult r{9, "randomized property suites", true, {}};
  const auto res = run_property_suites(cases, seed);
  for (const auto& p : res)
    if (!p.ok()) {
      r.passed = false;
      r.detail += p.law + " failed " + std::to_string(p.failures) + "x (" + p.first_failure + "); ";
    }
  r.detail += std::to_string(res.size()) + " laws x " + std::to_string(cases) + " cases";
  return r;
}

std::vector<CriterionResult> run_selftest(int jobs) {
  std::vector<CriterionResult> out;
  auto guarded = [](int id, auto&& fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      return CriterionResult{id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()};
    }
  };
  out.push_back(guarded(1, [] { return criterion_appendix_411(); }));
  out.push_back(guarded(2, [] { return criterion_homogeneous(); }));
  out.push_back(guarded(3, [] { return criterion_traces_level1(); }));
  out.push_back(guarded(4, [&] { return criterion_duality(jobs); }));
  out.push_back(guarded(5, [&] { return criterion_product_formulas(jobs); }));
  out.push_back(guarded(6, [&] { return criterion_trace_chain(jobs); }));
  out.push_back(guarded(7, [] { return criterion_delta2(); }));
  out.push_back(guarded(8, [] { return criterion_theta(); }));
  out.push_back(guarded(9, [] { return criterion_properties(); }));
  return out;
}

Json selftest_json(const std::vector<CriterionResult>& results) {
  Json items = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    items.push_back(Json{{"id", r.id}, {"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
  }
  return Json{{"status", all ? "pass" : "fail"}, {"criteria", std::move(items)}};
}

std::string selftest_table(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " -- " << r.detail << '\n';
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return out.str();
}

}  // namespace kmchar
