// Acceptance run: nine criteria, one line each, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "appendix.hpp"
#include "characters.hpp"
#include "qtraces.hpp"
#include "selftest.hpp"

using namespace kmchar;

namespace {

struct failure {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw failure{what};
}

std::string show(const std::vector<Int>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "[") << v[i].get_str();
  s << "]";
  return s.str();
}

void expect_mantissa(const QSeries& s, const std::vector<long>& want, const std::string& label) {
  std::vector<Int> got(s.coefficients().begin(), s.coefficients().end());
  std::vector<Int> w(want.begin(), want.end());
  expect(s.grain() == 1 && s.shift() == 0, label + ": not an integer power series");
  expect(got == w, label + ": got " + show(got) + ", want " + show(w));
}

int failures = 0;

void run(int id, const std::string& name, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string status = "PASS", detail;
  try {
    detail = body();
  } catch (const failure& f) {
    status = "FAIL";
    detail = f.what;
  } catch (const std::exception& e) {
    status = "FAIL";
    detail = std::string("exception: ") + e.what();
  }
  if (status == "FAIL") ++failures;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %d. %s -- %s (%.1fs)\n", status.c_str(), id, name.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
}

}  // namespace

int main() {
  const int jobs = 4;

  run(1, "(4,1,1) specialization of the level 3 vacuum character", [] {
    const QSeries s = specialize_411(20);
    const long head[] = {1, 0, 0, 0, 1, 2, 2, 2};
    for (int j = 0; j < 8; ++j) {
      const auto c = s.coefficient(rat(j, 6));
      expect(c && *c == head[j], "coefficient of q^" + std::to_string(j) + "/6");
    }
    const auto c20 = s.coefficient(rat(20, 6));
    expect(c20 && *c20 == 46, "coefficient of q^20/6 is " + (c20 ? c20->get_str() : std::string("unknown")));
    return std::string("1 + q^4/6 + 2q^5/6 + 2q + 2q^7/6 + ... + 46q^20/6");
  });

  run(2, "homogeneous series and vacuum quotient", [] {
    expect_mantissa(homogeneous_level3(3), {1, 8, 44, 192}, "homogeneous");
    expect_mantissa(vacuum_dim_level3(3), {1, 6, 27, 98}, "vacuum quotient");
    return std::string("1+8q+44q^2+192q^3; 1+6q+27q^2+98q^3");
  });

  run(3, "vacuum algebra, level 1 and tensor square traces", [] {
    const TraceSpec a3 = omega30_trace(4), a4 = a1_level1_trace(3), a5 = tensor_square_trace(3);
    expect(a3.prefactor() == rat(-1, 12), "vacuum algebra prefactor");
    expect(a4.prefactor() == rat(-1, 24), "level 1 prefactor");
    expect(a5.prefactor() == rat(-1, 12), "tensor square prefactor");
    expect_mantissa(a3.body, {1, 0, 3, 8, 16}, "vacuum algebra");
    expect_mantissa(a4.body, {1, 3, 4, 7}, "level 1");
    expect_mantissa(a5.body, {1, 6, 17, 38}, "tensor square");
    expect(mul(a4.body, a4.body) == a5.body, "tensor square is not the square of the level 1 mantissa");
    return std::string("q^-1/12(1+3q^2+8q^3+16q^4), q^-1/24(1+3q+4q^2+7q^3), q^-1/12(1+6q+17q^2+38q^3)");
  });

  run(4, "level k / level 2k+1 duality, k = 1..4, order 60", [jobs] {
    int pairs = 0;
    for (int k = 1; k <= 4; ++k) {
      const auto r = verify_duality(k, 60, jobs);
      expect(r.entries.size() == static_cast<std::size_t>(k + 1), "missing k0 entries");
      for (const auto& e : r.entries) {
        const std::string at = " at k=" + std::to_string(k) + ", k0=" + std::to_string(e.k0);
        expect(e.sides.compared_order == 60, "compared order" + at);
        expect(e.sides.max_abs_diff == 0, "discrepancy " + e.sides.max_abs_diff.get_str() + at);
        expect(e.lhs_product.equal && e.lhs_product.compared_order == 60, "A1 side vs product" + at);
        expect(e.rhs_product.equal && e.rhs_product.compared_order == 60, "A2 side vs product" + at);
        ++pairs;
      }
    }
    expect(pairs == 14, "pair count");
    return std::to_string(pairs) + " (k, k0) pairs, zero discrepancy, both sides match their products";
  });

  run(5, "congruence products vs Weyl-Kac, order 50", [] {
    std::vector<std::pair<int, int>> cases;
    for (int k = 1; k <= 3; ++k)
      for (int k0 = 0; k0 <= k; ++k0) cases.push_back({k, k0});
    cases.push_back({4, 3});
    int exceptional = 0;
    for (auto [k, k0] : cases) {
      const std::string at = " at k=" + std::to_string(k) + ", k0=" + std::to_string(k0);
      const QSeries a1 = wk_specialized_char({AlgebraLabel::A1_1, {k0, k - k0}}, {1, 2}, 50);
      const QSeries a2 = wk_specialized_char({AlgebraLabel::A2_2, {k0, 2 * k + 1 - 2 * k0}}, {1, 1}, 50);
      expect(a1 == product_char(AlgebraLabel::A1_1, k, k0, 50), "A1" + at);
      expect(a2 == product_char(AlgebraLabel::A2_2, k, k0, 50), "A2" + at);
      if (is_exceptional(k, k0)) ++exceptional;
    }
    expect(exceptional == 2, "expected the two exceptional pairs (1,1) and (4,3)");
    return std::to_string(cases.size()) + " pairs, including exceptional (1,1) and (4,3)";
  });

  run(6, "q-trace identity chain and anomaly identities", [jobs] {
    const TraceReport r = trace_report(1, 3, -1, 30, jobs);
    expect(r.checks.size() == 27, "expected 27 checks, got " + std::to_string(r.checks.size()));
    for (const auto& c : r.checks)
      expect(c.ok(), c.identity + " fails at k=" + std::to_string(c.k) + ", k0=" + std::to_string(c.k0));
    for (int k = 1; k <= 50; ++k)
      for (int k0 = 0; k0 <= k; ++k0) {
        const auto a = anomaly_identities(k, k0);
        const Rat closed = rat(18 * k0 * k0 - 12 * k0 * k + 2 * k * k + 12 * k0 - 5 * k, 72 * (k + 2));
        expect(a.shifted == closed && a.twisted == closed && 2 * a.vacuum == closed,
               "anomaly at k=" + std::to_string(k) + ", k0=" + std::to_string(k0));
      }
    expect(anomaly_identities(1, 0).vacuum == rat(-1, 144), "k=1, k0=0 vacuum anomaly");
    return std::string("27 trace identities; anomalies exact for k <= 50");
  });

  run(7, "conjugation constants", [] {
    const auto C = delta2_constants(9);
    expect(C.size() == 9, "length");
    expect(C[0] == rat(-1, 2), "C1 = " + C[0].get_str());
    expect(C[1] == rat(1, 4), "C2 = " + C[1].get_str());
    const auto f = delta2_forward(C, 10);
    for (int d = 0; d <= 10; ++d) {
      const Rat want = d == 1 ? Rat(1) : d == 2 ? rat(1, 2) : Rat(0);
      expect(f[d] == want, "x^" + std::to_string(d) + " coefficient " + f[d].get_str());
    }
    return std::string("C1 = -1/2, C2 = 1/4; round trip x + x^2/2 through x^10");
  });

  run(8, "theta decomposition equals the direct character, degree 12", [] {
    const MSeries chv = char_level3(15);
    const MSeries theta = theta_assembly(extract_string_functions(chv, 4), 12);
    const auto cmp = compare(theta, char_level3(12));
    expect(cmp.compared_order == 12, "compared only to degree " + std::to_string(cmp.compared_order));
    expect(cmp.equal, "monomials differ");
    return std::to_string(theta.term_count()) + " monomials agree";
  });

  run(9, "randomized property suites", [] {
    const auto results = run_property_suites(1000, 20240601);
    expect(results.size() == 11, "expected 11 laws");
    for (const auto& r : results) {
      expect(r.cases >= 1000, r.law + " ran " + std::to_string(r.cases) + " cases");
      expect(r.ok(), r.law + ": " + r.first_failure);
    }
    return std::string("11 laws x 1000 cases");
  });

  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
