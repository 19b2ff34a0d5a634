#include <doctest.h>

#include "algebra.hpp"
#include "characters.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "qtraces.hpp"
#include "serialize.hpp"

using namespace kmchar;

TEST_CASE("chi_tilde") {
  const TraceSpec t = chi_tilde(1, 0, 12);
  CHECK(t.prefactor() == rat(-1, 72));
  CHECK(t.body.grain() == 3);
  CHECK(t.body.coefficient(Rat(0)) == 1);
  for (int k = 1; k <= 3; ++k)
    for (int k0 = 0; k0 <= k; ++k0) CHECK(chi_tilde(k, k0, 6).body.coefficient(Rat(0)) == 1);
}

TEST_CASE("chi_nu serializes identically to chi_tilde") {
  for (auto [k, k0] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{3, 3}}) {
    const Json a = trace_json(chi_tilde(k, k0, 20));
    const Json b = trace_json(chi_nu(k, k0, 20));
    CHECK(a["prefactor"] == b["prefactor"]);
    CHECK(a["body"].dump() == b["body"].dump());
    CHECK(chi_tilde(k, k0, 20).series() == chi_nu(k, k0, 20).series());
  }
  for (int k = 1; k <= 50; ++k)
    for (int k0 = 0; k0 <= k; ++k0) {
      const auto d = conformal_scalars(k, k0);
      CHECK(d.h - d.c1_tilde / 24 == d.h_nu - d.c1 / 24);
    }
}

TEST_CASE("f and chi_tau") {
  const TraceSpec f = f_trace(1, 0, 24);
  CHECK(f.prefactor() == rat(-1, 144));
  CHECK(f.body.coefficient(Rat(0)) == 1);
  for (int k = 1; k <= 3; ++k)
    for (int k0 = 0; k0 <= k; ++k0) {
      const TraceSpec nu = chi_nu(k, k0, 30);
      const TraceSpec fk = f_trace(k, k0, 30);
      CHECK(substitute_power(nu.series(), rat(1, 2)) == fk.series());
    }
  for (auto [k, k0] : {std::pair{1, 0}, std::pair{3, 2}}) {
    const TraceSpec tau = chi_tau(k, k0, 30);
    const TraceSpec fk = f_trace(k, k0, 30);
    CHECK(tau.series() == fk.series());
    CHECK(tau.prefactor() == fk.prefactor());
    CHECK(tau.central_charge == 2 * conformal_scalars(k, k0).c1);
  }
}

TEST_CASE("trace report") {
  const TraceReport r = trace_report(1, 3, -1, 30, 3);
  CHECK(r.ok());
  CHECK(r.checks.size() == 27);
  CHECK(r.checks.front().identity == "shifted_equals_twisted");
  CHECK(r.checks.back().k == 3);
  CHECK(r.checks.back().k0 == 3);
  const TraceReport one = trace_report(2, 2, 1, 18);
  CHECK(one.checks.size() == 3);
  for (const auto& c : one.checks) CHECK(c.k0 == 1);
  CHECK_THROWS_AS(trace_report(2, 2, 3, 18), Error);
}

TEST_CASE("conjugation constants") {
  CHECK(delta2_constants(0).empty());
  const auto C = delta2_constants(9);
  REQUIRE(C.size() == 9);
  CHECK(C[0] == rat(-1, 2));
  CHECK(C[1] == rat(1, 4));
  CHECK(C[2] == rat(-3, 16));
  CHECK(C[3] == rat(1, 6));
  CHECK(C[4] == rat(-31, 192));

  const auto fwd = delta2_forward(C, 10);
  REQUIRE(fwd.size() == 11);
  for (int d = 0; d <= 10; ++d) CHECK(fwd[d] == (d == 1 ? Rat(1) : d == 2 ? rat(1, 2) : Rat(0)));
}

TEST_CASE("conjugation constants agree with a Picard-iterated flow") {
  const auto C = delta2_constants(7);
  const auto flow = oracle::picard_flow(C, 8);
  const auto fwd = delta2_forward(C, 8);
  for (int d = 0; d <= 8; ++d) CHECK(flow[d] == fwd[d]);
  CHECK(flow[1] == 1);
  CHECK(flow[2] == rat(1, 2));
  for (int d = 3; d <= 8; ++d) CHECK(flow[d] == 0);

  // a perturbed constant breaks the round trip at the matching power
  auto bad = C;
  bad[3] += 1;
  const auto off = oracle::picard_flow(bad, 8);
  CHECK(off[4] == 0);
  CHECK(off[5] != 0);
}
