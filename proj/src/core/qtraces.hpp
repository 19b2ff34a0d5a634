#pragma once

// q-traces tr q^{L(0) - c/24} of the modules attached to V_k(A1^(1)) and the
// level 2k+1 vacuum spaces, stored as prefactor exponent plus mantissa.

#include <optional>
#include <string>
#include <vector>

#include "qseries.hpp"
#include "rational.hpp"

namespace kmchar {

struct TraceSpec {
  Rat central_charge;
  Rat lowest_weight;
  QSeries body;

  Rat prefactor() const;  // lowest_weight - central_charge / 24
  QSeries series() const;
};

// In every trace below N is the order of the underlying integer-graded
// specialized character.

// Shifted Virasoro element: body F_(1,2) character under q -> q^{1/3},
// prefactor h - c1_tilde/24.
TraceSpec chi_tilde(int k, int k0, int N);
// nu-twisted module: same body, prefactor h_nu - c1/24. Throws
// IdentityViolation unless its series equals chi_tilde's.
TraceSpec chi_nu(int k, int k0, int N);
// Vacuum space: body vacuum_graded_dim, prefactor lam - c2/24.
TraceSpec f_trace(int k, int k0, int N);
// tau-twisted module of the tensor square: chi_nu under q -> q^{1/2},
// central charge c2, lowest weight h_nu/2 + c1/16. Throws IdentityViolation
// unless it equals f_trace.
TraceSpec chi_tau(int k, int k0, int N);

struct IdentityCheck {
  std::string identity;
  int k = 0;
  int k0 = 0;
  Rat order;
  bool prefactor_equal = true;
  SeriesComparison body;
  bool ok() const { return prefactor_equal && body.equal; }
};

// The three trace identities for one (k, k0), without throwing on failure.
std::vector<IdentityCheck> trace_identity_checks(int k, int k0, int N);

struct TraceReport {
  int order = 0;
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

// k0 < 0 selects every k0 in 0..k. Work is spread over `jobs` threads and
// the checks come back ordered by (k, k0, identity).
TraceReport trace_report(int k_min, int k_max, int k0, int N, int jobs = 1);

// C_1..C_J with exp(-sum_j C_j x^{j+1} d/dx) x = x + x^2/2.
std::vector<Rat> delta2_constants(int J);

// Coefficients a_1..a_order of exp(-sum_j C_j x^{j+1} d/dx) x, with a_0 = 0
// stored at index 0.
std::vector<Rat> delta2_forward(const std::vector<Rat>& C, int order);

}  // namespace kmchar
