#pragma once

// Series attached to V = L(3 Lambda_0; A2^(1)): the unspecialized character,
// its decomposition into string functions times lattice theta sums, several
// specializations, the vacuum-space quotient, and the traces used to compare
// the vacuum algebra with V_1(A1^(1)) and its tensor square.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "multipoly.hpp"
#include "qseries.hpp"
#include "qtraces.hpp"

namespace kmchar {

// Series in x = uvw, one per maximal dominant weight of V:
//   sf1: mu = 3L0,               coefficient of (uvw)^k,           stored at x^k
//   sf2: mu = 3L0 - a0,          coefficient of u (uvw)^k,         stored at x^{k+1}
//   sf3: mu = 3L0 - 2a0 - a2,    coefficient of u^2 w (uvw)^k,     stored at x^k
//   sf4: mu = 3L0 - 2a0 - a1,    coefficient of u^2 v (uvw)^k,     stored at x^k
struct StringFunctionSet {
  QSeries sf1, sf2, sf3, sf4;
};

HighestWeight level3_vacuum_weight();

// e^{-3 Lambda_0} ch V to total degree N.
MSeries char_level3(int N);

// Reads the string functions to x^D (sf2 to x^{D+1}). chv must have unit
// weights and order >= 3D + 3 (InsufficientOrder otherwise).
StringFunctionSet extract_string_functions(const MSeries& chv, int D);

// Sum over the four lattice groups times their string functions, to total
// degree N. The result's order is lowered to where every string function
// coefficient it depends on is known. Throws IdentityViolation if a monomial
// with a negative exponent survives.
MSeries theta_assembly(const StringFunctionSet& sf, int N);

struct MComparison {
  bool equal = true;
  int compared_order = 0;
  std::optional<std::pair<Exponents, std::pair<Int, Int>>> first_mismatch;
};

MComparison compare(const MSeries& a, const MSeries& b);

// F_(4,1,1) of the character to q^N, then q -> q^{1/6}.
QSeries specialize_411(int N);
// F_(1,0,0) of the character to q^n.
QSeries homogeneous_level3(int n);
// F_(1,0,0) times prod (1 - q^m)^2.
QSeries vacuum_dim_level3(int n);

// Degree-zero part after u -> q v^{-1} w^{-1}, times prod (1 - q^m)^2.
TraceSpec omega30_trace(int N);
// V_1(A1^(1)) graded homogeneously.
TraceSpec a1_level1_trace(int N);
// Tensor square of the previous trace.
TraceSpec tensor_square_trace(int N);

struct ReferenceCheck {
  std::string name;
  QSeries computed;                 // mantissa
  std::optional<Rat> prefactor;     // computed prefactor exponent, for traces
  std::optional<Rat> expected_prefactor;
  std::vector<std::pair<Rat, Int>> expected;  // (exponent, coefficient)
  std::optional<Mismatch> first_mismatch;
  bool ok = true;
};

struct NonIsomorphy {
  std::string lhs;
  std::string rhs;
  Rat compared_order;
  std::optional<Mismatch> first_difference;
};

std::vector<NonIsomorphy> nonisomorphy_report();

struct AppendixReport {
  int order = 0;  // total degree of the theta-decomposition check
  MComparison theta;
  std::vector<ReferenceCheck> checks;
  bool square_ok = true;             // tensor-square mantissa = square of the level-1 mantissa
  bool prefactor_consistent = true;  // vacuum-algebra prefactor = -c2(1)/24
  std::vector<NonIsomorphy> nonisomorphy;
  bool ok() const;
};

AppendixReport appendix_report(int theta_order);

}  // namespace kmchar
