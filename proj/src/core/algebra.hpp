#pragma once

// Static data for the affine algebras A1^(1), A2^(1), A2^(2): generalized
// Cartan matrices, marks and comarks, dominant weights of a given level,
// affine Weyl group orbits, and the exact conformal-weight scalars attached
// to the level-k A1^(1) / level-(2k+1) A2^(2) pair.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace kmchar {

enum class AlgebraLabel { A1_1, A2_1, A2_2 };

struct AlgebraDesc {
  AlgebraLabel label;
  std::string name;  // "a1_1", "a2_1", "a2_2"
  int rank;          // l + 1
  // gcm[i][j] = alpha_j(h_i)
  std::vector<std::vector<int>> gcm;
  std::vector<int> marks;
  std::vector<int> comarks;
  int twist;
  int dual_coxeter;

  int coxeter() const;
};

const AlgebraDesc& algebra(AlgebraLabel label);
const std::array<AlgebraLabel, 3>& all_algebras();
// Throws InvalidArgument for unknown names.
AlgebraLabel parse_algebra_label(std::string_view name);

struct HighestWeight {
  AlgebraLabel algebra;
  std::vector<int> coords;  // coefficients of the fundamental weights

  int level() const;
  bool operator==(const HighestWeight&) const = default;
};

HighestWeight make_weight(AlgebraLabel label, std::vector<int> coords);

// Every dominant integral weight of the given level. A2^(2) only admits odd
// levels (UnsupportedLevelParity otherwise).
std::vector<HighestWeight> level_weights(AlgebraLabel label, int level);

// w(Lambda + rho) = (Lambda + rho) - sum_i cvec[i] alpha_i, parity = det w.
struct OrbitPoint {
  std::vector<int> cvec;
  int parity;
};

// All orbit points of the regular dominant weight lam_plus_rho whose
// s-degree sum_i s_i cvec[i] is at most max_degree, sorted by degree then
// cvec. Throws NonRegularWeight, or ParityConflict if two reflection paths
// disagree on det w.
std::vector<OrbitPoint> weyl_orbit(const AlgebraDesc& alg, std::span<const int> lam_plus_rho,
                                   std::span<const int> s, int max_degree);

// Scalars for V_k(A1^(1)), its twisted modules, and the level 2k+1 vacuum
// spaces.
struct ConformalData {
  Rat c1;        // 3k/(k+2)
  Rat c1_tilde;  // c1 - 8k/3
  Rat c;         // 4(2k+1)/(k+2)
  Rat c2;        // c - 2 = 2 c1
  Rat h;         // lowest weight for the shifted Virasoro element
  Rat h_nu;      // lowest weight of the nu-twisted module
  Rat lam;       // lowest weight of the vacuum space
};

ConformalData conformal_scalars(int k, int k0);

struct AnomalyTriple {
  Rat shifted;   // h - c1_tilde/24
  Rat twisted;   // h_nu - c1/24
  Rat vacuum;    // lam - c2/24
};

// Throws IdentityViolation unless shifted == twisted == the closed form and
// vacuum == twisted / 2.
AnomalyTriple anomaly_identities(int k, int k0);

// Scalar by which the first Heisenberg Virasoro zero mode acts on a vacuum
// space.
Rat heisenberg_l0_scalar();

// L(0) on the highest weight vector; checks value - 5/72 == lam.
Rat L0_top_eigenvalue(int k, int k0);

}  // namespace kmchar
