#pragma once

#include <vector>

#include "wittk/abgroup.hpp"

namespace wittk {

/// An admissible tensor monomial x^{k0_left} x0 x^{k0_right} (x) x^{k1} (x) ...
/// subject to k0_left + k0_right + sum(ks) = s - 1, k0_left + 1 + k0_right < a
/// and 1 <= k_i < a.
struct Monomial {
  int k0_left = 0;
  int k0_right = 0;
  std::vector<int> ks;
  bool operator==(const Monomial& other) const = default;
};

/// All admissible monomials with e tensor factors beyond the x0 block, in
/// lexicographic order of (k0_left, k0_right, ks).
std::vector<Monomial> monomial_basis(int s, int a, int e);

/// The alternating face sum from degree e to degree e-1.  Faces whose merged
/// block leaves the admissible range land on the collapsed basepoint and
/// contribute zero.
IntMat boundary_matrix(int s, int a, int e);

struct ChainComplex {
  int s = 1;
  int a = 2;
  std::vector<std::vector<Monomial>> bases;  ///< degrees 0..s-1
  std::vector<IntMat> boundaries;  ///< boundaries[e] maps C_e to C_{e-1}
};

/// Builds bases and boundary matrices and verifies del o del = 0.
ChainComplex build_chain_complex(int s, int a);

/// Reduced integral homology in degrees 0..s-1.
std::vector<FinAbGroup> homology(int s, int a);

struct IotaReport {
  int degree = 0;       ///< 2d when a does not divide s, else 2d+1
  int cycle_count = 0;  ///< number of explicit generating cycles built
  bool cycles_valid = false;  ///< every candidate has zero boundary
  bool generates = false;     ///< candidates generate the homology there
  bool pass = false;
};

/// Builds the explicit cycles (the single alternating-sum cycle when a does
/// not divide s, the a-1 staircase cycles when it does) and verifies that
/// they are cycles generating the homology in their degree.
IotaReport iota_check(int s, int a);

}  // namespace wittk
