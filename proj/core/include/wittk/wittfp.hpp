#pragma once

#include <vector>

#include "wittk/abgroup.hpp"
#include "wittk/witt.hpp"
#include "wittk/word.hpp"

namespace wittk {

/// One summand Z/p^exponent of W_n(F_p), labelled by d <= n coprime to p.
struct WittFpSummand {
  long d = 1;
  int exponent = 0;
};

/// The finite abelian group structure W_n(F_p) = ⊕_d Z/p^{c(n,d)} with
/// c(n,d) = #{i >= 0 : d p^i <= n}; the exponents sum to n.
struct WittFpStructure {
  long n = 0;
  Int p = 2;
  std::vector<WittFpSummand> summands;  ///< d ascending

  /// Generator orders p^{c(n,d)} in summand order; the basis all matrices use.
  std::vector<Int> generator_orders() const;
  /// Canonical elementary divisor form.
  FinAbGroup group() const;
};

WittFpStructure witt_fp_structure(long n, const Int& p);

/// Residues (m_d)_d of x under the additive isomorphism
/// W_n(F_p) -> ⊕_d Z/p^{c(n,d)}, ordered like the structure summands.
/// x must live over {1..n} with prime field coefficients.
std::vector<Int> decompose(const WittVector& x);

/// Inverse of decompose.
WittVector witt_fp_encode(const std::vector<Int>& residues, long n, const Int& p);

/// Matrix of V_r : W_m(F_p) -> W_M(F_p) with respect to the structure bases.
/// Coordinates above M are discarded, so m may exceed floor(M/r); smaller
/// sources have no natural additive shift and are rejected.
AbHom verschiebung_matrix(long r, long m, long M, const Int& p);

/// Kernel/cokernel pair produced by one evaluation route.
struct KPath {
  FinAbGroup odd;   ///< K_{2q-1}
  FinAbGroup even;  ///< K_{2q}
};

/// Per-necklace contribution in the closed-form route.
struct NecklaceSummary {
  Word root;            ///< irreducible cyclic word
  int length = 1;       ///< l(root)
  int g = 1;            ///< gcd(a, length)
  long source_size = 0; ///< floor(g q / length)
  long target_size = 0; ///< floor(a q / length)
  FinAbGroup odd, even;
};

/// The relative K-groups K_{2q-1} and K_{2q} of F_p<x_1..x_n>/(m^a),
/// computed two independent ways and cross-checked.
struct KGroupReport {
  int n = 1, a = 2, q = 1;
  Int p = 2;
  KPath assembled;    ///< kernel/cokernel of the assembled V_a^1 block matrix
  KPath closed_form;  ///< per-necklace cokernel/copies formula
  bool crosscheck = false;
  FinAbGroup odd, even;  ///< the reported answer (assembled route)
  std::vector<NecklaceSummary> per_necklace;
  long source_count = 0;  ///< |S_n(a, aq)|
  long target_count = 0;  ///< |S_n(1, aq)|
};

/// threads = 0 picks the hardware concurrency; the result is identical for
/// every thread count.
KGroupReport kgroups_fp(int n, int a, int q, const Int& p, unsigned threads = 0);

}  // namespace wittk
