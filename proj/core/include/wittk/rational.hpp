#pragma once

#include <cstddef>
#include <vector>

#include "wittk/numeric.hpp"
#include "wittk/word.hpp"

namespace wittk {

/// Ordered basis of ~_a classes whose lengths lie in [min_len, max_len],
/// sorted by (length, canonical representative).
struct WordBasis {
  int n = 1;
  int a = 1;
  long min_len = 1;
  long max_len = 0;
  std::vector<BlockClass> classes;
};

WordBasis build_word_basis(int n, int a, long min_len, long max_len);

/// Dense exact rational matrix.
struct RatMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Rat& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
};

/// Rank by exact rational Gaussian elimination.
std::size_t rat_rank(RatMat m);

/// The matrix of V_a^1 : Q{S_n(a,[a(q-1)+1, aq])} -> Q{S_n(1,[a(q-1)+1, aq])}
/// over the word bases, with entry |t|/|s| at (t, s) when v_a^1(s) = t.
/// All entries are positive integers.
RatMat rational_v_matrix(int n, int a, int q);

struct RationalChecks {
  bool top_block_surjective = false;   ///< V covers every length-aq class
  bool odd_matches_word_count = false; ///< dim K_odd = #classes of length < aq
  bool even_matches_fiber_sum = false; ///< dim K_even = sum of (|fiber|-1)
  bool all() const {
    return top_block_surjective && odd_matches_word_count &&
           even_matches_fiber_sum;
  }
};

struct RationalKReport {
  int n = 1, a = 2, q = 1;
  long long dim_even = 0;  ///< dim_Q K_{2q}
  long long dim_odd = 0;   ///< dim_Q K_{2q-1}
  long long source_dim = 0, target_dim = 0, rank = 0;
  RationalChecks checks;
};

/// Rational K-group dimensions of Z<x_1..x_n>/(m^a) in degrees 2q and 2q-1,
/// with the three structural cross-checks.
RationalKReport kgroups_rational(int n, int a, int q);

namespace detail {
/// Rank via the materialized matrix; quadratic in the basis sizes.
RationalKReport kgroups_rational_dense(int n, int a, int q);
/// Rank via per-fiber elimination without materializing the matrix; the
/// v_a^1 fibers partition the source basis so the matrix is block diagonal.
RationalKReport kgroups_rational_streaming(int n, int a, int q);
}  // namespace detail

}  // namespace wittk
