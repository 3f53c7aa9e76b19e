#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wittk/numeric.hpp"

namespace wittk {

/// A non-commutative word in the letters x_1..x_n, stored as 1-based letter indices.
struct Word {
  std::vector<std::uint8_t> letters;
  int alphabet = 1;  ///< n, the number of letters available

  std::size_t length() const { return letters.size(); }
  bool operator==(const Word& other) const { return letters == other.letters; }
};

/// Length-then-lexicographic order; the deterministic order used for all bases.
bool word_less(const Word& a, const Word& b);

/// Render as "x1x2x1".
std::string to_string(const Word& w);

/// An equivalence class of words under cyclic permutation of blocks of
/// `block_size` letters, held by its canonical representative: the
/// lexicographically least word among all block rotations.
///
/// `period` is the largest e such that canonical = r^e for a word r whose
/// length is still divisible by block_size; the class is irreducible in its
/// truncation poset exactly when period == 1.
struct BlockClass {
  Word canonical;
  int block_size = 1;
  int period = 1;

  /// The word r with canonical = r^period and block_size | length(r).
  Word root() const;
  bool irreducible() const { return period == 1; }
  bool operator==(const BlockClass& other) const {
    return block_size == other.block_size && canonical == other.canonical;
  }
};

/// Canonical form of w under ~_a for a = block_size.
/// Throws EmptyWordError / BlockMismatchError.
BlockClass canonical_form(const Word& w, int block_size);

/// The pair (root, e) with w ~_a root^e and e maximal subject to
/// block_size | length(root).
std::pair<Word, int> block_period(const Word& w, int block_size);

/// All aperiodic cyclic words (period-1 classes of block size 1) of length
/// exactly len, in lexicographic order of their canonical representatives.
/// The count is checked against the Mobius necklace formula.
std::vector<BlockClass> aperiodic_necklaces(int n, int len);

/// (1/len) * sum_{d | len} mu(d) n^{len/d}, the number of aperiodic necklaces.
Int aperiodic_necklace_count(int n, int len);

/// All ~_a classes u with cyclic image equal to the given cyclic class,
/// ordered by canonical representative.  The list has gcd(length(root), a)
/// entries and every entry has period e*g/a.
std::vector<BlockClass> fiber(const BlockClass& cyclic, int block_size);

namespace detail {
/// Block index of the lexicographically least rotation by whole blocks.
std::size_t least_block_rotation(const std::vector<std::uint8_t>& letters,
                                 std::size_t block);
/// Largest e such that the block sequence is the e-th power of a shorter one.
int largest_block_power(const std::vector<std::uint8_t>& letters,
                        std::size_t block);
}  // namespace detail

}  // namespace wittk
