#pragma once

#include <cstddef>
#include <vector>

#include "wittk/word.hpp"

namespace wittk {

/// A finite set of positive integers closed under taking divisors.
class TruncationSet {
 public:
  TruncationSet() = default;
  /// Validates positivity and divisor closure.
  explicit TruncationSet(std::vector<long> elements);
  /// The initial segment {1..n}; n = 0 gives the empty set.
  static TruncationSet initial(long n);

  const std::vector<long>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(long m) const;
  /// Position of m in elements(); throws if absent.
  std::size_t index_of(long m) const;
  /// S/r = {s : r*s in S}.
  TruncationSet quotient(long r) const;

  bool operator==(const TruncationSet& other) const = default;

 private:
  std::vector<long> elems_;  // sorted ascending
};

/// One split component of S_n(a,N): all powers of an irreducible class,
/// isomorphic to the ordinary truncation set {1..size}.
struct PosetComponent {
  BlockClass label;  ///< irreducible ~_a class, period 1
  long size = 0;     ///< floor(N / length(label))
};

/// The truncation poset S_n(a,N) split into components labelled by
/// irreducible classes, ordered by (label length, label lexicographic).
struct TruncationPoset {
  int n = 1;
  int a = 1;
  long max_len = 0;  ///< N
  std::vector<PosetComponent> components;

  /// Total number of poset elements, sum of component sizes.
  long total_size() const;
};

/// Build S_n(a,N) for finite N.  Components with floor(N/len) = 0 cannot
/// occur (labels are capped at length N) and empty posets are allowed.
TruncationPoset build_poset(int n, int a, long max_len);

/// One component-level arrow of v_a^b: the source component's elements map
/// into the target component by multiplication by degree_ratio.
struct VmapEdge {
  std::size_t source = 0;  ///< index into source poset components
  std::size_t target = 0;  ///< index into target poset components
  long degree_ratio = 1;   ///< |v(u)| / |u|, a positive integer
};

struct VmapComponents {
  TruncationPoset source;  ///< S_n(a,N)
  TruncationPoset target;  ///< S_n(b,N)
  std::vector<VmapEdge> edges;  ///< one edge per source component
};

/// Component routing of v_a^b : S_n(a,N) -> S_n(b,N).  Requires b | a.
VmapComponents vmap_components(int n, int a, int b, long max_len);

namespace detail {
/// Same as vmap_components with an explicit worker count (0 = auto);
/// used by the K-group assembly which exposes a thread knob.
VmapComponents vmap_components_impl(int n, int a, int b, long max_len,
                                    unsigned threads);
}  // namespace detail

}  // namespace wittk
