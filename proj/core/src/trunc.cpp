#include "wittk/trunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "wittk/error.hpp"
#include "parallel.hpp"

namespace wittk {

namespace {

struct WordKeyHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto c : v) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Decode block symbol id (lexicographic rank) into its `block` letters.
void append_block(std::vector<std::uint8_t>& out, long id, int n, int block) {
  const std::size_t at = out.size();
  out.resize(at + static_cast<std::size_t>(block));
  for (int i = block - 1; i >= 0; --i) {
    out[at + static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(id % n + 1);
    id /= n;
  }
}

}  // namespace

TruncationSet::TruncationSet(std::vector<long> elements)
    : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  for (long m : elems_) {
    if (m < 1) throw ParameterError("truncation set elements must be positive");
    for (long d = 1; d * d <= m; ++d) {
      if (m % d != 0) continue;
      if (!std::binary_search(elems_.begin(), elems_.end(), d) ||
          !std::binary_search(elems_.begin(), elems_.end(), m / d))
        throw ParameterError("truncation set is not closed under divisors");
    }
  }
}

TruncationSet TruncationSet::initial(long n) {
  TruncationSet s;
  if (n < 0) throw ParameterError("initial truncation length must be >= 0");
  s.elems_.resize(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) s.elems_[static_cast<std::size_t>(i)] = i + 1;
  return s;
}

bool TruncationSet::contains(long m) const {
  return std::binary_search(elems_.begin(), elems_.end(), m);
}

std::size_t TruncationSet::index_of(long m) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), m);
  if (it == elems_.end() || *it != m)
    throw ParameterError("element not in truncation set");
  return static_cast<std::size_t>(it - elems_.begin());
}

TruncationSet TruncationSet::quotient(long r) const {
  if (r < 1) throw ParameterError("quotient factor must be positive");
  TruncationSet s;
  for (long m : elems_) {
    if (m % r == 0) s.elems_.push_back(m / r);
  }
  // Divisor closure is inherited from the parent set.
  return s;
}

long TruncationPoset::total_size() const {
  long total = 0;
  for (const auto& c : components) total += c.size;
  return total;
}

TruncationPoset build_poset(int n, int a, long max_len) {
  if (n < 1 || n > 255) throw ParameterError("poset alphabet size must be in [1, 255]");
  if (a < 1) throw ParameterError("poset block size must be positive");
  if (max_len < 0) throw ParameterError("poset max length must be >= 0");

  TruncationPoset poset;
  poset.n = n;
  poset.a = a;
  poset.max_len = max_len;

  long symbols = 1;
  for (int i = 0; i < a; ++i) {
    symbols *= n;
    if (symbols > (1L << 40))
      throw ParameterError("block alphabet n^a is too large to enumerate");
  }

  // Irreducible ~_a classes of length L = a*m are exactly the aperiodic
  // necklaces of length m over the alphabet of all n^a blocks; Duval's
  // algorithm lists their canonical (lexicographically least) rotations.
  for (long len = a; len <= max_len; len += a) {
    const long m = len / a;
    std::vector<long> w{0};
    while (!w.empty()) {
      if (w.size() == static_cast<std::size_t>(m)) {
        PosetComponent comp;
        comp.label.canonical.alphabet = n;
        comp.label.canonical.letters.reserve(static_cast<std::size_t>(len));
        for (long id : w) append_block(comp.label.canonical.letters, id, n, a);
        comp.label.block_size = a;
        comp.label.period = 1;
        comp.size = max_len / len;
        poset.components.push_back(std::move(comp));
      }
      const std::size_t k = w.size();
      while (w.size() < static_cast<std::size_t>(m)) w.push_back(w[w.size() - k]);
      while (!w.empty() && w.back() == symbols - 1) w.pop_back();
      if (!w.empty()) ++w.back();
    }
  }
  return poset;
}

VmapComponents vmap_components(int n, int a, int b, long max_len) {
  return detail::vmap_components_impl(n, a, b, max_len, 1);
}

namespace detail {

VmapComponents vmap_components_impl(int n, int a, int b, long max_len,
                                    unsigned threads) {
  if (b < 1 || a < 1 || a % b != 0)
    throw DivisibilityError("vmap_components requires b | a");

  VmapComponents out;
  out.source = build_poset(n, a, max_len);
  out.target = build_poset(n, b, max_len);

  std::unordered_map<std::vector<std::uint8_t>, std::size_t, WordKeyHash>
      target_index;
  target_index.reserve(out.target.components.size() * 2);
  for (std::size_t i = 0; i < out.target.components.size(); ++i)
    target_index.emplace(out.target.components[i].label.canonical.letters, i);

  out.edges.resize(out.source.components.size());
  parallel_for(out.source.components.size(), threads,
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t i = begin; i < end; ++i) {
                   const auto& u = out.source.components[i].label;
                   BlockClass image = canonical_form(u.canonical, b);
                   auto it = target_index.find(image.root().letters);
                   if (it == target_index.end())
                     throw Error("vmap_components: image component missing");
                   out.edges[i] =
                       VmapEdge{i, it->second, static_cast<long>(image.period)};
                 }
               });
  return out;
}

}  // namespace detail

}  // namespace wittk
