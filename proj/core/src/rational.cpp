#include "wittk/rational.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "wittk/error.hpp"

namespace wittk {

namespace {

void check_params(int n, int a, int q) {
  if (n < 1 || n > 255) throw ParameterError("alphabet size must be in [1, 255]");
  if (a < 2) throw ParameterError("a must be >= 2");
  if (q < 1) throw ParameterError("q must be >= 1");
}

// Run fn(lyndon_symbols, repeats) for every necklace of length m over the
// symbols 0..num_symbols-1: every Lyndon word of length d | m raised to the
// power m/d, in lexicographic order of the resulting necklace word.
template <class Fn>
void for_each_necklace(long num_symbols, long m, Fn&& fn) {
  std::vector<long> w{0};
  while (!w.empty()) {
    if (m % static_cast<long>(w.size()) == 0)
      fn(w, m / static_cast<long>(w.size()));
    const std::size_t k = w.size();
    while (w.size() < static_cast<std::size_t>(m)) w.push_back(w[w.size() - k]);
    while (!w.empty() && w.back() == num_symbols - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
}

long block_symbol_count(int n, int a) {
  long symbols = 1;
  for (int i = 0; i < a; ++i) {
    symbols *= n;
    if (symbols > (1L << 40))
      throw ParameterError("block alphabet n^a is too large to enumerate");
  }
  return symbols;
}

long euler_phi(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

// Number of necklaces of length m over `symbols` symbols (Burnside).
Int necklace_count(long symbols, long m) {
  Int total = 0;
  for (long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    total += Int(euler_phi(d)) * pow_t(Int(symbols), m / d);
  }
  return total / m;
}

// Write the necklace (lyndon ^ repeats) as letters, each symbol expanded to
// `block` letters, into out (resized to repeats * lyndon.size() * block).
void expand_blocks(const std::vector<long>& lyndon, long repeats, int n,
                   int block, std::vector<std::uint8_t>& out) {
  const std::size_t root_letters = lyndon.size() * static_cast<std::size_t>(block);
  out.resize(root_letters * static_cast<std::size_t>(repeats));
  for (std::size_t b = 0; b < lyndon.size(); ++b) {
    long id = lyndon[b];
    for (int i = block - 1; i >= 0; --i) {
      out[b * static_cast<std::size_t>(block) + static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(id % n + 1);
      id /= n;
    }
  }
  for (std::size_t i = root_letters; i < out.size(); ++i)
    out[i] = out[i - root_letters];
}

// Largest e with word = u^e (u any word); the cyclic period of the class.
int cyclic_period(const std::vector<std::uint8_t>& letters) {
  return detail::largest_block_power(letters, 1);
}

// Least cyclic rotation of src written into dst.
void least_rotation_into(const std::vector<std::uint8_t>& src,
                         std::vector<std::uint8_t>& dst) {
  const std::size_t r = detail::least_block_rotation(src, 1);
  dst.resize(src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] = src[(i + r) % src.size()];
}

// Dedupe set over words; packs into 64 bits when the alphabet and length
// allow, otherwise falls back to string keys.
class WordKeySet {
 public:
  WordKeySet(int n, long max_len) {
    bits_ = std::bit_width(static_cast<unsigned>(n));
    packed_ = static_cast<long>(bits_) * max_len <= 58;
  }

  bool insert(const std::vector<std::uint8_t>& w) {
    if (packed_) return fast_.insert(pack(w)).second;
    return slow_.insert(std::string(w.begin(), w.end())).second;
  }
  bool contains(const std::vector<std::uint8_t>& w) const {
    if (packed_) return fast_.contains(pack(w));
    return slow_.contains(std::string(w.begin(), w.end()));
  }
  std::size_t size() const { return packed_ ? fast_.size() : slow_.size(); }
  void reserve(std::size_t n) {
    if (packed_) fast_.reserve(n); else slow_.reserve(n);
  }

 private:
  std::uint64_t pack(const std::vector<std::uint8_t>& w) const {
    std::uint64_t key = 0;
    for (auto c : w) key = (key << bits_) | static_cast<std::uint64_t>(c - 1);
    return (key << 6) | static_cast<std::uint64_t>(w.size());
  }
  int bits_ = 8;
  bool packed_ = false;
  std::unordered_set<std::uint64_t> fast_;
  std::unordered_set<std::string> slow_;
};

struct WordVecHash {
  std::size_t operator()(const std::vector<std::uint8_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto c : v) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

WordBasis build_word_basis(int n, int a, long min_len, long max_len) {
  if (n < 1 || n > 255) throw ParameterError("alphabet size must be in [1, 255]");
  if (a < 1) throw ParameterError("block size must be positive");
  if (min_len < 1) min_len = 1;

  WordBasis basis;
  basis.n = n;
  basis.a = a;
  basis.min_len = min_len;
  basis.max_len = max_len;

  const long symbols = block_symbol_count(n, a);
  for (long len = a; len <= max_len; len += a) {
    if (len < min_len) continue;
    std::vector<BlockClass> of_length;
    std::vector<std::uint8_t> letters;
    for_each_necklace(symbols, len / a, [&](const std::vector<long>& lyndon,
                                            long repeats) {
      expand_blocks(lyndon, repeats, n, a, letters);
      BlockClass cls;
      cls.canonical = Word{letters, n};
      cls.block_size = a;
      cls.period = static_cast<int>(repeats);
      of_length.push_back(std::move(cls));
    });
    std::sort(of_length.begin(), of_length.end(),
              [](const BlockClass& x, const BlockClass& y) {
                return word_less(x.canonical, y.canonical);
              });
    basis.classes.insert(basis.classes.end(), of_length.begin(), of_length.end());
  }
  return basis;
}

std::size_t rat_rank(RatMat m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < m.cols; ++j)
        std::swap(m(pivot, j), m(rank, j));
    }
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (m(r, col) == 0) continue;
      const Rat factor = m(r, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m(r, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

RatMat rational_v_matrix(int n, int a, int q) {
  check_params(n, a, q);
  const long lo = static_cast<long>(a) * (q - 1) + 1;
  const long hi = static_cast<long>(a) * q;
  WordBasis source = build_word_basis(n, a, lo, hi);
  WordBasis target = build_word_basis(n, 1, lo, hi);

  std::unordered_map<std::vector<std::uint8_t>, std::size_t, WordVecHash> row_of;
  row_of.reserve(target.classes.size() * 2);
  for (std::size_t i = 0; i < target.classes.size(); ++i)
    row_of.emplace(target.classes[i].canonical.letters, i);

  RatMat mat(target.classes.size(), source.classes.size());
  for (std::size_t j = 0; j < source.classes.size(); ++j) {
    const BlockClass& s = source.classes[j];
    BlockClass image = canonical_form(s.canonical, 1);
    auto it = row_of.find(image.canonical.letters);
    if (it == row_of.end())
      throw Error("rational_v_matrix: image class missing from target basis");
    if (image.period % s.period != 0)
      throw Error("rational_v_matrix: period ratio is not an integer");
    mat(it->second, j) = Rat(image.period / s.period);
  }
  return mat;
}

namespace detail {

namespace {

// Shared by both paths: counts of target classes below the top length, the
// fiber sum over top-length classes, and the report skeleton.
struct TargetScan {
  long long short_classes = 0;  ///< lengths in [lo, aq-1]
  long long top_classes = 0;    ///< length aq
  long long fiber_sum = 0;      ///< sum over top classes of (|fiber| - 1)
};

TargetScan scan_targets(int n, int a, int q, WordKeySet* hit,
                        bool* every_top_hit) {
  const long lo = static_cast<long>(a) * (q - 1) + 1;
  const long hi = static_cast<long>(a) * q;
  TargetScan scan;
  if (every_top_hit) *every_top_hit = true;
  std::vector<std::uint8_t> letters;
  for (long len = lo; len <= hi; ++len) {
    for_each_necklace(n, len, [&](const std::vector<long>& lyndon, long repeats) {
      if (len < hi) {
        ++scan.short_classes;
        return;
      }
      ++scan.top_classes;
      expand_blocks(lyndon, repeats, n, 1, letters);
      if (hit && every_top_hit && !hit->contains(letters))
        *every_top_hit = false;
      BlockClass cls;
      cls.canonical = Word{letters, n};
      cls.block_size = 1;
      cls.period = static_cast<int>(repeats);
      scan.fiber_sum +=
          static_cast<long long>(fiber(cls, a).size()) - 1;
    });
  }
  return scan;
}

}  // namespace

RationalKReport kgroups_rational_dense(int n, int a, int q) {
  check_params(n, a, q);
  const long hi = static_cast<long>(a) * q;
  RatMat mat = rational_v_matrix(n, a, q);

  RationalKReport report;
  report.n = n;
  report.a = a;
  report.q = q;
  report.source_dim = static_cast<long long>(mat.cols);
  report.target_dim = static_cast<long long>(mat.rows);

  TargetScan scan = scan_targets(n, a, q, nullptr, nullptr);

  // Rows are ordered by target length, so the top-length block is the last
  // scan.top_classes rows.
  RatMat top(static_cast<std::size_t>(scan.top_classes), mat.cols);
  const std::size_t first_top =
      mat.rows - static_cast<std::size_t>(scan.top_classes);
  for (std::size_t i = 0; i < top.rows; ++i)
    for (std::size_t j = 0; j < mat.cols; ++j)
      top(i, j) = mat(first_top + i, j);

  report.rank = static_cast<long long>(rat_rank(std::move(mat)));
  report.dim_even = report.source_dim - report.rank;
  report.dim_odd = report.target_dim - report.rank;
  report.checks.top_block_surjective =
      static_cast<long long>(rat_rank(std::move(top))) == scan.top_classes;
  report.checks.odd_matches_word_count = report.dim_odd == scan.short_classes;
  report.checks.even_matches_fiber_sum = report.dim_even == scan.fiber_sum;
  return report;
}

RationalKReport kgroups_rational_streaming(int n, int a, int q) {
  check_params(n, a, q);
  const long hi = static_cast<long>(a) * q;

  RationalKReport report;
  report.n = n;
  report.a = a;
  report.q = q;

  // Every source class has exactly one nonzero entry (a positive integer) in
  // the row of its cyclic image, so eliminating each fiber block leaves one
  // pivot per distinct image: rank = #images hit.
  WordKeySet hit(n, hi);
  const long symbols = block_symbol_count(n, a);
  long long sources = 0;
  std::vector<std::uint8_t> letters, canonical;
  for_each_necklace(symbols, hi / a, [&](const std::vector<long>& lyndon,
                                         long repeats) {
    ++sources;
    expand_blocks(lyndon, repeats, n, a, letters);
    const int block_power = static_cast<int>(repeats);
    const int cyc = cyclic_period(letters);
    if (cyc % block_power != 0 || cyc / block_power < 1)
      throw Error("kgroups_rational: matrix entry is not a positive integer");
    least_rotation_into(letters, canonical);
    hit.insert(canonical);
  });

  bool every_top_hit = true;
  TargetScan scan = scan_targets(n, a, q, &hit, &every_top_hit);

  report.source_dim = sources;
  report.target_dim = scan.short_classes + scan.top_classes;
  report.rank = static_cast<long long>(hit.size());
  report.dim_even = report.source_dim - report.rank;
  report.dim_odd = report.target_dim - report.rank;
  report.checks.top_block_surjective =
      every_top_hit && report.rank == scan.top_classes;
  report.checks.odd_matches_word_count = report.dim_odd == scan.short_classes;
  report.checks.even_matches_fiber_sum = report.dim_even == scan.fiber_sum;
  return report;
}

}  // namespace detail

RationalKReport kgroups_rational(int n, int a, int q) {
  check_params(n, a, q);
  // Beyond a few thousand classes the dense matrix is out of reach; the
  // streaming route runs the same elimination fiber block by fiber block.
  const Int dense_limit = 2500;
  const long lo = static_cast<long>(a) * (q - 1) + 1;
  const long hi = static_cast<long>(a) * q;
  Int source_dim = necklace_count(block_symbol_count(n, a), q);
  Int target_dim = 0;
  for (long len = lo; len <= hi; ++len) target_dim += necklace_count(n, len);
  if (source_dim <= dense_limit && target_dim <= dense_limit)
    return detail::kgroups_rational_dense(n, a, q);
  return detail::kgroups_rational_streaming(n, a, q);
}

}  // namespace wittk
