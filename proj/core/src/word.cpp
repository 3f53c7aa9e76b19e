#include "wittk/word.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wittk/error.hpp"

namespace wittk {

namespace {

void validate_word(const Word& w) {
  if (w.alphabet < 1 || w.alphabet > 255)
    throw ParameterError("word alphabet size must be in [1, 255]");
  for (auto c : w.letters) {
    if (c < 1 || c > w.alphabet)
      throw ParameterError("word contains a letter outside [1, n]");
  }
}

// Compare the blocks starting at block indices i and j (mod m blocks).
int compare_blocks(const std::vector<std::uint8_t>& s, std::size_t i,
                   std::size_t j, std::size_t block, std::size_t m) {
  const std::size_t oi = (i % m) * block, oj = (j % m) * block;
  for (std::size_t k = 0; k < block; ++k) {
    if (s[oi + k] != s[oj + k]) return s[oi + k] < s[oj + k] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint8_t> rotate_letters(const std::vector<std::uint8_t>& s,
                                         std::size_t k) {
  std::vector<std::uint8_t> out;
  out.reserve(s.size());
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(k), s.end());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

Int mobius(long n) {
  Int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

namespace detail {

// Two-pointer least-rotation algorithm run over the block alphabet.
std::size_t least_block_rotation(const std::vector<std::uint8_t>& s,
                                 std::size_t block) {
  const std::size_t m = s.size() / block;
  std::size_t i = 0, j = 1, k = 0;
  while (i < m && j < m && k < m) {
    const int cmp = compare_blocks(s, i + k, j + k, block, m);
    if (cmp == 0) {
      ++k;
      continue;
    }
    if (cmp > 0) {
      i += k + 1;
      if (i == j) ++i;
    } else {
      j += k + 1;
      if (j == i) ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

int largest_block_power(const std::vector<std::uint8_t>& s, std::size_t block) {
  const std::size_t m = s.size() / block;
  for (std::size_t e = m; e >= 2; --e) {
    if (m % e != 0) continue;
    const std::size_t root_len = s.size() / e;
    bool power = true;
    for (std::size_t i = root_len; i < s.size() && power; ++i) {
      if (s[i] != s[i - root_len]) power = false;
    }
    if (power) return static_cast<int>(e);
  }
  return 1;
}

}  // namespace detail

bool word_less(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size())
    return a.letters.size() < b.letters.size();
  return a.letters < b.letters;
}

std::string to_string(const Word& w) {
  std::string out;
  for (auto c : w.letters) {
    out += 'x';
    out += std::to_string(static_cast<int>(c));
  }
  return out;
}

Word BlockClass::root() const {
  Word r{std::vector<std::uint8_t>(
             canonical.letters.begin(),
             canonical.letters.begin() +
                 static_cast<std::ptrdiff_t>(canonical.length() /
                                             static_cast<std::size_t>(period))),
         canonical.alphabet};
  return r;
}

BlockClass canonical_form(const Word& w, int block_size) {
  validate_word(w);
  if (w.letters.empty()) throw EmptyWordError("canonical_form: empty word");
  if (block_size < 1) throw ParameterError("block size must be positive");
  if (w.length() % static_cast<std::size_t>(block_size) != 0)
    throw BlockMismatchError("block size does not divide word length");

  const std::size_t block = static_cast<std::size_t>(block_size);
  const std::size_t r = detail::least_block_rotation(w.letters, block);
  BlockClass cls;
  cls.canonical = Word{rotate_letters(w.letters, r * block), w.alphabet};
  cls.block_size = block_size;
  cls.period = detail::largest_block_power(cls.canonical.letters, block);
  return cls;
}

std::pair<Word, int> block_period(const Word& w, int block_size) {
  BlockClass cls = canonical_form(w, block_size);
  return {cls.root(), cls.period};
}

std::vector<BlockClass> aperiodic_necklaces(int n, int len) {
  if (n < 1 || n > 255) throw ParameterError("alphabet size must be in [1, 255]");
  if (len < 1) throw ParameterError("necklace length must be positive");

  // Duval's algorithm: Lyndon words of length exactly len are precisely the
  // canonical representatives of aperiodic necklaces.
  std::vector<BlockClass> out;
  std::vector<std::uint8_t> w{1};
  while (!w.empty()) {
    if (w.size() == static_cast<std::size_t>(len)) {
      BlockClass cls;
      cls.canonical = Word{w, n};
      cls.block_size = 1;
      cls.period = 1;
      out.push_back(std::move(cls));
    }
    const std::size_t k = w.size();
    while (w.size() < static_cast<std::size_t>(len))
      w.push_back(w[w.size() - k]);
    while (!w.empty() && w.back() == static_cast<std::uint8_t>(n)) w.pop_back();
    if (!w.empty()) ++w.back();
  }

  if (Int(out.size()) != aperiodic_necklace_count(n, len))
    throw Error("aperiodic_necklaces: count disagrees with the Mobius formula");
  return out;
}

Int aperiodic_necklace_count(int n, int len) {
  if (n < 1 || len < 1) throw ParameterError("necklace count needs n, len >= 1");
  Int total = 0;
  for (long d = 1; d <= len; ++d) {
    if (len % d != 0) continue;
    total += mobius(d) * pow_t(Int(n), len / d);
  }
  if (total % len != 0) throw Error("necklace count is not divisible by length");
  return total / len;
}

std::vector<BlockClass> fiber(const BlockClass& cyclic, int block_size) {
  if (cyclic.block_size != 1)
    throw ParameterError("fiber expects a cyclic class (block size 1)");
  if (block_size < 1) throw ParameterError("block size must be positive");
  const std::size_t len = cyclic.canonical.length();
  if (len == 0) throw EmptyWordError("fiber: empty word");
  if (len % static_cast<std::size_t>(block_size) != 0)
    throw BlockMismatchError("block size does not divide word length");

  // Rotating by block_size letters stays inside one ~_a class and rotating by
  // the root length fixes the word, so classes only depend on the rotation
  // offset modulo g = gcd(root length, block_size).
  const std::size_t root_len = len / static_cast<std::size_t>(cyclic.period);
  const std::size_t g =
      std::gcd(root_len, static_cast<std::size_t>(block_size));
  std::vector<BlockClass> out;
  for (std::size_t k = 0; k < g; ++k) {
    Word rotated{rotate_letters(cyclic.canonical.letters, k),
                 cyclic.canonical.alphabet};
    out.push_back(canonical_form(rotated, block_size));
  }
  std::sort(out.begin(), out.end(), [](const BlockClass& a, const BlockClass& b) {
    return word_less(a.canonical, b.canonical);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wittk
