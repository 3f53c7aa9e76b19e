#include "wittk/wittfp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "wittk/error.hpp"
#include "wittk/trunc.hpp"

namespace wittk {

std::vector<Int> WittFpStructure::generator_orders() const {
  std::vector<Int> out;
  out.reserve(summands.size());
  for (const auto& s : summands) out.push_back(pow_t(p, s.exponent));
  return out;
}

FinAbGroup WittFpStructure::group() const {
  return canonical_group(generator_orders());
}

WittFpStructure witt_fp_structure(long n, const Int& p) {
  if (!is_prime(p)) throw NotPrimeError("witt_fp_structure: p is not prime");
  if (n < 0) throw ParameterError("witt_fp_structure: n must be >= 0");
  WittFpStructure out;
  out.n = n;
  out.p = p;
  for (long d = 1; d <= n; ++d) {
    if (Int(d) % p == 0) continue;
    int c = 0;
    Int power = d;
    while (power <= n) {
      ++c;
      power *= p;
    }
    out.summands.push_back({d, c});
  }
  return out;
}

namespace {

// Value of a vector over the p-typical truncation set {1, p, .., p^{c-1}}
// under the additive isomorphism with Z/p^c: extract the bottom digit, strip
// it off as a scalar multiple of the unit, and unshift.
Int decode_p_typical(WittVector y, const Int& p) {
  const CoefficientRing& ring = y.ring();
  Int value = 0, scale = 1;
  while (!y.trunc().empty()) {
    const Int digit = rat_num(y.coord_at(1));
    if (digit != 0) {
      value += scale * digit;
      y = y - scalar_multiple(digit, teichmuller(Rat(1), y.trunc(), ring));
    }
    if (rat_num(y.coord_at(1)) != 0)
      throw Error("decode: bottom coordinate did not vanish");
    // y = V_p(unshift): relabel coordinate p^{i+1} as p^i.
    TruncationSet down = y.trunc().quotient(static_cast<long>(p));
    std::vector<Rat> coords;
    coords.reserve(down.size());
    for (long m : down.elements())
      coords.push_back(y.coord_at(m * static_cast<long>(p)));
    y = WittVector(std::move(down), ring, std::move(coords));
    scale *= p;
  }
  return value;
}

TruncationSet p_typical_set(const Int& p, int c) {
  std::vector<long> elems;
  long power = 1;
  for (int i = 0; i < c; ++i) {
    elems.push_back(power);
    power *= static_cast<long>(p);
  }
  return TruncationSet(std::move(elems));
}

}  // namespace

std::vector<Int> decompose(const WittVector& x) {
  if (x.ring().kind() != CoefficientRing::Kind::prime_field)
    throw ParameterError("decompose needs prime field coefficients");
  const long n = static_cast<long>(x.trunc().size());
  if (x.trunc() != TruncationSet::initial(n))
    throw TruncationMismatchError("decompose needs the truncation set {1..n}");
  const Int& p = x.ring().modulus();

  WittFpStructure st = witt_fp_structure(n, p);
  std::vector<Int> out;
  out.reserve(st.summands.size());
  for (const auto& s : st.summands) {
    WittVector y = frobenius(s.d, x);
    out.push_back(
        decode_p_typical(restrict_to(y, p_typical_set(p, s.exponent)), p));
  }
  return out;
}

WittVector witt_fp_encode(const std::vector<Int>& residues, long n,
                          const Int& p) {
  WittFpStructure st = witt_fp_structure(n, p);
  if (residues.size() != st.summands.size())
    throw ParameterError("residue count does not match summand count");
  const CoefficientRing ring = CoefficientRing::prime_field(p);
  const TruncationSet trunc = TruncationSet::initial(n);

  WittVector x(trunc, ring);
  for (std::size_t i = 0; i < st.summands.size(); ++i) {
    const auto& s = st.summands[i];
    const Int pc = pow_t(p, s.exponent);
    Int k = residues[i] % pc;
    if (k < 0) k += pc;
    if (k == 0) continue;
    // The coordinate vector delta_d decomposes to d * e_d, so scale by 1/d.
    k = k * mod_inverse(Int(s.d), pc) % pc;
    std::vector<Rat> coords(trunc.size(), Rat(0));
    coords[trunc.index_of(s.d)] = 1;
    x = x + scalar_multiple(k, WittVector(trunc, ring, std::move(coords)));
  }
  return x;
}

AbHom verschiebung_matrix(long r, long m, long M, const Int& p) {
  if (!is_prime(p)) throw NotPrimeError("verschiebung_matrix: p is not prime");
  if (r < 1) throw ParameterError("verschiebung_matrix: r must be positive");
  if (m < 0 || M < 0) throw ParameterError("verschiebung_matrix: negative length");
  const long effective = M / r;
  if (m < effective)
    throw ParameterError(
        "verschiebung_matrix: source must cover floor(M/r) coordinates");

  WittFpStructure src = witt_fp_structure(m, p);
  WittFpStructure tgt = witt_fp_structure(M, p);
  AbHom h{src.generator_orders(), tgt.generator_orders(),
          IntMat(tgt.summands.size(), src.summands.size())};

  const TruncationSet cut_set = TruncationSet::initial(effective);
  const TruncationSet target_set = TruncationSet::initial(M);
  for (std::size_t j = 0; j < src.summands.size(); ++j) {
    std::vector<Int> unit(src.summands.size(), Int(0));
    unit[j] = 1;
    WittVector gen = witt_fp_encode(unit, m, p);
    WittVector shifted = verschiebung(r, restrict_to(gen, cut_set), target_set);
    std::vector<Int> dec = decompose(shifted);
    for (std::size_t i = 0; i < dec.size(); ++i) h.matrix(i, j) = dec[i];
  }
  validate_hom(h);
  return h;
}

namespace {

// Exponent-multiset accumulator for direct sums of p-power cyclic groups.
struct PGroupAccumulator {
  const Int* p = nullptr;
  std::map<long, long> count_by_exponent;

  void add(const FinAbGroup& g, long copies = 1) {
    if (copies == 0 || g.is_trivial()) return;
    for (const Int& d : g.divisors) {
      Int rest = d;
      long e = 0;
      while (rest % *p == 0) {
        rest /= *p;
        ++e;
      }
      if (rest != 1 || e == 0)
        throw Error("K-group summand is not a p-power cyclic group");
      count_by_exponent[e] += copies;
    }
  }

  FinAbGroup finish() const {
    FinAbGroup out;
    for (const auto& [e, count] : count_by_exponent) {
      const Int de = pow_t(*p, e);
      out.divisors.insert(out.divisors.end(), static_cast<std::size_t>(count), de);
    }
    return out;
  }
};

struct LengthBlock {
  int g = 1;
  long m = 0, M = 0, ratio = 1;
  FinAbGroup assembled_odd, assembled_even;
  FinAbGroup closed_odd, closed_even_summand;  // even = (g-1) copies of summand
};

LengthBlock make_length_block(long t, int a, int q, const Int& p) {
  LengthBlock blk;
  blk.g = static_cast<int>(std::gcd<long, long>(a, t));
  blk.ratio = a / blk.g;
  blk.m = static_cast<long>(blk.g) * q / t;
  blk.M = static_cast<long>(a) * q / t;

  AbHom single = verschiebung_matrix(blk.ratio, blk.m, blk.M, p);
  const int copies = blk.m > 0 ? blk.g : 0;

  AbHom block;
  block.target = single.target;
  block.matrix = IntMat(single.matrix.rows(),
                        single.matrix.cols() * static_cast<std::size_t>(copies));
  for (int c = 0; c < copies; ++c) {
    block.source.insert(block.source.end(), single.source.begin(),
                        single.source.end());
    for (std::size_t i = 0; i < single.matrix.rows(); ++i)
      for (std::size_t j = 0; j < single.matrix.cols(); ++j)
        block.matrix(i, static_cast<std::size_t>(c) * single.matrix.cols() + j) =
            single.matrix(i, j);
  }
  blk.assembled_odd = cokernel(block);
  blk.assembled_even = kernel(block);

  blk.closed_odd = cokernel(single);
  blk.closed_even_summand = witt_fp_structure(blk.m, p).group();
  return blk;
}

}  // namespace

KGroupReport kgroups_fp(int n, int a, int q, const Int& p, unsigned threads) {
  if (!is_prime(p)) throw NotPrimeError("kgroups_fp: p is not prime");
  if (a < 2) throw ParameterError("kgroups_fp: a must be >= 2");
  if (n < 1) throw ParameterError("kgroups_fp: n must be >= 1");
  if (q < 1) throw ParameterError("kgroups_fp: q must be >= 1");

  const long N = static_cast<long>(a) * q;
  VmapComponents routing = detail::vmap_components_impl(n, a, 1, N, threads);

  KGroupReport report;
  report.n = n;
  report.a = a;
  report.q = q;
  report.p = p;
  report.source_count = routing.source.total_size();
  report.target_count = routing.target.total_size();

  // The fibers of v_a^1 partition the source components, so kernel and
  // cokernel split over target components; the block over a target depends
  // only on the label length.
  std::map<long, LengthBlock> blocks;
  for (long t = 1; t <= N; ++t) blocks.emplace(t, make_length_block(t, a, q, p));

  std::vector<std::size_t> fiber_count(routing.target.components.size(), 0);
  for (const VmapEdge& e : routing.edges) {
    const auto& blk =
        blocks.at(static_cast<long>(routing.target.components[e.target]
                                        .label.canonical.length()));
    if (e.degree_ratio != blk.ratio)
      throw Error("kgroups_fp: unexpected degree ratio in routing");
    ++fiber_count[e.target];
  }

  PGroupAccumulator assembled_odd{&p}, assembled_even{&p};
  PGroupAccumulator closed_odd{&p}, closed_even{&p};
  report.per_necklace.reserve(routing.target.components.size());
  for (std::size_t i = 0; i < routing.target.components.size(); ++i) {
    const auto& comp = routing.target.components[i];
    const long t = static_cast<long>(comp.label.canonical.length());
    const LengthBlock& blk = blocks.at(t);
    const std::size_t expected = blk.m > 0 ? static_cast<std::size_t>(blk.g) : 0;
    if (fiber_count[i] != expected)
      throw Error("kgroups_fp: fiber size disagrees with gcd formula");

    assembled_odd.add(blk.assembled_odd);
    assembled_even.add(blk.assembled_even);
    closed_odd.add(blk.closed_odd);
    closed_even.add(blk.closed_even_summand, blk.g - 1);

    NecklaceSummary summary;
    summary.root = comp.label.canonical;
    summary.length = static_cast<int>(t);
    summary.g = blk.g;
    summary.source_size = blk.m;
    summary.target_size = blk.M;
    summary.odd = blk.closed_odd;
    FinAbGroup even_part;
    for (int c = 1; c < blk.g; ++c)
      even_part = direct_sum(even_part, blk.closed_even_summand);
    summary.even = std::move(even_part);
    report.per_necklace.push_back(std::move(summary));
  }

  report.assembled = {assembled_odd.finish(), assembled_even.finish()};
  report.closed_form = {closed_odd.finish(), closed_even.finish()};
  report.crosscheck = report.assembled.odd == report.closed_form.odd &&
                      report.assembled.even == report.closed_form.even;
  report.odd = report.assembled.odd;
  report.even = report.assembled.even;
  return report;
}

}  // namespace wittk
