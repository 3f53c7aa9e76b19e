#include "wittk/witt.hpp"

#include <algorithm>
#include <utility>

#include "wittk/error.hpp"

namespace wittk {

CoefficientRing CoefficientRing::integers_mod(Int m) {
  if (m < 2) throw ParameterError("integers_mod requires modulus >= 2");
  return {Kind::integers_mod, std::move(m)};
}

CoefficientRing CoefficientRing::prime_field(Int p) {
  if (!is_prime(p)) throw NotPrimeError("prime_field modulus is not prime");
  return {Kind::prime_field, std::move(p)};
}

Rat CoefficientRing::normalize(const Rat& value) const {
  switch (kind_) {
    case Kind::rationals:
      return value;
    case Kind::integers:
      if (!is_integer(value))
        throw ParameterError("non-integer coordinate over the integers");
      return value;
    default: {
      if (!is_integer(value))
        throw ParameterError("non-integer coordinate over a modular ring");
      Int r = rat_num(value) % modulus_;
      if (r < 0) r += modulus_;
      return Rat(r);
    }
  }
}

std::string CoefficientRing::to_string() const {
  switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::integers_mod: return "Z/" + modulus_.str();
    case Kind::prime_field: return "F_" + modulus_.str();
  }
  return "?";
}

namespace {

Int divide_exact(const Int& a, long m) {
  if (a % m != 0)
    throw IntegralityError("ghost recursion division is not exact");
  return a / m;
}

Rat divide_exact(const Rat& a, long m) { return a / m; }

// w_m = sum_{d | m, d in S} d * x_d^{m/d}
template <class T>
std::vector<T> ghost_of(const std::vector<long>& elems, const std::vector<T>& x) {
  std::vector<T> g(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const long m = elems[i];
    T acc(0);
    for (std::size_t j = 0; j <= i; ++j) {
      const long d = elems[j];
      if (m % d == 0) acc += T(d) * pow_t(x[j], m / d);
    }
    g[i] = std::move(acc);
  }
  return g;
}

// Invert the ghost map: z_m = (g_m - sum_{d | m, d < m} d z_d^{m/d}) / m.
template <class T>
std::vector<T> coords_from_ghost(const std::vector<long>& elems,
                                 const std::vector<T>& g) {
  std::vector<T> z(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const long m = elems[i];
    T acc = g[i];
    for (std::size_t j = 0; j < i; ++j) {
      const long d = elems[j];
      if (m % d == 0) acc -= T(d) * pow_t(z[j], m / d);
    }
    z[i] = divide_exact(acc, m);
  }
  return z;
}

std::vector<Int> lift_coords(const WittVector& x) {
  std::vector<Int> out;
  out.reserve(x.coords().size());
  for (const Rat& c : x.coords()) out.push_back(rat_num(c));
  return out;
}

enum class BinOp { add, sub, mul };

template <class T>
std::vector<T> combine(BinOp op, const std::vector<T>& a,
                       const std::vector<T>& b) {
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    switch (op) {
      case BinOp::add: out[i] = a[i] + b[i]; break;
      case BinOp::sub: out[i] = a[i] - b[i]; break;
      case BinOp::mul: out[i] = a[i] * b[i]; break;
    }
  }
  return out;
}

WittVector binary_op(BinOp op, const WittVector& x, const WittVector& y) {
  if (x.trunc() != y.trunc() || x.ring() != y.ring())
    throw IncompatibleOperandsError(
        "Witt operands differ in truncation set or ring");
  const auto& elems = x.trunc().elements();

  if (x.ring().kind() == CoefficientRing::Kind::rationals) {
    auto g = combine(op, ghost_of(elems, x.coords()), ghost_of(elems, y.coords()));
    return {x.trunc(), x.ring(), coords_from_ghost(elems, g)};
  }

  // Lift to Z (canonical representatives), run the recursion exactly, and
  // reduce back.  Functoriality of the universal polynomials makes the result
  // independent of the lift.
  auto g = combine(op, ghost_of(elems, lift_coords(x)),
                   ghost_of(elems, lift_coords(y)));
  auto z = coords_from_ghost(elems, g);
  std::vector<Rat> coords;
  coords.reserve(z.size());
  for (Int& c : z) coords.push_back(Rat(std::move(c)));
  return {x.trunc(), x.ring(), std::move(coords)};
}

}  // namespace

WittVector::WittVector(TruncationSet trunc, CoefficientRing ring)
    : trunc_(std::move(trunc)),
      ring_(std::move(ring)),
      coords_(trunc_.size(), Rat(0)) {}

WittVector::WittVector(TruncationSet trunc, CoefficientRing ring,
                       std::vector<Rat> coords)
    : trunc_(std::move(trunc)), ring_(std::move(ring)), coords_(std::move(coords)) {
  if (coords_.size() != trunc_.size())
    throw ParameterError("coordinate count does not match truncation set");
  for (Rat& c : coords_) c = ring_.normalize(c);
}

std::vector<Rat> WittVector::ghost() const {
  auto g = ghost_of(trunc_.elements(), coords_);
  for (Rat& v : g) v = ring_.normalize(v);
  return g;
}

WittVector operator+(const WittVector& x, const WittVector& y) {
  return binary_op(BinOp::add, x, y);
}

WittVector operator-(const WittVector& x, const WittVector& y) {
  return binary_op(BinOp::sub, x, y);
}

WittVector operator-(const WittVector& x) {
  WittVector zero(x.trunc(), x.ring());
  return binary_op(BinOp::sub, zero, x);
}

WittVector operator*(const WittVector& x, const WittVector& y) {
  return binary_op(BinOp::mul, x, y);
}

WittVector teichmuller(const Rat& c, const TruncationSet& trunc,
                       const CoefficientRing& ring) {
  if (!trunc.contains(1))
    throw MissingUnitError("teichmuller needs 1 in the truncation set");
  std::vector<Rat> coords(trunc.size(), Rat(0));
  coords[trunc.index_of(1)] = c;
  return {trunc, ring, std::move(coords)};
}

WittVector verschiebung(long r, const WittVector& x,
                        const TruncationSet& target) {
  if (r < 1) throw ParameterError("verschiebung index must be positive");
  if (target.quotient(r) != x.trunc())
    throw TruncationMismatchError(
        "verschiebung source must live over target/r");
  std::vector<Rat> coords(target.size(), Rat(0));
  const auto& elems = target.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] % r == 0) coords[i] = x.coord_at(elems[i] / r);
  }
  return {target, x.ring(), std::move(coords)};
}

WittVector frobenius(long r, const WittVector& x) {
  if (r < 1) throw ParameterError("frobenius index must be positive");
  TruncationSet target = x.trunc().quotient(r);
  const auto& src_elems = x.trunc().elements();
  const auto& tgt_elems = target.elements();

  if (x.ring().kind() == CoefficientRing::Kind::rationals) {
    auto g = ghost_of(src_elems, x.coords());
    std::vector<Rat> gq(tgt_elems.size());
    for (std::size_t i = 0; i < tgt_elems.size(); ++i)
      gq[i] = g[x.trunc().index_of(r * tgt_elems[i])];
    return {std::move(target), x.ring(), coords_from_ghost(tgt_elems, gq)};
  }

  auto g = ghost_of(src_elems, lift_coords(x));
  std::vector<Int> gq(tgt_elems.size());
  for (std::size_t i = 0; i < tgt_elems.size(); ++i)
    gq[i] = g[x.trunc().index_of(r * tgt_elems[i])];
  auto z = coords_from_ghost(tgt_elems, gq);
  std::vector<Rat> coords;
  coords.reserve(z.size());
  for (Int& c : z) coords.push_back(Rat(std::move(c)));
  return {std::move(target), x.ring(), std::move(coords)};
}

WittVector from_ghost(const std::vector<Rat>& ghost, const TruncationSet& trunc) {
  if (ghost.size() != trunc.size())
    throw ParameterError("ghost coordinate count does not match truncation set");
  return {trunc, CoefficientRing::rationals(),
          coords_from_ghost(trunc.elements(), ghost)};
}

WittVector scalar_multiple(const Int& k, const WittVector& x) {
  if (k < 0) return -scalar_multiple(-k, x);
  WittVector acc(x.trunc(), x.ring());
  WittVector power = x;
  Int left = k;
  for (;;) {
    if (left & 1) acc = acc + power;
    left >>= 1;
    if (left == 0) break;
    power = power + power;
  }
  return acc;
}

WittVector restrict_to(const WittVector& x, const TruncationSet& smaller) {
  std::vector<Rat> coords;
  coords.reserve(smaller.size());
  for (long m : smaller.elements()) coords.push_back(x.coord_at(m));
  return {smaller, x.ring(), std::move(coords)};
}

PosetWittVector poset_zero(TruncationPoset poset, CoefficientRing ring) {
  PosetWittVector out{std::move(poset), std::move(ring), {}};
  out.per_component.reserve(out.poset.components.size());
  for (const auto& comp : out.poset.components)
    out.per_component.emplace_back(TruncationSet::initial(comp.size), out.ring);
  return out;
}

PosetWittVector poset_add(const PosetWittVector& x, const PosetWittVector& y) {
  if (x.per_component.size() != y.per_component.size() || x.ring != y.ring)
    throw IncompatibleOperandsError("poset Witt vectors are not compatible");
  PosetWittVector out = x;
  for (std::size_t i = 0; i < out.per_component.size(); ++i)
    out.per_component[i] = out.per_component[i] + y.per_component[i];
  return out;
}

std::vector<Rat> poset_ghost(const PosetWittVector& x) {
  std::vector<Rat> out;
  for (const auto& w : x.per_component) {
    auto g = w.ghost();
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

PosetWittVector generalized_verschiebung(int b, const PosetWittVector& x) {
  const auto& poset = x.poset;
  if (b < 1 || poset.a % b != 0)
    throw DivisibilityError("generalized_verschiebung requires b | a");
  if (x.per_component.size() != poset.components.size())
    throw ParameterError("poset Witt vector has wrong component count");

  VmapComponents routing = vmap_components(poset.n, poset.a, b, poset.max_len);
  PosetWittVector out = poset_zero(routing.target, x.ring);
  for (const VmapEdge& e : routing.edges) {
    const long target_size = out.poset.components[e.target].size;
    WittVector shifted =
        verschiebung(e.degree_ratio, x.per_component[e.source],
                     TruncationSet::initial(target_size));
    out.per_component[e.target] = out.per_component[e.target] + shifted;
  }
  return out;
}

}  // namespace wittk
