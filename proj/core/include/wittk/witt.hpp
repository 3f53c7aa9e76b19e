#pragma once

#include <string>
#include <vector>

#include "wittk/numeric.hpp"
#include "wittk/trunc.hpp"

namespace wittk {

/// One of the exact coefficient rings Witt vectors are taken over.
class CoefficientRing {
 public:
  enum class Kind { integers, rationals, integers_mod, prime_field };

  static CoefficientRing integers() { return {Kind::integers, 0}; }
  static CoefficientRing rationals() { return {Kind::rationals, 0}; }
  static CoefficientRing integers_mod(Int m);
  static CoefficientRing prime_field(Int p);

  Kind kind() const { return kind_; }
  /// The modulus for Z/m and F_p; zero for Z and Q.
  const Int& modulus() const { return modulus_; }
  bool is_modular() const {
    return kind_ == Kind::integers_mod || kind_ == Kind::prime_field;
  }
  bool torsion_free() const {
    return kind_ == Kind::integers || kind_ == Kind::rationals;
  }
  /// Canonical representative: integrality enforced outside Q, modular
  /// values reduced into [0, m).
  Rat normalize(const Rat& value) const;
  std::string to_string() const;
  bool operator==(const CoefficientRing& other) const = default;

 private:
  CoefficientRing(Kind kind, Int modulus)
      : kind_(kind), modulus_(std::move(modulus)) {}
  Kind kind_;
  Int modulus_;
};

/// A big Witt vector: one coordinate per element of a truncation set.
class WittVector {
 public:
  /// The zero vector.
  WittVector(TruncationSet trunc, CoefficientRing ring);
  /// Coordinates aligned with trunc.elements(); each is normalized.
  WittVector(TruncationSet trunc, CoefficientRing ring, std::vector<Rat> coords);

  const TruncationSet& trunc() const { return trunc_; }
  const CoefficientRing& ring() const { return ring_; }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& coord_at(long m) const { return coords_[trunc_.index_of(m)]; }

  /// Ghost coordinates w_m = sum_{d | m} d x_d^{m/d}, evaluated in the ring.
  std::vector<Rat> ghost() const;

  bool operator==(const WittVector& other) const = default;

 private:
  TruncationSet trunc_;
  CoefficientRing ring_;
  std::vector<Rat> coords_;
};

// Ring operations, computed through the integer-lift ghost recursion with
// exact division asserted (IntegralityError on failure).
WittVector operator+(const WittVector& x, const WittVector& y);
WittVector operator-(const WittVector& x);
WittVector operator-(const WittVector& x, const WittVector& y);
WittVector operator*(const WittVector& x, const WittVector& y);

/// The multiplicative lift [c]: c in coordinate 1, zero elsewhere.
WittVector teichmuller(const Rat& c, const TruncationSet& trunc,
                       const CoefficientRing& ring);

/// (V_r x)_m = x_{m/r} when r | m, else 0.  Requires x.trunc() == target/r.
WittVector verschiebung(long r, const WittVector& x, const TruncationSet& target);

/// Characterized by ghost(F_r x)_m = ghost(x)_{rm}; lands over trunc/r.
WittVector frobenius(long r, const WittVector& x);

/// Inverse of the ghost map; only available over the rationals.
WittVector from_ghost(const std::vector<Rat>& ghost, const TruncationSet& trunc);

/// k-fold sum of x (k may be negative).
WittVector scalar_multiple(const Int& k, const WittVector& x);

/// Natural restriction (coordinate projection) to a sub-truncation-set.
WittVector restrict_to(const WittVector& x, const TruncationSet& smaller);

/// A Witt vector over a truncation poset: one ordinary Witt vector per
/// component, the component over {1..size}.
struct PosetWittVector {
  TruncationPoset poset;
  CoefficientRing ring;
  std::vector<WittVector> per_component;
};

PosetWittVector poset_zero(TruncationPoset poset, CoefficientRing ring);
PosetWittVector poset_add(const PosetWittVector& x, const PosetWittVector& y);
/// Ghost coordinates flattened in component-major order.
std::vector<Rat> poset_ghost(const PosetWittVector& x);

/// The generalized Verschiebung V_a^b : W_{S_n(a,N)} -> W_{S_n(b,N)},
/// realized component-wise as classical V's routed by vmap_components.
/// Requires b | a.
PosetWittVector generalized_verschiebung(int b, const PosetWittVector& x);

}  // namespace wittk
