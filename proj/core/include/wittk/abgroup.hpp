#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wittk/numeric.hpp"

namespace wittk {

/// Dense integer matrix with exact arbitrary-precision entries.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  bool operator==(const IntMat& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
/// [a | b] side by side; row counts must agree.
IntMat hstack(const IntMat& a, const IntMat& b);

/// u * input * v = d with u, v unimodular, d diagonal with d1 | d2 | ...
/// The integer inverses of u and v are tracked alongside.
struct SmithNormalForm {
  IntMat u, d, v;
  IntMat u_inv, v_inv;
  std::size_t rank = 0;
  /// The nonzero diagonal entries d1 | d2 | ... (positive).
  std::vector<Int> divisors() const;
};

SmithNormalForm smith_normal_form(IntMat m);

/// Columns spanning the lattice {x : m x = 0} over the integers.
IntMat kernel_basis(const IntMat& m);

/// Solve a x = b exactly over the integers (b may have several columns).
/// Throws IntegralityError when no integer solution exists.
IntMat solve_exact(const IntMat& a, const IntMat& b);

/// A finitely generated abelian group in elementary divisor form: torsion
/// coefficients d1 | d2 | ... (each >= 2) followed by one 0 per free summand.
struct FinAbGroup {
  std::vector<Int> divisors;

  static FinAbGroup trivial() { return {}; }
  bool is_trivial() const { return divisors.empty(); }
  std::size_t free_rank() const;
  /// Product of the finite divisors.
  Int torsion_order() const;
  /// "Z/2 + Z/4 + Z", or "0" for the trivial group.
  std::string to_string() const;
  bool operator==(const FinAbGroup& other) const = default;
};

/// Canonicalize an arbitrary multiset of cyclic orders (>= 1, or 0 for a free
/// summand) into elementary divisor form; orders equal to 1 are dropped.
FinAbGroup canonical_group(std::vector<Int> orders);
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

/// Z^rank modulo the column span of `relations` (rank x k matrix).
FinAbGroup group_from_presentation(std::size_t rank, const IntMat& relations);

/// A homomorphism between groups presented by generator orders (0 = free
/// generator).  matrix is target-generators x source-generators and must send
/// source relations into target relations.
struct AbHom {
  std::vector<Int> source;
  std::vector<Int> target;
  IntMat matrix;
};

/// Throws ParameterError unless the matrix respects the presentations.
void validate_hom(const AbHom& h);

FinAbGroup cokernel(const AbHom& h);
/// Kernel of h; the source must be finite.
FinAbGroup kernel(const AbHom& h);

/// ker(boundary_out) / im(boundary_in); requires boundary_out * boundary_in = 0.
FinAbGroup homology_group(const IntMat& boundary_out, const IntMat& boundary_in);

}  // namespace wittk
