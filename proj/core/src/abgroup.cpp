#include "wittk/abgroup.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "wittk/error.hpp"

namespace wittk {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw ParameterError("matrix product shape mismatch");
  IntMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

IntMat hstack(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw ParameterError("hstack row mismatch");
  IntMat out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

namespace {

// Elementary row/column operations applied to d and mirrored into the
// unimodular factors and their inverses.
struct SnfState {
  IntMat d, u, v, u_inv, v_inv;

  explicit SnfState(IntMat m)
      : d(std::move(m)),
        u(IntMat::identity(d.rows())),
        v(IntMat::identity(d.cols())),
        u_inv(IntMat::identity(d.rows())),
        v_inv(IntMat::identity(d.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    for (std::size_t r = 0; r < u_inv.rows(); ++r)
      std::swap(u_inv(r, i), u_inv(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    for (std::size_t c = 0; c < v_inv.cols(); ++c)
      std::swap(v_inv(i, c), v_inv(j, c));
  }

  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) += q * d(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += q * u(j, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r)
      u_inv(r, j) -= q * u_inv(r, i);
  }

  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, i) += q * d(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += q * v(r, j);
    for (std::size_t c = 0; c < v_inv.cols(); ++c)
      v_inv(j, c) -= q * v_inv(i, c);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, i) = -u_inv(r, i);
  }
};

}  // namespace

SmithNormalForm smith_normal_form(IntMat m) {
  SnfState s(std::move(m));
  const std::size_t nmin = std::min(s.d.rows(), s.d.cols());

  std::size_t t = 0;
  for (; t < nmin; ++t) {
    // Pivot: least nonzero absolute value in the trailing submatrix.
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < s.d.rows(); ++i) {
      for (std::size_t j = t; j < s.d.cols(); ++j) {
        if (s.d(i, j) == 0) continue;
        Int mag = abs(s.d(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.d.rows(); ++i) {
        if (s.d(i, t) == 0) continue;
        Int q = s.d(i, t) / s.d(t, t);
        s.add_row(i, t, -q);
        if (s.d(i, t) != 0) {
          // Remainder is strictly smaller than the pivot; promote it.
          s.swap_rows(t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < s.d.cols(); ++j) {
        if (s.d(t, j) == 0) continue;
        Int q = s.d(t, j) / s.d(t, t);
        s.add_col(j, t, -q);
        if (s.d(t, j) != 0) {
          s.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // Enforce the divisibility chain before moving on.
      bool fixed = false;
      for (std::size_t i = t + 1; i < s.d.rows() && !fixed; ++i) {
        for (std::size_t j = t + 1; j < s.d.cols() && !fixed; ++j) {
          if (s.d(i, j) % s.d(t, t) != 0) {
            s.add_row(t, i, 1);
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (s.d(t, t) < 0) s.negate_row(t);
  }

  SmithNormalForm out;
  out.u = std::move(s.u);
  out.d = std::move(s.d);
  out.v = std::move(s.v);
  out.u_inv = std::move(s.u_inv);
  out.v_inv = std::move(s.v_inv);
  out.rank = t;
  return out;
}

std::vector<Int> SmithNormalForm::divisors() const {
  std::vector<Int> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

IntMat kernel_basis(const IntMat& m) {
  SmithNormalForm snf = smith_normal_form(m);
  IntMat out(m.cols(), m.cols() - snf.rank);
  for (std::size_t j = snf.rank; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.cols(); ++i)
      out(i, j - snf.rank) = snf.v(i, j);
  }
  return out;
}

IntMat solve_exact(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw ParameterError("solve_exact shape mismatch");
  SmithNormalForm snf = smith_normal_form(a);
  IntMat c = snf.u * b;
  IntMat y(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < snf.rank) {
        if (c(i, j) % snf.d(i, i) != 0)
          throw IntegralityError("solve_exact: right-hand side not divisible");
        y(i, j) = c(i, j) / snf.d(i, i);
      } else if (c(i, j) != 0) {
        throw IntegralityError("solve_exact: inconsistent system");
      }
    }
  }
  return snf.v * y;
}

std::size_t FinAbGroup::free_rank() const {
  std::size_t r = 0;
  for (const Int& d : divisors)
    if (d == 0) ++r;
  return r;
}

Int FinAbGroup::torsion_order() const {
  Int order = 1;
  for (const Int& d : divisors)
    if (d != 0) order *= d;
  return order;
}

std::string FinAbGroup::to_string() const {
  if (divisors.empty()) return "0";
  std::string out;
  for (const Int& d : divisors) {
    if (!out.empty()) out += " + ";
    out += d == 0 ? "Z" : "Z/" + d.str();
  }
  return out;
}

FinAbGroup canonical_group(std::vector<Int> orders) {
  std::size_t free_rank = 0;
  // exponent multisets per prime, each kept descending
  std::map<Int, std::vector<int>> primary;
  for (Int& d : orders) {
    if (d < 0) d = -d;
    if (d == 0) {
      ++free_rank;
      continue;
    }
    if (d == 1) continue;
    for (Int p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      int e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      primary[p].push_back(e);
    }
    if (d > 1) primary[d].push_back(1);
  }

  std::size_t summands = 0;
  for (auto& [p, exps] : primary) {
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    summands = std::max(summands, exps.size());
  }

  FinAbGroup out;
  // Largest invariant factor collects the largest exponent of each prime.
  std::vector<Int> factors(summands, Int(1));
  for (auto& [p, exps] : primary) {
    for (std::size_t i = 0; i < exps.size(); ++i)
      factors[i] *= pow_t(p, exps[i]);
  }
  out.divisors.assign(factors.rbegin(), factors.rend());
  out.divisors.insert(out.divisors.end(), free_rank, Int(0));
  return out;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Int> orders = a.divisors;
  orders.insert(orders.end(), b.divisors.begin(), b.divisors.end());
  return canonical_group(std::move(orders));
}

FinAbGroup group_from_presentation(std::size_t rank, const IntMat& relations) {
  if (relations.rows() != rank)
    throw ParameterError("presentation relation rows must equal rank");
  SmithNormalForm snf = smith_normal_form(relations);
  FinAbGroup out;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (snf.d(i, i) != 1) out.divisors.push_back(snf.d(i, i));
  }
  out.divisors.insert(out.divisors.end(), rank - snf.rank, Int(0));
  return out;
}

namespace {

// Diagonal relation columns for the finite generator orders.
IntMat relation_matrix(const std::vector<Int>& orders) {
  std::size_t finite = 0;
  for (const Int& d : orders)
    if (d != 0) ++finite;
  IntMat rel(orders.size(), finite);
  std::size_t col = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] != 0) rel(i, col++) = orders[i];
  }
  return rel;
}

}  // namespace

void validate_hom(const AbHom& h) {
  if (h.matrix.rows() != h.target.size() || h.matrix.cols() != h.source.size())
    throw ParameterError("hom matrix shape does not match presentations");
  for (const Int& d : h.source)
    if (d < 0) throw ParameterError("negative source order");
  for (const Int& d : h.target)
    if (d < 0) throw ParameterError("negative target order");
  for (std::size_t i = 0; i < h.source.size(); ++i) {
    if (h.source[i] == 0) continue;
    for (std::size_t j = 0; j < h.target.size(); ++j) {
      const Int v = h.matrix(j, i) * h.source[i];
      if (h.target[j] == 0 ? v != 0 : v % h.target[j] != 0)
        throw ParameterError("hom matrix does not respect source relations");
    }
  }
}

FinAbGroup cokernel(const AbHom& h) {
  validate_hom(h);
  return group_from_presentation(h.target.size(),
                                 hstack(h.matrix, relation_matrix(h.target)));
}

FinAbGroup kernel(const AbHom& h) {
  validate_hom(h);
  for (const Int& d : h.source)
    if (d == 0) throw ParameterError("kernel requires a finite source");

  const std::size_t s = h.source.size();
  // x represents a kernel element iff matrix * x lies in the target relation
  // lattice: project the kernel of [matrix | relations] onto the x block.
  IntMat combined = hstack(h.matrix, relation_matrix(h.target));
  IntMat full_kernel = kernel_basis(combined);
  IntMat preimage(s, full_kernel.cols());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < full_kernel.cols(); ++j)
      preimage(i, j) = full_kernel(i, j);

  // The preimage lattice L contains the source relation lattice; the kernel
  // group is L / relations, presented in a basis of L.
  IntMat rel_a = relation_matrix(h.source);
  SmithNormalForm snf = smith_normal_form(hstack(preimage, rel_a));
  if (snf.rank != s) throw Error("kernel: preimage lattice is not full rank");
  IntMat c = snf.u * rel_a;
  IntMat x(s, rel_a.cols());
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < rel_a.cols(); ++j) {
      if (c(i, j) % snf.d(i, i) != 0)
        throw IntegralityError("kernel: relation not inside preimage lattice");
      x(i, j) = c(i, j) / snf.d(i, i);
    }
  }
  return group_from_presentation(s, x);
}

FinAbGroup homology_group(const IntMat& boundary_out, const IntMat& boundary_in) {
  if (boundary_out.cols() != boundary_in.rows())
    throw ParameterError("homology boundary shapes do not compose");
  IntMat cycles = kernel_basis(boundary_out);
  IntMat image_coords = solve_exact(cycles, boundary_in);
  return group_from_presentation(cycles.cols(), image_coords);
}

}  // namespace wittk
