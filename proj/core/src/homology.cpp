#include "wittk/homology.hpp"

#include <map>

#include "wittk/error.hpp"

namespace wittk {

namespace {

void check_params(int s, int a) {
  if (s < 1) throw ParameterError("chain complex needs s >= 1");
  if (a < 2) throw ParameterError("chain complex needs a >= 2");
}

// Append to `out` every extension of `partial` by `parts` further entries in
// [1, a-1] summing to `remaining`.
void extend_compositions(std::vector<Monomial>& out, Monomial& partial,
                         int remaining, int parts, int a) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(partial);
    return;
  }
  for (int k = 1; k < a && k <= remaining - (parts - 1); ++k) {
    partial.ks.push_back(k);
    extend_compositions(out, partial, remaining - k, parts - 1, a);
    partial.ks.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(int s, int a, int e) {
  check_params(s, a);
  if (e < 0) throw ParameterError("degree must be >= 0");
  std::vector<Monomial> out;
  for (int left = 0; left + 1 < a; ++left) {
    for (int right = 0; left + 1 + right < a; ++right) {
      const int rest = s - 1 - left - right;
      if (rest < 0) continue;
      Monomial partial{left, right, {}};
      partial.ks.reserve(static_cast<std::size_t>(e));
      extend_compositions(out, partial, rest, e, a);
    }
  }
  return out;
}

namespace {

bool monomial_less(const Monomial& x, const Monomial& y) {
  if (x.k0_left != y.k0_left) return x.k0_left < y.k0_left;
  if (x.k0_right != y.k0_right) return x.k0_right < y.k0_right;
  return x.ks < y.ks;
}

std::map<Monomial, std::size_t, bool (*)(const Monomial&, const Monomial&)>
index_map(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t, bool (*)(const Monomial&, const Monomial&)>
      out(monomial_less);
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i], i);
  return out;
}

}  // namespace

IntMat boundary_matrix(int s, int a, int e) {
  check_params(s, a);
  if (e < 1) throw ParameterError("boundary_matrix needs degree >= 1");
  const std::vector<Monomial> domain = monomial_basis(s, a, e);
  const std::vector<Monomial> codomain = monomial_basis(s, a, e - 1);
  const auto row_of = index_map(codomain);

  auto emit = [&](IntMat& mat, const Monomial& face, std::size_t col, int sign) {
    auto it = row_of.find(face);
    if (it == row_of.end())
      throw Error("boundary face is admissible but missing from the basis");
    mat(it->second, col) += sign;
  };

  IntMat mat(codomain.size(), domain.size());
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const Monomial& m = domain[col];
    // d_0 multiplies the first tensor factor into the right of the x0 block.
    if (m.k0_left + 1 + m.k0_right + m.ks.front() < a) {
      Monomial face{m.k0_left, m.k0_right + m.ks.front(),
                    {m.ks.begin() + 1, m.ks.end()}};
      emit(mat, face, col, 1);
    }
    // Interior faces merge adjacent tensor factors.
    int sign = -1;
    for (std::size_t i = 0; i + 1 < m.ks.size(); ++i) {
      if (m.ks[i] + m.ks[i + 1] < a) {
        Monomial face{m.k0_left, m.k0_right, m.ks};
        face.ks[i] += face.ks[i + 1];
        face.ks.erase(face.ks.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        emit(mat, face, col, sign);
      }
      sign = -sign;
    }
    // The last face multiplies the final factor into the left of the x0 block.
    if (m.k0_left + m.ks.back() + 1 + m.k0_right < a) {
      Monomial face{m.k0_left + m.ks.back(), m.k0_right,
                    {m.ks.begin(), m.ks.end() - 1}};
      emit(mat, face, col, sign);
    }
  }
  return mat;
}

ChainComplex build_chain_complex(int s, int a) {
  check_params(s, a);
  ChainComplex cc;
  cc.s = s;
  cc.a = a;
  cc.bases.reserve(static_cast<std::size_t>(s));
  for (int e = 0; e < s; ++e) cc.bases.push_back(monomial_basis(s, a, e));

  cc.boundaries.resize(static_cast<std::size_t>(s));
  cc.boundaries[0] = IntMat(0, cc.bases[0].size());
  for (int e = 1; e < s; ++e)
    cc.boundaries[static_cast<std::size_t>(e)] = boundary_matrix(s, a, e);

  for (int e = 1; e + 1 < s; ++e) {
    IntMat square = cc.boundaries[static_cast<std::size_t>(e)] *
                    cc.boundaries[static_cast<std::size_t>(e) + 1];
    for (std::size_t i = 0; i < square.rows(); ++i)
      for (std::size_t j = 0; j < square.cols(); ++j)
        if (square(i, j) != 0) throw Error("boundary squared is nonzero");
  }
  return cc;
}

std::vector<FinAbGroup> homology(int s, int a) {
  ChainComplex cc = build_chain_complex(s, a);
  std::vector<FinAbGroup> out;
  out.reserve(static_cast<std::size_t>(s));
  for (int e = 0; e < s; ++e) {
    const IntMat& boundary_out = cc.boundaries[static_cast<std::size_t>(e)];
    const IntMat boundary_in =
        e + 1 < s ? cc.boundaries[static_cast<std::size_t>(e) + 1]
                  : IntMat(cc.bases[static_cast<std::size_t>(e)].size(), 0);
    out.push_back(homology_group(boundary_out, boundary_in));
  }
  return out;
}

namespace {

// The explicit generating cycles, each a +1-sum of admissible monomials.
std::vector<std::vector<Monomial>> iota_cycle_terms(int s, int a) {
  const int d = (s - 1) / a;
  if (s % a != 0) {
    // One cycle: x0 x^{k0''} (x) x (x) x^{k2} (x) x (x) ... (x) x^{k_{2d}},
    // summed over all admissible (k0'', k2, .., k_{2d}) with sum s - d - 1.
    std::vector<Monomial> terms;
    for (int right = 0; right + 1 < a && right <= s - d - 1; ++right) {
      std::vector<Monomial> fillings;
      Monomial partial{0, right, {}};
      extend_compositions(fillings, partial, s - d - 1 - right, d, a);
      for (const Monomial& f : fillings) {
        Monomial m{0, right, {}};
        m.ks.reserve(static_cast<std::size_t>(2 * d));
        for (int i = 0; i < d; ++i) {
          m.ks.push_back(1);
          m.ks.push_back(f.ks[static_cast<std::size_t>(i)]);
        }
        terms.push_back(std::move(m));
      }
    }
    return {std::move(terms)};
  }
  // a | s: the a-1 cycles x^i x0 x^{a-i-2} (x) x (x) x^{a-1} (x) ... (x) x.
  std::vector<std::vector<Monomial>> out;
  for (int i = 0; i + 1 < a; ++i) {
    Monomial m{i, a - i - 2, {}};
    m.ks.reserve(static_cast<std::size_t>(2 * d + 1));
    for (int j = 0; j < d; ++j) {
      m.ks.push_back(1);
      m.ks.push_back(a - 1);
    }
    m.ks.push_back(1);
    out.push_back({std::move(m)});
  }
  return out;
}

}  // namespace

IotaReport iota_check(int s, int a) {
  check_params(s, a);
  ChainComplex cc = build_chain_complex(s, a);
  const int d = (s - 1) / a;

  IotaReport report;
  report.degree = s % a == 0 ? 2 * d + 1 : 2 * d;
  const auto e = static_cast<std::size_t>(report.degree);
  const auto& basis = cc.bases[e];
  const auto index_of = index_map(basis);

  const auto cycles = iota_cycle_terms(s, a);
  report.cycle_count = static_cast<int>(cycles.size());
  IntMat candidates(basis.size(), cycles.size());
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    for (const Monomial& term : cycles[j]) {
      auto it = index_of.find(term);
      if (it == index_of.end())
        throw Error("iota term is not an admissible monomial");
      candidates(it->second, j) += 1;
    }
  }

  report.cycles_valid = true;
  IntMat boundaries_of = cc.boundaries[e] * candidates;
  for (std::size_t i = 0; i < boundaries_of.rows(); ++i)
    for (std::size_t j = 0; j < boundaries_of.cols(); ++j)
      if (boundaries_of(i, j) != 0) report.cycles_valid = false;

  if (report.cycles_valid) {
    const IntMat boundary_in =
        report.degree + 1 < s
            ? cc.boundaries[e + 1]
            : IntMat(basis.size(), 0);
    IntMat cycle_lattice = kernel_basis(cc.boundaries[e]);
    IntMat image_coords = solve_exact(cycle_lattice, boundary_in);
    IntMat candidate_coords = solve_exact(cycle_lattice, candidates);
    report.generates =
        group_from_presentation(cycle_lattice.cols(),
                                hstack(candidate_coords, image_coords))
            .is_trivial();
  }
  report.pass = report.cycles_valid && report.generates;
  return report;
}

}  // namespace wittk
