#pragma once

// Nilpotent representations of the cyclic quiver with h nodes, arrows j -> j-1,
// and Lusztig's map Psi into partial affine flags of composition d.

#include <map>
#include <numeric>
#include <vector>

#include "affsch/affine_weyl.hpp"
#include "affsch/error.hpp"
#include "affsch/field.hpp"
#include "affsch/lattice.hpp"

namespace affsch {

inline Int wrap_index(Int j, Int h) { return residue1(j, h); }

struct DimensionVector {
  std::vector<int> d;

  DimensionVector() = default;
  explicit DimensionVector(std::vector<int> dims) : d(std::move(dims)) {
    if (d.empty()) throw DomainError("bad_dimension_vector", "dimension vector must be nonempty");
    for (int x : d)
      if (x <= 0) throw DomainError("bad_dimension_vector", "dimensions must be positive");
  }
  int h() const { return static_cast<int>(d.size()); }
  int n() const { return std::accumulate(d.begin(), d.end(), 0); }
  /// d_j with j taken mod h (d_0 = d_h).
  int at(Int j) const { return d[wrap_index(j, h()) - 1]; }
  /// i_j = d_1 + ... + d_{j-1}, for 1 <= j <= h+1.
  int offset(int j) const { return std::accumulate(d.begin(), d.begin() + (j - 1), 0); }
  bool operator==(const DimensionVector&) const = default;
};

template <class F>
struct QuiverRep {
  F field;
  DimensionVector dims;
  std::vector<Mat<F>> mats;  // mats[j-1] = M_j : k^{d_j} -> k^{d_{j-1}}, shape d_{j-1} x d_j

  QuiverRep(const F& f, DimensionVector dv, std::vector<Mat<F>> m) : field(f), dims(std::move(dv)), mats(std::move(m)) {
    if (static_cast<int>(mats.size()) != dims.h()) throw DomainError("shape_mismatch", "need one matrix per arrow");
    for (int j = 1; j <= dims.h(); ++j) {
      const auto& mj = mats[j - 1];
      if (mj.rows != static_cast<std::size_t>(dims.at(j - 1)) || mj.cols != static_cast<std::size_t>(dims.at(j)))
        throw DomainError("shape_mismatch", "M_" + std::to_string(j) + " must be d_{j-1} x d_j");
    }
  }

  static QuiverRep zero(const F& f, const DimensionVector& dv) {
    std::vector<Mat<F>> m;
    for (int j = 1; j <= dv.h(); ++j) m.push_back(zero_matrix(f, dv.at(j - 1), dv.at(j)));
    return QuiverRep(f, dv, std::move(m));
  }

  int h() const { return dims.h(); }
  int n() const { return dims.n(); }
  const Mat<F>& mat(Int j) const { return mats[wrap_index(j, h()) - 1]; }
};

/// M_j^{[k]} = M_{j-k+1} ... M_{j-1} M_j, of shape d_{j-k} x d_j; the identity for k = 0.
template <class F>
Mat<F> path_product(const QuiverRep<F>& m, Int j, Int k) {
  if (k < 0) throw DomainError("bad_path", "path length must be nonnegative");
  Mat<F> out = identity_matrix(m.field, m.dims.at(j));
  for (Int s = 0; s < k; ++s) out = multiply(m.field, m.mat(j - s), out);
  return out;
}

template <class F>
bool is_nilpotent(const QuiverRep<F>& m) {
  const Mat<F> cyc = path_product(m, m.h(), m.h());
  return is_zero_matrix(m.field, power(m.field, cyc, cyc.rows));
}

/// (g_1..g_h)·M = (g_h M_1 g_1^{-1}, g_1 M_2 g_2^{-1}, ...).
template <class F>
QuiverRep<F> act(const std::vector<Mat<F>>& g, const QuiverRep<F>& m) {
  if (static_cast<int>(g.size()) != m.h()) throw DomainError("shape_mismatch", "need one group factor per node");
  std::vector<Mat<F>> out;
  for (int j = 1; j <= m.h(); ++j) {
    const auto& left = g[wrap_index(j - 1, m.h()) - 1];
    out.push_back(multiply(m.field, multiply(m.field, left, m.mats[j - 1]), inverse(m.field, g[j - 1])));
  }
  return QuiverRep<F>(m.field, m.dims, std::move(out));
}

/// Block-diagonal embedding of (g_1..g_h) into GL_n.
template <class F>
Mat<F> block_diagonal(const F& f, const std::vector<Mat<F>>& g) {
  std::size_t n = 0;
  for (const auto& b : g) n += b.rows;
  Mat<F> out(n, n, f.zero());
  std::size_t at = 0;
  for (const auto& b : g) {
    for (std::size_t r = 0; r < b.rows; ++r)
      for (std::size_t c = 0; c < b.cols; ++c) out(at + r, at + c) = b(r, c);
    at += b.rows;
  }
  return out;
}

/// Node relabeling j -> j-1: the new M_j is the old M_{j+1}.
template <class F>
QuiverRep<F> rotate(const QuiverRep<F>& m) {
  std::vector<int> d;
  std::vector<Mat<F>> mats;
  for (int j = 1; j <= m.h(); ++j) {
    d.push_back(m.dims.at(j + 1));
    mats.push_back(m.mat(j + 1));
  }
  return QuiverRep<F>(m.field, DimensionVector(d), std::move(mats));
}

inline Window psi_window(int n) { return Window(n, 1, Int{n} * n + n + 1); }

/// Column matrix of Psi(M): column block j carries I_j in row block (n-1)h + j and
/// M_j^{[k]} k row blocks above it; row block rho is node rho mod h at t-power (rho-1) div h.
template <class F>
Mat<F> psi_columns(const QuiverRep<F>& m) {
  const int h = m.h(), n = m.n();
  const Window w = psi_window(n);
  Mat<F> cols(w.dim(), n, m.field.zero());
  for (int j = 1; j <= h; ++j) {
    const int col0 = m.dims.offset(j);
    const Int identity_block = Int{n - 1} * h + j;
    for (Int k = 0; k < identity_block; ++k) {
      const Int rho = identity_block - k;
      const int node = static_cast<int>(wrap_index(rho, h));
      const Int tpow = (rho - 1) / h;
      const Mat<F> p = path_product(m, j, k);
      const Int row0 = m.dims.offset(node) + Int{n} * tpow;
      for (std::size_t r = 0; r < p.rows; ++r)
        for (std::size_t c = 0; c < p.cols; ++c) cols(static_cast<std::size_t>(row0) + r, col0 + c) = p(r, c);
    }
  }
  return cols;
}

template <class F>
LatticeFlag<F> psi(const QuiverRep<F>& m) {
  if (!is_nilpotent(m)) throw DomainError("not_nilpotent", "cyclic product M_1...M_h is not nilpotent");
  const int n = m.n();
  const Window w = psi_window(n);
  const Mat<F> cols = psi_columns(m);
  LatticeFlag<F> flag{m.dims.d, {}};
  for (int j = 1; j <= m.h(); ++j) {
    const std::size_t first = m.dims.offset(j);
    Mat<F> rows(n, w.dim(), m.field.zero());
    // columns of blocks >= j as they are, earlier ones times t
    for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
      const std::size_t shift = c < first ? n : 0;
      for (std::size_t r = 0; r + shift < w.dim(); ++r) rows(c, r + shift) = cols(r, c);
    }
    flag.lattices.push_back(LatticeWindow<F>::span(m.field, w, std::move(rows)));
  }
  return flag;
}

template <class F>
LatticeFlag<F> psi(const QuiverRep<F>& m, const Window& w) {
  const Window base = psi_window(m.n());
  if (w.n != m.n() || w.lo > base.lo || w.hi < base.hi)
    throw DomainError("window_too_small", "psi needs a window containing [1, n^2+n]");
  return psi(m).rewindow(w);
}

/// Image conditions of Psi: the flag steps, t^{n-1}E_{(j+1)} ⊆ Λ_j, and
/// Λ_j ∩ t^{n-1}E'_{(j)} = 0.
template <class F>
bool verify_psi_image(const LatticeFlag<F>& flag, const DimensionVector& dv) {
  try {
    flag.validate();
  } catch (const DomainError&) {
    return false;
  }
  const Int n = dv.n();
  for (int j = 1; j <= dv.h(); ++j) {
    const Int below = 1 + dv.offset(j + 1) + n * (n - 1);
    if (!flag.lattices[j - 1].contains(standard_lattice(below, flag.window(), flag.lattices[j - 1].field())))
      return false;
  }
  return opposite_cell_test(flag, n * (n - 1));
}

struct RankTable {
  DimensionVector dims;
  std::vector<std::vector<Int>> r;  // r[j-1][k] for 0 <= k <= n h + 1

  Int at(Int j, Int k) const;
  /// Number of summands I_j^k: m_j^k = r_j^k - r_j^{k+1} - r_{j+1}^{k+1} + r_{j+1}^{k+2}.
  Int multiplicity(Int j, Int k) const;
  Int max_k() const { return static_cast<Int>(r.front().size()) - 1; }
  /// Throws inconsistent_rank_table if some multiplicity is negative.
  void validate() const;
  bool operator==(const RankTable&) const = default;
};

template <class F>
RankTable rank_table(const QuiverRep<F>& m) {
  if (!is_nilpotent(m)) throw DomainError("not_nilpotent", "rank tables are defined for nilpotent representations");
  RankTable t{m.dims, {}};
  const Int kmax = Int{m.n()} * m.h() + 1;
  for (int j = 1; j <= m.h(); ++j) {
    std::vector<Int> row;
    for (Int k = 0; k <= kmax; ++k) row.push_back(static_cast<Int>(rank(m.field, path_product(m, j, k))));
    t.r.push_back(row);
  }
  t.validate();
  return t;
}

/// Indecomposable I_j^k: basis e_{j-k}, ..., e_j with e_i at node i mod h and e_i -> e_{i-1}.
struct Indecomposable {
  int j = 1;
  int k = 0;
  auto operator<=>(const Indecomposable&) const = default;
};

using Multiplicities = std::map<Indecomposable, int>;

Multiplicities multiplicities(const RankTable& t);
/// Reconstructs ranks from multiplicities by summing D_j^k = sum_{k' >= k} m_j^{k'} along diagonals.
RankTable ranks_from_multiplicities(const DimensionVector& dv, const Multiplicities& m);
/// Dimension vector of a direct sum of indecomposables.
std::vector<int> total_dimension(int h, const Multiplicities& m);
/// Every nilpotent orbit (as multiplicities) with dimension vector d.
std::vector<Multiplicities> all_orbits(const DimensionVector& dv);

template <class F>
QuiverRep<F> from_indecomposables(const F& f, const DimensionVector& dv, const Multiplicities& mult) {
  const int h = dv.h();
  if (total_dimension(h, mult) != dv.d) throw DomainError("bad_dimension_vector", "summands do not add up to d");
  QuiverRep<F> rep = QuiverRep<F>::zero(f, dv);
  std::vector<int> next(h + 1, 0);
  for (const auto& [ind, count] : mult)
    for (int copy = 0; copy < count; ++copy) {
      // basis slot of e_i, i = j-k..j
      std::vector<int> slot;
      for (int i = ind.j - ind.k; i <= ind.j; ++i) slot.push_back(next[wrap_index(i, h)]++);
      for (int i = ind.j - ind.k + 1; i <= ind.j; ++i) {
        const Int node = wrap_index(i, h);
        rep.mats[node - 1](slot[i - 1 - (ind.j - ind.k)], slot[i - (ind.j - ind.k)]) = f.one();
      }
    }
  return rep;
}

/// The open cell of Psi(orbit), as a minimal coset representative mod W_d.
AffinePermutation orbit_permutation(const RankTable& t);
/// Jump sets of a flag read back as a minimal coset representative.
template <class F>
AffinePermutation flag_permutation(const LatticeFlag<F>& flag);

/// Bruhat-maximal orbit permutations for d.
std::vector<AffinePermutation> component_permutations(const DimensionVector& dv);

template <class F>
AffinePermutation flag_permutation(const LatticeFlag<F>& flag) {
  const Window& w = flag.window();
  const int n = w.n, h = static_cast<int>(flag.composition.size());
  auto in_set = [&](int j, Int x) -> bool {
    if (j == h + 1) {
      x -= n;
      j = 1;
    }
    if (x >= w.hi) return true;
    if (x < w.lo) return false;
    const auto& piv = flag.lattices[j - 1].pivots();
    return std::binary_search(piv.begin(), piv.end(), x);
  };
  std::vector<Int> window;
  for (int j = 1; j <= h; ++j) {
    std::vector<Int> block;
    for (Int x = w.lo; x < w.hi + n; ++x)
      if (in_set(j, x) && !in_set(j + 1, x)) block.push_back(x);
    if (static_cast<int>(block.size()) != flag.composition[j - 1])
      throw DomainError("bad_flag", "jump sets do not match the composition");
    window.insert(window.end(), block.begin(), block.end());
  }
  return AffinePermutation(n, window);
}

}  // namespace affsch
