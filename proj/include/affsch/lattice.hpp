#pragma once

// Finite-window model of A-lattices in V = k((t))^n.
//
// A lattice L with E_hi ⊆ L ⊆ E_lo is stored as the subspace L/E_hi of
// E_lo/E_hi, coordinates e_lo .. e_{hi-1}, with t acting by e_i -> e_{i+n}.
// The basis is kept in reduced row echelon form with pivots at the smallest
// coordinate index of each vector, so #pivots < j equals dim L/(L ∩ E_j).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "affsch/affine_weyl.hpp"
#include "affsch/error.hpp"
#include "affsch/field.hpp"

namespace affsch {

struct Window {
  int n = 1;
  Int lo = 1;
  Int hi = 2;

  Window() = default;
  Window(int n_, Int lo_, Int hi_) : n(n_), lo(lo_), hi(hi_) {
    if (n < 1) throw DomainError("bad_window", "period must be positive");
    if (lo >= hi || (hi - lo) % n != 0)
      throw DomainError("bad_window", "window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                          ") must be nonempty with length a multiple of n");
  }

  std::size_t dim() const { return static_cast<std::size_t>(hi - lo); }
  bool aligned() const { return residue1(lo, n) == 1; }
  std::size_t col(Int index) const { return static_cast<std::size_t>(index - lo); }
  bool operator==(const Window&) const = default;
};

/// Window [lo, hi) around p's sandwich bounds, with hi - lo a multiple of n.
Window tight_window(const AffinePermutation& p);
/// As tight_window, additionally rounded outward so lo ≡ 1 (mod n).
Window default_window(const AffinePermutation& p);

enum class SchubertMode { cell, variety };

template <class F>
class LatticeWindow {
 public:
  using Elem = typename F::Elem;

  /// Span of the rows of `vectors` (window coordinates), closed under t.
  static LatticeWindow span(const F& f, const Window& w, Mat<F> vectors) {
    if (vectors.cols != w.dim() && vectors.rows > 0)
      throw DomainError("shape_mismatch", "vector length does not match the window");
    vectors.cols = w.dim();
    LatticeWindow out(f, w);
    // repeated t-closure; each round at least shifts every vector by n
    Mat<F> cur = std::move(vectors);
    for (;;) {
      rref_in_place(f, cur);
      Mat<F> next = cur;
      const std::size_t before = cur.rows;
      for (std::size_t r = 0; r < before; ++r) {
        std::vector<Elem> shifted(w.dim(), f.zero());
        bool nonzero = false;
        for (std::size_t c = 0; c + w.n < w.dim(); ++c) {
          shifted[c + w.n] = cur(r, c);
          nonzero |= !f.is_zero(cur(r, c));
        }
        if (nonzero) append_row(next, shifted);
      }
      rref_in_place(f, next);
      if (next.rows == before) {
        out.basis_ = std::move(cur);
        break;
      }
      cur = std::move(next);
    }
    out.refresh_pivots();
    return out;
  }

  /// Row space of `rows`, which the caller guarantees is already t-stable.
  static LatticeWindow from_stable_rows(const F& f, const Window& w, Mat<F> rows) {
    LatticeWindow out(f, w);
    rref_in_place(f, rows);
    out.basis_ = std::move(rows);
    out.refresh_pivots();
    return out;
  }

  /// A-span of the columns of `cols` (rows are window coordinates).
  static LatticeWindow from_columns(const F& f, const Window& w, const Mat<F>& cols) {
    if (cols.rows != w.dim()) throw DomainError("shape_mismatch", "column length does not match the window");
    return span(f, w, transpose<F>(cols));
  }

  static LatticeWindow standard(const F& f, const Window& w, Int j) {
    if (j < w.lo || j > w.hi) throw DomainError("index_outside_window", "E_" + std::to_string(j) + " not visible");
    Mat<F> rows(static_cast<std::size_t>(w.hi - j), w.dim(), f.zero());
    for (Int i = j; i < w.hi; ++i) rows(static_cast<std::size_t>(i - j), w.col(i)) = f.one();
    LatticeWindow out(f, w);
    out.basis_ = std::move(rows);
    out.refresh_pivots();
    return out;
  }

  /// Coordinate lattice spanned by e_i, i in `indices` (plus E_hi), closed under t.
  static LatticeWindow coordinate(const F& f, const Window& w, const std::vector<Int>& indices) {
    Mat<F> rows(0, w.dim(), f.zero());
    for (Int i : indices) {
      if (i >= w.hi) continue;
      if (i < w.lo) throw DomainError("window_too_small", "index " + std::to_string(i) + " below window");
      std::vector<Elem> v(w.dim(), f.zero());
      v[w.col(i)] = f.one();
      append_row(rows, v);
    }
    return span(f, w, std::move(rows));
  }

  const F& field() const { return field_; }
  const Window& window() const { return win_; }
  const Mat<F>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows; }
  /// Absolute coordinate indices of the pivots, ascending.
  const std::vector<Int>& pivots() const { return pivots_; }

  /// dim L/(L ∩ E_j) for lo <= j <= hi.
  Int count_below(Int j) const {
    return std::lower_bound(pivots_.begin(), pivots_.end(), j) - pivots_.begin();
  }

  bool contains_vector(const std::vector<Elem>& v) const {
    // reduce against the echelon basis
    std::vector<Elem> r = v;
    for (std::size_t k = 0; k < basis_.rows; ++k) {
      const std::size_t pc = win_.col(pivots_[k]);
      if (f_is_zero(r[pc])) continue;
      const Elem coef = r[pc];
      for (std::size_t c = pc; c < win_.dim(); ++c) r[c] = field_.sub(r[c], field_.mul(coef, basis_(k, c)));
    }
    return std::all_of(r.begin(), r.end(), [&](const Elem& x) { return field_.is_zero(x); });
  }

  bool contains(const LatticeWindow& other) const {
    require_compatible(other);
    for (std::size_t k = 0; k < other.basis_.rows; ++k)
      if (!contains_vector(other.row(k))) return false;
    return true;
  }

  bool is_t_stable() const {
    for (std::size_t k = 0; k < basis_.rows; ++k)
      if (!contains_vector(shift_t(row(k)))) return false;
    return true;
  }

  /// Image of tL in the window (tL + E_hi).
  LatticeWindow times_t() const {
    Mat<F> rows(0, win_.dim(), field_.zero());
    for (std::size_t k = 0; k < basis_.rows; ++k) append_row(rows, shift_t(row(k)));
    return span(field_, win_, std::move(rows));
  }

  /// t^{-1}L; requires L ⊆ E_{lo+n}.
  LatticeWindow times_t_inverse() const {
    if (!pivots_.empty() && pivots_.front() < win_.lo + win_.n)
      throw DomainError("window_too_small", "t^-1 L leaves the window");
    Mat<F> rows(0, win_.dim(), field_.zero());
    for (std::size_t k = 0; k < basis_.rows; ++k) {
      std::vector<Elem> v(win_.dim(), field_.zero());
      for (std::size_t c = win_.n; c < win_.dim(); ++c) v[c - win_.n] = basis_(k, c);
      append_row(rows, v);
    }
    for (Int i = win_.hi - win_.n; i < win_.hi; ++i) {
      std::vector<Elem> v(win_.dim(), field_.zero());
      v[win_.col(i)] = field_.one();
      append_row(rows, v);
    }
    return span(field_, win_, std::move(rows));
  }

  /// sigma^k L, carried to the shifted window [lo+k, hi+k).
  LatticeWindow sigma_shift(Int k) const {
    LatticeWindow out = *this;
    out.win_ = Window(win_.n, win_.lo + k, win_.hi + k);
    out.refresh_pivots();
    return out;
  }

  /// Re-expresses L in another window of the same period.
  LatticeWindow rewindow(const Window& target) const {
    if (target.n != win_.n) throw DomainError("incompatible_windows", "period mismatch");
    if (!pivots_.empty() && pivots_.front() < target.lo)
      throw DomainError("window_too_small", "lattice is not contained in E_lo of the target window");
    for (Int i = target.hi; i < win_.hi; ++i)
      if (!contains_vector(unit(i))) throw DomainError("window_too_small", "lattice does not contain E_hi of the target window");
    Mat<F> rows(0, target.dim(), field_.zero());
    for (std::size_t k = 0; k < basis_.rows; ++k) {
      std::vector<Elem> v(target.dim(), field_.zero());
      for (Int i = std::max(win_.lo, target.lo); i < std::min(win_.hi, target.hi); ++i)
        v[target.col(i)] = basis_(k, win_.col(i));
      append_row(rows, v);
    }
    for (Int i = win_.hi; i < target.hi; ++i) {
      std::vector<Elem> v(target.dim(), field_.zero());
      v[target.col(i)] = field_.one();
      append_row(rows, v);
    }
    LatticeWindow out(field_, target);
    rref_in_place(field_, rows);
    out.basis_ = std::move(rows);
    out.refresh_pivots();
    return out;
  }

  /// g·L for a constant g in GL_n(k) acting blockwise; needs an aligned window.
  LatticeWindow apply(const Mat<F>& g) const {
    if (g.rows != static_cast<std::size_t>(win_.n) || g.cols != g.rows)
      throw DomainError("shape_mismatch", "group element must be n x n");
    if (!win_.aligned()) throw DomainError("bad_window", "constant group action needs lo ≡ 1 (mod n)");
    const std::size_t n = win_.n;
    Mat<F> rows(basis_.rows, win_.dim(), field_.zero());
    for (std::size_t k = 0; k < basis_.rows; ++k)
      for (std::size_t block = 0; block < win_.dim(); block += n)
        for (std::size_t s = 0; s < n; ++s) {
          Elem acc = field_.zero();
          for (std::size_t r = 0; r < n; ++r) acc = field_.add(acc, field_.mul(g(s, r), basis_(k, block + r)));
          rows(k, block + s) = acc;
        }
    LatticeWindow out(field_, win_);
    rref_in_place(field_, rows);
    out.basis_ = std::move(rows);
    out.refresh_pivots();
    return out;
  }

  LatticeWindow operator+(const LatticeWindow& other) const {
    require_compatible(other);
    Mat<F> rows = basis_;
    for (std::size_t k = 0; k < other.basis_.rows; ++k) append_row(rows, other.row(k));
    LatticeWindow out(field_, win_);
    rref_in_place(field_, rows);
    out.basis_ = std::move(rows);
    out.refresh_pivots();
    return out;
  }

  /// True when L ∩ span{e_i : i < m} = 0.
  bool meets_trivially_below(Int m) const {
    if (m > win_.hi) throw DomainError("window_too_small", "E'_" + std::to_string(m) + " not visible");
    if (m <= win_.lo) return true;
    Mat<F> tail(basis_.rows, static_cast<std::size_t>(win_.hi - m), field_.zero());
    for (std::size_t k = 0; k < basis_.rows; ++k)
      for (Int i = m; i < win_.hi; ++i) tail(k, static_cast<std::size_t>(i - m)) = basis_(k, win_.col(i));
    return rank(field_, tail) == basis_.rows;
  }

  std::vector<Elem> row(std::size_t k) const {
    return std::vector<Elem>(basis_.data.begin() + k * basis_.cols, basis_.data.begin() + (k + 1) * basis_.cols);
  }

  bool operator==(const LatticeWindow& other) const {
    return win_ == other.win_ && basis_ == other.basis_;
  }
  bool operator<(const LatticeWindow& other) const {
    return std::tie(win_.lo, basis_.rows, basis_.data) < std::tie(other.win_.lo, other.basis_.rows, other.basis_.data);
  }

  void require_compatible(const LatticeWindow& other) const {
    if (!(win_ == other.win_)) throw DomainError("incompatible_windows", "lattices live in different windows");
  }

  std::vector<Elem> unit(Int i) const {
    std::vector<Elem> v(win_.dim(), field_.zero());
    v[win_.col(i)] = field_.one();
    return v;
  }

  std::vector<Elem> shift_t(const std::vector<Elem>& v) const {
    std::vector<Elem> s(win_.dim(), field_.zero());
    for (std::size_t c = 0; c + win_.n < win_.dim(); ++c) s[c + win_.n] = v[c];
    return s;
  }

  static void append_row(Mat<F>& m, const std::vector<Elem>& v) {
    if (m.rows == 0) m.cols = v.size();
    m.data.insert(m.data.end(), v.begin(), v.end());
    ++m.rows;
  }

 private:
  LatticeWindow(const F& f, const Window& w) : field_(f), win_(w), basis_(0, w.dim(), f.zero()) {}

  bool f_is_zero(const Elem& x) const { return field_.is_zero(x); }

  void refresh_pivots() {
    pivots_.clear();
    for (std::size_t k = 0; k < basis_.rows; ++k)
      for (std::size_t c = 0; c < basis_.cols; ++c)
        if (!field_.is_zero(basis_(k, c))) {
          pivots_.push_back(win_.lo + static_cast<Int>(c));
          break;
        }
  }

  F field_;
  Window win_;
  Mat<F> basis_;
  std::vector<Int> pivots_;
};

template <class F>
LatticeWindow<F> standard_lattice(Int j, const Window& w, const F& f) {
  return LatticeWindow<F>::standard(f, w, j);
}

template <class F>
LatticeWindow<F> from_columns(const Mat<F>& cols, const Window& w, const F& f) {
  return LatticeWindow<F>::from_columns(f, w, cols);
}

/// dim(L/(L ∩ M)).
template <class F>
Int rel_dim(const LatticeWindow<F>& l, const LatticeWindow<F>& m) {
  return static_cast<Int>((l + m).dim()) - static_cast<Int>(m.dim());
}

/// dim(L/(L ∩ E_1)) - dim(E_1/(E_1 ∩ L)).
template <class F>
Int vdim(const LatticeWindow<F>& l) {
  const Window& w = l.window();
  if (w.lo > 1 || w.hi < 1) throw DomainError("window_too_small", "vdim needs lo <= 1 <= hi");
  return static_cast<Int>(l.dim()) - (w.hi - 1);
}

template <class F>
struct LatticeFlag {
  std::vector<int> composition;
  std::vector<LatticeWindow<F>> lattices;

  /// Checks Λ_1 ⊇ ... ⊇ Λ_h ⊇ tΛ_1 with the composition's step dimensions.
  void validate() const {
    const std::size_t h = composition.size();
    if (h == 0 || lattices.size() != h) throw DomainError("bad_flag", "composition and lattice count disagree");
    for (int part : composition)
      if (part <= 0) throw DomainError("bad_composition", "composition parts must be positive");
    const Window& w = lattices.front().window();
    if (std::accumulate(composition.begin(), composition.end(), 0) != w.n)
      throw DomainError("bad_composition", "composition must sum to n");
    for (const auto& l : lattices) {
      lattices.front().require_compatible(l);
      if (!l.is_t_stable()) throw DomainError("not_a_lattice", "flag member is not t-stable");
    }
    for (std::size_t j = 0; j + 1 < h; ++j) {
      if (!lattices[j].contains(lattices[j + 1]) ||
          lattices[j].dim() != lattices[j + 1].dim() + static_cast<std::size_t>(composition[j]))
        throw DomainError("bad_flag", "step " + std::to_string(j + 1) + " has the wrong containment or dimension");
    }
    if (!lattices.back().contains(lattices.front().times_t()))
      throw DomainError("bad_flag", "last lattice does not contain t times the first");
  }

  const Window& window() const { return lattices.front().window(); }

  /// Position index 1 + d_1 + ... + d_{m-1} of lattice m (0-based m).
  Int position(std::size_t m) const {
    return 1 + std::accumulate(composition.begin(), composition.begin() + m, Int{0});
  }

  LatticeFlag rewindow(const Window& target) const {
    LatticeFlag out{composition, {}};
    for (const auto& l : lattices) out.lattices.push_back(l.rewindow(target));
    return out;
  }

  bool operator==(const LatticeFlag& o) const { return composition == o.composition && lattices == o.lattices; }
  bool operator<(const LatticeFlag& o) const { return lattices < o.lattices; }
};

template <class F>
LatticeFlag<F> standard_flag(const Window& w, const F& f, Int shift = 0) {
  LatticeFlag<F> out{std::vector<int>(w.n, 1), {}};
  for (int i = 1; i <= w.n; ++i) out.lattices.push_back(LatticeWindow<F>::standard(f, w, i + shift));
  return out;
}

/// The T-fixed flag p·E_• (complete) or p·E_(•) for a composition.
template <class F>
LatticeFlag<F> permutation_flag(const AffinePermutation& p, const Window& w, const F& f,
                                std::vector<int> composition = {}) {
  if (composition.empty()) composition.assign(p.n(), 1);
  if (sandwich_bounds(p).first < w.lo || sandwich_bounds(p).second > w.hi)
    throw DomainError("window_too_small", "window does not contain the flag of " + p.to_string());
  LatticeFlag<F> out{composition, {}};
  Int i = 1;
  for (int part : composition) {
    std::vector<Int> idx;
    for (Int k = i; k < i + p.n(); ++k) idx.push_back(p(k));
    out.lattices.push_back(LatticeWindow<F>::coordinate(f, w, idx));
    i += part;
  }
  return out;
}

/// Schubert conditions dim(Λ_m/Λ_m ∩ E_j) vs #(p Z_{>=i_m} \ Z_{>=j}); equality at
/// j = hi in both modes (same connected component).
template <class F>
bool schubert_membership(const LatticeFlag<F>& flag, const AffinePermutation& p, SchubertMode mode) {
  const Window& w = flag.window();
  if (p.n() != w.n) throw DomainError("period_mismatch", "flag and permutation have different n");
  if (sandwich_bounds(p).second > w.hi) throw DomainError("window_too_small", "window too small for " + p.to_string());
  for (std::size_t m = 0; m < flag.lattices.size(); ++m) {
    const Int i = flag.position(m);
    const auto& l = flag.lattices[m];
    for (Int j = w.lo; j <= w.hi; ++j) {
      const Int lhs = l.count_below(j);
      const Int rhs = count_below(p, i, j);
      if (mode == SchubertMode::cell || j == w.hi) {
        if (lhs != rhs) return false;
      } else if (lhs > rhs) {
        return false;
      }
    }
  }
  return true;
}

/// Λ_m ∩ E'_{i_m + k} = 0 for every member of the flag.
template <class F>
bool opposite_cell_test(const LatticeFlag<F>& flag, Int k) {
  for (std::size_t m = 0; m < flag.lattices.size(); ++m)
    if (!flag.lattices[m].meets_trivially_below(flag.position(m) + k)) return false;
  return true;
}

}  // namespace affsch
