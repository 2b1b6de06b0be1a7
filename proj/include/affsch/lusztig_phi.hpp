#pragma once

// Lusztig's map from nilpotent n x n matrices to the affine Grassmannian:
// N -> A-span of phi_N(e_i) = sum_m t^m N^{n-1-m} e_i, in the window [1, n^2+n].

#include <vector>

#include "affsch/error.hpp"
#include "affsch/field.hpp"
#include "affsch/lattice.hpp"

namespace affsch {

template <class F>
class NilpotentMatrix {
 public:
  NilpotentMatrix(const F& f, Mat<F> entries) : field_(f), n_(static_cast<int>(entries.rows)), m_(std::move(entries)) {
    if (m_.rows != m_.cols || m_.rows == 0) throw DomainError("shape_mismatch", "nilpotent matrix must be square");
    if (!is_zero_matrix(f, power(f, m_, m_.rows))) throw DomainError("not_nilpotent", "N^n != 0");
  }

  int n() const { return n_; }
  const F& field() const { return field_; }
  const Mat<F>& matrix() const { return m_; }

 private:
  F field_;
  int n_;
  Mat<F> m_;
};

struct JordanType {
  std::vector<int> b;  // weakly decreasing, length n, sums to n
  bool operator==(const JordanType&) const = default;
  auto operator<=>(const JordanType&) const = default;
};

struct CellProfile {
  std::vector<Int> c;
  std::vector<Int> cprime;  // cprime[j] for j = 0..n
};

/// Validates and pads a partition of n to length n.
JordanType make_jordan_type(std::vector<int> parts, int n);
/// All Jordan types of size n, in reverse lexicographic order.
std::vector<JordanType> all_jordan_types(int n);
/// b dominates b' (so the orbit of b' lies in the closure of the orbit of b).
bool dominates(const JordanType& b, const JordanType& bprime);

/// c_i = n - b_i and c'_j = sum_i max(j - c_i, 0).
CellProfile cell_profile(const JordanType& b);
/// The shortcut count #{i : c_i <= j}, kept for comparison.
std::vector<Int> cprime_shortcut(const JordanType& b);

inline Window phi_window(int n) { return Window(n, 1, Int{n} * n + n + 1); }

template <class F>
JordanType jordan_type(const NilpotentMatrix<F>& nm) {
  const int n = nm.n();
  std::vector<Int> ranks{n};
  Mat<F> pw = identity_matrix(nm.field(), n);
  for (int k = 1; k <= n; ++k) {
    pw = multiply(nm.field(), pw, nm.matrix());
    ranks.push_back(static_cast<Int>(rank(nm.field(), pw)));
  }
  std::vector<int> b(n, 0);
  for (int k = 1; k <= n; ++k) {
    const Int blocks_at_least_k = ranks[k - 1] - ranks[k];
    for (Int i = 0; i < blocks_at_least_k; ++i) ++b[i];
  }
  return JordanType{b};
}

/// Block-diagonal nilpotent with blocks b_1, b_2, ...; each block sends e_i to e_{i+1}.
template <class F>
NilpotentMatrix<F> jordan_matrix(const F& f, const JordanType& b) {
  const int n = static_cast<int>(b.b.size());
  Mat<F> m(n, n, f.zero());
  int start = 0;
  for (int size : b.b) {
    for (int k = 0; k + 1 < size; ++k) m(start + k + 1, start + k) = f.one();
    start += size;
  }
  return NilpotentMatrix<F>(f, std::move(m));
}

template <class F>
Mat<F> phi_columns(const NilpotentMatrix<F>& nm) {
  const int n = nm.n();
  const F& f = nm.field();
  const Window w = phi_window(n);
  Mat<F> cols(w.dim(), n, f.zero());
  Mat<F> pw = identity_matrix(f, n);
  // block n-1 holds I, block n-2 holds N, ..., block 0 holds N^{n-1}
  for (int m = n - 1; m >= 0; --m) {
    for (int r = 0; r < n; ++r)
      for (int i = 0; i < n; ++i) cols(static_cast<std::size_t>(m * n + r), i) = pw(r, i);
    pw = multiply(f, nm.matrix(), pw);
  }
  return cols;
}

template <class F>
LatticeWindow<F> phi(const NilpotentMatrix<F>& nm) {
  return from_columns(phi_columns(nm), phi_window(nm.n()), nm.field());
}

/// Same lattice carried to a caller-chosen window, which must contain [1, n^2+n].
template <class F>
LatticeWindow<F> phi(const NilpotentMatrix<F>& nm, const Window& w) {
  const Window base = phi_window(nm.n());
  if (w.n != nm.n() || w.lo > base.lo || w.hi < base.hi)
    throw DomainError("window_too_small", "phi needs a window containing [1, n^2+n]");
  return phi(nm).rewindow(w);
}

/// dim(Φ(N) / Φ(N) ∩ t^j E_1) for j = 0..n.
template <class F>
std::vector<Int> phi_profile(const NilpotentMatrix<F>& nm) {
  const auto l = phi(nm);
  std::vector<Int> out;
  for (int j = 0; j <= nm.n(); ++j)
    out.push_back(rel_dim(l, standard_lattice(1 + Int{j} * nm.n(), l.window(), nm.field())));
  return out;
}

/// Checks the cell conditions for Φ(N) against the profile of its Jordan type:
/// the dimension profile, the sandwich E_1 ⊇ Λ ⊇ t^n E_1, and Λ ∩ t^{n-1}E'_1 = 0.
template <class F>
bool verify_phi_cell(const NilpotentMatrix<F>& nm) {
  const int n = nm.n();
  const auto l = phi(nm);
  const auto& f = nm.field();
  const CellProfile prof = cell_profile(jordan_type(nm));
  if (phi_profile(nm) != prof.cprime) return false;
  if (!standard_lattice(1, l.window(), f).contains(l)) return false;
  if (!l.contains(standard_lattice(1 + Int{n} * n, l.window(), f))) return false;
  return l.meets_trivially_below(1 + Int{n} * (n - 1));
}

}  // namespace affsch
