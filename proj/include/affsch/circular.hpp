#pragma once

// Two-step circular complexes k^a -X-> k^b -Y-> k^a with XY = 0, YX = 0, their
// image under Lusztig's map in Fl(a, b), the block permutations pi_c and the
// cable reduced words.

#include <vector>

#include "affsch/affine_weyl.hpp"
#include "affsch/error.hpp"
#include "affsch/field.hpp"
#include "affsch/lattice.hpp"

namespace affsch {

template <class F>
struct CircularComplex {
  F field;
  int a = 1, b = 1;
  Mat<F> X;  // b x a
  Mat<F> Y;  // a x b

  CircularComplex(const F& f, int a_, int b_, Mat<F> x, Mat<F> y)
      : field(f), a(a_), b(b_), X(std::move(x)), Y(std::move(y)) {
    if (a < 1 || a > b) throw DomainError("bad_parameters", "need 1 <= a <= b");
    if (X.rows != static_cast<std::size_t>(b) || X.cols != static_cast<std::size_t>(a))
      throw DomainError("shape_mismatch", "X must be b x a");
    if (Y.rows != static_cast<std::size_t>(a) || Y.cols != static_cast<std::size_t>(b))
      throw DomainError("shape_mismatch", "Y must be a x b");
    if (!is_zero_matrix(f, multiply(f, X, Y))) throw DomainError("not_a_complex", "XY != 0");
    if (!is_zero_matrix(f, multiply(f, Y, X))) throw DomainError("not_a_complex", "YX != 0");
  }

  static CircularComplex zero(const F& f, int a, int b) {
    return CircularComplex(f, a, b, zero_matrix(f, b, a), zero_matrix(f, a, b));
  }

  int n() const { return a + b; }
};

/// The complex with X e_i = f_i for i < rank_x and Y f_i = e_i for rank_x <= i < rank_x + rank_y.
template <class F>
CircularComplex<F> circular_representative(const F& f, int a, int b, int rank_x, int rank_y) {
  if (rank_x < 0 || rank_y < 0 || rank_x + rank_y > a)
    throw DomainError("bad_parameters", "need rank_x, rank_y >= 0 and rank_x + rank_y <= a");
  Mat<F> x = zero_matrix(f, b, a), y = zero_matrix(f, a, b);
  for (int i = 0; i < rank_x; ++i) x(i, i) = f.one();
  for (int i = rank_x; i < rank_x + rank_y; ++i) y(i, i) = f.one();
  return CircularComplex<F>(f, a, b, std::move(x), std::move(y));
}

/// (g_a, g_b)·(X, Y) = (g_b X g_a^{-1}, g_a Y g_b^{-1}).
template <class F>
CircularComplex<F> act(const Mat<F>& ga, const Mat<F>& gb, const CircularComplex<F>& l) {
  const F& f = l.field;
  return CircularComplex<F>(f, l.a, l.b, multiply(f, multiply(f, gb, l.X), inverse(f, ga)),
                            multiply(f, multiply(f, ga, l.Y), inverse(f, gb)));
}

struct OrbitSignature {
  Int rank_x = 0;
  Int rank_y = 0;
  Int a = 0;

  bool open() const { return rank_x + rank_y == a; }
  /// Component index c of an open orbit.
  Int component() const {
    if (!open()) throw DomainError("not_open", "orbit is not open: rank X + rank Y < a");
    return rank_x;
  }
  /// Coordinate-wise order, conjecturally the closure order.
  bool below(const OrbitSignature& o) const { return rank_x <= o.rank_x && rank_y <= o.rank_y; }
  bool operator==(const OrbitSignature&) const = default;
};

template <class F>
OrbitSignature orbit_ranks(const CircularComplex<F>& l) {
  return OrbitSignature{static_cast<Int>(rank(l.field, l.X)), static_cast<Int>(rank(l.field, l.Y)), l.a};
}

/// Index of E_{(k)} for blocks of sizes a, b, a, b, ... starting at 1.
inline Int circular_index(int a, int b, Int k) {
  const Int m = k - 1;
  return 1 + floor_div(m, 2) * (a + b) + (m - 2 * floor_div(m, 2)) * a;
}

inline Window circular_window(int a, int b) { return Window(a + b, 1, 3 * Int{a + b} + 1); }

template <class F>
LatticeFlag<F> psi_circular(const CircularComplex<F>& l) {
  const int a = l.a, b = l.b, n = l.n();
  const F& f = l.field;
  const Window w = circular_window(a, b);
  auto at = [&](Int index) { return static_cast<std::size_t>(w.col(index)); };
  // t e_i + X e_i, and t(f_j + Y f_j)
  Mat<F> first(a, w.dim(), f.zero()), second(b, w.dim(), f.zero());
  for (int i = 0; i < a; ++i) {
    first(i, at(n + 1 + i)) = f.one();
    for (int r = 0; r < b; ++r) first(i, at(a + 1 + r)) = l.X(r, i);
  }
  for (int j = 0; j < b; ++j) {
    second(j, at(n + a + 1 + j)) = f.one();
    for (int r = 0; r < a; ++r) second(j, at(n + 1 + r)) = l.Y(r, j);
  }
  Mat<F> g1(n, w.dim(), f.zero()), g2(n, w.dim(), f.zero());
  for (int i = 0; i < a; ++i)
    for (std::size_t c = 0; c < w.dim(); ++c) {
      g1(i, c) = first(i, c);
      if (c >= static_cast<std::size_t>(n)) g2(i, c) = first(i, c - n);
    }
  for (int j = 0; j < b; ++j)
    for (std::size_t c = 0; c < w.dim(); ++c) g1(a + j, c) = g2(a + j, c) = second(j, c);
  LatticeFlag<F> flag{{a, b}, {}};
  flag.lattices.push_back(LatticeWindow<F>::span(f, w, std::move(g1)));
  flag.lattices.push_back(LatticeWindow<F>::span(f, w, std::move(g2)));
  return flag;
}

/// Same flag in a caller-chosen window, which must contain [1, 2(a+b)+a].
template <class F>
LatticeFlag<F> psi_circular(const CircularComplex<F>& l, const Window& w) {
  if (w.n != l.n() || w.lo > 1 || w.hi < 2 * Int{l.n()} + l.a + 1)
    throw DomainError("window_too_small", "psi_circular needs a window containing [1, 2(a+b)+a]");
  return psi_circular(l).rewindow(w);
}

/// The two relative dimensions dim(Λ_1/Λ_1 ∩ E_(3)) and dim(Λ_2/Λ_2 ∩ E_(4)).
template <class F>
std::pair<Int, Int> circular_statistics(const LatticeFlag<F>& flag, int a, int b) {
  const auto& f = flag.lattices[0].field();
  return {rel_dim(flag.lattices[0], standard_lattice(circular_index(a, b, 3), flag.window(), f)),
          rel_dim(flag.lattices[1], standard_lattice(circular_index(a, b, 4), flag.window(), f))};
}

/// Membership in Ψ(L_c): steps, sandwiches over E_(4) and E_(5), the opposite
/// vanishing, and the two rank bounds.
template <class F>
bool verify_circular_image(const LatticeFlag<F>& flag, int a, int b, Int c) {
  try {
    flag.validate();
  } catch (const DomainError&) {
    return false;
  }
  if (flag.composition != std::vector<int>{a, b}) return false;
  const auto& f = flag.lattices[0].field();
  const Window& w = flag.window();
  auto e = [&](Int k) { return standard_lattice(circular_index(a, b, k), w, f); };
  const auto& l1 = flag.lattices[0];
  const auto& l2 = flag.lattices[1];
  if (!e(2).contains(l1) || !l1.contains(e(4)) || !e(3).contains(l2) || !l2.contains(e(5))) return false;
  if (!l1.meets_trivially_below(circular_index(a, b, 3)) || !l2.meets_trivially_below(circular_index(a, b, 4)))
    return false;
  const auto [s1, s2] = circular_statistics(flag, a, b);
  return s1 <= c && s2 <= a - c;
}

/// The block permutation pi_c, a minimal coset representative of length ab.
AffinePermutation pi_c(int a, int b, int c);
/// Letters (not reduced mod n) of the cable crossing of a k-cable at
/// start..start+k-1 over a j-cable just below it, in anti-diagonal order.
std::vector<Int> cable_factor(Int start, int j, int k);
/// tau times the six cable crossings, with tau recorded as sigma_power = n.
ReducedWord cable_word(int a, int b, int c);
/// The six factors of cable_word as separate letter lists (mod n).
std::vector<std::vector<int>> cable_factors(int a, int b, int c);
/// No word in the commutation class of the (reduced) word contains s_i s_{i±1} s_i.
bool is_fully_commutative(const std::vector<int>& letters, int n);

struct FiniteFlagReport {
  bool dims = false;          // dim U_1 = a + b, dim U_2 = b
  bool contains_e4 = false;   // U_1 ⊇ Ē_(4)
  bool inside_e3 = false;     // U_2 ⊆ Ē_(3)
  bool opposite = false;      // U_1 ∩ Ē'_(3) = U_2 ∩ Ē'_(4) = 0
  bool t_stable = false;      // U_2 ⊇ t̄ U_1
  Int u1_cap_e3 = 0;          // ≥ a + b - c
  Int u2_cap_e4 = 0;          // ≥ b - a + c
  Int a = 0, b = 0, c = 0;

  bool bounds() const { return u1_cap_e3 >= a + b - c && u2_cap_e4 >= b - a + c; }
  bool all() const { return dims && contains_e4 && inside_e3 && opposite && t_stable && bounds(); }
};

/// The image in Fl(b, a, b; E_(2)/E_(5)), with c = rank X.
template <class F>
FiniteFlagReport finite_flag_report(const CircularComplex<F>& l) {
  const int a = l.a, b = l.b, n = l.n();
  const F& f = l.field;
  const auto flag = psi_circular(l);
  const Int lo = a + 1, hi = 2 * Int{n} + 1;  // quotient coordinates ē_lo .. ē_{hi-1}
  const std::size_t dim = static_cast<std::size_t>(hi - lo);
  // zero rows (from E_(5)) do not affect any rank below
  auto quotient = [&](const LatticeWindow<F>& lat) {
    Mat<F> m(lat.dim(), dim, f.zero());
    for (std::size_t r = 0; r < lat.dim(); ++r)
      for (Int i = lo; i < hi; ++i) m(r, i - lo) = lat.basis()(r, lat.window().col(i));
    return m;
  };
  auto coords = [&](Int from, Int to) {
    Mat<F> m(static_cast<std::size_t>(std::max<Int>(to - from, 0)), dim, f.zero());
    for (Int i = from; i < to; ++i) m(i - from, i - lo) = f.one();
    return m;
  };
  auto stack = [&](const Mat<F>& x, const Mat<F>& y) {
    Mat<F> m(x.rows + y.rows, dim, f.zero());
    for (std::size_t r = 0; r < x.rows; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(x.rows + r, c) = y(r, c);
    return m;
  };
  auto rk = [&](const Mat<F>& m) { return static_cast<Int>(rank(f, m)); };
  auto cap_dim = [&](const Mat<F>& x, const Mat<F>& y) { return rk(x) + rk(y) - rk(stack(x, y)); };

  const Mat<F> u1 = quotient(flag.lattices[0]), u2 = quotient(flag.lattices[1]);
  const Int e3 = circular_index(a, b, 3), e4 = circular_index(a, b, 4);
  const Mat<F> bar_e3 = coords(e3, hi), bar_e4 = coords(e4, hi);
  Mat<F> t_u1(u1.rows, dim, f.zero());
  for (std::size_t r = 0; r < u1.rows; ++r)
    for (std::size_t c = 0; c + n < dim; ++c) t_u1(r, c + n) = u1(r, c);

  FiniteFlagReport rep;
  rep.a = a;
  rep.b = b;
  rep.c = static_cast<Int>(rank(f, l.X));
  rep.dims = rk(u1) == a + b && rk(u2) == b;
  rep.contains_e4 = rk(stack(u1, bar_e4)) == rk(u1);
  rep.inside_e3 = rk(stack(bar_e3, u2)) == rk(bar_e3);
  rep.opposite = cap_dim(u1, coords(lo, e3)) == 0 && cap_dim(u2, coords(lo, e4)) == 0;
  rep.t_stable = rk(stack(u2, t_u1)) == rk(u2);
  rep.u1_cap_e3 = cap_dim(u1, bar_e3);
  rep.u2_cap_e4 = cap_dim(u2, bar_e4);
  return rep;
}

template <class F>
bool finite_flag_conditions(const CircularComplex<F>& l) {
  return finite_flag_report(l).all();
}

}  // namespace affsch
