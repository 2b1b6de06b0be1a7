#pragma once

// The extended affine symmetric group: bijections p of Z with p(i+n) = p(i)+n,
// stored by the window [p(1), ..., p(n)].

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace affsch {

using Int = std::int64_t;

/// floor(a / b) for b > 0.
inline Int floor_div(Int a, Int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
/// Representative of a mod n in [1, n].
inline Int residue1(Int a, Int n) { return a - n * floor_div(a - 1, n); }

struct TranslationVector {
  int n = 0;
  std::vector<Int> c;

  bool sums_to_zero() const;
};

class AffinePermutation {
 public:
  /// Validates arity and that the residues mod n are pairwise distinct.
  AffinePermutation(int n, std::vector<Int> window);

  static AffinePermutation identity(int n);
  /// sigma: i -> i + 1.
  static AffinePermutation shift(int n, Int power = 1);
  /// Simple reflection s_i, i taken mod n (s_0 swaps 0 and 1).
  static AffinePermutation simple_reflection(int n, Int i);
  static AffinePermutation translation(const TranslationVector& c);
  /// Embeds a finite permutation of [1, n] given in one-line notation.
  static AffinePermutation finite(const std::vector<Int>& perm);

  int n() const { return n_; }
  const std::vector<Int>& window() const { return window_; }
  Int operator()(Int i) const;
  Int inverse_at(Int v) const;
  AffinePermutation inverse() const;

  std::string to_string() const;

  auto operator<=>(const AffinePermutation&) const = default;

 private:
  int n_;
  std::vector<Int> window_;
};

/// (p o q)(i) = p(q(i)).
AffinePermutation compose(const AffinePermutation& p, const AffinePermutation& q);
AffinePermutation parse_window(const std::string& text, int n);

struct Decomposition {
  std::vector<Int> finite;  // one-line notation of the finite part, values in [1, n]
  TranslationVector c;
};

/// p = finite o tau^c with tau^c(i) = i + n c_{i mod n}.
Decomposition decompose(const AffinePermutation& p);
AffinePermutation recompose(const Decomposition& d);

Int length(const AffinePermutation& p);
Int component_index(const AffinePermutation& p);

/// #(p Z_{>=i} \ Z_{>=j}) = #{k >= i : p(k) < j}.
Int count_below(const AffinePermutation& p, Int i, Int j);

struct ReducedWord {
  int n = 0;
  Int sigma_power = 0;
  std::vector<int> letters;

  bool operator==(const ReducedWord&) const = default;
};

AffinePermutation evaluate_word(const ReducedWord& w);
/// Peels right descents (smallest index first) until a pure shift remains.
ReducedWord greedy_reduced_word(const AffinePermutation& p);
bool is_reduced(const ReducedWord& w);

/// Elements in different components are incomparable.
bool bruhat_leq(const AffinePermutation& p, const AffinePermutation& q);

inline constexpr Int kMaxIntervalLength = 12;
/// All w <= p, by evaluating every subword of one reduced word of p.
std::set<AffinePermutation> bruhat_interval(const AffinePermutation& p);

/// Right descent at i in [0, n-1]: p(i) > p(i+1).
bool has_right_descent(const AffinePermutation& p, int i);
/// Left descent at i: p^{-1}(i) > p^{-1}(i+1).
bool has_left_descent(const AffinePermutation& p, int i);

/// Smallest a and largest b with Z_{>=a} ⊇ p Z_{>=i} ⊇ Z_{>=b} for 1 <= i <= n.
std::pair<Int, Int> sandwich_bounds(const AffinePermutation& p);

/// Minimal-length representative of the right coset p W_d for a composition d.
AffinePermutation min_coset_representative(const AffinePermutation& p, const std::vector<int>& d);

}  // namespace affsch
