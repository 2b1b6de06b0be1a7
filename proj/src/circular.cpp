#include "affsch/circular.hpp"

#include <algorithm>

namespace affsch {

namespace {

void check_parameters(int a, int b, int c) {
  if (a < 1 || a > b) throw DomainError("bad_parameters", "need 1 <= a <= b");
  if (c < 0 || c > a) throw DomainError("bad_parameters", "need 0 <= c <= a");
}

}  // namespace

AffinePermutation pi_c(int a, int b, int c) {
  check_parameters(a, b, c);
  std::vector<Int> w;
  auto block = [&](Int first, Int last) {
    for (Int x = first; x <= last; ++x) w.push_back(x);
  };
  block(a + 1, a + c);
  block(a + 2 * b + c + 1, 2 * a + 2 * b);
  block(a + b + 1, 2 * a + b - c);
  block(2 * a + b + c + 1, a + 2 * b + c);
  block(3 * a + 2 * b - c + 1, 3 * a + 2 * b);
  return AffinePermutation(a + b, w);
}

std::vector<Int> cable_factor(Int start, int j, int k) {
  // crossing of wire p of the upper cable with wire q of the lower one is the
  // letter start + p + q - 2; level (k - p) + (q - 1) collects commuting letters
  std::vector<Int> out;
  if (j <= 0 || k <= 0) return out;
  for (int level = 0; level <= j + k - 2; ++level)
    for (int p = std::min(k, j + k - 1 - level); p >= std::max(1, k - level); --p)
      out.push_back(start - 1 + 2 * p + level - k);
  return out;
}

std::vector<std::vector<int>> cable_factors(int a, int b, int c) {
  check_parameters(a, b, c);
  const int n = a + b;
  struct Crossing {
    Int start;
    int j, k;
  };
  // the first crossing has its two cable sizes in the opposite order from the
  // other five; with the sizes in the same order the product misses pi_c once a >= 3
  const Crossing crossings[] = {{1, c, a - c},         {a + 1, b - a, c},         {b + 1, a - c, c},
                        {a + 1, a - c, b - a}, {b + a - c + 1, c, c},     {c + 1, a - c, a - c}};
  std::vector<std::vector<int>> out;
  for (const auto& s : crossings) {
    std::vector<int> letters;
    for (Int x : cable_factor(s.start, s.j, s.k)) letters.push_back(static_cast<int>(residue1(x, n) % n));
    out.push_back(std::move(letters));
  }
  return out;
}

ReducedWord cable_word(int a, int b, int c) {
  ReducedWord w{a + b, a + b, {}};
  for (const auto& f : cable_factors(a, b, c)) w.letters.insert(w.letters.end(), f.begin(), f.end());
  return w;
}

bool is_fully_commutative(const std::vector<int>& letters, int n) {
  // Stembridge: a reduced word is fully commutative iff between any two
  // consecutive occurrences of s_i there are at least two letters not commuting with s_i
  if (n <= 2) return true;
  for (int i = 0; i < n; ++i) {
    int between = -1;
    for (int x : letters) {
      if (x == i) {
        if (between >= 0 && between < 2) return false;
        between = 0;
      } else if (between >= 0 && (x == (i + 1) % n || x == (i + n - 1) % n)) {
        ++between;
      }
    }
  }
  return true;
}

}  // namespace affsch
