#include "affsch/lattice.hpp"

namespace affsch {

namespace {

Window round_up(int n, Int lo, Int hi) {
  if (hi <= lo) hi = lo + n;
  const Int blocks = (hi - lo + n - 1) / n;
  return Window(n, hi - blocks * n, hi);
}

}  // namespace

Window tight_window(const AffinePermutation& p) {
  const auto [a, b] = sandwich_bounds(p);
  return round_up(p.n(), a, b);
}

Window default_window(const AffinePermutation& p) {
  const auto [a, b] = sandwich_bounds(p);
  const int n = p.n();
  Int lo = std::min<Int>(a, 1);
  lo -= residue1(lo, n) - 1;
  const Int hi = std::max<Int>(b, 1);
  const Int blocks = std::max<Int>(1, (hi - lo + n - 1) / n);
  return Window(n, lo, lo + blocks * n);
}

}  // namespace affsch
