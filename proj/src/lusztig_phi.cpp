#include "affsch/lusztig_phi.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace affsch {

JordanType make_jordan_type(std::vector<int> parts, int n) {
  if (n < 1) throw DomainError("bad_jordan_type", "n must be positive");
  parts.resize(std::max<std::size_t>(parts.size(), n), 0);
  for (std::size_t i = n; i < parts.size(); ++i)
    if (parts[i] != 0) throw DomainError("bad_jordan_type", "more than n parts");
  parts.resize(n);
  if (!std::is_sorted(parts.rbegin(), parts.rend()) || parts.back() < 0)
    throw DomainError("bad_jordan_type", "parts must be weakly decreasing and nonnegative");
  if (std::accumulate(parts.begin(), parts.end(), 0) != n) throw DomainError("bad_jordan_type", "parts must sum to n");
  return JordanType{parts};
}

std::vector<JordanType> all_jordan_types(int n) {
  std::vector<JordanType> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(make_jordan_type(cur, n));
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominates(const JordanType& b, const JordanType& bprime) {
  int s = 0, t = 0;
  for (std::size_t i = 0; i < b.b.size(); ++i) {
    s += b.b[i];
    t += bprime.b[i];
    if (t > s) return false;
  }
  return true;
}

CellProfile cell_profile(const JordanType& b) {
  const int n = static_cast<int>(b.b.size());
  CellProfile p;
  for (int bi : b.b) p.c.push_back(n - bi);
  for (Int j = 0; j <= n; ++j) {
    Int s = 0;
    for (Int ci : p.c) s += std::max<Int>(j - ci, 0);
    p.cprime.push_back(s);
  }
  return p;
}

std::vector<Int> cprime_shortcut(const JordanType& b) {
  const int n = static_cast<int>(b.b.size());
  std::vector<Int> out;
  for (Int j = 0; j <= n; ++j)
    out.push_back(std::count_if(b.b.begin(), b.b.end(), [&](int bi) { return n - bi <= j; }));
  return out;
}

}  // namespace affsch
