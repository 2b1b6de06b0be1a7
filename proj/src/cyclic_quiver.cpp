#include "affsch/cyclic_quiver.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace affsch {

Int RankTable::at(Int j, Int k) const {
  if (k < 0) throw DomainError("bad_path", "rank index k must be nonnegative");
  if (k > max_k()) return 0;
  return r[wrap_index(j, dims.h()) - 1][k];
}

Int RankTable::multiplicity(Int j, Int k) const {
  return at(j, k) - at(j, k + 1) - at(j + 1, k + 1) + at(j + 1, k + 2);
}

void RankTable::validate() const {
  if (static_cast<int>(r.size()) != dims.h()) throw DomainError("inconsistent_rank_table", "one row per node expected");
  for (int j = 1; j <= dims.h(); ++j) {
    if (at(j, 0) != dims.at(j)) throw DomainError("inconsistent_rank_table", "r_j^0 must equal d_j");
    for (Int k = 0; k <= max_k(); ++k)
      if (multiplicity(j, k) < 0)
        throw DomainError("inconsistent_rank_table",
                          "negative multiplicity m_" + std::to_string(j) + "^" + std::to_string(k));
  }
}

Multiplicities multiplicities(const RankTable& t) {
  t.validate();
  Multiplicities out;
  for (int j = 1; j <= t.dims.h(); ++j)
    for (Int k = 0; k <= t.max_k(); ++k)
      if (const Int m = t.multiplicity(j, k); m > 0) out[Indecomposable{j, static_cast<int>(k)}] = static_cast<int>(m);
  return out;
}

RankTable ranks_from_multiplicities(const DimensionVector& dv, const Multiplicities& m) {
  const int h = dv.h();
  const Int kmax = Int{dv.n()} * h + 1;
  auto mult = [&](Int j, Int k) -> Int {
    auto it = m.find(Indecomposable{static_cast<int>(wrap_index(j, h)), static_cast<int>(k)});
    return it == m.end() ? 0 : it->second;
  };
  // D_j^k = r_j^k - r_{j+1}^{k+1} = sum_{k' >= k} m_j^{k'}
  auto diag = [&](Int j, Int k) {
    Int s = 0;
    for (Int kk = k; kk <= kmax + 1; ++kk) s += mult(j, kk);
    return s;
  };
  RankTable t{dv, {}};
  for (int j = 1; j <= h; ++j) {
    std::vector<Int> row;
    for (Int k = 0; k <= kmax; ++k) {
      Int s = 0;
      for (Int step = 0; k + step <= kmax + 1; ++step) s += diag(j + step, k + step);
      row.push_back(s);
    }
    t.r.push_back(row);
  }
  return t;
}

std::vector<int> total_dimension(int h, const Multiplicities& m) {
  std::vector<int> d(h, 0);
  for (const auto& [ind, count] : m)
    for (int i = ind.j - ind.k; i <= ind.j; ++i) d[wrap_index(i, h) - 1] += count;
  return d;
}

std::vector<Multiplicities> all_orbits(const DimensionVector& dv) {
  const int h = dv.h(), n = dv.n();
  std::vector<Indecomposable> kinds;
  for (int j = 1; j <= h; ++j)
    for (int k = 0; k < n; ++k) kinds.push_back({j, k});
  std::vector<Multiplicities> out;
  Multiplicities cur;
  std::vector<int> left = dv.d;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) {
      out.push_back(cur);
      return;
    }
    if (idx == kinds.size()) return;
    const auto ind = kinds[idx];
    std::vector<int> need(h, 0);
    for (int i = ind.j - ind.k; i <= ind.j; ++i) ++need[wrap_index(i, h) - 1];
    int copies = 0;
    for (;;) {
      rec(idx + 1);
      bool fits = true;
      for (int v = 0; v < h; ++v) fits &= left[v] >= need[v];
      if (!fits) break;
      for (int v = 0; v < h; ++v) left[v] -= need[v];
      cur[ind] = ++copies;
    }
    for (int v = 0; v < h; ++v) left[v] += need[v] * copies;
    cur.erase(ind);
  };
  rec(0);
  return out;
}

AffinePermutation orbit_permutation(const RankTable& t) {
  // Ψ of an orbit is a union of cells; the open one is reached by a generic
  // block-diagonal conjugate, and every other one lies Bruhat-below it.
  const PrimeField f(65521);
  const auto rep = from_indecomposables(f, t.dims, multiplicities(t));
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint32_t> entry(0, f.modulus() - 1);
  auto best = flag_permutation(psi(rep));
  for (int sample = 0; sample < 4; ++sample) {
    std::vector<Mat<PrimeField>> g;
    for (int dj : t.dims.d) {
      Mat<PrimeField> m(dj, dj, 0);
      do {
        for (auto& x : m.data) x = entry(rng);
      } while (rank(f, m) != static_cast<std::size_t>(dj));
      g.push_back(std::move(m));
    }
    const auto p = flag_permutation(psi(act(g, rep)));
    if (bruhat_leq(best, p)) best = p;
  }
  return best;
}

std::vector<AffinePermutation> component_permutations(const DimensionVector& dv) {
  if (dv.n() > 8) throw DomainError("size_guard", "component_permutations needs n <= 8");
  std::set<AffinePermutation> candidates;
  for (const auto& m : all_orbits(dv)) candidates.insert(orbit_permutation(ranks_from_multiplicities(dv, m)));
  std::vector<AffinePermutation> out;
  for (const auto& p : candidates) {
    bool maximal = true;
    for (const auto& q : candidates)
      if (q != p && bruhat_leq(p, q)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(p);
  }
  return out;
}

}  // namespace affsch
