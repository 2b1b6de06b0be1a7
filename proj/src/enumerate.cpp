#include "affsch/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "affsch/error.hpp"

namespace affsch {

namespace {

using Lat = LatticeWindow<PrimeField>;
using Row = std::vector<PrimeField::Elem>;

class Search {
 public:
  Search(const AffinePermutation& p, std::uint32_t q, SchubertMode mode, bool opposite)
      : p_(p), f_(q), mode_(mode), opposite_(opposite), k_(component_index(p)), n_(p.n()),
        w_(enumeration_window(p, opposite)) {}

  /// Candidates for Λ_1: t-stable subspaces with admissible pivots.
  std::vector<Lat> first_lattices() const {
    std::vector<Lat> out;
    std::vector<bool> chosen(w_.dim(), false);
    pivot_sets(0, 0, chosen, [&](const std::vector<Int>& pivots) { fill_rows(pivots, out); });
    return out;
  }

  /// Counts (and optionally records) the completions of Λ_1 to admissible flags.
  std::uint64_t complete(const Lat& first, std::vector<LatticeFlag<PrimeField>>* sink) const {
    std::vector<Lat> chain{first};
    Mat<PrimeField> tw = first.times_t().basis();
    return extend(chain, tw, sink);
  }

  const Window& window() const { return w_; }

 private:
  Int rhs(Int position, Int j) const { return count_below(p_, position, j); }

  bool admissible(const Lat& l, Int position) const {
    for (Int j = w_.lo; j <= w_.hi; ++j) {
      const Int lhs = l.count_below(j);
      const Int r = rhs(position, j);
      if (mode_ == SchubertMode::cell || j == w_.hi) {
        if (lhs != r) return false;
      } else if (lhs > r) {
        return false;
      }
    }
    return !opposite_ || l.meets_trivially_below(position + k_);
  }

  // Pivot sets closed under +n whose prefix counts satisfy the conditions for position 1.
  void pivot_sets(std::size_t col, Int taken, std::vector<bool>& chosen,
                  const std::function<void(const std::vector<Int>&)>& emit) const {
    if (col == w_.dim()) {
      if (taken != rhs(1, w_.hi)) return;
      std::vector<Int> piv;
      for (std::size_t c = 0; c < chosen.size(); ++c)
        if (chosen[c]) piv.push_back(w_.lo + static_cast<Int>(c));
      emit(piv);
      return;
    }
    const Int j = w_.lo + static_cast<Int>(col) + 1;
    const bool forced = col >= static_cast<std::size_t>(n_) && chosen[col - n_];
    for (int take = forced ? 1 : 0; take <= 1; ++take) {
      const Int t = taken + take;
      const Int r = rhs(1, j);
      if (mode_ == SchubertMode::cell ? t != r : t > r) continue;
      chosen[col] = take;
      pivot_sets(col + 1, t, chosen, emit);
      chosen[col] = false;
    }
  }

  // Fills an echelon basis with the given pivots, deepest row first, keeping
  // every partial basis t-stable.
  void fill_rows(const std::vector<Int>& pivots, std::vector<Lat>& out) const {
    const std::size_t r = pivots.size();
    std::vector<bool> is_pivot(w_.dim(), false);
    for (Int x : pivots) is_pivot[w_.col(x)] = true;
    std::vector<Row> rows(r, Row(w_.dim(), 0));
    std::function<void(std::size_t)> rec = [&](std::size_t done) {
      if (done == r) {
        Mat<PrimeField> m(0, w_.dim(), 0);
        for (const auto& row : rows) Lat::append_row(m, row);
        Lat l = Lat::from_stable_rows(f_, w_, std::move(m));
        if (admissible(l, 1)) out.push_back(std::move(l));
        return;
      }
      const std::size_t idx = r - 1 - done;
      const std::size_t pc = w_.col(pivots[idx]);
      std::vector<std::size_t> free;
      for (std::size_t c = pc + 1; c < w_.dim(); ++c)
        if (!is_pivot[c]) free.push_back(c);
      Row& row = rows[idx];
      std::fill(row.begin(), row.end(), 0);
      row[pc] = 1;
      std::vector<std::uint32_t> digits(free.size(), 0);
      for (;;) {
        for (std::size_t k = 0; k < free.size(); ++k) row[free[k]] = digits[k];
        if (shift_in_span(row, rows, idx + 1, pivots)) rec(done + 1);
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == f_.modulus()) digits[k++] = 0;
        if (k == digits.size()) break;
      }
    };
    rec(0);
  }

  // t·row lies in the span of rows[from..] (an echelon family).
  bool shift_in_span(const Row& row, const std::vector<Row>& rows, std::size_t from,
                     const std::vector<Int>& pivots) const {
    Row s(w_.dim(), 0);
    for (std::size_t c = 0; c + n_ < w_.dim(); ++c) s[c + n_] = row[c];
    for (std::size_t k = from; k < rows.size(); ++k) {
      const std::size_t pc = w_.col(pivots[k]);
      const auto coef = s[pc];
      if (coef == 0) continue;
      for (std::size_t c = pc; c < w_.dim(); ++c) s[c] = f_.sub(s[c], f_.mul(coef, rows[k][c]));
    }
    return std::all_of(s.begin(), s.end(), [](auto x) { return x == 0; });
  }

  std::uint64_t extend(std::vector<Lat>& chain, const Mat<PrimeField>& tw,
                       std::vector<LatticeFlag<PrimeField>>* sink) const {
    const std::size_t level = chain.size();
    if (level == static_cast<std::size_t>(n_)) {
      if (sink) sink->push_back(LatticeFlag<PrimeField>{std::vector<int>(n_, 1), chain});
      return 1;
    }
    // complement of t̄Λ_1 inside Λ_level
    Mat<PrimeField> acc = tw;
    std::vector<Row> comp;
    const Lat& top = chain.back();
    for (std::size_t k = 0; k < top.dim(); ++k) {
      Mat<PrimeField> trial = acc;
      Lat::append_row(trial, top.row(k));
      if (rank(f_, trial) > acc.rows) {
        comp.push_back(top.row(k));
        acc = std::move(trial);
      }
    }
    const std::size_t m = comp.size();
    std::uint64_t total = 0;
    // hyperplanes = normalized nonzero functionals on the complement
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<std::uint32_t> tail(m - s - 1, 0);
      for (;;) {
        Mat<PrimeField> rows = tw;
        for (std::size_t k = 0; k < m; ++k) {
          if (k == s) continue;
          const std::uint32_t fk = k < s ? 0 : tail[k - s - 1];
          Row v = comp[k];
          for (std::size_t c = 0; c < v.size(); ++c) v[c] = f_.sub(v[c], f_.mul(fk, comp[s][c]));
          Lat::append_row(rows, v);
        }
        Lat next = Lat::from_stable_rows(f_, w_, std::move(rows));
        if (admissible(next, static_cast<Int>(level) + 1)) {
          chain.push_back(std::move(next));
          total += extend(chain, tw, sink);
          chain.pop_back();
        }
        std::size_t k = 0;
        while (k < tail.size() && ++tail[k] == f_.modulus()) tail[k++] = 0;
        if (k == tail.size()) break;
      }
    }
    return total;
  }

  AffinePermutation p_;
  PrimeField f_;
  SchubertMode mode_;
  bool opposite_;
  Int k_;
  int n_;
  Window w_;
};

}  // namespace

void check_enumeration_guard(const AffinePermutation& p, std::uint32_t q) {
  if (length(p) > kMaxEnumerationLength)
    throw DomainError("length_guard", "enumeration needs length <= " + std::to_string(kMaxEnumerationLength));
  if (q != 2 && q != 3) throw DomainError("field_guard", "enumeration supports q = 2 or 3");
}

Window enumeration_window(const AffinePermutation& p, bool opposite) {
  Window w = tight_window(p);
  if (opposite) {
    const Int need = p.n() + component_index(p);
    while (w.hi < need) w = Window(w.n, w.lo, w.hi + w.n);
  }
  return w;
}

std::uint64_t enumerate_flag_points_serial(const AffinePermutation& p, std::uint32_t q, SchubertMode mode,
                                           bool opposite) {
  check_enumeration_guard(p, q);
  const Search search(p, q, mode, opposite);
  std::uint64_t total = 0;
  for (const auto& first : search.first_lattices()) total += search.complete(first, nullptr);
  return total;
}

std::uint64_t enumerate_flag_points(const AffinePermutation& p, std::uint32_t q, SchubertMode mode, bool opposite) {
  check_enumeration_guard(p, q);
  const Search search(p, q, mode, opposite);
  const auto firsts = search.first_lattices();
  const auto count = static_cast<std::int64_t>(firsts.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t i = 0; i < count; ++i) total += search.complete(firsts[i], nullptr);
  return total;
}

std::vector<LatticeFlag<PrimeField>> flag_point_set(const AffinePermutation& p, std::uint32_t q, SchubertMode mode,
                                                    bool opposite) {
  check_enumeration_guard(p, q);
  const Search search(p, q, mode, opposite);
  std::vector<LatticeFlag<PrimeField>> out;
  for (const auto& first : search.first_lattices()) search.complete(first, &out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace affsch
