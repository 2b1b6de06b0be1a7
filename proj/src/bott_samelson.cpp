#include "affsch/bott_samelson.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "affsch/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace affsch {

namespace {

using Lattice = LatticeWindow<PrimeField>;
using State = std::vector<Lattice>;  // slots 1..n stored at 0..n-1

std::string t_prefix(int power) {
  if (power == 0) return "";
  if (power == 1) return "t";
  return "t^" + std::to_string(power);
}

void check_bs_guard(const BSDiagram& d, std::uint32_t q) {
  if (static_cast<Int>(d.length()) > kMaxBsLength)
    throw DomainError("length_guard", "word length " + std::to_string(d.length()) + " exceeds " +
                                          std::to_string(kMaxBsLength));
  if (q != 2 && q != 3) throw DomainError("field_guard", "point counts need q in {2, 3}");
}

State initial_state(const BSDiagram& d, const PrimeField& f) {
  State s;
  for (int m = 1; m <= d.n(); ++m) s.push_back(Lattice::standard(f, d.window, m));
  return s;
}

// The two neighbours U ⊃ W of slot m in the periodic flag.
std::pair<Lattice, Lattice> neighbours(const State& s, int m) {
  const int n = static_cast<int>(s.size());
  Lattice upper = m == 1 ? s[n - 1].times_t_inverse() : s[m - 2];
  Lattice lower = m == n ? s[0].times_t() : s[m];
  return {std::move(upper), std::move(lower)};
}

// The q + 1 lattices strictly between W and U, in a fixed order.
std::vector<Lattice> fiber(const Lattice& upper, const Lattice& lower) {
  if (!upper.contains(lower) || upper.dim() != lower.dim() + 2)
    throw DomainError("bs_fiber", "neighbouring lattices are not at relative dimension two");
  const PrimeField& f = upper.field();
  std::vector<std::vector<PrimeField::Elem>> complement;
  const auto& low = lower.pivots();
  for (std::size_t k = 0; k < upper.dim(); ++k)
    if (!std::binary_search(low.begin(), low.end(), upper.pivots()[k])) complement.push_back(upper.row(k));
  if (complement.size() != 2) throw DomainError("bs_fiber", "pivot sets do not differ in two places");

  std::vector<std::vector<PrimeField::Elem>> lines;
  for (std::uint32_t c = 0; c < f.modulus(); ++c) {
    auto v = complement[0];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(c, complement[1][i]));
    lines.push_back(std::move(v));
  }
  lines.push_back(complement[1]);

  std::vector<Lattice> out;
  for (const auto& v : lines) {
    Mat<PrimeField> rows = lower.basis();
    Lattice::append_row(rows, v);
    Lattice l = Lattice::from_stable_rows(f, lower.window(), std::move(rows));
    if (!l.is_t_stable()) throw DomainError("bs_fiber", "intermediate subspace is not t-stable");
    if (std::find(out.begin(), out.end(), l) != out.end())
      throw DomainError("bs_fiber", "two lines of U/W gave the same lattice");
    out.push_back(std::move(l));
  }
  return out;
}

LatticeFlag<PrimeField> shifted_flag(const State& s, const BSDiagram& d) {
  LatticeFlag<PrimeField> out{std::vector<int>(d.n(), 1), {}};
  for (const auto& l : s) out.lattices.push_back(l.sigma_shift(d.word.sigma_power));
  return out;
}

struct Walker {
  const BSDiagram& d;
  bool opposite;

  bool accept(const State& s) const {
    if (!opposite) return true;
    return opposite_cell_test(shifted_flag(s, d), d.word.sigma_power);
  }

  std::uint64_t count(State& s, std::size_t depth) const {
    if (depth == d.length()) return accept(s) ? 1 : 0;
    const int m = d.word.letters[depth] + 1;
    auto [upper, lower] = neighbours(s, m);
    std::uint64_t total = 0;
    Lattice saved = s[m - 1];
    for (auto& l : fiber(upper, lower)) {
      s[m - 1] = std::move(l);
      total += count(s, depth + 1);
    }
    s[m - 1] = std::move(saved);
    return total;
  }

  void collect(State& s, BSPoint& path, std::vector<BSPoint>& out) const {
    const std::size_t depth = path.size();
    if (depth == d.length()) {
      out.push_back(path);
      return;
    }
    const int m = d.word.letters[depth] + 1;
    auto [upper, lower] = neighbours(s, m);
    Lattice saved = s[m - 1];
    for (auto& l : fiber(upper, lower)) {
      s[m - 1] = l;
      path.push_back(std::move(l));
      collect(s, path, out);
      path.pop_back();
    }
    s[m - 1] = std::move(saved);
  }
};

}  // namespace

std::string BSDiagram::describe(const BSConstraint& c) const {
  return t_prefix(c.upper_t) + nodes[c.upper].name + " ⊃ " + t_prefix(c.lower_t) + nodes[c.lower].name;
}

BSDiagram build_bs(const ReducedWord& w) {
  if (w.n < 2) throw DomainError("bad_word", "need n >= 2");
  for (int x : w.letters)
    if (x < 0 || x >= w.n) throw DomainError("bad_word", "letter " + std::to_string(x) + " outside [0, n-1]");
  if (!is_reduced(w)) throw DomainError("not_reduced", "the word is not reduced");

  BSDiagram d;
  d.word = w;
  const int n = w.n;
  const Int len = static_cast<Int>(w.letters.size());
  // every lattice of a point lies between E_{-len} and E_{n+1+len}
  const Int k = (len + 1 + n - 1) / n;
  d.window = Window(n, 1 - n * k, 1 + n * (k + 1));

  for (int m = 1; m <= n; ++m) d.nodes.push_back({"E" + std::to_string(m), m, true});
  for (int m = 1; m < n; ++m) d.constraints.push_back({m - 1, m, 0, 0});
  d.constraints.push_back({n - 1, 0, 0, 1});

  std::vector<int> total(n + 1, 0), seen(n + 1, 0);
  for (int x : w.letters) ++total[x + 1];
  std::vector<int> slot_node(n + 1);
  for (int m = 1; m <= n; ++m) slot_node[m] = m - 1;

  auto add = [&](int upper, int upper_t, int lower, int lower_t) {
    const int shift = -std::min(upper_t, lower_t);
    d.constraints.push_back({upper, lower, upper_t + shift, lower_t + shift});
  };
  for (int x : w.letters) {
    const int m = x + 1;
    ++seen[m];
    const int id = static_cast<int>(d.nodes.size());
    d.nodes.push_back({"L" + std::to_string(m) + std::string(total[m] - seen[m], '\''), m, false});
    d.letter_nodes.push_back(id);
    const int left = m == 1 ? slot_node[n] : slot_node[m - 1];
    const int right = m == n ? slot_node[1] : slot_node[m + 1];
    add(left, m == 1 ? -1 : 0, id, 0);
    add(id, 0, right, m == n ? 1 : 0);
    slot_node[m] = id;
  }
  for (int m = 1; m <= n; ++m) d.final_nodes.push_back(slot_node[m]);
  return d;
}

std::uint64_t count_bs_points_serial(const BSDiagram& d, std::uint32_t q, bool opposite) {
  check_bs_guard(d, q);
  State s = initial_state(d, PrimeField(q));
  return Walker{d, opposite}.count(s, 0);
}

std::uint64_t count_bs_points(const BSDiagram& d, std::uint32_t q, bool opposite) {
  check_bs_guard(d, q);
  const Walker walker{d, opposite};
  std::vector<State> frontier{initial_state(d, PrimeField(q))};
  std::size_t depth = 0;
  while (depth < d.length() && frontier.size() < 64) {
    std::vector<State> next;
    const int m = d.word.letters[depth] + 1;
    for (const State& s : frontier) {
      auto [upper, lower] = neighbours(s, m);
      for (auto& l : fiber(upper, lower)) {
        State t = s;
        t[m - 1] = std::move(l);
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
    ++depth;
  }

  std::uint64_t total = 0;
  std::exception_ptr error;
  const auto size = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::int64_t i = 0; i < size; ++i) {
    try {
      total += walker.count(frontier[static_cast<std::size_t>(i)], depth);
    } catch (...) {
#pragma omp critical(bs_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return total;
}

std::vector<BSPoint> bs_points(const BSDiagram& d, std::uint32_t q) {
  check_bs_guard(d, q);
  State s = initial_state(d, PrimeField(q));
  BSPoint path;
  std::vector<BSPoint> out;
  Walker{d, false}.collect(s, path, out);
  return out;
}

void check_bs_point(const BSPoint& point, const BSDiagram& d) {
  if (point.size() != d.length()) throw DomainError("bs_constraint", "point has the wrong number of lattices");
  const PrimeField f = point.empty() ? PrimeField(2) : point.front().field();
  std::vector<Lattice> value;
  for (int m = 1; m <= d.n(); ++m) value.push_back(Lattice::standard(f, d.window, m));
  for (const auto& l : point) {
    if (!(l.window() == d.window) || !l.is_t_stable())
      throw DomainError("bs_constraint", "point lattice is not a lattice in the diagram window");
    value.push_back(l);
  }
  auto power = [](const Lattice& l, int k) {
    Lattice out = l;
    for (int i = 0; i < k; ++i) out = out.times_t();
    return out;
  };
  for (const auto& c : d.constraints) {
    const Lattice upper = power(value[c.upper], c.upper_t);
    const Lattice lower = power(value[c.lower], c.lower_t);
    if (!upper.contains(lower) || upper.dim() != lower.dim() + 1)
      throw DomainError("bs_constraint", "containment " + d.describe(c) + " fails");
  }
}

LatticeFlag<PrimeField> project_bs(const BSPoint& point, const BSDiagram& d, std::vector<int> composition,
                                   const Window& target) {
  check_bs_point(point, d);
  if (composition.empty()) composition.assign(d.n(), 1);
  const PrimeField f = point.empty() ? PrimeField(2) : point.front().field();
  State s = initial_state(d, f);
  for (std::size_t k = 0; k < point.size(); ++k) s[d.word.letters[k]] = point[k];

  const LatticeFlag<PrimeField> full = shifted_flag(s, d);
  LatticeFlag<PrimeField> out{composition, {}};
  std::size_t m = 0;
  for (int part : composition) {
    if (part <= 0 || m >= full.lattices.size())
      throw DomainError("bad_composition", "composition must have positive parts summing to n");
    out.lattices.push_back(full.lattices[m].rewindow(target));
    m += static_cast<std::size_t>(part);
  }
  if (m != full.lattices.size()) throw DomainError("bad_composition", "composition must sum to n");
  return out;
}

LatticeFlag<PrimeField> project_bs(const BSPoint& point, const BSDiagram& d) {
  return project_bs(point, d, {}, enumeration_window(evaluate_word(d.word), false));
}

}  // namespace affsch
