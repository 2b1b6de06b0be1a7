// One line per acceptance criterion; the exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "affsch/bott_samelson.hpp"
#include "affsch/circular.hpp"
#include "affsch/cyclic_quiver.hpp"
#include "affsch/enumerate.hpp"
#include "affsch/lusztig_phi.hpp"
#include "affsch/wiring.hpp"
#include "test_support.hpp"

using namespace affsch;
using affsch::testing::random_invertible;
using affsch::testing::rng;

namespace {

// Pinned sizes and limits.
constexpr int kRandomPermCases = 1000;
constexpr int kMaxRandomN = 6;
constexpr int kProductPairs = 1000;
constexpr int kMaxCircularB = 6;
constexpr int kPhiTrialsPerCell = 200;
constexpr int kPsiPointsPerComponent = 100;
constexpr int kMaxPsiB = 4;
constexpr double kCountSecondsLimit = 60.0;
constexpr int kQuiverReps = 500;
constexpr int kMaxQuiverN = 5;

int failures = 0;

void verdict(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string set_text(const std::set<AffinePermutation>& s) {
  std::string out = "{";
  for (const auto& p : s) out += (out.size() > 1 ? "," : "") + p.to_string();
  return out + "}";
}

AffinePermutation conj_shift(const AffinePermutation& p, Int k) {
  return compose(AffinePermutation::shift(p.n(), -k), compose(p, AffinePermutation::shift(p.n(), k)));
}

void criterion1() {
  const AffinePermutation p(3, {-2, 2, 6});
  const auto greedy = greedy_reduced_word(p);
  const bool ok = length(p) == 4 && greedy.letters.size() == 4 && evaluate_word(greedy) == p &&
                  evaluate_word({3, 0, {2, 1, 2, 0}}) == p;
  verdict(1, ok, "len([-2,2,6])=" + std::to_string(length(p)) + ", greedy word has " +
                     std::to_string(greedy.letters.size()) + " letters, 2120 evaluates back");
}

void criterion2() {
  auto g = rng(2);
  int mismatches = 0;
  for (int trial = 0; trial < kRandomPermCases; ++trial) {
    const int n = 1 + trial % kMaxRandomN;
    const auto p = testing::random_permutation(g, n, 3);
    const Int shi = length(p);
    const auto crossings = static_cast<Int>(build_diagram(p).crossings.size());
    // translation part in dominant order: c . 2rho^vee
    auto c = decompose(p).c;
    const Int tau_len = length(AffinePermutation::translation(c));
    std::sort(c.c.rbegin(), c.c.rend());
    Int dominant = 0;
    for (int i = 0; i < n; ++i) dominant += c.c[i] * (n - 1 - 2 * i);
    const auto tau_crossings = static_cast<Int>(build_diagram(AffinePermutation::translation(c)).crossings.size());
    if (shi != crossings || tau_len != dominant || tau_crossings != dominant) ++mismatches;
  }
  verdict(2, mismatches == 0,
          std::to_string(kRandomPermCases) + " seeded cases, n <= " + std::to_string(kMaxRandomN) +
              ": Shi = crossings, translation part Shi = crossings = c.2rho; mismatches=" + std::to_string(mismatches));
}

void criterion3() {
  auto g = rng(3);
  int mismatches = 0;
  for (int trial = 0; trial < kProductPairs; ++trial) {
    const int n = 1 + trial % kMaxRandomN;
    const auto p = testing::random_permutation(g, n, 3), q = testing::random_permutation(g, n, 3);
    const auto dp = decompose(p), dq = decompose(q), dpq = decompose(compose(p, q));
    // (w1 tau^c1)(w2 tau^c2) = w1 w2 tau^{c1 o w2 + c2}
    Decomposition want{std::vector<Int>(n), TranslationVector{n, std::vector<Int>(n)}};
    for (int i = 0; i < n; ++i) {
      const auto w2 = dq.finite[i];
      want.finite[i] = dp.finite[w2 - 1];
      want.c.c[i] = dp.c.c[w2 - 1] + dq.c.c[i];
    }
    if (dpq.finite != want.finite || dpq.c.c != want.c.c || recompose(want) != compose(p, q)) ++mismatches;
  }
  verdict(3, mismatches == 0,
          std::to_string(kProductPairs) + " seeded pairs: semidirect product law; mismatches=" + std::to_string(mismatches));
}

void criterion4() {
  int triples = 0, bad_len = 0, bad_letters = 0, bad_eval = 0, bad_left = 0, bad_right = 0;
  for (int b = 1; b <= kMaxCircularB; ++b)
    for (int a = 1; a <= b; ++a)
      for (int c = 0; c <= a; ++c) {
        ++triples;
        const int n = a + b;
        const auto p = pi_c(a, b, c);
        const auto w = cable_word(a, b, c);
        bad_len += length(p) != Int{a} * b;
        bad_letters += static_cast<Int>(w.letters.size()) != Int{a} * b;
        bad_eval += !(evaluate_word(w) == p);
        bool left = true, right = true;
        for (int i = 1; i < n; ++i) {
          if (i == a) continue;
          const auto s = AffinePermutation::simple_reflection(n, i);
          left = left && length(compose(s, p)) < length(p);
          right = right && length(compose(p, s)) > length(p);
        }
        bad_left += !left;
        bad_right += !right;
      }
  const bool ok = bad_len + bad_letters + bad_eval + bad_left + bad_right == 0;
  verdict(4, ok,
          std::to_string(triples) + " triples a<=b<=" + std::to_string(kMaxCircularB) +
              ": length!=ab " + std::to_string(bad_len) + ", letters!=ab " + std::to_string(bad_letters) +
              ", eval!=pi_c " + std::to_string(bad_eval) + ", right-min fails " + std::to_string(bad_right) +
              ", left-max fails " + std::to_string(bad_left));
}

void criterion5() {
  const auto comps = component_permutations(DimensionVector({1, 1, 1}));
  const std::set<AffinePermutation> got(comps.begin(), comps.end());
  const std::set<AffinePermutation> expected{AffinePermutation(3, {5, 9, 10}), AffinePermutation(3, {8, 6, 10}),
                                             AffinePermutation(3, {9, 8, 7})};
  bool closed = true;
  for (const auto& p : got) closed = closed && got.count(conj_shift(p, 1)) == 1;
  bool cycle = got.size() == 3;
  if (cycle) {
    const auto& p = *got.begin();
    cycle = conj_shift(p, 1) != p && conj_shift(conj_shift(p, 1), 1) != p && conj_shift(p, 3) == p;
  }
  verdict(5, got == expected && closed && cycle,
          "computed " + set_text(got) + ", expected " + set_text(expected) + "; sigma-conjugation " +
              (closed && cycle ? "permutes the computed set in one 3-cycle" : "does not permute the set"));
}

template <class F>
NilpotentMatrix<F> random_nilpotent(std::mt19937_64& g, const F& f, int n) {
  const auto types = all_jordan_types(n);
  const auto& b = types[g() % types.size()];
  const auto x = random_invertible(g, f, n);
  return NilpotentMatrix<F>(f, multiply(f, multiply(f, x, jordan_matrix(f, b).matrix()), inverse(f, x)));
}

template <class F>
int phi_sweep(const F& f, std::uint64_t seed) {
  auto g = rng(seed);
  int bad = 0;
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < kPhiTrialsPerCell; ++trial) {
      const auto nm = random_nilpotent(g, f, n);
      const auto x = random_invertible(g, f, n);
      const NilpotentMatrix<F> conj(f, multiply(f, multiply(f, x, nm.matrix()), inverse(f, x)));
      const auto l = phi(nm);
      const bool equivariant = phi(conj) == l.apply(x);
      const bool sandwich = standard_lattice(1, l.window(), f).contains(l) &&
                            l.contains(standard_lattice(1 + Int{n} * n, l.window(), f)) && verify_phi_cell(nm);
      bad += !(equivariant && sandwich);
    }
  return bad;
}

void criterion6() {
  const int bad = phi_sweep(RationalField{}, 60) + phi_sweep(PrimeField(2), 62) + phi_sweep(PrimeField(3), 63);
  const PrimeField f(2);
  bool bijection = true;
  for (int n = 1; n <= 3; ++n) {
    std::map<std::vector<Int>, JordanType> seen;
    for (std::uint32_t mask = 0; mask < (1u << (n * n)); ++mask) {
      Mat<PrimeField> m(n, n, 0);
      for (int k = 0; k < n * n; ++k) m.data[k] = mask >> k & 1;
      if (!is_zero_matrix(f, power(f, m, n))) continue;
      const NilpotentMatrix<PrimeField> nm(f, m);
      const auto b = jordan_type(nm);
      const auto prof = phi_profile(nm);
      auto [it, fresh] = seen.emplace(prof, b);
      bijection = bijection && it->second == b && prof == cell_profile(b).cprime;
    }
    bijection = bijection && seen.size() == all_jordan_types(n).size();
  }
  verdict(6, bad == 0 && bijection,
          std::to_string(kPhiTrialsPerCell) + " random (N,g) per n in {2,3,4}, q in {0,2,3}: failures=" +
              std::to_string(bad) + "; F2 Jordan type <-> profile bijection for n<=3 " + (bijection ? "holds" : "fails"));
}

void criterion7() {
  auto g = rng(7);
  const PrimeField f(7);
  int points = 0, bad = 0;
  for (int a = 1; a <= kMaxPsiB; ++a)
    for (int b = a; b <= kMaxPsiB; ++b)
      for (int c = 0; c <= a; ++c)
        for (int trial = 0; trial < kPsiPointsPerComponent; ++trial) {
          ++points;
          const auto l = act(random_invertible(g, f, a), random_invertible(g, f, b),
                             circular_representative(f, a, b, c, a - c));
          const auto flag = psi_circular(l);
          const bool tight = circular_statistics(flag, a, b) == std::pair<Int, Int>{c, a - c};
          bad += !(orbit_ranks(l).component() == c && verify_circular_image(flag, a, b, c) && tight &&
                   finite_flag_conditions(l));
        }
  verdict(7, bad == 0,
          std::to_string(points) + " seeded points over all open orbits, a<=b<=" + std::to_string(kMaxPsiB) +
              ": image conditions with tight statistics (c, a-c); failures=" + std::to_string(bad));
}

void criterion8() {
  const AffinePermutation p(3, {-2, 2, 6});
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t count = enumerate_flag_points(p, 2, SchubertMode::variety);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::uint64_t sum = 0;
  for (const auto& w : bruhat_interval(p)) sum += std::uint64_t{1} << length(w);
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << seconds;
  verdict(8, count == sum && seconds < kCountSecondsLimit,
          "#X_[-2,2,6](F2) = " + std::to_string(count) + ", interval sum = " + std::to_string(sum) + ", " + t.str() +
              " s (limit " + std::to_string(static_cast<int>(kCountSecondsLimit)) + " s)");
}

struct BsCheck {
  std::uint64_t points = 0;
  bool onto = false;
  bool fibre_one = false;
};

BsCheck bs_check(const ReducedWord& w) {
  const BSDiagram d = build_bs(w);
  const AffinePermutation p = evaluate_word(w);
  BsCheck out;
  out.points = count_bs_points(d, 2);
  std::map<LatticeFlag<PrimeField>, int> fibres;
  for (const auto& pt : bs_points(d, 2)) ++fibres[project_bs(pt, d)];
  std::vector<LatticeFlag<PrimeField>> image;
  for (const auto& [flag, k] : fibres) image.push_back(flag);
  out.onto = image == flag_point_set(p, 2, SchubertMode::variety);
  out.fibre_one = true;
  int cell = 0;
  for (const auto& [flag, k] : fibres)
    if (schubert_membership(flag, p, SchubertMode::cell)) {
      ++cell;
      out.fibre_one = out.fibre_one && k == 1;
    }
  out.fibre_one = out.fibre_one && cell == static_cast<int>(enumerate_flag_points(p, 2, SchubertMode::cell));
  return out;
}

void criterion9() {
  const auto z = bs_check({3, 0, {2, 1, 2, 0}});
  const auto c = bs_check({5, 5, {1, 3, 4, 3, 0, 2}});
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  verdict(9, z.points == 81 && c.points == 729 && z.onto && c.onto && z.fibre_one && c.fibre_one,
          "Z_2120: " + std::to_string(z.points) + " points, onto " + yn(z.onto) + ", fibre 1 over the cell " +
              yn(z.fibre_one) + "; circular (1,3,4,3,0,2): " + std::to_string(c.points) + " points, onto " +
              yn(c.onto) + ", fibre 1 over the cell " + yn(c.fibre_one));
}

void criterion10() {
  auto g = rng(10);
  const PrimeField f(3);
  int negative = 0, not_inverse = 0;
  for (int trial = 0; trial < kQuiverReps; ++trial) {
    std::uniform_int_distribution<int> h_dist(1, kMaxQuiverN);
    const int h = h_dist(g);
    std::vector<int> d(h, 1);
    const int n = std::uniform_int_distribution<int>(h, kMaxQuiverN)(g);
    for (int extra = h; extra < n; ++extra) ++d[g() % h];
    const DimensionVector dv(d);
    const auto orbits = all_orbits(dv);
    auto rep = from_indecomposables(f, dv, orbits[g() % orbits.size()]);
    std::vector<Mat<PrimeField>> grp;
    for (int x : dv.d) grp.push_back(random_invertible(g, f, x));
    rep = act(grp, rep);
    const auto t = rank_table(rep);
    bool nonneg = true;
    for (int j = 1; j <= h; ++j)
      for (Int k = 0; k < t.max_k(); ++k) nonneg = nonneg && t.multiplicity(j, k) >= 0;
    negative += !nonneg;
    not_inverse += !(ranks_from_multiplicities(dv, multiplicities(t)) == t);
  }
  verdict(10, negative == 0 && not_inverse == 0,
          std::to_string(kQuiverReps) + " seeded nilpotent reps, n<=" + std::to_string(kMaxQuiverN) +
              ": negative multiplicities " + std::to_string(negative) + ", inversion mismatches " +
              std::to_string(not_inverse));
}

}  // namespace

int main() {
  using Check = void (*)();
  for (Check check : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8,
                      criterion9, criterion10}) {
    try {
      check();
    } catch (const std::exception& e) {
      std::printf("[FAIL] exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
