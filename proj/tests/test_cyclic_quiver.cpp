#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "doctest.h"

#include "affsch/cyclic_quiver.hpp"
#include "affsch/lusztig_phi.hpp"
#include "test_support.hpp"

using namespace affsch;
using affsch::testing::random_invertible;
using affsch::testing::random_matrix;

namespace {

template <class F>
std::vector<Mat<F>> random_group_element(std::mt19937_64& g, const F& f, const DimensionVector& dv) {
  std::vector<Mat<F>> out;
  for (int x : dv.d) out.push_back(random_invertible(g, f, x));
  return out;
}

// Uniform entries, so that over a large prime field the conjugate is generic.
std::vector<Mat<PrimeField>> generic_group_element(std::mt19937_64& g, const PrimeField& f, const DimensionVector& dv) {
  std::uniform_int_distribution<std::uint32_t> entry(0, f.modulus() - 1);
  std::vector<Mat<PrimeField>> out;
  for (int x : dv.d) {
    Mat<PrimeField> m(x, x, 0);
    do {
      for (auto& e : m.data) e = entry(g);
    } while (rank(f, m) != static_cast<std::size_t>(x));
    out.push_back(std::move(m));
  }
  return out;
}

template <class F>
QuiverRep<F> random_orbit_rep(std::mt19937_64& g, const F& f, const DimensionVector& dv) {
  const auto orbits = all_orbits(dv);
  const auto rep = from_indecomposables(f, dv, orbits[g() % orbits.size()]);
  return act(random_group_element(g, f, dv), rep);
}

template <class F>
std::optional<QuiverRep<F>> random_raw_rep(std::mt19937_64& g, const F& f, const DimensionVector& dv) {
  std::vector<Mat<F>> mats;
  for (int j = 1; j <= dv.h(); ++j) mats.push_back(random_matrix(g, f, dv.at(j - 1), dv.at(j)));
  QuiverRep<F> rep(f, dv, std::move(mats));
  if (!is_nilpotent(rep)) return std::nullopt;
  return rep;
}

DimensionVector random_dims(std::mt19937_64& g, int max_n) {
  std::uniform_int_distribution<int> h_dist(1, max_n);
  const int h = h_dist(g);
  std::vector<int> d(h, 1);
  std::uniform_int_distribution<int> node(0, h - 1);
  const int n = std::uniform_int_distribution<int>(h, max_n)(g);
  for (int extra = h; extra < n; ++extra) ++d[node(g)];
  return DimensionVector(d);
}

// All invertible k x k matrices over F_2.
std::vector<Mat<PrimeField>> general_linear_f2(int k) {
  const PrimeField f(2);
  std::vector<Mat<PrimeField>> out;
  for (std::uint32_t mask = 0; mask < (1u << (k * k)); ++mask) {
    Mat<PrimeField> m(k, k, 0);
    for (int i = 0; i < k * k; ++i) m.data[i] = mask >> i & 1;
    if (rank(f, m) == static_cast<std::size_t>(k)) out.push_back(m);
  }
  return out;
}

// Every nilpotent representation with dimension vector d over F_2.
std::vector<QuiverRep<PrimeField>> all_nilpotent_f2(const DimensionVector& dv) {
  const PrimeField f(2);
  int bits = 0;
  for (int j = 1; j <= dv.h(); ++j) bits += dv.at(j - 1) * dv.at(j);
  std::vector<QuiverRep<PrimeField>> out;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    auto rep = QuiverRep<PrimeField>::zero(f, dv);
    int at = 0;
    for (auto& m : rep.mats)
      for (auto& x : m.data) x = mask >> at++ & 1;
    if (is_nilpotent(rep)) out.push_back(rep);
  }
  return out;
}

std::vector<std::uint32_t> entries(const QuiverRep<PrimeField>& rep) {
  std::vector<std::uint32_t> out;
  for (const auto& m : rep.mats) out.insert(out.end(), m.data.begin(), m.data.end());
  return out;
}

template <class F>
LatticeFlag<F> flag_on(const LatticeFlag<F>& flag, const AffinePermutation& p) {
  const Window a = flag.window(), b = default_window(p);
  return flag.rewindow(Window(a.n, std::min(a.lo, b.lo), std::max(a.hi, b.hi)));
}

AffinePermutation conj_shift(const AffinePermutation& p, Int k) {
  const int n = p.n();
  return compose(AffinePermutation::shift(n, -k), compose(p, AffinePermutation::shift(n, k)));
}

}  // namespace

TEST_CASE("nilpotency and path products") {
  const PrimeField f(3);
  const DimensionVector dv({1, 1});
  Mat<PrimeField> one(1, 1, 1);
  QuiverRep<PrimeField> cyc(f, dv, {one, one});
  CHECK_FALSE(is_nilpotent(cyc));
  CHECK_THROWS_AS(psi(cyc), DomainError);
  CHECK_THROWS_AS(rank_table(cyc), DomainError);
  QuiverRep<PrimeField> half(f, dv, {one, zero_matrix(f, 1, 1)});
  CHECK(is_nilpotent(half));
  CHECK(path_product(half, 1, 1) == one);
  CHECK(is_zero_matrix(f, path_product(half, 1, 2)));
  CHECK(is_zero_matrix(f, path_product(half, 2, 1)));
  CHECK(path_product(half, 2, 0) == identity_matrix(f, 1));
  CHECK_THROWS_AS(path_product(half, 1, -1), DomainError);
  CHECK_THROWS_AS(QuiverRep<PrimeField>(f, dv, {one}), DomainError);
  CHECK_THROWS_AS(QuiverRep<PrimeField>(f, DimensionVector({2, 1}), {one, one}), DomainError);
  CHECK_THROWS_AS(DimensionVector({1, 0}), DomainError);

  auto g = affsch::testing::rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_dims(g, 5);
    const auto rep = random_orbit_rep(g, f, d);
    CHECK(is_nilpotent(rep));
    CHECK(is_nilpotent(rotate(rep)));
    // composition of path products
    const Int j = g() % d.h() + 1, k1 = g() % 4, k2 = g() % 4;
    CHECK(path_product(rep, j, k1 + k2) == multiply(f, path_product(rep, j - k1, k2), path_product(rep, j, k1)));
  }
}

TEST_CASE("psi of the zero representation") {
  const RationalField q;
  for (const auto& d : {std::vector<int>{1}, {3}, {1, 1, 1}, {2, 1}, {1, 2, 2}}) {
    const DimensionVector dv(d);
    const auto flag = psi(QuiverRep<RationalField>::zero(q, dv));
    const Int n = dv.n();
    for (int j = 1; j <= dv.h(); ++j)
      CHECK(flag.lattices[j - 1] == standard_lattice(1 + dv.offset(j) + n * (n - 1), psi_window(n), q));
    CHECK(verify_psi_image(flag, dv));
    CHECK(psi(QuiverRep<RationalField>::zero(q, dv), Window(n, 1 - n, n * n + 2 * n + 1)).window().lo == 1 - n);
    CHECK_THROWS_AS(psi(QuiverRep<RationalField>::zero(q, dv), Window(n, 1 + n, n * n + 2 * n + 1)), DomainError);
  }
}

TEST_CASE("one node recovers the nilpotent-matrix map") {
  auto g = affsch::testing::rng(42);
  const PrimeField f(5);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      const auto rep = random_orbit_rep(g, f, DimensionVector({n}));
      const auto flag = psi(rep);
      REQUIRE(flag.lattices.size() == 1);
      CHECK(flag.lattices[0] == phi(NilpotentMatrix<PrimeField>(f, rep.mats[0])));
    }
}

TEST_CASE("equivariance under the block-diagonal group") {
  auto g = affsch::testing::rng(43);
  auto sweep = [&](const auto& f) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto dv = random_dims(g, 5);
      const auto rep = random_orbit_rep(g, f, dv);
      const auto x = random_group_element(g, f, dv);
      const auto big = block_diagonal(f, x);
      const auto lhs = psi(act(x, rep));
      const auto rhs = psi(rep);
      for (int j = 0; j < dv.h(); ++j) CHECK(lhs.lattices[j] == rhs.lattices[j].apply(big));
      CHECK(rank_table(act(x, rep)) == rank_table(rep));
    }
  };
  sweep(PrimeField(2));
  sweep(PrimeField(7));
  sweep(RationalField{});
}

TEST_CASE("image conditions on random representations") {
  auto g = affsch::testing::rng(44);
  const PrimeField f(3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto dv = random_dims(g, 5);
    const auto rep = random_orbit_rep(g, f, dv);
    const auto flag = psi(rep);
    CHECK(verify_psi_image(flag, dv));
    CHECK(vdim(flag.lattices[0]) == -Int{dv.n()} * (dv.n() - 1));
  }
  // t^{n-1}E'_{(j+1)} is too deep for the opposite condition on the zero representation
  const DimensionVector dv({1, 1, 1});
  const auto zero = psi(QuiverRep<PrimeField>::zero(f, dv));
  CHECK(opposite_cell_test(zero, 6));
  CHECK_FALSE(opposite_cell_test(zero, 7));
}

TEST_CASE("rank tables of small representations") {
  const PrimeField f(2);
  const DimensionVector dv({1, 1, 1});
  const auto zero = rank_table(QuiverRep<PrimeField>::zero(f, dv));
  for (int j = 1; j <= 3; ++j) {
    CHECK(zero.at(j, 0) == 1);
    CHECK(zero.at(j, 1) == 0);
    CHECK(zero.multiplicity(j, 0) == 1);
  }
  // I_2^1 is e_2 -> e_1 across the arrow from node 2 to node 1
  const auto i21 = from_indecomposables(f, dv, Multiplicities{{{2, 1}, 1}, {{3, 0}, 1}});
  CHECK(!is_zero_matrix(f, i21.mats[1]));
  const auto t = rank_table(i21);
  CHECK(t.at(2, 1) == 1);
  CHECK(t.at(2, 2) == 0);
  CHECK(t.at(1, 1) == 0);
  CHECK(multiplicities(t) == Multiplicities{{{2, 1}, 1}, {{3, 0}, 1}});
  // the j-1 variant of the formula goes negative on this representation
  CHECK_THROWS_AS(from_indecomposables(f, dv, Multiplicities{{{2, 1}, 1}}), DomainError);

  // the j-1 variant of the formula goes negative on the chain e_3 -> e_2 -> e_1
  const auto chain = rank_table(from_indecomposables(f, dv, Multiplicities{{{3, 2}, 1}}));
  CHECK(multiplicities(chain) == Multiplicities{{{3, 2}, 1}});
  const Int j_minus_one = chain.at(1, 1) - chain.at(1, 2) - chain.at(0, 2) + chain.at(0, 3);
  CHECK(j_minus_one == -1);

  RankTable bad = zero;
  bad.r[0][1] = 2;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("multiplicities and ranks invert each other") {
  const PrimeField f(2);
  for (const auto& d : {std::vector<int>{1}, {4}, {1, 1}, {2, 1}, {2, 2}, {1, 1, 1}, {1, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}}) {
    const DimensionVector dv(d);
    std::set<std::vector<std::vector<Int>>> seen;
    for (const auto& m : all_orbits(dv)) {
      CHECK(total_dimension(dv.h(), m) == d);
      const auto rep = from_indecomposables(f, dv, m);
      const auto t = rank_table(rep);
      CHECK(t == ranks_from_multiplicities(dv, m));
      CHECK(multiplicities(t) == m);
      CHECK(seen.insert(t.r).second);
    }
  }
  CHECK(all_orbits(DimensionVector({2})).size() == 2);
  CHECK(all_orbits(DimensionVector({3})).size() == 3);
  CHECK(all_orbits(DimensionVector({1, 1})).size() == 3);
}

TEST_CASE("rank tables separate orbits over F2") {
  for (const auto& d : {std::vector<int>{3}, {2, 1}, {2, 2}, {1, 1, 1}, {1, 2, 1}, {1, 1, 1, 1}}) {
    const DimensionVector dv(d);
    std::vector<std::vector<Mat<PrimeField>>> group{{}};
    for (int x : d) {
      std::vector<std::vector<Mat<PrimeField>>> next;
      for (const auto& prefix : group)
        for (const auto& m : general_linear_f2(x)) {
          next.push_back(prefix);
          next.back().push_back(m);
        }
      group = std::move(next);
    }
    std::set<std::vector<std::uint32_t>> orbit_keys;
    std::map<std::vector<std::uint32_t>, RankTable> table_of;
    std::set<std::vector<std::vector<Int>>> tables;
    for (const auto& rep : all_nilpotent_f2(dv)) {
      std::vector<std::uint32_t> key = entries(rep);
      for (const auto& x : group) key = std::min(key, entries(act(x, rep)));
      const auto t = rank_table(rep);
      auto [it, fresh] = table_of.emplace(key, t);
      CHECK(it->second == t);
      orbit_keys.insert(key);
      tables.insert(t.r);
    }
    CHECK(orbit_keys.size() == tables.size());
    CHECK(orbit_keys.size() == all_orbits(dv).size());
  }
}

TEST_CASE("rank display against the standard flag") {
  const PrimeField f(2);
  for (const auto& d : {std::vector<int>{2}, {1, 1}, {2, 1}, {1, 1, 1}, {1, 2, 1}, {2, 2}}) {
    const DimensionVector dv(d);
    const int h = dv.h(), n = dv.n();
    for (const auto& m : all_orbits(dv)) {
      const auto rep = from_indecomposables(f, dv, m);
      const auto t = rank_table(rep);
      const auto flag = psi(rep);
      for (int j = 1; j <= h; ++j)
        for (Int e = 0; e <= Int{n} * h - h + j; ++e) {
          const Int k = Int{n} * h - h + j + 1 - e;
          const Int k0 = wrap_index(k, h);
          const Int index = 1 + dv.offset(static_cast<int>(k0)) + Int{n} * ((k - k0) / h);
          const auto ek = standard_lattice(index, flag.window(), f);
          CHECK(rel_dim(flag.lattices[j - 1], ek) == t.at(j, e));
        }
    }
  }
}

TEST_CASE("orbit permutations place psi in the cell") {
  auto g = affsch::testing::rng(45);
  const PrimeField big(65521), f2(2);
  for (const auto& d : {std::vector<int>{2}, {3}, {1, 1}, {2, 1}, {1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2}}) {
    const DimensionVector dv(d);
    for (const auto& m : all_orbits(dv)) {
      const auto p = orbit_permutation(ranks_from_multiplicities(dv, m));
      CHECK(p == min_coset_representative(p, d));
      // a generic conjugate lands in the open cell
      for (int trial = 0; trial < 3; ++trial) {
        const auto flag = psi(act(generic_group_element(g, big, dv), from_indecomposables(big, dv, m)));
        CHECK(flag_permutation(flag) == p);
        CHECK(schubert_membership(flag_on(flag, p), p, SchubertMode::cell));
      }
      // special ones, including the canonical representative, stay in its closure
      const auto canonical = psi(from_indecomposables(f2, dv, m));
      CHECK(bruhat_leq(flag_permutation(canonical), p));
      CHECK(schubert_membership(flag_on(canonical, p), p, SchubertMode::variety));
      for (int trial = 0; trial < 5; ++trial) {
        const auto flag = psi(act(random_group_element(g, f2, dv), from_indecomposables(f2, dv, m)));
        CHECK(schubert_membership(flag_on(flag, p), p, SchubertMode::variety));
      }
    }
  }
  // the zero representation gets the Bruhat-least orbit permutation
  const DimensionVector dv({1, 1, 1});
  const auto zero = orbit_permutation(rank_table(QuiverRep<PrimeField>::zero(f2, dv)));
  CHECK(zero.to_string() == "[7,8,9]");
  for (const auto& m : all_orbits(dv)) CHECK(bruhat_leq(zero, orbit_permutation(ranks_from_multiplicities(dv, m))));
  // the open orbit of (M_1, M_2, M_3) = (1, 1, 0) gives a component
  const Mat<PrimeField> one(1, 1, 1);
  const QuiverRep<PrimeField> open(f2, dv, {one, one, zero_matrix(f2, 1, 1)});
  CHECK(orbit_permutation(rank_table(open)).to_string() == "[8,6,10]");
}

TEST_CASE("one node: orbit permutations follow the Grassmannian profile") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& b : all_jordan_types(n)) {
      std::vector<int> parts;
      for (int x : b.b)
        if (x > 0) parts.push_back(x);
      Multiplicities m;
      for (int x : parts) ++m[Indecomposable{1, x - 1}];
      const DimensionVector dv({n});
      const auto p = orbit_permutation(ranks_from_multiplicities(dv, m));
      const Window dw = default_window(p);
      const Window w(n, std::min<Int>(dw.lo, 1), std::max<Int>(dw.hi, Int{n} * n + n + 1));
      const auto flag = permutation_flag(p, w, PrimeField(2), {n});
      const auto& l = flag.lattices[0];
      std::vector<Int> prof;
      for (int j = 0; j <= n; ++j) prof.push_back(rel_dim(l, standard_lattice(1 + Int{j} * n, l.window(), PrimeField(2))));
      CHECK(prof == cell_profile(b).cprime);
    }
}

TEST_CASE("components for three one-dimensional nodes") {
  const auto comps = component_permutations(DimensionVector({1, 1, 1}));
  std::set<std::string> got;
  for (const auto& p : comps) got.insert(p.to_string());
  CHECK(got == std::set<std::string>{"[5,9,10]", "[8,6,10]", "[8,9,7]"});
  for (const auto& p : comps) CHECK(length(p) == 2);
  // rotation permutes the three components
  for (const auto& p : comps) CHECK(got.count(conj_shift(p, 1).to_string()) == 1);
  CHECK(conj_shift(parse_window("[5,9,10]", 3), -1).to_string() == "[8,6,10]");
  // [9,8,7] is not a minimal coset representative of the right length
  const auto wrong = parse_window("[9,8,7]", 3);
  CHECK(length(wrong) == 3);
  CHECK(got.count(wrong.to_string()) == 0);

  CHECK(component_permutations(DimensionVector({3})).size() == 1);
  CHECK(component_permutations(DimensionVector({1, 1})).size() == 2);
  CHECK_THROWS_AS(component_permutations(DimensionVector({9})), DomainError);
}

TEST_CASE("components are equidimensional and contain psi of generic orbits") {
  for (const auto& d : {std::vector<int>{2}, {1, 1}, {2, 1}, {1, 2}, {2, 1, 1}, {1, 1, 1, 1}}) {
    const DimensionVector dv(d);
    const auto comps = component_permutations(dv);
    REQUIRE(!comps.empty());
    for (const auto& p : comps) CHECK(length(p) == length(comps.front()));
    std::set<AffinePermutation> all;
    for (const auto& m : all_orbits(dv)) all.insert(orbit_permutation(ranks_from_multiplicities(dv, m)));
    for (const auto& q : all) {
      bool below = false;
      for (const auto& p : comps) below |= bruhat_leq(q, p);
      CHECK(below);
    }
  }
}

TEST_CASE("rotating the nodes conjugates by a power of the shift") {
  const PrimeField f(2);
  for (const auto& d : {std::vector<int>{1, 1}, {1, 1, 1}, {2, 2}, {1, 1, 1, 1}}) {
    const DimensionVector dv(d);
    for (const auto& m : all_orbits(dv)) {
      const auto rep = from_indecomposables(f, dv, m);
      const auto rot = rotate(rep);
      const auto t = rank_table(rep), tr = rank_table(rot);
      for (int j = 1; j <= dv.h(); ++j) CHECK(tr.r[j - 1] == t.r[wrap_index(j + 1, dv.h()) - 1]);
      CHECK(flag_permutation(psi(rot)) == conj_shift(flag_permutation(psi(rep)), d[0]));
    }
  }
}

TEST_CASE("multiplicities stay nonnegative on random nilpotent representations") {
  auto g = affsch::testing::rng(46);
  const PrimeField f2(2), f3(3);
  int checked = 0, raw = 0;
  while (checked < 500) {
    const auto dv = random_dims(g, 5);
    if (checked % 2 == 0) {
      if (auto rep = random_raw_rep(g, f2, dv)) {
        CHECK_NOTHROW(rank_table(*rep).validate());
        ++raw;
        ++checked;
      }
      continue;
    }
    const auto rep = random_orbit_rep(g, f3, dv);
    const auto t = rank_table(rep);
    for (const auto& [ind, count] : multiplicities(t)) CHECK(count > 0);
    CHECK(total_dimension(dv.h(), multiplicities(t)) == dv.d);
    ++checked;
  }
  CHECK(raw == 250);
}
