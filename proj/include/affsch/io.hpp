#pragma once

// JSON encodings. Matrices are arrays of row arrays; prime-field entries are
// canonical residues, rational entries are integers or "p/q" strings.

#include <limits>
#include <string>

#include "json.hpp"

#include "affsch/bott_samelson.hpp"
#include "affsch/circular.hpp"
#include "affsch/cyclic_quiver.hpp"
#include "affsch/lattice.hpp"

namespace affsch {

using Json = nlohmann::json;

inline Json elem_to_json(const PrimeField&, PrimeField::Elem a) { return a; }
inline Json elem_to_json(const RationalField&, const RationalField::Elem& a) {
  if (boost::multiprecision::denominator(a) == 1) {
    const auto& num = boost::multiprecision::numerator(a);
    if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(num);
  }
  return a.str();
}

PrimeField::Elem elem_from_json(const PrimeField& f, const Json& j);
RationalField::Elem elem_from_json(const RationalField& f, const Json& j);

template <class F>
Json matrix_to_json(const F& f, const Mat<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(elem_to_json(f, m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// An empty array is accepted for any shape with a zero dimension.
template <class F>
Mat<F> matrix_from_json(const F& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array()) throw DomainError("shape_mismatch", what + " must be an array of rows");
  Mat<F> m(rows, cols, f.zero());
  if (j.empty() && (rows == 0 || cols == 0)) return m;
  if (j.size() != rows) throw DomainError("shape_mismatch", what + " must have " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw DomainError("shape_mismatch", what + " must have " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = elem_from_json(f, j[i][c]);
  }
  return m;
}

/// Square matrix of any size.
template <class F>
Mat<F> square_matrix_from_json(const F& f, const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw DomainError("shape_mismatch", what + " must be a nonempty array of rows");
  return matrix_from_json(f, j, j.size(), j.size(), what);
}

Json window_to_json(const Window& w, std::uint32_t q);
Json permutation_to_json(const AffinePermutation& p);
Json word_to_json(const ReducedWord& w);

template <class F>
Json lattice_to_json(const LatticeWindow<F>& l) {
  return {{"window", window_to_json(l.window(), l.field().modulus())},
          {"pivots", l.pivots()},
          {"basis", matrix_to_json(l.field(), l.basis())}};
}

template <class F>
Json flag_to_json(const LatticeFlag<F>& flag) {
  Json lattices = Json::array();
  for (const auto& l : flag.lattices) lattices.push_back(lattice_to_json(l));
  return {{"composition", flag.composition}, {"lattices", lattices}};
}

std::uint32_t field_of(const Json& j);

template <class F>
QuiverRep<F> quiver_from_json(const F& f, const Json& j) {
  if (!j.contains("d") || !j.contains("mats")) throw DomainError("bad_payload", "quiver needs keys d and mats");
  const DimensionVector dv(j.at("d").get<std::vector<int>>());
  const Json& mats = j.at("mats");
  if (!mats.is_array() || static_cast<int>(mats.size()) != dv.h())
    throw DomainError("shape_mismatch", "need one matrix per arrow");
  std::vector<Mat<F>> m;
  for (int k = 1; k <= dv.h(); ++k)
    m.push_back(matrix_from_json(f, mats[k - 1], dv.at(k - 1), dv.at(k), "M_" + std::to_string(k)));
  return QuiverRep<F>(f, dv, std::move(m));
}

template <class F>
Json quiver_to_json(const QuiverRep<F>& m) {
  Json mats = Json::array();
  for (const auto& x : m.mats) mats.push_back(matrix_to_json(m.field, x));
  return {{"d", m.dims.d}, {"mats", mats}, {"q", m.field.modulus()}};
}

Json rank_table_to_json(const RankTable& t);
RankTable rank_table_from_json(const Json& j);
Json multiplicities_to_json(const Multiplicities& m);

template <class F>
CircularComplex<F> complex_from_json(const F& f, const Json& j) {
  for (const char* key : {"a", "b", "X", "Y"})
    if (!j.contains(key)) throw DomainError("bad_payload", std::string("complex needs key ") + key);
  const int a = j.at("a").get<int>(), b = j.at("b").get<int>();
  if (a < 0 || b < 0) throw DomainError("bad_parameters", "block sizes must be nonnegative");
  return CircularComplex<F>(f, a, b, matrix_from_json(f, j.at("X"), b, a, "X"), matrix_from_json(f, j.at("Y"), a, b, "Y"));
}

template <class F>
Json complex_to_json(const CircularComplex<F>& l) {
  return {{"a", l.a}, {"b", l.b}, {"X", matrix_to_json(l.field, l.X)}, {"Y", matrix_to_json(l.field, l.Y)},
          {"q", l.field.modulus()}};
}

Json bs_to_json(const BSDiagram& d);

}  // namespace affsch
