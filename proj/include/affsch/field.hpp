#pragma once

// Exact coefficient fields and the dense linear algebra used by every module.
//
// Algorithms are templated on a field object that owns the arithmetic; the
// element type is Field::Elem. PrimeField stores residues in [0, q) and is the
// workhorse for point counting; RationalField is exact over Q.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "affsch/error.hpp"

namespace affsch {

class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t q) : q_(q) {
    if (q < 2 || q > 65521) throw DomainError("bad_field", "modulus must be a prime in [2, 65521]");
    for (std::uint32_t d = 2; d * d <= q; ++d)
      if (q % d == 0) throw DomainError("bad_field", "modulus " + std::to_string(q) + " is not prime");
  }

  std::uint32_t modulus() const { return q_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<Elem>(r < 0 ? r + q_ : r);
  }
  std::int64_t to_int(Elem a) const { return a; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= q_ ? s - q_ : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + q_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(q-2)
    std::uint64_t base = a, acc = 1;
    for (std::uint32_t e = q_ - 2; e; e >>= 1) {
      if (e & 1) acc = acc * base % q_;
      base = base * base % q_;
    }
    return static_cast<Elem>(acc);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  std::string describe(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t q_;
};

class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  std::uint32_t modulus() const { return 0; }
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  std::string describe(const Elem& a) const { return a.str(); }

  bool operator==(const RationalField&) const = default;
};

/// Calls fn(field) with a PrimeField for q >= 2 or a RationalField for q == 0.
template <class Fn>
decltype(auto) visit_field(std::uint32_t q, Fn&& fn) {
  if (q == 0) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{q});
}

// Dense row-major matrix; rows are the natural unit for subspace bases.
template <class E>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<E> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const E& fill) : rows(r), cols(c), data(r * c, fill) {}

  E& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool operator==(const Matrix&) const = default;
};

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
using Mat = Matrix<typename F::Elem>;

template <class F>
Mat<F> zero_matrix(const F& f, std::size_t r, std::size_t c) {
  return Mat<F>(r, c, f.zero());
}

template <class F>
Mat<F> identity_matrix(const F& f, std::size_t n) {
  Mat<F> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
Mat<F> matrix_from_ints(const F& f, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Mat<F> m(r, c, f.zero());
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("shape_mismatch", "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

template <class F>
Mat<F> multiply(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.cols != b.rows) throw DomainError("shape_mismatch", "matrix product shapes");
  Mat<F> c(a.rows, b.cols, f.zero());
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

template <class F>
Mat<F> add(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DomainError("shape_mismatch", "matrix sum shapes");
  Mat<F> c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = f.add(a.data[i], b.data[i]);
  return c;
}

template <class F>
bool is_zero_matrix(const F& f, const Mat<F>& a) {
  for (const auto& x : a.data)
    if (!f.is_zero(x)) return false;
  return true;
}

/// Row-reduces m in place to reduced echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(const F& f, Mat<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && f.is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.data.resize(r * m.cols);
  return pivots;
}

template <class F>
std::size_t rank(const F& f, Mat<F> m) {
  return rref_in_place(f, m).size();
}

template <class F>
Mat<F> transpose(const Mat<F>& a) {
  Mat<F> t(a.cols, a.rows, a.data.empty() ? typename F::Elem{} : a.data.front());
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

/// Inverse of a square matrix; throws DomainError("singular_matrix") if singular.
template <class F>
Mat<F> inverse(const F& f, const Mat<F>& a) {
  if (a.rows != a.cols) throw DomainError("shape_mismatch", "inverse of non-square matrix");
  const std::size_t n = a.rows;
  Mat<F> aug(n, 2 * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  auto piv = rref_in_place(f, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DomainError("singular_matrix", "matrix is not invertible");
  Mat<F> inv(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class F>
Mat<F> power(const F& f, const Mat<F>& a, std::size_t k) {
  Mat<F> r = identity_matrix(f, a.rows);
  for (std::size_t i = 0; i < k; ++i) r = multiply(f, r, a);
  return r;
}

template <class F>
std::vector<std::vector<std::int64_t>> to_int_rows(const F& f, const Mat<F>& m)
  requires std::is_same_v<F, PrimeField>
{
  std::vector<std::vector<std::int64_t>> out(m.rows, std::vector<std::int64_t>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i][j] = f.to_int(m(i, j));
  return out;
}

}  // namespace affsch
