#include "affsch/affine_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "affsch/error.hpp"

namespace affsch {

bool TranslationVector::sums_to_zero() const {
  return std::accumulate(c.begin(), c.end(), Int{0}) == 0;
}

AffinePermutation::AffinePermutation(int n, std::vector<Int> window) : n_(n), window_(std::move(window)) {
  if (n < 1) throw DomainError("bad_period", "period n must be positive");
  if (static_cast<int>(window_.size()) != n)
    throw DomainError("arity_mismatch", "window has " + std::to_string(window_.size()) +
                                            " entries, expected " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (Int v : window_) {
    const Int r = residue1(v, n) - 1;
    if (seen[r]) throw DomainError("residue_collision", "not a bijection of Z/nZ: " + to_string());
    seen[r] = true;
  }
}

AffinePermutation AffinePermutation::identity(int n) { return shift(n, 0); }

AffinePermutation AffinePermutation::shift(int n, Int power) {
  std::vector<Int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1 + power;
  return AffinePermutation(n, std::move(w));
}

AffinePermutation AffinePermutation::simple_reflection(int n, Int i) {
  if (n < 2) throw DomainError("bad_period", "simple reflections need n >= 2");
  const Int k = floor_div(i, n) * n;
  i -= k;  // now in [0, n-1]
  std::vector<Int> w(n);
  for (int j = 0; j < n; ++j) w[j] = j + 1;
  if (i == 0) {
    w[0] = 0;
    w[n - 1] = n + 1;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return AffinePermutation(n, std::move(w));
}

AffinePermutation AffinePermutation::translation(const TranslationVector& c) {
  std::vector<Int> w(c.n);
  for (int i = 0; i < c.n; ++i) w[i] = i + 1 + static_cast<Int>(c.n) * c.c.at(i);
  return AffinePermutation(c.n, std::move(w));
}

AffinePermutation AffinePermutation::finite(const std::vector<Int>& perm) {
  const int n = static_cast<int>(perm.size());
  for (Int v : perm)
    if (v < 1 || v > n) throw DomainError("not_a_permutation", "finite permutation entries must lie in [1, n]");
  return AffinePermutation(n, perm);
}

Int AffinePermutation::operator()(Int i) const {
  const Int k = residue1(i, n_);
  return window_[k - 1] + (i - k);
}

Int AffinePermutation::inverse_at(Int v) const {
  const Int r = residue1(v, n_);
  for (int k = 0; k < n_; ++k)
    if (residue1(window_[k], n_) == r) return k + 1 + (v - window_[k]);
  throw DomainError("residue_collision", "corrupt affine permutation");
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<Int> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = inverse_at(i + 1);
  return AffinePermutation(n_, std::move(w));
}

std::string AffinePermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < window_.size(); ++i) os << (i ? "," : "") << window_[i];
  os << ']';
  return os.str();
}

AffinePermutation compose(const AffinePermutation& p, const AffinePermutation& q) {
  if (p.n() != q.n()) throw DomainError("period_mismatch", "cannot compose elements with different n");
  std::vector<Int> w(p.n());
  for (int i = 0; i < p.n(); ++i) w[i] = p(q.window()[i]);
  return AffinePermutation(p.n(), std::move(w));
}

AffinePermutation parse_window(const std::string& text, int n) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw DomainError("parse_error", "expected a bracketed list like [1,2,3], got '" + text + "'");
  std::vector<Int> w;
  const std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      char* end = nullptr;
      const long long v = std::strtoll(tok.c_str(), &end, 10);
      if (tok.empty() || *end != '\0') throw DomainError("parse_error", "bad integer '" + tok + "'");
      w.push_back(v);
    }
  }
  return AffinePermutation(n, std::move(w));
}

Decomposition decompose(const AffinePermutation& p) {
  const int n = p.n();
  Decomposition d{std::vector<Int>(n), TranslationVector{n, std::vector<Int>(n)}};
  for (int i = 0; i < n; ++i) {
    const Int v = p.window()[i];
    d.finite[i] = residue1(v, n);
    d.c.c[i] = (v - d.finite[i]) / n;
  }
  return d;
}

AffinePermutation recompose(const Decomposition& d) {
  return compose(AffinePermutation::finite(d.finite), AffinePermutation::translation(d.c));
}

Int length(const AffinePermutation& p) {
  const int n = p.n();
  const auto& w = p.window();
  Int total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) total += std::abs(floor_div(w[j] - w[i], n));
  return total;
}

Int component_index(const AffinePermutation& p) {
  Int s = 0;
  for (int i = 0; i < p.n(); ++i) s += p.window()[i] - (i + 1);
  return s / p.n();  // always exact: the residues form a complete system
}

Int count_below(const AffinePermutation& p, Int i, Int j) {
  const Int n = p.n();
  Int total = 0;
  for (Int k = i; k < i + n; ++k) {
    const Int gap = j - p(k);
    if (gap > 0) total += (gap + n - 1) / n;
  }
  return total;
}

AffinePermutation evaluate_word(const ReducedWord& w) {
  AffinePermutation cur = AffinePermutation::shift(w.n, w.sigma_power);
  for (int letter : w.letters) {
    if (letter < 0 || letter >= w.n)
      throw DomainError("letter_out_of_range", "letter " + std::to_string(letter) + " not in [0, n-1]");
    cur = compose(cur, AffinePermutation::simple_reflection(w.n, letter));
  }
  return cur;
}

bool has_right_descent(const AffinePermutation& p, int i) { return p(i) > p(i + 1); }

bool has_left_descent(const AffinePermutation& p, int i) { return p.inverse_at(i) > p.inverse_at(i + 1); }

ReducedWord greedy_reduced_word(const AffinePermutation& p) {
  const int n = p.n();
  AffinePermutation cur = p;
  std::vector<int> peeled;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < n && n > 1; ++i)
      if (has_right_descent(cur, i)) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    cur = compose(cur, AffinePermutation::simple_reflection(n, descent));
    peeled.push_back(descent);
  }
  // no descents left: cur is a pure shift
  ReducedWord w{n, cur.window()[0] - 1, {}};
  w.letters.assign(peeled.rbegin(), peeled.rend());
  return w;
}

bool is_reduced(const ReducedWord& w) {
  return static_cast<Int>(w.letters.size()) == length(evaluate_word(w));
}

bool bruhat_leq(const AffinePermutation& p, const AffinePermutation& q) {
  if (p.n() != q.n()) throw DomainError("period_mismatch", "cannot compare elements with different n");
  if (component_index(p) != component_index(q)) return false;
  const Int n = p.n();
  const auto [pmin, pmax] = std::minmax_element(p.window().begin(), p.window().end());
  const auto [qmin, qmax] = std::minmax_element(q.window().begin(), q.window().end());
  const Int lo = std::min(*pmin, *qmin) - n;
  const Int hi = std::max(*pmax, *qmax) + n;
  for (Int i = 1; i <= n; ++i)
    for (Int j = lo; j <= hi; ++j)
      if (count_below(p, i, j) > count_below(q, i, j)) return false;
  return true;
}

std::set<AffinePermutation> bruhat_interval(const AffinePermutation& p) {
  const ReducedWord w = greedy_reduced_word(p);
  const std::size_t len = w.letters.size();
  if (static_cast<Int>(len) > kMaxIntervalLength)
    throw DomainError("length_guard", "bruhat_interval needs length <= " + std::to_string(kMaxIntervalLength));
  std::vector<AffinePermutation> gens;
  for (int letter : w.letters) gens.push_back(AffinePermutation::simple_reflection(w.n, letter));
  const AffinePermutation base = AffinePermutation::shift(w.n, w.sigma_power);
  std::set<AffinePermutation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    AffinePermutation cur = base;
    for (std::size_t k = 0; k < len; ++k)
      if (mask >> k & 1) cur = compose(cur, gens[k]);
    out.insert(cur);
  }
  return out;
}

std::pair<Int, Int> sandwich_bounds(const AffinePermutation& p) {
  const auto& w = p.window();
  const Int a = *std::min_element(w.begin(), w.end());
  Int top = p(0);
  for (Int k = 1; k < p.n(); ++k) top = std::max(top, p(k));
  return {a, top + 1};
}

AffinePermutation min_coset_representative(const AffinePermutation& p, const std::vector<int>& d) {
  if (std::accumulate(d.begin(), d.end(), 0) != p.n())
    throw DomainError("bad_composition", "composition does not sum to n");
  std::vector<Int> w = p.window();
  auto it = w.begin();
  for (int part : d) {
    if (part <= 0) throw DomainError("bad_composition", "composition parts must be positive");
    std::sort(it, it + part);
    it += part;
  }
  return AffinePermutation(p.n(), std::move(w));
}

}  // namespace affsch
