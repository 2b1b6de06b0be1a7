#include "affsch/io.hpp"

namespace affsch {

PrimeField::Elem elem_from_json(const PrimeField& f, const Json& j) {
  if (!j.is_number_integer()) throw DomainError("bad_entry", "prime-field entries must be integers");
  return f.from_int(j.get<std::int64_t>());
}

RationalField::Elem elem_from_json(const RationalField&, const Json& j) {
  if (j.is_number_integer()) return RationalField::Elem(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return RationalField::Elem(boost::multiprecision::cpp_int(s));
      const boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw DomainError("bad_entry", "zero denominator in " + s);
      return RationalField::Elem(num, den);
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const DomainError*>(&e)) throw;
      throw DomainError("bad_entry", "cannot read rational " + s);
    }
  }
  throw DomainError("bad_entry", "rational entries must be integers or \"p/q\" strings");
}

Json window_to_json(const Window& w, std::uint32_t q) { return {{"n", w.n}, {"lo", w.lo}, {"hi", w.hi}, {"q", q}}; }

Json permutation_to_json(const AffinePermutation& p) {
  return {{"n", p.n()}, {"window", p.window()}, {"text", p.to_string()}};
}

Json word_to_json(const ReducedWord& w) {
  return {{"n", w.n}, {"sigma_power", w.sigma_power}, {"letters", w.letters}};
}

std::uint32_t field_of(const Json& j) {
  if (!j.contains("q")) return 0;
  const auto q = j.at("q").get<std::int64_t>();
  if (q < 0 || q > 65521) throw DomainError("bad_field", "q must be 0 or a prime up to 65521");
  return static_cast<std::uint32_t>(q);
}

Json rank_table_to_json(const RankTable& t) {
  Json r = Json::object();
  for (int j = 1; j <= t.dims.h(); ++j)
    for (Int k = 0; k <= t.max_k(); ++k) r[std::to_string(j) + "," + std::to_string(k)] = t.at(j, k);
  return {{"d", t.dims.d}, {"r", r}};
}

RankTable rank_table_from_json(const Json& j) {
  if (!j.contains("d") || !j.contains("r")) throw DomainError("bad_payload", "rank table needs keys d and r");
  RankTable t{DimensionVector(j.at("d").get<std::vector<int>>()), {}};
  const int h = t.dims.h();
  Int kmax = -1;
  for (const auto& [key, value] : j.at("r").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw DomainError("bad_payload", "rank keys look like \"j,k\"");
    kmax = std::max<Int>(kmax, std::stoll(key.substr(comma + 1)));
  }
  if (kmax < 0) throw DomainError("bad_payload", "empty rank table");
  t.r.assign(h, std::vector<Int>(static_cast<std::size_t>(kmax + 1), -1));
  for (const auto& [key, value] : j.at("r").items()) {
    const auto comma = key.find(',');
    const int row = std::stoi(key.substr(0, comma));
    const Int k = std::stoll(key.substr(comma + 1));
    if (row < 1 || row > h || k < 0) throw DomainError("bad_payload", "rank key " + key + " out of range");
    t.r[row - 1][static_cast<std::size_t>(k)] = value.get<Int>();
  }
  for (const auto& row : t.r)
    for (Int v : row)
      if (v < 0) throw DomainError("bad_payload", "rank table has missing entries");
  t.validate();
  return t;
}

Json multiplicities_to_json(const Multiplicities& m) {
  Json out = Json::array();
  for (const auto& [ind, count] : m)
    if (count != 0) out.push_back({{"j", ind.j}, {"k", ind.k}, {"count", count}});
  return out;
}

Json bs_to_json(const BSDiagram& d) {
  Json slots = Json::array(), fixed = Json::array(), edges = Json::array(), finals = Json::array();
  for (int id : d.letter_nodes) slots.push_back({{"name", d.nodes[id].name}, {"slot", d.nodes[id].slot}});
  for (const auto& node : d.nodes)
    if (node.fixed) fixed.push_back(node.name);
  for (const auto& c : d.constraints)
    edges.push_back({{"upper", d.nodes[c.upper].name},
                     {"upper_t", c.upper_t},
                     {"lower", d.nodes[c.lower].name},
                     {"lower_t", c.lower_t},
                     {"text", d.describe(c)}});
  for (int id : d.final_nodes) finals.push_back(d.nodes[id].name);
  return {{"word", word_to_json(d.word)}, {"slots", slots},  {"fixed", fixed},
          {"edges", edges},               {"final", finals}, {"window", window_to_json(d.window, 0)}};
}

}  // namespace affsch
