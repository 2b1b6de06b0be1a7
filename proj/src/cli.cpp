#include "affsch/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "affsch/bott_samelson.hpp"
#include "affsch/circular.hpp"
#include "affsch/cyclic_quiver.hpp"
#include "affsch/enumerate.hpp"
#include "affsch/io.hpp"
#include "affsch/lusztig_phi.hpp"
#include "affsch/wiring.hpp"

namespace affsch {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "@path" reads a file, "-" reads stdin, anything else is the payload itself.
std::string read_payload(const std::string& text) {
  if (text == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read " + text.substr(1));
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  return text;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(read_payload(text));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid JSON payload: ") + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("bad integer '" + tok + "' in list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string bracket(const std::vector<Int>& v) { return "[" + join(v) + "]"; }

std::string render_word(const ReducedWord& w) {
  return "letters=" + join(w.letters) + " sigma=" + std::to_string(w.sigma_power);
}

struct Emitter {
  bool json = false;
  std::ostream& out;
  void operator()(const Json& j, const std::string& text) const {
    if (json)
      out << j.dump(2) << "\n";
    else
      out << text;
  }
};

struct PermArgs {
  int n = 0;
  std::string window;
  std::string word;
  Int sigma = 0;
  bool has_word = false;

  CLI::Option* word_opt = nullptr;

  void attach(CLI::App* sub, bool allow_word) {
    sub->add_option("-n,--period", n, "period n")->required();
    sub->add_option("window", window, "window notation such as [-2,2,6]");
    if (allow_word) {
      word_opt = sub->add_option("-w,--word", word, "letters of a word instead of a window, e.g. 2,1,2,0");
      sub->add_option("--sigma", sigma, "power of sigma in front of the word");
    }
  }

  AffinePermutation get() {
    has_word = word_opt && word_opt->count() > 0;
    if (has_word == !window.empty()) throw UsageError("give exactly one of a window or --word");
    if (has_word) return evaluate_word({n, sigma, parse_int_list(word)});
    return parse_window(window, n);
  }
};

Json lengths_json(const AffinePermutation& p) { return {{"permutation", permutation_to_json(p)}, {"length", length(p)}}; }

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Affine Schubert combinatorics, lattice models and their finite-field oracles", "affsch"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "write a single JSON document");

  PermArgs len_args, word_args, wiring_args, count_args;
  auto* len_cmd = app.add_subcommand("len", "Shi length of a permutation");
  len_args.attach(len_cmd, true);

  auto* word_cmd = app.add_subcommand("word", "greedy reduced word");
  word_args.attach(word_cmd, false);

  auto* bruhat_cmd = app.add_subcommand("bruhat", "Bruhat comparison p <= q, or the interval below p");
  int bruhat_n = 0;
  std::string bruhat_p, bruhat_q;
  bool bruhat_interval_flag = false;
  bruhat_cmd->add_option("-n,--period", bruhat_n)->required();
  bruhat_cmd->add_option("p", bruhat_p)->required();
  bruhat_cmd->add_option("q", bruhat_q);
  bruhat_cmd->add_flag("--interval", bruhat_interval_flag, "list every w <= p");

  auto* wiring_cmd = app.add_subcommand("wiring", "loop wiring diagram");
  wiring_args.attach(wiring_cmd, false);
  std::string format = "ascii";
  wiring_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

  auto* phi_cmd = app.add_subcommand("phi", "lattice of a nilpotent matrix");
  std::string phi_matrix, phi_jordan;
  std::uint32_t phi_q = 2;
  phi_cmd->add_option("matrix", phi_matrix, "JSON square matrix");
  phi_cmd->add_option("--jordan", phi_jordan, "Jordan type instead of a matrix, e.g. 2,1");
  phi_cmd->add_option("-q,--field", phi_q, "0 for Q, else a prime");

  auto* psi_cmd = app.add_subcommand("psi", "flag of a cyclic quiver representation or circular complex");
  std::string psi_payload;
  psi_cmd->add_option("payload", psi_payload, "JSON with keys d,mats or a,b,X,Y")->required();

  auto* ranks_cmd = app.add_subcommand("ranks", "rank table, multiplicities and orbit permutation");
  std::string ranks_payload;
  ranks_cmd->add_option("payload", ranks_payload, "JSON quiver representation or rank table")->required();

  auto* comp_cmd = app.add_subcommand("components", "component permutations of a dimension vector");
  std::string comp_d;
  comp_cmd->add_option("-d,--dims", comp_d, "dimension vector, e.g. 1,1,1")->required();

  int pa = 0, pb = 0, pc = 0;
  auto* pic_cmd = app.add_subcommand("pic", "block permutation of a circular component");
  auto* cable_cmd = app.add_subcommand("cable", "cable reduced word of a circular component");
  for (auto* sub : {pic_cmd, cable_cmd}) {
    sub->add_option("-a", pa)->required();
    sub->add_option("-b", pb)->required();
    sub->add_option("-c", pc)->required();
  }

  auto* count_cmd = app.add_subcommand("count", "F_q-points of a Schubert cell or variety");
  count_args.attach(count_cmd, true);
  std::uint32_t count_q = 2;
  std::string mode = "variety";
  bool count_opposite = false, count_serial = false;
  count_cmd->add_option("-q,--field", count_q);
  count_cmd->add_option("--mode", mode)->check(CLI::IsMember({"cell", "variety"}));
  count_cmd->add_flag("--opposite", count_opposite, "intersect with the opposite cell");
  count_cmd->add_flag("--serial", count_serial, "use the single-threaded reference");

  auto* bs_cmd = app.add_subcommand("bs", "Bott-Samelson diagram and point count");
  int bs_n = 0;
  std::string bs_word, bs_cable;
  Int bs_sigma = 0;
  std::uint32_t bs_q = 0;
  bool bs_opposite = false, bs_serial = false;
  bs_cmd->add_option("-n,--period", bs_n);
  bs_cmd->add_option("-w,--word", bs_word, "letters, e.g. 2,1,2,0");
  bs_cmd->add_option("--sigma", bs_sigma);
  bs_cmd->add_option("--cable", bs_cable, "a,b,c: use the cable word of pi_c");
  bs_cmd->add_option("-q,--field", bs_q, "count F_q-points (2 or 3)");
  bs_cmd->add_flag("--opposite", bs_opposite, "count only points over the opposite cell");
  bs_cmd->add_flag("--serial", bs_serial, "use the single-threaded reference");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what() + std::string("\n") + app.help());
  }

  const Emitter emit{json, out};

  if (len_cmd->parsed()) {
    const auto p = len_args.get();
    emit(lengths_json(p), std::to_string(length(p)) + "\n");
  } else if (word_cmd->parsed()) {
    const auto p = word_args.get();
    const auto w = greedy_reduced_word(p);
    emit({{"permutation", permutation_to_json(p)}, {"word", word_to_json(w)}}, render_word(w) + "\n");
  } else if (bruhat_cmd->parsed()) {
    const auto p = parse_window(bruhat_p, bruhat_n);
    if (bruhat_interval_flag) {
      Json list = Json::array();
      std::string text;
      for (const auto& w : bruhat_interval(p)) {
        list.push_back(lengths_json(w));
        text += w.to_string() + " len=" + std::to_string(length(w)) + "\n";
      }
      emit({{"permutation", permutation_to_json(p)}, {"interval", list}}, text);
    } else {
      if (bruhat_q.empty()) throw UsageError("bruhat needs two permutations or --interval");
      const auto q = parse_window(bruhat_q, bruhat_n);
      const bool leq = bruhat_leq(p, q);
      emit({{"p", lengths_json(p)}, {"q", lengths_json(q)}, {"leq", leq}}, std::string(leq ? "true" : "false") + "\n");
    }
  } else if (wiring_cmd->parsed()) {
    const auto p = wiring_args.get();
    const auto d = build_diagram(p);
    const std::string pic = render(d, format == "svg" ? RenderFormat::svg : RenderFormat::ascii);
    Json wires = Json::array(), crossings = Json::array();
    for (const auto& w : d.wires) wires.push_back({{"start", w.start}, {"end", w.end}, {"winding", w.winding}});
    for (const auto& c : d.crossings)
      crossings.push_back({{"column", c.column}, {"letter", c.letter}, {"upper", c.upper}, {"lower", c.lower}});
    emit({{"permutation", permutation_to_json(p)},
          {"word", word_to_json(d.word())},
          {"wires", wires},
          {"crossings", crossings},
          {"format", format},
          {"render", pic}},
         pic);
  } else if (phi_cmd->parsed()) {
    if (phi_matrix.empty() == phi_jordan.empty()) throw UsageError("phi needs exactly one of a matrix or --jordan");
    visit_field(phi_q, [&](const auto& f) {
      using F = std::decay_t<decltype(f)>;
      std::optional<NilpotentMatrix<F>> nm;
      if (!phi_jordan.empty()) {
        const auto parts = parse_int_list(phi_jordan);
        int n = 0;
        for (int x : parts) n += x;
        nm.emplace(jordan_matrix(f, make_jordan_type(parts, n)));
      } else {
        nm.emplace(f, square_matrix_from_json(f, parse_json(phi_matrix), "N"));
      }
      const auto b = jordan_type(*nm);
      const auto l = phi(*nm);
      const auto profile = phi_profile(*nm);
      const bool cell = verify_phi_cell(*nm);
      std::vector<Int> jt(b.b.begin(), b.b.end());
      emit({{"jordan", b.b},
            {"profile", profile},
            {"expected_profile", cell_profile(b).cprime},
            {"cell", cell},
            {"matrix", matrix_to_json(f, nm->matrix())},
            {"lattice", lattice_to_json(l)}},
           "jordan=" + bracket(jt) + "\nprofile=" + bracket(profile) + "\npivots=" + bracket(l.pivots()) +
               "\ncell=" + (cell ? "true" : "false") + "\n");
    });
  } else if (psi_cmd->parsed()) {
    const Json payload = parse_json(psi_payload);
    visit_field(field_of(payload), [&](const auto& f) {
      if (payload.contains("mats")) {
        const auto rep = quiver_from_json(f, payload);
        const auto flag = psi(rep);
        const auto p = flag_permutation(flag);
        const bool image = verify_psi_image(flag, rep.dims);
        std::string text = "permutation=" + p.to_string() + "\nimage=" + (image ? "true" : "false") + "\n";
        for (std::size_t m = 0; m < flag.lattices.size(); ++m)
          text += "L" + std::to_string(m + 1) + " pivots=" + bracket(flag.lattices[m].pivots()) + "\n";
        emit({{"kind", "quiver"}, {"permutation", permutation_to_json(p)}, {"image", image}, {"flag", flag_to_json(flag)}},
             text);
      } else {
        const auto cx = complex_from_json(f, payload);
        const auto flag = psi_circular(cx);
        const auto sig = orbit_ranks(cx);
        const auto [s1, s2] = circular_statistics(flag, cx.a, cx.b);
        std::vector<Int> components;
        for (int c = 0; c <= cx.a; ++c)
          if (verify_circular_image(flag, cx.a, cx.b, c)) components.push_back(c);
        emit({{"kind", "circular"},
              {"rank_x", sig.rank_x},
              {"rank_y", sig.rank_y},
              {"open", sig.open()},
              {"statistics", {s1, s2}},
              {"components", components},
              {"flag", flag_to_json(flag)}},
             "rank_x=" + std::to_string(sig.rank_x) + " rank_y=" + std::to_string(sig.rank_y) +
                 "\nopen=" + (sig.open() ? "true" : "false") + "\nstatistics=" + std::to_string(s1) + "," +
                 std::to_string(s2) + "\ncomponents=" + bracket(components) + "\n");
      }
    });
  } else if (ranks_cmd->parsed()) {
    const Json payload = parse_json(ranks_payload);
    RankTable t;
    if (payload.contains("r"))
      t = rank_table_from_json(payload);
    else
      t = visit_field(field_of(payload), [&](const auto& f) { return rank_table(quiver_from_json(f, payload)); });
    const auto mult = multiplicities(t);
    const auto p = orbit_permutation(t);
    std::string text = "d=[" + join(t.dims.d) + "]\n";
    for (int j = 1; j <= t.dims.h(); ++j) text += "r_" + std::to_string(j) + ": " + join(t.r[j - 1], " ") + "\n";
    text += "multiplicities:";
    for (const auto& [ind, count] : mult)
      if (count) text += " I_" + std::to_string(ind.j) + "^" + std::to_string(ind.k) + "x" + std::to_string(count);
    text += "\norbit=" + p.to_string() + " len=" + std::to_string(length(p)) + "\n";
    emit({{"ranks", rank_table_to_json(t)},
          {"multiplicities", multiplicities_to_json(mult)},
          {"orbit", lengths_json(p)}},
         text);
  } else if (comp_cmd->parsed()) {
    const DimensionVector dv(parse_int_list(comp_d));
    Json list = Json::array();
    std::string text;
    for (const auto& p : component_permutations(dv)) {
      list.push_back(lengths_json(p));
      text += p.to_string() + " len=" + std::to_string(length(p)) + "\n";
    }
    emit({{"d", dv.d}, {"components", list}}, text);
  } else if (pic_cmd->parsed()) {
    const auto p = pi_c(pa, pb, pc);
    emit(lengths_json(p), p.to_string() + "\nlen=" + std::to_string(length(p)) + "\n");
  } else if (cable_cmd->parsed()) {
    const auto w = cable_word(pa, pb, pc);
    const auto factors = cable_factors(pa, pb, pc);
    bool fc = true;
    for (const auto& f : factors) fc = fc && is_fully_commutative(f, w.n);
    const bool ok = evaluate_word(w) == pi_c(pa, pb, pc);
    emit({{"word", word_to_json(w)}, {"factors", factors}, {"factors_fully_commutative", fc}, {"evaluates_to_pi_c", ok}},
         render_word(w) + "\nfactors_fully_commutative=" + (fc ? "true" : "false") + "\nevaluates_to_pi_c=" +
             (ok ? "true" : "false") + "\n");
  } else if (count_cmd->parsed()) {
    const auto p = count_args.get();
    const SchubertMode m = mode == "cell" ? SchubertMode::cell : SchubertMode::variety;
    const std::uint64_t c = count_serial ? enumerate_flag_points_serial(p, count_q, m, count_opposite)
                                         : enumerate_flag_points(p, count_q, m, count_opposite);
    emit({{"permutation", permutation_to_json(p)}, {"q", count_q}, {"mode", mode}, {"opposite", count_opposite},
          {"points", c}},
         std::to_string(c) + "\n");
  } else if (bs_cmd->parsed()) {
    ReducedWord w;
    if (!bs_cable.empty()) {
      const auto abc = parse_int_list(bs_cable);
      if (abc.size() != 3) throw UsageError("--cable takes a,b,c");
      w = cable_word(abc[0], abc[1], abc[2]);
    } else {
      if (bs_n < 1) throw UsageError("bs needs -n with --word, or --cable");
      w = {bs_n, bs_sigma, parse_int_list(bs_word)};
    }
    const BSDiagram d = build_bs(w);
    Json j = bs_to_json(d);
    std::string text = "word: " + render_word(w) + "\nslots:";
    for (int id : d.letter_nodes) text += " " + d.nodes[id].name;
    text += "\n";
    for (const auto& c : d.constraints) text += d.describe(c) + "\n";
    if (bs_q != 0) {
      const std::uint64_t c =
          bs_serial ? count_bs_points_serial(d, bs_q, bs_opposite) : count_bs_points(d, bs_q, bs_opposite);
      j["q"] = bs_q;
      j["opposite"] = bs_opposite;
      j["points"] = c;
      text += "points=" + std::to_string(c) + "\n";
    }
    emit(j, text);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    if (e.name() == "parse_error") {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const Json::exception& e) {
    err << "error: bad_payload: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace affsch
