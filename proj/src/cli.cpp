#include "fpcyc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "fpcyc/aut_verify.hpp"
#include "fpcyc/serialize.hpp"

namespace fpcyc::cli {

namespace {

/// Bad input detected after option parsing; maps to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string orders;
  std::string format = "text";
  std::string input;
  std::string output;
  std::string k;
  std::string lemma = "helly";
  std::string aut;
  std::string mode = "m2";
  std::string keep;
  std::vector<std::string> words;
  std::vector<std::string> gens;
  std::uint64_t seed = 0;
  int n = 3;
  int radius = 4;
  int trials = 1000;
  int fuzz = 0;
  int max_vertices = 50;
  int brute_force = -1;
};

std::string caret(const std::string& text, std::size_t pos) {
  return "  " + text + "\n  " + std::string(std::min(pos, text.size()), ' ') + "^";
}

Signature signature_arg(const std::string& text) {
  if (text.empty()) throw UsageError("--orders is required");
  try {
    return parse_signature(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad signature: ") + e.what() + "\n" + caret(text, e.position()));
  }
}

Word word_arg(const Signature& sig, const std::string& text) {
  try {
    return parse_word(sig, text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad word: ") + e.what() + "\n" + caret(text, e.position()));
  }
}

Automorphism aut_arg(const Signature& sig, const std::string& text) {
  if (text.empty()) throw UsageError("an automorphism is required");
  try {
    return parse_automorphism(sig, text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad automorphism: ") + e.what() + "\n" + caret(text, e.position()));
  }
}

/// "K" or "A..B".
std::pair<int, int> range_arg(const std::string& text, std::pair<int, int> fallback) {
  if (text.empty()) return fallback;
  try {
    std::size_t dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int k = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {k, k};
    }
    int a = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    std::string rest = text.substr(dots + 2);
    int b = std::stoi(rest, &used);
    if (used != rest.size() || a > b) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "', expected K or A..B");
  }
}

std::set<int> int_set_arg(const std::string& text) {
  if (text.empty()) return {};
  Signature parsed = signature_arg(text);
  return {parsed.orders().begin(), parsed.orders().end()};
}

TreeMode mode_arg(const std::string& text) { return text == "m3" ? TreeMode::M3 : TreeMode::M2; }

Json read_json_file(const std::string& path) {
  if (path.empty()) throw UsageError("--input FILE is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

TreeProblem tree_problem_arg(const std::string& path) {
  Json j = read_json_file(path);
  try {
    return tree_problem_from_json(j);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int emit_report(std::ostream& out, const Report& report, const std::string& format) {
  if (format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << report.to_lines();
    out << "SUMMARY " << report.checks.size() << " checks, " << report.failures() << " failures\n";
  }
  return report.all_passed() ? 0 : 1;
}

// --- word ---------------------------------------------------------------------

int word_command(const std::string& cmd, const Options& o, std::ostream& out) {
  Signature sig = signature_arg(o.orders);
  std::vector<Word> w;
  for (const auto& t : o.words) w.push_back(word_arg(sig, t));
  auto need = [&](std::size_t count) {
    if (w.size() < count) throw UsageError(cmd + " needs " + std::to_string(count) + " word(s)");
  };
  bool json = o.format == "json";
  Json j;
  if (cmd == "reduce") {
    need(1);
    CyclicReduction r = cyclically_reduce(w[0]);
    if (json) {
      j = {{"core", r.core.to_string()}, {"conjugator", r.conjugator.to_string()}};
    } else {
      out << "core " << r.core.to_string() << "\nconjugator " << r.conjugator.to_string() << '\n';
    }
  } else if (cmd == "mul") {
    need(1);
    Word p(sig);
    for (const Word& x : w) p = p * x;
    if (json) j = {{"product", p.to_string()}};
    else out << p.to_string() << '\n';
  } else if (cmd == "inv") {
    need(1);
    if (json) j = {{"inverse", invert(w[0]).to_string()}};
    else out << invert(w[0]).to_string() << '\n';
  } else if (cmd == "order") {
    need(1);
    ElementOrder ord = order(w[0]);
    std::string text = ord ? std::to_string(*ord) : "inf";
    if (json) j = {{"order", text}};
    else out << text << '\n';
  } else {
    need(2);
    bool c = is_conjugate(w[0], w[1]);
    if (json) j = {{"conjugate", c}};
    else out << (c ? "true" : "false") << '\n';
  }
  if (json) {
    Json doc = {{"schema", kSchemaVersion}, {"kind", "word-" + cmd}, {"signature", sig.orders()}};
    doc.update(j);
    out << doc.dump(2) << '\n';
  }
  return 0;
}

// --- aut ----------------------------------------------------------------------

int aut_command(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "verify-fr3") return emit_report(out, verify_fr_presentation_m3(o.n), o.format);
  if (cmd == "verify-phipsi") return emit_report(out, verify_phi_psi_m3(o.n), o.format);
  Signature sig = signature_arg(o.orders);
  if (cmd == "verify-relations") return emit_report(out, verify_generator_relations(sig), o.format);
  if (cmd == "commutation-table") {
    CommutationTable t = partial_conj_commutation_table(sig);
    Report r;
    for (const auto& e : t.entries) {
      std::string name = pc_label(e.a) + "," + pc_label(e.b);
      std::string verdict = std::string(e.commute ? "commute" : "noncommute") +
                            (e.condition ? "/condition" : "/no-condition");
      r.add(name, !e.condition || e.commute, verdict);
    }
    return emit_report(out, r, o.format);
  }
  if (cmd == "apply") {
    Automorphism f = aut_arg(sig, o.aut);
    if (o.words.empty()) throw UsageError("apply needs a word");
    for (const auto& t : o.words) out << f.apply(word_arg(sig, t)).to_string() << '\n';
    return 0;
  }
  // `compose F G` prints F o G, with G applied first.
  if (o.words.empty()) throw UsageError("compose needs at least one automorphism");
  Automorphism f = Automorphism::identity(sig);
  for (const auto& t : o.words) f = f * aut_arg(sig, t);
  out << f.to_string() << '\n';
  return 0;
}

// --- tree ---------------------------------------------------------------------

int fuzz_campaign(FuzzKind kind, const Options& o, int trials, std::pair<int, int> k, std::ostream& out) {
  FuzzOptions opts;
  opts.seed = o.seed;
  opts.trials = trials;
  opts.max_vertices = o.max_vertices;
  opts.k_min = k.first;
  opts.k_max = k.second;
  FuzzReport r = run_fuzz(kind, opts);
  out << r.summary() << '\n';
  if (r.first_failure) {
    Json j = to_json(*r.first_failure, kind);
    if (o.output.empty()) {
      out << j.dump(2) << '\n';
    } else {
      std::ofstream(o.output) << j.dump(2) << '\n';
      out << "COUNTEREXAMPLE written to " << o.output << '\n';
    }
  }
  return r.failures == 0 ? 0 : 1;
}

std::string pair_text(const std::optional<std::pair<int, int>>& p) {
  return p ? std::to_string(p->first) + " " + std::to_string(p->second) : "-";
}

int tree_command(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "fuzz") {
    static const std::map<std::string, FuzzKind> kinds = {
        {"helly", FuzzKind::Helly}, {"cycle", FuzzKind::Cycle}, {"diagonal", FuzzKind::Diagonal}, {"fixed", FuzzKind::Fixed}};
    FuzzKind kind = kinds.at(o.lemma);
    std::pair<int, int> fallback = kind == FuzzKind::Cycle ? std::pair{4, 8} : std::pair{2, 8};
    return fuzz_campaign(kind, o, o.fuzz > 0 ? o.fuzz : o.trials, range_arg(o.k, fallback), out);
  }
  FuzzKind kind = cmd == "helly" ? FuzzKind::Helly : cmd == "cycle" ? FuzzKind::Cycle : FuzzKind::Diagonal;
  if (o.fuzz > 0) {
    std::pair<int, int> fallback = kind == FuzzKind::Cycle ? std::pair{4, 8} : std::pair{2, 8};
    return fuzz_campaign(kind, o, o.fuzz, range_arg(o.k, fallback), out);
  }
  TreeProblem p = tree_problem_arg(o.input);
  if (o.format == "dot") {
    out << to_dot(*p.tree);
    return 0;
  }
  Json j = {{"schema", kSchemaVersion}, {"kind", cmd}};
  int code = 0;
  if (kind == FuzzKind::Helly) {
    HellyVerdict v = check_helly(p.family);
    code = v.outcome == Outcome::Counterexample ? 1 : 0;
    j["outcome"] = to_string(v.outcome);
    if (v.common_vertex) j["common_vertex"] = *v.common_vertex;
    if (v.disjoint_pair) j["disjoint_pair"] = {v.disjoint_pair->first, v.disjoint_pair->second};
    if (o.format == "text") {
      out << "OUTCOME " << to_string(v.outcome) << '\n';
      if (v.common_vertex) out << "COMMON-VERTEX " << *v.common_vertex << '\n';
      if (v.disjoint_pair) out << "DISJOINT-PAIR " << pair_text(v.disjoint_pair) << '\n';
    }
  } else if (kind == FuzzKind::Cycle) {
    CycleVerdict v = check_subtree_cycle(p.family);
    code = v.outcome == Outcome::Counterexample ? 1 : 0;
    j["outcome"] = to_string(v.outcome);
    if (v.pair) j["pair"] = {v.pair->first, v.pair->second};
    if (o.format == "text") {
      out << "OUTCOME " << to_string(v.outcome) << '\n';
      out << (v.outcome == Outcome::Holds ? "MEETING-PAIR " : "PAIR ") << pair_text(v.pair) << '\n';
    }
  } else {
    if (p.family.size() != 4) throw UsageError("diagonal needs a family of four subtrees a1 a2 b1 b2");
    DiagonalVerdict v = check_diagonal(p.family[0], p.family[1], p.family[2], p.family[3]);
    code = v.counterexample() ? 1 : 0;
    j["diagonal"] = v.to_string();
    if (o.format == "text") out << "DIAGONAL " << v.to_string() << '\n';
  }
  if (o.format == "json") out << j.dump(2) << '\n';
  return code;
}

// --- bass ---------------------------------------------------------------------

std::vector<ActionGenerator> gens_arg(TreeMode mode, int n, const std::vector<std::string>& given,
                                      std::vector<std::string> fallback) {
  const auto& texts = given.empty() ? fallback : given;
  std::vector<ActionGenerator> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_action_generator(mode, n, t));
    } catch (const ParseError& e) {
      throw UsageError(std::string("bad generator: ") + e.what() + "\n" + caret(t, e.position()));
    }
  }
  return out;
}

std::vector<std::string> default_gens(TreeMode mode, bool with_perm) {
  std::vector<std::string> g = mode == TreeMode::M2 ? std::vector<std::string>{"a", "b"}
                                                    : std::vector<std::string>{"y1", "y2", "y3"};
  if (with_perm) g.push_back("perm:(1 2)");
  return g;
}

void emit_ball(std::ostream& out, const TreeBall& ball, const std::string& format) {
  if (format == "json") {
    out << to_json(ball).dump(2) << '\n';
    return;
  }
  if (format == "dot") {
    out << to_dot(ball);
    return;
  }
  out << "BALL " << (ball.mode() == TreeMode::M2 ? "m2" : "m3") << " n=" << ball.n() << " radius=" << ball.radius()
      << " vertices=" << ball.size() << " edges=" << ball.tree()->edges().size() << '\n';
  for (int v = 0; v < static_cast<int>(ball.size()); ++v) {
    out << "VERTEX " << v << ' ' << ball.label(v) << " depth=" << ball.depth()[static_cast<std::size_t>(v)]
        << (ball.boundary(v) ? " boundary" : "") << '\n';
  }
  for (auto [u, v] : ball.tree()->edges()) out << "EDGE " << ball.label(u) << ' ' << ball.label(v) << '\n';
}

std::string labels(const TreeBall& ball, const std::vector<int>& vs) {
  if (vs.empty()) return "none";
  std::string s;
  for (int v : vs) s += (s.empty() ? "" : " ") + ball.label(v);
  return s;
}

int bass_command(const std::string& cmd, const Options& o, std::ostream& out) {
  TreeMode mode = mode_arg(o.mode);
  if (o.n < 2) throw UsageError("--n must be at least 2");
  if (o.radius < 0) throw UsageError("--radius must be non-negative");
  if (cmd == "amalgam") {
    AmalgamReport r = mode == TreeMode::M2 ? amalgam_report_m2(o.n, o.radius) : amalgam_report_m3(o.n, o.radius);
    if (o.format == "text") {
      out << "VERTEX-GROUP-1 " << r.vertex_group_1 << " expected " << r.expected_1 << '\n'
          << "VERTEX-GROUP-2 " << r.vertex_group_2 << " expected " << r.expected_2 << '\n'
          << "EDGE-GROUP " << r.edge_group << " expected " << r.expected_edge << '\n'
          << "CANDIDATES " << r.candidates << '\n'
          << "EDGES-REACHED " << r.edges_reached << " of " << r.edges_total << '\n';
    }
    return emit_report(out, r.checks, o.format);
  }
  TreeBall ball = build_ball(mode, o.n, o.radius);
  if (cmd == "ball") {
    emit_ball(out, ball, o.format);
    return 0;
  }
  if (cmd == "action") {
    int code = 0;
    for (const auto& g : gens_arg(mode, o.n, o.gens, default_gens(mode, true))) {
      for (const auto& line : action_table(ball, g)) out << line << '\n';
      PartialMap m = extend_action(ball, g);
      out << "CHECK " << to_string(g, mode) << " broken-edges=" << m.broken_edges.size()
          << " injective=" << (m.injective ? "yes" : "no") << '\n';
      if (!m.broken_edges.empty() || !m.injective) code = 1;
    }
    return code;
  }
  if (cmd == "no-fixed-point") {
    auto gens = gens_arg(mode, o.n, o.gens, default_gens(mode, false));
    FixedPointReport r = verify_no_global_fixed_point(ball, gens);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out << "FIXED " << to_string(gens[i], mode) << ' ' << labels(ball, r.fixed_by[i]) << '\n';
    }
    out << "COMMON " << labels(ball, r.fixed_by_all) << '\n';
    return r.no_global_fixed_point() ? 0 : 1;
  }
  // subdivide
  TreeBall sd = barycentric_subdivide(ball);
  if (o.format != "text") {
    emit_ball(out, sd, o.format);
    return 0;
  }
  int code = 0;
  out << "SUBDIVIDED vertices=" << sd.size() << " edges=" << sd.tree()->edges().size() << '\n';
  for (const auto& g : gens_arg(mode, o.n, o.gens, default_gens(mode, true))) {
    PartialMap m = extend_action(sd, g);
    out << "GEN " << to_string(g, mode) << " inversions=" << m.inversions.size()
        << " broken-edges=" << m.broken_edges.size() << '\n';
    if (!m.inversions.empty() || !m.broken_edges.empty()) code = 1;
  }
  return code;
}

// --- invariants -----------------------------------------------------------------

std::vector<int> orders_to_check(const Signature& sig, const std::string& k) {
  if (!k.empty()) {
    auto [a, b] = range_arg(k, {0, 0});
    std::vector<int> out;
    for (int v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  std::set<int> s(sig.orders().begin(), sig.orders().end());
  return {s.begin(), s.end()};
}

int invariants_command(const std::string& cmd, const Options& o, std::ostream& out) {
  Signature sig = signature_arg(o.orders);
  if (cmd == "census") {
    ConjugacyCensus c = o.brute_force >= 0 ? conjugacy_census_brute_force(sig, o.brute_force) : conjugacy_census(sig);
    if (o.format == "json") out << to_json(c).dump(2) << '\n';
    else out << c.to_string() << '\n';
    return 0;
  }
  if (cmd == "occurrences") {
    ConjugacyCensus c = conjugacy_census(sig);
    Json rows = Json::array();
    for (int k : orders_to_check(sig, o.k)) {
      if (k < 2) throw UsageError("k must be at least 2");
      Occurrences v = occurrences(c, k);
      if (o.format == "json") {
        rows.push_back({{"k", k}, {"corrected", v.corrected}, {"literal", v.literal}, {"mismatch", v.mismatch()}});
      } else {
        out << "k=" << k << " corrected=" << v.corrected << " literal=" << v.literal
            << (v.mismatch() ? " PAPER-FORMULA-MISMATCH" : "") << '\n';
      }
    }
    if (o.format == "json") {
      out << Json{{"schema", kSchemaVersion}, {"kind", "occurrences"}, {"signature", sig.orders()}, {"rows", rows}}.dump(2)
          << '\n';
    }
    return 0;
  }
  if (cmd == "characteristic") {
    Report all;
    for (int k : orders_to_check(sig, o.k)) {
      if (order_class(sig, k).empty()) throw UsageError("order " + std::to_string(k) + " does not occur");
      Report r = is_characteristic_Nk(sig, k);
      all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
    }
    return emit_report(out, all, o.format);
  }
  if (cmd == "induce") {
    std::set<int> keep = int_set_arg(o.keep);
    if (keep.empty()) throw UsageError("--keep ORDERS is required");
    if (o.aut.empty()) return emit_report(out, surjectivity_check(sig, keep), o.format);
    std::set<int> kill;
    for (int i = 0; i < sig.rank(); ++i) {
      if (!keep.count(sig.order(i))) kill.insert(i);
    }
    Automorphism q = induced_automorphism(aut_arg(sig, o.aut), kill);
    out << "QUOTIENT " << q.signature().to_string() << '\n' << "IMAGE " << q.to_string() << '\n';
    return 0;
  }
  // fa-certificate
  FACaseCertificate cert = fa_case_certificate(sig);
  if (o.format == "json") {
    out << to_json(cert).dump(2) << '\n';
  } else {
    for (const auto& p : cert.pairs) {
      out << "PAIR " << pc_label(p.first) << ' ' << pc_label(p.second) << ' ' << to_string(p.label);
      if (!p.aux.empty()) {
        out << " aux=";
        for (std::size_t i = 0; i < p.aux.size(); ++i) out << (i ? "," : "") << p.aux[i] + 1;
      }
      out << (p.checks.all_passed() ? " VERIFIED" : " FAILED") << '\n';
      for (const auto& c : p.checks.checks) {
        if (!c.passed) out << "  FAIL " << c.name << ' ' << (c.witness.empty() ? "-" : c.witness) << '\n';
      }
    }
    out << "PAIRS " << cert.pairs.size() << " commuting=" << cert.count(FACase::Commuting)
        << " case1=" << cert.count(FACase::Case1) << " case2=" << cert.count(FACase::Case2)
        << " case3=" << cert.count(FACase::Case3) << " verified=" << (cert.all_verified() ? "yes" : "no") << '\n';
  }
  return cert.all_verified() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free products of finite cyclic groups: words, automorphisms, trees and invariants", "fpcyc"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  const std::vector<std::string> formats = {"text", "json", "dot"};
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_orders = [&](CLI::App* c) {
    c->add_option("--orders", o.orders, "Comma-separated factor orders, e.g. 2,2,3")->required();
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  CLI::App* word = group("word", "Normal forms and conjugacy");
  for (const std::string cmd : {"reduce", "mul", "inv", "order", "conjugate"}) {
    CLI::App* c = word->add_subcommand(cmd);
    add_orders(c);
    add_format(c);
    c->add_option("words", o.words, "Words such as x1*x2^2")->required();
    c->callback([&, cmd] { action = [&, cmd] { return word_command(cmd, o, out); }; });
  }

  CLI::App* aut = group("aut", "Automorphisms and their relations");
  for (const std::string cmd : {"apply", "compose", "verify-relations", "verify-fr3", "verify-phipsi",
                                "commutation-table"}) {
    CLI::App* c = aut->add_subcommand(cmd);
    add_format(c);
    if (cmd == "verify-fr3" || cmd == "verify-phipsi") {
      c->add_option("--n", o.n, "Factor order")->check(CLI::Range(2, 64));
    } else {
      add_orders(c);
    }
    if (cmd == "apply") {
      c->add_option("--aut", o.aut, "Automorphism, e.g. pc:1,2*perm:(1 2)")->required();
      c->add_option("words", o.words)->required();
    }
    if (cmd == "compose") c->add_option("auts", o.words, "Automorphisms; prints their composite")->required();
    c->callback([&, cmd] { action = [&, cmd] { return aut_command(cmd, o, out); }; });
  }

  CLI::App* tree = group("tree", "Subtree lemmas and fuzz campaigns");
  for (const std::string cmd : {"helly", "cycle", "diagonal", "fuzz"}) {
    CLI::App* c = tree->add_subcommand(cmd);
    add_format(c);
    c->add_option("--input", o.input, "JSON tree with a subtree family");
    c->add_option("--seed", o.seed, "Campaign seed");
    c->add_option("--k", o.k, "Family size K or A..B");
    c->add_option("--max-vertices", o.max_vertices)->check(CLI::Range(1, 100000));
    c->add_option("--output", o.output, "Write a counterexample here instead of stdout");
    if (cmd == "fuzz") {
      c->add_option("--lemma", o.lemma)->check(CLI::IsMember({"helly", "cycle", "diagonal", "fixed"}));
      c->add_option("--trials", o.trials)->check(CLI::Range(0, 100000000));
    } else {
      c->add_option("--fuzz", o.fuzz, "Run a fuzz campaign of this many trials")->check(CLI::Range(0, 100000000));
    }
    c->callback([&, cmd] { action = [&, cmd] { return tree_command(cmd, o, out); }; });
  }

  CLI::App* bass = group("bass", "Balls in the Bass-Serre trees");
  for (const std::string cmd : {"ball", "action", "no-fixed-point", "subdivide", "amalgam"}) {
    CLI::App* c = bass->add_subcommand(cmd);
    add_format(c);
    c->add_option("--mode", o.mode, "m2 or m3")->check(CLI::IsMember({"m2", "m3"}));
    c->add_option("--n", o.n, "Factor order");
    c->add_option("--radius", o.radius, "Ball radius");
    if (cmd == "action" || cmd == "no-fixed-point" || cmd == "subdivide") {
      c->add_option("--gen", o.gens, "Generator: a word, factor:e1,e2 or perm:(1 2)");
    }
    c->callback([&, cmd] { action = [&, cmd] { return bass_command(cmd, o, out); }; });
  }

  CLI::App* inv = group("invariants", "Conjugacy census, occurrences and FA certificates");
  for (const std::string cmd : {"census", "occurrences", "characteristic", "induce", "fa-certificate"}) {
    CLI::App* c = inv->add_subcommand(cmd);
    add_orders(c);
    add_format(c);
    if (cmd == "census") c->add_option("--brute-force", o.brute_force, "Enumerate words up to this many syllables");
    if (cmd == "occurrences" || cmd == "characteristic") c->add_option("--k", o.k, "Order K or A..B");
    if (cmd == "induce") {
      c->add_option("--keep", o.keep, "Orders of the surviving factors")->required();
      c->add_option("--aut", o.aut, "Automorphism to push down; omit to check surjectivity");
    }
    c->callback([&, cmd] { action = [&, cmd] { return invariants_command(cmd, o, out); }; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (!action) return 2;
  try {
    return action();
  } catch (const FAHypothesisError& e) {
    err << "error: hypothesis not met: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace fpcyc::cli
