#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stallings/stallings.hpp"

namespace stallings::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::size_t alphabet = 0;
  std::string h;
  std::optional<std::string> k;
  std::optional<std::string> word;
  bool numeric = false;
  bool oracle = false;
  bool no_prune = false;
  bool json = false;
  bool deterministic = false;
  // bench
  std::size_t d = 1;
  std::string sizes;
  std::size_t samples = 5;
  std::uint64_t seed = 1;
};

// Usage problems detected after CLI11 has accepted the arguments.
struct UsageError : Error {
  using Error::Error;
};

// Raised by --oracle checks.
struct OracleFailure {
  int code;
  std::string message;
};

class Context {
 public:
  Context(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {
    if (opt.alphabet == 0) {
      throw UsageError("--alphabet is required and must be positive");
    }
    alphabet_.emplace(opt.alphabet);
    syntax_ = opt.numeric ? WordSyntax::numeric : WordSyntax::compact;
  }

  Alphabet alphabet() const { return *alphabet_; }
  std::vector<Word> h() const { return parse_words(opt_.h, *alphabet_, syntax_); }
  std::optional<std::vector<Word>> k() const {
    if (!opt_.k) return std::nullopt;
    return parse_words(*opt_.k, *alphabet_, syntax_);
  }
  Word word() const { return parse_word(*opt_.word, *alphabet_, syntax_); }
  SearchOptions search() const { return {.prune = !opt_.no_prune}; }

  std::string str(const Word& w) const { return to_string(w, syntax_); }
  std::vector<std::string> strs(std::span<const Word> ws) const {
    std::vector<std::string> out;
    for (const Word& w : ws) out.push_back(str(w));
    return out;
  }
  std::string joined(std::span<const Word> ws) const { return join(ws, syntax_); }

  void check(bool ok, const std::string& what) const {
    if (!ok) throw OracleFailure{kOracleDisagrees, "oracle disagrees: " + what};
  }
  void check(OracleVerdict oracle, bool main, const std::string& what) const {
    if (oracle == OracleVerdict::inconclusive) {
      throw OracleFailure{kOracleInconclusive, "oracle inconclusive: " + what};
    }
    check(oracle == to_verdict(main), what);
  }

  const Options& opt() const { return opt_; }
  std::ostream& out() const { return out_; }
  std::ostream& err() const { return err_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Alphabet> alphabet_;
  WordSyntax syntax_ = WordSyntax::compact;
};

json automaton_json(const InverseAutomaton& a) {
  json edges = json::array();
  for (const Edge& e : a.edges()) {
    edges.push_back({{"p", e.source}, {"letter", e.letter.index()}, {"q", e.target}});
  }
  return {{"alphabet", a.alphabet().size()},
          {"states", a.state_count()},
          {"base", a.base()},
          {"edges", edges}};
}

int cmd_graph(const Context& c) {
  auto a = stallings_graph(c.h(), c.alphabet());
  if (c.opt().oracle) {
    c.check(canonical_form(parse_automaton(write_automaton(a))).digest == canonical_form(a).digest,
            "automaton text round trip");
  }
  if (c.opt().json) {
    c.out() << automaton_json(a).dump() << '\n';
  } else {
    c.out() << write_automaton(a);
  }
  return kOk;
}

int cmd_export_dot(const Context& c) {
  auto a = stallings_graph(c.h(), c.alphabet());
  std::string dot = write_dot(a);
  if (c.opt().oracle) {
    c.check(canonical_form(parse_dot(dot)).digest == canonical_form(a).digest, "DOT round trip");
  }
  c.out() << dot;
  return kOk;
}

int cmd_member(const Context& c) {
  auto gens = c.h();
  Word w = c.word();
  auto a = stallings_graph(gens, c.alphabet());
  bool yes = member(a, w);
  if (c.opt().oracle) {
    gens.push_back(w);
    c.check(yes == isomorphic(stallings_graph(gens, c.alphabet()), a), "membership");
  }
  if (c.opt().json) {
    c.out() << json{{"member", yes}}.dump() << '\n';
  } else {
    c.out() << (yes ? "YES" : "NO") << '\n';
  }
  return kOk;
}

void check_basis(const Context& c, const InverseAutomaton& a, const SpanningTreeBasis& tb) {
  c.check(tb.words.size() == rank(a) &&
              isomorphic(stallings_graph(tb.words, c.alphabet()), a),
          "basis does not regenerate the subgroup graph");
}

int cmd_basis(const Context& c) {
  auto a = stallings_graph(c.h(), c.alphabet());
  auto tb = spanning_tree_basis(a);
  if (c.opt().oracle) check_basis(c, a, tb);
  if (c.opt().json) {
    c.out() << json{{"basis", c.strs(tb.words)}}.dump() << '\n';
  } else {
    c.out() << c.joined(tb.words) << '\n';
  }
  return kOk;
}

int cmd_rank(const Context& c) {
  auto a = stallings_graph(c.h(), c.alphabet());
  if (c.opt().oracle) check_basis(c, a, spanning_tree_basis(a));
  if (c.opt().json) {
    c.out() << json{{"rank", rank(a)}}.dump() << '\n';
  } else {
    c.out() << rank(a) << '\n';
  }
  return kOk;
}

struct Outcome {
  bool yes = false;
  SearchWitness witness;
  std::vector<Word> complement;
  SearchStats stats;
};

void check_complement(const Context& c, std::span<const Word> h, const InverseAutomaton& target,
                      std::span<const Word> complement) {
  std::vector<Word> all = spanning_tree_basis(stallings_graph(h, c.alphabet())).words;
  all.insert(all.end(), complement.begin(), complement.end());
  c.check(all.size() == rank(target) && isomorphic(stallings_graph(all, c.alphabet()), target),
          "complement does not complete a basis");
}

// Decides H <=ff F or H <=ff K. Throws NotContained.
Outcome decide(const Context& c) {
  auto h = c.h();
  auto k = c.k();
  Outcome o;
  if (!k) {
    auto v = is_free_factor_of_free(h, c.alphabet(), c.search());
    if (c.opt().oracle) {
      c.check(federer_jonsson(h, c.alphabet()), v.is_free_factor, "free factor of F");
    }
    o.yes = v.is_free_factor;
    o.stats = v.stats;
    if (o.yes) {
      o.witness = *v.witness;
      o.complement = *v.complement;
      if (c.opt().oracle) check_complement(c, h, bouquet(c.alphabet()), o.complement);
    }
    return o;
  }
  auto v = is_free_factor_of(h, *k, c.alphabet(), c.search());
  if (!v.contained) {
    throw NotContained("H is not contained in K");
  }
  if (c.opt().oracle) {
    auto alt = is_free_factor_via_embedding(h, *k, c.alphabet(), c.search());
    c.check(to_verdict(alt.is_free_factor), v.is_free_factor, "free factor of K");
  }
  o.yes = v.is_free_factor;
  o.stats = v.stats;
  if (o.yes) {
    auto sc = complement_in_subgroup(h, *k, c.alphabet());
    o.witness = sc.witness;
    o.complement = sc.words;
    if (c.opt().oracle) check_complement(c, h, stallings_graph(*k, c.alphabet()), o.complement);
  }
  return o;
}

json outcome_json(const Context& c, const Outcome& o) {
  json witness = json::array();
  for (const IStep& s : o.witness.steps) {
    witness.push_back({{"p", s.p}, {"q", s.q}, {"word", c.str(s.witness)}});
  }
  return {{"verdict", o.yes ? "YES" : "NO"},
          {"witness", witness},
          {"complement", c.strs(o.complement)},
          {"stats", {{"nodes_explored", o.stats.nodes_explored}, {"depth", o.stats.depth}}}};
}

void write_steps(const Context& c, const Outcome& o) {
  for (const IStep& s : o.witness.steps) {
    c.out() << "identify " << s.p << ' ' << s.q << " adds " << c.str(s.witness) << '\n';
  }
  c.out() << "complement: " << c.joined(o.complement) << '\n';
}

int cmd_is_ff(const Context& c) {
  Outcome o = decide(c);
  if (c.opt().json) {
    c.out() << outcome_json(c, o).dump() << '\n';
    return kOk;
  }
  c.out() << (o.yes ? "YES" : "NO") << '\n';
  if (o.yes) write_steps(c, o);
  return kOk;
}

int cmd_complement(const Context& c) {
  Outcome o = decide(c);
  if (c.opt().json) {
    c.out() << outcome_json(c, o).dump() << '\n';
  } else if (o.yes) {
    c.out() << c.joined(o.complement) << '\n';
  } else {
    c.err() << "H is not a free factor\n";
  }
  return o.yes ? kOk : kNotAFreeFactor;
}

Word random_reduced(std::mt19937_64& rng, Alphabet alphabet, std::size_t length) {
  std::uniform_int_distribution<std::size_t> slot(0, alphabet.symbol_count() - 1);
  Word w(alphabet);
  while (w.size() < length) {
    Letter x = Letter::from_slot(slot(rng));
    if (!w.empty() && w[w.size() - 1] == x.inverse()) continue;
    w.push_back(x);
  }
  return w;
}

// r - d generators of total length l whose graph has rank r - d and uses
// every letter, so that the search runs at depth exactly d.
std::vector<Word> bench_instance(std::mt19937_64& rng, Alphabet alphabet, std::size_t l,
                                 std::size_t d) {
  std::size_t g = alphabet.size() - d;
  if (l < g) {
    throw UsageError("size " + std::to_string(l) + " is too small for " + std::to_string(g) +
                     " generators");
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    // random composition of l into g positive parts
    std::vector<std::size_t> cuts{0, l};
    std::uniform_int_distribution<std::size_t> pos(1, l - 1);
    while (cuts.size() < g + 1) {
      std::size_t x = pos(rng);
      if (std::find(cuts.begin(), cuts.end(), x) == cuts.end()) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Word> gens;
    for (std::size_t i = 0; i < g; ++i) {
      gens.push_back(random_reduced(rng, alphabet, cuts[i + 1] - cuts[i]));
    }
    auto gamma = stallings_graph(gens, alphabet);
    if (rank(gamma) == g && gamma.letters_used().size() == alphabet.size()) return gens;
  }
  throw UsageError("could not sample an instance at l = " + std::to_string(l));
}

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    std::size_t comma = std::min(text.find(','), text.size());
    std::string_view piece = text.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw ParseError("bad size \"" + std::string(piece) + "\"");
    }
    out.push_back(value);
    text.remove_prefix(std::min(comma + 1, text.size()));
  }
  return out;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  std::size_t size = opt.alphabet == 0 ? opt.d + 1 : opt.alphabet;
  if (size <= opt.d) {
    throw UsageError("--alphabet must exceed --d");
  }
  Alphabet alphabet(size);
  std::mt19937_64 rng(opt.seed);
  SearchOptions search{.prune = !opt.no_prune};
  auto sizes = parse_sizes(opt.sizes);
  out << "l,d,nodes,millis\n";
  for (std::size_t l : sizes) {
    for (std::size_t s = 0; s < opt.samples; ++s) {
      auto gens = bench_instance(rng, alphabet, l, opt.d);
      auto start = std::chrono::steady_clock::now();
      auto v = is_free_factor_of_free(gens, alphabet, search);
      std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      out << l << ',' << opt.d << ',' << v.stats.nodes_explored << ',' << std::fixed
          << std::setprecision(3) << ms.count() << '\n';
      out.unsetf(std::ios::floatfield);
    }
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& opt, bool needs_word) {
  sub->add_option("--alphabet", opt.alphabet, "number of generators")->required();
  sub->add_option("--H", opt.h, "comma-separated generators of H")->required();
  sub->add_flag("--numeric", opt.numeric, "numeric word syntax (1 -2 3)");
  sub->add_flag("--oracle", opt.oracle, "cross-check against an independent oracle");
  sub->add_flag("--json", opt.json, "JSON output");
  sub->add_flag("--deterministic", opt.deterministic, "sequential search (always on)");
  if (needs_word) {
    sub->add_option("--word", opt.word, "word to test")->required();
  }
}

void add_search(CLI::App* sub, Options& opt) {
  sub->add_option("--K", opt.k, "comma-separated generators of K (default: the whole group)");
  sub->add_flag("--no-prune", opt.no_prune, "disable subtree pruning");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Stallings graphs and free factors"};
  app.name("stallings");
  app.require_subcommand(1);

  struct CommandInfo {
    const char* name;
    const char* help;
    bool word;
    bool search;
  };
  const CommandInfo commands[] = {
      {"graph", "print the Stallings graph of H", false, false},
      {"member", "test whether --word lies in H", true, false},
      {"basis", "spanning-tree basis of H", false, false},
      {"rank", "rank of H", false, false},
      {"is-ff", "decide whether H is a free factor of K (or of F)", false, true},
      {"complement", "complement of H in K (or in F)", false, true},
      {"export-dot", "Stallings graph of H in DOT", false, false},
  };
  for (const CommandInfo& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, opt, s.word);
    if (s.search) add_search(sub, opt);
    sub->callback([&opt, name = s.name] { opt.command = name; });
  }
  CLI::App* bench = app.add_subcommand("bench", "time the free-factor search; CSV on stdout");
  bench->add_option("--d", opt.d, "search depth |A| - rank(H)");
  bench->add_option("--sizes", opt.sizes, "comma-separated total generator lengths");
  bench->add_option("--samples", opt.samples, "instances per size");
  bench->add_option("--seed", opt.seed, "random seed");
  bench->add_option("--alphabet", opt.alphabet, "number of generators (default d + 1)");
  bench->add_flag("--no-prune", opt.no_prune, "disable subtree pruning");
  bench->add_flag("--deterministic", opt.deterministic, "sequential search (always on)");
  bench->callback([&opt] { opt.command = "bench"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (opt.command == "bench") return cmd_bench(opt, out);
    Context c(opt, out, err);
    if (opt.command == "graph") return cmd_graph(c);
    if (opt.command == "member") return cmd_member(c);
    if (opt.command == "basis") return cmd_basis(c);
    if (opt.command == "rank") return cmd_rank(c);
    if (opt.command == "is-ff") return cmd_is_ff(c);
    if (opt.command == "complement") return cmd_complement(c);
    if (opt.command == "export-dot") return cmd_export_dot(c);
    err << "unknown command\n";
    return kParseError;
  } catch (const OracleFailure& f) {
    err << f.message << '\n';
    return f.code;
  } catch (const NotContained& e) {
    err << e.what() << '\n';
    return kNotContained;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const AlphabetError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kParseError;
  }
}

}  // namespace stallings::cli
