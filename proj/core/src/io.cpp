#include "stallings/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
      ++j;
    }
    if (j > i) {
      out.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

template <typename Int>
Int number(std::string_view token, std::size_t line_no) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number \"" +
                     std::string(token) + "\"");
  }
  return value;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    f(text.substr(start, end - start), ++line_no);
    start = end + 1;
  }
}

std::string letter_label(Letter x, Alphabet alphabet) {
  if (alphabet.supports_compact()) {
    return std::string(1, static_cast<char>('a' + x.generator() - 1));
  }
  return std::to_string(x.index());
}

}  // namespace

std::string write_automaton(const InverseAutomaton& a) {
  std::ostringstream out;
  out << "alphabet " << a.alphabet().size() << '\n';
  out << "states " << a.state_count() << '\n';
  out << "base " << a.base() << '\n';
  for (const Edge& e : a.edges()) {
    out << "edge " << e.source << ' ' << e.letter.index() << ' ' << e.target << '\n';
  }
  return out.str();
}

InverseAutomaton parse_automaton(std::string_view text) {
  std::optional<std::size_t> alphabet_size;
  std::optional<std::size_t> states;
  std::optional<State> base;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    auto t = tokens(line);
    if (t.empty() || t[0].front() == '#') {
      return;
    }
    auto expect = [&](std::size_t n) {
      if (t.size() != n) {
        throw ParseError("line " + std::to_string(no) + ": expected " + std::to_string(n - 1) +
                         " field(s) after \"" + std::string(t[0]) + "\"");
      }
    };
    if (t[0] == "alphabet") {
      expect(2);
      alphabet_size = number<std::size_t>(t[1], no);
    } else if (t[0] == "states") {
      expect(2);
      states = number<std::size_t>(t[1], no);
    } else if (t[0] == "base") {
      expect(2);
      base = number<State>(t[1], no);
    } else if (t[0] == "edge") {
      expect(4);
      int letter = number<int>(t[2], no);
      if (letter <= 0) {
        throw ParseError("line " + std::to_string(no) + ": edge letters must be positive");
      }
      edges.push_back({number<State>(t[1], no), Letter(letter), number<State>(t[3], no)});
    } else {
      throw ParseError("line " + std::to_string(no) + ": unknown directive \"" +
                       std::string(t[0]) + "\"");
    }
  });
  if (!alphabet_size || !states || !base) {
    throw ParseError("automaton text needs alphabet, states and base lines");
  }
  if (*alphabet_size == 0) {
    throw ParseError("alphabet size must be positive");
  }
  return InverseAutomaton(Alphabet(*alphabet_size), *states, *base, edges);
}

std::string write_dot(const InverseAutomaton& a) {
  std::ostringstream out;
  out << "digraph stallings {\n";
  out << "  // alphabet " << a.alphabet().size() << '\n';
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (State s = 0; s < a.state_count(); ++s) {
    out << "  " << s;
    if (s == a.base()) {
      out << " [shape=doublecircle]";
    }
    out << ";\n";
  }
  for (const Edge& e : a.edges()) {
    out << "  " << e.source << " -> " << e.target << " [label=\""
        << letter_label(e.letter, a.alphabet()) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

InverseAutomaton parse_dot(std::string_view text) {
  std::optional<std::size_t> alphabet_size;
  std::optional<State> base;
  std::size_t states = 0;
  struct RawEdge {
    State source;
    std::string label;
    State target;
  };
  std::vector<RawEdge> raw;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    auto t = tokens(line);
    if (t.empty()) {
      return;
    }
    if (t[0] == "//" && t.size() == 3 && t[1] == "alphabet") {
      alphabet_size = number<std::size_t>(t[2], no);
      return;
    }
    if (t[0].empty() || t[0].front() < '0' || t[0].front() > '9') {
      return;  // graph header, attributes, closing brace
    }
    std::string_view first = t[0];
    if (first.back() == ';') {
      first.remove_suffix(1);
    }
    State s = number<State>(first, no);
    if (t.size() >= 3 && t[1] == "->") {
      std::size_t open = line.find("label=\"");
      std::size_t close = open == std::string_view::npos ? open : line.find('"', open + 7);
      if (close == std::string_view::npos) {
        throw ParseError("line " + std::to_string(no) + ": edge without label");
      }
      raw.push_back({s, std::string(line.substr(open + 7, close - open - 7)),
                     number<State>(t[2], no)});
      return;
    }
    states = std::max<std::size_t>(states, s + 1);
    if (line.find("doublecircle") != std::string_view::npos) {
      base = s;
    }
  });
  if (!alphabet_size || !base) {
    throw ParseError("DOT text lacks the alphabet comment or a base state");
  }
  Alphabet alphabet(*alphabet_size);
  std::vector<Edge> edges;
  for (const RawEdge& e : raw) {
    Word label = parse_word(e.label, alphabet,
                            alphabet.supports_compact() ? WordSyntax::compact : WordSyntax::numeric);
    if (label.size() != 1 || !label[0].positive()) {
      throw ParseError("DOT edge label \"" + e.label + "\" is not a positive letter");
    }
    edges.push_back({e.source, label[0], e.target});
  }
  return InverseAutomaton(alphabet, states, *base, edges);
}

std::string write_witness(const SearchWitness& witness, std::span<const Word> complement) {
  std::ostringstream out;
  for (const IStep& step : witness.steps) {
    out << "identify " << step.p << ' ' << step.q << " adds " << to_string(step.witness) << '\n';
  }
  out << "complement: " << join(complement) << '\n';
  return out.str();
}

}  // namespace stallings
