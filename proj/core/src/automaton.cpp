#include "stallings/automaton.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

#include "stallings/errors.hpp"
#include "union_find.hpp"

namespace stallings {

namespace {

void append_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
  }
}

// BFS order from `base` over a transition table; unreachable states get kNoState.
std::vector<State> bfs_relabel(std::span<const State> table, std::size_t symbols,
                               std::size_t state_count, State base) {
  std::vector<State> relabel(state_count, kNoState);
  std::vector<State> queue;
  queue.reserve(state_count);
  relabel[base] = 0;
  queue.push_back(base);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    State s = queue[head];
    for (std::size_t slot = 0; slot < symbols; ++slot) {
      State t = table[s * symbols + slot];
      if (t != kNoState && relabel[t] == kNoState) {
        relabel[t] = static_cast<State>(queue.size());
        queue.push_back(t);
      }
    }
  }
  return relabel;
}

std::vector<State> apply_relabel(std::span<const State> table, std::size_t symbols,
                                 std::span<const State> relabel, std::size_t new_count) {
  std::vector<State> out(new_count * symbols, kNoState);
  for (std::size_t s = 0; s < relabel.size(); ++s) {
    if (relabel[s] == kNoState) {
      continue;
    }
    for (std::size_t slot = 0; slot < symbols; ++slot) {
      State t = table[s * symbols + slot];
      if (t != kNoState) {
        out[relabel[s] * symbols + slot] = relabel[t];
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// InverseAutomaton

InverseAutomaton::InverseAutomaton(Alphabet alphabet, std::size_t state_count, State base,
                                   std::span<const Edge> edges)
    : alphabet_(alphabet), state_count_(state_count), base_(base) {
  if (state_count == 0) {
    throw InvalidArgument("an automaton needs at least one state");
  }
  if (base >= state_count) {
    throw InvalidArgument("base state " + std::to_string(base) + " out of range");
  }
  const std::size_t symbols = alphabet.symbol_count();
  table_.assign(state_count * symbols, kNoState);
  auto set = [&](State s, Letter x, State t) {
    State& cell = table_[s * symbols + x.slot()];
    if (cell != kNoState && cell != t) {
      throw InvalidArgument("automaton is not deterministic at state " + std::to_string(s));
    }
    cell = t;
  };
  for (const Edge& e : edges) {
    if (e.source >= state_count || e.target >= state_count) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (!e.letter.valid_in(alphabet)) {
      throw AlphabetError("edge letter " + std::to_string(e.letter.index()) +
                          " outside alphabet");
    }
    Edge f = e.letter.positive() ? e : Edge{e.target, e.letter.inverse(), e.source};
    set(f.source, f.letter, f.target);
    set(f.target, f.letter.inverse(), f.source);
  }
  auto order = bfs_relabel(table_, symbols, state_count_, base_);
  if (std::find(order.begin(), order.end(), kNoState) != order.end()) {
    throw InvalidArgument("automaton is not connected from its base state");
  }
}

InverseAutomaton InverseAutomaton::trivial(Alphabet alphabet) {
  return InverseAutomaton(FromTable{}, alphabet, 1, 0, std::vector<State>(alphabet.symbol_count(), kNoState));
}

std::size_t InverseAutomaton::degree(State s) const noexcept {
  const std::size_t symbols = alphabet_.symbol_count();
  std::size_t d = 0;
  for (std::size_t slot = 0; slot < symbols; ++slot) {
    d += table_[s * symbols + slot] != kNoState ? 1 : 0;
  }
  return d;
}

std::vector<Edge> InverseAutomaton::edges() const {
  std::vector<Edge> out;
  const std::size_t symbols = alphabet_.symbol_count();
  for (State s = 0; s < state_count_; ++s) {
    for (std::size_t slot = 0; slot < symbols; slot += 2) {
      State t = table_[s * symbols + slot];
      if (t != kNoState) {
        out.push_back({s, Letter::from_slot(slot), t});
      }
    }
  }
  return out;
}

std::size_t InverseAutomaton::edge_count() const noexcept {
  // Rows have even length, so even indices are exactly the positive slots.
  std::size_t n = 0;
  for (std::size_t i = 0; i < table_.size(); i += 2) {
    n += table_[i] != kNoState ? 1 : 0;
  }
  return n;
}

std::vector<Letter> InverseAutomaton::letters_used() const {
  const std::size_t symbols = alphabet_.symbol_count();
  std::vector<bool> seen(alphabet_.size(), false);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != kNoState) {
      seen[(i % symbols) / 2] = true;
    }
  }
  std::vector<Letter> out;
  for (std::size_t g = 0; g < seen.size(); ++g) {
    if (seen[g]) {
      out.emplace_back(static_cast<int>(g + 1));
    }
  }
  return out;
}

bool InverseAutomaton::is_reduced() const noexcept {
  for (State s = 0; s < state_count_; ++s) {
    if (s != base_ && degree(s) == 1) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// AutomatonBuilder

AutomatonBuilder::AutomatonBuilder(Alphabet alphabet) : alphabet_(alphabet) {}

AutomatonBuilder::AutomatonBuilder(const InverseAutomaton& a)
    : alphabet_(a.alphabet()), state_count_(a.state_count()), base_(a.base()), edges_(a.edges()) {}

State AutomatonBuilder::add_state() { return static_cast<State>(state_count_++); }

void AutomatonBuilder::check_state(State s) const {
  if (s >= state_count_) {
    throw InvalidArgument("state " + std::to_string(s) + " out of range");
  }
}

void AutomatonBuilder::add_edge(State p, Letter x, State q) {
  check_state(p);
  check_state(q);
  if (!x.valid_in(alphabet_)) {
    throw AlphabetError("edge letter " + std::to_string(x.index()) + " outside alphabet");
  }
  if (x.positive()) {
    edges_.push_back({p, x, q});
  } else {
    edges_.push_back({q, x.inverse(), p});
  }
}

void AutomatonBuilder::expand(State p, const Word& w, State q) {
  check_state(p);
  check_state(q);
  if (w.alphabet() != alphabet_) {
    throw AlphabetError("expansion word over a different alphabet");
  }
  if (w.empty()) {
    throw InvalidArgument("expansion by the empty word");
  }
  if (!w.is_reduced()) {
    throw InvalidArgument("expansion word must be reduced");
  }
  State from = p;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    State next = add_state();
    add_edge(from, w[i], next);
    from = next;
  }
  add_edge(from, w[w.size() - 1], q);
}

void AutomatonBuilder::identify(State p, State q) {
  check_state(p);
  check_state(q);
  identifications_.emplace_back(p, q);
}

bool AutomatonBuilder::is_deterministic() const {
  const std::size_t symbols = alphabet_.symbol_count();
  std::vector<State> table(state_count_ * symbols, kNoState);
  auto set = [&](State s, Letter x, State t) {
    State& cell = table[s * symbols + x.slot()];
    if (cell != kNoState && cell != t) {
      return false;
    }
    cell = t;
    return true;
  };
  for (const Edge& e : edges_) {
    if (!set(e.source, e.letter, e.target) || !set(e.target, e.letter.inverse(), e.source)) {
      return false;
    }
  }
  return identifications_.empty();
}

InverseAutomaton AutomatonBuilder::fold(FoldOrder order) const {
  const std::size_t symbols = alphabet_.symbol_count();
  detail::DisjointSets classes(state_count_);
  // rows[s] holds the transitions of class representative s; targets are
  // resolved through `classes` lazily.
  std::vector<State> rows(state_count_ * symbols, kNoState);
  std::vector<std::pair<State, State>> pending(identifications_.begin(), identifications_.end());

  std::optional<std::mt19937_64> rng;
  if (order.shuffle_seed) {
    rng.emplace(*order.shuffle_seed);
  }

  auto attach = [&](State s, std::size_t slot, State t) {
    State& cell = rows[s * symbols + slot];
    if (cell == kNoState) {
      cell = t;
    } else if (classes.find(cell) != classes.find(t)) {
      pending.emplace_back(cell, t);
    }
  };

  auto drain = [&] {
    while (!pending.empty()) {
      std::size_t pick = pending.size() - 1;
      if (rng) {
        pick = std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(*rng);
        std::swap(pending[pick], pending.back());
        pick = pending.size() - 1;
      }
      auto [a, b] = pending[pick];
      pending.pop_back();
      auto [root, gone] = classes.unite(a, b);
      if (root == gone) {
        continue;
      }
      for (std::size_t slot = 0; slot < symbols; ++slot) {
        State t = rows[gone * symbols + slot];
        if (t != kNoState) {
          rows[gone * symbols + slot] = kNoState;
          attach(static_cast<State>(root), slot, t);
        }
      }
    }
  };

  std::vector<Edge> edges(edges_.begin(), edges_.end());
  if (rng) {
    std::shuffle(edges.begin(), edges.end(), *rng);
  }
  for (const Edge& e : edges) {
    attach(static_cast<State>(classes.find(e.source)), e.letter.slot(), e.target);
    attach(static_cast<State>(classes.find(e.target)), e.letter.inverse().slot(), e.source);
    if (rng) {
      drain();
    }
  }
  drain();

  // Resolve targets to representatives, then renumber by BFS from the base.
  for (std::size_t s = 0; s < state_count_; ++s) {
    for (std::size_t slot = 0; slot < symbols; ++slot) {
      State& t = rows[s * symbols + slot];
      if (t != kNoState) {
        t = static_cast<State>(classes.find(t));
      }
    }
  }
  State base = static_cast<State>(classes.find(base_));
  auto relabel = bfs_relabel(rows, symbols, state_count_, base);
  std::size_t count = static_cast<std::size_t>(
      std::count_if(relabel.begin(), relabel.end(), [](State s) { return s != kNoState; }));
  return InverseAutomaton(InverseAutomaton::FromTable{}, alphabet_, count, 0, apply_relabel(rows, symbols, relabel, count));
}

// ---------------------------------------------------------------------------
// Free functions

InverseAutomaton bouquet(Alphabet alphabet) {
  std::vector<Edge> loops;
  for (std::size_t g = 1; g <= alphabet.size(); ++g) {
    loops.push_back({0, Letter(static_cast<int>(g)), 0});
  }
  return InverseAutomaton(alphabet, 1, 0, loops);
}

AutomatonBuilder expand(const InverseAutomaton& a, State p, const Word& w, State q) {
  AutomatonBuilder b(a);
  b.expand(p, w, q);
  return b;
}

InverseAutomaton prune(const InverseAutomaton& a) {
  const std::size_t symbols = a.alphabet().symbol_count();
  std::vector<State> table = a.table_;
  std::vector<std::size_t> degree(a.state_count());
  std::vector<State> queue;
  for (State s = 0; s < a.state_count(); ++s) {
    degree[s] = a.degree(s);
    if (s != a.base() && degree[s] == 1) {
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    State s = queue.back();
    queue.pop_back();
    if (degree[s] != 1) {
      continue;
    }
    for (std::size_t slot = 0; slot < symbols; ++slot) {
      State t = table[s * symbols + slot];
      if (t == kNoState) {
        continue;
      }
      table[s * symbols + slot] = kNoState;
      table[t * symbols + (slot ^ 1u)] = kNoState;
      degree[s] = 0;
      if (--degree[t] == 1 && t != a.base()) {
        queue.push_back(t);
      }
      break;
    }
  }
  auto relabel = bfs_relabel(table, symbols, a.state_count(), a.base());
  std::size_t count = static_cast<std::size_t>(
      std::count_if(relabel.begin(), relabel.end(), [](State s) { return s != kNoState; }));
  return InverseAutomaton(InverseAutomaton::FromTable{}, a.alphabet(), count, 0, apply_relabel(table, symbols, relabel, count));
}

InverseAutomaton reduce_automaton(const AutomatonBuilder& b, FoldOrder order) {
  return prune(b.fold(order));
}

InverseAutomaton stallings_graph(std::span<const Word> gens, Alphabet alphabet, FoldOrder order) {
  AutomatonBuilder b(alphabet);
  for (const Word& g : gens) {
    if (g.alphabet() != alphabet) {
      throw AlphabetError("generator over alphabet of size " + std::to_string(g.alphabet().size()) +
                          ", expected " + std::to_string(alphabet.size()));
    }
    Word r = reduce(g);
    if (!r.empty()) {
      b.expand(b.base(), r, b.base());
    }
  }
  return reduce_automaton(b, order);
}

State read(const InverseAutomaton& a, State from, const Word& w) {
  State s = from;
  for (Letter x : w.letters()) {
    s = a.target(s, x);
    if (s == kNoState) {
      return kNoState;
    }
  }
  return s;
}

bool member(const InverseAutomaton& a, const Word& w) {
  if (w.alphabet() != a.alphabet()) {
    throw AlphabetError("word over alphabet of size " + std::to_string(w.alphabet().size()) +
                        ", automaton over " + std::to_string(a.alphabet().size()));
  }
  return read(a, a.base(), reduce(w)) == a.base();
}

std::size_t rank(const InverseAutomaton& a) noexcept {
  return a.edge_count() + 1 - a.state_count();
}

std::optional<std::size_t> SpanningTreeBasis::basis_index(State source, Letter positive) const {
  std::size_t i = edge_to_basis[source * alphabet_size + positive.generator() - 1];
  if (i == static_cast<std::size_t>(-1)) {
    return std::nullopt;
  }
  return i;
}

SpanningTreeBasis spanning_tree_basis(const InverseAutomaton& a) {
  const Alphabet alphabet = a.alphabet();
  const std::size_t symbols = alphabet.symbol_count();
  const std::size_t r = alphabet.size();
  const std::size_t n = a.state_count();
  constexpr auto none = static_cast<std::size_t>(-1);

  SpanningTreeBasis tb;
  tb.alphabet_size = r;
  tb.edge_to_basis.assign(n * r, none);
  tb.prefixes.assign(n, Word(alphabet));

  std::vector<bool> in_tree(n * r, false);
  std::vector<bool> seen(n, false);
  std::vector<State> order;
  order.reserve(n);
  seen[a.base()] = true;
  order.push_back(a.base());
  for (std::size_t head = 0; head < order.size(); ++head) {
    State s = order[head];
    for (std::size_t slot = 0; slot < symbols; ++slot) {
      State t = a.target_slot(s, slot);
      if (t == kNoState || seen[t]) {
        continue;
      }
      seen[t] = true;
      order.push_back(t);
      Letter x = Letter::from_slot(slot);
      Word prefix = tb.prefixes[s];
      prefix.push_back(x);
      tb.prefixes[t] = std::move(prefix);
      Edge e = x.positive() ? Edge{s, x, t} : Edge{t, x.inverse(), s};
      in_tree[e.source * r + e.letter.generator() - 1] = true;
      tb.tree_edges.push_back(e);
    }
  }

  for (std::size_t g = 1; g <= r; ++g) {
    Letter x(static_cast<int>(g));
    for (State s : order) {
      State t = a.target(s, x);
      if (t == kNoState || in_tree[s * r + g - 1]) {
        continue;
      }
      tb.edge_to_basis[s * r + g - 1] = tb.basis_edges.size();
      tb.basis_edges.push_back({s, x, t});
      Word w = tb.prefixes[s];
      w.push_back(x);
      tb.words.push_back(concatenate(w, invert(tb.prefixes[t])));
    }
  }
  return tb;
}

CanonicalForm canonical_form(const InverseAutomaton& a) {
  const std::size_t symbols = a.alphabet().symbol_count();
  CanonicalForm cf;
  std::vector<State> table;
  table.reserve(a.state_count() * symbols);
  for (State s = 0; s < a.state_count(); ++s) {
    for (std::size_t slot = 0; slot < symbols; ++slot) {
      table.push_back(a.target_slot(s, slot));
    }
  }
  cf.relabel = bfs_relabel(table, symbols, a.state_count(), a.base());
  auto relabeled = apply_relabel(table, symbols, cf.relabel, a.state_count());
  cf.digest.reserve(8 + 4 * relabeled.size());
  append_u32(cf.digest, static_cast<std::uint32_t>(a.alphabet().size()));
  append_u32(cf.digest, static_cast<std::uint32_t>(a.state_count()));
  for (State t : relabeled) {
    append_u32(cf.digest, t);
  }
  return cf;
}

InverseAutomaton canonicalize(const InverseAutomaton& a) {
  const std::size_t symbols = a.alphabet().symbol_count();
  auto relabel = bfs_relabel(a.table_, symbols, a.state_count(), a.base());
  return InverseAutomaton(InverseAutomaton::FromTable{}, a.alphabet(), a.state_count(), 0,
                          apply_relabel(a.table_, symbols, relabel, a.state_count()));
}

bool isomorphic(const InverseAutomaton& a, const InverseAutomaton& b) {
  return canonical_form(a).digest == canonical_form(b).digest;
}

std::vector<std::size_t> distances_from_base(const InverseAutomaton& a) {
  constexpr auto unseen = static_cast<std::size_t>(-1);
  const std::size_t symbols = a.alphabet().symbol_count();
  std::vector<std::size_t> dist(a.state_count(), unseen);
  std::deque<State> queue{a.base()};
  dist[a.base()] = 0;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (std::size_t slot = 0; slot < symbols; ++slot) {
      State t = a.target_slot(s, slot);
      if (t != kNoState && dist[t] == unseen) {
        dist[t] = dist[s] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist;
}

std::size_t q0_diameter(const InverseAutomaton& a) {
  auto dist = distances_from_base(a);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace stallings
