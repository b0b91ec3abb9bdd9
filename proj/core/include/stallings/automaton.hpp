#ifndef STALLINGS_AUTOMATON_HPP_
#define STALLINGS_AUTOMATON_HPP_

// Inverse automata and Stallings graphs.
//
// An InverseAutomaton is base-pointed, deterministic, dual and connected.
// Transitions are stored for both orientations: p -x-> q is present iff
// q -x^{-1}-> p is, so duality is structural. Automata returned by
// stallings_graph(), prune() and the i-step machinery are additionally
// reduced (no non-base vertex of degree one) and numbered canonically
// (BFS from the base, letters in the order a, A, b, B, ...), so base-pointed
// isomorphism is equality.
//
// AutomatonBuilder holds a dual automaton that may be non-deterministic;
// fold() turns it into an InverseAutomaton.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stallings/words.hpp"

namespace stallings {

using State = std::uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

// A transition source -letter-> target. Edge lists always use the positive
// orientation.
struct Edge {
  State source;
  Letter letter;
  State target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class InverseAutomaton {
 public:
  // Builds from positive-letter edges. Throws InvalidArgument unless the
  // result is deterministic and connected from base.
  InverseAutomaton(Alphabet alphabet, std::size_t state_count, State base,
                   std::span<const Edge> edges);

  // One state, no edges: the Stallings graph of the trivial subgroup.
  [[nodiscard]] static InverseAutomaton trivial(Alphabet alphabet);

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t state_count() const noexcept { return state_count_; }
  [[nodiscard]] State base() const noexcept { return base_; }

  // kNoState when there is no x-transition out of s.
  [[nodiscard]] State target(State s, Letter x) const noexcept {
    return table_[s * alphabet_.symbol_count() + x.slot()];
  }
  [[nodiscard]] State target_slot(State s, std::size_t slot) const noexcept {
    return table_[s * alphabet_.symbol_count() + slot];
  }
  // Number of transitions (of either orientation) leaving s; a loop counts twice.
  [[nodiscard]] std::size_t degree(State s) const noexcept;

  // Positive-letter edges ordered by (source, letter).
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::size_t edge_count() const noexcept;

  // Generators labelling at least one edge.
  [[nodiscard]] std::vector<Letter> letters_used() const;

  // No vertex other than the base has degree one.
  [[nodiscard]] bool is_reduced() const noexcept;

  friend bool operator==(const InverseAutomaton&, const InverseAutomaton&) = default;

 private:
  struct FromTable {};
  InverseAutomaton(FromTable, Alphabet alphabet, std::size_t state_count, State base,
                   std::vector<State> table)
      : alphabet_(alphabet), state_count_(state_count), base_(base), table_(std::move(table)) {}

  Alphabet alphabet_;
  std::size_t state_count_;
  State base_;
  std::vector<State> table_;

  friend class AutomatonBuilder;
  friend InverseAutomaton prune(const InverseAutomaton&);
  friend InverseAutomaton canonicalize(const InverseAutomaton&);
};

// Order in which type-1 identifications are performed. The default is the
// worklist order; a seed shuffles edge insertion and worklist processing.
// Every order produces the same automaton up to isomorphism.
struct FoldOrder {
  std::optional<std::uint64_t> shuffle_seed;
};

// A dual automaton under construction, possibly non-deterministic.
class AutomatonBuilder {
 public:
  // Single base state 0, no edges.
  explicit AutomatonBuilder(Alphabet alphabet);
  explicit AutomatonBuilder(const InverseAutomaton& a);

  [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t state_count() const noexcept { return state_count_; }
  [[nodiscard]] State base() const noexcept { return base_; }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  State add_state();
  // x of either sign; the dual transition is implied.
  void add_edge(State p, Letter x, State q);
  // Attaches a fresh path p -w-> q with |w| - 1 new states. Throws
  // InvalidArgument when w is empty or not reduced.
  void expand(State p, const Word& w, State q);
  // Requests that p and q become one state when folding.
  void identify(State p, State q);

  [[nodiscard]] bool is_deterministic() const;

  // Type-1 reductions to a deterministic fixpoint. States unreachable from
  // the base are dropped. The result is not pruned.
  [[nodiscard]] InverseAutomaton fold(FoldOrder order = {}) const;

 private:
  void check_state(State s) const;

  Alphabet alphabet_;
  std::size_t state_count_ = 1;
  State base_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::pair<State, State>> identifications_;
};

[[nodiscard]] InverseAutomaton bouquet(Alphabet alphabet);

// Expansion of a by (p, w, q). The result is dual and trim but may be
// non-deterministic, hence a builder.
[[nodiscard]] AutomatonBuilder expand(const InverseAutomaton& a, State p, const Word& w, State q);

[[nodiscard]] inline InverseAutomaton fold(const AutomatonBuilder& b, FoldOrder order = {}) {
  return b.fold(order);
}

// Type-2 reductions: repeatedly deletes non-base states of degree one.
// Output is reduced and canonically numbered.
[[nodiscard]] InverseAutomaton prune(const InverseAutomaton& a);

// fold + prune + canonical numbering.
[[nodiscard]] InverseAutomaton reduce_automaton(const AutomatonBuilder& b, FoldOrder order = {});

// Γ_A(H) for H generated by gens. Generators are freely reduced first;
// those equal to the identity are ignored. Throws AlphabetError.
[[nodiscard]] InverseAutomaton stallings_graph(std::span<const Word> gens, Alphabet alphabet,
                                               FoldOrder order = {});

// Endpoint of the path labelled w starting at from, kNoState if it breaks off.
[[nodiscard]] State read(const InverseAutomaton& a, State from, const Word& w);

// Whether reduce(w) labels a loop at the base. Throws AlphabetError.
[[nodiscard]] bool member(const InverseAutomaton& a, const Word& w);

// e - v + 1 with e counting positive edges.
[[nodiscard]] std::size_t rank(const InverseAutomaton& a) noexcept;

// BFS spanning tree from the base (letters in slot order) and the induced
// basis b_e = u_p · a · u_q^{-1}, one word per positive non-tree edge,
// ordered by (letter, source state in BFS order).
struct SpanningTreeBasis {
  std::vector<Edge> tree_edges;
  std::vector<Edge> basis_edges;
  std::vector<Word> words;
  // prefixes[s] labels the tree path from the base to s.
  std::vector<Word> prefixes;

  // Index into basis_edges of the positive edge leaving source with the
  // given positive letter; nullopt for tree edges.
  [[nodiscard]] std::optional<std::size_t> basis_index(State source, Letter positive) const;

  std::size_t alphabet_size = 1;
  std::vector<std::size_t> edge_to_basis;  // (source, generator) -> index or npos
};

[[nodiscard]] SpanningTreeBasis spanning_tree_basis(const InverseAutomaton& a);

// BFS renumbering; relabel[old] = new. Equal digests iff base-pointed
// isomorphic (for connected deterministic automata).
struct CanonicalForm {
  std::vector<State> relabel;
  std::string digest;
};

[[nodiscard]] CanonicalForm canonical_form(const InverseAutomaton& a);
[[nodiscard]] InverseAutomaton canonicalize(const InverseAutomaton& a);
[[nodiscard]] bool isomorphic(const InverseAutomaton& a, const InverseAutomaton& b);

// BFS distances from the base through transitions of either orientation.
[[nodiscard]] std::vector<std::size_t> distances_from_base(const InverseAutomaton& a);
[[nodiscard]] std::size_t q0_diameter(const InverseAutomaton& a);

}  // namespace stallings

#endif  // STALLINGS_AUTOMATON_HPP_
