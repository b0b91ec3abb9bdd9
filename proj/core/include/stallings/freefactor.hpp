#ifndef STALLINGS_FREEFACTOR_HPP_
#define STALLINGS_FREEFACTOR_HPP_

// Free-factor decisions by search over rank-incrementing i-steps.
//
// An i-step identifies two distinct states p, q of a reduced inverse
// automaton A and reduces the result. The new subgroup is <L(A), w> where
// w labels q0 -> q -> (identified) -> p -> q0, so the rank grows by at most
// one; when it grows by exactly one the step is rank-incrementing and
// L(A) is a free factor of the new subgroup with complement <w>.
//
// H <=ff F(A) iff Γ(H) reaches the one-vertex bouquet over the letters it
// uses in d = |A0| - rank(H) rank-incrementing i-steps. H <=ff K is decided
// by rewriting H in a spanning-tree basis of K and running the same test,
// or alternatively by searching i-steps inside K until the current
// automaton embeds in Γ(K).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stallings/automaton.hpp"
#include "stallings/words.hpp"

namespace stallings {

// Identification of states p < q (canonical numbering of the automaton the
// step is applied to). witness is reduce(u_q · u_p^{-1}) for the BFS tree
// geodesics u_p, u_q, so it labels q0 -> q in A and p -> q0 in A.
struct IStep {
  State p;
  State q;
  Word witness;
};

struct SearchWitness {
  std::vector<IStep> steps;
  std::string final_digest;
};

struct SearchStats {
  // Number of i-steps computed.
  std::size_t nodes_explored = 0;
  // Search depth d.
  std::size_t depth = 0;
};

struct FFVerdict {
  bool is_free_factor = false;
  // False only when H is not a subgroup of K.
  bool contained = true;
  std::optional<SearchWitness> witness;
  std::optional<std::vector<Word>> complement;
  SearchStats stats;
};

struct SearchOptions {
  // Skip the subtree below any node that admits a non-rank-incrementing
  // i-step; such a node lies on no winning sequence.
  bool prune = true;
};

// Witness word for identifying p and q; geodesics from a BFS tree.
[[nodiscard]] Word istep_witness(const InverseAutomaton& a, State p, State q);

// Identify p and q, then reduce. Throws InvalidArgument when p == q or
// either state is out of range.
[[nodiscard]] InverseAutomaton apply_istep(const InverseAutomaton& a, State p, State q);

struct IStepChild {
  IStep step;
  InverseAutomaton automaton;
};

// All rank-incrementing i-steps from a, pairs in lexicographic order,
// keeping the first of each isomorphism class.
[[nodiscard]] std::vector<IStepChild> rank_incrementing_children(const InverseAutomaton& a);

// Decides H <=ff F(A). On success the verdict carries the winning i-steps
// and the complement: one witness word per step, then the letters of A that
// do not occur in Γ(H).
[[nodiscard]] FFVerdict is_free_factor_of_free(std::span<const Word> generators, Alphabet alphabet,
                                               SearchOptions options = {});

// Same decision starting from an already constructed Γ(H).
[[nodiscard]] FFVerdict is_free_factor_of_free(const InverseAutomaton& gamma,
                                               SearchOptions options = {});

// Expresses w in the basis of tb: one basis letter per non-tree edge
// traversed, inverted for backward traversal. Basis letter i+1 stands for
// tb.words[i]. Throws NotAMember if w is not in L(K)ρ.
[[nodiscard]] Word rewrite_in_basis(const InverseAutomaton& k, const SpanningTreeBasis& tb,
                                    const Word& w);

// Decides H <=ff K. When H is not contained in K the verdict has
// contained == false. The witness (if any) refers to Γ_B(H) over the basis
// alphabet B of K.
[[nodiscard]] FFVerdict is_free_factor_of(std::span<const Word> h_gens,
                                          std::span<const Word> k_gens, Alphabet alphabet,
                                          SearchOptions options = {});

// Base-preserving injective morphism l -> k, as map[state of l] = state of k.
[[nodiscard]] std::optional<std::vector<State>> embeds(const InverseAutomaton& l,
                                                       const InverseAutomaton& k);

// Alternative decision for H <=ff K: i-steps from Γ(H) whose witness lies in
// K, up to depth rank(K) - rank(H), succeeding as soon as the current
// automaton embeds in Γ(K). The witness, when present, is over A.
[[nodiscard]] FFVerdict is_free_factor_via_embedding(std::span<const Word> h_gens,
                                                     std::span<const Word> k_gens,
                                                     Alphabet alphabet,
                                                     SearchOptions options = {});

// Basis of a complement of H in F(A). Throws NotAFreeFactor.
[[nodiscard]] std::vector<Word> complement_in_free(std::span<const Word> h_gens,
                                                   Alphabet alphabet);

struct SubgroupComplement {
  std::vector<Word> words;
  // i-steps from Γ(H) to the graphical free factor L of K.
  SearchWitness witness;
  // Number of leading entries of words that complement H in L; the rest
  // complement L in K.
  std::size_t from_isteps = 0;
  SearchStats stats;
};

// Basis of a complement of H in K. Throws NotContained or NotAFreeFactor.
[[nodiscard]] SubgroupComplement complement_in_subgroup(std::span<const Word> h_gens,
                                                        std::span<const Word> k_gens,
                                                        Alphabet alphabet);

// Replays steps from start; nullopt unless every step is valid and
// rank-incrementing and the final digest matches.
[[nodiscard]] std::optional<InverseAutomaton> replay(const InverseAutomaton& start,
                                                     const SearchWitness& witness);

}  // namespace stallings

#endif  // STALLINGS_FREEFACTOR_HPP_
