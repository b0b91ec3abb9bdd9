#ifndef STALLINGS_ORACLE_HPP_
#define STALLINGS_ORACLE_HPP_

// Brute-force verifiers for the free-factor search. They are exponential
// and only meant for small instances; every enumeration is bounded by an
// OracleBudget and reports `inconclusive` rather than guessing.

#include <cstddef>
#include <span>
#include <vector>

#include "stallings/words.hpp"

namespace stallings {

enum class OracleVerdict { yes, no, inconclusive };

[[nodiscard]] constexpr OracleVerdict to_verdict(bool b) noexcept {
  return b ? OracleVerdict::yes : OracleVerdict::no;
}
[[nodiscard]] const char* to_string(OracleVerdict v) noexcept;

struct OracleBudget {
  // Upper bound on basis length plus the total length of a candidate tuple.
  std::size_t max_total_length = 64;
  // Number of tuples (or i-steps) tried before giving up.
  std::size_t max_candidates = 500000;

  // Throws InvalidArgument unless both are positive.
  void validate() const;
};

// Whether words generate all of F(A).
[[nodiscard]] bool generates_whole(std::span<const Word> words, Alphabet alphabet);

// All reduced non-empty words of length <= max_length, by length and then
// lexicographically (a < A < b < B < ...).
[[nodiscard]] std::vector<Word> reduced_words_up_to(Alphabet alphabet, std::size_t max_length);

// Federer–Jónsson test: with C a basis of H and m = max |c|, H <=ff F(A)
// iff some d = |A| - |C| reduced words of length <= m complete C to a
// generating set of F(A).
[[nodiscard]] OracleVerdict federer_jonsson(std::span<const Word> generators, Alphabet alphabet,
                                            OracleBudget budget = {});

// Depth-d search over every i-step with no subtree pruning and no
// isomorphism merging. budget.max_candidates bounds the i-steps computed.
[[nodiscard]] OracleVerdict unpruned_istep_search(std::span<const Word> generators,
                                                  Alphabet alphabet, OracleBudget budget = {});

}  // namespace stallings

#endif  // STALLINGS_ORACLE_HPP_
