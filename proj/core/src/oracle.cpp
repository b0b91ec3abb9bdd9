#include "stallings/oracle.hpp"

#include <algorithm>

#include "stallings/automaton.hpp"
#include "stallings/errors.hpp"
#include "stallings/freefactor.hpp"

namespace stallings {

namespace {

bool is_whole_bouquet(const InverseAutomaton& a) {
  return a.state_count() == 1 && a.edge_count() == a.alphabet().size();
}

void extend_words(Alphabet alphabet, std::size_t length, Word& current, std::vector<Word>& out) {
  if (current.size() == length) {
    out.push_back(current);
    return;
  }
  for (std::size_t slot = 0; slot < alphabet.symbol_count(); ++slot) {
    Letter x = Letter::from_slot(slot);
    if (!current.empty() && current[current.size() - 1] == x.inverse()) {
      continue;
    }
    Word next = current;
    next.push_back(x);
    extend_words(alphabet, length, next, out);
  }
}

// Number of reduced words of length 1..m over 2r symbols, saturating.
std::size_t reduced_word_count(std::size_t r, std::size_t m, std::size_t cap) {
  std::size_t total = 0;
  std::size_t level = 2 * r;
  for (std::size_t k = 1; k <= m; ++k) {
    total += level;
    if (total > cap) {
      return cap + 1;
    }
    if (level > cap / std::max<std::size_t>(2 * r - 1, 1)) {
      level = cap + 1;
    } else {
      level *= 2 * r - 1;
    }
  }
  return total;
}

struct BudgetExceeded {};

class UnprunedSearch {
 public:
  UnprunedSearch(std::size_t limit, std::size_t max_steps) : limit_(limit), max_steps_(max_steps) {}

  bool visit(const InverseAutomaton& a, std::size_t depth) {
    if (depth == limit_) {
      return a.state_count() == 1;
    }
    const std::size_t r = rank(a);
    for (State p = 0; p < a.state_count(); ++p) {
      for (State q = p + 1; q < a.state_count(); ++q) {
        if (++steps_ > max_steps_) {
          throw BudgetExceeded{};
        }
        InverseAutomaton b = apply_istep(a, p, q);
        if (rank(b) == r + 1 && visit(b, depth + 1)) {
          return true;
        }
      }
    }
    return false;
  }

 private:
  std::size_t limit_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
};

}  // namespace

const char* to_string(OracleVerdict v) noexcept {
  switch (v) {
    case OracleVerdict::yes:
      return "yes";
    case OracleVerdict::no:
      return "no";
    case OracleVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

void OracleBudget::validate() const {
  if (max_total_length == 0 || max_candidates == 0) {
    throw InvalidArgument("oracle budget limits must be positive");
  }
}

bool generates_whole(std::span<const Word> words, Alphabet alphabet) {
  return is_whole_bouquet(stallings_graph(words, alphabet));
}

std::vector<Word> reduced_words_up_to(Alphabet alphabet, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t length = 1; length <= max_length; ++length) {
    Word empty(alphabet);
    extend_words(alphabet, length, empty, out);
  }
  return out;
}

OracleVerdict federer_jonsson(std::span<const Word> generators, Alphabet alphabet,
                              OracleBudget budget) {
  budget.validate();
  const InverseAutomaton gamma = stallings_graph(generators, alphabet);
  const std::vector<Word> basis = spanning_tree_basis(gamma).words;
  const std::size_t r = alphabet.size();
  if (basis.size() > r) {
    return OracleVerdict::no;
  }
  const std::size_t d = r - basis.size();
  if (d == 0) {
    return to_verdict(is_whole_bouquet(gamma));
  }

  std::size_t m = 1;
  for (const Word& b : basis) {
    m = std::max(m, b.size());
  }
  if (total_length(basis) + d * m > budget.max_total_length) {
    return OracleVerdict::inconclusive;
  }
  // The word list itself must fit comfortably inside the tuple budget.
  if (reduced_word_count(r, m, 4 * budget.max_candidates) > 4 * budget.max_candidates) {
    return OracleVerdict::inconclusive;
  }

  // A tuple and its entrywise inverses generate the same subgroup, and a
  // tuple with a repeated entry has fewer than r distinct generators, so
  // strictly increasing tuples of inversion representatives suffice.
  std::vector<Word> candidates;
  for (Word& w : reduced_words_up_to(alphabet, m)) {
    if (w <= invert(w)) {
      candidates.push_back(std::move(w));
    }
  }
  if (candidates.size() < d) {
    return OracleVerdict::no;
  }

  const AutomatonBuilder start(gamma);
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) {
    pick[i] = i;
  }
  std::size_t tried = 0;
  while (true) {
    if (++tried > budget.max_candidates) {
      return OracleVerdict::inconclusive;
    }
    AutomatonBuilder b = start;
    for (std::size_t i : pick) {
      b.expand(b.base(), candidates[i], b.base());
    }
    if (is_whole_bouquet(reduce_automaton(b))) {
      return OracleVerdict::yes;
    }
    // Next combination in lexicographic order.
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == candidates.size() - d + i - 1) {
      --i;
    }
    if (i == 0) {
      return OracleVerdict::no;
    }
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) {
      pick[j] = pick[j - 1] + 1;
    }
  }
}

OracleVerdict unpruned_istep_search(std::span<const Word> generators, Alphabet alphabet,
                                    OracleBudget budget) {
  budget.validate();
  const InverseAutomaton gamma = stallings_graph(generators, alphabet);
  const std::size_t letters = gamma.letters_used().size();
  const std::size_t rank_h = rank(gamma);
  if (rank_h > letters) {
    return OracleVerdict::no;
  }
  UnprunedSearch search(letters - rank_h, budget.max_candidates);
  try {
    return to_verdict(search.visit(gamma, 0));
  } catch (const BudgetExceeded&) {
    return OracleVerdict::inconclusive;
  }
}

}  // namespace stallings
