#include "stallings/freefactor.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

Word witness_from_prefixes(std::span<const Word> prefixes, State p, State q) {
  return multiply(prefixes[q], invert(prefixes[p]));
}

void check_pair(const InverseAutomaton& a, State p, State q) {
  if (p >= a.state_count() || q >= a.state_count()) {
    throw InvalidArgument("i-step state out of range");
  }
  if (p == q) {
    throw InvalidArgument("i-step needs two distinct states");
  }
}

// Depth-first search over sequences of rank-incrementing i-steps.
class IStepSearch {
 public:
  using Goal = std::function<bool(const InverseAutomaton&, std::size_t depth)>;
  using Admissible = std::function<bool(const Word&)>;

  IStepSearch(std::size_t depth_limit, SearchOptions options, Goal goal, Admissible admissible)
      : limit_(depth_limit),
        options_(options),
        goal_(std::move(goal)),
        admissible_(std::move(admissible)) {
    stats_.depth = depth_limit;
  }

  bool run(const InverseAutomaton& root) { return visit(root, 0); }

  [[nodiscard]] const SearchStats& stats() const noexcept { return stats_; }
  [[nodiscard]] const std::vector<IStep>& path() const noexcept { return path_; }
  [[nodiscard]] const std::optional<InverseAutomaton>& last() const noexcept { return last_; }

 private:
  bool visit(const InverseAutomaton& a, std::size_t depth) {
    if (goal_(a, depth)) {
      last_ = a;
      return true;
    }
    if (depth == limit_) {
      return false;
    }
    // Nodes are only recorded after failing, so a repeat is a known dead end.
    if (!failed_.insert(canonical_form(a).digest).second) {
      return false;
    }

    const std::size_t r = rank(a);
    const auto prefixes = spanning_tree_basis(a).prefixes;
    std::vector<IStepChild> children;
    std::unordered_set<std::string> seen;
    for (State p = 0; p < a.state_count(); ++p) {
      for (State q = p + 1; q < a.state_count(); ++q) {
        Word w = witness_from_prefixes(prefixes, p, q);
        if (admissible_ && !admissible_(w)) {
          continue;
        }
        InverseAutomaton b = apply_istep(a, p, q);
        ++stats_.nodes_explored;
        if (rank(b) != r + 1) {
          if (options_.prune) {
            return false;
          }
          continue;
        }
        if (seen.insert(canonical_form(b).digest).second) {
          children.push_back({IStep{p, q, std::move(w)}, std::move(b)});
        }
      }
    }

    for (IStepChild& child : children) {
      path_.push_back(std::move(child.step));
      if (visit(child.automaton, depth + 1)) {
        return true;
      }
      path_.pop_back();
    }
    return false;
  }

  std::size_t limit_;
  SearchOptions options_;
  Goal goal_;
  Admissible admissible_;
  SearchStats stats_;
  std::vector<IStep> path_;
  std::optional<InverseAutomaton> last_;
  std::unordered_set<std::string> failed_;
};

struct EmbeddingSearchResult {
  bool found = false;
  SearchWitness witness;
  std::optional<InverseAutomaton> graphical_factor;
  std::vector<State> embedding;
  SearchStats stats;
};

EmbeddingSearchResult embedding_search(const InverseAutomaton& gamma_h,
                                       const InverseAutomaton& gamma_k, SearchOptions options) {
  EmbeddingSearchResult out;
  const std::size_t rank_h = rank(gamma_h);
  const std::size_t rank_k = rank(gamma_k);
  if (rank_h > rank_k) {
    return out;
  }
  std::vector<State> map;
  IStepSearch search(
      rank_k - rank_h, options,
      [&](const InverseAutomaton& a, std::size_t) {
        auto m = embeds(a, gamma_k);
        if (m) {
          map = std::move(*m);
          return true;
        }
        return false;
      },
      [&](const Word& w) { return member(gamma_k, w); });
  out.found = search.run(gamma_h);
  out.stats = search.stats();
  if (out.found) {
    out.witness.steps = search.path();
    out.witness.final_digest = canonical_form(*search.last()).digest;
    out.graphical_factor = search.last();
    out.embedding = std::move(map);
  }
  return out;
}

// Complement of a graphical free factor L of K: extend a spanning tree of
// the image of Γ(L) to one of Γ(K) and take b_e for the remaining edges.
std::vector<Word> graphical_complement(const InverseAutomaton& l, std::span<const State> map,
                                       const InverseAutomaton& k) {
  const Alphabet alphabet = k.alphabet();
  const std::size_t r = alphabet.size();
  const std::size_t symbols = alphabet.symbol_count();
  const std::size_t n = k.state_count();
  const auto tb_l = spanning_tree_basis(l);

  std::vector<bool> covered(n * r, false);  // image of an edge of Γ(L)
  std::vector<bool> in_tree(n * r, false);
  for (const Edge& e : l.edges()) {
    covered[map[e.source] * r + e.letter.generator() - 1] = true;
  }
  for (const Edge& e : tb_l.tree_edges) {
    in_tree[map[e.source] * r + e.letter.generator() - 1] = true;
  }

  // Multi-source BFS where image vertices start at their tree depth in L.
  std::vector<std::optional<Word>> prefix(n);
  std::vector<std::vector<State>> buckets;
  for (State s = 0; s < l.state_count(); ++s) {
    const Word& u = tb_l.prefixes[s];
    prefix[map[s]] = u;
    if (buckets.size() <= u.size()) {
      buckets.resize(u.size() + 1);
    }
    buckets[u.size()].push_back(map[s]);
  }
  for (std::size_t level = 0; level < buckets.size(); ++level) {
    for (std::size_t i = 0; i < buckets[level].size(); ++i) {
      State s = buckets[level][i];
      for (std::size_t slot = 0; slot < symbols; ++slot) {
        State t = k.target_slot(s, slot);
        if (t == kNoState || prefix[t]) {
          continue;
        }
        Letter x = Letter::from_slot(slot);
        Word u = *prefix[s];
        u.push_back(x);
        prefix[t] = std::move(u);
        Edge e = x.positive() ? Edge{s, x, t} : Edge{t, x.inverse(), s};
        in_tree[e.source * r + e.letter.generator() - 1] = true;
        if (buckets.size() <= level + 1) {
          buckets.resize(level + 2);
        }
        buckets[level + 1].push_back(t);
      }
    }
  }

  std::vector<Word> out;
  for (std::size_t g = 1; g <= r; ++g) {
    Letter x(static_cast<int>(g));
    for (State s = 0; s < n; ++s) {
      State t = k.target(s, x);
      std::size_t key = s * r + g - 1;
      if (t == kNoState || covered[key] || in_tree[key]) {
        continue;
      }
      Word w = *prefix[s];
      w.push_back(x);
      out.push_back(multiply(w, invert(*prefix[t])));
    }
  }
  return out;
}

// Image of a word over the basis alphabet under letter i+1 -> basis[i].
Word substitute(const Word& w, std::span<const Word> basis, Alphabet target) {
  Word out(target);
  for (Letter x : w.letters()) {
    const Word& image = basis[x.generator() - 1];
    out = multiply(out, x.positive() ? image : invert(image));
  }
  return out;
}

bool contains_all(const InverseAutomaton& k, std::span<const Word> words) {
  return std::all_of(words.begin(), words.end(), [&](const Word& w) { return member(k, w); });
}

}  // namespace

Word istep_witness(const InverseAutomaton& a, State p, State q) {
  check_pair(a, p, q);
  return witness_from_prefixes(spanning_tree_basis(a).prefixes, p, q);
}

InverseAutomaton apply_istep(const InverseAutomaton& a, State p, State q) {
  check_pair(a, p, q);
  AutomatonBuilder b(a);
  b.identify(p, q);
  return reduce_automaton(b);
}

std::vector<IStepChild> rank_incrementing_children(const InverseAutomaton& a) {
  const std::size_t r = rank(a);
  const auto prefixes = spanning_tree_basis(a).prefixes;
  std::vector<IStepChild> out;
  std::unordered_set<std::string> seen;
  for (State p = 0; p < a.state_count(); ++p) {
    for (State q = p + 1; q < a.state_count(); ++q) {
      InverseAutomaton b = apply_istep(a, p, q);
      if (rank(b) == r + 1 && seen.insert(canonical_form(b).digest).second) {
        out.push_back({IStep{p, q, witness_from_prefixes(prefixes, p, q)}, std::move(b)});
      }
    }
  }
  return out;
}

FFVerdict is_free_factor_of_free(const InverseAutomaton& gamma, SearchOptions options) {
  FFVerdict verdict;
  const auto letters = gamma.letters_used();
  const std::size_t rank_h = rank(gamma);
  if (rank_h > letters.size()) {
    return verdict;
  }
  const std::size_t d = letters.size() - rank_h;
  IStepSearch search(
      d, options,
      [d](const InverseAutomaton& a, std::size_t depth) {
        return depth == d && a.state_count() == 1;
      },
      {});
  verdict.is_free_factor = search.run(gamma);
  verdict.stats = search.stats();
  if (!verdict.is_free_factor) {
    return verdict;
  }

  SearchWitness witness{search.path(), canonical_form(*search.last()).digest};
  std::vector<Word> complement;
  for (const IStep& step : witness.steps) {
    complement.push_back(step.witness);
  }
  const Alphabet alphabet = gamma.alphabet();
  for (std::size_t g = 1; g <= alphabet.size(); ++g) {
    Letter x(static_cast<int>(g));
    if (std::find(letters.begin(), letters.end(), x) == letters.end()) {
      complement.push_back(Word(alphabet, {x.index()}));
    }
  }
  verdict.witness = std::move(witness);
  verdict.complement = std::move(complement);
  return verdict;
}

FFVerdict is_free_factor_of_free(std::span<const Word> generators, Alphabet alphabet,
                                 SearchOptions options) {
  return is_free_factor_of_free(stallings_graph(generators, alphabet), options);
}

Word rewrite_in_basis(const InverseAutomaton& k, const SpanningTreeBasis& tb, const Word& w) {
  if (w.alphabet() != k.alphabet()) {
    throw AlphabetError("word and automaton over different alphabets");
  }
  const Word reduced = reduce(w);
  const Alphabet basis_alphabet(std::max<std::size_t>(tb.words.size(), 1));
  Word out(basis_alphabet);
  State s = k.base();
  for (Letter x : reduced.letters()) {
    State t = k.target(s, x);
    if (t == kNoState) {
      throw NotAMember("word " + to_string(w) + " is not in the subgroup");
    }
    std::optional<std::size_t> index =
        x.positive() ? tb.basis_index(s, x) : tb.basis_index(t, x.inverse());
    if (index) {
      int letter = static_cast<int>(*index + 1);
      out.push_back(Letter(x.positive() ? letter : -letter));
    }
    s = t;
  }
  if (s != k.base()) {
    throw NotAMember("word " + to_string(w) + " is not in the subgroup");
  }
  return reduce(out);
}

FFVerdict is_free_factor_of(std::span<const Word> h_gens, std::span<const Word> k_gens,
                            Alphabet alphabet, SearchOptions options) {
  const InverseAutomaton gamma_k = stallings_graph(k_gens, alphabet);
  FFVerdict verdict;
  if (!contains_all(gamma_k, h_gens)) {
    verdict.contained = false;
    return verdict;
  }
  const SpanningTreeBasis tb = spanning_tree_basis(gamma_k);
  if (tb.words.empty()) {
    // K is trivial, hence so is H.
    verdict.is_free_factor = true;
    verdict.witness = SearchWitness{{}, {}};
    verdict.complement = std::vector<Word>{};
    return verdict;
  }
  const Alphabet basis_alphabet(tb.words.size());
  std::vector<Word> rewritten;
  rewritten.reserve(h_gens.size());
  for (const Word& h : h_gens) {
    rewritten.push_back(rewrite_in_basis(gamma_k, tb, h));
  }
  verdict = is_free_factor_of_free(rewritten, basis_alphabet, options);
  if (verdict.complement) {
    for (Word& w : *verdict.complement) {
      w = substitute(w, tb.words, alphabet);
    }
  }
  return verdict;
}

std::optional<std::vector<State>> embeds(const InverseAutomaton& l, const InverseAutomaton& k) {
  if (l.alphabet() != k.alphabet()) {
    throw AlphabetError("embedding between automata over different alphabets");
  }
  const std::size_t symbols = l.alphabet().symbol_count();
  std::vector<State> map(l.state_count(), kNoState);
  std::vector<bool> used(k.state_count(), false);
  std::vector<State> queue{l.base()};
  map[l.base()] = k.base();
  used[k.base()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    State s = queue[head];
    for (std::size_t slot = 0; slot < symbols; ++slot) {
      State t = l.target_slot(s, slot);
      if (t == kNoState) {
        continue;
      }
      State image = k.target_slot(map[s], slot);
      if (image == kNoState) {
        return std::nullopt;
      }
      if (map[t] == kNoState) {
        if (used[image]) {
          return std::nullopt;
        }
        map[t] = image;
        used[image] = true;
        queue.push_back(t);
      } else if (map[t] != image) {
        return std::nullopt;
      }
    }
  }
  return map;
}

FFVerdict is_free_factor_via_embedding(std::span<const Word> h_gens,
                                       std::span<const Word> k_gens, Alphabet alphabet,
                                       SearchOptions options) {
  const InverseAutomaton gamma_k = stallings_graph(k_gens, alphabet);
  FFVerdict verdict;
  if (!contains_all(gamma_k, h_gens)) {
    verdict.contained = false;
    return verdict;
  }
  const InverseAutomaton gamma_h = stallings_graph(h_gens, alphabet);
  EmbeddingSearchResult result = embedding_search(gamma_h, gamma_k, options);
  verdict.stats = result.stats;
  verdict.is_free_factor = result.found;
  if (result.found) {
    std::vector<Word> complement;
    for (const IStep& step : result.witness.steps) {
      complement.push_back(step.witness);
    }
    for (Word& w : graphical_complement(*result.graphical_factor, result.embedding, gamma_k)) {
      complement.push_back(std::move(w));
    }
    verdict.witness = std::move(result.witness);
    verdict.complement = std::move(complement);
  }
  return verdict;
}

std::vector<Word> complement_in_free(std::span<const Word> h_gens, Alphabet alphabet) {
  FFVerdict verdict = is_free_factor_of_free(h_gens, alphabet);
  if (!verdict.is_free_factor) {
    throw NotAFreeFactor("H is not a free factor of F(A)");
  }
  return std::move(*verdict.complement);
}

SubgroupComplement complement_in_subgroup(std::span<const Word> h_gens,
                                          std::span<const Word> k_gens, Alphabet alphabet) {
  const InverseAutomaton gamma_k = stallings_graph(k_gens, alphabet);
  if (!contains_all(gamma_k, h_gens)) {
    throw NotContained("H is not contained in K");
  }
  const InverseAutomaton gamma_h = stallings_graph(h_gens, alphabet);
  EmbeddingSearchResult result = embedding_search(gamma_h, gamma_k, SearchOptions{});
  if (!result.found) {
    throw NotAFreeFactor("H is not a free factor of K");
  }
  SubgroupComplement out;
  for (const IStep& step : result.witness.steps) {
    out.words.push_back(step.witness);
  }
  out.from_isteps = out.words.size();
  for (Word& w : graphical_complement(*result.graphical_factor, result.embedding, gamma_k)) {
    out.words.push_back(std::move(w));
  }
  out.witness = std::move(result.witness);
  out.stats = result.stats;
  return out;
}

std::optional<InverseAutomaton> replay(const InverseAutomaton& start,
                                       const SearchWitness& witness) {
  InverseAutomaton a = start;
  for (const IStep& step : witness.steps) {
    if (step.p >= step.q || step.q >= a.state_count()) {
      return std::nullopt;
    }
    if (istep_witness(a, step.p, step.q) != step.witness) {
      return std::nullopt;
    }
    InverseAutomaton b = apply_istep(a, step.p, step.q);
    if (rank(b) != rank(a) + 1) {
      return std::nullopt;
    }
    a = std::move(b);
  }
  if (!witness.final_digest.empty() && canonical_form(a).digest != witness.final_digest) {
    return std::nullopt;
  }
  return a;
}

}  // namespace stallings
